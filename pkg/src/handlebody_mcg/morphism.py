"""Free-group endomorphisms and automorphisms carrying a certified inverse."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .words import (
    Alphabet,
    FreeWord,
    WordError,
    conjugate,
    format_word,
    invert,
    multiply,
    parse_word,
    solve_conjugator,
    _free_reduce,
)


@dataclass(frozen=True)
class Morphism:
    """Homomorphism ``F(domain) -> F(codomain)`` given by the images of the basis."""

    domain: Alphabet
    codomain: Alphabet
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.rank:
            raise WordError(
                f"{len(images)} images supplied for a rank-{self.domain.rank} domain"
            )
        for w in images:
            if w.alphabet != self.codomain:
                raise WordError("image word is not over the codomain alphabet")

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Morphism":
        return cls(alphabet, alphabet, tuple(alphabet.gens()))

    @classmethod
    def from_strings(cls, domain: Alphabet, images: dict, codomain: Optional[Alphabet] = None):
        """Images given as ``{label: text}``; unspecified labels map to themselves."""
        codomain = codomain or domain
        out = []
        for lab in domain.labels:
            if lab in images:
                out.append(parse_word(codomain, images[lab]))
            else:
                out.append(codomain.gen(lab))
        unknown = set(images) - set(domain.labels)
        if unknown:
            raise WordError(f"images given for unknown symbols {sorted(unknown)}")
        return cls(domain, codomain, tuple(out))

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply(self, w)

    def image(self, label: str) -> FreeWord:
        return self.images[self.domain.index(label)]

    def is_identity(self) -> bool:
        return self.domain == self.codomain and all(
            img.raw == (i + 1,) for i, img in enumerate(self.images)
        )

    def to_dict(self) -> dict:
        return {
            "domain": list(self.domain.labels),
            "codomain": list(self.codomain.labels),
            "images": {
                lab: format_word(img) for lab, img in zip(self.domain.labels, self.images)
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Morphism":
        dom = Alphabet(tuple(data["domain"]))
        cod = Alphabet(tuple(data.get("codomain", data["domain"])))
        return cls.from_strings(dom, data["images"], cod)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def apply(m: Morphism, w: FreeWord) -> FreeWord:
    if w.alphabet != m.domain:
        raise WordError(f"word over {w.alphabet} cannot be fed to a morphism on {m.domain}")
    letters = []
    images = m.images
    for x in w.raw:
        img = images[abs(x) - 1].raw
        if x > 0:
            letters.extend(img)
        else:
            letters.extend(-y for y in reversed(img))
    return FreeWord(m.codomain, _free_reduce(letters))


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f ∘ g``: apply ``g`` first."""
    if g.codomain != f.domain:
        raise WordError("cannot compose: codomain of g differs from domain of f")
    return Morphism(g.domain, f.codomain, tuple(apply(f, img) for img in g.images))


def abelianization_matrix(m: Morphism) -> np.ndarray:
    """Integer matrix whose column j is the exponent-sum vector of image j."""
    mat = np.zeros((m.codomain.rank, m.domain.rank), dtype=np.int64)
    for j, img in enumerate(m.images):
        mat[:, j] = img.exponent_sums()
    return mat


@dataclass(frozen=True)
class Automorphism:
    """An automorphism given with its inverse; the pair is checked on creation."""

    forward: Morphism
    backward: Morphism

    def __post_init__(self):
        f, b = self.forward, self.backward
        if f.domain != f.codomain or b.domain != f.domain or b.codomain != f.domain:
            raise WordError("automorphism tables must be self-maps of one alphabet")
        if not compose(f, b).is_identity() or not compose(b, f).is_identity():
            raise WordError("backward table is not inverse to forward table")

    @classmethod
    def _trusted(cls, forward: Morphism, backward: Morphism) -> "Automorphism":
        # composites and inverses of certified pairs are certified by construction;
        # rechecking costs |forward| * |backward| letters, which explodes on long words
        obj = object.__new__(cls)
        object.__setattr__(obj, "forward", forward)
        object.__setattr__(obj, "backward", backward)
        return obj

    @property
    def alphabet(self) -> Alphabet:
        return self.forward.domain

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Automorphism":
        m = Morphism.identity(alphabet)
        return cls._trusted(m, m)

    @classmethod
    def inner(cls, c: FreeWord) -> "Automorphism":
        """Conjugation ``x -> c x c^-1``."""
        a = c.alphabet
        fwd = Morphism(a, a, tuple(conjugate(x, c) for x in a.gens()))
        bwd = Morphism(a, a, tuple(conjugate(x, invert(c)) for x in a.gens()))
        return cls(fwd, bwd)

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply(self.forward, w)

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        return compose_auto(self, other)

    def inverse(self) -> "Automorphism":
        return invert_auto(self)

    def is_identity(self) -> bool:
        return self.forward.is_identity()

    def total_length(self) -> int:
        return sum(len(w) for w in self.forward.images)

    def to_dict(self) -> dict:
        d = self.forward.to_dict()
        return {
            "alphabet": d["domain"],
            "forward": d["images"],
            "backward": self.backward.to_dict()["images"],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Automorphism":
        a = Alphabet(tuple(data["alphabet"]))
        return cls(
            Morphism.from_strings(a, data["forward"]),
            Morphism.from_strings(a, data["backward"]),
        )


def compose_auto(f: Automorphism, g: Automorphism) -> Automorphism:
    """``f ∘ g`` (g acts first)."""
    if f.alphabet != g.alphabet:
        raise WordError("cannot compose automorphisms of different alphabets")
    return Automorphism._trusted(compose(f.forward, g.forward), compose(g.backward, f.backward))


def invert_auto(f: Automorphism) -> Automorphism:
    return Automorphism._trusted(f.backward, f.forward)


def power(f: Automorphism, n: int) -> Automorphism:
    base = f if n >= 0 else invert_auto(f)
    out = Automorphism.identity(f.alphabet)
    for _ in range(abs(n)):
        out = compose_auto(base, out)
    return out


def compose_many(autos: Sequence[Automorphism], alphabet: Alphabet) -> Automorphism:
    out = Automorphism.identity(alphabet)
    for a in autos:
        out = compose_auto(out, a)
    return out


def inner_equal(f: Automorphism, g: Automorphism) -> Optional[FreeWord]:
    """Return ``u`` with ``f(x) = u g(x) u^-1`` for every basis letter, else ``None``.

    With ``h = f ∘ g^-1`` the condition is ``h(x) = u x u^-1``.  The first
    basis letter pins ``u`` down to ``u0 x1^k``; since centralizers of basis
    letters are cyclic, ``k`` is then read off from the second letter, searching
    ``|k| <= len(v2) + len(x2) + 2 len(u0)``.
    """
    if f.alphabet != g.alphabet:
        raise WordError("alphabet mismatch")
    a = f.alphabet
    h = compose(f.forward, g.backward)
    gens = a.gens()
    u0 = solve_conjugator(gens[0], h.images[0])
    if u0 is None:
        return None
    if a.rank == 1:
        return u0
    x1, x2 = gens[0], gens[1]
    v2 = h.images[1]
    # need x1^k x2 x1^-k = u0^-1 v2 u0
    target = conjugate(v2, invert(u0))
    bound = len(v2) + len(x2) + 2 * len(u0)
    found = None
    for k in sorted(range(-bound, bound + 1), key=abs):
        if conjugate(x2, x1 ** k) == target:
            found = multiply(u0, x1 ** k)
            break
    if found is None:
        return None
    for x, img in zip(gens, h.images):
        if conjugate(x, found) != img:
            return None
    return found


def is_inner(f: Automorphism) -> Optional[FreeWord]:
    return inner_equal(f, Automorphism.identity(f.alphabet))
