"""The genus-g surface with two punctures bounding the model handlebody.

Basis of pi_1: ``a1, b1, ..., ag, bg, z``.  ``b_i`` is the meridian of the
i-th handle, ``a_i`` its longitude, ``z`` a small loop around the first
puncture.  The loop around the second puncture is

    peripheral2 = ([a1, b1] ... [ag, bg] z)^-1

so that ``[a1,b1]...[ag,bg] z peripheral2 = 1`` is the surface relation.
The second puncture sits on the same rotation axis as the first, on the
opposite side of the knobs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional

from .morphism import Automorphism, Morphism, apply, compose
from .words import Alphabet, FreeWord, WordError, commutator, format_word, invert, product, solve_conjugator


class Mode(str, Enum):
    CLOSED = "closed"
    ARC = "arc"


class UncertifiedError(WordError):
    """The automorphism does not preserve the peripheral structure."""


@dataclass(frozen=True)
class SurfaceModel:
    genus: int
    alphabet: Alphabet = field(init=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError(f"genus must be a positive integer, got {self.genus!r}")
        labels = []
        for i in range(1, self.genus + 1):
            labels += [f"a{i}", f"b{i}"]
        labels.append("z")
        object.__setattr__(self, "alphabet", Alphabet(tuple(labels)))

    # -- basis ---------------------------------------------------------------
    def a(self, i: int) -> FreeWord:
        self._check_index(i)
        return self.alphabet.gen(2 * (i - 1))

    def b(self, i: int) -> FreeWord:
        self._check_index(i)
        return self.alphabet.gen(2 * (i - 1) + 1)

    @property
    def z(self) -> FreeWord:
        return self.alphabet.gen(2 * self.genus)

    def _check_index(self, i: int):
        if not 1 <= i <= self.genus:
            raise ValueError(f"handle index {i} out of range 1..{self.genus}")

    def delta(self, i: int) -> FreeWord:
        """Boundary of the i-th knob, ``[a_i, b_i]``."""
        return commutator(self.a(i), self.b(i))

    @property
    def peripheral1(self) -> FreeWord:
        return self.z

    @property
    def peripheral2(self) -> FreeWord:
        ds = [self.delta(i) for i in range(1, self.genus + 1)]
        return invert(product(ds + [self.z]))

    @property
    def meridians(self) -> list:
        return [self.b(i) for i in range(1, self.genus + 1)]

    def parse(self, text: str) -> FreeWord:
        return self.alphabet.parse(text)

    # -- quotient maps -------------------------------------------------------
    @property
    def handlebody_alphabet(self) -> Alphabet:
        return _quotient_alphabets(self.genus)[0]

    @property
    def arc_alphabet(self) -> Alphabet:
        return _quotient_alphabets(self.genus)[1]

    def handlebody_map(self) -> Morphism:
        return _quotient_maps(self.genus)[0]

    def arc_map(self) -> Morphism:
        return _quotient_maps(self.genus)[1]


@lru_cache(maxsize=None)
def _quotient_alphabets(genus: int):
    xs = tuple(f"x{i}" for i in range(1, genus + 1))
    return Alphabet(xs), Alphabet(xs + ("t",))


@lru_cache(maxsize=None)
def _quotient_maps(genus: int):
    model = SurfaceModel(genus)
    hb, arc = _quotient_alphabets(genus)
    closed_imgs, arc_imgs = [], []
    for i in range(1, genus + 1):
        closed_imgs += [hb.gen(i - 1), hb.identity()]
        arc_imgs += [arc.gen(i - 1), arc.identity()]
    closed_imgs.append(hb.identity())
    arc_imgs.append(arc.gen(genus))
    return (
        Morphism(model.alphabet, hb, tuple(closed_imgs)),
        Morphism(model.alphabet, arc, tuple(arc_imgs)),
    )


def quotient_to_handlebody(model: SurfaceModel, w: FreeWord) -> FreeWord:
    """Kill every meridian and the puncture loop: ``a_i -> x_i``, ``b_i, z -> 1``."""
    return apply(model.handlebody_map(), w)


def quotient_to_arc_complement(model: SurfaceModel, w: FreeWord) -> FreeWord:
    """pi_1 of the handlebody minus the arc: ``a_i -> x_i``, ``b_i -> 1``, ``z -> t``."""
    return apply(model.arc_map(), w)


def _quotient(model: SurfaceModel, mode) -> Morphism:
    return model.arc_map() if Mode(mode) is Mode.ARC else model.handlebody_map()


def in_meridian_kernel(model: SurfaceModel, w: FreeWord, mode="arc") -> bool:
    return apply(_quotient(model, mode), w).is_identity()


@dataclass
class CertificationReport:
    certified: bool
    peripheral1_conjugator: Optional[FreeWord]
    peripheral2_conjugator: Optional[FreeWord]

    def to_dict(self) -> dict:
        fmt = lambda w: None if w is None else format_word(w)
        return {
            "certified": self.certified,
            "peripheral1_conjugator": fmt(self.peripheral1_conjugator),
            "peripheral2_conjugator": fmt(self.peripheral2_conjugator),
        }


def certify_mapping_class(model: SurfaceModel, f: Automorphism) -> CertificationReport:
    """Check that ``f`` fixes both punctures: each peripheral word goes to a conjugate of itself."""
    if f.alphabet != model.alphabet:
        raise WordError("automorphism is not over the model alphabet")
    c1 = solve_conjugator(model.peripheral1, f(model.peripheral1))
    c2 = solve_conjugator(model.peripheral2, f(model.peripheral2))
    return CertificationReport(c1 is not None and c2 is not None, c1, c2)


@dataclass
class ExtensionReport:
    """Evidence that an automorphism preserves the meridian kernel.

    Acceptance is a necessary condition for extending over the handlebody
    (fixing the arc in ``arc`` mode); it is never reported as sufficient.
    """

    genus: int
    mode: str
    forward_in_kernel: list
    backward_in_kernel: list
    peripheral1_ok: bool
    peripheral2_ok: bool
    witnesses: dict

    @property
    def accepted(self) -> bool:
        return (
            all(self.forward_in_kernel)
            and all(self.backward_in_kernel)
            and self.peripheral1_ok
            and self.peripheral2_ok
        )

    @property
    def verdict(self) -> str:
        return "accepted" if self.accepted else "rejected"

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "mode": self.mode,
            "verdict": self.verdict,
            "claim": "necessary condition passed" if self.accepted else "necessary condition failed",
            "meridians": [
                {"index": i + 1, "forward_in_kernel": fw, "backward_in_kernel": bw}
                for i, (fw, bw) in enumerate(zip(self.forward_in_kernel, self.backward_in_kernel))
            ],
            "peripheral1_ok": self.peripheral1_ok,
            "peripheral2_ok": self.peripheral2_ok,
            "witnesses": self.witnesses,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def check_extension(model: SurfaceModel, f: Automorphism, mode="arc") -> ExtensionReport:
    """Decide whether ``f`` and ``f^-1`` send every meridian into the kernel.

    Because the kernel is the normal closure of the meridians and ``f`` is an
    automorphism, this is the same as ``f`` preserving the kernel.  In
    ``arc`` mode the input must be a certified mapping class.
    """
    mode = Mode(mode)
    q = _quotient(model, mode)
    witnesses: dict = {"failing_images": {}}
    if mode is Mode.ARC:
        cert = certify_mapping_class(model, f)
        if not cert.certified:
            raise UncertifiedError("automorphism does not fix the punctures")
        p1_ok, p2_ok = True, True
        witnesses.update(cert.to_dict())
        del witnesses["certified"]
    else:
        p1_ok = p2_ok = True
    fwd, bwd = [], []
    for i, b in enumerate(model.meridians, start=1):
        for table, bucket, tag in ((f.forward, fwd, "forward"), (f.backward, bwd, "backward")):
            img = apply(q, apply(table, b))
            bucket.append(img.is_identity())
            if not img.is_identity():
                witnesses["failing_images"][f"{tag}:b{i}"] = format_word(img)
    return ExtensionReport(model.genus, mode.value, fwd, bwd, p1_ok, p2_ok, witnesses)


def induced_quotient_map(model: SurfaceModel, f: Automorphism, mode="arc") -> Morphism:
    """The endomorphism of the quotient group induced by an accepted ``f``."""
    q = _quotient(model, mode)
    # quotient generators are the images of a_i (and of z in arc mode)
    target = q.codomain
    imgs = []
    for i in range(1, model.genus + 1):
        imgs.append(apply(q, f(model.a(i))))
    if Mode(mode) is Mode.ARC:
        imgs.append(apply(q, f(model.z)))
    return Morphism(target, target, tuple(imgs))
