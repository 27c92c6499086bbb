"""Freely reduced words over a finite ranked alphabet.

Letters are stored as signed integers: generator ``i`` (0-based) is ``i + 1``
and its inverse is ``-(i + 1)``.  Labels only appear when parsing or printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class WordError(ValueError):
    """Raised for malformed words, alphabet mismatches and bad indices."""


_LABEL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


@dataclass(frozen=True)
class Alphabet:
    labels: tuple

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise WordError("an alphabet needs at least one symbol")
        if len(set(labels)) != len(labels):
            raise WordError(f"duplicate labels in alphabet {labels}")
        for lab in labels:
            if not _LABEL_RE.match(lab):
                raise WordError(f"invalid label {lab!r}")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise WordError(f"unknown symbol {label!r}") from None

    def gen(self, label_or_index) -> "FreeWord":
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        if not 0 <= i < self.rank:
            raise WordError(f"symbol index {i} out of range for rank {self.rank}")
        return FreeWord(self, (i + 1,))

    def gens(self) -> list:
        return [FreeWord(self, (i + 1,)) for i in range(self.rank)]

    def identity(self) -> "FreeWord":
        return FreeWord(self, ())

    def word(self, pairs: Iterable) -> "FreeWord":
        """Build a reduced word from ``(index, sign)`` pairs."""
        return reduce(self, pairs)

    def parse(self, text: str) -> "FreeWord":
        return parse_word(self, text)

    def __repr__(self):
        return f"Alphabet({', '.join(self.labels)})"


def _free_reduce(letters: Iterable[int]) -> tuple:
    out: list = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """An immutable, freely reduced element of the free group on ``alphabet``.

    Construct through :func:`reduce`, :meth:`Alphabet.word` or
    :meth:`Alphabet.parse`; the raw constructor assumes reduced input.
    """

    alphabet: Alphabet
    raw: tuple = field(default=())

    # -- views -------------------------------------------------------------
    @property
    def letters(self) -> list:
        """The word as ``(symbol_index, sign)`` pairs."""
        return [(abs(x) - 1, 1 if x > 0 else -1) for x in self.raw]

    def __len__(self):
        return len(self.raw)

    def __bool__(self):
        return bool(self.raw)

    def is_identity(self) -> bool:
        return not self.raw

    def exponent_sums(self) -> list:
        v = [0] * self.alphabet.rank
        for x in self.raw:
            v[abs(x) - 1] += 1 if x > 0 else -1
        return v

    def occurs(self, index: int) -> bool:
        return (index + 1) in self.raw or -(index + 1) in self.raw

    # -- arithmetic --------------------------------------------------------
    def _check(self, other: "FreeWord"):
        if self.alphabet != other.alphabet:
            raise WordError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else invert(self)
        return FreeWord(self.alphabet, _free_reduce(base.raw * abs(n)))

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"FreeWord({format_word(self)!r})"


def reduce(alphabet: Alphabet, raw: Iterable) -> FreeWord:
    """Freely reduce a sequence of ``(index, sign)`` pairs or signed ints."""
    letters = []
    for item in raw:
        if isinstance(item, tuple):
            idx, sign = item
            if sign not in (1, -1):
                raise WordError(f"sign must be +1 or -1, got {sign}")
            x = (idx + 1) * sign
        else:
            x = item
            idx = abs(x) - 1
        if x == 0 or not 0 <= idx < alphabet.rank:
            raise WordError(f"symbol index {idx} out of range for rank {alphabet.rank}")
        letters.append(x)
    return FreeWord(alphabet, _free_reduce(letters))


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    u._check(v)
    a, b = u.raw, v.raw
    k = 0
    n = min(len(a), len(b))
    while k < n and a[len(a) - 1 - k] == -b[k]:
        k += 1
    return FreeWord(u.alphabet, a[: len(a) - k] + b[k:])


def product(words: Sequence[FreeWord], alphabet: Optional[Alphabet] = None) -> FreeWord:
    if not words:
        if alphabet is None:
            raise WordError("empty product needs an alphabet")
        return alphabet.identity()
    out = words[0]
    for w in words[1:]:
        out = multiply(out, w)
    return out


def invert(w: FreeWord) -> FreeWord:
    return FreeWord(w.alphabet, tuple(-x for x in reversed(w.raw)))


def conjugate(w: FreeWord, c: FreeWord) -> FreeWord:
    """Return ``c * w * c^-1``."""
    return multiply(multiply(c, w), invert(c))


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return product([u, v, invert(u), invert(v)])


def cyclic_reduce(w: FreeWord):
    """Split ``w`` as ``c * core * c^-1`` with ``core`` cyclically reduced."""
    r = w.raw
    i, j = 0, len(r) - 1
    while i < j and r[i] == -r[j]:
        i += 1
        j -= 1
    core = FreeWord(w.alphabet, r[i : j + 1])
    return core, FreeWord(w.alphabet, r[:i])


def _rotation_offset(core_u: tuple, core_v: tuple) -> Optional[int]:
    if len(core_u) != len(core_v):
        return None
    if not core_u:
        return 0
    n = len(core_u)
    doubled = core_u + core_u
    for k in range(n):
        if doubled[k : k + n] == core_v:
            return k
    return None


def solve_conjugator(u: FreeWord, v: FreeWord) -> Optional[FreeWord]:
    """Find ``c`` with ``c u c^-1 = v``, or ``None`` when u and v are not conjugate."""
    u._check(v)
    core_u, cu = cyclic_reduce(u)
    core_v, cv = cyclic_reduce(v)
    k = _rotation_offset(core_u.raw, core_v.raw)
    if k is None:
        return None
    # core_u = p q, core_v = q p = p^-1 core_u p
    p = FreeWord(u.alphabet, core_u.raw[:k])
    return product([cv, invert(p), invert(cu)])


def are_conjugate(u: FreeWord, v: FreeWord) -> bool:
    return solve_conjugator(u, v) is not None


# -- text form ------------------------------------------------------------

def parse_word(alphabet: Alphabet, text: str) -> FreeWord:
    """Parse ``"a1 b1^-1 * z"``; ``1``, ``e`` (if not a label) or blank is the identity."""
    s = text.strip()
    if s in ("", "1") or (s in ("e", "id") and s not in alphabet.labels):
        return alphabet.identity()
    letters = []
    for chunk in s.replace("*", " ").split():
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_']*)(?:\^(-?\d+))?", chunk)
        if not m:
            raise WordError(f"cannot parse word token {chunk!r}")
        idx = alphabet.index(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([(idx + 1) * (1 if exp > 0 else -1)] * abs(exp))
    return FreeWord(alphabet, _free_reduce(letters))


def format_word(w: FreeWord) -> str:
    """Print one token per letter, inverses as ``x^-1``; the identity prints as ``1``."""
    if not w.raw:
        return "1"
    labels = w.alphabet.labels
    return " ".join(labels[x - 1] if x > 0 else f"{labels[-x - 1]}^-1" for x in w.raw)
