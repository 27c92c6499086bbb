"""Planar model used to derive generator tables.

Cutting the g handles off the surface leaves a sphere with 2g holes
``B_1, B'_1, ..., B_g, B'_g`` (the handle feet) and the punctures ``P1, P2``.
Seen from the base point the boundary loops come in the order

    x_1 = B_1, x_2 = B'_1, ..., x_{2g-1} = B_g, x_{2g} = B'_g, x_{2g+1} = P1, x_{2g+2} = P2

with ``x_1 ... x_{2g+2} = 1``.  In the surface basis

    x_{2i-1} = a_i b_i a_i^-1,   x_{2i} = b_i^-1,   x_{2g+1} = z,   x_{2g+2} = peripheral2.

A homeomorphism of the planar part that moves the holes rigidly is recorded
by where each base arc goes: arc_k -> W_k * arc_{target(k)} with W_k a word in
the x's.  When the feet of every handle land on the feet of one handle, in
the same order, the map extends over the handles and acts on the surface
group by

    b_i -> W'_i b_j W'_i^-1,   a_i -> W_i a_j W'_i^-1,   z -> W_z z W_z^-1.

Two kinds of elementary moves are provided: the half twist ``sigma`` that
exchanges two adjacent holes by translation, and the Dehn twist about a
curve enclosing a consecutive block (which also turns each enclosed hole
through a full rotation).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .morphism import Automorphism, Morphism, apply
from .surface import SurfaceModel
from .words import Alphabet, FreeWord, conjugate, invert, multiply, product


@lru_cache(maxsize=None)
def point_alphabet(genus: int) -> Alphabet:
    return Alphabet(tuple(f"x{k}" for k in range(1, 2 * genus + 3)))


def foot(i: int, primed: bool = False) -> int:
    """0-based position of the foot B_i (or B'_i)."""
    return 2 * (i - 1) + (1 if primed else 0)


def puncture(genus: int, k: int) -> int:
    return 2 * genus + (k - 1)


@dataclass(frozen=True)
class PlanarMap:
    """Action of a planar homeomorphism on the base arcs, with its inverse."""

    genus: int
    arcs: tuple  # (FreeWord over point_alphabet, target position) per hole
    inv_arcs: tuple

    @classmethod
    def identity(cls, genus: int) -> "PlanarMap":
        X = point_alphabet(genus)
        arcs = tuple((X.identity(), k) for k in range(X.rank))
        return cls(genus, arcs, arcs)

    @property
    def n(self) -> int:
        return len(self.arcs)

    def loop_morphism(self) -> Morphism:
        """Action on the free group of boundary loops."""
        return _loops(self.genus, self.arcs)

    def then(self, other: "PlanarMap") -> "PlanarMap":
        """Apply ``self`` first, then ``other``."""
        return PlanarMap(
            self.genus,
            _chain(self.arcs, other.arcs, other.genus),
            _chain(other.inv_arcs, self.inv_arcs, self.genus),
        )

    def inverse(self) -> "PlanarMap":
        return PlanarMap(self.genus, self.inv_arcs, self.arcs)

    def permutation(self) -> tuple:
        return tuple(t for _, t in self.arcs)


def _loops(genus: int, arcs) -> Morphism:
    X = point_alphabet(genus)
    gens = X.gens()
    return Morphism(X, X, tuple(conjugate(gens[t], w) for w, t in arcs))


def _chain(first, second, genus: int) -> tuple:
    m = _loops(genus, second)
    out = []
    for w, t in first:
        w2, t2 = second[t]
        out.append((multiply(apply(m, w), w2), t2))
    return tuple(out)


def half_twist(genus: int, k: int, sign: int = 1) -> PlanarMap:
    """Exchange the holes at positions k and k+1 (0-based) by a half twist.

    ``sign=+1``: ``x_k -> x_k x_{k+1} x_k^-1``, ``x_{k+1} -> x_k``.
    """
    X = point_alphabet(genus)
    gens = X.gens()
    arcs = [(X.identity(), j) for j in range(X.rank)]
    inv = list(arcs)
    pos = [(gens[k], k + 1), (X.identity(), k)]
    neg = [(X.identity(), k + 1), (invert(gens[k + 1]), k)]
    arcs[k], arcs[k + 1] = pos if sign > 0 else neg
    inv[k], inv[k + 1] = neg if sign > 0 else pos
    return PlanarMap(genus, tuple(arcs), tuple(inv))


def block_twist(genus: int, lo: int, hi: int, sign: int = 1) -> PlanarMap:
    """Dehn twist about the curve around positions lo..hi (inclusive)."""
    X = point_alphabet(genus)
    gens = X.gens()
    c = product(gens[lo : hi + 1])
    if sign < 0:
        c = invert(c)
    arcs = tuple((c if lo <= j <= hi else X.identity(), j) for j in range(X.rank))
    inv = tuple((invert(c) if lo <= j <= hi else X.identity(), j) for j in range(X.rank))
    return PlanarMap(genus, arcs, inv)


def braid(genus: int, word: Sequence[tuple]) -> PlanarMap:
    """Compose half twists ``[(k, sign), ...]`` left to right (first applied first)."""
    out = PlanarMap.identity(genus)
    for k, s in word:
        out = out.then(half_twist(genus, k, s))
    return out


def conjugated(inner: PlanarMap, mover: PlanarMap) -> PlanarMap:
    """``mover^-1 ∘ inner ∘ mover`` in map-composition order: mover, inner, mover back."""
    return mover.then(inner).then(mover.inverse())


def substitution(model: SurfaceModel) -> Morphism:
    """Boundary loops written in the surface basis."""
    X = point_alphabet(model.genus)
    imgs = []
    for i in range(1, model.genus + 1):
        imgs.append(conjugate(model.b(i), model.a(i)))
        imgs.append(invert(model.b(i)))
    imgs.append(model.z)
    imgs.append(model.peripheral2)
    return Morphism(X, model.alphabet, tuple(imgs))


class LiftError(ValueError):
    pass


def _lift_forward(model: SurfaceModel, p: PlanarMap) -> Morphism:
    S = substitution(model)
    g = model.genus
    imgs = []
    for i in range(1, g + 1):
        w, t = p.arcs[foot(i)]
        w2, t2 = p.arcs[foot(i, True)]
        if t % 2 != 0 or t2 != t + 1 or t >= 2 * g:
            raise LiftError(f"handle {i} feet are not carried to the feet of one handle")
        j = t // 2 + 1
        W, W2 = apply(S, w), apply(S, w2)
        imgs.append(product([W, model.a(j), invert(W2)]))
        imgs.append(conjugate(model.b(j), W2))
    for k in (1, 2):
        w, t = p.arcs[puncture(g, k)]
        if t != puncture(g, k):
            raise LiftError("punctures must be fixed")
    w, _ = p.arcs[puncture(g, 1)]
    imgs.append(conjugate(model.z, apply(S, w)))
    return Morphism(model.alphabet, model.alphabet, tuple(imgs))


def lift(model: SurfaceModel, p: PlanarMap) -> Automorphism:
    """Extend a planar map over the handles (feet moved rigidly)."""
    return Automorphism(_lift_forward(model, p), _lift_forward(model, p.inverse()))


def move_adjacent(genus: int, src: int, dst: int, sides: Sequence[int]) -> PlanarMap:
    """Carry the hole at ``src`` next to ``dst`` by successive half twists.

    ``sides[m]`` (+1 or -1) chooses which side the moving hole passes the
    m-th hole it crosses.  Returns the braid; the moving hole ends adjacent
    to ``dst`` on the side facing ``src``.
    """
    word = []
    if src < dst:
        steps = list(range(src, dst - 1))
        if len(sides) != len(steps):
            raise ValueError("one side choice per crossed hole")
        # moving right: the hole at k swaps with k+1
        for k, s in zip(steps, sides):
            word.append((k, s))
    else:
        steps = list(range(src - 1, dst, -1))
        if len(sides) != len(steps):
            raise ValueError("one side choice per crossed hole")
        for k, s in zip(steps, sides):
            word.append((k, s))
    return braid(genus, word)
