"""Knot groups of the knots carried by (g,1)-decompositions.

Gluing two copies of the handlebody with the arc removed along ``psi``
gives the complement of a knot in a closed 3-manifold.  Its group is
presented on the surface basis by the meridians of both sides:

    < a_1, b_1, ..., a_g, b_g, z | b_1, ..., b_g, psi(b_1), ..., psi(b_g) >

With ``psi`` the identity this is the free group on ``a_1..a_g, z``, the
group of the trivial knot in the connected sum of g copies of S^1 x S^2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .morphism import Automorphism
from .surface import SurfaceModel, UncertifiedError, certify_mapping_class
from .words import Alphabet, FreeWord, WordError, _free_reduce, cyclic_reduce, format_word, invert, reduce


@dataclass(frozen=True)
class Presentation:
    generators: Alphabet
    relators: tuple

    def __post_init__(self):
        rels = []
        seen = set()
        for r in self.relators:
            if r.alphabet != self.generators:
                raise WordError("relator is not over the presentation alphabet")
            core, _ = cyclic_reduce(r)
            if core.is_identity() or core.raw in seen:
                continue
            seen.add(core.raw)
            rels.append(core)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def rank(self) -> int:
        return self.generators.rank

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators.labels),
            "relators": [format_word(r) for r in self.relators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def __str__(self):
        gens = ", ".join(self.generators.labels)
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def knot_group(model: SurfaceModel, psi: Automorphism) -> Presentation:
    if not certify_mapping_class(model, psi).certified:
        raise UncertifiedError("psi does not fix the punctures")
    rels = list(model.meridians) + [psi(b) for b in model.meridians]
    return Presentation(model.alphabet, tuple(rels))


# -- Tietze moves ----------------------------------------------------------------


def _drop_generator(p: Presentation, idx: int, value: FreeWord) -> Presentation:
    """Substitute ``x_idx := value`` (a word avoiding x_idx) and delete the generator."""
    old = p.generators
    labels = old.labels[:idx] + old.labels[idx + 1 :]
    if not labels:
        raise WordError("cannot delete the last generator")
    new = Alphabet(labels)

    def remap(letter: int):
        j = abs(letter) - 1
        return letter if j < idx else (letter - 1 if letter > 0 else letter + 1)

    v_new = [remap(x) for x in value.raw]
    rels = []
    for r in p.relators:
        out = []
        for x in r.raw:
            if abs(x) - 1 == idx:
                out.extend(v_new if x > 0 else [-y for y in reversed(v_new)])
            else:
                out.append(remap(x))
        rels.append(reduce(new, out))
    return Presentation(new, tuple(rels))


def _elimination(p: Presentation) -> Optional[Tuple[int, FreeWord]]:
    """First relator, in scan order, that solves for a generator."""
    # length-one relators first
    for r in p.relators:
        if len(r) == 1:
            return abs(r.raw[0]) - 1, p.generators.identity()
    for r in p.relators:
        counts: Dict[int, int] = {}
        for x in r.raw:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        for pos, x in enumerate(r.raw):
            if counts[abs(x)] != 1:
                continue
            # rotate so the letter leads: r ~ x w, hence x = w^-1
            rot = r.raw[pos:] + r.raw[:pos]
            w = FreeWord(p.generators, rot[1:])
            val = invert(w) if x > 0 else w
            return abs(x) - 1, val
    return None


def tietze_simplify(p: Presentation) -> Presentation:
    """Eliminate generators with the three deterministic moves until none applies.

    Empty and duplicate relators are dropped by :class:`Presentation` itself.
    """
    while p.relators:
        step = _elimination(p)
        if step is None:
            break
        idx, value = step
        if p.rank == 1:
            # an alphabet cannot be empty; a single generator is left as is
            break
        p = _drop_generator(p, idx, value)
    return p


# -- abelianization ----------------------------------------------------------------


def relation_matrix(p: Presentation) -> np.ndarray:
    m = np.zeros((len(p.relators), p.rank), dtype=object)
    for i, r in enumerate(p.relators):
        m[i, :] = r.exponent_sums()
    return m


def smith_diagonal(mat) -> List[int]:
    """Invariant factors of an integer matrix (exact, arbitrary precision)."""
    A = [[int(x) for x in row] for row in np.asarray(mat, dtype=object).tolist()]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = A[t][t]
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if not done:
                # move a smaller remainder into the pivot slot
                best = None
                for i in range(t + 1, rows):
                    if A[i][t] and (best is None or abs(A[i][t]) < abs(best[2])):
                        best = ("r", i, A[i][t])
                for j in range(t + 1, cols):
                    if A[t][j] and (best is None or abs(A[t][j]) < abs(best[2])):
                        best = ("c", j, A[t][j])
                kind, k, _ = best
                if kind == "r":
                    A[t], A[k] = A[k], A[t]
                else:
                    for row in A:
                        row[t], row[k] = row[k], row[t]
                continue
            # divisibility: fold any non-multiple of the pivot into row t
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                None,
            )
            if bad is not None:
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                done = False
        diag.append(abs(A[t][t]))
        t += 1
    return diag


@dataclass
class AbelianizationResult:
    relation_matrix: np.ndarray
    diagonal: list
    free_rank: int
    torsion: list

    def to_dict(self) -> dict:
        return {
            "relation_matrix": [[int(x) for x in row] for row in self.relation_matrix.tolist()],
            "diagonal": [int(d) for d in self.diagonal],
            "free_rank": self.free_rank,
            "torsion": [int(t) for t in self.torsion],
        }

    @property
    def is_free_abelian(self) -> bool:
        return not self.torsion


def abelianize(p: Presentation) -> AbelianizationResult:
    m = relation_matrix(p)
    diag = smith_diagonal(m) if m.size else []
    nonzero = [d for d in diag if d]
    free = p.rank - len(nonzero)
    # pad the diagonal with zeros up to the number of generators
    full = nonzero + [0] * free
    return AbelianizationResult(m, full, free, [d for d in nonzero if d > 1])


# -- Fox calculus ------------------------------------------------------------------

GroupRing = Dict[tuple, int]


def _add(acc: GroupRing, key: tuple, c: int):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def fox_derivative(w: FreeWord, x: int) -> GroupRing:
    """``d w / d x`` as ``{prefix.raw: coefficient}``, ``x`` a 0-based generator index."""
    out: GroupRing = {}
    prefix: list = []
    target = x + 1
    for letter in w.raw:
        if letter == target:
            _add(out, tuple(prefix), 1)
        elif letter == -target:
            # d(x^-1) = -x^-1, after the current prefix
            _add(out, _free_reduce(prefix + [letter]), -1)
        prefix = list(_free_reduce(prefix + [letter]))
    return out


def group_ring_multiply(u: GroupRing, v: GroupRing) -> GroupRing:
    out: GroupRing = {}
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            _add(out, _free_reduce(k1 + k2), c1 * c2)
    return out


def fundamental_identity_holds(w: FreeWord) -> bool:
    """Check ``sum_x (dw/dx)(x - 1) = w - 1`` exactly."""
    total: GroupRing = {}
    for i in range(w.alphabet.rank):
        d = fox_derivative(w, i)
        for k, c in group_ring_multiply(d, {(i + 1,): 1, (): -1}).items():
            _add(total, k, c)
    expect: GroupRing = {}
    _add(expect, w.raw, 1)
    _add(expect, (), -1)
    return total == expect


@dataclass
class LaurentMatrix:
    """Matrix of Laurent polynomials, each ``{exponent tuple: coefficient}``."""

    variables: tuple
    rows: int
    cols: int
    entries: list

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "shape": [self.rows, self.cols],
            "entries": [
                [[{"exponents": list(e), "coefficient": c} for e, c in sorted(poly.items())] for poly in row]
                for row in self.entries
            ],
        }


class TorsionError(WordError):
    """The abelianization has torsion, so the multivariable map is undefined."""


def alexander_matrix(p: Presentation) -> LaurentMatrix:
    """Fox Jacobian pushed to the free abelianization ``Z^r``.

    Requires a torsion-free first homology.
    """
    ab = abelianize(p)
    if ab.torsion:
        raise TorsionError(f"first homology has torsion {ab.torsion}")
    proj = _free_projection(p, ab.free_rank)
    r = ab.free_rank
    entries = []
    for rel in p.relators:
        row = []
        for j in range(p.rank):
            poly: Dict[tuple, int] = {}
            for key, c in fox_derivative(rel, j).items():
                e = np.zeros(r, dtype=object)
                for x in key:
                    e = e + (proj[abs(x) - 1] if x > 0 else -proj[abs(x) - 1])
                _add(poly, tuple(int(v) for v in e), c)
            row.append(poly)
        entries.append(row)
    return LaurentMatrix(tuple(f"t{k}" for k in range(1, r + 1)), len(p.relators), p.rank, entries)


def _free_projection(p: Presentation, r: int) -> list:
    """Image of each generator in ``H_1 = Z^r``, as integer vectors.

    Unimodular column operations ``U`` bring the relation matrix to
    ``[L | 0]``; generator i then maps to the last r entries of row i of U.
    """
    n = p.rank
    A = [[int(v) for v in row] for row in relation_matrix(p).tolist()]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    col = 0
    for i in range(len(A)):
        while col < n:
            nz = [j for j in range(col, n) if A[i][j]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(A[i][j]))
            for M in (A, U):
                for row in M:
                    row[col], row[j0] = row[j0], row[col]
            clean = True
            for j in range(col + 1, n):
                q = A[i][j] // A[i][col]
                if q:
                    for M in (A, U):
                        for row in M:
                            row[j] -= q * row[col]
                clean = clean and not A[i][j]
            if clean:
                col += 1
                break
    if n - col != r:
        raise TorsionError("relation lattice rank does not match the free rank")
    return [np.array(U[i][col:], dtype=object) for i in range(n)]
