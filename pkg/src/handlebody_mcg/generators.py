"""Named generators of the handlebody subgroup, their tables and relations.

Every generator is an :class:`Automorphism` of ``pi_1`` of the twice
punctured surface in the basis of :class:`SurfaceModel`.  Tables ship as
JSON under ``data/`` for genus 1 to 4; other genera are derived on demand
from the same recipes (direct formulas for twists, rotations and the knob
semitwist, lifts of planar braids for slides and knob exchanges).

Conventions, fixed once:

* ``Tau(i)`` is the right-handed twist about the meridian: ``a_i -> a_i b_i``.
* ``Omega(i)`` squares to ``TwistDelta(i)``, conjugation of knob i by ``[a_i, b_i]``.
* ``Rho`` sends handle i to handle i+1 and handle g back to handle 1
  conjugated by ``z``, so ``Rho^g`` is conjugation by ``z``.
* Slides push the foot ``B_i`` (or ``B'_i``) once around a loop.  The
  foot travels on the base point side of the feet it passes; around the
  second puncture it travels on the far side.
* ``Xi(i,j)`` pushes the foot around ``B_j``; ``Theta(i,j)`` pushes it
  along the longitude of handle j; ``Eta(i,k)`` around puncture ``P_k``.
* ``RhoExch(i,j)`` exchanges knobs i and j without turning them
  (it equals ``RhoExch(j,i)``).
"""

from __future__ import annotations

import json
import logging
import re
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional, Sequence

import numpy as np

from . import planar as P
from .morphism import (
    Automorphism,
    Morphism,
    abelianization_matrix,
    compose_auto,
    inner_equal,
    invert_auto,
    is_inner,
    power,
)
from .surface import SurfaceModel, certify_mapping_class, check_extension
from .words import FreeWord, WordError, are_conjugate, conjugate, invert

log = logging.getLogger(__name__)

TABLE_FORMAT = 1
TABLE_GENERA = (1, 2, 3, 4)

# tag -> number of indices; "k" marks a puncture index in {1, 2}
_ARITY = {
    "Rho": "",
    "RhoExch": "ij",
    "Omega": "i",
    "Tau": "i",
    "Eta": "ik",
    "EtaPrime": "ik",
    "Theta": "ij",
    "ThetaPrime": "ij",
    "Xi": "ij",
    "XiPrime": "ij",
    "TwistDelta": "i",
    "TwistAlpha": "i",
    "TGamma": "",
}

_SYMBOL = {
    "Rho": "rho",
    "RhoExch": "rho",
    "Omega": "omega",
    "Tau": "tau",
    "Eta": "eta",
    "EtaPrime": "eta'",
    "Theta": "theta",
    "ThetaPrime": "theta'",
    "Xi": "xi",
    "XiPrime": "xi'",
    "TwistDelta": "tdelta",
    "TwistAlpha": "talpha",
    "TGamma": "tgamma",
}


@dataclass(frozen=True)
class GeneratorName:
    """A named generator such as ``Xi(1, 2)`` or ``Rho``."""

    tag: str
    indices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.tag not in _ARITY:
            raise WordError(f"unknown generator tag {self.tag!r}")
        if len(self.indices) != len(_ARITY[self.tag]):
            raise WordError(f"{self.tag} takes {len(_ARITY[self.tag])} indices, got {len(self.indices)}")
        for x in self.indices:
            if not isinstance(x, int) or isinstance(x, bool):
                raise WordError(f"indices must be integers, got {x!r}")

    def validate(self, genus: int) -> "GeneratorName":
        kinds = _ARITY[self.tag]
        for kind, x in zip(kinds, self.indices):
            if kind == "k":
                if x not in (1, 2):
                    raise WordError(f"{self}: puncture index {x} out of range 1..2")
            elif not 1 <= x <= genus:
                raise WordError(f"{self}: index {x} out of range 1..{genus}")
        if kinds == "ij" and self.indices[0] == self.indices[1]:
            raise WordError(f"{self}: the two handle indices must differ")
        if self.tag == "TGamma" and genus != 1:
            raise WordError("TGamma exists only in genus 1")
        return self

    @property
    def symbol(self) -> str:
        """Expression spelling, e.g. ``xi'12`` or ``rho``."""
        return _SYMBOL[self.tag] + "".join(str(x) for x in self.indices)

    def __str__(self):
        if not self.indices:
            return self.tag
        return f"{self.tag}({','.join(map(str, self.indices))})"


def Rho():
    return GeneratorName("Rho")


def RhoExch(i, j):
    return GeneratorName("RhoExch", (i, j))


def Omega(i):
    return GeneratorName("Omega", (i,))


def Tau(i):
    return GeneratorName("Tau", (i,))


def Eta(i, k):
    return GeneratorName("Eta", (i, k))


def EtaPrime(i, k):
    return GeneratorName("EtaPrime", (i, k))


def Theta(i, j):
    return GeneratorName("Theta", (i, j))


def ThetaPrime(i, j):
    return GeneratorName("ThetaPrime", (i, j))


def Xi(i, j):
    return GeneratorName("Xi", (i, j))


def XiPrime(i, j):
    return GeneratorName("XiPrime", (i, j))


def TwistDelta(i):
    return GeneratorName("TwistDelta", (i,))


def TwistAlpha(i):
    return GeneratorName("TwistAlpha", (i,))


def TGamma():
    return GeneratorName("TGamma")


def all_generator_names(genus: int) -> list:
    """Every valid name at this genus, in a fixed order."""
    g = genus
    hs = range(1, g + 1)
    pairs = [(i, j) for i in hs for j in hs if i != j]
    names = [Rho()]
    names += [RhoExch(i, j) for i, j in pairs if i < j]
    names += [Omega(i) for i in hs] + [Tau(i) for i in hs]
    names += [Eta(i, k) for i in hs for k in (1, 2)]
    names += [EtaPrime(i, k) for i in hs for k in (1, 2)]
    for tag in ("Theta", "ThetaPrime", "Xi", "XiPrime"):
        names += [GeneratorName(tag, p) for p in pairs]
    names += [TwistDelta(i) for i in hs] + [TwistAlpha(i) for i in hs]
    if g == 1:
        names.append(TGamma())
    return names


@dataclass(frozen=True)
class MappingClassExpr:
    """A word ``g_1^e_1 ... g_n^e_n`` in named generators; leftmost acts last."""

    factors: tuple = ()

    def __post_init__(self):
        fs = tuple((n, int(e)) for n, e in self.factors)
        for n, e in fs:
            if not isinstance(n, GeneratorName):
                raise WordError(f"factor {n!r} is not a GeneratorName")
            if e == 0:
                raise WordError("exponents must be nonzero")
        object.__setattr__(self, "factors", fs)

    def __len__(self):
        return len(self.factors)

    def inverse(self) -> "MappingClassExpr":
        return MappingClassExpr(tuple((n, -e) for n, e in reversed(self.factors)))

    def __str__(self):
        if not self.factors:
            return "id"
        return " ".join(n.symbol if e == 1 else f"{n.symbol}^{e}" for n, e in self.factors)


# -- recipes ------------------------------------------------------------------


def _table(model: SurfaceModel, fwd: dict, bwd: dict) -> Automorphism:
    a = model.alphabet
    return Automorphism(Morphism.from_strings(a, fwd), Morphism.from_strings(a, bwd))


def _chain(model: SurfaceModel, *fs: Automorphism) -> Automorphism:
    out = Automorphism.identity(model.alphabet)
    for f in fs:
        out = compose_auto(out, f)
    return out


def _tau(model, i):
    a, b = f"a{i}", f"b{i}"
    return _table(model, {a: f"{a} {b}"}, {a: f"{a} {b}^-1"})


def _twist_alpha(model, i):
    a, b = f"a{i}", f"b{i}"
    return _table(model, {b: f"{b} {a}^-1"}, {b: f"{b} {a}"})


def _twist_delta(model, i):
    return _knob_conjugation(model, i, model.delta(i))


def _knob_conjugation(model, i, d: FreeWord) -> Automorphism:
    a = model.alphabet
    fw, bw = [], []
    for lab, x in zip(a.labels, a.gens()):
        on_knob = lab in (f"a{i}", f"b{i}")
        fw.append(conjugate(x, d) if on_knob else x)
        bw.append(conjugate(x, invert(d)) if on_knob else x)
    return Automorphism(Morphism(a, a, tuple(fw)), Morphism(a, a, tuple(bw)))


def _omega(model, i):
    # the inverse half turn H fixes d = [a, b] and H^2 conjugates the knob by d^-1
    a, b = f"a{i}", f"b{i}"
    H = Morphism.from_strings(
        model.alphabet, {a: f"{b} {a}^-1 {b}^-1", b: f"{b} {a} {b}^-1 {a}^-1 {b}^-1"}
    )
    d = model.delta(i)
    fw = tuple(
        conjugate(img, d) if lab in (a, b) else img
        for lab, img in zip(model.alphabet.labels, H.images)
    )
    return Automorphism(Morphism(model.alphabet, model.alphabet, fw), H)


def _rho(model):
    g = model.genus
    if g == 1:
        return Automorphism.identity(model.alphabet)
    fw, bw = {}, {}
    for i in range(1, g):
        fw[f"a{i}"], fw[f"b{i}"] = f"a{i + 1}", f"b{i + 1}"
        bw[f"a{i + 1}"], bw[f"b{i + 1}"] = f"a{i}", f"b{i}"
    fw[f"a{g}"], fw[f"b{g}"] = "z a1 z^-1", "z b1 z^-1"
    bw["a1"], bw["b1"] = f"z^-1 a{g} z", f"z^-1 b{g} z"
    return _table(model, fw, bw)


def _path_sides(src: int, dst: int) -> list:
    n = abs(dst - src) - 1
    return [-1 if src < dst else 1] * n


def _push(model, src: int, dst: int, sides=None) -> Automorphism:
    """Twist about the curve enclosing hole ``src`` and hole ``dst``, joined by a path."""
    g = model.genus
    sides = _path_sides(src, dst) if sides is None else sides
    mover = P.move_adjacent(g, src, dst, sides)
    k = dst - 1 if src < dst else dst
    return P.lift(model, P.conjugated(P.block_twist(g, k, k + 1), mover))


def _eta(model, i, k, primed=False):
    # around P2 the foot passes every hole on the far side
    src, dst = P.foot(i, primed), P.puncture(model.genus, k)
    sides = None if k == 1 else [1] * (dst - src - 1)
    return _push(model, src, dst, sides)


def _xi(model, i, j, primed=False):
    # point push = t_{around B_i and B_j} * t_{around B_j}^-1
    push = _push(model, P.foot(i, primed), P.foot(j))
    return _chain(model, push, invert_auto(_tau(model, j)))


def _theta(model, i, j, primed=False):
    # sliding along the longitude of handle j is the finger move [xi, t_alpha_j]
    x = _xi(model, i, j, primed)
    ta = _twist_alpha(model, j)
    return _chain(model, x, ta, invert_auto(x), invert_auto(ta))


def _knob_swap(model, i, j):
    """Carry knob i rigidly to position j and knob j to position i."""
    g = model.genus
    lo, hi = min(i, j), max(i, j)
    word = []
    # adjacent cable swap of knobs m, m+1: 4 half twists
    def swap(m):
        base = P.foot(m)
        return [(base + 1, 1), (base, 1), (base + 2, 1), (base + 1, 1)]
    for m in range(lo, hi):
        word += swap(m)
    for m in range(hi - 2, lo - 1, -1):
        word += swap(m)
    return P.lift(model, P.braid(g, word))


def _t_gamma(model):
    # gamma is isotopic to the curve around B'_1 and P1 with P1 carried over the front
    return _twist_about(model, 1)


def derive_generator(model: SurfaceModel, name: GeneratorName) -> Automorphism:
    """Compute a table from its recipe, bypassing the shipped data files."""
    name.validate(model.genus)
    t, ix = name.tag, name.indices
    if t == "Rho":
        return _rho(model)
    if t == "RhoExch":
        return _knob_swap(model, *ix)
    if t == "Omega":
        return _omega(model, *ix)
    if t == "Tau":
        return _tau(model, *ix)
    if t == "TwistDelta":
        return _twist_delta(model, *ix)
    if t == "TwistAlpha":
        return _twist_alpha(model, *ix)
    if t == "TGamma":
        return _t_gamma(model)
    primed = t.endswith("Prime")
    if t.startswith("Eta"):
        return _eta(model, *ix, primed=primed)
    if t.startswith("Xi"):
        return _xi(model, *ix, primed=primed)
    return _theta(model, *ix, primed=primed)


# -- shipped tables ------------------------------------------------------------


def table_path(genus: int):
    return resources.files("handlebody_mcg").joinpath("data", f"generators_g{genus}.json")


def tables_to_dict(genus: int) -> dict:
    model = SurfaceModel(genus)
    gens = {}
    for n in all_generator_names(genus):
        d = derive_generator(model, n).to_dict()
        gens[n.symbol] = {"forward": d["forward"], "backward": d["backward"]}
    return {
        "format_version": TABLE_FORMAT,
        "genus": genus,
        "alphabet": list(model.alphabet.labels),
        "generators": gens,
    }


@lru_cache(maxsize=None)
def _load_tables(genus: int) -> Optional[dict]:
    path = table_path(genus)
    if not path.is_file():
        return None
    data = json.loads(path.read_text())
    if data.get("format_version") != TABLE_FORMAT or data.get("genus") != genus:
        raise WordError(f"table file {path} has an unexpected format or genus")
    return data


def load_table(genus: int, name: GeneratorName) -> Optional[Automorphism]:
    data = _load_tables(genus)
    if data is None:
        return None
    entry = data["generators"].get(name.symbol)
    if entry is None:
        return None
    return Automorphism.from_dict({"alphabet": data["alphabet"], **entry})


_cache: dict = {}
_cache_lock = threading.Lock()


def build_generator(model: SurfaceModel, name: GeneratorName) -> Automorphism:
    """The table for ``name`` at the model's genus, cached per (genus, name)."""
    name.validate(model.genus)
    key = (model.genus, name)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    with _cache_lock:
        if key not in _cache:
            f = load_table(model.genus, name)
            if f is None:
                log.debug("deriving %s at genus %d", name, model.genus)
                f = derive_generator(model, name)
            _cache[key] = f
        return _cache[key]


def clear_cache():
    with _cache_lock:
        _cache.clear()
    _load_tables.cache_clear()


def evaluate(model: SurfaceModel, expr: MappingClassExpr) -> Automorphism:
    """Compose the factors as functions: the leftmost factor is applied last."""
    out = Automorphism.identity(model.alphabet)
    for name, e in expr.factors:
        out = compose_auto(out, power(build_generator(model, name), e))
    return out


def theorem_generating_set(g: int) -> list:
    if not isinstance(g, int) or g < 1:
        raise ValueError(f"genus must be a positive integer, got {g!r}")
    if g == 1:
        return [Tau(1), Omega(1), TGamma()]
    return [Rho(), RhoExch(1, 2), Xi(1, 2), Theta(1, 2), Tau(1), Omega(1), Eta(1, 1), Eta(1, 2)]


def random_expr(genus: int, length: int, rng, names: Optional[Sequence[GeneratorName]] = None) -> MappingClassExpr:
    """A word of the given length in ``names`` (default: the theorem set) and their inverses."""
    pool = list(names) if names is not None else theorem_generating_set(genus)
    return MappingClassExpr(tuple((rng.choice(pool), rng.choice((1, -1))) for _ in range(length)))


# -- slides along products of named loops ---------------------------------------

_LOOP_TAG = {"e": "Theta", "g": "Xi", "f": "Eta"}


def _parse_loop(sym: str):
    m = re.fullmatch(r"([efg])(')?_?\{?(\d)(\d)\}?", sym.strip())
    if not m:
        raise WordError(f"unknown loop symbol {sym!r}")
    kind, prime, i, j = m.group(1), bool(m.group(2)), int(m.group(3)), int(m.group(4))
    return kind, prime, i, j


def slide_product(model: SurfaceModel, i: int, loops: Sequence[str], primed: bool = False) -> Automorphism:
    """Slide of foot i along the product of named loops, up to a power of Tau(i).

    ``loops`` are symbols like ``e12``, ``g13``, ``f11`` (or ``e'12`` ... when
    ``primed``).  The slides are composed in the order given, leftmost acting
    last, as in ``sigma_{e_1} ... sigma_{e_n}``.
    """
    names = []
    for sym in loops:
        kind, prime, li, j = _parse_loop(sym)
        if prime != primed:
            raise WordError(f"loop {sym!r} does not match primed={primed}")
        if li != i:
            raise WordError(f"loop {sym!r} is not an {i}-loop")
        tag = _LOOP_TAG[kind] + ("Prime" if primed else "")
        names.append((GeneratorName(tag, (i, j)).validate(model.genus), 1))
    return evaluate(model, MappingClassExpr(tuple(names)))


def inner_equal_mod_tau(model, f, g, i: int, bound: int = 4, tau=None) -> Optional[int]:
    """Smallest ``|m| <= bound`` with ``f ~ g tau_i^m`` or ``f ~ tau_i^m g``."""
    t = build_generator(model, Tau(i)) if tau is None else tau
    for m in sorted(range(-bound, bound + 1), key=lambda m: (abs(m), m)):
        tm = power(t, m)
        if inner_equal(f, compose_auto(g, tm)) is not None or inner_equal(f, compose_auto(tm, g)) is not None:
            return m
    return None


# -- homology oracles ------------------------------------------------------------


def intersection_form(genus: int) -> np.ndarray:
    """``<a_i, b_i> = 1``; ``z`` pairs trivially."""
    n = 2 * genus + 1
    J = np.zeros((n, n), dtype=np.int64)
    for i in range(genus):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    return J


def transvection(genus: int, v) -> np.ndarray:
    """Homology action of a right-handed twist about a curve of class ``v``: x -> x + <x, v> v."""
    v = np.asarray(v, dtype=np.int64)
    J = intersection_form(genus)
    return np.eye(len(v), dtype=np.int64) + np.outer(v, v @ J.T)


def _basis(genus, label):
    idx = {"z": 2 * genus}
    v = np.zeros(2 * genus + 1, dtype=np.int64)
    kind, i = label[0], int(label[1:]) if label != "z" else 0
    v[idx["z"] if label == "z" else 2 * (i - 1) + (kind == "b")] = 1
    return v


def _permutation(genus, mapping: dict) -> np.ndarray:
    n = 2 * genus + 1
    M = np.eye(n, dtype=np.int64)
    for src, dst in mapping.items():
        s, d = _basis(genus, src), _basis(genus, dst)
        M[:, int(np.argmax(s))] = d
    return M


def homology_oracle(genus: int, name: GeneratorName) -> np.ndarray:
    """Expected abelianization matrix, derived from curve classes alone."""
    g = genus
    name.validate(g)
    T = lambda *pairs: transvection(g, sum(c * _basis(g, lab) for c, lab in pairs))
    inv = lambda M: np.rint(np.linalg.inv(M)).astype(np.int64)
    t, ix = name.tag, name.indices
    if t == "Rho":
        mp = {}
        for i in range(1, g + 1):
            j = i % g + 1
            mp[f"a{i}"], mp[f"b{i}"] = f"a{j}", f"b{j}"
        return _permutation(g, mp)
    if t == "RhoExch":
        i, j = ix
        return _permutation(g, {f"a{i}": f"a{j}", f"b{i}": f"b{j}", f"a{j}": f"a{i}", f"b{j}": f"b{i}"})
    if t == "Omega":
        M = np.eye(2 * g + 1, dtype=np.int64)
        i = ix[0]
        M[2 * i - 2, 2 * i - 2] = M[2 * i - 1, 2 * i - 1] = -1
        return M
    if t == "Tau":
        return T((1, f"b{ix[0]}"))
    if t == "TwistDelta":
        return np.eye(2 * g + 1, dtype=np.int64)
    if t == "TwistAlpha":
        return T((1, f"a{ix[0]}"))
    if t == "TGamma":
        return T((1, "b1"), (1, "z"))
    # slides: the foot B_i carries class b_i, the foot B'_i carries -b_i
    sign = -1 if t.endswith("Prime") else 1
    i, j = ix
    if t.startswith("Eta"):
        return T((sign, f"b{i}"), (1 if j == 1 else -1, "z"))
    xi = T((sign, f"b{i}"), (1, f"b{j}")) @ inv(T((1, f"b{j}")))
    if t.startswith("Xi"):
        return xi
    ta = T((1, f"a{j}"))
    # theta = xi t_a xi^-1 t_a^-1 = t_{xi(a_j)} t_a^-1
    return transvection(g, xi @ _basis(g, f"a{j}")) @ inv(ta)


@dataclass
class OracleReport:
    name: str
    certified: bool
    extension_accepted: bool
    homology_ok: bool
    determinant: int

    @property
    def ok(self) -> bool:
        expect_ext = not self.name.startswith("TwistAlpha")
        return (
            self.certified
            and self.extension_accepted == expect_ext
            and self.homology_ok
            and abs(self.determinant) == 1
        )


def run_oracles(model: SurfaceModel, name: GeneratorName, f: Optional[Automorphism] = None) -> OracleReport:
    """Certification, extension check and homology comparison for one table."""
    f = build_generator(model, name) if f is None else f
    cert = certify_mapping_class(model, f).certified
    ext = check_extension(model, f).accepted if cert else False
    A = abelianization_matrix(f.forward)
    return OracleReport(
        str(name),
        cert,
        ext,
        bool(np.array_equal(A, homology_oracle(model.genus, name))),
        int(round(np.linalg.det(A))),
    )


# -- curves in genus one -----------------------------------------------------------

#: simple closed curves of the genus-one picture, as free-group words
CURVES_G1 = {
    "phi1": "a1 b1 a1^-1 z",
    "chi1": "z^-1 b1",
    "phi_prime": "b1^-1 z",
    "gamma": "a1 b1 a1^-1 z",
}


def curve_word(model: SurfaceModel, name: str) -> FreeWord:
    if model.genus != 1:
        raise WordError("the curve table is for genus one")
    return model.parse(CURVES_G1[name])


# -- relations -------------------------------------------------------------------


@dataclass
class RelationResult:
    name: str
    statement: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "statement": self.statement, "passed": self.passed, "detail": self.detail}


@dataclass
class RelationReport:
    genus: int
    results: list

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "all_passed": self.all_passed,
            "relations": [r.to_dict() for r in self.results],
        }


def relation_suite(model: SurfaceModel, tables: Optional[dict] = None, tau_slack: int = 4) -> RelationReport:
    """Check the defining relations among the generator tables.

    ``tables`` may override individual generators (by name) to test that a
    corrupted table is caught.
    """
    g = model.genus
    tables = tables or {}

    def G(name, e=1):
        f = tables.get(name) or build_generator(model, name)
        return power(f, e)

    def C(*fs):
        return _chain(model, *fs)

    def eq(f, h):
        return inner_equal(f, h) is not None

    out = []
    for i in range(1, g + 1):
        out.append(RelationResult(f"R1[{i}]", f"omega{i}^2 ~ tdelta{i}", eq(G(Omega(i), 2), G(TwistDelta(i)))))
    for i in range(1, g + 1):
        for k in (1, 2):
            rhs = C(G(Rho(), i - 1), G(Eta(1, k)), G(Rho(), -(i - 1)))
            out.append(RelationResult(
                f"R2[{i},{k}]", f"eta{i}{k} ~ rho^{i - 1} eta1{k} rho^-{i - 1}", eq(G(Eta(i, k)), rhs)
            ))
    for i in range(1, g + 1):
        w = G(Omega(i))
        out.append(RelationResult(
            f"R3[{i}]", f"eta'{i}1 ~ omega{i}^-1 eta{i}1 omega{i}",
            eq(G(EtaPrime(i, 1)), C(invert_auto(w), G(Eta(i, 1)), w)),
        ))
        out.append(RelationResult(
            f"R4[{i}]", f"eta'{i}2 ~ omega{i} eta{i}2 omega{i}^-1",
            eq(G(EtaPrime(i, 2)), C(w, G(Eta(i, 2)), invert_auto(w))),
        ))
    out.append(RelationResult("R5", f"rho^{g} ~ id", is_inner(G(Rho(), g)) is not None))
    if g == 1:
        out += _genus_one_relations(model, G, eq)
    # slide around both punctures = eta12 eta11 modulo tau_1
    m = inner_equal_mod_tau(
        model, _slide_around_punctures(model), C(G(Eta(1, 2)), G(Eta(1, 1))), 1, tau_slack, G(Tau(1))
    )
    out.append(RelationResult(
        "R-composite", "sigma(1, f12 f11) ~ eta12 eta11 mod tau1", m is not None, {"tau_power": m}
    ))
    return RelationReport(g, out)


def _slide_around_punctures(model):
    g = model.genus
    p1 = P.puncture(g, 1)
    outer = _push_block(model, P.foot(1), p1, 2)
    both = P.lift(model, P.block_twist(g, p1, p1 + 1))
    return _chain(model, outer, invert_auto(both))


def _push_block(model, src, dst, width):
    g = model.genus
    mover = P.move_adjacent(g, src, dst, _path_sides(src, dst))
    k = dst - 1
    return P.lift(model, P.conjugated(P.block_twist(g, k, k + width), mover))


def _twist_about(model, target: int):
    """Twist about the curve enclosing B'_1 and puncture ``target``, reached by moving the puncture."""
    g = model.genus
    src = P.puncture(g, target)
    mover = P.move_adjacent(g, src, 0, [1] * (src - 1))
    return P.lift(model, P.conjugated(P.block_twist(g, 0, 1), mover))


def _genus_one_relations(model, G, eq) -> list:
    t_phi1 = _twist_about(model, 1)
    t_chi1 = _twist_about(model, 2)
    phi1, chi1, phip, gamma = (curve_word(model, n) for n in ("phi1", "chi1", "phi_prime", "gamma"))
    w = G(Omega(1))
    pushed = w.inverse()(phi1)
    return [
        RelationResult("R6[eta11]", "eta11 ~ t_phi1", eq(G(Eta(1, 1)), t_phi1)),
        RelationResult("R6[eta12]", "eta12 ~ t_chi1", eq(G(Eta(1, 2)), t_chi1)),
        RelationResult("R6[gamma]", "tgamma(gamma) ~ gamma", are_conjugate(G(TGamma())(gamma), gamma)),
        RelationResult(
            "R6[chi1]", "chi1 ~ phi' (as unoriented curves)",
            are_conjugate(chi1, phip) or are_conjugate(chi1, invert(phip)),
        ),
        RelationResult(
            "R6[omega]", "omega1^-1(phi1) ~ phi' (as unoriented curves)",
            are_conjugate(pushed, phip) or are_conjugate(pushed, invert(phip)),
            {"image": str(pushed)},
        ),
    ]


def write_tables(directory, genera: Iterable[int] = TABLE_GENERA) -> list:
    """Regenerate the shipped JSON tables; returns the written paths."""
    from pathlib import Path

    out = []
    for g in genera:
        path = Path(directory) / f"generators_g{g}.json"
        path.write_text(json.dumps(tables_to_dict(g), indent=1, sort_keys=False) + "\n")
        out.append(path)
    return out


if __name__ == "__main__":
    from pathlib import Path

    for p in write_tables(Path(__file__).parent / "data"):
        print(p)
