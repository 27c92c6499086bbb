import json

import numpy as np
import pytest

from handlebody_mcg import generators as G
from handlebody_mcg.generators import (
    Eta,
    EtaPrime,
    GeneratorName,
    MappingClassExpr,
    Omega,
    Rho,
    RhoExch,
    Tau,
    TGamma,
    Theta,
    ThetaPrime,
    TwistAlpha,
    TwistDelta,
    Xi,
    XiPrime,
    all_generator_names,
    build_generator,
    curve_word,
    derive_generator,
    evaluate,
    homology_oracle,
    inner_equal_mod_tau,
    relation_suite,
    run_oracles,
    slide_product,
    tables_to_dict,
    table_path,
    theorem_generating_set,
    transvection,
)
from handlebody_mcg.morphism import (
    Automorphism,
    Morphism,
    abelianization_matrix,
    compose_auto,
    inner_equal,
    invert_auto,
    power,
)
from handlebody_mcg.surface import SurfaceModel, check_extension
from handlebody_mcg.words import WordError, are_conjugate


def test_direct_tables():
    m = SurfaceModel(2)
    tau = build_generator(m, Tau(1))
    assert tau(m.a(1)) == m.parse("a1 b1")
    assert all(tau(x) == x for x in m.alphabet.gens()[1:])
    td = build_generator(m, TwistDelta(1))
    d = m.delta(1)
    assert td(m.a(1)) == d * m.a(1) * ~d
    assert td(m.b(1)) == d * m.b(1) * ~d
    assert td(m.a(2)) == m.a(2)
    rho = build_generator(m, Rho())
    assert rho(m.a(1)) == m.a(2) and rho(m.b(1)) == m.b(2)
    assert rho(m.a(2)) == m.parse("z a1 z^-1")


def test_rho_is_trivial_in_genus_one():
    m = SurfaceModel(1)
    assert build_generator(m, Rho()).is_identity()


def test_name_validation():
    with pytest.raises(WordError):
        Xi(1, 1).validate(2)
    with pytest.raises(WordError):
        Eta(1, 3).validate(2)
    with pytest.raises(WordError):
        Tau(3).validate(2)
    with pytest.raises(WordError):
        TGamma().validate(2)
    with pytest.raises(WordError):
        GeneratorName("Nope")
    with pytest.raises(WordError):
        GeneratorName("Tau", (1, 2))
    with pytest.raises(WordError):
        build_generator(SurfaceModel(2), TGamma())
    assert ThetaPrime(1, 2).symbol == "theta'12"
    assert str(RhoExch(1, 2)) == "RhoExch(1,2)"


def test_expr_invariants():
    with pytest.raises(WordError):
        MappingClassExpr(((Tau(1), 0),))
    e = MappingClassExpr(((Tau(1), 2), (Omega(1), -1)))
    assert str(e.inverse()) == "omega1 tau1^-2"


def test_evaluate_examples():
    m = SurfaceModel(2)
    assert evaluate(m, MappingClassExpr()).is_identity()
    assert evaluate(m, MappingClassExpr(((Tau(1), 1), (Tau(1), -1)))).is_identity()
    w2 = evaluate(m, MappingClassExpr(((Omega(1), 2),)))
    assert inner_equal(w2, build_generator(m, TwistDelta(1))) is not None


def test_evaluation_order():
    # leftmost factor acts last
    m = SurfaceModel(2)
    f = evaluate(m, MappingClassExpr(((Rho(), 1), (Tau(1), 1))))
    expect = compose_auto(build_generator(m, Rho()), build_generator(m, Tau(1)))
    assert f == expect


def test_theorem_generating_sets():
    assert theorem_generating_set(1) == [Tau(1), Omega(1), TGamma()]
    two = [Rho(), RhoExch(1, 2), Xi(1, 2), Theta(1, 2), Tau(1), Omega(1), Eta(1, 1), Eta(1, 2)]
    assert theorem_generating_set(2) == two
    assert theorem_generating_set(3) == two
    with pytest.raises(ValueError):
        theorem_generating_set(0)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_every_table_passes_its_oracles(g):
    m = SurfaceModel(g)
    for name in all_generator_names(g):
        rep = run_oracles(m, name)
        assert rep.ok, rep


def test_twist_alpha_is_the_only_rejected_table():
    for g in (1, 2, 3):
        m = SurfaceModel(g)
        rejected = [n.tag for n in all_generator_names(g) if not check_extension(m, build_generator(m, n)).accepted]
        assert set(rejected) == {"TwistAlpha"}


def test_build_is_deterministic_and_matches_recipe():
    m = SurfaceModel(3)
    for name in all_generator_names(3):
        assert build_generator(m, name) == derive_generator(m, name)
    G.clear_cache()
    assert build_generator(m, Xi(2, 3)) == derive_generator(m, Xi(2, 3))


def test_shipped_tables_are_current():
    for g in G.TABLE_GENERA:
        assert json.loads(table_path(g).read_text()) == tables_to_dict(g)


def test_genus_beyond_tables_is_derived():
    m = SurfaceModel(5)
    assert G.load_table(5, Tau(1)) is None
    assert run_oracles(m, Theta(5, 2)).ok


def test_rho_exchange_is_symmetric_and_swaps_knobs():
    m = SurfaceModel(3)
    assert build_generator(m, RhoExch(3, 1)) == build_generator(m, RhoExch(1, 3))
    r = build_generator(m, RhoExch(1, 2))
    w = compose_auto(compose_auto(r, build_generator(m, Omega(1))), invert_auto(r))
    assert inner_equal(w, build_generator(m, Omega(2))) is not None


def test_transvection_oracle():
    T = transvection(1, [0, 1, 0])
    assert T.tolist() == [[1, 0, 0], [1, 1, 0], [0, 0, 1]]
    assert np.array_equal(homology_oracle(1, Tau(1)), T)


def test_slide_product_examples():
    m = SurfaceModel(2)
    assert slide_product(m, 1, ["f11"]) == build_generator(m, Eta(1, 1))
    assert slide_product(m, 1, []).is_identity()
    prod = slide_product(m, 1, ["e12", "g12"])
    assert prod == compose_auto(build_generator(m, Theta(1, 2)), build_generator(m, Xi(1, 2)))
    assert check_extension(m, prod).accepted
    primed = slide_product(m, 2, ["e'21", "f'22"], primed=True)
    assert primed == compose_auto(build_generator(m, ThetaPrime(2, 1)), build_generator(m, EtaPrime(2, 2)))


def test_slide_product_errors():
    m = SurfaceModel(2)
    with pytest.raises(WordError):
        slide_product(m, 1, ["e12", "e'12"])
    with pytest.raises(WordError):
        slide_product(m, 1, ["e21"])
    with pytest.raises(WordError):
        slide_product(m, 1, ["h12"])


def test_slide_products_extend():
    import random

    rng = random.Random(1)
    for g in (2, 3):
        m = SurfaceModel(g)
        for i in range(1, g + 1):
            for primed in (False, True):
                p = "'" if primed else ""
                pool = [f"{k}{p}{i}{j}" for k in "eg" for j in range(1, g + 1) if j != i]
                pool += [f"f{p}{i}{k}" for k in (1, 2)]
                for _ in range(5):
                    loops = [rng.choice(pool) for _ in range(rng.randint(1, 5))]
                    assert check_extension(m, slide_product(m, i, loops, primed)).accepted


def test_inner_equal_mod_tau():
    m = SurfaceModel(2)
    f = build_generator(m, Xi(1, 2))
    t = build_generator(m, Tau(1))
    assert inner_equal_mod_tau(m, compose_auto(f, power(t, 3)), f, 1) == 3
    assert inner_equal_mod_tau(m, compose_auto(f, power(t, 5)), f, 1) is None


@pytest.mark.parametrize("g", [1, 2, 3])
def test_relation_suite_passes(g):
    rep = relation_suite(SurfaceModel(g))
    assert rep.all_passed, [r.to_dict() for r in rep.failures()]
    names = {r.name.split("[")[0] for r in rep.results}
    assert {"R1", "R2", "R3", "R4", "R5"} <= names
    assert ("R6" in names) == (g == 1)


def test_relation_suite_catches_corrupted_tau():
    m = SurfaceModel(2)
    bad = Automorphism(
        Morphism.from_strings(m.alphabet, {"a1": "b1 a1"}),
        Morphism.from_strings(m.alphabet, {"a1": "b1^-1 a1"}),
    )
    assert not relation_suite(m, {Tau(1): bad}).all_passed


def test_relation_suite_catches_corrupted_omega():
    m = SurfaceModel(2)
    assert not relation_suite(m, {Omega(1): build_generator(m, TwistDelta(1))}).all_passed


def test_opposite_orientation_fails():
    # swapping the semitwist direction breaks the eta' relations
    m = SurfaceModel(2)
    w = build_generator(m, Omega(1))
    lhs = build_generator(m, EtaPrime(1, 1))
    wrong = compose_auto(compose_auto(w, build_generator(m, Eta(1, 1))), invert_auto(w))
    assert inner_equal(lhs, wrong) is None


def test_genus_one_curves():
    m = SurfaceModel(1)
    gamma = curve_word(m, "gamma")
    t = build_generator(m, TGamma())
    assert are_conjugate(t(gamma), gamma)
    assert np.array_equal(abelianization_matrix(t.forward), transvection(1, [0, 1, 1]))
    with pytest.raises(WordError):
        curve_word(SurfaceModel(2), "phi1")
