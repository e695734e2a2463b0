import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hhdeform import fincat as F
from hhdeform import hochschild as hh
from hhdeform import samples as S
from oracles import differential, hh_dims

seeds = st.integers(0, 2**32 - 1)


def _instance(seed, pool=S.SMALL_POOL):
    rng = random.Random(seed)
    name, c = S.random_category(rng, pool)
    return rng, name, c, S.random_bimodule(c, name, rng)


# ---------------------------------------------------------------- frozen dimensions

# Values computed once with oracles.hh_dims (brute-force unnormalized ranks) and frozen.
FROZEN_HH = {
    "Q": [1, 0, 0, 0, 0],
    "dual_numbers": [2, 1, 1, 1, 1],
    "A2": [1, 0, 0],
    "A2_quiver": [1, 0, 0],
    "truncated_cubic": [3, 2, 2, 2],
    "QxQ": [2, 0, 0],
    "poset2": [1, 0, 0],
}


@pytest.mark.parametrize("name", sorted(FROZEN_HH))
def test_hh_dimensions_frozen(name):
    c = S.builtin_category(name)
    m = F.regular_bimodule(c)
    got = [hh.hh_dimension(c, m, n) for n in range(len(FROZEN_HH[name]))]
    assert got == FROZEN_HH[name]


@pytest.mark.parametrize("name", sorted(FROZEN_HH))
def test_frozen_values_match_brute_force_oracle(name):
    c = S.builtin_category(name)
    m = F.regular_bimodule(c)
    up_to = len(FROZEN_HH[name]) - 1
    assert hh_dims(c, m, up_to) == FROZEN_HH[name]


@settings(max_examples=15)
@given(seeds)
def test_normalized_equals_unnormalized(seed):
    _, _, c, m = _instance(seed, ("Q", "dual_numbers", "A2", "A2_quiver", "QxQ", "poset2"))
    for n in range(3):
        assert hh.hh_dimension(c, m, n, normalized=True) == hh.hh_dimension(c, m, n, normalized=False)


def test_materialization_bound():
    c = F.dual_numbers()
    with pytest.raises(ValueError):
        hh.hh_dimension(c, F.regular_bimodule(c), 7, max_degree=6)


# ---------------------------------------------------------------- differential


def test_differential_examples():
    c = F.ground_field()
    m = F.regular_bimodule(c)
    assert hh.hochschild_differential(c, m, hh.Cochain.zero(c, m, 2)).is_zero()
    x = hh.Cochain(c, m, 0, {(("*",), ()): {0: Fraction(5, 3)}})
    assert hh.hochschild_differential(c, m, x).is_zero()


def test_differential_dual_numbers_degree_one():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    # eps -> 1, 1 -> 0: vanishes on the identity
    x = hh.Cochain(c, m, 1, {(("*", "*"), (1,)): {0: 1}})
    dx = hh.hochschild_differential(c, m, x)
    # d x(eps, eps) = eps x(eps) - x(eps^2) + x(eps) eps = 2 eps
    assert dx.value(("*", "*", "*"), (1, 1)) == {1: 2}
    assert hh.hochschild_differential(c, m, dx).is_zero()


def test_mismatched_bimodule_rejected():
    c, d = F.dual_numbers(), F.a2_category()
    x = hh.Cochain.zero(c, F.regular_bimodule(c), 1)
    with pytest.raises(ValueError):
        hh.hochschild_differential(d, F.regular_bimodule(d), x)


@settings(max_examples=60)
@given(seeds)
def test_d_squared_zero(seed):
    rng, _, c, m = _instance(seed)
    x = S.random_cochain(c, m, rng.randint(0, 3), rng)
    assert hh.hochschild_differential(c, m, hh.hochschild_differential(c, m, x)).is_zero()


@settings(max_examples=30)
@given(seeds)
def test_differential_matches_formula_oracle(seed):
    rng, _, c, m = _instance(seed)
    n = rng.randint(0, 2)
    x = S.random_cochain(c, m, n, rng)
    assert hh.hochschild_differential(c, m, x).data == differential(c, m, x.data, n)


# ---------------------------------------------------------------- bracket


@settings(max_examples=40)
@given(seeds)
def test_bracket_with_m2_is_signed_differential(seed):
    rng, _, c, m = _instance(seed)
    n = rng.randint(0, 3)
    x = S.random_cochain(c, m, n, rng)
    assert hh.gerstenhaber_bracket(x, 2) == (-1) ** n * hh.hochschild_differential(c, m, x)


@settings(max_examples=20)
@given(seeds)
def test_bracket_bilinear(seed):
    rng, _, c, m = _instance(seed)
    n = rng.randint(1, 3)
    x, y = S.random_cochain(c, m, n, rng), S.random_cochain(c, m, n, rng)
    a = S.random_unit(rng)
    assert hh.gerstenhaber_bracket(x + a * y, 2) == hh.gerstenhaber_bracket(x, 2) + a * hh.gerstenhaber_bracket(y, 2)


def test_bracket_of_degree_zero_measures_noncentrality():
    c = F.a2_category()
    m = F.regular_bimodule(c)
    unit = hh.Cochain(c, m, 0, {(("*",), ()): {0: 1, 1: 1}})
    assert hh.gerstenhaber_bracket(unit, 2).is_zero()
    e1 = hh.Cochain(c, m, 0, {(("*",), ()): {0: 1}})
    assert not hh.gerstenhaber_bracket(e1, 2).is_zero()
    for name in ("dual_numbers", "truncated_cubic"):
        comm = S.builtin_category(name)
        mm = F.regular_bimodule(comm)
        z = hh.Cochain(comm, mm, 0, {(("*",), ()): {1: 1}})
        assert hh.gerstenhaber_bracket(z, 2).is_zero()


# ---------------------------------------------------------------- witnesses


def test_witness_examples():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    (gen,) = [z for z in hh.cocycle_basis(c, m, 2) if hh.coboundary_solve(c, m, z) is None][:1]
    theta = hh.cohomologous_witness(gen, gen)
    assert theta is not None and hh.hochschild_differential(c, m, theta).is_zero()
    sigma = S.random_cochain(c, m, 1, random.Random(4))
    eta = hh.hochschild_differential(c, m, sigma)
    theta = hh.cohomologous_witness(eta, hh.Cochain.zero(c, m, 2))
    assert hh.hochschild_differential(c, m, theta) == eta
    assert hh.cohomologous_witness(gen, hh.Cochain.zero(c, m, 2)) is None


def test_witness_rejects_non_cocycles():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    x = hh.Cochain(c, m, 1, {(("*", "*"), (1,)): {0: 1}})
    with pytest.raises(hh.NotACocycleError):
        hh.cohomologous_witness(x, hh.Cochain.zero(c, m, 1))


# ---------------------------------------------------------------- cup with identity


def test_cup_identity_with_point_is_identity():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    eta = S.random_cocycle(c, m, 3, random.Random(2))
    ext = hh.cup_identity_extend(eta, F.ground_field())
    relabelled = {(tuple(o for o, _ in objs), idx): vec for (objs, idx), vec in ext.data.items()}
    assert relabelled == eta.data


@settings(max_examples=15)
@given(seeds)
def test_cup_identity_preserves_cocycles_and_coboundaries(seed):
    rng, _, c, m = _instance(seed, ("dual_numbers", "A2", "QxQ"))
    i = S.builtin_category(rng.choice(["Q", "A2_quiver", "dual_numbers"]))
    n = rng.randint(1, 2)
    eta = S.random_cocycle(c, m, n, rng)
    ext = hh.cup_identity_extend(eta, i)
    assert hh.is_cocycle(ext)
    sigma = S.random_cochain(c, m, n - 1, rng)
    bd = hh.cup_identity_extend(hh.hochschild_differential(c, m, sigma), i)
    assert hh.coboundary_solve(bd.category, bd.bimodule, bd) is not None


# ---------------------------------------------------------------- characteristic classes and lifts


def _nonzero_class(c, m, n):
    return next(z for z in hh.cocycle_basis(c, m, n) if hh.coboundary_solve(c, m, z) is None)


def test_characteristic_class_examples():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    simple = F.trivial_module(c)
    assert hh.characteristic_class(hh.Cochain.zero(c, m, 2), simple).vanishes
    sigma = S.random_cochain(c, m, 1, random.Random(9))
    assert hh.characteristic_class(hh.hochschild_differential(c, m, sigma), simple).vanishes
    assert not hh.characteristic_class(_nonzero_class(c, m, 2), simple).vanishes


def test_characteristic_class_rejects_non_cocycle():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    x = hh.Cochain(c, m, 1, {(("*", "*"), (1,)): {0: 1}})
    with pytest.raises(hh.NotACocycleError):
        hh.characteristic_class(x, F.trivial_module(c))


def test_lift_examples():
    c = F.dual_numbers()
    m = F.regular_bimodule(c)
    simple = F.trivial_module(c)
    assert hh.module_lift_witness(simple, hh.Cochain.zero(c, m, 3), 3) is not None
    sigma = S.random_cochain(c, m, 2, random.Random(5))
    assert hh.module_lift_witness(simple, hh.hochschild_differential(c, m, sigma), 3) is not None
    gen4 = _nonzero_class(c, m, 4)
    assert hh.module_lift_witness(simple, gen4, 4) is None
    assert not hh.characteristic_class(gen4, simple).vanishes


@settings(max_examples=25)
@given(seeds)
def test_lift_exists_iff_characteristic_class_vanishes(seed):
    rng, _, c, m = _instance(seed, ("dual_numbers", "truncated_cubic", "A2_quiver", "A2"))
    mdeg = rng.choice([3, 4])
    eta = S.random_cocycle(c, m, mdeg, rng)
    u = S.random_module(c, rng)
    verdict = hh.characteristic_class(eta, u).vanishes
    assert verdict == (hh.module_lift_witness(u, eta, mdeg) is not None)


@settings(max_examples=25)
@given(seeds)
def test_dual_verdict_agrees_for_invertible_coefficients(seed):
    rng = random.Random(seed)
    name = rng.choice(["dual_numbers", "truncated_cubic", "A2", "A2_quiver"])
    c = S.builtin_category(name)
    m = F.twisted_bimodule(c, S.grading_automorphism(c, name, S.random_unit(rng)))
    n = rng.randint(1, 3)
    eta = S.random_cocycle(c, m, n, rng)
    u = S.random_module(c, rng)
    assert hh.characteristic_class(eta, u).vanishes == hh.characteristic_class(eta, u, dual=True).vanishes
