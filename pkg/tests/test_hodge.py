from itertools import product

import pytest
from hypothesis import given, strategies as st

from hhdeform import hodge as H
from hhdeform.hodge import HypersurfaceSpec as Spec
from oracles import bott_by_euler_sequence, capped_monomials, capped_monomials_enumerated

RANGE = [(d, N) for d in range(1, 8) for N in range(2, 8)]
TWISTS = range(-12, 13)


# ---------------------------------------------------------------- projective space


def test_bott_examples():
    assert H.bott_cohomology(2, 0, 0, 1) == 3
    assert H.bott_cohomology(6, 1, 0, 8) == 9009 == 7 * H.binom(13, 8)
    # same branch on P^7: C(14, 8) * 7
    assert H.bott_cohomology(7, 1, 0, 8) == 21021 == 7 * H.binom(14, 8)
    for N in range(2, 6):
        for p, q in product(range(N + 1), repeat=2):
            assert H.bott_cohomology(N, p, q, 0) == (1 if p == q else 0)


def test_bott_against_euler_sequence_oracle():
    for N in range(1, 8):
        for p, q, t in product(range(N + 1), range(N + 1), range(-12, 13)):
            assert H.bott_cohomology(N, p, q, t) == bott_by_euler_sequence(N, p, q, t)


# ---------------------------------------------------------------- diamonds with printed values


def test_first_diamond():
    dia = H.diamond(Spec(5, 7, 0))
    rows = dia.rows()
    assert len(rows) == 13
    assert rows[6] == [0, 36, 2472, 8093, 2472, 36, 0]
    center = [rows[r][len(rows[r]) // 2] for r in range(0, 13, 2) if r != 6]
    assert center == [1] * 6
    assert (dia[5, 1], dia[4, 2], dia[3, 3]) == (36, 2472, 8093)


def test_second_diamond():
    dia = H.diamond(Spec(7, 6, 8))
    rows = dia.rows()
    assert len(rows) == 11
    assert rows[-1] == [2996]
    assert [dia[p, 0] for p in range(5)] == [2996, 9002, 10395, 5775, 1575]
    assert rows[5] == [2996, 20993, 15267, 917, 0, 0]
    assert all(v == 0 for row in rows[:5] for v in row)


def test_rendering_puts_p_decreasing_left_to_right():
    text = H.diamond(Spec(7, 6, 8)).render().splitlines()
    assert len(text) == 11
    assert text[5].split() == ["2996", "20993", "15267", "917", "0", "0"]
    assert text[-1].split() == ["2996"]


def test_bottom_edge_from_ambient_bott_numbers():
    # h^0(Omega^p_X(t)) telescoped through the conormal and restriction sequences,
    # using only the independently derived Bott numbers
    d, N, t = 7, 6, 8

    def restricted(j, s):
        return bott_by_euler_sequence(N, j, 0, s) - bott_by_euler_sequence(N, j, 0, s - d)

    expected = [sum((-1) ** i * restricted(p - i, t - i * d) for i in range(p + 1)) for p in range(5)]
    assert expected == [2996, 9002, 10395, 5775, 1575]
    dia = H.diamond(Spec(d, N, t))
    assert [dia[p, 0] for p in range(5)] == expected


def test_hodge_numbers_from_twisted_spec_examples():
    s = Spec(7, 6, 8)
    assert H.twisted_hodge_number(s, 1, 0) == 9002
    assert H.twisted_hodge_number(s, 2, 0) == 10395


# ---------------------------------------------------------------- Euler characteristics


def test_euler_examples():
    for d, N, t in [(3, 3, 5), (5, 7, 9), (2, 4, 3)]:
        spec = Spec(d, N, t)
        assert H.euler_char_twisted(spec, 0) == H.binom(N + t, N) - H.binom(N + t - d, N)
    s = Spec(7, 6, 8)
    assert H.euler_char_twisted(s, 1) == sum((-1) ** q * H.twisted_hodge_number(s, 1, q) for q in range(6))


def test_cubic_surface():
    spec = Spec(3, 3, 0)
    assert H.euler_char_twisted(spec, 0) == 1
    assert H.euler_char_twisted(spec, 1) == -7
    assert H.twisted_hodge_number(spec, 1, 1) == 7


# ---------------------------------------------------------------- invariants over the full range


@pytest.mark.parametrize("d,N", RANGE)
def test_serre_euler_symmetry(d, N):
    n = N - 1
    for t in TWISTS:
        spec = Spec(d, N, t)
        dia = H.diamond(spec)
        dual = H.diamond(spec.twisted(-t))
        for p, q in product(range(n + 1), repeat=2):
            assert dia[p, q] >= 0
            assert dia[p, q] == dual[n - p, n - q]
        for p in range(n + 1):
            assert sum((-1) ** q * dia[p, q] for q in range(n + 1)) == H.euler_char_twisted(spec, p)
        if t == 0:
            assert dia.is_symmetric()


@pytest.mark.parametrize("N", range(2, 7))
def test_calabi_yau_rotation(N):
    d = N + 1
    for t in TWISTS:
        rows = H.diamond(Spec(d, N, t)).rows()
        rotated = [list(reversed(r)) for r in reversed(H.diamond(Spec(d, N, -t)).rows())]
        assert rows == rotated


# ---------------------------------------------------------------- Jacobian ring


def test_jacobian_examples():
    assert H.jacobian_middle_row(5, 4) == [1, 101, 101, 1]
    assert H.capped_monomials(5, 5, 3) == 126 - 25 == 101
    row = H.jacobian_middle_row(3, 3)
    assert row == [0, 7, 0] and H.capped_monomials(2, 4, 1) == 6
    assert H.jacobian_middle_row(5, 7)[1:4] == [36, 2472, 8093]
    assert H.twisted_hodge_number(Spec(5, 4), 2, 1) == 101
    assert H.twisted_hodge_number(Spec(3, 3), 1, 1) == 7


@given(st.integers(0, 30), st.integers(1, 6), st.integers(0, 6))
def test_capped_monomials_against_oracles(degree, nvars, cap):
    assert H.capped_monomials(degree, nvars, cap) == capped_monomials(degree, nvars, cap)


def test_capped_monomials_enumeration_small():
    for degree, nvars, cap in product(range(12), range(1, 5), range(4)):
        assert H.capped_monomials(degree, nvars, cap) == capped_monomials_enumerated(degree, nvars, cap)


@pytest.mark.parametrize("d,N", [(d, N) for d in range(2, 8) for N in range(2, 8)])
def test_middle_row_matches_jacobian(d, N):
    dia = H.diamond(Spec(d, N, 0))
    n = N - 1
    assert [dia[n - q, q] for q in range(n + 1)] == H.jacobian_middle_row(d, N)


# ---------------------------------------------------------------- HKR and kernels


def test_hkr_examples():
    assert H.hkr_hh_dim(Spec(5, 7, 0), 0) == 1
    for N in range(2, 6):
        spec = Spec(N + 1, N, 0)
        n = N - 1
        for k in range(2 * n + 1):
            expected = sum(H.twisted_hodge_number(spec, n - p, k - p) for p in range(k + 1) if k - p <= n)
            assert H.hkr_hh_dim(spec, k) == expected


def test_hkr_summands_checked_by_euler_characteristic():
    spec = Spec(5, 7, 1)
    n = spec.n
    summands = [(p, 10 - p) for p in range(11) if 10 - p <= n and p <= n]
    assert len(summands) == 3
    total = 0
    for p, q in summands:
        shifted = spec.twisted(spec.t - spec.canonical_twist)
        value = H.polyvector_cohomology(spec, p, q)
        assert value == H.twisted_hodge_number(shifted, n - p, q)
        column = [H.twisted_hodge_number(shifted, n - p, qq) for qq in range(n + 1)]
        assert sum((-1) ** qq * v for qq, v in enumerate(column)) == H.euler_char_twisted(shifted, n - p)
        total += value
    assert H.hkr_hh_dim(spec, 10) == total


def test_kernel_second_example():
    assert H.kernel_dim(Spec(7, 6, -8), 8) == 20993


def test_kernel_value_36_lives_at_twist_minus_three():
    assert H.kernel_dim(Spec(5, 7, -3), 10) == 36


def test_kernel_zero_when_hkr_zero():
    for d, N in [(5, 7), (7, 6), (3, 4)]:
        n = N - 1
        for t in range(-10, 11):
            spec = Spec(d, N, t)
            for m in range(n + 3, 2 * n + 1):
                if H.hkr_hh_dim(spec, m) == 0:
                    assert H.kernel_dim(spec, m) == 0
                assert 0 <= H.kernel_dim(spec, m) <= H.hkr_hh_dim(spec, m)


def test_kernel_rule_refuses_out_of_range_degree():
    with pytest.raises(H.RuleNotApplicable):
        H.kernel_dim(Spec(5, 7, 1), 13)
    with pytest.raises(H.RuleNotApplicable):
        H.kernel_dim(Spec(5, 7, 1), -1)


def test_normal_sequence_is_exact_over_the_range():
    for d, N in RANGE:
        for t in TWISTS:
            spec = Spec(d, N, t)
            for p in range(spec.n + 1):
                H._normal_sequence_ranks(spec, p)


def test_catalog_gate_and_values():
    assert H.catalog_non_fm(7, 6, [-8], [8]) == [(-8, 8, 20993)]
    assert H.catalog_non_fm(5, 7, range(-12, 13), range(0, 9)) == []
    rows = H.catalog_non_fm(5, 7, range(-6, 7), range(0, 13))
    assert all(m >= 9 and k > 0 for _, m, k in rows)
    assert (-3, 10, 36) in rows
