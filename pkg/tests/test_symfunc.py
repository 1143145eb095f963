from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from unimodal.combinatorics import (
    Partition, Permutation, compositions_of, iter_partitions, partitions_of, z_value,
)
from unimodal.poly import Poly, trunc_exp
from unimodal.symfunc import (
    RingMismatch, SymSeries, TruncationMismatch, L_function, complete_h, hook_schur,
    plethysm, power_sum, ribbon, ribbon_determinant, scalar_product,
    scale_alphabet_one_minus_q, series_exp, series_log, specialize, witt_ell,
)

F = Fraction
q = Poly.var()


def P(N, *terms):
    """P(N, (c, alpha), ...) builds sum c * p_alpha."""
    return SymSeries(N, {Partition.from_parts(a): F(c) for c, a in terms})


# -- ring structure ------------------------------------------------------------

def test_multiply_examples():
    N = 6
    assert power_sum((1,), N) * power_sum((1,), N) == power_sum((1, 1), N)
    f = P(N, (3, (2, 1)), (F(1, 2), (4,)))
    assert f * SymSeries.one(N) == f
    assert power_sum((2,), N) * power_sum((2, 1), N) == power_sum((2, 2, 1), N)


def test_product_drops_terms_above_truncation():
    f = power_sum((3,), 4)
    assert f * f == SymSeries.zero(4)


def test_truncation_and_ring_mismatch():
    with pytest.raises(TruncationMismatch):
        power_sum((1,), 3) + power_sum((1,), 4)
    a = SymSeries(3, {(1,): Poly.var("q")})
    b = SymSeries(3, {(1,): Poly.var("t")})
    with pytest.raises(RingMismatch):
        a + b
    with pytest.raises(TruncationMismatch):
        SymSeries(2, {(2, 1): F(1)})


@st.composite
def series(draw, N=6):
    keys = [a for n in range(N + 1) for a in iter_partitions(n)]
    chosen = draw(st.lists(st.sampled_from(keys), max_size=6, unique=True))
    coeffs = draw(st.lists(st.fractions(-4, 4, max_denominator=5),
                           min_size=len(chosen), max_size=len(chosen)))
    return SymSeries(N, dict(zip(chosen, coeffs)))


@given(series(), series(), series())
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f) == SymSeries.zero(f.N)


def test_power_sum_orthogonality():
    parts = [a for n in range(9) for a in iter_partitions(n)]
    for a in parts:
        pa = power_sum(a, 8)
        for b in parts:
            expected = z_value(a) if a == b else 0
            assert scalar_product(pa, power_sum(b, 8)) == expected


# -- named families -------------------------------------------------------------

def test_complete_h_examples():
    assert complete_h(0, 3) == SymSeries.one(3)
    assert complete_h(2, 3) == P(3, (F(1, 2), (1, 1)), (F(1, 2), (2,)))
    assert complete_h(3, 3) == P(3, (F(1, 6), (1, 1, 1)), (F(1, 2), (2, 1)), (F(1, 3), (3,)))
    with pytest.raises(TruncationMismatch):
        complete_h(4, 3)


@pytest.mark.parametrize("n", range(9))
def test_complete_h_norm(n):
    # brute sum of 1/z over partitions, independent of the series code
    assert sum(F(1, z_value(a)) for a in partitions_of(n)) == 1
    assert scalar_product(complete_h(n, 8), complete_h(n, 8)) == 1


def test_witt_examples():
    assert witt_ell(1, 4) == power_sum((1,), 4)
    assert witt_ell(2, 4) == P(4, (F(1, 2), (1, 1)), (F(-1, 2), (2,)))
    assert witt_ell(4, 4) == P(4, (F(1, 4), (1, 1, 1, 1)), (F(-1, 4), (2, 2)))
    with pytest.raises(ValueError):
        witt_ell(0, 4)


def test_plethysm_examples():
    N = 6
    assert plethysm(power_sum((3,), N), power_sum((2,), N)) == power_sum((6,), N)
    assert plethysm(power_sum((2,), N), witt_ell(2, N)) == P(N, (F(1, 2), (2, 2)), (F(-1, 2), (4,)))
    h2_ell2 = plethysm(complete_h(2, N), witt_ell(2, N))
    assert specialize(h2_ell2, "1-q") == -q ** 3 + q ** 4


def test_plethysm_rejects_polynomial_outer():
    g = SymSeries(3, {(1,): Poly.var()})
    with pytest.raises(RingMismatch):
        plethysm(g, power_sum((1,), 3))


def test_plethysm_is_an_algebra_map():
    N = 8
    f = witt_ell(2, N) + power_sum((1,), N)
    g1, g2 = complete_h(2, N), power_sum((1, 1), N)
    assert plethysm(g1 * g2, f) == plethysm(g1, f) * plethysm(g2, f)
    assert plethysm(g1 + g2, f) == plethysm(g1, f) + plethysm(g2, f)


def test_L_examples():
    N = 6
    assert L_function((1,), N) == power_sum((1,), N)
    for n in range(1, 7):
        assert L_function((n,), N) == witt_ell(n, N)
    assert L_function((1, 1), N) == complete_h(2, N)


def test_ribbon_examples():
    N = 5
    assert ribbon((3,), N) == complete_h(3, N)
    assert ribbon((1, 1), N) == P(N, (F(1, 2), (1, 1)), (F(-1, 2), (2,)))
    assert ribbon((2, 1), N) == P(N, (F(1, 3), (1, 1, 1)), (F(-1, 3), (3,)))
    assert hook_schur(3, 0, N) == complete_h(3, N)
    assert hook_schur(2, 1, N) == ribbon((1, 1), N)
    assert hook_schur(3, 1, N) == ribbon((2, 1), N)
    with pytest.raises(ValueError):
        hook_schur(3, 3, N)


@pytest.mark.parametrize("n", range(1, 9))
def test_ribbon_determinant_matches_recurrence(n):
    for comp in compositions_of(n):
        assert ribbon_determinant(comp, n) == ribbon(comp, n)


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_orthonormality(n):
    hooks = [hook_schur(n, k, n) for k in range(n)]
    for k, a in enumerate(hooks):
        for j, b in enumerate(hooks):
            assert scalar_product(a, b) == (1 if j == k else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_ribbon_L_scalar_products_count_permutations(n):
    """<r_I, L_alpha> = #{sigma of shape I and cycle type alpha}, by brute force over S_n."""
    tally = Counter()
    for w in permutations(range(1, n + 1)):
        sigma = Permutation(w)
        tally[(sigma.descent_composition(), sigma.cycle_type())] += 1
    Ls = {a: L_function(a, n) for a in iter_partitions(n)}
    for comp in compositions_of(n):
        r = ribbon(comp, n)
        for a, L in Ls.items():
            assert scalar_product(r, L) == tally[(comp, a)], (comp, a)


def test_scalar_product_example():
    assert scalar_product(hook_schur(3, 1, 3), L_function((2, 1), 3)) == 1
    assert scalar_product(power_sum((5,), 5), power_sum((5,), 5)) == 5


# -- specializations --------------------------------------------------------------

def test_specialize_witt_at_one_minus_q():
    assert specialize(witt_ell(2, 4), "1-q") == -q + q ** 2
    assert specialize(witt_ell(4, 4), "1-q") == -q + 2 * q ** 2 - q ** 3


@pytest.mark.parametrize("n", range(9))
def test_specialize_h_at_single_letter(n):
    # p_d -> t^d evaluates at the one-letter alphabet {t}, where h_n = t^n
    assert specialize(complete_h(n, 8), "t") == Poly.monomial(n, name="t")


def test_specialize_one_plus_q():
    # the alphabet 1 + q has h_2 = 1 + q + q^2
    assert specialize(complete_h(2, 2), "1+q") == 1 + q + q ** 2


def test_generating_series_of_h():
    N = 12
    log = SymSeries(N, {(d,): F(1, d) for d in range(1, N + 1)})
    total = SymSeries.one(N)
    for n in range(1, N + 1):
        total = total + complete_h(n, N)
    assert series_exp(log) == total
    # and after p_d -> t^d: exp(sum t^d / d) = 1/(1-t)
    t_log = Poly([0] + [F(1, d) for d in range(1, N + 1)], "t")
    assert trunc_exp(t_log, N) == Poly([1] * (N + 1), "t")
    assert specialize(total, "t") == Poly([1] * (N + 1), "t")


def test_scale_alphabet_examples():
    N = 4
    assert scale_alphabet_one_minus_q(power_sum((1,), N)) == SymSeries(N, {(1,): 1 - q})
    assert scale_alphabet_one_minus_q(power_sum((2, 1), N)) == \
        SymSeries(N, {(2, 1): (1 - q ** 2) * (1 - q)})
    rhs = (hook_schur(2, 0, N) - hook_schur(2, 1, N).scale(q)).scale(1 - q)
    assert scale_alphabet_one_minus_q(complete_h(2, N)) == rhs


@pytest.mark.parametrize("n", range(1, 11))
def test_hook_identity(n):
    lhs = scale_alphabet_one_minus_q(complete_h(n, n))
    rhs = SymSeries.zero(n, "QQ[q]")
    for k in range(n):
        rhs = rhs + hook_schur(n, k, n).scale((-q) ** k)
    assert lhs == rhs.scale(1 - q)


# -- exp / log -----------------------------------------------------------------------

def test_exp_examples():
    assert series_exp(SymSeries.zero(4)) == SymSeries.one(4)
    e = series_exp(power_sum((1,), 3))
    assert e == P(3, (1, ()), (1, (1,)), (F(1, 2), (1, 1)), (F(1, 6), (1, 1, 1)))
    with pytest.raises(ValueError):
        series_exp(SymSeries.one(3))
    with pytest.raises(ValueError):
        series_log(power_sum((1,), 3))


def test_exp_matches_taylor_sum():
    N = 7
    f = P(N, (2, (1,)), (F(-1, 3), (2,)), (F(1, 2), (2, 1)))
    taylor = SymSeries.one(N)
    power = SymSeries.one(N)
    factorial = 1
    for m in range(1, N + 1):
        power = power * f
        factorial *= m
        taylor = taylor + power.scale(F(1, factorial))
    assert series_exp(f) == taylor


@given(series(N=7))
def test_log_inverts_exp(f):
    f = f - f.component(0)
    assert series_log(series_exp(f)) == f


def test_exp_over_polynomial_coefficients():
    N = 5
    f = SymSeries(N, {(1,): 1 - q, (2,): q})
    g = series_exp(f)
    assert series_log(g) == f
    assert g[(1, 1)] == (1 - q) * (1 - q) / 2 + 0


# -- symmetry of L on the p-basis ------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_L_coefficient_matrix_symmetric(n):
    parts = partitions_of(n)
    Ls = [L_function(a, n) for a in parts]
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            assert Ls[i][b] == Ls[j][a]
