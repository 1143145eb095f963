"""
Counting formulas and generating functions for unimodal permutations.

Two families of results live here:

* cycle-type counts ``u_alpha`` and their refinement ``u_alpha(q)`` by the
  position of the maximum, computed from scalar products of hook Schur
  functions with the Lyndon-type functions ``L_alpha``;
* the product formulas for the cycle enumerator, expanded log-side (one
  explicit logarithm, one call to :func:`~unimodal.symfunc.series_exp`).

Whenever a quantity has two routes, the functions here compute both and raise
:class:`RouteDisagreement` if they differ.
"""

from __future__ import annotations

__all__ = [
    "RouteDisagreement", "CycleCountTable", "WittSpecialization",
    "c_value", "u_alpha_q", "u_alpha", "u_table",
    "theorem1_log", "theorem1_series", "theorem1_series_via_L",
    "witt_specialization", "theoremq_log", "theoremq_series", "theoremq_via_L",
    "no_k_cycle_series", "order_divides_series", "derangement_closed_form",
    "bl_sum", "bl_expected",
]

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import Partition, divisors, iter_partitions, mobius
from .poly import Poly, trunc_exp
from .symfunc import (
    SymSeries, L_function, hook_schur, scalar_product, series_exp, specialize,
    witt_ell,
)


class RouteDisagreement(ArithmeticError):
    """Two independent computations of the same quantity differ."""


@dataclass(frozen=True)
class CycleCountTable:
    """Counts of unimodal permutations of size n, keyed by cycle type.

    ``entries[alpha] = (count, q_refinement)`` where the coefficient of q^k in
    the refinement counts those with maximum at position n - k.
    """
    n: int
    entries: dict[Partition, tuple[int, Poly]] = field(default_factory=dict)

    def rows(self) -> list[tuple[Partition, int, Poly]]:
        """All partitions of n in canonical order, zero rows included."""
        zero = Poly(())
        return [(a, *self.entries.get(a, (0, zero))) for a in iter_partitions(self.n)]

    def count(self, alpha) -> int:
        return self.entries.get(tuple(alpha), (0, None))[0]

    def q_refinement(self, alpha) -> Poly:
        return self.entries.get(tuple(alpha), (0, Poly(())))[1]

    def total(self) -> int:
        return sum(c for c, _ in self.entries.values())

    def check(self) -> None:
        """Raise if the table violates its structural invariants."""
        if self.n >= 1 and self.total() != 2 ** (self.n - 1):
            raise ValueError(f"counts sum to {self.total()}, not 2^{self.n - 1}")
        for alpha, (count, poly) in self.entries.items():
            if poly(1) != count:
                raise ValueError(f"q-refinement of {alpha} does not evaluate to {count}")
            if poly.degree > self.n - 1 or any(c < 0 or c.denominator != 1
                                               for c in poly.coeffs):
                raise ValueError(f"bad q-refinement {poly} for {alpha}")


@dataclass(frozen=True)
class WittSpecialization:
    """ell_n evaluated at the alphabet 1 - q; ``a[k]`` is the coefficient of q^k."""
    n: int
    poly: Poly

    @property
    def a(self) -> list[int]:
        return self.poly.int_coeffs()


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} is not divisible by {den}")
    return q


def c_value(n: int) -> int:
    """Number of transitive unimodal permutations of size n.

    >>> [c_value(n) for n in range(1, 11)]
    [1, 1, 1, 2, 3, 5, 9, 16, 28, 51]
    """
    if n < 1:
        raise ValueError(f"c_n needs n >= 1, got {n}")
    total = sum(mobius(d) * 2 ** (n // d - 1) for d in divisors(n) if d % 2)
    return _exact_div(total, n, f"c_{n}")


def _hooks(n: int) -> list[SymSeries]:
    return [hook_schur(n, k, n) for k in range(n)]


def _u_q_from(L: SymSeries, hooks: list[SymSeries], alpha) -> Poly:
    coeffs = [scalar_product(h, L) for h in hooks]
    poly = Poly(coeffs)
    if any(c < 0 or c.denominator != 1 for c in poly.coeffs):
        raise ArithmeticError(f"u_alpha(q) for {tuple(alpha)} is not a count: {poly}")
    return poly


def u_alpha_q(alpha) -> Poly:
    """sum_k <s_(n-k,1^k), L_alpha> q^k.

    >>> u_alpha_q((2, 1))
    Poly('q + q^2')
    """
    alpha = Partition.from_parts(alpha)
    n = alpha.weight
    if n < 1:
        raise ValueError("u_alpha(q) needs a nonempty partition")
    return _u_q_from(L_function(alpha, n), _hooks(n), alpha)


def _u_both_routes(alpha: Partition, L: SymSeries, uq: Poly) -> int:
    by_hooks = uq(1)
    at_minus_one = specialize(L, "1-q")(-1) / 2
    if by_hooks != at_minus_one:
        raise RouteDisagreement(
            f"u{tuple(alpha)}: hook sum {by_hooks} != L(1-q)|q=-1 / 2 = {at_minus_one}")
    return int(by_hooks)


def u_alpha(alpha) -> int:
    """Number of unimodal permutations of cycle type alpha, via two routes."""
    alpha = Partition.from_parts(alpha)
    n = alpha.weight
    if n < 1:
        raise ValueError("u_alpha needs a nonempty partition")
    L = L_function(alpha, n)
    return _u_both_routes(alpha, L, _u_q_from(L, _hooks(n), alpha))


def u_table(n: int) -> CycleCountTable:
    """Every u_alpha and u_alpha(q) for |alpha| = n, sharing the hook functions."""
    if n < 1:
        raise ValueError(f"table needs n >= 1, got {n}")
    hooks = _hooks(n)
    entries = {}
    for alpha in iter_partitions(n):
        L = L_function(alpha, n)
        uq = _u_q_from(L, hooks, alpha)
        count = _u_both_routes(alpha, L, uq)
        if count:
            entries[alpha] = (count, uq)
    return CycleCountTable(n, entries)


# -- the cycle enumerator --------------------------------------------------------

def theorem1_log(N: int) -> SymSeries:
    """log prod_k ((1+p_k)/(1-p_k))^c_k = sum_k 2 c_k sum_{j odd} p_k^j / j."""
    if N < 1:
        raise ValueError(f"truncation must be >= 1, got {N}")
    terms = {}
    for k in range(1, N + 1):
        ck = c_value(k)
        for j in range(1, N // k + 1, 2):
            terms[Partition._trusted((k,) * j)] = Fraction(2 * ck, j)
    return SymSeries(N, terms)


def theorem1_series(N: int) -> SymSeries:
    """1 + 2 sum u_alpha p_alpha, up to degree N."""
    return series_exp(theorem1_log(N))


def theorem1_series_via_L(N: int) -> SymSeries:
    """sum over odd partitions alpha of 2^l(alpha) L_alpha."""
    if N < 1:
        raise ValueError(f"truncation must be >= 1, got {N}")
    total = SymSeries.one(N)
    for n in range(1, N + 1):
        for alpha in iter_partitions(n):
            if alpha.is_odd():
                total = total + L_function(alpha, N).scale(2 ** alpha.length)
    return total


def witt_specialization(n: int) -> WittSpecialization:
    """ell_n(1-q).

    >>> witt_specialization(4).a
    [0, -1, 2, -1]
    """
    return WittSpecialization(n, specialize(witt_ell(n, n), "1-q"))


def theoremq_log(N: int) -> SymSeries:
    """log prod_n prod_k (1 - q^k p_n)^(-a_nk) = sum a_nk q^(ka) p_n^a / a."""
    if N < 1:
        raise ValueError(f"truncation must be >= 1, got {N}")
    terms: dict = {}
    for n in range(1, N + 1):
        a_n = witt_specialization(n).poly.coeffs
        for a in range(1, N // n + 1):
            coeff = Poly([a_n[k // a] if k % a == 0 and k // a < len(a_n) else 0
                          for k in range(a * len(a_n))]) * Fraction(1, a)
            terms[Partition._trusted((n,) * a)] = coeff
    return SymSeries(N, terms, ring="QQ[q]")


def theoremq_series(N: int) -> SymSeries:
    """The q-refined cycle enumerator sum_alpha L_alpha(1-q) p_alpha."""
    return series_exp(theoremq_log(N))


def theoremq_via_L(N: int) -> SymSeries:
    """sum_alpha specialize(L_alpha, 1-q) p_alpha, term by term."""
    terms = {}
    for n in range(N + 1):
        for alpha in iter_partitions(n):
            terms[alpha] = specialize(L_function(alpha, N), "1-q") if n else Poly([1])
    return SymSeries(N, terms, ring="QQ[q]")


# -- specializations p_n -> t^n ------------------------------------------------------

def _odd_log(scale: int, step: int, N: int) -> list[Fraction]:
    """Coefficients of scale * 2 * sum_{j odd} t^(step j) / j, i.e. scale log((1+t^s)/(1-t^s))."""
    out = [Fraction(0)] * (N + 1)
    for j in range(1, N // step + 1, 2):
        out[step * j] += Fraction(2 * scale, j)
    return out


def _halve_counts(series: Poly, N: int, what: str) -> Poly:
    if series[0] != 1:
        raise ArithmeticError(f"{what}: constant term is {series[0]}, expected 1")
    out = [0]
    for n in range(1, N + 1):
        c = series[n] / 2
        if c.denominator != 1:
            raise ArithmeticError(f"{what}: coefficient of t^{n} is not an even integer")
        out.append(c)
    return Poly(out, name="t")


def no_k_cycle_series(k: int, N: int) -> Poly:
    """Coefficient of t^n is the number of unimodal permutations of size n
    without a k-cycle (1 <= n <= N; the constant coefficient is 0)."""
    if k < 1 or N < 1:
        raise ValueError(f"need k >= 1 and N >= 1, got k={k}, N={N}")
    log = _odd_log(-c_value(k), k, N)
    for n in range(1, N + 1):
        log[n] += Fraction(2 ** n, n)
    return _halve_counts(trunc_exp(Poly(log, name="t"), N), N, f"no {k}-cycle series")


def order_divides_series(m: int, N: int) -> Poly:
    """Coefficient of t^n counts unimodal sigma of size n with sigma^m = 1."""
    if m < 1 or N < 1:
        raise ValueError(f"need m >= 1 and N >= 1, got m={m}, N={N}")
    log = [Fraction(0)] * (N + 1)
    for d in divisors(m):
        for i, c in enumerate(_odd_log(c_value(d), d, N)):
            log[i] += c
    return _halve_counts(trunc_exp(Poly(log, name="t"), N), N, f"order {m} series")


def derangement_closed_form(n: int) -> int:
    """(2^(n-1) + (-1)^n) / 3."""
    return _exact_div(2 ** (n - 1) + (-1) ** n, 3, "derangement count")


def bl_sum(alpha) -> int:
    """<p_n, L_alpha>: the signed sum of (-1)^k over unimodal permutations of type alpha."""
    alpha = Partition.from_parts(alpha)
    n = alpha.weight
    if n < 1:
        raise ValueError("bl_sum needs a nonempty partition")
    value = n * L_function(alpha, n).coefficient((n,))
    if value.denominator != 1:
        raise ArithmeticError(f"<p_n, L_alpha> = {value} is not an integer")
    return int(value)


def bl_expected(alpha) -> int:
    """mu(d) if alpha = (d^m), else 0."""
    alpha = Partition.from_parts(alpha)
    if alpha and len(set(alpha)) == 1:
        return mobius(alpha[0])
    return 0
