"""
Brute-force ground truth for unimodal permutations.

Unimodal permutations of size n correspond to subsets T of {1..n-1}: write
the complement of T together with n in increasing order, then T in
decreasing order.  Enumeration walks the 2^(n-1) subsets directly instead of
filtering all n! permutations.

The group-algebra product multiplies left to right: the product sigma*tau
first applies sigma, then tau, i.e. it is ``compose(tau, sigma)`` in the
i -> sigma(tau(i)) convention of :func:`~unimodal.combinatorics.compose`.
This is the orientation in which the product coefficients depend only on
descent composition and match the closed form below; the opposite
orientation is available for comparison.
"""

from __future__ import annotations

__all__ = [
    "MAX_ENUMERATE", "MAX_PRODUCT", "LEFT_TO_RIGHT", "RIGHT_TO_LEFT",
    "UnimodalWitness", "GroupAlgebraElement",
    "enumerate_unimodal", "tabulate", "transitive_count", "fixed_point_free_count",
    "order_divides_count", "signed_sums", "nu_q_sums",
    "unimodal_product", "kreweras_coefficient", "kreweras_coefficient_as_printed",
    "classify_shape", "all_permutations",
]

from collections import Counter, defaultdict
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import permutations

from .combinatorics import Composition, Permutation, compose
from .poly import Poly, Poly2, q_integer
from .theorems import CycleCountTable

MAX_ENUMERATE = 20
MAX_PRODUCT = 7

LEFT_TO_RIGHT = "left-to-right"
RIGHT_TO_LEFT = "right-to-left"


@dataclass(frozen=True)
class UnimodalWitness:
    permutation: Permutation
    tail_set: frozenset[int]

    @property
    def k(self) -> int:
        """Number of descents; the shape is (n-k, 1^k)."""
        return len(self.tail_set)

    @property
    def max_position(self) -> int:
        return len(self.permutation) - self.k

    @property
    def sign(self) -> int:
        return -1 if self.k % 2 else 1


def _check_n(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in 1..{cap}, got {n}")


def enumerate_unimodal(n: int) -> Iterator[UnimodalWitness]:
    """Yield all 2^(n-1) unimodal permutations of size n, by tail-set bitmask.

    >>> [str(w.permutation) for w in enumerate_unimodal(3)]
    ['123', '231', '132', '321']
    """
    _check_n(n, MAX_ENUMERATE)
    for mask in range(1 << (n - 1)):
        tail = [i + 1 for i in range(n - 1) if mask >> i & 1]
        tail_set = frozenset(tail)
        head = [v for v in range(1, n + 1) if v not in tail_set]
        word = tuple(head + tail[::-1])
        yield UnimodalWitness(Permutation._trusted(word), tail_set)


def tabulate(n: int) -> CycleCountTable:
    """Tally unimodal permutations by cycle type and by k = n - max_position."""
    counts: Counter = Counter()
    by_k: dict = defaultdict(lambda: [0] * n)
    for w in enumerate_unimodal(n):
        alpha = w.permutation.cycle_type()
        counts[alpha] += 1
        by_k[alpha][w.k] += 1
    return CycleCountTable(n, {a: (counts[a], Poly(by_k[a])) for a in counts})


def transitive_count(n: int) -> int:
    """How many unimodal permutations of size n are a single n-cycle."""
    return sum(1 for w in enumerate_unimodal(n) if w.permutation.cycle_type() == (n,))


def fixed_point_free_count(n: int) -> int:
    return sum(1 for w in enumerate_unimodal(n)
               if all(v != i + 1 for i, v in enumerate(w.permutation)))


def order_divides_count(n: int, m: int) -> int:
    """How many unimodal sigma of size n satisfy sigma^m = identity."""
    # sigma^m = 1 iff every cycle length divides m
    return sum(1 for w in enumerate_unimodal(n)
               if all(m % c == 0 for c in w.permutation.cycle_type()))


def signed_sums(n: int) -> dict:
    """sum of (-1)^k over unimodal permutations of each cycle type."""
    out: Counter = Counter()
    for w in enumerate_unimodal(n):
        out[w.permutation.cycle_type()] += w.sign
    return dict(out)


def nu_q_sums(n: int) -> dict:
    """sum of (-q)^k over unimodal permutations of each cycle type."""
    out: dict = defaultdict(lambda: [0] * n)
    for w in enumerate_unimodal(n):
        out[w.permutation.cycle_type()][w.k] += w.sign
    return {a: Poly(c) for a, c in out.items()}


class GroupAlgebraElement(dict):
    """Finite formal sum of permutations of a fixed size with Poly2 coefficients."""

    def __init__(self, n: int, terms=None):
        super().__init__()
        self.n = n
        for sigma, c in (terms or {}).items():
            self.add_term(sigma, c)

    def add_term(self, sigma: Permutation, c) -> None:
        if len(sigma) != self.n:
            raise ValueError(f"permutation {sigma} does not have length {self.n}")
        total = self.get(sigma, 0) + c
        if total:
            self[sigma] = total
        else:
            self.pop(sigma, None)

    def merge(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = GroupAlgebraElement(self.n, self)
        for sigma, c in other.items():
            out.add_term(sigma, c)
        return out

    def coefficient(self, sigma) -> Poly2:
        return self.get(tuple(sigma), Poly2())


def unimodal_product(n: int, orientation: str = LEFT_TO_RIGHT) -> GroupAlgebraElement:
    """U_n(x) U_n(y) = sum over pairs of x^k(sigma) y^k(tau) sigma*tau."""
    _check_n(n, MAX_PRODUCT)
    if orientation not in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
        raise ValueError(f"unknown orientation {orientation!r}")
    witnesses = list(enumerate_unimodal(n))
    xs = [Poly2.monomial(w.k, 0) for w in witnesses]
    ys = [Poly2.monomial(0, w.k) for w in witnesses]
    raw: dict = defaultdict(lambda: Poly2())
    for sigma, xw in zip(witnesses, xs):
        for tau, yw in zip(witnesses, ys):
            if orientation == LEFT_TO_RIGHT:
                prod = compose(tau.permutation, sigma.permutation)
            else:
                prod = compose(sigma.permutation, tau.permutation)
            raw[prod] = raw[prod] + xw * yw
    return GroupAlgebraElement(n, raw)


def classify_shape(shape: Composition) -> tuple:
    """Return ("unimodal", r), ("bimodal", r, s, t) or ("other",).

    Hooks (n-r, 1^r) are tried first; a bimodal shape (a, 1^t, s, 1^r) needs
    exactly one part s >= 2 after the first position.
    """
    shape = tuple(shape)
    if all(p == 1 for p in shape[1:]):
        return ("unimodal", len(shape) - 1)
    big = [i for i in range(1, len(shape)) if shape[i] >= 2]
    if len(big) == 1:
        j = big[0]
        return ("bimodal", len(shape) - j - 1, shape[j], j - 1)
    return ("other",)


def kreweras_coefficient(sigma, n: int | None = None) -> Poly2:
    """Closed-form coefficient of sigma in U_n(x) U_n(y).

    unimodal (n-r, 1^r):          y^r [r+1]_{x/y} + x^(r+1) y [n-r-1]_{xy}
    bimodal (n-r-s-t, 1^t, s, 1^r): x^(r+s-1) y^(t+s-1) (y+1)
    anything else:                 0
    """
    sigma = Permutation(sigma)
    n = len(sigma) if n is None else n
    if len(sigma) != n:
        raise ValueError(f"permutation {sigma} does not have length {n}")
    x, y = Poly2.x(), Poly2.y()
    kind = classify_shape(sigma.descent_composition())
    if kind[0] == "unimodal":
        r = kind[1]
        head = sum((Poly2.monomial(i, r - i) for i in range(r + 1)), Poly2())
        return head + Poly2.monomial(r + 1, 1) * q_integer(n - r - 1, x * y)
    if kind[0] == "bimodal":
        _, r, s, t = kind
        return Poly2.monomial(r + s - 1, t + s - 1) * (y + 1)
    return Poly2()


def kreweras_coefficient_as_printed(sigma, n: int | None = None) -> Poly2:
    """Same as :func:`kreweras_coefficient` but with x^(r+1) [n-r-1]_{xy} as the
    second unimodal term, without the factor y."""
    sigma = Permutation(sigma)
    n = len(sigma) if n is None else n
    kind = classify_shape(sigma.descent_composition())
    if kind[0] == "unimodal":
        r = kind[1]
        head = sum((Poly2.monomial(i, r - i) for i in range(r + 1)), Poly2())
        return head + Poly2.monomial(r + 1, 0) * q_integer(n - r - 1, Poly2.x() * Poly2.y())
    return kreweras_coefficient(sigma, n)


def all_permutations(n: int) -> Iterator[Permutation]:
    for word in permutations(range(1, n + 1)):
        yield Permutation._trusted(word)
