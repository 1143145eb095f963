"""
Truncated symmetric functions in the power-sum basis.

A :class:`SymSeries` is a finite map from partitions to coefficients, cut off
at a fixed degree ``N``; the term ``{alpha: c}`` stands for ``c * p_alpha``.
Coefficients live in one of three exact rings:

========== =====================================
``QQ``     ``int`` / ``Fraction``
``QQ[q]``  :class:`~unimodal.poly.Poly` (any single variable)
``QQ[x,y]`` :class:`~unimodal.poly.Poly2`
========== =====================================

``QQ`` mixes freely with the polynomial rings; two different polynomial rings
never mix.  The truncation degree is checked on every binary operation.

>>> h2 = complete_h(2, 4)
>>> print(h2)
1/2*p[2] + 1/2*p[1,1]
>>> scalar_product(h2, h2)
Fraction(1, 1)
"""

from __future__ import annotations

__all__ = [
    "SymSeries", "RingMismatch", "TruncationMismatch",
    "power_sum", "complete_h", "witt_ell", "plethysm", "L_function",
    "ribbon", "ribbon_determinant", "hook_schur", "scalar_product",
    "specialize", "scale_alphabet_one_minus_q", "series_exp", "series_log",
    "canonical_key", "ring_of",
]

from collections.abc import Callable, Iterable, Mapping
from fractions import Fraction

from .combinatorics import (
    Composition, Partition, divisors, iter_partitions, mobius, z_value,
)
from .poly import Poly, Poly2

QQ = "QQ"


class RingMismatch(TypeError):
    pass


class TruncationMismatch(ValueError):
    pass


def ring_of(c) -> str:
    if isinstance(c, (int, Fraction)):
        return QQ
    if isinstance(c, Poly):
        return f"QQ[{c.name}]"
    if isinstance(c, Poly2):
        return "QQ[x,y]"
    raise TypeError(f"unsupported coefficient {c!r}")


def _join_rings(a: str, b: str) -> str:
    if a == b or b == QQ:
        return a
    if a == QQ:
        return b
    raise RingMismatch(f"incompatible coefficient rings {a} and {b}")


def canonical_key(alpha: tuple[int, ...]):
    """Sort key: by weight, then reverse-lexicographic within a weight."""
    return (sum(alpha), tuple(-p for p in alpha))


def _merge(a: tuple, b: tuple) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return Partition._trusted(tuple(sorted(a + b, reverse=True)))


class SymSeries:
    """Element of Sym truncated above degree ``N``, on the power-sum basis."""

    __slots__ = ("N", "terms", "ring")

    def __init__(self, N: int, terms: Mapping | None = None, ring: str | None = None):
        if N < 0:
            raise ValueError(f"truncation degree must be >= 0, got {N}")
        self.N = N
        clean: dict[Partition, object] = {}
        inferred = QQ
        for key, c in (terms or {}).items():
            alpha = key if isinstance(key, Partition) else Partition(key)
            if alpha.weight > N:
                raise TruncationMismatch(
                    f"term p{list(alpha)} has weight above the truncation {N}")
            if c:
                clean[alpha] = c
                inferred = _join_rings(inferred, ring_of(c))
        self.terms = clean
        self.ring = _join_rings(ring, inferred) if ring else inferred

    @classmethod
    def _raw(cls, N: int, terms: dict, ring: str) -> SymSeries:
        s = object.__new__(cls)
        s.N = N
        s.terms = {k: v for k, v in terms.items() if v}
        s.ring = ring
        return s

    @classmethod
    def zero(cls, N: int, ring: str = QQ) -> SymSeries:
        return cls._raw(N, {}, ring)

    @classmethod
    def one(cls, N: int) -> SymSeries:
        return cls._raw(N, {Partition._trusted(()): Fraction(1)}, QQ)

    # -- inspection --------------------------------------------------------

    def coefficient(self, alpha: Iterable[int]):
        return self.terms.get(tuple(sorted(alpha, reverse=True)), Fraction(0))

    def __getitem__(self, alpha):
        return self.coefficient(alpha)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> list[tuple[Partition, object]]:
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def component(self, n: int) -> SymSeries:
        """The homogeneous part of degree n."""
        return SymSeries._raw(
            self.N, {k: v for k, v in self.terms.items() if sum(k) == n}, self.ring)

    def is_homogeneous(self, n: int) -> bool:
        return all(sum(k) == n for k in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"SymSeries(N={self.N}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for alpha, c in self.items():
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if not alpha:
                out.append(cs)
            else:
                mono = "p[" + ",".join(map(str, alpha)) + "]"
                out.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: SymSeries) -> str:
        if self.N != other.N:
            raise TruncationMismatch(
                f"truncation degrees differ: {self.N} != {other.N}")
        return _join_rings(self.ring, other.ring)

    def __add__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        ring = self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SymSeries._raw(self.N, out, ring)

    def __neg__(self) -> SymSeries:
        return SymSeries._raw(self.N, {k: -v for k, v in self.terms.items()}, self.ring)

    def __sub__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> SymSeries:
        """Multiply every coefficient by a ring scalar."""
        ring = _join_rings(self.ring, ring_of(c))
        return SymSeries._raw(self.N, {k: v * c for k, v in self.terms.items()}, ring)

    def __mul__(self, other):
        if isinstance(other, SymSeries):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, Poly, Poly2)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly, Poly2)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, m: int) -> SymSeries:
        result = SymSeries.one(self.N)
        for _ in range(m):
            result = result * self
        return result

    def truncate(self, M: int) -> SymSeries:
        """Explicitly drop terms above degree M (M <= N)."""
        if M > self.N:
            raise TruncationMismatch(f"cannot raise truncation from {self.N} to {M}")
        return SymSeries._raw(
            M, {k: v for k, v in self.terms.items() if sum(k) <= M}, self.ring)

    def map_coefficients(self, fn: Callable, ring: str | None = None) -> SymSeries:
        terms = {k: fn(v) for k, v in self.terms.items()}
        out = SymSeries._raw(self.N, terms, QQ)
        inferred = QQ
        for c in out.terms.values():
            inferred = _join_rings(inferred, ring_of(c))
        out.ring = ring or inferred
        return out


def add(f: SymSeries, g: SymSeries) -> SymSeries:
    return f + g


def multiply(f: SymSeries, g: SymSeries) -> SymSeries:
    """Truncated product; terms of weight above N are dropped."""
    ring = f._check(g)
    N = f.N
    gb = sorted(((sum(k), k, v) for k, v in g.terms.items()), key=lambda t: t[0])
    out: dict = {}
    for ka, va in f.terms.items():
        wa = sum(ka)
        for wb, kb, vb in gb:
            if wa + wb > N:
                break
            key = _merge(ka, kb)
            prod = va * vb
            out[key] = out[key] + prod if key in out else prod
    return SymSeries._raw(N, out, ring)


# -- named families ----------------------------------------------------------

def power_sum(alpha: Iterable[int], N: int, coeff=1) -> SymSeries:
    """The single term coeff * p_alpha."""
    if isinstance(coeff, int):
        coeff = Fraction(coeff)
    return SymSeries(N, {Partition.from_parts(alpha): coeff})


def complete_h(n: int, N: int) -> SymSeries:
    """h_n = sum over partitions of n of p_alpha / z_alpha."""
    if n < 0:
        raise ValueError(f"h_n needs n >= 0, got {n}")
    if n > N:
        raise TruncationMismatch(f"h_{n} does not fit under truncation {N}")
    return SymSeries._raw(
        N, {a: Fraction(1, z_value(a)) for a in iter_partitions(n)}, QQ)


def witt_ell(n: int, N: int) -> SymSeries:
    """ell_n = (1/n) sum_{d | n} mu(d) p_d^(n/d)."""
    if n < 1:
        raise ValueError(f"ell_n needs n >= 1, got {n}")
    if n > N:
        raise TruncationMismatch(f"ell_{n} does not fit under truncation {N}")
    terms = {}
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            terms[Partition._trusted((d,) * (n // d))] = Fraction(mu, n)
    return SymSeries._raw(N, terms, QQ)


def _dilate(f: SymSeries, j: int) -> SymSeries:
    """p_j o f: every power-sum index multiplied by j, coefficients kept."""
    return SymSeries._raw(
        f.N, {k.scaled(j): v for k, v in f.terms.items() if j * sum(k) <= f.N}, f.ring)


def plethysm(g: SymSeries, f: SymSeries) -> SymSeries:
    """g o f, for g with rational coefficients.

    >>> print(plethysm(power_sum((2,), 6), witt_ell(2, 6)))
    -1/2*p[4] + 1/2*p[2,2]
    """
    if g.ring != QQ:
        raise RingMismatch("plethysm needs an outer function with rational coefficients")
    f._check(g)
    N = f.N
    dilated: dict[int, SymSeries] = {}
    powers: dict[tuple[int, int], SymSeries] = {}

    def power_of(j: int, m: int) -> SymSeries:
        if (j, m) not in powers:
            if j not in dilated:
                dilated[j] = _dilate(f, j)
            powers[(j, m)] = (dilated[j] if m == 1
                              else multiply(power_of(j, m - 1), dilated[j]))
        return powers[(j, m)]

    result = SymSeries.zero(N, f.ring)
    for beta, c in g.terms.items():
        term = SymSeries.one(N)
        for j, m in Partition._trusted(beta).multiplicities.items():
            term = multiply(term, power_of(j, m))
            if not term:
                break
        if term:
            result = result + term.scale(c)
    return result


def L_function(alpha: Iterable[int], N: int) -> SymSeries:
    """L_alpha = prod_i h_{a_i} o ell_i, with a_i the multiplicity of i in alpha."""
    alpha = Partition.from_parts(alpha)
    if alpha.weight > N:
        raise TruncationMismatch(f"|alpha| = {alpha.weight} exceeds truncation {N}")
    result = SymSeries.one(N)
    for i, a in sorted(alpha.multiplicities.items()):
        result = multiply(result, plethysm(complete_h(a, N), witt_ell(i, N)))
    return result


def ribbon(composition: Iterable[int], N: int) -> SymSeries:
    """Ribbon Schur function via right expansion of the h-determinant.

    r_(i1..im) = r_(i1..i(m-1)) h_im - r_(i1..i(m-2), i(m-1)+im)
    """
    comp = tuple(Composition(composition))
    if sum(comp) > N:
        raise TruncationMismatch(f"|I| = {sum(comp)} exceeds truncation {N}")
    memo: dict[tuple, SymSeries] = {}

    def r(c: tuple) -> SymSeries:
        if c in memo:
            return memo[c]
        if not c:
            out = SymSeries.one(N)
        elif len(c) == 1:
            out = complete_h(c[0], N)
        else:
            out = multiply(r(c[:-1]), complete_h(c[-1], N)) - r(c[:-2] + (c[-2] + c[-1],))
        memo[c] = out
        return out

    return r(comp)


def _det(matrix: list[list[SymSeries | int]], N: int) -> SymSeries:
    """Laplace expansion along the first column, skipping zero entries."""
    size = len(matrix)
    if size == 0:
        return SymSeries.one(N)
    total = SymSeries.zero(N)
    for i in range(size):
        entry = matrix[i][0]
        if isinstance(entry, int):
            if entry == 0:
                continue
            entry = SymSeries.one(N).scale(entry)
        minor = [row[1:] for k, row in enumerate(matrix) if k != i]
        term = multiply(entry, _det(minor, N))
        total = total - term if i % 2 else total + term
    return total


def ribbon_determinant(composition: Iterable[int], N: int) -> SymSeries:
    """Ribbon Schur function as the literal determinant of h's.

    Row a, column b holds h_(i_(a+1) + ... + i_(b+1)) for a <= b, 1 on the
    subdiagonal and 0 below it.
    """
    comp = tuple(Composition(composition))
    if sum(comp) > N:
        raise TruncationMismatch(f"|I| = {sum(comp)} exceeds truncation {N}")
    m = len(comp)
    matrix: list[list[SymSeries | int]] = []
    for a in range(m):
        row: list[SymSeries | int] = []
        for b in range(m):
            if a <= b:
                row.append(complete_h(sum(comp[a:b + 1]), N))
            elif a == b + 1:
                row.append(1)
            else:
                row.append(0)
        matrix.append(row)
    return _det(matrix, N)


def hook_schur(n: int, k: int, N: int) -> SymSeries:
    """s_(n-k, 1^k), the ribbon of a hook composition."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"hook (n-k, 1^k) needs 0 <= k <= n-1, got n={n}, k={k}")
    return ribbon(Composition.hook(n, k), N)


def scalar_product(f: SymSeries, g: SymSeries):
    """<f, g> with <p_alpha, p_beta> = z_alpha if alpha == beta else 0."""
    _join_rings(f.ring, g.ring)
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    total = Fraction(0)
    for alpha, c in small.terms.items():
        if alpha in big.terms:
            total = total + c * big.terms[alpha] * z_value(alpha)
    return total


# -- specializations ---------------------------------------------------------

_RULES = {
    "1-q": ("q", lambda d: 1 - Poly.monomial(d, name="q")),
    "1+q": ("q", lambda d: 1 + Poly.monomial(d, name="q")),
    "t": ("t", lambda d: Poly.monomial(d, name="t")),
}


def specialize(f: SymSeries, rule: str) -> Poly:
    """Substitute every p_d by 1-q^d, 1+q^d or t^d and expand.

    >>> specialize(witt_ell(4, 4), "1-q")
    Poly('-q + 2*q^2 - q^3')
    """
    if rule not in _RULES:
        raise ValueError(f"unknown specialization {rule!r}; choose from {sorted(_RULES)}")
    if f.ring != QQ:
        raise RingMismatch("specialize needs rational coefficients")
    name, image = _RULES[rule]
    cache: dict[int, Poly] = {}
    total = Poly((), name)
    for alpha, c in f.terms.items():
        term = Poly.const(c, name)
        for d in alpha:
            if d not in cache:
                cache[d] = image(d)
            term = term * cache[d]
        total = total + term
    return total


def scale_alphabet_one_minus_q(f: SymSeries) -> SymSeries:
    """The dilation X -> (1-q)X: p_alpha -> prod_i (1 - q^alpha_i) p_alpha."""
    if f.ring != QQ:
        raise RingMismatch("alphabet scaling needs rational coefficients")
    out = {}
    for alpha, c in f.terms.items():
        factor = Poly.const(c)
        for d in alpha:
            factor = factor * (1 - Poly.monomial(d))
        out[alpha] = factor
    return SymSeries._raw(f.N, out, "QQ[q]")


# -- exp / log ---------------------------------------------------------------

def _graded(f: SymSeries) -> list[dict]:
    parts: list[dict] = [dict() for _ in range(f.N + 1)]
    for k, v in f.terms.items():
        parts[sum(k)][k] = v
    return parts


def _mul_parts(a: dict, b: dict, out: dict, scale) -> None:
    for ka, va in a.items():
        sa = va * scale
        for kb, vb in b.items():
            key = _merge(ka, kb)
            prod = sa * vb
            out[key] = out[key] + prod if key in out else prod


def series_exp(f: SymSeries) -> SymSeries:
    """exp(f) for f without constant term, degree by degree.

    Uses n F_n = sum_k k f_k F_(n-k) on homogeneous components, which is the
    logarithmic derivative with respect to the grading.
    """
    if () in f.terms:
        raise ValueError("series_exp needs a zero constant term")
    fs = _graded(f)
    F: list[dict] = [{Partition._trusted(()): Fraction(1)}]
    for n in range(1, f.N + 1):
        acc: dict = {}
        for k in range(1, n + 1):
            if fs[k] and F[n - k]:
                _mul_parts(fs[k], F[n - k], acc, Fraction(k, n))
        F.append({key: v for key, v in acc.items() if v})
    terms = {k: v for part in F for k, v in part.items()}
    return SymSeries._raw(f.N, terms, f.ring)


def series_log(F: SymSeries) -> SymSeries:
    """log(F) for F with constant term 1."""
    if F.terms.get(()) != 1:
        raise ValueError("series_log needs constant term 1")
    Fs = _graded(F)
    fs: list[dict] = [{}]
    for n in range(1, F.N + 1):
        acc: dict = dict(Fs[n])
        for k in range(1, n):
            if fs[k] and Fs[n - k]:
                _mul_parts(fs[k], Fs[n - k], acc, Fraction(-k, n))
        fs.append({key: v for key, v in acc.items() if v})
    terms = {k: v for part in fs for k, v in part.items()}
    return SymSeries._raw(F.N, terms, F.ring)
