"""
Exact polynomials over the rationals.

:class:`Poly` is a dense univariate polynomial in a named variable (``q`` or
``t``); :class:`Poly2` is a sparse bivariate polynomial in ``x, y``.  Both are
immutable, hashable and interoperate with ``int`` and ``Fraction`` scalars.
The truncated-series helpers at the bottom treat a :class:`Poly` as a power
series cut off at a given degree.
"""

from __future__ import annotations

__all__ = [
    "Poly", "Poly2", "ZERO_DEGREE",
    "trunc_mul", "trunc_exp", "trunc_log", "trunc_inverse", "trunc_pow",
    "q_integer",
]

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]

# degree reported for the zero polynomial
ZERO_DEGREE = -1


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class Poly:
    """Univariate polynomial with Fraction coefficients, lowest degree first.

    >>> q = Poly.var()
    >>> (1 - q) * (1 + q)
    Poly('1 - q^2')
    >>> ((1 - q) ** 3).coeffs
    (Fraction(1, 1), Fraction(-3, 1), Fraction(3, 1), Fraction(-1, 1))
    """

    __slots__ = ("coeffs", "name", "_hash")

    def __init__(self, coeffs=(), name: str = "q"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.name = name
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list, name: str) -> Poly:
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        p.name = name
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str = "q") -> Poly:
        return cls._raw([Fraction(0), Fraction(1)], name)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, name: str = "q") -> Poly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls._raw([Fraction(0)] * k + [_frac(c)], name)

    @classmethod
    def const(cls, c: Scalar, name: str = "q") -> Poly:
        return cls._raw([_frac(c)], name)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.name != self.name:
                raise TypeError(
                    f"cannot mix polynomials in {self.name} and {other.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly._raw([Fraction(other)], self.name)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.name == other.name and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the scalar they equal
            self._hash = hash(self.coeffs[0]) if len(self.coeffs) == 1 else (
                0 if not self.coeffs else hash((self.name, self.coeffs)))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out, self.name)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw([-c for c in self.coeffs], self.name)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._raw([], self.name)
            return Poly._raw([c * other for c in self.coeffs], self.name)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw([], self.name)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly._raw(out, self.name)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, m: int) -> Poly:
        if m < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly.const(1, self.name), self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; ``value`` may itself be a Poly."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def negate_variable(self) -> Poly:
        """Substitute q -> -q."""
        return Poly._raw([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)],
                         self.name)

    def divide_exact(self, other: Poly) -> Poly:
        """Quotient of an exact polynomial division; raises if a remainder is left."""
        num = list(self.coeffs)
        den = other.coeffs
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if len(num) < len(den):
            if any(num):
                raise ArithmeticError("polynomial division is not exact")
            return Poly._raw([], self.name)
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        lead = den[-1]
        for i in range(len(quot) - 1, -1, -1):
            c = num[i + len(den) - 1] / lead
            quot[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        if any(num):
            raise ArithmeticError("polynomial division is not exact")
        return Poly._raw(quot, self.name)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self, length: int | None = None) -> list[int]:
        """Integer coefficient list, zero padded to ``length``."""
        if not self.is_integral():
            raise ArithmeticError(f"non-integral coefficients in {self}")
        out = [int(c) for c in self.coeffs]
        if length is not None:
            out += [0] * (length - len(out))
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else self.name if k == 1 else f"{self.name}^{k}"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


class Poly2:
    """Sparse polynomial in x, y with Fraction coefficients.

    >>> x, y = Poly2.x(), Poly2.y()
    >>> (x + y) * (x + y) == x * x + 2 * x * y + y * y
    True
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        self.terms: dict[tuple[int, int], Fraction] = {
            k: _frac(v) for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Poly2:
        p = object.__new__(cls)
        p.terms = {k: v for k, v in terms.items() if v}
        p._hash = None
        return p

    @classmethod
    def x(cls) -> Poly2:
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> Poly2:
        return cls._raw({(0, 1): Fraction(1)})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> Poly2:
        return cls._raw({(i, j): _frac(c)})

    @classmethod
    def const(cls, c: Scalar) -> Poly2:
        return cls._raw({(0, 0): _frac(c)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other) -> Poly2 | None:
        if isinstance(other, Poly2):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly2.const(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly2._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly2:
        return Poly2._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in o.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return Poly2._raw(out)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> Poly2:
        result = Poly2.const(1)
        for _ in range(m):
            result = result * self
        return result

    def __call__(self, x, y):
        return sum((c * x ** i * y ** j for (i, j), c in self.terms.items()), Fraction(0))

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        """Terms ordered by total degree, then by x-degree descending."""
        return [(i, j, c) for (i, j), c in
                sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))]

    def __repr__(self) -> str:
        return f"Poly2({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, j, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("x", i), ("y", j)) if e)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def q_integer(m: int, base):
    """The bracket [m]_base = 1 + base + ... + base^(m-1); zero for m <= 0."""
    total = 0
    power = 1
    for _ in range(max(m, 0)):
        total = total + power
        power = power * base
    return total


# Truncated univariate power series.  A Poly stands for its power series
# modulo t^(N+1); every helper returns a Poly of degree at most N.

def _cut(p: Poly, N: int) -> Poly:
    return Poly._raw(list(p.coeffs[:N + 1]), p.name)


def trunc_mul(a: Poly, b: Poly, N: int) -> Poly:
    ac, bc = a.coeffs[:N + 1], b.coeffs[:N + 1]
    out = [Fraction(0)] * min(N + 1, max(len(ac) + len(bc) - 1, 0))
    for i, ai in enumerate(ac):
        if ai:
            for j in range(min(len(bc), N + 1 - i)):
                out[i + j] += ai * bc[j]
    return Poly._raw(out, a.name)


def trunc_pow(a: Poly, m: int, N: int) -> Poly:
    result = Poly.const(1, a.name)
    for _ in range(m):
        result = trunc_mul(result, a, N)
    return result


def trunc_inverse(a: Poly, N: int) -> Poly:
    """1/a modulo t^(N+1); needs a nonzero constant term."""
    if not a[0]:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv = [Fraction(0)] * (N + 1)
    inv[0] = 1 / a[0]
    for n in range(1, N + 1):
        s = sum((a[k] * inv[n - k] for k in range(1, min(n, a.degree) + 1)), Fraction(0))
        inv[n] = -s * inv[0]
    return Poly._raw(inv, a.name)


def trunc_exp(f: Poly, N: int) -> Poly:
    """exp(f) modulo t^(N+1) via n F_n = sum_k k f_k F_(n-k)."""
    if f[0]:
        raise ValueError("exp needs a series with zero constant term")
    F = [Fraction(0)] * (N + 1)
    F[0] = Fraction(1)
    for n in range(1, N + 1):
        s = sum((k * f[k] * F[n - k] for k in range(1, min(n, f.degree) + 1)),
                Fraction(0))
        F[n] = s / n
    return Poly._raw(F, f.name)


def trunc_log(F: Poly, N: int) -> Poly:
    """log(F) modulo t^(N+1); needs constant term 1."""
    if F[0] != 1:
        raise ValueError("log needs a series with constant term 1")
    f = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        s = n * F[n] - sum((k * f[k] * F[n - k] for k in range(1, n)), Fraction(0))
        f[n] = s / n
    return Poly._raw(f, F.name)
