"""
Partitions, compositions, permutations and a little number theory.

Everything here is an immutable tuple subclass, so values hash and compare
like plain tuples and can be used directly as dictionary keys.

>>> Permutation((4, 6, 2, 8, 7, 1, 3, 5)).descent_composition()
Composition((2, 2, 1, 3))
>>> Permutation((2, 3, 4, 1)).cycle_type()
Partition((4,))
"""

from __future__ import annotations

__all__ = [
    "Partition", "Composition", "Permutation",
    "mobius", "divisors", "partitions_of", "iter_partitions",
    "count_partitions", "z_value", "descent_composition", "cycle_type",
    "compose", "compositions_of",
]

from collections import Counter
from collections.abc import Iterable, Iterator
from math import factorial


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> a = Partition((2, 1, 1))
    >>> a.weight, a.length, a.multiplicities, a.z
    (4, 3, {2: 1, 1: 2}, 4)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(type(p) is not int or p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> Partition:
        # skips validation; callers guarantee sorted positive parts
        return tuple.__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Sort arbitrary positive parts into a partition."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> Partition:
        return cls.from_parts(i for i, a in mult.items() for _ in range(a))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Map part value i to its multiplicity a_i, largest part first."""
        return dict(Counter(self))

    @property
    def z(self) -> int:
        return z_value(self)

    def is_odd(self) -> bool:
        """True when every part is odd."""
        return all(p % 2 for p in self)

    def union(self, other: Iterable[int]) -> Partition:
        return Partition._trusted(tuple(sorted(self + tuple(other), reverse=True)))

    def scaled(self, j: int) -> Partition:
        """Multiply every part by j."""
        return Partition._trusted(tuple(j * p for p in self))


class Composition(tuple):
    """An ordered tuple of positive integers, the shape of a descent set."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(type(p) is not int or p <= 0 for p in parts):
            raise ValueError(f"composition parts must be positive integers: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    def descent_set(self) -> frozenset[int]:
        """Partial sums, excluding the total.

        >>> sorted(Composition((2, 2, 1, 3)).descent_set())
        [2, 4, 5]
        """
        out, s = [], 0
        for p in self[:-1]:
            s += p
            out.append(s)
        return frozenset(out)

    @classmethod
    def from_descent_set(cls, descents: Iterable[int], n: int) -> Composition:
        """Inverse of :meth:`descent_set` for a set inside {1..n-1}."""
        ds = sorted(set(descents))
        if ds and (ds[0] < 1 or ds[-1] > n - 1):
            raise ValueError(f"descent set {ds} is not inside 1..{n - 1}")
        points = [0, *ds, n]
        return cls(points[i + 1] - points[i] for i in range(len(points) - 1))

    def is_hook(self) -> bool:
        """Shape (n-k, 1^k)."""
        return all(p == 1 for p in self[1:])

    @classmethod
    def hook(cls, n: int, k: int) -> Composition:
        if not 0 <= k <= n - 1:
            raise ValueError(f"hook parameter k={k} out of range for n={n}")
        return cls((n - k,) + (1,) * k)


class Permutation(tuple):
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int]):
        word = tuple(word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        return super().__new__(cls, word)

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> Permutation:
        return tuple.__new__(cls, word)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"2341"`` (single digits) or ``"2,3,4,1"``."""
        text = text.strip()
        if "," in text or " " in text:
            return cls(int(t) for t in text.replace(",", " ").split())
        return cls(int(c) for c in text)

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"

    def __str__(self) -> str:
        if len(self) < 10:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __call__(self, i: int) -> int:
        return self[i - 1]

    @property
    def n(self) -> int:
        return len(self)

    def descents(self) -> frozenset[int]:
        return frozenset(i + 1 for i in range(len(self) - 1) if self[i] > self[i + 1])

    def descent_composition(self) -> Composition:
        return descent_composition(self)

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def is_unimodal(self) -> bool:
        return self.descent_composition().is_hook()

    def max_position(self) -> int:
        return self.index(len(self)) + 1

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self):
            inv[v - 1] = i + 1
        return Permutation._trusted(tuple(inv))

    def power(self, m: int) -> Permutation:
        result = Permutation.identity(len(self))
        for _ in range(m):
            result = compose(self, result)
        return result


def mobius(n: int) -> int:
    """Möbius function by trial division.

    >>> [mobius(n) for n in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def iter_partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in reverse-lexicographic order, generated iteratively.

    >>> [tuple(p) for p in iter_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    if n == 0:
        yield Partition._trusted(())
        return
    parts = [n]
    while True:
        yield Partition._trusted(tuple(parts))
        # rightmost part larger than 1
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        v = parts[k] - 1
        rest = len(parts) - k  # ones after k, plus the unit taken from parts[k]
        del parts[k:]
        parts.append(v)
        q, r = divmod(rest, v)
        parts.extend([v] * q)
        if r:
            parts.append(r)


def partitions_of(n: int) -> list[Partition]:
    return list(iter_partitions(n))


def count_partitions(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence, independent of the generator."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def compositions_of(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n, ordered by descent-set bitmask."""
    if n < 1:
        return
    for mask in range(1 << (n - 1)):
        yield Composition.from_descent_set(
            (i + 1 for i in range(n - 1) if mask >> i & 1), n)


def z_value(alpha: Iterable[int]) -> int:
    """Centralizer order prod_i i^{a_i} a_i!.

    >>> z_value((2, 2)), z_value((3, 1)), z_value(())
    (8, 3, 1)
    """
    z = 1
    for i, a in Counter(alpha).items():
        z *= i ** a * factorial(a)
    return z


def descent_composition(sigma: Permutation) -> Composition:
    n = len(sigma)
    if n == 0:
        return Composition(())
    parts, run = [], 1
    for i in range(n - 1):
        if sigma[i] > sigma[i + 1]:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(parts)


def cycle_type(sigma: Permutation) -> Partition:
    n = len(sigma)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = sigma[i - 1]
            length += 1
        lengths.append(length)
    return Partition._trusted(tuple(sorted(lengths, reverse=True)))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """The permutation i -> sigma(tau(i)).

    >>> compose(Permutation((2, 3, 1)), Permutation((2, 3, 1)))
    Permutation((3, 1, 2))
    """
    if len(sigma) != len(tau):
        raise ValueError(f"length mismatch: {len(sigma)} != {len(tau)}")
    return Permutation._trusted(tuple(sigma[t - 1] for t in tau))
