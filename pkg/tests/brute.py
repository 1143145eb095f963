"""Brute-force helpers shared by the tests, built straight from definitions."""

from itertools import permutations

from unimodal.combinatorics import Permutation


def is_unimodal_word(word) -> bool:
    """Increasing up to the maximum, decreasing after it."""
    m = word.index(max(word))
    return (all(word[i] < word[i + 1] for i in range(m))
            and all(word[i] > word[i + 1] for i in range(m, len(word) - 1)))


def brute_unimodal(n: int) -> list[Permutation]:
    """Unimodal permutations found by filtering all of S_n."""
    return [Permutation(w) for w in permutations(range(1, n + 1)) if is_unimodal_word(w)]
