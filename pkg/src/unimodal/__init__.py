"""Exact enumeration of unimodal permutations by cycle type.

Submodules:

- :mod:`unimodal.combinatorics`  partitions, compositions, permutations
- :mod:`unimodal.poly`           exact polynomials and truncated series
- :mod:`unimodal.symfunc`        symmetric functions on the power-sum basis
- :mod:`unimodal.theorems`       counting formulas and generating functions
- :mod:`unimodal.oracle`         brute-force enumeration and group-algebra products
- :mod:`unimodal.verify`         cross-verification suites behind ``unimodal verify``
"""

from .combinatorics import (
    Composition, Partition, Permutation, compose, cycle_type, descent_composition,
    mobius, partitions_of, z_value,
)
from .theorems import (
    bl_sum, c_value, no_k_cycle_series, order_divides_series, theorem1_series,
    theoremq_series, u_alpha, u_alpha_q,
)

__version__ = "0.1.0"
