"""Compare U_n(x) U_n(y) in both multiplication orders against the closed form.

For each n, counts the permutations whose product coefficient disagrees with
the closed form (with and without the factor y in the unimodal term).

    python scripts/product_orientation.py 7
"""

import argparse

from unimodal import oracle


def mismatches(product, formula, n):
    return sum(1 for s in oracle.all_permutations(n)
               if product.coefficient(s) != formula(s, n))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n_max", type=int, nargs="?", default=6)
    args = parser.parse_args()
    print(f"{'n':>2} {'orientation':<14} {'closed form':>12} {'without y':>10}")
    for n in range(1, min(args.n_max, oracle.MAX_PRODUCT) + 1):
        for orientation in (oracle.LEFT_TO_RIGHT, oracle.RIGHT_TO_LEFT):
            product = oracle.unimodal_product(n, orientation)
            a = mismatches(product, oracle.kreweras_coefficient, n)
            b = mismatches(product, oracle.kreweras_coefficient_as_printed, n)
            print(f"{n:>2} {orientation:<14} {a:>12} {b:>10}")


if __name__ == "__main__":
    main()
