"""Print u_alpha and u_alpha(q) for every cycle type up to a given size.

    python scripts/cycle_type_tables.py 7
"""

import argparse

from unimodal.theorems import c_value, u_table


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n_max", type=int, nargs="?", default=6)
    args = parser.parse_args()
    for n in range(1, args.n_max + 1):
        table = u_table(n)
        print(f"n = {n}   |U_n| = {table.total()}   c_n = {c_value(n)}")
        for alpha, count, poly in table.rows():
            if count:
                print(f"  {str(tuple(alpha)):<24} {count:>6}   {poly}")
        print()


if __name__ == "__main__":
    main()
