#!/usr/bin/env python3
"""Independent reference values for the enumcount test suites.

Plain Python integers and fractions, no shared code with the C++ library.
Run: python3 tests/oracle/oracle.py
"""
from fractions import Fraction
from math import comb, factorial
from itertools import product


def rational_counts(dmax):
    n = {1: 1}
    for d in range(2, dmax + 1):
        s = 0
        for d1 in range(1, d):
            d2 = d - d1
            s += n[d1] * n[d2] * (d1 * d1 * d2 * d2 * comb(3 * d - 4, 3 * d1 - 2)
                                  - d1 ** 3 * d2 * comb(3 * d - 4, 3 * d1 - 1))
        n[d] = s
    return n


def triple_point(d, n):
    v = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d) * n[d]
    for d1 in range(1, d):
        d2 = d - d1
        v -= Fraction(d1 * d2 * (d - 6) + 2 * d, 4 * d) * comb(3 * d - 2, 3 * d1 - 1) * d1 * d2 * n[d1] * n[d2]
    return v


def genus2(d, n):
    v = Fraction((d - 1) * (d - 2) * (d - 3), 2 * d) * n[d]
    for d1 in range(1, d):
        d2 = d - d1
        p = d1 * d2
        v += Fraction(p * (p * d - 6 * d + 18) - 4 * d, 12 * d) * comb(3 * d - 2, 3 * d1 - 1) * p * n[d1] * n[d2]
    return v


def genus2_cases(d, n):
    case_i = Fraction(0)
    for d1 in range(1, d):
        d2 = d - d1
        case_i += comb(d1 * d2, 3) * comb(3 * d - 2, 3 * d1 - 1) * n[d1] * n[d2]
    return case_i / 2, triple_point(d, n)


def leading_term(g, d, n):
    parts = 2 * (g - 1)
    s = Fraction(0)
    for comp in product(range(1, d + 1), repeat=parts):
        if sum(comp) != d:
            continue
        t = Fraction(1)
        for di in comp:
            t *= Fraction(di ** 3 * n[di], factorial(3 * di - 1))
        s += t
    return factorial(3 * d - parts) * s


if __name__ == "__main__":
    n = rational_counts(30)
    for d in range(1, 11):
        print(f"N_{d} = {n[d]}")
    print(f"N_20 = {n[20]}")
    print(f"N_30 = {n[30]}")
    for d in range(3, 9):
        print(f"Ntilde_{d} = {triple_point(d, n)}")
    for d in range(4, 9):
        ci, t = genus2_cases(d, n)
        print(f"N2_{d} = {genus2(d, n)}  case_i = {ci}  Ntilde = {t}  sum = {ci + t}")
    print("gterm(2,2) =", leading_term(2, 2, n))
    print("gterm(2,4) =", leading_term(2, 4, n))
    print("gterm(3,4) =", leading_term(3, 4, n))
    print("gterm(3,6) =", leading_term(3, 6, n))
    print("gterm(4,9) =", leading_term(4, 9, n))
