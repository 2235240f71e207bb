#!/usr/bin/env python3
"""Trace the collapsing-angle family on z = x^2 + y^2.

Prints, for a geometric ladder of step indices, the secant-plane coefficients
of both pairings next to their closed forms, the basis angle, and the
distance to the two spurious limit planes. The tangent plane at the origin
is z = 0; the secant planes head somewhere else entirely.
"""

import argparse
import math

from secantplane import Point2, counterexample_points, sample_function, secant_coefficients

ORIGIN = Point2(0.0, 0.0)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--decades", type=int, default=5,
                        help="largest k is 10^decades (default 5)")
    args = parser.parse_args()

    f = lambda x, y: x * x + y * y
    ks = [1, 2, 3, 5]
    for d in range(1, args.decades + 1):
        ks += [10 ** d, 3 * 10 ** d // 2]
    ks = sorted(k for k in set(ks) if k <= 10 ** args.decades)

    print(f"{'k':>8} {'sin(theta)':>12} {'ab alpha':>12} {'ab beta':>12} "
          f"{'|ab-(0,1)|':>12} {'ac beta':>12} {'|ac-(0,2)|':>12}")
    for k in ks:
        a, b, c = counterexample_points(k)
        ab = secant_coefficients(sample_function(f, ORIGIN, a, b))
        ac = secant_coefficients(sample_function(f, ORIGIN, a, c))
        dist_ab = max(abs(ab.alpha), abs(ab.beta - 1.0))
        dist_ac = max(abs(ac.alpha), abs(ac.beta - 2.0))
        print(f"{k:>8} {math.sin(1.0 / k):>12.4e} {ab.alpha:>12.6f} "
              f"{ab.beta:>12.6f} {dist_ab:>12.4e} {ac.beta:>12.6f} {dist_ac:>12.4e}")

    print()
    print("ab pairing -> z = y, ac pairing -> z = 2y; tangent plane is z = 0.")
    print("Both pairings violate sin(theta) >= p for every fixed p once "
          "k > 1/asin(p), which is how the collapse evades the uniform "
          "angle condition.")


if __name__ == "__main__":
    main()
