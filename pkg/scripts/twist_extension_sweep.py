#!/usr/bin/env python3
"""Sweep the twist-extension scenario over coprime torus-knot parameters.

For each coprime pair 2 <= p < q <= bound, print the extension subgroup
index, the torus-knot signature driving the companion obstruction, and
the combined verdict.

Usage: python scripts/twist_extension_sweep.py [--bound 7]
"""
import argparse
from math import gcd

from dehn4 import build_scenario, run_scenario
from dehn4.seifert import signature, torus_knot_seifert


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=7)
    args = parser.parse_args()
    print(f"{'p':>3} {'q':>3} {'index':>6} {'sigma(T(p,q))':>14} verdict")
    for p in range(2, args.bound):
        for q in range(p + 1, args.bound + 1):
            if gcd(p, q) != 1:
                continue
            report = run_scenario(build_scenario("twist-extension", p=p, q=q))
            sub = next(
                t for t in report.trace if t.operation == "extension_subgroup"
            )
            sigma = signature(torus_knot_seifert(p, q))
            print(
                f"{p:>3} {q:>3} {sub.output['index']:>6} {sigma:>14} "
                f"{report.verdict.value}"
            )


if __name__ == "__main__":
    main()
