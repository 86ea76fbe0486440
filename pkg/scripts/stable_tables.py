#!/usr/bin/env python3
"""Print the level-independent structure constants of the stable class
algebra, in both normalizations.

Usage:
    python3 scripts/stable_tables.py [--group NAME] [--cap K]

For every pair of types up to the cap, prints each target type with the
integer count d-tilde and the renormalized constant d.
"""

import argparse

from classalg.groups import load_group
from classalg.stable import stable_structure_constants, unnormalized_constant


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", default="trivial")
    ap.add_argument("--cap", type=int, default=2)
    args = ap.parse_args()
    g = load_group(args.group)
    table = stable_structure_constants(g, args.cap)
    for (rho, sigma), row in sorted(
        table.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key())
    ):
        if not row:
            continue
        print(f"{rho.label()} * {sigma.label()}")
        for nu, dt in sorted(row.items(), key=lambda kv: kv[0].sort_key()):
            d = unnormalized_constant(g, rho, sigma, nu, dt)
            print(f"    {nu.label():<24} d~ = {dt:<6} d = {d}")


if __name__ == "__main__":
    main()
