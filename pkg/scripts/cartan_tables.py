#!/usr/bin/env python3
"""Print the invariant Cartan matrices of the cubulated n-gons under their
dihedral and cyclic symmetry groups, one table per (n, group)."""

import argparse

from lrbkit import (GroupAction, PermGroup, build_cfpoi, cartan_invariants,
                    catzero_cube_lrb, cubulated_ngon)


def table(n, group_name):
    data, (rot, refl) = cubulated_ngon(n)
    cube = catzero_cube_lrb(data)
    gens = [rot, refl] if group_name == "dihedral" else [rot]
    G = PermGroup.close(gens, cube.semigroup.size)
    cf = build_cfpoi(GroupAction(cube.semigroup, G))
    out = cartan_invariants(cf)
    print("n=%d  %s group of order %d" % (n, group_name, G.order))
    for row in out["matrix"]:
        print("   ", row)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    for n in range(4, args.max_n + 1):
        for g in ("dihedral", "cyclic"):
            table(n, g)


if __name__ == "__main__":
    main()
