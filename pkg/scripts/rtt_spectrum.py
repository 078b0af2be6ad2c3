#!/usr/bin/env python3
"""Random-to-top spectra over complete flags: boolean lattices up to a bound,
then the projective line over F_2.  Each row shows the eigenvalue, its
predicted multiplicity, and the interval derangement number behind it."""

import argparse
import time

from lrbkit import boolean_lattice, pg_lattice, random_to_top
from lrbkit.instances import _boolean_lattice_gens, _rank2_lattice_gens


def show(name, L, gens):
    t0 = time.time()
    rep = random_to_top(L, gens, instance=name)
    dt = time.time() - t0
    print("%s: %d flags, %s  (%.2fs)" %
          (name, rep.flag_count, "PASS" if rep.all_pass else "FAIL", dt))
    for lam in rep.eigenvalues:
        print("   eigenvalue %-3d multiplicity %d" % (lam, rep.multiplicities[lam]))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4,
                    help="largest boolean lattice (5 takes ~10s)")
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        gens, _ = _boolean_lattice_gens(n)
        show("boolean n=%d" % n, boolean_lattice(n), gens)
    L = pg_lattice(2, 2)
    gens, _ = _rank2_lattice_gens(L)
    show("projective line over F_2", L, gens)


if __name__ == "__main__":
    main()
