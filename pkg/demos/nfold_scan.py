"""Fraction of periodic grid points for the 5-, 7- and 9-fold lozenge maps.

    python3 demos/nfold_scan.py [resolution] [max_iter]
"""

import sys

from pentadyn.nfold import DEFAULT_SYSTEMS, nine_fold_candidate, scan_periodic_fraction, verify_constants


def main(resolution=20, max_iter=5000):
    for n, sys_ in DEFAULT_SYSTEMS.items():
        rep = scan_periodic_fraction(sys_, resolution, max_iter)
        steps = ", ".join(f"<= {c}: {f:.3f}" for c, f in zip(rep.checkpoints, rep.fractions))
        print(f"n={n} (turn {sys_.angle_degrees:.2f} deg): {steps}")
    rep = verify_constants()
    print("constants:", "all checks pass" if rep.ok else rep.checks)
    print("9-fold candidate:", nine_fold_candidate())


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:3]]
    main(*args)
