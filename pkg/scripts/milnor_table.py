"""Tabulate the indefinite even unimodular forms up to a given rank and
confirm each assembled lattice has the requested invariants."""

import argparse

from k3lattice.lattice import classify, invariants


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=30)
    args = ap.parse_args()
    print(f"{'rank':>4} {'tau':>4}  form")
    bad = 0
    for r in range(2, args.max_rank + 1, 2):
        for tau in (t for t in range(-r + 1, r) if t % 8 == 0):
            c = classify(r, tau)
            inv = invariants(c.lattice())
            ok = (inv.rank, inv.tau, inv.even, inv.unimodular) == (r, tau, True, True)
            bad += not ok
            print(f"{r:>4} {tau:>4}  {c.label()}{'' if ok else '  MISMATCH'}")
    print("all consistent" if not bad else f"{bad} mismatches")


if __name__ == "__main__":
    main()
