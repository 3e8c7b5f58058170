"""Rebuild w1..w22, verify the intersection form and dump the artifacts.

    python scripts/verify_k3.py [--out results/]

Writes report.json, gram_lt.txt, gram_w.txt and basis.txt (w-cycles as rows
over L1..L16, T12, T13, T14, T23, T24, T34).
"""

import argparse
import json
import pathlib

from k3lattice.cycles import BASIS_LABELS, FORM, T_INDICES, gram_of
from k3lattice.k3 import build_canonical_basis, change_of_basis, spherical_decomposition, verify_canonical
from k3lattice.linalg import Matrix, format_matrix


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    basis = build_canonical_basis()
    report = verify_canonical(basis)
    (out / "report.json").write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    (out / "gram_lt.txt").write_text(format_matrix(FORM.gram_lt) + "\n")
    (out / "gram_w.txt").write_text(format_matrix(gram_of(basis.w)) + "\n")
    (out / "basis.txt").write_text(format_matrix(Matrix([w.coeffs for w in basis.w])) + "\n")

    print(report.to_text())
    _, _, integral = change_of_basis(basis)
    print(f"L/T integral over w: {integral}")
    for pq in T_INDICES:
        print(spherical_decomposition(pq) or f"T{pq[0]}{pq[1]}: no single named S-cycle")
    print(f"basis order: {' '.join(BASIS_LABELS)}")
    print(f"wrote {out}/")


if __name__ == "__main__":
    main()
