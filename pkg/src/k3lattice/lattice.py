"""Integral lattices given by Gram matrices, their invariants, and the
classification of indefinite even unimodular forms by rank and signature."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .linalg import Matrix, block_diagonal, determinant, signature, smith_normal_form


class ClassificationError(ValueError):
    """Raised when (rank, signature) cannot belong to an indefinite even unimodular form."""


class IndexInconsistencyError(ValueError):
    """Raised when two determinants cannot come from a sublattice/lattice pair."""


@dataclass(frozen=True)
class IntegralLattice:
    gram: Matrix

    def __post_init__(self):
        if not self.gram.is_square:
            raise ValueError("Gram matrix must be square")
        if not self.gram.is_integral():
            raise ValueError("Gram matrix must have integer entries")
        if not self.gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows) -> "IntegralLattice":
        return cls(Matrix(rows))

    @property
    def rank(self) -> int:
        return self.gram.nrows

    def scaled(self, c: int) -> "IntegralLattice":
        return IntegralLattice(self.gram.scale(c))

    def __str__(self) -> str:
        return str(self.gram)


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    n_plus: int
    n_minus: int
    determinant: int
    even: bool
    unimodular: bool
    elementary_divisors: tuple[int, ...]

    @property
    def signature_pair(self) -> tuple[int, int]:
        return self.n_plus, self.n_minus

    @property
    def tau(self) -> int:
        return self.n_plus - self.n_minus


_E8_CARTAN = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
]


def e8_minus() -> IntegralLattice:
    """Negative definite E8, i.e. -1 times the Cartan matrix above."""
    return IntegralLattice.from_rows([[-x for x in row] for row in _E8_CARTAN])


def hyperbolic_h() -> IntegralLattice:
    return IntegralLattice.from_rows([[0, 1], [1, 0]])


def direct_sum(lattices: Sequence[IntegralLattice]) -> IntegralLattice:
    if not lattices:
        raise ValueError("direct sum of an empty list")
    return IntegralLattice(block_diagonal([L.gram for L in lattices]))


def k3_lattice() -> IntegralLattice:
    """E8(-1) + E8(-1) + H + H + H."""
    e8, h = e8_minus(), hyperbolic_h()
    return direct_sum([e8, e8, h, h, h])


def invariants(lattice: IntegralLattice) -> LatticeInvariants:
    g = lattice.gram
    n_plus, n_minus, _ = signature(g)
    det = int(determinant(g))
    divisors = tuple(smith_normal_form(g).elementary_divisors)
    return LatticeInvariants(
        rank=lattice.rank,
        n_plus=n_plus,
        n_minus=n_minus,
        determinant=det,
        even=all(x % 2 == 0 for x in g.diagonal_entries()),
        unimodular=abs(det) == 1,
        elementary_divisors=divisors,
    )


@dataclass(frozen=True)
class Classification:
    """``e8_copies * E8(-1) + h_copies * H``, or its negative if ``negated``.

    The negated case arises for tau > 0: the form is classified through its
    negative, and since H(-1) is isometric to H only the E8 summands flip.
    """

    rank: int
    tau: int
    e8_copies: int
    h_copies: int
    negated: bool = False

    @property
    def counts(self) -> tuple[int, int]:
        return self.e8_copies, self.h_copies

    def label(self) -> str:
        e8 = "E8" if self.negated else "E8(-1)"
        parts = []
        if self.e8_copies:
            parts.append(f"{self.e8_copies}{e8}")
        if self.h_copies:
            parts.append(f"{self.h_copies}H")
        return " + ".join(parts)

    def lattice(self) -> IntegralLattice:
        e8 = e8_minus().scaled(-1) if self.negated else e8_minus()
        return direct_sum([e8] * self.e8_copies + [hyperbolic_h()] * self.h_copies)


def classify(rank: int, tau: int) -> Classification:
    if rank <= 0:
        raise ClassificationError(f"rank must be positive, got {rank}")
    if abs(tau) > rank:
        raise ClassificationError(f"|tau| = {abs(tau)} exceeds rank {rank}")
    if tau % 8:
        raise ClassificationError(
            f"tau = {tau} is not divisible by 8, so no even unimodular form has these invariants")
    if (rank + tau) % 2:
        raise ClassificationError(f"rank + tau = {rank + tau} is odd")
    if rank == abs(tau):
        raise ClassificationError(
            f"rank = |tau| = {rank} means the form is definite; the indefinite classification does not apply")
    negated = tau > 0
    t = -tau if negated else tau
    return Classification(rank, tau, -t // 8, (rank + t) // 2, negated)


def milnor_decomposition(rank: int, tau: int) -> tuple[int, int]:
    """Copies of E8(-1) and H in the indefinite even unimodular form of this rank and signature.

    For tau > 0 the counts describe the negated form; use :func:`classify`
    to see that flag.
    """
    return classify(rank, tau).counts


def sublattice_index_from_determinants(det_sub: int, det_full: int) -> int:
    """Index of a full-rank sublattice from ``det_sub == index**2 * det_full``."""
    if det_full == 0:
        raise IndexInconsistencyError("ambient lattice is degenerate (determinant 0)")
    if det_sub * det_full < 0:
        raise IndexInconsistencyError(f"determinants {det_sub} and {det_full} differ in sign")
    q, r = divmod(abs(det_sub), abs(det_full))
    if r:
        raise IndexInconsistencyError(f"|{det_sub}| / |{det_full}| is not an integer")
    root = math.isqrt(q)
    if root * root != q:
        raise IndexInconsistencyError(f"determinant ratio {q} is not a perfect square")
    if q == 0:
        raise IndexInconsistencyError("sublattice is degenerate (determinant 0)")
    return root
