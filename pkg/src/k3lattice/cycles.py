"""Rational two-cycles on the Kummer K3 surface in the basis of exceptional
spheres L1..L16 and tori T12, T13, T14, T23, T24, T34, and the intersection
pairing on that basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .linalg import Matrix, permutation_sign

T_INDICES: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
BASIS_LABELS: tuple[str, ...] = (
    tuple(f"L{i}" for i in range(1, 17)) + tuple(f"T{p}{q}" for p, q in T_INDICES)
)
DIM = len(BASIS_LABELS)

Scalar = Union[int, Fraction]


def l_index(i: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= 16:
        raise ValueError(f"L-index {i!r} not in 1..16")
    return i - 1


def t_index(p: int, q: int) -> int:
    return 16 + T_INDICES.index((p, q))


@dataclass(frozen=True)
class CycleClass:
    """A vector of 22 rational coefficients over ``BASIS_LABELS``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != DIM:
            raise ValueError(f"expected {DIM} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> "CycleClass":
        return cls((0,) * DIM)

    @classmethod
    def basis(cls, k: int) -> "CycleClass":
        c = [0] * DIM
        c[k] = 1
        return cls(tuple(c))

    @classmethod
    def L(cls, i: int) -> "CycleClass":
        return cls.basis(l_index(i))

    @classmethod
    def T(cls, p: int, q: int) -> "CycleClass":
        """Torus class; ``T(q, p) == -T(p, q)``."""
        if p == q or not {p, q} <= {1, 2, 3, 4}:
            raise ValueError(f"invalid torus indices ({p}, {q})")
        if p > q:
            return -cls.basis(t_index(q, p))
        return cls.basis(t_index(p, q))

    @classmethod
    def combination(cls, terms: Iterable[tuple[Scalar, "CycleClass"]]) -> "CycleClass":
        out = cls.zero()
        for c, x in terms:
            out = out + c * x
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "CycleClass") -> "CycleClass":
        if not isinstance(other, CycleClass):
            return NotImplemented
        return CycleClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        if not isinstance(other, CycleClass):
            return NotImplemented
        return CycleClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycleClass":
        return CycleClass(tuple(-a for a in self.coeffs))

    def __mul__(self, c: Scalar) -> "CycleClass":
        if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
            return NotImplemented
        return CycleClass(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    # -- views -------------------------------------------------------------

    @property
    def l_part(self) -> tuple[Fraction, ...]:
        return self.coeffs[:16]

    @property
    def t_part(self) -> tuple[Fraction, ...]:
        return self.coeffs[16:]

    def t_component(self) -> "CycleClass":
        return CycleClass((0,) * 16 + self.t_part)

    def l_support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(self.l_part) if c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def shift_l(self, offset: int = 8) -> "CycleClass":
        """Move the coefficient of L_i to L_{i+offset}; T-coefficients are kept."""
        l = [Fraction(0)] * 16
        for i, c in enumerate(self.l_part):
            if c:
                j = i + offset
                if not 0 <= j < 16:
                    raise ValueError(f"shift by {offset} moves L{i + 1} out of range")
                l[j] = c
        return CycleClass(tuple(l) + self.t_part)

    def __str__(self) -> str:
        out = ""
        for name, c in zip(BASIS_LABELS, self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            out += f" {sign} {mag}{name}" if out else f"{sign}{mag}{name}"
        return out or "0"


def _lt_gram() -> Matrix:
    g = [[0] * DIM for _ in range(DIM)]
    for i in range(16):
        g[i][i] = -2
    for a, (i, j) in enumerate(T_INDICES):
        for b, (k, l) in enumerate(T_INDICES):
            g[16 + a][16 + b] = 2 * permutation_sign(i, j, k, l)
    return Matrix(g)


@dataclass(frozen=True)
class IntersectionForm:
    """The pairing on the L/T basis: L.L = -2 delta, T_ij.T_kl = 2 eps_ijkl, L.T = 0."""

    gram_lt: Matrix

    def pair(self, a: CycleClass, b: CycleClass) -> Fraction:
        total = Fraction(0)
        for i, x in enumerate(a.coeffs):
            if x:
                row = self.gram_lt.rows[i]
                total += x * sum((g * y for g, y in zip(row, b.coeffs) if g and y), Fraction(0))
        return total

    def gram_of(self, cycles: Sequence[CycleClass]) -> Matrix:
        return Matrix([[self.pair(a, b) for b in cycles] for a in cycles])


FORM = IntersectionForm(_lt_gram())


def pairing(a: CycleClass, b: CycleClass) -> Fraction:
    return FORM.pair(a, b)


def gram_of(cycles: Sequence[CycleClass]) -> Matrix:
    return FORM.gram_of(cycles)


def lt_basis() -> list[CycleClass]:
    return [CycleClass.basis(k) for k in range(DIM)]
