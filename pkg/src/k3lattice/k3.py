"""Named sphere cycles, the canonical basis w1..w22 of H_2 of the Kummer K3
surface, and its end-to-end verification."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .cycles import DIM, FORM, T_INDICES, CycleClass, gram_of, lt_basis, pairing
from .lattice import k3_lattice, sublattice_index_from_determinants
from .linalg import Matrix, determinant, inverse, smith_normal_form

HALF = Fraction(1, 2)


def _cycle(l: Mapping[int, Fraction] = {}, t: Mapping[tuple[int, int], Fraction] = {}) -> CycleClass:
    out = CycleClass.zero()
    for i, c in l.items():
        out = out + c * CycleClass.L(i)
    for (p, q), c in t.items():
        out = out + c * CycleClass.T(p, q)
    return out


# ---------------------------------------------------------------------------
# S-cycles: -1/2 (sum of four L) + 1/2 (T-part)

_S_FIRST_GROUP: dict[tuple[int, ...], dict[tuple[int, int], int]] = {
    (1, 3, 5, 7): {(1, 2): 1},
    (2, 1, 5, 6): {(1, 3): 1, (2, 3): 1},
    (5, 6, 4, 3): {(2, 3): 1},
    (3, 4, 8, 7): {(1, 3): 1, (2, 3): -1},
}
_S_MIXED: dict[tuple[int, ...], dict[tuple[int, int], int]] = {
    (1, 2, 9, 10): {(3, 4): 1},
    (7, 1, 9, 15): {(2, 4): -1},
    (1, 3, 11, 9): {(1, 4): 1},
}

S_CYCLE_DATA: dict[tuple[int, ...], dict[tuple[int, int], int]] = {
    **_S_FIRST_GROUP,
    **{tuple(i + 8 for i in k): v for k, v in _S_FIRST_GROUP.items()},
    **_S_MIXED,
}
S_CYCLE_NAMES: tuple[tuple[int, ...], ...] = tuple(S_CYCLE_DATA)


def format_s_name(labels: Sequence[int]) -> str:
    return "S" + "".join(str(i) if i < 10 else f"({i})" for i in labels)


def parse_s_name(name: str) -> tuple[int, ...]:
    """``"S129(10)"``, ``"S_{13(11)9}"`` or ``"1357"`` -> label tuple."""
    body = re.sub(r"[\s_{}]", "", name)
    if body[:1] in ("S", "s"):
        body = body[1:]
    tokens = re.findall(r"\((\d+)\)|(\d)", body)
    if not tokens or re.sub(r"\(\d+\)|\d", "", body):
        raise ValueError(f"cannot parse S-cycle name {name!r}")
    return tuple(int(a or b) for a, b in tokens)


def s_cycle(name: Union[str, Sequence[int]]) -> CycleClass:
    key = parse_s_name(name) if isinstance(name, str) else tuple(name)
    if key not in S_CYCLE_DATA:
        raise ValueError(f"unknown S-cycle {name!r}; known: "
                         + ", ".join(format_s_name(k) for k in S_CYCLE_NAMES))
    return _cycle({i: -HALF for i in key}, {pq: c * HALF for pq, c in S_CYCLE_DATA[key].items()})


def is_s_shaped(s: CycleClass) -> bool:
    l = [c for c in s.l_part if c]
    return (len(l) == 4 and all(abs(c) == HALF for c in l)
            and all((2 * c).denominator == 1 for c in s.t_part))


def sign_variant(s: CycleClass, eps_l: Union[Mapping[int, int], Sequence[int], None] = None,
                 eps_t: int = 1) -> CycleClass:
    """Flip signs of the four L-terms and of the T-part of an S-shaped cycle.

    ``eps_l`` maps label -> sign (missing labels keep +1) or lists four signs
    in ascending label order.
    """
    if not is_s_shaped(s):
        raise ValueError(f"{s} is not S-shaped")
    support = sorted(s.l_support())
    if eps_l is None:
        signs = {}
    elif isinstance(eps_l, Mapping):
        signs = dict(eps_l)
    else:
        if len(eps_l) != 4:
            raise ValueError("need four L-signs")
        signs = dict(zip(support, eps_l))
    if not set(signs) <= set(support):
        raise ValueError(f"labels {sorted(set(signs) - set(support))} not in the cycle's support")
    for e in [*signs.values(), eps_t]:
        if e not in (1, -1):
            raise ValueError(f"sign {e!r} is not +1 or -1")
    l = [c * signs.get(i + 1, 1) for i, c in enumerate(s.l_part)]
    return CycleClass(tuple(l) + tuple(eps_t * c for c in s.t_part))


# ---------------------------------------------------------------------------
# canonical basis


def _first_group() -> list[CycleClass]:
    h = HALF
    return [
        _cycle({1: h, 3: -h, 5: -h, 7: -h}, {(1, 2): -h}),
        _cycle({1: h, 2: h, 5: h, 6: h}, {(1, 3): -h, (2, 3): -h}),
        _cycle({1: -h, 2: -h, 5: h, 6: h}, {(1, 3): h, (2, 3): h}),
        -CycleClass.L(6),
        _cycle({3: h, 4: h, 5: -h, 6: h}, {(2, 3): -h}),
        -CycleClass.L(4),
        _cycle({3: -h, 4: h, 7: h, 8: h}, {(1, 3): -h, (2, 3): h}),
        -CycleClass.L(8),
    ]


@dataclass(frozen=True)
class CanonicalBasis:
    w: tuple[CycleClass, ...]
    w_prime_18: CycleClass
    w_prime_20: CycleClass
    w_prime_22: CycleClass

    def __getitem__(self, k: int) -> CycleClass:
        """1-based: ``basis[1]`` is w1."""
        if not 1 <= k <= len(self.w):
            raise IndexError(k)
        return self.w[k - 1]

    @property
    def lambda1(self) -> tuple[CycleClass, ...]:
        return self.w[:16]

    @property
    def lambda2(self) -> tuple[CycleClass, ...]:
        return self.w[16:]

    @property
    def lambda2_primed(self) -> tuple[CycleClass, ...]:
        w = self.w
        return (w[16], self.w_prime_18, w[18], self.w_prime_20, w[20], self.w_prime_22)


def build_canonical_basis() -> CanonicalBasis:
    first = _first_group()
    second = [c.shift_l(8) for c in first]
    h = HALF
    w17, w19, w21 = CycleClass.T(1, 2), CycleClass.T(1, 3), CycleClass.T(2, 3)
    w18p = _cycle({1: -h, 2: h, 9: -h, 10: h}, {(3, 4): h})
    w20p = _cycle({1: -h, 7: -h, 9: -h, 15: -h}, {(2, 4): -h})
    w22p = _cycle({1: -h, 3: -h, 9: -h, 11: -h}, {(1, 4): h})
    w18 = w18p + w17
    w20 = w20p + w17 + w19
    w22 = w22p + w17 + w19 + w21
    return CanonicalBasis(tuple(first + second + [w17, w18, w19, w20, w21, w22]), w18p, w20p, w22p)


LAMBDA2_PRIMED_GRAM = Matrix([
    [0, 1, 0, 0, 0, 0],
    [1, -2, 0, -1, 0, -1],
    [0, 0, 0, 1, 0, 0],
    [0, -1, 1, -2, 0, -1],
    [0, 0, 0, 0, 0, 1],
    [0, -1, 0, -1, 1, -2],
])


# ---------------------------------------------------------------------------
# verification

INDEX_NOTE = (
    'source text claims the L/T sublattice has "index 2^{{22}}", but '
    "det_sub = index^2 * det_full with det_lt = {det_lt} and det_w = {det_w} forces index {index}"
)


@dataclass(frozen=True)
class VerificationReport:
    gram_w: Matrix
    matches_canonical: bool
    lambda1_ok: bool
    lambda2_primed_ok: bool
    lambda2_ok: bool
    orthogonal: bool
    integral: bool
    even: bool
    det_lt: int
    det_w: int
    index: Optional[int]
    elementary_divisors_lt: tuple[int, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.matches_canonical and self.integral

    def to_json(self) -> dict:
        # integers as decimal strings so consumers never overflow
        return {
            "gram_w": [[str(int(x)) if x.denominator == 1 else str(x) for x in row]
                       for row in self.gram_w.rows],
            "matches_canonical": self.matches_canonical,
            "lambda1_block": self.lambda1_ok,
            "lambda2_primed_block": self.lambda2_primed_ok,
            "lambda2_block": self.lambda2_ok,
            "orthogonal": self.orthogonal,
            "integral": self.integral,
            "even": self.even,
            "det_lt": str(self.det_lt),
            "det_w": str(self.det_w),
            "index": None if self.index is None else str(self.index),
            "elementary_divisors_lt": [str(d) for d in self.elementary_divisors_lt],
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        yn = {True: "yes", False: "no"}
        lines = [
            "Gram matrix of w1..w22:",
            str(self.gram_w),
            f"Lambda1 block E8(-1)+E8(-1): {yn[self.lambda1_ok]}",
            f"Lambda2 block (w17,w'18,w19,w'20,w21,w'22) as listed: {yn[self.lambda2_primed_ok]}",
            f"Lambda2 block (w17..w22) = 3H: {yn[self.lambda2_ok]}",
            f"Lambda1 orthogonal to Lambda2: {yn[self.orthogonal]}",
            f"all pairings integral: {yn[self.integral]}",
            f"even: {yn[self.even]}",
            f"det_lt: {self.det_lt}",
            f"det_w: {self.det_w}",
            f"elementary divisors of L/T Gram: {' '.join(map(str, self.elementary_divisors_lt))}",
            f"index of L/T sublattice: {self.index}",
        ]
        lines += [f"note: {n}" for n in self.notes]
        lines.append(f"CANONICAL: {yn[self.matches_canonical]}")
        return "\n".join(lines)


def _block(m: Matrix, rows: range, cols: range) -> Matrix:
    return Matrix([[m[i, j] for j in cols] for i in rows])


def verify_canonical(basis: Optional[CanonicalBasis] = None) -> VerificationReport:
    basis = basis or build_canonical_basis()
    g = gram_of(basis.w)
    target = k3_lattice().gram
    integral = g.is_integral()
    det_lt = int(determinant(FORM.gram_lt))
    det_w = determinant(g)
    notes = []
    index = None
    if det_w.denominator == 1 and det_w:
        try:
            index = sublattice_index_from_determinants(det_lt, int(det_w))
        except ValueError as exc:
            notes.append(f"index: {exc}")
    if index is not None and index != 2 ** 22:
        notes.append(INDEX_NOTE.format(index=index, det_lt=det_lt, det_w=det_w))

    # the symbolic w7 = -S3487 - L5 vs. the listed expansion
    w7 = basis[7]
    if w7 == -s_cycle((3, 4, 8, 7)) - CycleClass.L(3) and w7 != -s_cycle((3, 4, 8, 7)) - CycleClass.L(5):
        notes.append("w7 equals -S3487 - L3; the symbolic form -S3487 - L5 does not match its listed expansion")

    return VerificationReport(
        gram_w=g,
        matches_canonical=g == target,
        lambda1_ok=_block(g, range(16), range(16)) == _block(target, range(16), range(16)),
        lambda2_primed_ok=gram_of(basis.lambda2_primed) == LAMBDA2_PRIMED_GRAM,
        lambda2_ok=_block(g, range(16, 22), range(16, 22)) == _block(target, range(16, 22), range(16, 22)),
        orthogonal=all(g[i, j] == 0 for i in range(16) for j in range(16, 22)),
        integral=integral,
        even=integral and all(x % 2 == 0 for x in g.diagonal_entries()),
        det_lt=det_lt,
        det_w=int(det_w) if det_w.denominator == 1 else det_w,
        index=index,
        elementary_divisors_lt=tuple(smith_normal_form(FORM.gram_lt).elementary_divisors),
        notes=tuple(notes),
    )


class BasisInconsistencyError(RuntimeError):
    pass


def change_of_basis(basis: Optional[CanonicalBasis] = None) -> tuple[Matrix, Matrix, bool]:
    """``(B, B_inv, integral)``: column k of B is w_{k+1} over the L/T basis,
    column j of B_inv is the j-th L/T vector over the w-basis."""
    basis = basis or build_canonical_basis()
    B = Matrix.from_columns([w.coeffs for w in basis.w])
    try:
        B_inv = inverse(B)
    except ZeroDivisionError:
        raise BasisInconsistencyError("w-cycles are linearly dependent") from None
    return B, B_inv, B_inv.is_integral()


def express_in_w(c: CycleClass, basis: Optional[CanonicalBasis] = None) -> tuple[Fraction, ...]:
    _, B_inv, _ = change_of_basis(basis)
    return tuple(sum((a * x for a, x in zip(row, c.coeffs)), Fraction(0)) for row in B_inv.rows)


# ---------------------------------------------------------------------------
# tori as sums of spheres


@dataclass(frozen=True)
class SphericalDecomposition:
    """``T_pq == 2 * S + sum(coeff * L_i)`` with S a sign variant of a named S-cycle."""

    pq: tuple[int, int]
    s_name: tuple[int, ...]
    eps_t: int
    s: CycleClass
    l_terms: tuple[tuple[int, int], ...]

    def evaluate(self) -> CycleClass:
        return 2 * self.s + CycleClass.combination((c, CycleClass.L(i)) for i, c in self.l_terms)

    def holds(self) -> bool:
        return self.evaluate() == CycleClass.T(*self.pq)

    def __str__(self) -> str:
        name = format_s_name(self.s_name) + ("'" if self.eps_t < 0 else "")
        ls = " + ".join(f"L{i}" if c == 1 else f"{c}L{i}" for i, c in self.l_terms)
        return f"T{self.pq[0]}{self.pq[1]} = 2{name} + {ls}"


def spherical_decomposition(pq: tuple[int, int]) -> Optional[SphericalDecomposition]:
    pq = tuple(pq)
    if pq not in T_INDICES:
        raise ValueError(f"{pq} is not one of {T_INDICES}")
    target = CycleClass.T(*pq)
    for name in S_CYCLE_NAMES:
        s = s_cycle(name)
        t2 = 2 * s.t_component()
        for eps_t in (1, -1):
            if eps_t * t2 == target:
                s_var = sign_variant(s, eps_t=eps_t)
                rest = target - 2 * s_var
                l_terms = tuple((i + 1, int(c)) for i, c in enumerate(rest.l_part) if c)
                dec = SphericalDecomposition(pq, name, eps_t, s_var, l_terms)
                if not dec.holds():
                    raise BasisInconsistencyError(f"decomposition of T{pq} does not close")
                return dec
    return None


__all__ = [
    "CanonicalBasis", "VerificationReport", "SphericalDecomposition", "BasisInconsistencyError",
    "S_CYCLE_NAMES", "LAMBDA2_PRIMED_GRAM", "build_canonical_basis", "verify_canonical",
    "change_of_basis", "express_in_w", "spherical_decomposition", "s_cycle", "sign_variant",
    "is_s_shaped", "parse_s_name", "format_s_name", "pairing", "gram_of", "lt_basis", "DIM",
]
