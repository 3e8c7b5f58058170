"""Half-periods of Z^4 as the group F_2^4, planes through them, and the
homology class of a 2-torus with given lattice directions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .cycles import T_INDICES, CycleClass

Vec4 = tuple[int, int, int, int]

# (x1, x2, x3) of labels 1..8, doubled; labels 9..16 repeat them with x4 = 1/2.
_FIRST_GROUP = [
    (0, 0, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1),
    (1, 1, 0), (1, 1, 1), (0, 1, 0), (0, 1, 1),
]


@dataclass(frozen=True)
class HalfPeriod:
    """A fixed point of z -> -z on R^4/Z^4; ``coords`` are the coordinates times 2."""

    coords: Vec4
    label: int

    def __str__(self) -> str:
        return f"L{self.label} ({','.join(map(str, self.coords))})"

    def half_coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.coords)


FIXED_POINTS: tuple[HalfPeriod, ...] = tuple(
    HalfPeriod((*xyz, x4), 8 * x4 + n + 1)
    for x4 in (0, 1)
    for n, xyz in enumerate(_FIRST_GROUP)
)
_BY_COORDS = {p.coords: p for p in FIXED_POINTS}


def fixed_points() -> list[HalfPeriod]:
    return list(FIXED_POINTS)


def point(label: int) -> HalfPeriod:
    if isinstance(label, bool) or not isinstance(label, int) or not 1 <= label <= 16:
        raise ValueError(f"fixed-point label {label!r} not in 1..16")
    return FIXED_POINTS[label - 1]


def label_of(coords: Iterable[int]) -> int:
    return _BY_COORDS[tuple(c % 2 for c in coords)].label


def _mod2(v: Sequence[int]) -> Vec4:
    return tuple(x % 2 for x in v)  # type: ignore[return-value]


def _xor(a: Sequence[int], b: Sequence[int]) -> Vec4:
    return tuple((x + y) % 2 for x, y in zip(a, b))  # type: ignore[return-value]


@dataclass(frozen=True)
class DirectionPair:
    """Two lattice vectors spanning a plane; independent modulo 2."""

    u: Vec4
    v: Vec4

    def __post_init__(self):
        for w in (self.u, self.v):
            if len(w) != 4 or not all(isinstance(x, int) for x in w):
                raise ValueError(f"direction {w!r} is not an integer 4-vector")
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        u2, v2 = _mod2(self.u), _mod2(self.v)
        if not any(u2) or not any(v2) or u2 == v2:
            raise ValueError(f"directions {self.u}, {self.v} are dependent modulo 2")

    def swapped(self) -> "DirectionPair":
        return DirectionPair(self.v, self.u)

    def __str__(self) -> str:
        return f"{format_vector(self.u)},{format_vector(self.v)}"


def format_vector(w: Sequence[int]) -> str:
    """``(1, -1, 0, 0)`` -> ``e1-e2``."""
    out = ""
    for i, c in enumerate(w, start=1):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        out += f"{sign}{mag}e{i}"
    return out or "0"


def points_on_plane(base: HalfPeriod, dirs: DirectionPair) -> frozenset[int]:
    """Labels of the four half-periods ``base + (s u + t v)/2``, s, t in {0, 1}."""
    u, v = _mod2(dirs.u), _mod2(dirs.v)
    return frozenset(
        label_of(_xor(base.coords, _xor([s * x for x in u], [t * x for x in v])))
        for s in (0, 1) for t in (0, 1)
    )


def _check_labels(labels: Sequence[int]) -> list[HalfPeriod]:
    labels = list(labels)
    if len(labels) != 4:
        raise ValueError(f"need exactly 4 labels, got {len(labels)}")
    if len(set(labels)) != 4:
        raise ValueError(f"labels {labels} are not distinct")
    return [point(x) for x in labels]


def _bit_key(w: Vec4) -> int:
    # x1 is the least significant bit, so e1 < e2 < e1+e2 < e3 < ...
    return sum(c << i for i, c in enumerate(w))


def are_coplanar(labels: Sequence[int]) -> Optional[DirectionPair]:
    """Direction pair of the affine F_2-plane through four labels, or None.

    Four distinct points of F_2^4 lie on an affine plane iff they sum to zero.
    The representative is the two smallest difference vectors (bit order with
    x1 least significant), lifted to {0, 1}^4.
    """
    pts = _check_labels(labels)
    total = (0, 0, 0, 0)
    for p in pts:
        total = _xor(total, p.coords)
    if any(total):
        return None
    diffs = sorted((_xor(p.coords, pts[0].coords) for p in pts[1:]), key=_bit_key)
    return DirectionPair(diffs[0], diffs[1])


def spanning_pairs(labels: Sequence[int], entries: Sequence[int] = (-1, 0, 1)) -> Iterator[DirectionPair]:
    """Every direction pair with entries in ``entries`` whose planes pass through all four labels."""
    pts = _check_labels(labels)
    target = frozenset(p.label for p in pts)
    vectors = [w for w in product(entries, repeat=4) if any(x % 2 for x in w)]
    for u in vectors:
        for v in vectors:
            if _mod2(u) == _mod2(v):
                continue
            dirs = DirectionPair(u, v)
            if points_on_plane(pts[0], dirs) == target:
                yield dirs


def bivector(dirs: DirectionPair) -> dict[tuple[int, int], int]:
    """Coefficients of u^v on e_p^e_q, p < q."""
    u, v = dirs.u, dirs.v
    return {(p, q): u[p - 1] * v[q - 1] - u[q - 1] * v[p - 1] for p, q in T_INDICES}


def torus_class_from_directions(dirs: DirectionPair) -> CycleClass:
    out = CycleClass.zero()
    for (p, q), c in bivector(dirs).items():
        if c:
            out = out + c * CycleClass.T(p, q)
    return out
