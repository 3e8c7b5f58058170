from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import is_affine_plane_bruteforce
from k3lattice.cycles import T_INDICES, CycleClass
from k3lattice.k3 import S_CYCLE_NAMES, s_cycle
from k3lattice.kummer import (
    DirectionPair,
    are_coplanar,
    bivector,
    fixed_points,
    point,
    points_on_plane,
    spanning_pairs,
    torus_class_from_directions,
)

E = {i: tuple(int(j == i) for j in range(1, 5)) for i in range(1, 5)}

# doubled (x1, x2, x3) for L1..L8 as tabulated for the x4 = 0 group
TABLE = {1: (0, 0, 0), 2: (0, 0, 1), 3: (1, 0, 0), 4: (1, 0, 1),
         5: (1, 1, 0), 6: (1, 1, 1), 7: (0, 1, 0), 8: (0, 1, 1)}


def test_fixed_point_table():
    pts = fixed_points()
    assert [p.label for p in pts] == list(range(1, 17))
    for n, xyz in TABLE.items():
        assert pts[n - 1].coords == (*xyz, 0)
        assert pts[n + 7].coords == (*xyz, 1)
    assert len({p.coords for p in pts}) == 16
    assert point(1).coords == (0, 0, 0, 0)
    assert point(5).coords == (1, 1, 0, 0)
    assert point(9).coords == (0, 0, 0, 1)
    assert str(point(1)) == "L1 (0,0,0,0)"


@pytest.mark.parametrize("bad", [0, 17, "3"])
def test_point_range(bad):
    with pytest.raises(ValueError):
        point(bad)


@pytest.mark.parametrize("dirs, expected", [
    ((E[1], E[2]), {1, 3, 5, 7}),
    ((E[3], E[4]), {1, 2, 9, 10}),
    (((1, 1, 0, 0), E[3]), {1, 2, 5, 6}),
])
def test_points_on_plane_examples(dirs, expected):
    assert points_on_plane(point(1), DirectionPair(*dirs)) == expected


@pytest.mark.parametrize("u, v", [((0, 0, 0, 0), (1, 0, 0, 0)), ((1, 0, 0, 0), (1, 0, 0, 0)),
                                  ((2, 0, 0, 0), (0, 1, 0, 0)), ((1, 1, 0, 0), (-1, 1, 0, 0))])
def test_degenerate_pairs(u, v):
    with pytest.raises(ValueError):
        DirectionPair(u, v)


def test_are_coplanar_examples():
    assert are_coplanar([1, 3, 5, 7]) == DirectionPair(E[1], E[2])
    assert are_coplanar([1, 3, 11, 9]) == DirectionPair(E[1], E[4])
    assert are_coplanar([1, 2, 3, 5]) is None
    with pytest.raises(ValueError):
        are_coplanar([1, 1, 3, 5])
    with pytest.raises(ValueError):
        are_coplanar([1, 3, 5])


def test_coplanarity_exhaustive():
    count = 0
    for quad in combinations(range(1, 17), 4):
        dirs = are_coplanar(quad)
        brute = is_affine_plane_bruteforce([point(x).coords for x in quad])
        assert (dirs is not None) == brute
        if dirs is not None:
            count += 1
            assert points_on_plane(point(quad[0]), dirs) == set(quad)
    # 140 affine planes in F_2^4
    assert count == 140


def test_points_on_plane_roundtrip():
    vecs = [w for w in product((-1, 0, 1), repeat=4) if any(x % 2 for x in w)]
    for base in fixed_points():
        for u, v in combinations(vecs, 2):
            try:
                dirs = DirectionPair(u, v)
            except ValueError:
                continue
            plane = points_on_plane(base, dirs)
            assert len(plane) == 4 and base.label in plane
            assert are_coplanar(sorted(plane)) is not None


@pytest.mark.parametrize("u, v, expected", [
    (E[1], E[2], CycleClass.T(1, 2)),
    ((1, 1, 0, 0), E[3], CycleClass.T(1, 3) + CycleClass.T(2, 3)),
    ((1, -1, 0, 0), E[3], CycleClass.T(1, 3) - CycleClass.T(2, 3)),
])
def test_torus_class_examples(u, v, expected):
    assert torus_class_from_directions(DirectionPair(u, v)) == expected


vec4 = st.tuples(*[st.integers(-3, 3)] * 4)


@given(vec4, vec4, vec4, st.integers(-3, 3))
def test_bivector_antisymmetric_bilinear(u, v, w, c):
    def bv(a, b):
        return {(p, q): a[p - 1] * b[q - 1] - a[q - 1] * b[p - 1] for p, q in T_INDICES}

    def try_class(a, b):
        try:
            return torus_class_from_directions(DirectionPair(a, b))
        except ValueError:
            return None

    cu = try_class(u, v)
    if cu is not None:
        assert try_class(v, u) == -cu
        assert dict(bivector(DirectionPair(u, v))) == bv(u, v)
    uw = tuple(x + c * y for x, y in zip(u, w))
    parts = [try_class(uw, v), cu, try_class(w, v)]
    if None not in parts:
        assert parts[0] == parts[1] + c * parts[2]


@pytest.mark.parametrize("name", S_CYCLE_NAMES)
def test_named_s_cycles_are_geometric(name):
    assert are_coplanar(name) is not None
    t_part = 2 * s_cycle(name).t_component()
    classes = {torus_class_from_directions(d) for d in spanning_pairs(name)}
    assert t_part in classes or -t_part in classes
