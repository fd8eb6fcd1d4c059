import itertools

import pytest
from hypothesis import given, strategies as st

from qrips.cube import (
    Ambient,
    CubePoint,
    DimensionMismatch,
    GuardExceeded,
    PointSet,
    concat,
    diameter,
    enumerate_cube,
    enumerate_level,
    hamming_ball,
    hamming_distance,
    inner_product,
    negate,
    pad,
    set_product,
    weight,
)


def points(n):
    return st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n).map(CubePoint.from_signs)


@st.composite
def triples(draw):
    n = draw(st.integers(1, 40))
    return draw(points(n)), draw(points(n)), draw(points(n))


@given(triples())
def test_metric_axioms(t):
    x, y, z = t
    assert hamming_distance(x, x) == 0
    assert hamming_distance(x, y) == hamming_distance(y, x)
    assert (hamming_distance(x, y) == 0) == (x == y)
    assert hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z)


@given(triples())
def test_distance_matches_sign_vectors(t):
    x, y, _ = t
    assert hamming_distance(x, y) == sum(a != b for a, b in zip(x.signs, y.signs))
    assert inner_product(x, y) == sum(a * b for a, b in zip(x.signs, y.signs))


@pytest.mark.parametrize("n", range(1, 9))
def test_inner_product_identity_exhaustive(n):
    pts = list(enumerate_cube(n))
    for x in pts:
        for y in pts:
            assert inner_product(x, y) == n - 2 * hamming_distance(x, y)


def test_concat_is_additive_q3():
    q3 = list(enumerate_cube(3))
    for x1, y1, x2, y2 in itertools.product(q3, repeat=4):
        d = hamming_distance(concat(x1, x2), concat(y1, y2))
        assert d == hamming_distance(x1, y1) + hamming_distance(x2, y2)


@pytest.mark.parametrize("n", range(1, 11))
def test_level_sets_filter_the_cube(n):
    cube = list(enumerate_cube(n))
    for level in range(n + 1):
        lv = enumerate_level(n, level)
        assert len(lv) == len({p for p in lv})
        assert set(lv) == {p for p in cube if weight(p) == level}
        # lexicographic with '+' first
        assert [str(p) for p in lv] == sorted(str(p) for p in lv)


def test_cube_order_is_lexicographic():
    assert [str(p) for p in enumerate_cube(2)] == ["++", "+-", "-+", "--"]


@given(st.integers(1, 30).flatmap(points))
def test_string_round_trip(x):
    assert CubePoint.from_string(x.to_string()) == x
    assert CubePoint.from_string(x.to_string(binary=True), binary=True) == x
    assert -(-x) == x == negate(negate(x))


def test_parse_errors():
    with pytest.raises(ValueError):
        CubePoint.from_string("+x-")
    with pytest.raises(ValueError):
        CubePoint.from_signs([1, 0])
    with pytest.raises(DimensionMismatch):
        hamming_distance(CubePoint.ones(2), CubePoint.ones(3))
    with pytest.raises(ValueError):
        PointSet.from_strings(["++", "+-", "++"])
    with pytest.raises(DimensionMismatch):
        PointSet.from_strings(["++", "+-+"])


def test_pointset_operations():
    a = PointSet.from_strings(["++", "--"])
    b = PointSet.from_strings(["+-"])
    p = set_product(a, b)
    assert [str(x) for x in p] == ["+++-", "--+-"]
    assert (-a).same_set(a)
    assert len(a.union(b)) == 3
    assert [str(x) for x in pad(a, m=2)] == ["++++", "--++"]
    assert diameter(a) == 2 and diameter(p) == 2


def test_hamming_ball_sizes():
    ball = hamming_ball(CubePoint.ones(5), 2)
    assert len(ball) == 1 + 5 + 10
    assert diameter(ball) == 4


def test_ambient_parse_and_guard():
    assert str(Ambient.parse("q7")) == "Q_7" and Ambient.parse("q7").size == 128
    amb = Ambient.parse("l8,4")
    assert str(amb) == "L_4^8" and amb.size == 70
    assert all(amb.contains(p) for p in amb.points())
    with pytest.raises(ValueError):
        Ambient.parse("z3")
    with pytest.raises(GuardExceeded):
        Ambient(30).check_guard()
