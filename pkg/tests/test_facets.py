import itertools

import pytest

from qrips.cube import Ambient, CubePoint, PointSet, diameter, enumerate_cube, enumerate_level, pad
from qrips.facets import (
    check_rigid_facet,
    hadamard_cross_set,
    hamming_ball_set,
    kleitman_bound,
    level_facet,
    max_facet_bruteforce,
    max_rigid_facet_search,
    min_facet_search,
    pad_facet,
    probe_deleted_rows,
    product_facet,
    subcube_facet,
    sweep_maximal,
)
from qrips.hadamard import delete_rows, hadamard_of_order, hadamard_simplex


def naive_is_facet(a: PointSet, ambient: Ambient, r: int) -> bool:
    """Oracle: diameter r and no ambient point can be added."""
    bits = a.bits
    if max((x ^ y).bit_count() for x in bits for y in bits) != r:
        return False
    return not any(
        y not in set(bits) and all((y ^ x).bit_count() <= r for x in bits) for y in ambient.iter_bits()
    )


def naive_is_rigid(a: PointSet, r: int) -> bool:
    return all(max((x ^ y).bit_count() for y in a.bits) == r for x in a.bits)


def test_square_in_q3():
    a = PointSet.from_strings(["+++", "+--", "-+-", "--+"])
    c = check_rigid_facet(a, Ambient(3), 2)
    assert c.ok and c.witness == {}


def test_hamming_ball_is_maximal_but_not_rigid():
    ball = hamming_ball_set(3, 1)
    c = check_rigid_facet(ball, Ambient(3), 2)
    assert c.diameter_ok and c.maximal_ok and not c.rigid_ok
    assert c.witness["rigid"] == {"point": "+++", "eccentricity": 1}


def test_failure_witnesses():
    a = PointSet.from_strings(["+++", "+--"])
    c = check_rigid_facet(a, Ambient(3), 2)
    assert c.diameter_ok and c.rigid_ok and not c.maximal_ok
    y = CubePoint.from_string(c.witness["maximal"]["point"])
    assert y not in a and all(bin(y.bits ^ b).count("1") <= 2 for b in a.bits)
    c = check_rigid_facet(a, Ambient(3), 3)
    assert not c.diameter_ok and c.witness["diameter"]["value"] == 2


@pytest.mark.parametrize("m", [2, 4, 8, 12])
def test_hadamard_simplex_certifies(m):
    a = hadamard_simplex(hadamard_of_order(m))
    c = check_rigid_facet(a, Ambient(m - 1), m // 2)
    assert c.ok
    assert naive_is_facet(a, Ambient(m - 1), m // 2) and naive_is_rigid(a, m // 2)


def small_rigid_facets():
    """All rigid facets in Q_n for n <= 3 via the oracle (plus a few larger ones)."""
    out = []
    for n in (1, 2, 3):
        cube = enumerate_cube(n).bits
        for r in range(n + 1):
            for k in range(1, len(cube) + 1):
                for sub in itertools.combinations(cube, k):
                    a = PointSet.from_bits(n, sub)
                    if naive_is_rigid(a, r) and naive_is_facet(a, Ambient(n), r):
                        out.append((a, r))
    return out


SMALL = small_rigid_facets()


def test_sweep_agrees_with_oracle_q3():
    for n in (2, 3):
        cube = enumerate_cube(n).bits
        for k in range(1, 5):
            for sub in itertools.combinations(cube, k):
                a = PointSet.from_bits(n, sub)
                for r in range(n + 1):
                    c = check_rigid_facet(a, Ambient(n), r)
                    assert c.ok == (naive_is_rigid(a, r) and naive_is_facet(a, Ambient(n), r))


def test_products_of_rigid_facets():
    # every pair of small rigid facets with n1 + n2 <= 6, plus simplex factors up to n1 + n2 = 10
    pairs = [(x, y) for x in SMALL for y in SMALL if x[0].n + y[0].n <= 6]
    simplices = [(hadamard_simplex(hadamard_of_order(m)), m // 2) for m in (2, 4)]
    pairs += [(x, y) for x in simplices + SMALL[-3:] for y in simplices + [(hadamard_simplex(hadamard_of_order(8)), 4)]]
    for (a1, r1), (a2, r2) in pairs:
        if a1.n + a2.n > 10:
            continue
        c1, c2 = check_rigid_facet(a1, Ambient(a1.n), r1), check_rigid_facet(a2, Ambient(a2.n), r2)
        assert c1.ok and c2.ok
        c = product_facet(c1, c2, recertify=True)
        assert c.ok, (a1, a2)
        assert len(c.point_set) == len(a1) * len(a2) and c.scale == r1 + r2


def test_product_requires_rigid_factors():
    ball = check_rigid_facet(hamming_ball_set(3, 1), Ambient(3), 2)
    sq = check_rigid_facet(hadamard_simplex(hadamard_of_order(4)), Ambient(3), 2)
    with pytest.raises(ValueError):
        product_facet(ball, sq)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_padding_preserves_certificate(m):
    for a, r in SMALL[::3] + [(hadamard_simplex(hadamard_of_order(8)), 4)]:
        c = check_rigid_facet(a, Ambient(a.n), r)
        padded = pad_facet(c, m, recertify=True)
        assert (padded.diameter_ok, padded.rigid_ok, padded.maximal_ok) == (True, True, True)
        assert padded.point_set.n == a.n + m


@pytest.mark.parametrize("m", [1, 2, 3])
def test_padding_non_rigid_ball_loses_maximality(m):
    ball = hamming_ball_set(3, 1)
    assert check_rigid_facet(ball, Ambient(3), 2).maximal_ok
    c = check_rigid_facet(pad(ball, m=m), Ambient(3 + m), 2)
    assert not c.maximal_ok and not c.rigid_ok


def test_subcube_facet():
    for n in range(1, 7):
        for r in range(0, n + 1):
            a = subcube_facet(r, n)
            assert len(a) == 2**r
            assert check_rigid_facet(a, Ambient(n), r).ok


def test_hadamard_cross_set_shape():
    y, facet = hadamard_cross_set(hadamard_of_order(8), 9)
    assert len(y) == 16 and len(facet) == 8 and y.n == 9
    assert all(p in y for p in facet)
    assert check_rigid_facet(facet, Ambient(9), 4).ok


def test_level_facet():
    f = level_facet(hadamard_of_order(8), 4, 8)
    amb = Ambient(8, 4)
    assert len(f) == 7 and all(amb.contains(p) for p in f)
    assert diameter(f) == 4
    assert check_rigid_facet(f, amb, 4).maximal_ok
    assert naive_is_facet(f, amb, 4)
    with pytest.raises(ValueError):
        level_facet(hadamard_of_order(4), 2, 4)
    with pytest.raises(ValueError):
        level_facet(hadamard_of_order(8), 3, 8)
    with pytest.raises(ValueError):
        level_facet(hadamard_of_order(8), 4, 7)


def brute_max(n, r):
    cube = enumerate_cube(n).bits
    best = 0
    for mask in range(1, 1 << len(cube)):
        sub = [cube[i] for i in range(len(cube)) if mask >> i & 1]
        if len(sub) > best and all((x ^ y).bit_count() <= r for x, y in itertools.combinations(sub, 2)):
            best = len(sub)
    return best


@pytest.mark.parametrize("n", [1, 2, 3])
def test_max_facet_against_subset_enumeration(n):
    for r in range(1, n + 1):
        size, w = max_facet_bruteforce(n, r)
        assert size == brute_max(n, r) == len(w)
        assert diameter(w) <= r


def test_kleitman_small_values():
    assert kleitman_bound(4, 2) == 5
    assert kleitman_bound(5, 3) == 10
    assert kleitman_bound(3, 3) == 8
    with pytest.raises(ValueError):
        kleitman_bound(2, 3)


def test_min_and_rigid_searches():
    for n in (2, 3):
        for r in range(1, n + 1):
            size, w = min_facet_search(n, r)
            assert naive_is_facet(w, Ambient(n), r)
            oracle = min(len(a) for a, rr in SMALL if a.n == n and rr == r) if any(
                a.n == n and rr == r for a, rr in SMALL) else None
            # every facet is at least as large as the smallest one found
            if oracle is not None:
                assert size <= oracle
            rsize, rw = max_rigid_facet_search(n, r)
            expect = max((len(a) for a, rr in SMALL if a.n == n and rr == r), default=0)
            assert rsize == expect
    assert min_facet_search(3, 2)[0] == 4


def test_sweep_maximal_workers_independent():
    a = PointSet.from_strings(["+++++", "+----"])
    assert sweep_maximal(a, Ambient(5), 4, 1) == sweep_maximal(a, Ambient(5), 4, 3)


def test_probe_reports_outcomes():
    rep = probe_deleted_rows(hadamard_of_order(8), 2)
    assert rep["size"] == 8 and rep["ambient"] == "q6"
    assert isinstance(rep["maximal"], bool)


def test_order8_minus_two_rows_is_facet_of_q6_scale4():
    # the reading that lands in Q_6: an order-8 matrix with two rows removed
    rep = probe_deleted_rows(hadamard_of_order(8), 2)
    assert rep["diameter"] == 4 and rep["rigid"] and rep["maximal"]
    assert naive_is_facet(delete_rows(hadamard_of_order(8), 2), Ambient(6), 4)


def test_level_ambient_membership_checked():
    with pytest.raises(ValueError):
        check_rigid_facet(PointSet.from_strings(["++--"]), Ambient(4, 1), 0)
    lv = enumerate_level(4, 2)
    assert check_rigid_facet(lv, Ambient(4, 2), 4).ok
