import itertools
import random

import pytest

from qrips.cube import Ambient, GuardExceeded, PointSet, enumerate_cube, enumerate_level
from qrips.facets import hadamard_cross_set, level_cross_set
from qrips.hadamard import hadamard_of_order
from qrips.rips import (
    CertificateError,
    NotCrossPolytopal,
    build,
    certify_nontrivial,
    is_cross_polytopal,
)


def brute_simplices(points: PointSet, r: int, max_dim: int):
    bits = points.bits
    out = []
    for k in range(1, max_dim + 2):
        out.append(sorted(
            s for s in itertools.combinations(range(len(bits)), k)
            if all((bits[i] ^ bits[j]).bit_count() <= r for i, j in itertools.combinations(s, 2))
        ))
    return out


@pytest.mark.parametrize("seed", range(12))
def test_clique_expansion_matches_subset_enumeration(seed):
    rnd = random.Random(seed)
    n = rnd.randint(3, 6)
    k = rnd.randint(1, 12)
    pts = PointSet.from_bits(n, rnd.sample(range(1 << n), min(k, 1 << n)))
    r = rnd.randint(0, n)
    c = build(pts, r, len(pts) - 1)
    assert c.simplices == brute_simplices(pts, r, len(pts) - 1)
    assert c.complete


def test_downward_closed():
    c = build(enumerate_cube(4), 2, 4)
    present = {s for level in c.simplices for s in level}
    for s in present:
        for face in itertools.combinations(s, len(s) - 1):
            assert not face or face in present


def test_q3_scale2_counts():
    c = build(enumerate_cube(3), 2, 4)
    assert c.counts == [8, 24, 32, 16, 0]
    assert c.complete


def test_truncation_flag():
    c = build(enumerate_cube(3), 2, 2)
    assert c.counts == [8, 24, 32] and not c.complete


def test_level_set_graph():
    # each 3-subset is more than 4 away only from its complement: C(20, 2) - 10 edges
    c = build(enumerate_level(6, 3), 4, 1)
    assert c.counts == [20, 180]


def test_workers_do_not_change_complex():
    pts = enumerate_cube(4)
    assert build(pts, 2, 5, 1).simplices == build(pts, 2, 5, 3).simplices


def test_guards():
    with pytest.raises(GuardExceeded):
        build(enumerate_cube(7), 1, 1)
    with pytest.raises(ValueError):
        build(enumerate_cube(2), 1, -1)


def test_cross_polytopal():
    y, _ = hadamard_cross_set(hadamard_of_order(8), 7)
    pairs = is_cross_polytopal(y, 4)
    assert len(pairs) == 8
    # each pair is antipodal
    assert all((y[i].bits ^ y[j].bits).bit_count() == 7 for i, j in pairs)
    with pytest.raises(NotCrossPolytopal) as exc:
        is_cross_polytopal(enumerate_cube(3), 1)
    assert exc.value.vertex == 0 and len(exc.value.non_neighbors) == 4
    with pytest.raises(ValueError):
        is_cross_polytopal(PointSet.from_strings(["++", "+-", "--"]), 1)


def test_square_cycle_is_cross_polytopal():
    sq = PointSet.from_strings(["++", "+-", "--", "-+"])
    assert is_cross_polytopal(sq, 1) == [(0, 2), (1, 3)]


def test_certificates():
    y, facet = hadamard_cross_set(hadamard_of_order(8), 7)
    cert = certify_nontrivial(y, facet, Ambient(7), 4)
    assert cert.homology_dim == 7
    assert cert.to_json()["claim"] == "H_7(VR(Q_7; 4)) != 0"
    y, facet = level_cross_set(hadamard_of_order(8), 4, 8)
    cert = certify_nontrivial(y, facet, Ambient(8, 4), 4)
    assert cert.homology_dim == 6


def test_certificate_preconditions_named():
    y, facet = hadamard_cross_set(hadamard_of_order(8), 7)
    with pytest.raises(CertificateError, match="not a vertex"):
        certify_nontrivial(PointSet([p for p in y if p != facet[0]]),
                           facet, Ambient(7), 4)
    with pytest.raises(CertificateError, match="cross-polytopal"):
        cube = enumerate_cube(3)
        certify_nontrivial(cube, PointSet(list(cube)[:2]), Ambient(3), 1)
    # cross-polytopal at scale 2, but +-+ can join the chosen facet
    y = PointSet.from_strings(["+++", "---", "++-", "--+"])
    facet = PointSet.from_strings(["+++", "++-"])
    with pytest.raises(CertificateError, match="not maximal"):
        certify_nontrivial(y, facet, Ambient(3), 2)
    with pytest.raises(CertificateError, match="both ends"):
        certify_nontrivial(y, PointSet.from_strings(["+++", "---"]), Ambient(3), 2)
