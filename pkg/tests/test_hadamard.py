import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qrips.cube import CubePoint, inner_product
from qrips.hadamard import (
    HadamardMatrix,
    NotHadamard,
    available_orders,
    check_simplex_identities,
    delete_rows,
    h_minus,
    hadamard_of_order,
    hadamard_simplex,
    kronecker,
    normalize,
    paley,
    sylvester,
    verify,
)

PALEY_QS = [3, 5, 7, 9, 11, 13, 19, 23, 25, 27, 49, 81, 121, 125]


def gram_oracle(m):
    a = np.asarray(m, dtype=np.int64)
    return np.array_equal(a.T @ a, len(a) * np.eye(len(a), dtype=np.int64))


@pytest.mark.parametrize("m", [1, 2, 4, 8, 16, 32, 64])
def test_sylvester(m):
    h = sylvester(m)
    assert h.order == m and gram_oracle(h.entries) and h.normalized


@pytest.mark.parametrize("q", PALEY_QS)
def test_paley(q):
    h = paley(q)
    assert h.order == (q + 1 if q % 4 == 3 else 2 * (q + 1))
    assert gram_oracle(h.entries)


def test_paley_rejects_bad_q():
    for q in (15, 21, 4):
        with pytest.raises(ValueError):
            paley(q)


def test_verify_witness():
    ok, w = verify([[1, 1], [1, 1]])
    assert not ok and w == (0, 1)
    assert verify(sylvester(8).entries) == (True, None)
    with pytest.raises(ValueError):
        verify([[1, 0], [1, 1]])
    with pytest.raises(NotHadamard):
        HadamardMatrix(np.ones((2, 2), dtype=np.int8), "bad")


@given(st.integers(0, 3), st.lists(st.sampled_from((1, -1)), min_size=16, max_size=16),
       st.lists(st.sampled_from((1, -1)), min_size=16, max_size=16), st.randoms())
@settings(max_examples=60)
def test_equivalence_preserves_orthogonality(which, rs, cs, rnd):
    # row/column sign flips and permutations keep a matrix Hadamard
    base = [sylvester(16), paley(7), kronecker(sylvester(2), paley(7)), paley(5)][which]
    m = base.order
    a = base.entries.astype(int) * np.array(rs[:m])[:, None] * np.array(cs[:m])[None, :]
    perm_r, perm_c = list(range(m)), list(range(m))
    rnd.shuffle(perm_r)
    rnd.shuffle(perm_c)
    a = a[perm_r][:, perm_c]
    assert verify(a)[0] == gram_oracle(a) is True
    h = normalize(HadamardMatrix(a.astype(np.int8), "perm"))
    assert h.normalized and gram_oracle(h.entries)
    assert normalize(h) == h
    # normalization uses only sign flips: |entries| unchanged and each row/column is +-original
    ratio = h.entries.astype(int) * a
    assert np.all(np.abs(ratio) == 1)
    assert np.linalg.matrix_rank(ratio) == 1


@given(st.integers(2, 16), st.integers(0, 255))
def test_single_flip_breaks(m_exp, k):
    h = sylvester(1 << (m_exp % 4 + 1)).entries.astype(int)
    i, j = k % len(h), (k // len(h)) % len(h)
    h[i, j] *= -1
    ok, w = verify(h)
    assert not ok and not gram_oracle(h) and i in w


def test_kronecker_inner_products():
    h = kronecker(sylvester(2), paley(11))
    assert h.order == 24 and gram_oracle(h.entries)
    with pytest.raises(Exception):
        kronecker(sylvester(32), sylvester(16))


@pytest.mark.parametrize("m", [2, 4, 8, 12, 20, 24])
def test_simplex_identities(m):
    pts = hadamard_simplex(hadamard_of_order(m))
    assert len(pts) == m and pts.n == m - 1
    assert check_simplex_identities(pts)
    for i, x in enumerate(pts):
        for y in list(pts)[i + 1:]:
            assert inner_product(x, y) == -1


def test_simplex_identity_checker_rejects():
    assert not check_simplex_identities([CubePoint.from_string(s) for s in ("+++", "+--", "-+-", "-++")])
    with pytest.raises(ValueError):
        check_simplex_identities([CubePoint.from_string("++")])


def test_delete_rows_and_h_minus():
    h = hadamard_of_order(8)
    assert delete_rows(h, 1) == hadamard_simplex(h)
    hm = h_minus(h)
    assert len(hm) == 7 and hm.n == 8
    assert all(inner_product(x, y) == 0 for i, x in enumerate(hm) for y in list(hm)[i + 1:])
    with pytest.raises(ValueError):
        delete_rows(h, 7)  # leaves duplicate columns


def test_available_orders():
    assert available_orders(12) == [1, 2, 4, 8, 12]
    orders = available_orders(256)
    assert all(m == 1 or m == 2 or m % 4 == 0 for m in orders)
    for m in orders:
        h = hadamard_of_order(m)
        assert h.order == m and h.normalized and gram_oracle(h.entries)
    with pytest.raises(ValueError):
        hadamard_of_order(6)


def test_text_round_trip():
    h = hadamard_of_order(12)
    assert HadamardMatrix.from_text(h.to_text()) == h
