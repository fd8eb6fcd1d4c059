"""Z/2 Betti numbers of clique complexes, by boundary-matrix ranks.

Ranks are computed with the standard column reduction (the pivot of a
column is its largest row index).  Working from the top dimension down,
every pivot row of the reduced d_{k+1} is a k-simplex whose column in d_k
must reduce to zero, so those columns are skipped ("clearing").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import _parallel
from .rips import VRComplex

# columns are packed into int bit vectors when the row count is at most this
PACKED_ROW_LIMIT = 4096


class CapTooSmall(ValueError):
    pass


@dataclass
class SparseZ2Matrix:
    n_rows: int
    n_cols: int
    columns: list[tuple[int, ...]]

    def __post_init__(self) -> None:
        if len(self.columns) != self.n_cols:
            raise ValueError("column count does not match n_cols")

    def packed(self) -> list[int]:
        out = []
        for col in self.columns:
            v = 0
            for i in col:
                v |= 1 << i
            out.append(v)
        return out

    def dense(self):
        import numpy as np

        a = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for j, col in enumerate(self.columns):
            a[list(col), j] = 1
        return a

    @classmethod
    def from_dense(cls, a) -> SparseZ2Matrix:
        rows, cols = a.shape
        return cls(rows, cols, [tuple(int(i) for i in (a[:, j] % 2).nonzero()[0]) for j in range(cols)])


def boundary_matrix(c: VRComplex, k: int) -> SparseZ2Matrix:
    """d_k : C_k -> C_{k-1}; rows and columns follow the complex's simplex order."""
    if not 1 <= k <= c.max_dim:
        raise ValueError(f"boundary dimension {k} outside 1..{c.max_dim}")
    index = {s: i for i, s in enumerate(c.simplices[k - 1])}
    cols = []
    for s in c.simplices[k]:
        cols.append(tuple(sorted(index[s[:i] + s[i + 1 :]] for i in range(len(s)))))
    return SparseZ2Matrix(len(c.simplices[k - 1]), len(c.simplices[k]), cols)


def _reduce_packed(m: SparseZ2Matrix, skip: frozenset[int]) -> tuple[int, set[int]]:
    pivots: dict[int, int] = {}
    for j, col in enumerate(m.columns):
        if j in skip:
            continue
        v = 0
        for i in col:
            v |= 1 << i
        while v:
            low = v.bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = v
                break
            v ^= p
    return len(pivots), set(pivots)


def _reduce_sparse(m: SparseZ2Matrix, skip: frozenset[int]) -> tuple[int, set[int]]:
    pivots: dict[int, set[int]] = {}
    for j, col in enumerate(m.columns):
        if j in skip or not col:
            continue
        v = set(col)
        low = col[-1]
        while True:
            p = pivots.get(low)
            if p is None:
                pivots[low] = v
                break
            v ^= p
            if not v:
                break
            low = max(v)
    return len(pivots), set(pivots)


def reduce_z2(m: SparseZ2Matrix, skip: frozenset[int] = frozenset()) -> tuple[int, set[int]]:
    """(rank, pivot rows) of ``m`` ignoring the columns in ``skip``."""
    if m.n_rows <= PACKED_ROW_LIMIT:
        return _reduce_packed(m, skip)
    return _reduce_sparse(m, skip)


def rank_z2(m: SparseZ2Matrix) -> int:
    return reduce_z2(m)[0]


def _rank_job(m: SparseZ2Matrix) -> int:
    return rank_z2(m)


@dataclass
class BettiTable:
    counts: list[int]
    ranks: list[int]
    betti: list[int]
    reduced: bool = True
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.betti))

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced,
            "betti": {str(k): b for k, b in enumerate(self.betti)},
            "simplex_counts": {str(k): n for k, n in enumerate(self.counts)},
            "boundary_ranks": {str(k): r for k, r in enumerate(self.ranks)},
        }


def betti_z2(
    c: VRComplex, through_dim: int, *, clearing: bool = True, reduced: bool = True, workers: int = 1
) -> BettiTable:
    """Betti numbers 0..through_dim over Z/2.

    Needs d_{through_dim + 1}, so the complex must be built one dimension
    higher, unless it is complete (nothing was truncated).
    """
    if through_dim < 0:
        raise ValueError("through_dim must be non-negative")
    top = through_dim + 1
    if top > c.max_dim and not c.complete:
        raise CapTooSmall(
            f"complex truncated at dimension {c.max_dim}; Betti_{through_dim} needs simplices of "
            f"dimension {top} (rebuild with max_dim >= {top})"
        )
    built_top = min(top, c.max_dim)
    # rank[k] = rank d_k for k = 0..top; d_0 = 0 and anything above the complete complex is 0
    rank = [0] * (top + 1)
    if clearing:
        cleared: frozenset[int] = frozenset()
        for k in range(built_top, 0, -1):
            rank[k], piv = reduce_z2(boundary_matrix(c, k), cleared)
            cleared = frozenset(piv)
    else:
        mats = [boundary_matrix(c, k) for k in range(1, built_top + 1)]
        for k, rk in enumerate(_parallel.ordered_map(_rank_job, mats, workers), 1):
            rank[k] = rk
    counts = [c.count(k) for k in range(through_dim + 1)]
    betti = [counts[k] - rank[k] - rank[k + 1] for k in range(through_dim + 1)]
    if reduced and counts[0] > 0:
        betti[0] -= 1
    return BettiTable(counts, rank[: through_dim + 1], betti, reduced)


def euler_characteristic(c: VRComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(c.counts))


def closed_form_c(n: int) -> int:
    """Number of 3-spheres in the wedge decomposition of VR(Q_n; 2)."""
    if n < 2:
        raise ValueError("closed_form_c needs n >= 2")
    return sum((j + 1) * (2 ** (n - 2) - 2 ** (i - 1)) for i in range(1, n) for j in range(i))


def closed_form_a(n: int) -> int:
    """Number of 4-spheres in VR(Q_n; 3), n >= 5."""
    if n < 5:
        raise ValueError("closed_form_a needs n >= 5")
    return sum(2 ** (i - 1) * comb(i, 4) for i in range(4, n))


def closed_form_b(n: int) -> int:
    """Number of 7-spheres in VR(Q_n; 3), n >= 5."""
    if n < 5:
        raise ValueError("closed_form_b needs n >= 5")
    return 2 ** (n - 4) * comb(n, 4)
