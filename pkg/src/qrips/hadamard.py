"""Hadamard matrices and the point sets cut out of them.

Constructors (Sylvester, Paley I/II, Kronecker) only ever hand back
matrices that passed :func:`verify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import _gf
from .cube import CubePoint, PointSet

MAX_ORDER = 256
PALEY_Q_LIMIT = 127


class NotHadamard(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    entries: np.ndarray
    construction: str = field(default="given", compare=False)

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=np.int8)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)
        ok, witness = verify(a)
        if not ok:
            raise NotHadamard(f"rows {witness} are not orthogonal")

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def normalized(self) -> bool:
        return bool((self.entries[0] == 1).all() and (self.entries[:, 0] == 1).all())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HadamardMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def to_text(self) -> str:
        return "".join("".join("+" if v > 0 else "-" for v in row) + "\n" for row in self.entries)

    @classmethod
    def from_text(cls, text: str) -> HadamardMatrix:
        rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if any(c not in "+-" for row in rows for c in row):
            raise ValueError("matrix text must use only '+' and '-'")
        return cls(np.array([[1 if c == "+" else -1 for c in row] for row in rows]), "file")

    def __repr__(self) -> str:
        return f"HadamardMatrix(order={self.order}, construction={self.construction!r})"


def verify(m) -> tuple[bool, tuple[int, int] | None]:
    """Check pairwise row orthogonality of a square +-1 matrix.

    Returns ``(True, None)`` or ``(False, (i, j))`` for the first offending
    row pair in lexicographic order.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.isin(a, (1, -1)).all():
        raise ValueError("entries must be +1 or -1")
    g = a.astype(np.int64) @ a.T.astype(np.int64)
    off = g - a.shape[0] * np.eye(a.shape[0], dtype=np.int64)
    bad = np.argwhere(np.triu(off != 0, k=1))
    if len(bad):
        i, j = bad[0]
        return False, (int(i), int(j))
    return True, None


def sylvester(m: int) -> HadamardMatrix:
    if m < 1 or m & (m - 1):
        raise ValueError(f"Sylvester order must be a power of two, got {m}")
    if m > MAX_ORDER:
        raise ValueError(f"order {m} exceeds MAX_ORDER={MAX_ORDER}")
    h = np.ones((1, 1), dtype=np.int64)
    while h.shape[0] < m:
        h = np.block([[h, h], [h, -h]])
    return HadamardMatrix(h, f"sylvester({m})")


def _paley_core(q: int) -> np.ndarray:
    """Jacobsthal matrix Q[a, b] = chi(a - b) over GF(q)."""
    f = _gf.field(q)
    return f.quadratic_character()[f.subtraction_table()]


def paley(q: int) -> HadamardMatrix:
    """Paley I (q = 3 mod 4, order q+1) or Paley II (q = 1 mod 4, order 2(q+1))."""
    if q % 2 == 0:
        raise ValueError(f"Paley needs an odd prime power, got {q}")
    if q > PALEY_Q_LIMIT:
        raise ValueError(f"q={q} beyond the built-in field table (q <= {PALEY_Q_LIMIT})")
    if _gf.prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    jac = _paley_core(q)
    ones = np.ones(q, dtype=np.int64)
    if q % 4 == 3:
        s = np.zeros((q + 1, q + 1), dtype=np.int64)
        s[0, 1:] = ones
        s[1:, 0] = -ones
        s[1:, 1:] = jac
        h = s + np.eye(q + 1, dtype=np.int64)
        return HadamardMatrix(h, f"paley1({q})")
    c = np.zeros((q + 1, q + 1), dtype=np.int64)
    c[0, 1:] = ones
    c[1:, 0] = ones
    c[1:, 1:] = jac
    h = np.kron(c, np.array([[1, 1], [1, -1]])) + np.kron(
        np.eye(q + 1, dtype=np.int64), np.array([[1, -1], [-1, -1]])
    )
    return HadamardMatrix(h, f"paley2({q})")


def kronecker(h1: HadamardMatrix, h2: HadamardMatrix) -> HadamardMatrix:
    m = h1.order * h2.order
    if m > MAX_ORDER:
        raise ValueError(f"kronecker order {m} exceeds MAX_ORDER={MAX_ORDER}")
    k = np.kron(h1.entries.astype(np.int64), h2.entries.astype(np.int64))
    return HadamardMatrix(k, f"kron({h1.construction},{h2.construction})")


def normalize(h: HadamardMatrix) -> HadamardMatrix:
    """Flip rows, then columns, so the first row and column are all +1."""
    a = h.entries.astype(np.int64)
    a = a * a[:, [0]]
    a = a * a[[0], :]
    if np.array_equal(a, h.entries):
        return h
    return HadamardMatrix(a, h.construction if h.normalized else f"normalize({h.construction})")


def _columns(rows: np.ndarray) -> list[CubePoint]:
    return [CubePoint.from_signs(col.tolist()) for col in rows.T]


def delete_rows(h: HadamardMatrix, r: int) -> PointSet:
    """Columns of ``h`` with its first ``r`` rows removed, as points of Q_{m-r}."""
    if not h.normalized:
        raise ValueError("delete_rows expects a normalized Hadamard matrix")
    if not 0 <= r < h.order:
        raise ValueError(f"rows to delete must be in 0..{h.order - 1}, got {r}")
    cols = _columns(h.entries[r:])
    try:
        return PointSet(cols, h.order - r)
    except ValueError as exc:
        raise ValueError(f"deleting {r} rows leaves duplicate columns: {exc}") from None


def hadamard_simplex(h: HadamardMatrix) -> PointSet:
    """The m columns of a normalized order-m matrix minus its first row (in Q_{m-1})."""
    if h.order < 2:
        raise ValueError("a Hadamard simplex needs order >= 2")
    return delete_rows(h, 1)


def h_minus(h: HadamardMatrix) -> PointSet:
    """All columns but the first of a normalized matrix, as points of Q_m."""
    if not h.normalized:
        raise ValueError("h_minus expects a normalized Hadamard matrix")
    return PointSet(_columns(h.entries[:, 1:]), h.order)


def check_simplex_identities(points: Iterable[CubePoint]) -> bool:
    """Sum of the vectors is zero and sum of x x^T is (n+1) I.

    Raises ``ValueError`` when the number of points is not n+1.
    """
    pts = list(points)
    if not pts:
        raise ValueError("empty point collection")
    n = pts[0].n
    if len(pts) != n + 1:
        raise ValueError(f"need n+1 = {n + 1} points in Q_{n}, got {len(pts)}")
    m = np.array([p.signs for p in pts], dtype=np.int64)
    return bool((m.sum(axis=0) == 0).all() and np.array_equal(m.T @ m, (n + 1) * np.eye(n, dtype=np.int64)))


def _paley_orders(limit: int) -> dict[int, int]:
    """order -> q for the Paley constructions that fit under ``limit``."""
    out: dict[int, int] = {}
    for q in range(3, PALEY_Q_LIMIT + 1, 2):
        if _gf.prime_power(q) is None:
            continue
        m = q + 1 if q % 4 == 3 else 2 * (q + 1)
        if m <= limit:
            out.setdefault(m, q)
    return out


@lru_cache(maxsize=None)
def _recipes(limit: int) -> dict[int, tuple]:
    """Deterministic recipe per constructible order: sylvester > paley I > paley II > kronecker."""
    recipes: dict[int, tuple] = {}
    m = 1
    while m <= limit:
        recipes[m] = ("sylvester", m)
        m *= 2
    paley1 = {m: q for m, q in _paley_orders(limit).items() if q % 4 == 3}
    paley2 = {m: q for m, q in _paley_orders(limit).items() if q % 4 == 1}
    for table in (paley1, paley2):
        for m, q in sorted(table.items()):
            recipes.setdefault(m, ("paley", q))
    changed = True
    while changed:
        changed = False
        for a in sorted(recipes):
            for b in sorted(recipes):
                if a < 2 or b < 2 or a * b > limit or a * b in recipes:
                    continue
                recipes[a * b] = ("kronecker", a, b)
                changed = True
    # kronecker recipes found later may not use the smallest first factor; fix them
    for m, rec in list(recipes.items()):
        if rec[0] == "kronecker":
            a = min(a for a in recipes if 1 < a < m and m % a == 0 and m // a in recipes)
            recipes[m] = ("kronecker", a, m // a)
    return recipes


def available_orders(limit: int = MAX_ORDER) -> list[int]:
    if limit > MAX_ORDER:
        raise ValueError(f"limit {limit} exceeds MAX_ORDER={MAX_ORDER}")
    return sorted(_recipes(limit))


@lru_cache(maxsize=None)
def hadamard_of_order(m: int) -> HadamardMatrix:
    """A fixed, reproducible normalized Hadamard matrix of order ``m``."""
    rec = _recipes(MAX_ORDER).get(m)
    if rec is None:
        raise ValueError(f"no built-in Hadamard construction of order {m}")
    if rec[0] == "sylvester":
        h = sylvester(m)
    elif rec[0] == "paley":
        h = paley(rec[1])
    else:
        h = kronecker(hadamard_of_order(rec[1]), hadamard_of_order(rec[2]))
    return normalize(h)
