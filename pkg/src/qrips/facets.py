"""Rigid facets of Vietoris-Rips complexes of cubes and level sets.

A set A is certified at scale r in an ambient space X when

* its diameter is exactly r,
* it is rigid: every a in A has some x in A at distance r,
* it is maximal: every y in X outside A is farther than r from some a in A.

Maximality is always settled by an exhaustive, streaming sweep of X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from . import _parallel
from .cube import (
    Ambient,
    CubePoint,
    GuardExceeded,
    PointSet,
    diameter,
    enumerate_cube,
    hamming_ball,
    set_product,
)
from .hadamard import HadamardMatrix, delete_rows, h_minus, hadamard_simplex

# re-certify constructions automatically when the new ambient is at most this big
AUTO_SWEEP_LIMIT = 1 << 16
CLIQUE_DIM_LIMIT = 7
MIN_SEARCH_DIM_LIMIT = 6
RIGID_SEARCH_DIM_LIMIT = 5


@dataclass(frozen=True)
class FacetCertificate:
    point_set: PointSet
    ambient: Ambient
    scale: int
    diameter_ok: bool
    rigid_ok: bool
    maximal_ok: bool
    witness: dict = field(default_factory=dict)
    method: str = "sweep"

    @property
    def ok(self) -> bool:
        return self.diameter_ok and self.rigid_ok and self.maximal_ok

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "scale": self.scale,
            "size": len(self.point_set),
            "points": [str(p) for p in self.point_set],
            "diameter_ok": self.diameter_ok,
            "rigid_ok": self.rigid_ok,
            "maximal_ok": self.maximal_ok,
            "rigid_facet": self.ok,
            "witness": self.witness,
            "method": self.method,
        }


def _sweep_chunk(args) -> int | None:
    """Index (in ambient order) of the first point that could join A, or None."""
    ambient, start, stop, a_bits, r = args
    members = set(a_bits)
    for idx, y in enumerate(itertools.islice(ambient.iter_bits(), start, stop), start):
        if y in members:
            continue
        for a in a_bits:
            if (y ^ a).bit_count() > r:
                break
        else:
            return idx
    return None


def sweep_maximal(a: PointSet, ambient: Ambient, r: int, workers: int = 1) -> CubePoint | None:
    """First ambient point outside ``a`` within distance r of all of ``a`` (None if maximal)."""
    ambient.check_guard()
    chunks = _parallel.split_range(ambient.size, workers)
    jobs = [(ambient, lo, hi, a.bits, r) for lo, hi in chunks]
    hits = [h for h in _parallel.ordered_map(_sweep_chunk, jobs, workers) if h is not None]
    if not hits:
        return None
    idx = min(hits)
    return CubePoint(ambient.n, next(itertools.islice(ambient.iter_bits(), idx, None)))


def check_rigid_facet(a: PointSet, ambient: Ambient, r: int, workers: int = 1) -> FacetCertificate:
    if not len(a):
        raise ValueError("cannot certify an empty set")
    if a.n != ambient.n:
        raise ValueError(f"points live in Q_{a.n} but ambient is {ambient}")
    for p in a:
        if not ambient.contains(p):
            raise ValueError(f"point {p} is not in {ambient}")
    ambient.check_guard()

    bits = a.bits
    witness: dict = {}
    ecc = [max((x ^ y).bit_count() for y in bits) for x in bits]
    diam = max(ecc)
    diameter_ok = diam == r
    if not diameter_ok:
        i = ecc.index(diam)
        j = next(j for j, y in enumerate(bits) if (bits[i] ^ y).bit_count() == diam)
        witness["diameter"] = {"value": diam, "pair": [str(a[i]), str(a[j])]}
    rigid_ok = all(e == r for e in ecc)
    if not rigid_ok:
        i = next(i for i, e in enumerate(ecc) if e != r)
        witness["rigid"] = {"point": str(a[i]), "eccentricity": ecc[i]}
    y = sweep_maximal(a, ambient, r, workers)
    maximal_ok = y is None
    if y is not None:
        witness["maximal"] = {"point": str(y)}
    return FacetCertificate(a, ambient, r, diameter_ok, rigid_ok, maximal_ok, witness)


def _require_certified(cert: FacetCertificate, what: str) -> None:
    if not cert.ok:
        raise ValueError(f"{what} is not a certified rigid facet")
    if cert.ambient.level is not None:
        raise ValueError(f"{what} must be certified in a full cube, not {cert.ambient}")


def _recertify(points: PointSet, ambient: Ambient, r: int, recertify, method: str, workers: int):
    if recertify is None:
        recertify = ambient.size <= AUTO_SWEEP_LIMIT
    if recertify:
        return check_rigid_facet(points, ambient, r, workers)
    return FacetCertificate(points, ambient, r, True, True, True, method=method)


def product_facet(
    c1: FacetCertificate, c2: FacetCertificate, recertify: bool | None = None, workers: int = 1
) -> FacetCertificate:
    """A1 x A2 as a rigid facet at (n1 + n2, r1 + r2).

    Without re-certification the flags are the ones guaranteed by the
    product construction (``method='product'``).
    """
    _require_certified(c1, "first factor")
    _require_certified(c2, "second factor")
    prod = set_product(c1.point_set, c2.point_set)
    return _recertify(prod, Ambient(prod.n), c1.scale + c2.scale, recertify, "product", workers)


def pad_facet(
    cert: FacetCertificate, m: int, recertify: bool | None = None, workers: int = 1
) -> FacetCertificate:
    """A x {1_m}, still a rigid facet at the same scale."""
    _require_certified(cert, "padded set")
    if m == 0:
        return cert
    if m < 0:
        raise ValueError("padding length must be non-negative")
    padded = set_product(cert.point_set, PointSet([CubePoint.ones(m)]))
    return _recertify(padded, Ambient(padded.n), cert.scale, recertify, "padding", workers)


def certify_with_padding(points: PointSet, n0: int, n: int, r: int, workers: int = 1) -> FacetCertificate:
    """Sweep at the minimal ambient Q_{n0}, then pad (without re-sweeping) up to Q_n."""
    cert = check_rigid_facet(points, Ambient(n0), r, workers)
    if n > n0 and cert.ok:
        return pad_facet(cert, n - n0, recertify=False)
    return cert


def _bits_from_parts(parts: list[tuple[int, int]]) -> int:
    """Concatenate (bits, length) pieces; zero-length pieces are skipped."""
    out = 0
    for bits, length in parts:
        out = (out << length) | bits
    return out


def subcube_facet(r: int, n: int) -> PointSet:
    """Q_r x {1_{n-r}} (for r = 0 the single point 1_n)."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    ones = (1 << (n - r)) - 1
    if r == 0:
        return PointSet([CubePoint.ones(n)])
    return PointSet.from_bits(n, ((x << (n - r)) | ones for x in enumerate_cube(r).bits))


def hadamard_cross_set(h: HadamardMatrix, n: int) -> tuple[PointSet, PointSet]:
    """(Y, facet) for the cube: Y = (A u -A) x {1}, facet = A x {1}, A the Hadamard simplex."""
    a = hadamard_simplex(h)
    if n < a.n:
        raise ValueError(f"need n >= {a.n} for an order-{h.order} simplex, got {n}")
    m = n - a.n
    facet = PointSet.from_bits(n, (_bits_from_parts([(x, a.n), ((1 << m) - 1, m)]) for x in a.bits))
    y = PointSet.from_bits(n, (_bits_from_parts([(x, a.n), ((1 << m) - 1, m)]) for x in (a.union(-a)).bits))
    return y, facet


def _level_parts(h: HadamardMatrix, level: int, n: int) -> tuple[PointSet, int, int]:
    if not h.normalized:
        raise ValueError("level constructions need a normalized Hadamard matrix")
    if h.order % 2:
        raise ValueError(f"order must be even, got {h.order}")
    r = h.order // 2
    if r < 4:
        raise ValueError(f"level facet needs r >= 4 (order >= 8), got r={r}")
    if level < r:
        raise ValueError(f"level facet needs level >= r, got level={level}, r={r}")
    if n < level + r:
        raise ValueError(f"level facet needs n >= level + r = {level + r}, got n={n}")
    return h_minus(h), level - r, n - level - r


def level_facet(h: HadamardMatrix, level: int, n: int) -> PointSet:
    """H^- x {1_{level-r}} x {-1_{n-level-r}}, a (2r-1)-point facet of VR(L_level^n; r)."""
    hm, k_plus, k_minus = _level_parts(h, level, n)
    plus = (1 << k_plus) - 1
    return PointSet.from_bits(n, (_bits_from_parts([(x, hm.n), (plus, k_plus), (0, k_minus)]) for x in hm.bits))


def level_cross_set(h: HadamardMatrix, level: int, n: int) -> tuple[PointSet, PointSet]:
    """(Y, facet) for the level set: Y = (H^- u -H^-) x {1} x {-1}."""
    hm, k_plus, k_minus = _level_parts(h, level, n)
    plus = (1 << k_plus) - 1
    y = PointSet.from_bits(
        n, (_bits_from_parts([(x, hm.n), (plus, k_plus), (0, k_minus)]) for x in hm.union(-hm).bits)
    )
    return y, level_facet(h, level, n)


def kleitman_bound(n: int, r: int) -> int:
    """Largest diameter-r subset of Q_n.

    For r >= n the whole cube qualifies; otherwise Kleitman's sums
    (starting at i = 0, so that b(n; 0) = 1).
    """
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if r >= n:
        return 1 << n
    if r % 2 == 0:
        return sum(comb(n, i) for i in range(r // 2 + 1))
    return 2 * sum(comb(n - 1, i) for i in range((r - 1) // 2 + 1))


def distance_graph(points: PointSet, r: int) -> list[int]:
    """Adjacency bit rows: bit j of row i set iff 0 < d(p_i, p_j) <= r."""
    bits = points.bits
    rows = []
    for i, x in enumerate(bits):
        row = 0
        for j, y in enumerate(bits):
            if i != j and (x ^ y).bit_count() <= r:
                row |= 1 << j
        rows.append(row)
    return rows


def _color_order(p: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of candidate set p; vertices listed by non-decreasing colour."""
    order, colors = [], []
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            p &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def _max_clique(adj: list[int], start: int, cand: int) -> list[int]:
    best: list[int] = []

    def expand(clique: list[int], p: int) -> None:
        nonlocal best
        order, colors = _color_order(p, adj)
        for k in range(len(order) - 1, -1, -1):
            if len(clique) + colors[k] <= len(best):
                return
            v = order[k]
            clique.append(v)
            np_ = p & adj[v]
            if np_:
                expand(clique, np_)
            elif len(clique) > len(best):
                best = sorted(clique)
            clique.pop()
            p &= ~(1 << v)

    if cand:
        expand([start], cand)
    else:
        best = [start]
    return best


def _cube_graph(n: int, r: int, limit: int) -> tuple[PointSet, list[int]]:
    if n > limit:
        raise GuardExceeded(f"clique search on Q_{n} exceeds the n <= {limit} guard")
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    pts = enumerate_cube(n)
    return pts, distance_graph(pts, r)


def max_facet_bruteforce(n: int, r: int) -> tuple[int, PointSet]:
    """Exact b(n; r) by branch and bound over bit-packed candidate sets.

    Translations x -> x * c preserve Hamming distance, so every clique has a
    translate through the first point 1_n, and the search starts there.
    """
    pts, adj = _cube_graph(n, r, CLIQUE_DIM_LIMIT)
    clique = _max_clique(adj, 0, adj[0])
    return len(clique), PointSet(pts[i] for i in clique)


def _maximal_cliques(adj: list[int], start: int):
    """Bron-Kerbosch with pivoting over maximal cliques containing ``start``.

    The generator receives the current best bound via ``send``; branches whose
    clique already reaches it are cut.
    """
    stack = [([start], adj[start], 0)]
    while stack:
        r_, p, x = stack.pop()
        if not p and not x:
            yield r_
            continue
        if not p:
            continue
        pu = p | x
        pivot = max(_iter_bits(pu), key=lambda u: (p & adj[u]).bit_count())
        for v in _iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            stack.append((r_ + [v], p & adj[v], x & adj[v]))
            p &= ~bit
            x |= bit


def _iter_bits(b: int):
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def min_facet_search(n: int, r: int) -> tuple[int, PointSet]:
    """Exact s(n; r): the smallest maximal clique of the distance-<=r graph on Q_n.

    Bron-Kerbosch from the first point (translations act transitively), cutting
    every branch that can no longer beat the smallest facet found so far.
    """
    pts, adj = _cube_graph(n, r, MIN_SEARCH_DIM_LIMIT)
    best: list[int] | None = None
    stack = [([0], adj[0], 0)]
    while stack:
        clique, p, x = stack.pop()
        if not p:
            if not x and (best is None or len(clique) < len(best)):
                best = sorted(clique)
            continue
        if best is not None and len(clique) + 1 >= len(best):
            continue
        pivot = max(_iter_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in _iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            stack.append((clique + [v], p & adj[v], x & adj[v]))
            p &= ~bit
            x |= bit
    assert best is not None
    return len(best), PointSet(pts[i] for i in best)


def _is_rigid(bits: list[int], r: int) -> bool:
    return all(max((x ^ y).bit_count() for y in bits) == r for x in bits)


def max_rigid_facet_search(n: int, r: int) -> tuple[int, PointSet | None]:
    """Largest rigid, maximally diameter-r subset of Q_n, by listing all maximal cliques."""
    pts, adj = _cube_graph(n, r, RIGID_SEARCH_DIM_LIMIT)
    all_bits = pts.bits
    best: list[int] | None = None
    for clique in _maximal_cliques(adj, 0):
        if best is not None and len(clique) <= len(best):
            continue
        c = sorted(clique)
        if _is_rigid([all_bits[i] for i in c], r):
            best = c
    if best is None:
        return 0, None
    return len(best), PointSet(pts[i] for i in best)


def probe_deleted_rows(h: HadamardMatrix, rows: int, workers: int = 1) -> dict:
    """Record whether the columns of H minus its first ``rows`` rows are maximal at their own diameter.

    Only outcomes are recorded; nothing is asserted.
    """
    cols = delete_rows(h, rows)
    diam = diameter(cols) if len(cols) > 1 else 0
    cert = check_rigid_facet(cols, Ambient(cols.n), diam, workers)
    return {
        "order": h.order,
        "construction": h.construction,
        "rows_deleted": rows,
        "ambient": cert.ambient.to_json(),
        "size": len(cols),
        "diameter": diam,
        "rigid": cert.rigid_ok,
        "maximal": cert.maximal_ok,
        "witness": cert.witness.get("maximal"),
    }


def hamming_ball_set(n: int, radius: int) -> PointSet:
    """Ball of the given radius around 1_n (Kleitman's extremal set for even r)."""
    return hamming_ball(CubePoint.ones(n), radius)

