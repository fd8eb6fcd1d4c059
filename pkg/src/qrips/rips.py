"""Vietoris-Rips clique complexes of point sets, and cross-polytope certificates."""

from __future__ import annotations

from dataclasses import dataclass

from . import _parallel
from .cube import Ambient, GuardExceeded, PointSet
from .facets import FacetCertificate, check_rigid_facet, distance_graph

VERTEX_LIMIT = 100
SIMPLEX_LIMIT = 4_000_000


@dataclass
class VRComplex:
    vertices: PointSet
    scale: int
    max_dim: int
    simplices: list[list[tuple[int, ...]]]
    # True when no clique larger than max_dim + 1 vertices exists
    complete: bool

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k < len(self.simplices) else 0

    @property
    def counts(self) -> list[int]:
        return [len(s) for s in self.simplices]

    @property
    def dim(self) -> int:
        return max((k for k, s in enumerate(self.simplices) if s), default=-1)

    def dump(self) -> str:
        """One simplex per line, 'k: i0 i1 ... ik'."""
        return "".join(
            f"{k}: {' '.join(map(str, s))}\n" for k, level in enumerate(self.simplices) for s in level
        )


def _expand_from(args) -> tuple[list[list[tuple[int, ...]]], bool]:
    adj, roots, max_size, limit = args
    out: list[list[tuple[int, ...]]] = [[] for _ in range(max_size)]
    overflow = False
    stack = []
    total = 0
    for v in roots:
        stack.append(((v,), adj[v] & ~((1 << (v + 1)) - 1)))
        while stack:
            simplex, cand = stack.pop()
            out[len(simplex) - 1].append(simplex)
            total += 1
            if total > limit:
                raise GuardExceeded(f"clique expansion exceeds SIMPLEX_LIMIT={limit} simplices")
            if len(simplex) == max_size:
                overflow = overflow or bool(cand)
                continue
            # push in reverse so lower indices are expanded first
            children = []
            while cand:
                low = cand & -cand
                w = low.bit_length() - 1
                cand ^= low
                children.append((simplex + (w,), cand & adj[w]))
            stack.extend(reversed(children))
    return out, overflow


def build(points: PointSet, r: int, max_dim: int, workers: int = 1) -> VRComplex:
    """All cliques of the distance-<=r graph with at most max_dim + 1 vertices."""
    if len(points) > VERTEX_LIMIT:
        raise GuardExceeded(f"{len(points)} vertices exceeds VERTEX_LIMIT={VERTEX_LIMIT}")
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    adj = distance_graph(points, r)
    n = len(points)
    jobs = [(adj, list(range(lo, hi)), max_dim + 1, SIMPLEX_LIMIT) for lo, hi in _parallel.split_range(n, workers)]
    parts = _parallel.ordered_map(_expand_from, jobs, workers)
    simplices: list[list[tuple[int, ...]]] = [[] for _ in range(max_dim + 1)]
    overflow = False
    for out, over in parts:
        overflow = overflow or over
        for k, lst in enumerate(out):
            simplices[k].extend(lst)
    if sum(map(len, simplices)) > SIMPLEX_LIMIT:
        raise GuardExceeded(f"clique expansion exceeds SIMPLEX_LIMIT={SIMPLEX_LIMIT} simplices")
    for lst in simplices:
        lst.sort()
    return VRComplex(points, r, max_dim, simplices, not overflow)


class NotCrossPolytopal(ValueError):
    def __init__(self, vertex: int, non_neighbors: list[int]):
        self.vertex = vertex
        self.non_neighbors = non_neighbors
        super().__init__(
            f"vertex {vertex} has {len(non_neighbors)} non-neighbours {non_neighbors}, expected exactly one"
        )


def is_cross_polytopal(y: PointSet, r: int) -> list[tuple[int, int]]:
    """The perfect matching of far pairs (d > r) when every other pair is within r.

    Raises NotCrossPolytopal naming a vertex whose far set is not a single point.
    """
    if len(y) % 2:
        raise ValueError(f"cross-polytopal sets have an even number of points, got {len(y)}")
    bits = y.bits
    pairing = []
    for i, x in enumerate(bits):
        far = [j for j, z in enumerate(bits) if j != i and (x ^ z).bit_count() > r]
        if len(far) != 1:
            raise NotCrossPolytopal(i, far)
        if i < far[0]:
            pairing.append((i, far[0]))
    return pairing


class CertificateError(ValueError):
    """A precondition of a cross-polytope certificate failed; the message names it."""


@dataclass(frozen=True)
class CrossPolytopeCertificate:
    vertices: PointSet
    pairing: list[tuple[int, int]]
    facet: PointSet
    ambient: Ambient
    scale: int
    facet_certificate: FacetCertificate

    @property
    def homology_dim(self) -> int:
        return len(self.pairing) - 1

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "scale": self.scale,
            "vertices": [str(p) for p in self.vertices],
            "pairing": [list(p) for p in self.pairing],
            "facet": [str(p) for p in self.facet],
            "facet_maximal": self.facet_certificate.maximal_ok,
            "homology_dim": self.homology_dim,
            "claim": f"H_{self.homology_dim}(VR({self.ambient}; {self.scale})) != 0",
        }


def certify_nontrivial(
    y: PointSet, facet: PointSet, ambient: Ambient, r: int, workers: int = 1
) -> CrossPolytopeCertificate:
    for p in facet:
        if p not in y:
            raise CertificateError(f"facet point {p} is not a vertex of Y")
    for p in y:
        if not ambient.contains(p):
            raise CertificateError(f"vertex {p} is not in {ambient}")
    try:
        pairing = is_cross_polytopal(y, r)
    except ValueError as exc:
        raise CertificateError(f"Y is not cross-polytopal: {exc}") from None
    if len(facet) != len(pairing):
        raise CertificateError(f"facet has {len(facet)} points, needs one from each of {len(pairing)} pairs")
    for i, j in pairing:
        if y[i] in facet and y[j] in facet:
            raise CertificateError(f"facet contains both ends of pair ({i}, {j})")
    fc = check_rigid_facet(facet, ambient, r, workers)
    if not fc.maximal_ok:
        raise CertificateError(f"facet is not maximal in VR({ambient}; {r}): {fc.witness.get('maximal')}")
    return CrossPolytopeCertificate(y, pairing, facet, ambient, r, fc)
