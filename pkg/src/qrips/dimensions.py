"""How many different sizes of rigid facet VR(Q_n; r) has.

Rigid facets are built as Q_{r0} x A_1^{x_1} x ... x A_k^{x_k} x {1}, where
A_i is a Hadamard simplex with 4 h_i points (h_i a prime power) and
r0 = r - sum 2 h_i x_i >= 0.  Distinct primes make the sizes
2^{r0} prod (4 h_i)^{x_i} pairwise different, so the number of solutions
is a lower bound for the number of facet dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .cube import Ambient, CubePoint, PointSet, enumerate_cube
from .facets import FacetCertificate, check_rigid_facet, pad_facet
from .hadamard import MAX_ORDER, available_orders, hadamard_of_order, hadamard_simplex

COUNT_LENGTH_LIMIT = 12
MAX_SCALE = 64
WITNESS_SWEEP_LIMIT = 1 << 16


def _primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


PRIMES = _primes(1000)


def _as_fractions(s: Sequence) -> list[Fraction]:
    out = [Fraction(x) for x in s]
    if not out:
        raise ValueError("need at least one coefficient")
    if any(x <= 0 for x in out):
        raise ValueError("all s_i must be positive")
    if len(out) > COUNT_LENGTH_LIMIT:
        raise ValueError(f"at most {COUNT_LENGTH_LIMIT} coefficients (COUNT_LENGTH_LIMIT guard)")
    return out


def count_solutions(s: Sequence) -> int:
    """Non-negative integer x with x_1/s_1 + ... + x_k/s_k <= 1, counted exactly."""
    fs = _as_fractions(s)

    def rec(i: int, budget: Fraction) -> int:
        if i == len(fs):
            return 1
        top = int(fs[i] * budget)  # floor; budget >= 0
        return sum(rec(i + 1, budget - Fraction(x) / fs[i]) for x in range(top + 1))

    return rec(0, Fraction(1))


def volume_bound(s: Sequence) -> Fraction:
    """Volume prod s_i / i of the simplex {x >= 0 : sum x_i/s_i <= 1}."""
    fs = _as_fractions(s)
    return prod((x / i for i, x in enumerate(fs, 1)), start=Fraction(1))


@dataclass(frozen=True)
class Generator:
    p: int
    alpha: int

    @property
    def h(self) -> int:
        return self.p**self.alpha

    @property
    def order(self) -> int:
        return 4 * self.h


@dataclass(frozen=True)
class Solution:
    x: tuple[int, ...]
    r0: int
    size: int
    n0: int


@dataclass
class SizeCatalog:
    r: int
    generators: list[Generator]
    solutions: list[Solution]
    notices: list[str] = field(default_factory=list)

    @property
    def distinct_sizes(self) -> set[int]:
        return {s.size for s in self.solutions}

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "generators": [{"p": g.p, "alpha": g.alpha, "h": g.h, "order": g.order} for g in self.generators],
            "solutions": [
                {"x": list(s.x), "r0": s.r0, "size": s.size, "n0": s.n0} for s in self.solutions
            ],
            "distinct_sizes": sorted(self.distinct_sizes, reverse=True),
            "dfacets_lower_bound": len(self.distinct_sizes),
            "notices": self.notices,
        }


def choose_generators(r: int, orders: Sequence[int], alpha: int | None = None) -> tuple[list[Generator], list[str]]:
    """One h = p^a per prime with 2h <= r and order 4h available, smallest a first."""
    avail = set(orders)
    gens, notices = [], []
    for p in PRIMES:
        if 2 * p > r:
            break
        a = 1
        chosen = None
        while 2 * p**a <= r and (alpha is None or a <= alpha):
            if 4 * p**a in avail:
                chosen = Generator(p, a)
                break
            a += 1
        if chosen is None:
            notices.append(f"prime {p}: no Hadamard order 4*{p}^a available with 2*{p}^a <= {r}; skipped")
        else:
            gens.append(chosen)
    return gens, notices


def facet_size_set(r: int, orders: Sequence[int] | None = None, alpha: int | None = None) -> SizeCatalog:
    if not 0 <= r <= MAX_SCALE:
        raise ValueError(f"scale r must be in 0..{MAX_SCALE}")
    if orders is None:
        orders = available_orders(MAX_ORDER)
    gens, notices = choose_generators(r, orders, alpha)
    sols: list[Solution] = []

    def rec(i: int, xs: list[int], used: int) -> None:
        if i == len(gens):
            r0 = r - used
            size = 2**r0 * prod((g.order**x for g, x in zip(gens, xs)), start=1)
            n0 = r0 + sum(x * (g.order - 1) for g, x in zip(gens, xs))
            sols.append(Solution(tuple(xs), r0, size, n0))
            return
        step = 2 * gens[i].h
        for x in range((r - used) // step + 1):
            rec(i + 1, xs + [x], used + x * step)

    rec(0, [], 0)
    sizes = [s.size for s in sols]
    if len(set(sizes)) != len(sizes):
        raise AssertionError("two solution vectors produced the same facet size")
    return SizeCatalog(r, gens, sols, notices)


def build_witness(
    solution: Solution, generators: Sequence[Generator], n: int | None = None, certify: bool = True
) -> tuple[PointSet, FacetCertificate | None]:
    """Q_{r0} x prod A_i^{x_i} x {1_{n-n0}} and, when small enough, its sweep certificate at n0."""
    n0 = solution.n0
    if n is None:
        n = max(n0, 1)
    if n < max(n0, 1):
        raise ValueError(f"witness needs n >= {max(n0, 1)}, got {n}")
    # packed points of the partial product, `length` coordinates each
    parts: list[int] = [0]
    length = 0

    def times(factor: PointSet) -> None:
        nonlocal parts, length
        parts = [(x << factor.n) | y for x in parts for y in factor.bits]
        length += factor.n

    if solution.r0:
        times(enumerate_cube(solution.r0))
    for g, x in zip(generators, solution.x):
        simplex = hadamard_simplex(hadamard_of_order(g.order))
        for _ in range(x):
            times(simplex)
    if length == 0:
        base = PointSet([CubePoint.ones(n)])
        cert = check_rigid_facet(base, Ambient(n), 0) if certify and 2**n <= WITNESS_SWEEP_LIMIT else None
        return base, cert
    base = PointSet.from_bits(length, parts)
    if len(base) != solution.size:
        raise AssertionError("witness size does not match the size formula")
    cert = None
    if certify and 2**n0 <= WITNESS_SWEEP_LIMIT:
        r = solution.r0 + sum(2 * g.h * x for g, x in zip(generators, solution.x))
        cert = check_rigid_facet(base, Ambient(n0), r)
        if cert.ok and n > n0:
            cert = pad_facet(cert, n - n0, recertify=False)
    if n > n0:
        ones = (1 << (n - n0)) - 1
        base = PointSet.from_bits(n, ((b << (n - n0)) | ones for b in base.bits))
    return base, cert


def dfacets_report(r: int, alpha: int | None = None, max_order: int = MAX_ORDER) -> dict:
    cat = facet_size_set(r, available_orders(max_order), alpha)
    bound = "dfacets(n;r) >= exp(c * r^(1/(1+alpha)))"
    return {
        "r": r,
        "alpha": alpha,
        "exact_count": len(cat.distinct_sizes),
        "generator_orders": [g.order for g in cat.generators],
        "sizes": sorted(cat.distinct_sizes, reverse=True),
        "asymptotic_claim": bound if alpha is None else bound.replace("alpha", str(alpha)),
        "unconditional_claim": "dfacets(n;r) >= exp(c * r^(1/5)) (alpha = 4)",
        "note": "c is an unspecified universal constant; only the exact enumerated count is computed",
        "notices": cat.notices,
    }
