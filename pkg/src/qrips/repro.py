"""Reproduction pipelines: recompute published values and compare with stored expectations."""

from __future__ import annotations

from typing import Callable

from .cube import Ambient
from .dimensions import build_witness, facet_size_set
from .facets import check_rigid_facet, hadamard_cross_set, kleitman_bound, level_cross_set, max_facet_bruteforce
from .hadamard import hadamard_of_order
from .homology import betti_z2, closed_form_a, closed_form_b, closed_form_c
from .rips import build, certify_nontrivial

# reduced Z/2 ranks of VR(L_3^n; 4), keyed n -> {dimension: rank}; all other dimensions vanish
LEVEL3_SCALE4_TABLE = {
    6: {6: 0, 9: 1},
    7: {6: 29, 9: 7},
    8: {6: 233, 9: 28},
    9: {6: 1052, 9: 84},
}


def _item(target: str, item: str, expected, observed) -> dict:
    return {
        "target": target,
        "item": item,
        "expected": expected,
        "observed": observed,
        "status": "PASS" if expected == observed else "FAIL",
    }


def _betti_items(target: str, ambient: Ambient, r: int, through: int, nonzero: dict[int, int], workers: int):
    c = build(ambient.points(), r, through + 1, workers)
    table = betti_z2(c, through, workers=workers)
    return [
        _item(target, f"betti[{k}]", nonzero.get(k, 0), table.betti[k]) for k in range(through + 1)
    ]


def q3r2(workers: int = 1):
    return _betti_items("q3r2", Ambient(3), 2, 3, {3: closed_form_c(3)}, workers)


def q4r2(workers: int = 1):
    return _betti_items("q4r2", Ambient(4), 2, 3, {3: closed_form_c(4)}, workers)


def q5r3(workers: int = 1):
    return _betti_items("q5r3", Ambient(5), 3, 7, {4: closed_form_a(5), 7: closed_form_b(5)}, workers)


def l3n6(workers: int = 1):
    return _betti_items("l3n6", Ambient(6, 3), 4, 9, LEVEL3_SCALE4_TABLE[6], workers)


def l3n7(workers: int = 1):
    return _betti_items("l3n7", Ambient(7, 3), 4, 9, LEVEL3_SCALE4_TABLE[7], workers)


def _cross_items(target: str, y, facet, ambient: Ambient, r: int, workers: int):
    cert = certify_nontrivial(y, facet, ambient, r, workers)
    d = cert.homology_dim
    items = [_item(target, "homology_dim", 2 * r - 1 if ambient.level is None else 2 * r - 2, d)]
    items.append(_item(target, "facet_maximal", True, cert.facet_certificate.maximal_ok))
    table = betti_z2(build(y, r, d + 1, workers), d, workers=workers)
    items.append(_item(target, f"betti(VR(Y))[{d}]", 1, table.betti[d]))
    items.append(_item(target, "betti(VR(Y)) other dims", 0, sum(table.betti[:d])))
    return items


def q7r4_cert(workers: int = 1):
    y, facet = hadamard_cross_set(hadamard_of_order(8), 7)
    return _cross_items("q7r4-cert", y, facet, Ambient(7), 4, workers)


def l4n8_cert(workers: int = 1):
    h = hadamard_of_order(8)
    y, facet = level_cross_set(h, 4, 8)
    fc = check_rigid_facet(facet, Ambient(8, 4), 4, workers)
    items = [_item("l4n8-cert", "level facet maximal in L_4^8", True, fc.maximal_ok)]
    return items + _cross_items("l4n8-cert", y, facet, Ambient(8, 4), 4, workers)


def kleitman_small(workers: int = 1):
    items = []
    for n in range(1, 7):
        for r in range(1, n + 1):
            items.append(_item("kleitman-small", f"b({n};{r})", kleitman_bound(n, r), max_facet_bruteforce(n, r)[0]))
    return items


def dims_r6(workers: int = 1):
    cat = facet_size_set(6, [8, 12])
    items = [_item("dims-r6", "distinct sizes", [64, 32, 12], sorted(cat.distinct_sizes, reverse=True))]
    for sol in cat.solutions:
        _, cert = build_witness(sol, cat.generators)
        items.append(_item("dims-r6", f"witness x={list(sol.x)} rigid facet at n0={sol.n0}", True, bool(cert and cert.ok)))
    return items


TARGETS: dict[str, Callable[..., list[dict]]] = {
    "q3r2": q3r2,
    "q4r2": q4r2,
    "q5r3": q5r3,
    "l3n6": l3n6,
    "l3n7": l3n7,
    "q7r4-cert": q7r4_cert,
    "l4n8-cert": l4n8_cert,
    "kleitman-small": kleitman_small,
    "dims-r6": dims_r6,
}

STRETCH_TARGETS = {"l3n7"}


def repro(target: str, workers: int = 1) -> list[dict]:
    try:
        fn = TARGETS[target]
    except KeyError:
        raise ValueError(f"unknown repro target {target!r}; choose from {sorted(TARGETS)}") from None
    return fn(workers)
