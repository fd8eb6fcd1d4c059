"""Command-line front end.

Exit codes: 0 ok, 1 usage or input error, 2 guard exceeded, 3 check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog as cat
from . import dimensions, facets, hadamard, homology, repro, rips
from .cube import Ambient, GuardExceeded, PointSet, enumerate_level

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _read_points(path: str, binary: bool) -> PointSet:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    return PointSet.from_strings([ln for ln in lines if ln and not ln.startswith("#")], binary=binary)


class Context:
    def __init__(self, args, argv: list[str]):
        self.args = args
        self.workers = args.threads
        self.inputs: dict[str, str] = {}
        for name in ("file", "file_a", "file_b", "points", "facet_file"):
            p = getattr(args, name, None)
            if p:
                self.inputs[p] = cat.file_sha256(p)
        manifest = cat.RunManifest(list(argv), self.workers, self.inputs)
        path = None if args.catalog == "-" else args.catalog
        self.catalog = cat.Catalog(path, manifest)
        self.failed = False

    def emit(self, kind: str, payload: dict, table: str | None = None, ok: bool = True) -> None:
        record = self.catalog.append(kind, payload)
        if not ok:
            self.failed = True
        if self.args.format == "json":
            print(cat.canonical(record))
        else:
            print(table if table is not None else json.dumps(payload, indent=2, sort_keys=True))


def _cert_table(c: facets.FacetCertificate) -> str:
    return (
        f"{len(c.point_set)} points in {c.ambient}, scale {c.scale}: "
        f"diameter={'ok' if c.diameter_ok else 'FAIL'} rigid={'ok' if c.rigid_ok else 'FAIL'} "
        f"maximal={'ok' if c.maximal_ok else 'FAIL'}"
        + (f"  witness={c.witness}" if c.witness else "")
    )


# -- hadamard ---------------------------------------------------------------

def cmd_hadamard_gen(ctx: Context) -> None:
    h = hadamard.hadamard_of_order(ctx.args.order)
    text = h.to_text()
    if ctx.args.out:
        Path(ctx.args.out).write_text(text)
    payload = {
        "order": h.order,
        "construction": h.construction,
        "normalized": h.normalized,
        "verified": True,
        "matrix": text.split(),
    }
    ctx.emit("hadamard", payload, text.rstrip("\n"))


def cmd_hadamard_verify(ctx: Context) -> None:
    import numpy as np

    rows = [ln.strip() for ln in Path(ctx.args.file).read_text().splitlines() if ln.strip()]
    if any(c not in "+-" for row in rows for c in row):
        raise ValueError("matrix file must use only '+' and '-'")
    ok, witness = hadamard.verify(np.array([[1 if c == "+" else -1 for c in row] for row in rows]))
    payload = {"file": ctx.args.file, "order": len(rows), "verified": ok, "witness": list(witness) if witness else None}
    table = f"order {len(rows)}: " + ("Hadamard" if ok else f"NOT Hadamard, rows {witness} not orthogonal")
    ctx.emit("hadamard", payload, table, ok)


# -- facet ------------------------------------------------------------------

def cmd_facet_check(ctx: Context) -> None:
    a = _read_points(ctx.args.file, ctx.args.bits)
    c = facets.check_rigid_facet(a, Ambient.parse(ctx.args.ambient), ctx.args.scale, ctx.workers)
    ctx.emit("facet-certificate", c.to_json(), _cert_table(c), c.ok)


def cmd_facet_product(ctx: Context) -> None:
    certs = []
    for path, r in ((ctx.args.file_a, ctx.args.scale_a), (ctx.args.file_b, ctx.args.scale_b)):
        pts = _read_points(path, ctx.args.bits)
        certs.append(facets.check_rigid_facet(pts, Ambient(pts.n), r, ctx.workers))
    for c in certs:
        if not c.ok:
            ctx.emit("facet-certificate", c.to_json(), "factor not certified: " + _cert_table(c), False)
            return
    c = facets.product_facet(certs[0], certs[1], workers=ctx.workers)
    ctx.emit("facet-certificate", c.to_json(), _cert_table(c), c.ok)


def cmd_facet_search(ctx: Context, which: str) -> None:
    n, r = ctx.args.n, ctx.args.r
    if which == "max":
        value, witness = facets.max_facet_bruteforce(n, r)
        payload = {"quantity": "b", "n": n, "r": r, "value": value, "kleitman": facets.kleitman_bound(n, r)}
    else:
        value, witness = facets.min_facet_search(n, r)
        payload = {"quantity": "s", "n": n, "r": r, "value": value}
    payload["witness"] = [str(p) for p in witness]
    ctx.emit("probe", payload, f"{payload['quantity']}({n};{r}) = {value}")


def cmd_facet_probe_hminus(ctx: Context) -> None:
    h = hadamard.hadamard_of_order(ctx.args.order)
    rep = facets.probe_deleted_rows(h, ctx.args.rows, ctx.workers)
    rep["quantity"] = "hminus"
    ctx.emit("probe", rep, f"order {rep['order']} minus {rep['rows_deleted']} rows: size {rep['size']} in "
             f"{rep['ambient']}, diameter {rep['diameter']}, maximal={rep['maximal']}, rigid={rep['rigid']}")


# -- vr ---------------------------------------------------------------------

def _vertices(ctx: Context, ambient: Ambient) -> PointSet:
    if ctx.args.points:
        pts = _read_points(ctx.args.points, ctx.args.bits)
        if pts.n != ambient.n or not all(ambient.contains(p) for p in pts):
            raise ValueError(f"points in {ctx.args.points} are not inside {ambient}")
        return pts
    return ambient.points()


def cmd_vr_betti(ctx: Context) -> None:
    ambient = Ambient.parse(ctx.args.ambient)
    pts = _vertices(ctx, ambient)
    d = ctx.args.through_dim
    c = rips.build(pts, ctx.args.scale, d + 1, ctx.workers)
    t = homology.betti_z2(c, d, clearing=not ctx.args.no_clearing, workers=ctx.workers)
    payload = {"ambient": ambient.to_json(), "scale": ctx.args.scale, "through_dim": d,
               "vertices": len(pts), "source": ctx.args.points or "ambient", **t.to_json()}
    table = "\n".join(f"  dim {k}: simplices {t.counts[k]:>8}  reduced betti {t.betti[k]}" for k in range(d + 1))
    ctx.emit("betti", payload, f"VR({ambient}; {ctx.args.scale}) over Z/2\n{table}")


def cmd_vr_certify(ctx: Context) -> None:
    ambient = Ambient.parse(ctx.args.ambient)
    r = ctx.args.scale
    if ctx.args.points:
        if not ctx.args.facet_file:
            raise UsageError("--points needs --facet")
        y = _read_points(ctx.args.points, ctx.args.bits)
        facet = _read_points(ctx.args.facet_file, ctx.args.bits)
    else:
        h = hadamard.hadamard_of_order(ctx.args.order or 2 * r)
        if ambient.level is None:
            y, facet = facets.hadamard_cross_set(h, ambient.n)
        else:
            y, facet = facets.level_cross_set(h, ambient.level, ambient.n)
    try:
        c = rips.certify_nontrivial(y, facet, ambient, r, ctx.workers)
    except rips.CertificateError as exc:
        ctx.emit("probe", {"quantity": "cross-polytope", "ambient": ambient.to_json(), "scale": r,
                           "certified": False, "reason": str(exc)}, f"not certified: {exc}", False)
        return
    payload = c.to_json()
    if ctx.args.check_betti:
        d = c.homology_dim
        t = homology.betti_z2(rips.build(y, r, d + 1, ctx.workers), d, workers=ctx.workers)
        payload["betti_of_Y"] = t.to_json()["betti"]
        ok = t.betti[d] == 1 and not any(t.betti[:d])
        payload["betti_consistent"] = ok
        ctx.emit("cross-polytope-certificate", payload, payload["claim"] + f" (VR(Y) betti check: {ok})", ok)
        return
    ctx.emit("cross-polytope-certificate", payload, payload["claim"])


# -- levelset ---------------------------------------------------------------

def cmd_levelset_list(ctx: Context) -> None:
    sys.stdout.write(enumerate_level(ctx.args.n, ctx.args.level).to_text(binary=ctx.args.bits))


def cmd_levelset_facet(ctx: Context) -> None:
    h = hadamard.hadamard_of_order(ctx.args.order)
    a = facets.level_facet(h, ctx.args.level, ctx.args.n)
    c = facets.check_rigid_facet(a, Ambient(ctx.args.n, ctx.args.level), h.order // 2, ctx.workers)
    ctx.emit("facet-certificate", c.to_json(), _cert_table(c), c.maximal_ok and c.diameter_ok)


# -- dims -------------------------------------------------------------------

def cmd_dims_count(ctx: Context) -> None:
    from fractions import Fraction

    s = [Fraction(t) for t in ctx.args.s.split(",")]
    n, v = dimensions.count_solutions(s), dimensions.volume_bound(s)
    payload = {"quantity": "lattice-count", "s": [str(x) for x in s], "count": n, "volume_bound": str(v)}
    ctx.emit("probe", payload, f"{n} solutions (volume bound {v})")


def cmd_dims_sizes(ctx: Context) -> None:
    orders = hadamard.available_orders(ctx.args.max_order)
    catalog = dimensions.facet_size_set(ctx.args.r, orders, ctx.args.alpha)
    payload = catalog.to_json()
    ok = True
    if ctx.args.witness:
        certified = []
        for sol in catalog.solutions:
            _, cert = dimensions.build_witness(sol, catalog.generators)
            certified.append(None if cert is None else cert.ok)
            ok = ok and cert is not None and cert.ok
        payload["witness_certified"] = certified
    table = f"r={ctx.args.r}: {len(catalog.distinct_sizes)} distinct rigid facet sizes " + \
        str(sorted(catalog.distinct_sizes, reverse=True))
    ctx.emit("size-catalog", payload, table, ok)


def cmd_dims_report(ctx: Context) -> None:
    rep = dimensions.dfacets_report(ctx.args.r, ctx.args.alpha, ctx.args.max_order)
    ctx.emit("size-catalog", rep, f"dfacets(n;{rep['r']}) >= {rep['exact_count']}  [{rep['note']}]")


# -- conjecture -------------------------------------------------------------

def cmd_conjecture(ctx: Context) -> None:
    name = ctx.args.name
    if name == "bprime":
        n, r = ctx.args.n, ctx.args.r
        value, witness = facets.max_rigid_facet_search(n, r)
        payload = {"quantity": "bprime", "conjecture": "b'(n;r) = 2^r", "n": n, "r": r,
                   "largest_rigid_maximal": value, "two_to_r": 2**r,
                   "witness": [str(p) for p in witness] if witness else None}
        ctx.emit("probe", payload, f"largest rigid maximal set in Q_{n} at r={r}: {value} (2^r = {2**r})")
    elif name == "smallest":
        n, r = ctx.args.n, ctx.args.r
        value, witness = facets.min_facet_search(n, r)
        payload = {"quantity": "s", "conjecture": "s(n;r) >= c r", "n": n, "r": r, "value": value,
                   "witness": [str(p) for p in witness]}
        ctx.emit("probe", payload, f"s({n};{r}) = {value}")
    else:
        for order in _int_list(ctx.args.orders):
            h = hadamard.hadamard_of_order(order)
            for rows in _int_list(ctx.args.rows):
                try:
                    rep = facets.probe_deleted_rows(h, rows, ctx.workers)
                except ValueError as exc:
                    rep = {"order": order, "rows_deleted": rows, "skipped": str(exc)}
                rep["quantity"] = "hminus"
                rep["conjecture"] = "columns of H_{-r} are diametrically maximal"
                ctx.emit("probe", rep, f"order {order}, rows {rows}: " +
                         (f"maximal={rep['maximal']}" if "maximal" in rep else rep["skipped"]))


# -- repro ------------------------------------------------------------------

def cmd_repro(ctx: Context) -> None:
    targets = list(ctx.args.targets)
    if targets == ["all"]:
        targets = [t for t in repro.TARGETS if ctx.args.stretch or t not in repro.STRETCH_TARGETS]
    for t in targets:
        if t not in repro.TARGETS:
            raise UsageError(f"unknown repro target {t!r}; choose from {sorted(repro.TARGETS)} or 'all'")
    for t in targets:
        for item in repro.repro(t, ctx.workers):
            ok = item["status"] == "PASS"
            ctx.emit("repro", item, f"{item['status']}  {t}: {item['item']} expected {item['expected']} "
                     f"observed {item['observed']}", ok)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--catalog", default=argparse.SUPPRESS,
                        help=f"JSON-lines catalog path ('-' for none; env {cat.CATALOG_ENV})")
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes")

    p = _Parser(prog="qrips", description=__doc__, parents=[common],
                formatter_class=argparse.RawDescriptionHelpFormatter)
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def sub(group, name, fn, **kw):
        sp = group.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=fn)
        return sp

    def bits_flag(sp):
        sp.add_argument("--bits", action="store_true", help="points written as 1/0 instead of +/-")

    g = groups.add_parser("hadamard", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = sub(g, "gen", cmd_hadamard_gen)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--out")
    sp = sub(g, "verify", cmd_hadamard_verify)
    sp.add_argument("file")

    g = groups.add_parser("facet", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = sub(g, "check", cmd_facet_check)
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--scale", type=int, required=True)
    sp.add_argument("file")
    bits_flag(sp)
    sp = sub(g, "product", cmd_facet_product)
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--scale-a", type=int, required=True)
    sp.add_argument("--scale-b", type=int, required=True)
    bits_flag(sp)
    for name, which in (("search-max", "max"), ("search-min", "min")):
        sp = sub(g, name, lambda ctx, w=which: cmd_facet_search(ctx, w))
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)
    sp = sub(g, "probe-hminus", cmd_facet_probe_hminus)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--rows", type=int, required=True)

    g = groups.add_parser("vr", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = sub(g, "betti", cmd_vr_betti)
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--scale", type=int, required=True)
    sp.add_argument("--through-dim", type=int, required=True)
    sp.add_argument("--points")
    sp.add_argument("--no-clearing", action="store_true")
    bits_flag(sp)
    sp = sub(g, "certify", cmd_vr_certify)
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--scale", type=int, required=True)
    sp.add_argument("--order", type=int, help="Hadamard order (default 2 * scale)")
    sp.add_argument("--points", help="vertex set Y (instead of the Hadamard construction)")
    sp.add_argument("--facet", dest="facet_file")
    sp.add_argument("--check-betti", action="store_true", help="also compute the Betti numbers of VR(Y)")
    bits_flag(sp)

    g = groups.add_parser("levelset", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = sub(g, "list", cmd_levelset_list)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    bits_flag(sp)
    sp = sub(g, "facet", cmd_levelset_facet)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    g = groups.add_parser("dims", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = sub(g, "count", cmd_dims_count)
    sp.add_argument("--s", required=True, help="comma-separated positive rationals, e.g. 2,2,3/2")
    for name, fn in (("sizes", cmd_dims_sizes), ("report", cmd_dims_report)):
        sp = sub(g, name, fn)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--max-order", type=int, default=hadamard.MAX_ORDER)
        sp.add_argument("--alpha", type=int)
        if name == "sizes":
            sp.add_argument("--witness", action="store_true", help="build and certify every witness")

    sp = sub(groups, "conjecture", cmd_conjecture)
    sp.add_argument("name", choices=("bprime", "smallest", "hminus"))
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--orders", default="8")
    sp.add_argument("--rows", default="2")

    sp = sub(groups, "repro", cmd_repro)
    sp.add_argument("targets", nargs="+", metavar="TARGET", help=f"{', '.join(repro.TARGETS)} or all")
    sp.add_argument("--stretch", action="store_true", help="include stretch targets in 'all'")
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    # common options are SUPPRESSed so a subcommand never overwrites an earlier value
    if not hasattr(args, "catalog"):
        args.catalog = cat.Catalog.default_path()
    if not hasattr(args, "format"):
        args.format = "table"
    if not hasattr(args, "threads"):
        args.threads = os.cpu_count() or 1
    if args.threads < 1:
        print("qrips: error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        ctx = Context(args, argv)
        args.func(ctx)
    except GuardExceeded as exc:
        print(f"qrips: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ValueError, OSError) as exc:
        print(f"qrips: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_CHECK if ctx.failed else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
