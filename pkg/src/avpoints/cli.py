"""Command line entry point: analyze, enumerate, table1, fetch, batch.

Exit codes: 0 success, 2 invalid input, 3 oracle disagreement, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import AVError, OracleDisagreement, ParseError, ValidationError
from .weil import parse_label, validate_weil

log = logging.getLogger("avpoints")

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_ORACLE = 0, 1, 2, 3


def _ints(s: str):
    try:
        return [int(t) for t in s.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise ValidationError(f"cannot parse integer list {s!r}") from exc


def _weil_from_args(args):
    if args.label:
        h, q = parse_label(args.label)
        return validate_weil(h, q), args.label
    if args.q is None or args.poly is None:
        raise ValidationError("give --label, or both --q and --poly")
    return validate_weil(_ints(args.poly), args.q), None


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    from .report import build_report, render_text

    W, label = _weil_from_args(args)
    depth = None
    if args.search is not None:
        depth = "auto" if args.search == "auto" else int(args.search)
    rep = build_report(W, label, n=args.n, orders=args.orders, cap=args.cap, search_depth=depth)
    _emit(json.dumps(rep, indent=2) + "\n" if args.json else render_text(rep), args.output)
    if args.figures:
        from .arith import prime_divisors
        from .plotting import plot_polygons

        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        for ell in prime_divisors(W.N) if W.N > 1 else []:
            p = plot_polygons(W, ell, fig_dir / f"{W.label()}_newton_{ell}.svg")
            log.info("wrote %s", p)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .classify import cross_checked, enumerate_elliptic_classes, table_category

    sep = "\t"
    lines = [sep.join(["label", "trace", "N", "cyclic", "rich", "category"])]
    for W in enumerate_elliptic_classes(args.q, bound=args.bound):
        cyc, rich, _ = cross_checked(W)
        lines.append(sep.join([W.label(), str(-W.h[1]), str(W.N), str(cyc), str(rich), table_category(cyc, rich)]))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_table1(args) -> int:
    from .table1 import render_table, table1

    rows = table1(_ints(args.q), _ints(args.g), source=args.source, offline=not args.online, cache_dir=args.cache_dir)
    if args.json:
        _emit(json.dumps([r.to_dict() for r in rows], indent=2) + "\n", args.output)
    else:
        _emit(render_table(rows), args.output)
    if args.figures:
        from .plotting import plot_table1

        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        log.info("wrote %s", plot_table1(rows, fig_dir / "table1.png"))
    return EXIT_OK


def cmd_fetch(args) -> int:
    from .lmfdb import fetch, load_config

    recs = fetch(args.g, args.q, limit=args.limit, cache_dir=args.cache_dir, offline=args.offline, config=load_config(args.config))
    if args.json:
        _emit(json.dumps([r.to_dict() for r in recs], indent=2) + "\n", args.output)
    else:
        _emit("".join(f"{r.label}\t{','.join(map(str, r.poly))}\n" for r in recs), args.output)
    return EXIT_OK


def _batch_one(item):
    from .report import build_report

    label, h, q, n = item
    try:
        return build_report(validate_weil(h, q), label, n=n, timings=False)
    except OracleDisagreement:
        raise
    except AVError as exc:
        return {"label": label, "q": q, "h": list(h), "error": f"{type(exc).__name__}: {exc}"}


def _read_batch(path):
    """One class per line: a label, or 'q poly' with poly comma separated."""
    items = []
    for ln, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            h, q = parse_label(parts[0])
            items.append((parts[0], h, q))
        elif len(parts) == 2:
            items.append((None, tuple(_ints(parts[1])), int(parts[0])))
        else:
            raise ParseError(f"cannot parse line {ln}: {raw!r}", path=f"{path}:{ln}")
    return items


def cmd_batch(args) -> int:
    items = [(lab, h, q, args.n) for lab, h, q in _read_batch(args.input)]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as ex:
            reports = list(ex.map(_batch_one, items))
    else:
        reports = [_batch_one(it) for it in items]
    _emit("".join(json.dumps(r, sort_keys=True) + "\n" for r in reports), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="avpoints", description="Groups of rational points on squarefree isogeny classes")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify one isogeny class")
    a.add_argument("--q", type=int)
    a.add_argument("--poly", help="ascending coefficients, e.g. 25,0,6,0,1")
    a.add_argument("--label", help="label such as 2.5.a_g")
    a.add_argument("--n", type=int, default=1, help="extension degree for the point groups")
    a.add_argument("--orders", choices=("all", "maximal", "frobenius"), default="all")
    a.add_argument("--search", help="ideal search depth (integer or 'auto'); off by default")
    a.add_argument("--cap", type=int, default=10**6)
    a.add_argument("--json", action="store_true")
    a.add_argument("--figures", help="directory for polygon SVGs")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="list elliptic isogeny classes over F_q")
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--bound", type=int, default=None)
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("table1", help="cyclic/rich percentages per (q, g)")
    t.add_argument("--q", default="2,3,4,5")
    t.add_argument("--g", default="1")
    t.add_argument("--source", choices=("builtin", "lmfdb"), default="builtin")
    t.add_argument("--online", action="store_true", help="query the LMFDB instead of bundled fixtures")
    t.add_argument("--cache-dir")
    t.add_argument("--json", action="store_true")
    t.add_argument("--figures", help="directory for the bar chart")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_table1)

    f = sub.add_parser("fetch", help="download (or read cached) LMFDB isogeny classes")
    f.add_argument("--g", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--limit", type=int)
    f.add_argument("--cache-dir")
    f.add_argument("--config")
    f.add_argument("--offline", action="store_true")
    f.add_argument("--json", action="store_true")
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_fetch)

    b = sub.add_parser("batch", help="JSON-lines reports for a list of classes")
    b.add_argument("input")
    b.add_argument("--n", type=int, default=1)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_batch)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except OracleDisagreement as exc:
        print(f"oracle disagreement: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except ValidationError as exc:
        print(f"invalid input ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AVError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
