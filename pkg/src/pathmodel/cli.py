"""Command-line front end.

Exit codes: 0 success, 1 a checked property is false, 2 usage error,
3 an enumeration or Weyl-order bound refused the request.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import config
from .errors import BoundExceeded, PathModelError
from .rational import fmt_vector, parse_vector, to_strings

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _vector(R, text):
    v = parse_vector(text)
    if len(v) != R.rank:
        raise UsageError(f"{text!r} needs {R.rank} coordinates for {R.cartan_type}")
    return v


def _root_expr(row) -> str:
    terms = []
    for i, c in enumerate(row):
        if c:
            terms.append(f"{'' if c == 1 else c}α{i + 1}")
    return " + ".join(terms)


def _emit(args, obj, text: str) -> None:
    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


# -- subcommands -----------------------------------------------------------------

def cmd_root_info(args) -> int:
    from .root_system import build

    R = build(args.type)
    thetas = [_root_expr(r) for r in R.highest_roots()]
    obj = {
        "type": str(R.cartan_type),
        "rank": R.rank,
        "cartan_matrix": [list(r) for r in R.cartan_matrix],
        "positive_roots": len(R.positive_roots),
        "highest_roots": thetas,
        "highest_root_coeffs": [list(c) for c in R.highest_root_coeffs],
        "k_R": R.k_R,
        "weyl_order": R.weyl_order,
        "minuscule": [i + 1 for i in R.minuscule_indices()],
    }
    lines = [
        f"type            {obj['type']}",
        f"rank            {R.rank}",
        f"cartan matrix   {obj['cartan_matrix']}",
        f"positive roots  {obj['positive_roots']}",
        f"highest root    θ = {'; '.join(thetas)}",
        f"k_R             {R.k_R}",
        f"|W|             {R.weyl_order}",
        f"minuscule       {obj['minuscule'] or 'none'}",
    ]
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_dim(args) -> int:
    from .root_system import build
    from .tensor import dim

    R = build(args.type)
    lam = _vector(R, args.coords)
    d = dim(R, lam)
    _emit(args, {"lambda": to_strings(lam), "dim": d}, str(d))
    return EXIT_OK


def _table_obj(t):
    return [{"gamma": list(g), "mult": m} for g, m in t.rows()]


def _table_text(title, t):
    lines = [title]
    lines += [f"  ({','.join(map(str, g))})  x{m}" for g, m in t.rows()]
    return "\n".join(lines)


def cmd_decompose(args) -> int:
    from .root_system import build
    from .tensor import decompose_paths, oracle_decompose

    R = build(args.type)
    a, b = _vector(R, args.alpha), _vector(R, args.beta)
    mode = args.mode or "oracle"
    tables = {}
    if mode in ("oracle", "both"):
        tables["oracle"] = oracle_decompose(R, a, b)
    if mode in ("paths", "both"):
        tables["paths"] = decompose_paths(R, a, b)
    obj = {k: _table_obj(t) for k, t in tables.items()}
    text = "\n".join(_table_text(k, t) for k, t in tables.items())
    code = EXIT_OK
    if mode == "both":
        equal = tables["oracle"] == tables["paths"]
        obj["equal"] = equal
        text += f"\nequal: {equal}"
        code = EXIT_OK if equal else EXIT_FALSE
    if args.csv:
        import csv

        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["method", "gamma", "mult"])
            for k, t in tables.items():
                for g, m in t.rows():
                    w.writerow([k, " ".join(map(str, g)), m])
    _emit(args, obj, text)
    return code


def cmd_ls_paths(args) -> int:
    from .operators import generate_F_orbit
    from .paths import pi_lambda, to_json_obj
    from .root_system import build

    R = build(args.type)
    lam = _vector(R, args.lam)
    paths = generate_F_orbit(R, pi_lambda(R, lam), args.bound)
    obj = {"count": len(paths), "paths": [to_json_obj(p) for p in paths]}
    lines = [f"{len(paths)} LS paths"]
    for p in paths:
        segs = "  ".join(f"({fmt_vector(d)})" for d in p.segments)
        lines.append(f"  end ({fmt_vector(p.endpoint())}):  {segs}")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_check_path(args) -> int:
    from . import predicates as P
    from .paths import delta_length, load

    p, offset = load(args.file)
    R = p.R
    kind = args.kind or "hecke"
    if kind == "ls":
        lam = _vector(R, args.lam) if args.lam else delta_length(R, p).total
        verdict = P.is_ls_path(R, p, lam, offset)
    elif kind == "hecke":
        verdict = P.is_hecke_path(R, p, offset)
    elif kind == "chain":
        verdict = P.satisfies_chain_condition(R, p, offset)
    elif kind == "gen-ls":
        if args.blocks:
            blocks = [_vector(R, b) for b in args.blocks.split(";")]
        else:
            blocks = list(delta_length(R, p).blocks)
        verdict = P.is_generalized_ls1(R, p, blocks)
    else:
        verdict = P.PathVerdict(P.is_generalized_hecke(R, p, offset))
    obj = {"check": kind, **verdict.to_json_obj()}
    text = f"{kind}: {verdict.verdict}" + (f" ({verdict.reason})" if verdict.reason else "")
    _emit(args, obj, text)
    return EXIT_OK if verdict.verdict else EXIT_FALSE


def cmd_hecke_exists(args) -> int:
    from .hecke_search import hecke_exists
    from .paths import to_json_obj
    from .root_system import build

    R = build(args.type)
    a, b, c = (_vector(R, x) for x in (args.alpha, args.beta, args.gamma))
    res = hecke_exists(R, a, b, c, args.denom_bound)
    bound = "none (exhaustive)" if args.denom_bound is None else str(args.denom_bound)
    obj = {
        "exists": res.exists,
        "complete": res.complete,
        "denominator_bound": args.denom_bound,
        "witness": to_json_obj(res.witness, res.offset) if res.witness is not None else None,
    }
    lines = [f"exists: {res.exists}", f"denominator bound: {bound}", f"complete: {res.complete}"]
    if res.witness is not None:
        lines.append("witness: " + json.dumps(obj["witness"]))
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK if res.exists else EXIT_FALSE


def cmd_dilation_sweep(args) -> int:
    from .hecke_search import dilation_sweep
    from .root_system import build

    R = build(args.type)
    lams = [_vector(R, x) for x in args.lambdas]
    rep = dilation_sweep(R, lams, args.coord_bound)
    obj = {
        "system": rep.system,
        "k_R": R.k_R,
        "paths_checked": rep.paths_checked,
        "counterexamples": [[to_strings(d) for d in p.segments] for p in rep.counterexamples],
    }
    text = (
        f"{rep.paths_checked} generalized Hecke paths checked, "
        f"{len(rep.counterexamples)} counterexamples (k_R = {R.k_R})"
    )
    _emit(args, obj, text)
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_saturation_scan(args) -> int:
    from .saturation import ScanConfig, saturation_scan

    cfg = ScanConfig(
        args.type,
        args.coord_bound,
        args.n_max,
        args.k,
        workers=args.workers,
        extended=args.extended,
    )
    rep = saturation_scan(cfg)
    if args.csv:
        rep.write_csv(args.csv)
    obj = {
        "system": cfg.system,
        "coord_bound": cfg.coord_bound,
        "n_max": cfg.n_max,
        "k": cfg.k,
        "triples_scanned": rep.triples_scanned,
        "triples_with_some_N_nonzero": rep.triples_with_some_N_nonzero,
        "violations": [[list(x) for x in v] for v in rep.violations],
        "runtime_seconds": round(rep.runtime, 3),
        "label": rep.label,
    }
    text = "\n".join(
        [
            f"scanned {rep.triples_scanned} triples, {rep.triples_with_some_N_nonzero} live",
            f"violations at k={cfg.k}: {len(rep.violations)}",
            *[f"  {v}" for v in rep.violations[:20]],
            rep.label,
        ]
    )
    _emit(args, obj, text)
    return EXIT_OK if not rep.violations else EXIT_FALSE


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--weyl-order-bound", type=int, default=argparse.SUPPRESS,
                        help="refuse Weyl groups larger than this (default 1152)")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes (default: $PATHMODEL_WORKERS or 1)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = argparse.ArgumentParser(prog="pathmodel", parents=[common],
                                     description="Exact path-model computations for root systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("root-info", parents=[common], help="root data and saturation factor")
    p.add_argument("type")
    p.set_defaults(func=cmd_root_info)

    p = sub.add_parser("dim", parents=[common], help="dimension of an irreducible module")
    p.add_argument("type")
    p.add_argument("coords")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("decompose", parents=[common], help="tensor product multiplicities")
    p.add_argument("type")
    p.add_argument("alpha")
    p.add_argument("beta")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oracle", dest="mode", action="store_const", const="oracle")
    g.add_argument("--paths", dest="mode", action="store_const", const="paths")
    g.add_argument("--both", dest="mode", action="store_const", const="both")
    p.add_argument("--csv", metavar="FILE")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("ls-paths", parents=[common], help="list LS paths of a shape")
    p.add_argument("type")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("--bound", type=int, default=200_000)
    p.set_defaults(func=cmd_ls_paths)

    p = sub.add_parser("check-path", parents=[common], help="test a JSON path against a path class")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    for flag in ("ls", "hecke", "chain", "gen-ls", "gen-hecke"):
        g.add_argument(f"--{flag}", dest="kind", action="store_const", const=flag)
    p.add_argument("--lambda", dest="lam", help="shape for --ls (default: the path's Delta-length)")
    p.add_argument("--blocks", help="block shapes for --gen-ls, e.g. '1,0;0,1'")
    p.set_defaults(func=cmd_check_path)

    p = sub.add_parser("hecke-exists", parents=[common], help="search for a Hecke path")
    p.add_argument("type")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    p.add_argument("--denom-bound", type=int, default=None)
    p.set_defaults(func=cmd_hecke_exists)

    p = sub.add_parser("dilation-sweep", parents=[common], help="check dilated generalized Hecke paths")
    p.add_argument("type")
    p.add_argument("lambdas", nargs="+", metavar="LAMBDA")
    p.add_argument("--coord-bound", type=int, default=2)
    p.set_defaults(func=cmd_dilation_sweep)

    p = sub.add_parser("saturation-scan", parents=[common], help="scan triples for saturation")
    p.add_argument("type")
    p.add_argument("--coord-bound", type=int, default=2)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--k", type=int, default=None, help="dilation under test (default k_R^2)")
    p.add_argument("--csv", metavar="FILE")
    p.add_argument("--extended", action="store_true")
    p.set_defaults(func=cmd_saturation_scan)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    args.json = getattr(args, "json", False)
    args.workers = getattr(args, "workers", None) or config.default_workers()
    bound = getattr(args, "weyl_order_bound", None)
    previous = config.weyl_order_bound()
    if bound is not None:
        config.set_weyl_order_bound(bound)
    try:
        if args.command == "saturation-scan" and args.k is None:
            from .root_system import build

            args.k = build(args.type).k_R ** 2
        return args.func(args)
    except BoundExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, PathModelError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        config.set_weyl_order_bound(previous)


if __name__ == "__main__":
    sys.exit(main())
