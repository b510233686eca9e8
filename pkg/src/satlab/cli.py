"""Command-line interface.

Exit codes: 0 success or true, 1 false or not found, 2 usage error,
3 budget exhausted. A JSON run record goes to stderr after every run.

Patterns: K<r>, C<l>, Kbar<r>, K<r>-e, K<a>,<b>, P<r>, g6:<code>, @file.g6
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import os
import sys
from contextlib import redirect_stdout
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bounds import BoundRangeError, CASES, evaluate_bound, summary_table
from .builders import BuilderError, BuilderSpec, glue, size_coverage, verify_builder
from .constructions import FAMILIES, FamilyParams, LABELING, ParameterError, make, named_graph
from .counting import count_copies
from .enumerate import EnumerationError, SearchBudget
from .graph import Graph, GraphError, read_graph6_lines, to_graph6
from .patterns import PatternError, parse_pattern
from .saturation import SaturationCertificate, is_saturated, verify_certificate
from .search import find_h_free_saturated, sat_oracle, search_builder

OK, FALSE, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_graphs(path: str) -> list[Graph]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    graphs = read_graph6_lines(text)
    if not graphs:
        raise UsageError(f"no graphs in {path}")
    return graphs


def _read_one(path: str) -> Graph:
    graphs = _read_graphs(path)
    if len(graphs) != 1:
        raise UsageError(f"{path} holds {len(graphs)} graphs; expected exactly one")
    return graphs[0]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _kv(items: list[str]) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        key, val = item.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def _int_params(raw: dict, pattern_keys: tuple[str, ...] = ("F", "H")) -> dict:
    out = {}
    for key, val in raw.items():
        if key in pattern_keys:
            out[key] = parse_pattern(val).graph
        else:
            try:
                out[key] = int(val)
            except ValueError:
                raise UsageError(f"parameter {key}={val!r} is not an integer") from None
    return out


def _budget(args) -> SearchBudget | None:
    if args.max_seconds is None and args.max_nodes is None:
        return None
    return SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


# ----------------------------------------------------------------- commands


def cmd_construct(args) -> int:
    if args.named:
        g = named_graph(args.named)
        label = args.named
    else:
        if not args.family:
            raise UsageError("give --family or --named")
        params = _int_params(_kv(args.param))
        g = make(FamilyParams(args.family, params))
        label = LABELING[args.family]
    if args.out == "json":
        _emit({"graph6": to_graph6(g), "n": g.n, "edges": g.num_edges(), "labeling": label})
    else:
        print(to_graph6(g))
    return OK


def cmd_count(args) -> int:
    p = parse_pattern(args.pattern)
    for g in _read_graphs(args.input):
        rep = count_copies(g, p)
        if args.json:
            _emit({"copies": rep.copies, "embeddings": rep.embeddings, "automorphisms": rep.automorphisms})
        else:
            print(rep.copies)
    return OK


def cmd_verify(args) -> int:
    f = parse_pattern(args.target)
    g = _read_one(args.input)
    ok, cert = is_saturated(g, f)
    if ok and args.cert:
        Path(args.cert).write_text(cert.to_json() + "\n")
    _emit({"saturated": ok, "target": str(f), "witnesses": len(cert.witnesses) if ok else 0})
    return OK if ok else FALSE


def cmd_verify_cert(args) -> int:
    g = _read_one(args.input)
    try:
        cert = SaturationCertificate.from_json(Path(args.cert).read_text())
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from None
    ok = verify_certificate(g, cert)
    _emit({"valid": ok})
    return OK if ok else FALSE


def cmd_oracle(args) -> int:
    h, f = parse_pattern(args.h), parse_pattern(args.f)
    res = sat_oracle(args.n, h, f, _budget(args), threads=args.threads)
    data = json.loads(res.to_json())
    if args.deterministic:
        data.pop("elapsed")
    _emit(data)
    if res.status == "partial":
        return BUDGET
    return OK if res.minimum is not None else FALSE


def cmd_search(args) -> int:
    budget = _budget(args)
    if args.mode == "hfree-saturated":
        if args.n is None or not args.h or not args.f:
            raise UsageError("hfree-saturated needs --n, --h and --f")
        out = find_h_free_saturated(args.n, parse_pattern(args.h), parse_pattern(args.f), budget, seed=args.seed)
        data = {"status": out.status, "method": out.method,
                "graph6": None if out.graph is None else to_graph6(out.graph)}
        if not args.deterministic:
            data["elapsed"] = out.elapsed
        _emit(data)
        return {"found": OK, "none": FALSE, "exhausted": BUDGET}[out.status]
    if args.k is None or not args.h or args.n_min is None or args.n_max is None:
        raise UsageError("builder search needs --k, --h, --n-min and --n-max")
    if budget is None:
        raise UsageError("builder search needs --max-seconds or --max-nodes")
    res = search_builder(args.k, parse_pattern(args.h), range(args.n_min, args.n_max + 1), budget,
                         max_h_copies=args.max_h_copies, seed=args.seed, want=args.want)
    _emit({
        "status": res.status,
        "builders": [json.loads(b.to_json(verified=True)) for b in res.builders],
        "pairs": [{"i": i, "j": j, "compatible": c, "coprime": p} for i, j, c, p in res.pairs],
    })
    if res.builders:
        return OK
    return BUDGET if res.status == "exhausted" else FALSE


def cmd_builder(args) -> int:
    if args.action == "coverage":
        cov = size_coverage(args.a, args.b, args.limit)
        _emit({"threshold": cov.threshold, "sizes": sorted(cov.sizes)})
        return OK if cov.threshold is not None else FALSE
    g = _read_one(args.input)
    if args.action == "verify":
        ok, _ = verify_builder(g, args.v, args.k)
        _emit({"builder": ok})
        return OK if ok else FALSE
    b1 = BuilderSpec(g, args.v, args.k)
    b2 = None
    if args.input2:
        b2 = BuilderSpec(_read_one(args.input2), args.v2, args.k)
    print(to_graph6(glue(b1, args.m1, b2, args.m2)))
    return OK


def cmd_bounds(args) -> int:
    if args.table:
        if args.n is None:
            raise UsageError("--table needs --n")
        for row in summary_table(args.n):
            _emit(row)
        return OK
    if not args.case:
        raise UsageError("give --case or --table")
    params = _int_params(_kv(args.param))
    print(evaluate_bound(args.case, **params).to_json())
    return OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="satlab",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--version", action="version", version=f"satlab {__version__}")
    p.add_argument("--threads", type=int, default=None, help="worker processes (env SATLAB_THREADS)")
    p.add_argument("--deterministic", action="store_true", help="omit timing fields from stdout")
    p.add_argument("--no-record", action="store_true", help="do not print the run record to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph from a family or by name")
    c.add_argument("--family", choices=sorted(FAMILIES))
    c.add_argument("--named", help="petersen, c5, coxeter, hoffmansingleton, c6builder11")
    c.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    c.add_argument("--out", choices=("g6", "json"), default="g6")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("count", help="copies of a pattern in each input graph")
    c.add_argument("--pattern", required=True)
    c.add_argument("--input", required=True, help="graph6 file, one graph per line ('-' for stdin)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("verify", help="decide saturation and optionally write a certificate")
    c.add_argument("--target", required=True)
    c.add_argument("--input", required=True)
    c.add_argument("--cert")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("verify-cert", help="check a saturation certificate")
    c.add_argument("--input", required=True)
    c.add_argument("--cert", required=True)
    c.set_defaults(func=cmd_verify_cert)

    def budget_flags(c):
        c.add_argument("--max-seconds", type=float)
        c.add_argument("--max-nodes", type=int)

    c = sub.add_parser("oracle", help="exact sat(n, H, F) by enumeration")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--h", required=True)
    c.add_argument("--f", required=True)
    budget_flags(c)
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("search", help="H-free saturated graphs or builders")
    c.add_argument("--mode", choices=("hfree-saturated", "builder"), required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--h")
    c.add_argument("--f")
    c.add_argument("--k", type=int)
    c.add_argument("--n-min", type=int)
    c.add_argument("--n-max", type=int)
    c.add_argument("--max-h-copies", type=int, default=0)
    c.add_argument("--want", type=int, default=1)
    c.add_argument("--seed", type=int, default=0)
    budget_flags(c)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("builder", help="verify, glue or size coverage of C_k-builders")
    c.add_argument("action", choices=("verify", "glue", "coverage"))
    c.add_argument("--input")
    c.add_argument("--v", type=int, default=0)
    c.add_argument("--k", type=int)
    c.add_argument("--m1", type=int, default=1)
    c.add_argument("--input2")
    c.add_argument("--v2", type=int, default=0)
    c.add_argument("--m2", type=int, default=0)
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--limit", type=int)
    c.set_defaults(func=cmd_builder)

    c = sub.add_parser("bounds", help="evaluate closed-form bounds as exact rationals")
    c.add_argument("--case", choices=sorted(CASES))
    c.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    c.add_argument("--table", action="store_true")
    c.add_argument("--n", type=int)
    c.set_defaults(func=cmd_bounds)
    return p


def _check_builder_args(args) -> None:
    if args.command != "builder":
        return
    if args.action == "coverage":
        if args.a is None or args.b is None:
            raise UsageError("coverage needs --a and --b")
    else:
        if not args.input or args.k is None:
            raise UsageError(f"builder {args.action} needs --input and --k")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    if args.threads is None:
        env = os.environ.get("SATLAB_THREADS")
        try:
            args.threads = int(env) if env else 1
        except ValueError:
            parser.error(f"SATLAB_THREADS={env!r} is not an integer")
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    started = datetime.now(timezone.utc).isoformat()
    buf = io.StringIO()
    try:
        with redirect_stdout(buf):
            _check_builder_args(args)
            status = args.func(args)
    except (UsageError, PatternError, ParameterError, GraphError, BoundRangeError,
            BuilderError, EnumerationError, FileNotFoundError, ValueError) as exc:
        sys.stdout.write(buf.getvalue())
        print(f"satlab: error: {exc}", file=sys.stderr)
        return USAGE
    out = buf.getvalue()
    sys.stdout.write(out)
    sys.stdout.flush()
    if not args.no_record:
        record = {
            "subcommand": args.command,
            "argv": argv,
            "version": __version__,
            "started": started,
            "finished": datetime.now(timezone.utc).isoformat(),
            "stdout_sha256": hashlib.sha256(out.encode()).hexdigest(),
        }
        print(json.dumps(record, sort_keys=True), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
