"""Command-line front end: ``dyck-syzygy {kac,syzygy,betti,render,check,general}``."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .enumeration import enumerate_kac_patterns, enumerate_syzygy_patterns
from .errors import DyckSyzygyError
from .grothendieck import HilbertCache
from .oracle import check_suite
from .partitions import parse_partition
from .render import pattern_svg
from .syzygy import betti_table, general_ideal_terms, homology_classes

CACHE_ENV = "DYCK_SYZYGY_CACHE"


def default_cache_path() -> Path:
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    base = Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache"))
    return base / "dyck_syzygy" / "hilbert-v1.jsonl"


def _cache(args) -> HilbertCache:
    if args.no_cache:
        return HilbertCache()
    return HilbertCache(args.cache or default_cache_path())


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _fmt_pattern(pattern) -> str:
    paths = "; ".join(" ".join(f"({x},{y})" for x, y in p.cells) for p in pattern.paths) or "-"
    bullets = " ".join(f"({x},{y})" for x, y in sorted(pattern.bullets, key=lambda b: (b[1], b[0])))
    return paths + (f" | bullets {bullets}" if bullets else "")


def cmd_kac(args) -> str:
    family = enumerate_kac_patterns(args.lam, args.n, args.size_bound)
    if args.format == "json":
        return _dump(family.to_json())
    lines = [f"K_{args.lam} for n={args.n}: {len(family)} composition factors"]
    for member in family:
        lines.append(f"  L_{member.label}    d={member.d}    {_fmt_pattern(member.pattern)}")
    return "\n".join(lines) + "\n"


def cmd_syzygy(args) -> str:
    result = homology_classes(args.lam, args.m, args.n, jobs=args.jobs, cache=_cache(args))
    if args.b is not None:
        result.strands = {b: s for b, s in result.strands.items() if b == args.b}
    if args.format == "json":
        return _dump(result.to_json())
    size = args.lam.size()
    lines = []
    for b, members in result.strands.items():
        classes = " + ".join(f"[L_{m.label}]" for m in members)
        lines.append(f"H_{size + b}: {classes}")
        for m in members:
            lines.append(f"  HS_{m.label}(t) = {m.series}    d={m.pattern.d} b={m.pattern.b}    {_fmt_pattern(m.pattern)}")
    return "\n".join(lines) + "\n"


def cmd_betti(args) -> str:
    result = homology_classes(args.lam, args.m, args.n, jobs=args.jobs, cache=_cache(args))
    table = betti_table(args.lam, args.m, args.n, homology=result)
    if args.format == "json":
        return _dump({
            "lambda": list(args.lam), "m": args.m, "n": args.n,
            "rows": table.to_json(),
            "strands": result.to_json()["strands"],
        })
    return table.render()


def cmd_render(args) -> str:
    if args.kind == "kac":
        family = enumerate_kac_patterns(args.lam, args.n, args.size_bound)
    else:
        family = enumerate_syzygy_patterns(args.lam, args.n)
    members = list(family)
    if args.index is not None:
        members = [members[args.index]]
    cols = max((m.label.row(1) for m in family), default=0)
    if args.format == "svg" and len(members) == 1 and args.out is None:
        return pattern_svg(args.lam, members[0].pattern, rows=args.n, cols=cols)
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for i, member in enumerate(members):
        name = f"{args.kind}_{i:03d}_" + "-".join(map(str, member.label)) + ".svg"
        (out_dir / name).write_text(pattern_svg(args.lam, member.pattern, rows=args.n, cols=cols))
        written.append(str(out_dir / name))
    return "\n".join(written) + "\n"


def cmd_check(args) -> str:
    results = check_suite("all" if args.all else "quick")
    lines = [f"1..{len(results)}"]
    for i, (name, ok, detail) in enumerate(results, 1):
        lines.append(f"{'ok' if ok else 'not ok'} {i} - {name}" + (f" # {detail}" if detail and not ok else ""))
    args.failed = not all(ok for _, ok, _ in results)
    return "\n".join(lines) + "\n"


def cmd_general(args) -> str:
    terms = general_ideal_terms(args.lams)
    if args.format == "json":
        return _dump([t.to_json() for t in terms])
    return "".join(
        f"{'+' if t.sign > 0 else '-'} I_{t.partition}    subset {{{','.join(map(str, t.subset))}}}\n" for t in terms
    )


def _partition_arg(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyck-syzygy", description=__doc__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_m=True):
        p.add_argument("--n", type=int, required=True)
        if with_m:
            p.add_argument("--m", type=int, help="defaults to n")
        p.add_argument("--format", choices=["text", "json", "svg"], default="text")
        p.add_argument("--cache", type=Path, help=f"Hilbert-series cache file (env {CACHE_ENV})")
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("kac", help="composition factors of a Kac module")
    p.add_argument("lam", type=_partition_arg)
    common(p, with_m=False)
    p.add_argument("--size-bound", type=int)
    p.set_defaults(func=cmd_kac)

    p = sub.add_parser("syzygy", help="homology classes of the BGG complex")
    p.add_argument("lam", type=_partition_arg)
    common(p)
    p.add_argument("--b", type=int)
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("betti", help="Betti table of a principal GL-invariant ideal")
    p.add_argument("lam", type=_partition_arg)
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("render", help="SVG figures of patterns")
    p.add_argument("lam", type=_partition_arg)
    common(p, with_m=False)
    p.add_argument("--kind", choices=["kac", "syzygy"], default="syzygy")
    p.add_argument("--index", type=int)
    p.add_argument("--size-bound", type=int)
    p.add_argument("--out", type=Path, help="output directory")
    p.set_defaults(func=cmd_render, format="svg")

    p = sub.add_parser("check", help="run the oracle suite (TAP output)")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("general", help="inclusion-exclusion terms for a sum of principal ideals")
    p.add_argument("lams", type=_partition_arg, nargs="+")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_general)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "n", None) is not None:
        if getattr(args, "m", "absent") is None:
            args.m = args.n
        m = getattr(args, "m", args.n)
        if not 1 <= args.n <= m:
            parser.error(f"need 1 <= n <= m, got m={m}, n={args.n}")
        if args.lam.length() > args.n:
            parser.error(f"{args.lam} has more than n={args.n} rows")
    try:
        text = args.func(args)
    except DyckSyzygyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return 1 if getattr(args, "failed", False) else 0


if __name__ == "__main__":
    sys.exit(main())
