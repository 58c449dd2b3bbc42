"""Command line: construct, check, reproduce, search, oracle, summary.

Exit status is 0 on success, 1 when a verification fails or an input matrix is
invalid, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog
from .codes import (
    ClassificationError,
    brute_force_weights,
    classify_72,
    code_from_rows,
    is_doubly_even,
    is_self_dual,
    is_self_orthogonal,
    min_distance,
    weights_upto,
)
from .constructions import build_generator, decode_table_row, get_spec, parse_bits, registered_specs
from .gf2 import BinaryMatrix
from .search import EXHAUSTIVE, RANDOM, SearchConfig, read_jsonl, record_lines, render_summary, run_search

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _spec_bits(spec_name: str, bits: str | None, fields: Sequence[str], config: str | None):
    if config is not None:
        with open(config, encoding="utf-8") as fh:
            data = json.load(fh)
        spec_name = data.get("spec", spec_name)
        bits = data.get("bits")
        fields = [f"{k}={v}" for k, v in data.get("fields", {}).items()]
    if spec_name is None:
        raise UsageError("a construction name is required (--spec)")
    spec = get_spec(spec_name)
    if bits is not None and fields:
        raise UsageError("give either --bits or --field, not both")
    if bits is not None:
        b = parse_bits(bits)
        if b.size != spec.bit_budget:
            raise UsageError(f"{spec.name} takes {spec.bit_budget} bits, got {b.size}")
        return spec, b
    if fields:
        named = {}
        for f in fields:
            if "=" not in f:
                raise UsageError(f"--field expects name=bits, got {f!r}")
            k, v = f.split("=", 1)
            named[k] = v
        return spec, decode_table_row(spec, named)
    raise UsageError("no bits given (--bits, --field or --config)")


def cmd_construct(args) -> int:
    spec, bits = _spec_bits(args.spec, args.bits, args.field or [], args.config)
    text = build_generator(spec, bits).gen.to_text()
    _emit(text, args.out)
    return OK


def _emit(text: str, path: str | None) -> None:
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _read_matrix(path: str) -> BinaryMatrix | None:
    try:
        with open(path, encoding="utf-8") as fh:
            m = BinaryMatrix.from_text(fh.read())
    except (OSError, ValueError) as exc:
        print(f"invalid generator matrix: {exc}", file=sys.stderr)
        return None
    if m.rows == 0 or m.cols == 0:
        print("invalid generator matrix: empty", file=sys.stderr)
        return None
    return m


def check_report(gen: BinaryMatrix) -> list[str]:
    code = code_from_rows(gen)
    n, k = code.length, code.rank
    sd = is_self_dual(code)
    lines = [f"n = {n}", f"k = {k}", f"self-dual: {'yes' if sd else 'no'}"]
    de = is_doubly_even(code) if is_self_orthogonal(code) else None
    lines.append(f"doubly-even: {'n/a' if de is None else ('yes' if de else 'no')}")
    d = min_distance(code) if k else 0
    lines.append(f"d = {d}")
    if sd and (n, k, d) == (72, 36, 12):
        try:
            c = classify_72(code, weights_upto(code, 16))
        except ClassificationError as exc:
            lines.append(f"classification: none ({exc})")
        else:
            if c.alpha is not None:
                lines.append(f"classification: Type II, alpha = {c.alpha}")
            else:
                lines.append(f"classification: Type I {c.kind[-2:]}, gamma = {c.gamma}, beta = {c.beta}")
    lines.append(f"self-dual [{n},{k},{d}]" if sd else f"not self-dual [{n},{k},{d}]")
    return lines


def cmd_check(args) -> int:
    gen = _read_matrix(args.file)
    if gen is None:
        return FAILED
    print("\n".join(check_report(gen)))
    return OK


def cmd_reproduce(args) -> int:
    entries = catalog.load_catalog(args.catalog)
    names = {e.name for e in entries} | {"Example1"}
    wanted = args.only or None
    if wanted:
        unknown = [w for w in wanted if w not in names]
        if unknown:
            raise UsageError(f"unknown code(s): {', '.join(unknown)}")
    verdicts = []
    if not wanted or "Example1" in wanted:
        verdicts.append(catalog.verify_example1())
        print(verdicts[-1].line(), flush=True)
    for e in entries:
        if wanted and e.name not in wanted:
            continue
        try:
            v = catalog.verify_entry(e)
        except ValueError as exc:
            v = catalog.Verdict(e.name, False, str(exc))
        verdicts.append(v)
        print(v.line(), flush=True)
    failed = sum(not v.ok for v in verdicts)
    print(f"{len(verdicts) - failed}/{len(verdicts)} passed")
    return FAILED if failed else OK


def _parse_free(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out += range(int(lo), int(hi) + 1)
        elif part:
            out.append(int(part))
    return tuple(out)


def cmd_search(args) -> int:
    trials = 1000 if args.trials is None else args.trials
    if args.mode == RANDOM and trials < 1:
        raise UsageError("--trials must be >= 1")
    try:
        cfg = SearchConfig(
            spec=args.spec, mode=args.mode, trials=max(trials, 1), seed=args.seed,
            workers=args.workers, min_distance_target=args.target, exhaustive_cap=args.cap,
            free=_parse_free(args.free), base=args.base,
            include=tuple(args.include_bits or ()), timestamps=args.timestamps)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    lines = record_lines(run_search(cfg))
    if args.out is None:
        for ln in lines:
            print(ln)
    else:
        with open(args.out, "a", encoding="utf-8") as fh:
            for ln in lines:
                fh.write(ln + "\n")
    print(f"{len(lines)} record(s)", file=sys.stderr)
    return OK


def cmd_oracle(args) -> int:
    gen = _read_matrix(args.file)
    if gen is None:
        return FAILED
    code = code_from_rows(gen)
    if code.rank > args.max_dimension:
        raise UsageError(f"rank {code.rank} exceeds the oracle limit {args.max_dimension}")
    profile = brute_force_weights(code, args.max_dimension)
    print(f"n = {code.length}, k = {code.rank}, codewords = {2 ** code.rank}")
    for w in range(code.length + 1):
        if profile[w]:
            print(f"A_{w} = {profile[w]}")
    return OK


def cmd_summary(args) -> int:
    print(render_summary(read_jsonl(args.file)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gmrcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    spec_names = [s.name for s in registered_specs()]

    c = sub.add_parser("construct", help="print the generator [I | tau] as 0/1 rows")
    c.add_argument("--spec", choices=spec_names)
    c.add_argument("--bits", help="all free bits as a 0/1 string")
    c.add_argument("--field", action="append", metavar="NAME=BITS", help="one table field, e.g. rA=0101...")
    c.add_argument("--config", help='JSON file {"spec": ..., "bits": ...} or {"spec": ..., "fields": {...}}')
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="report n, k, self-duality, d and the [72,36,12] type")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("reproduce", help="rebuild the embedded table codes and compare")
    c.add_argument("--only", action="append", metavar="NAME")
    c.add_argument("--catalog", help="alternative catalog file (same layout)")
    c.set_defaults(func=cmd_reproduce)

    c = sub.add_parser("search", help="seeded search over a construction's free bits")
    c.add_argument("--spec", required=True, choices=spec_names)
    c.add_argument("--mode", choices=[RANDOM, EXHAUSTIVE], default=RANDOM)
    c.add_argument("--trials", type=int, help="random trials (default 1000)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--target", type=int, default=12, help="minimum distance to keep")
    c.add_argument("--cap", type=int, default=28, help="largest exhaustive bit count")
    c.add_argument("--free", help="free bit positions for exhaustive mode, e.g. 0-19")
    c.add_argument("--base", help="values of the fixed bits")
    c.add_argument("--include-bits", action="append", metavar="BITS", help="evaluate these bits first")
    c.add_argument("--timestamps", action="store_true", help="stamp records (output is no longer reproducible)")
    c.add_argument("--out", help="append JSON lines here instead of stdout")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("oracle", help="complete weight distribution by enumeration")
    c.add_argument("file")
    c.add_argument("--max-dimension", type=int, default=24)
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("summary", help="render search records as a table")
    c.add_argument("file")
    c.set_defaults(func=cmd_summary)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
