"""Command-line front end: group data, counts, verification, table emission.

Exit codes: 0 success, 1 verification found an unexpected status, 2 input
error (unknown type, unreachable e, unsupported method), 3 scale violation.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .cache import Cache, default_cache_dir
from .chartable import NoCharTableModelError, character_table, schur_elements
from .counting import (
    UnreachableEError,
    applicable_methods,
    cached_group,
    cached_table,
    count_eregular,
    count_simples_rank,
    has_table_model,
    make_spec_point,
    meataxe_count,
    verify_theorem,
)
from .ff import INFINITE
from .hecke import class_polynomials
from .meataxe import MEATAXE_CAP
from .rootsys import (
    UnsupportedScaleError,
    bad_primes,
    datum_from_label,
    group_from_json,
    known_degrees,
    known_order,
    parse_type,
)

SCHEMA = 1
_LETTERS = "stuvwxyz"

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INPUT = 2
EXIT_SCALE = 3


def _emit(payload, args) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    _write(text, args)


def _write(text: str, args) -> None:
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_e_list(spec: str) -> list:
    out = []
    for part in spec.split(","):
        part = part.strip().lower()
        if not part:
            continue
        if part in ("inf", "infinity", "oo"):
            out.append(INFINITE)
        else:
            e = int(part)
            if e < 2:
                raise ValueError(f"e must be >= 2 or 'inf', got {part!r}")
            out.append(e)
    if not out:
        raise ValueError("empty e list")
    return out


def _parse_int_list(spec: str) -> list[int]:
    out = [int(p) for p in spec.split(",") if p.strip()]
    if not out:
        raise ValueError("empty list")
    return out


def _word_label(word) -> str:
    return "".join(_LETTERS[s] for s in word) if word else "1"


def _load_group(label: str, args):
    """Build a group, going through the on-disk cache when enabled."""
    datum = datum_from_label(label)
    if known_order(datum) > args.max_order:
        raise UnsupportedScaleError(
            f"|W({datum.label})| = {known_order(datum)} exceeds --max-order {args.max_order}"
        )
    cache = Cache(args.cache_dir, enabled=not args.no_cache)
    payload = cache.load("group", datum.label)
    if payload is not None:
        try:
            return group_from_json(payload, max_order=args.max_order)
        except ValueError:
            pass  # stale or corrupt record: rebuild below
    group = cached_group(datum)
    cache.store("group", datum.label, group.to_json())
    return group


# -- subcommands -----------------------------------------------------------------


def cmd_group(args) -> int:
    label = parse_type(args.type)
    if label.startswith("E"):
        _emit(
            {
                "schema": SCHEMA,
                "type": label,
                "order": known_order(label),
                "degrees": list(known_degrees(label)),
                "bad_primes": sorted(bad_primes(label)),
                "provenance": "stored",
            },
            args,
        )
        return EXIT_OK
    group = _load_group(label, args)
    _emit(
        {
            "schema": SCHEMA,
            "type": group.datum.label,
            "order": group.order,
            "degrees": list(group.degrees()),
            "classes": len(group.conjugacy_classes()),
            "bad_primes": sorted(bad_primes(group.datum)),
            "provenance": "computed",
        },
        args,
    )
    return EXIT_OK


def _pick_method(datum, method: str) -> str:
    if method != "auto":
        return method
    return "rank" if has_table_model(datum) else "meataxe"


def cmd_count(args) -> int:
    label = parse_type(args.type)
    group = _load_group(label, args)
    e_list = _parse_e_list(args.e)
    if len(e_list) != 1:
        raise ValueError("count takes a single e")
    e = e_list[0]
    ell = int(args.ell)
    method = _pick_method(group.datum, args.method)
    if e is INFINITE or e == math.inf:
        # Lemma 2.2 semisimple case: every path returns the class count
        _emit(
            {
                "schema": SCHEMA,
                "type": group.datum.label,
                "e": "inf",
                "ell": ell,
                "i": 0,
                "count": len(group.conjugacy_classes()),
                "method": "class-count",
            },
            args,
        )
        return EXIT_OK
    point = make_spec_point(int(e), ell)
    if method == "rank":
        if not has_table_model(group.datum):
            raise NoCharTableModelError(
                f"no character-table model for {group.datum.label}; use the meataxe path"
            )
        count = count_simples_rank(group, cached_table(group), point)
    elif method == "meataxe":
        if group.order > MEATAXE_CAP:
            raise UnsupportedScaleError(
                f"|W| = {group.order} exceeds the meataxe cap {MEATAXE_CAP}"
            )
        count = meataxe_count(group, point, seed=args.seed)
    elif method == "partitions":
        if group.datum.family != "A":
            raise ValueError("the partition count applies to type A only")
        count = count_eregular(group.rank + 1, int(e))
    else:
        raise ValueError(f"unknown method {method!r}")
    _emit(
        {
            "schema": SCHEMA,
            "type": group.datum.label,
            "e": int(e),
            "ell": ell,
            "i": point.i,
            "count": count,
            "method": method,
        },
        args,
    )
    return EXIT_OK


def _verify_e_worker(task):
    """One (type, e) report, for the process pool (arguments picklable)."""
    label, e_repr, ells, seed, methods = task
    datum = datum_from_label(label)
    e = INFINITE if e_repr == "inf" else int(e_repr)
    report = verify_theorem(datum, [e], list(ells), seed=seed, methods=methods)[0]
    return report.to_json(), report.ok(False), report.ok(True)


def cmd_verify(args) -> int:
    label = parse_type(args.type)
    datum = datum_from_label(label)
    if known_order(datum) > args.max_order:
        raise UnsupportedScaleError(
            f"|W({datum.label})| = {known_order(datum)} exceeds --max-order {args.max_order}"
        )
    e_list = _parse_e_list(args.e)
    ells = _parse_int_list(args.ell)
    methods = None if args.method == "auto" else [args.method]
    tasks = [
        (label, "inf" if (e is INFINITE or e == math.inf) else int(e),
         tuple(ells), args.seed, methods)
        for e in e_list
    ]
    jobs = min(args.jobs, len(tasks))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_e_worker, tasks))
    else:
        results = [_verify_e_worker(t) for t in tasks]
    reports = [r[0] for r in results]
    all_ok = all((r[2] if args.expect_bad_strict else r[1]) for r in results)
    _emit({"schema": SCHEMA, "reports": reports, "ok": all_ok}, args)
    return EXIT_OK if all_ok else EXIT_UNEXPECTED


def cmd_chartable(args) -> int:
    label = parse_type(args.type)
    group = _load_group(label, args)
    table = cached_table(group)
    if args.format == "csv":
        _write(table.to_csv(), args)
    else:
        _emit({"schema": SCHEMA, **table.to_json()}, args)
    return EXIT_OK


def cmd_schur(args) -> int:
    label = parse_type(args.type)
    group = _load_group(label, args)
    data = schur_elements(group, cached_table(group))
    if args.format == "csv":
        lines = ["label,dim,schur"]
        for lab, dim, c in zip(data.labels, data.dims, data.elements):
            lines.append(f'"{lab}",{dim},"{c.to_str("u")}"')
        _write("\n".join(lines) + "\n", args)
    else:
        _emit({"schema": SCHEMA, **data.to_json()}, args)
    return EXIT_OK


def cmd_classpoly(args) -> int:
    label = parse_type(args.type)
    group = _load_group(label, args)
    table = class_polynomials(group, cached_table(group))
    classes = group.conjugacy_classes()
    class_labels = ["C" + _word_label(c.rep_word) for c in classes]
    if args.format == "csv":
        lines = ["w," + ",".join(class_labels)]
        for w in range(group.order):
            polys = ",".join(
                f'"{table.entries[w][c.class_id].to_str("u")}"' for c in classes
            )
            lines.append(f"{_word_label(group.words[w])},{polys}")
        _write("\n".join(lines) + "\n", args)
    else:
        rows = [
            {
                "w": w,
                "word": _word_label(group.words[w]),
                "polys": {
                    class_labels[c.class_id]: table.entries[w][c.class_id].to_str("u")
                    for c in classes
                },
            }
            for w in range(group.order)
        ]
        _emit(
            {
                "schema": SCHEMA,
                "type": group.datum.label,
                "class_labels": class_labels,
                "rows": rows,
            },
            args,
        )
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="group type, e.g. A3, B2, I2(6), F4")
    p.add_argument("--cache-dir", default=str(default_cache_dir()))
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--max-order", type=int, default=10_000,
                   help="construction cap on |W| (E types exceed any desk budget)")
    p.add_argument("--output", default=None, help="write the report to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckecount",
        description="Count simple modules of specialized Iwahori-Hecke algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="order, degrees, classes, bad primes")
    _add_common(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("count", help="count simple modules at one (e, ell)")
    _add_common(p)
    p.add_argument("--e", required=True, help="e value (or 'inf')")
    p.add_argument("--ell", required=True, type=int, help="characteristic")
    p.add_argument("--method", default="auto",
                   choices=["auto", "rank", "meataxe", "partitions"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="cross-check all counting paths on a grid")
    _add_common(p)
    p.add_argument("--e", required=True, help="comma list of e values (or 'inf')")
    p.add_argument("--ell", required=True, help="comma list of primes")
    p.add_argument("--method", default="auto",
                   choices=["auto", "rank", "meataxe", "partitions"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--expect-bad-strict", action="store_true",
                   help="accept STRICTLY_LESS rows at bad primes")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)

    for name, fn in (
        ("chartable", cmd_chartable),
        ("schur", cmd_schur),
        ("classpoly", cmd_classpoly),
    ):
        p = sub.add_parser(name, help=f"emit the {name} table")
        _add_common(p)
        p.add_argument("--format", default="json", choices=["json", "csv"])
        p.set_defaults(func=fn)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedScaleError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SCALE
    except (UnreachableEError, NoCharTableModelError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
