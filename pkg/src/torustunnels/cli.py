"""Command-line frontend: slope sequences, classification, bulk enumeration.

Subcommands mirror the library.  middle-slopes, upper-slopes, lower-slopes,
intermediates, binaries, and classify take one (p, q) pair, or --batch FILE
with one whitespace-separated pair per line, processed in order.  enumerate
sweeps every coprime pair 2 <= q < p <= MAX in (p, q) order, one record per
pair and tunnel kind.  Output formats: text (default), json (one object per
result line), csv (fixed column set, intermediates omitted).  Results go to
stdout, diagnostics to stderr; the exit code is 0 exactly when results were
printed and 2 on any error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .arith import NotAKnotError, UnknotError, coprime_pairs
from .classification import TunnelClassification, case_of, classify, partition_tunnels
from .middle import CablingSequence, middle_sequence
from .semisimple import lower_sequence, upper_sequence

__all__ = [
    "OutputRecord",
    "record_to_dict",
    "record_from_dict",
    "build_parser",
    "main",
]

SEQUENCE_FUNCS = {
    "middle": middle_sequence,
    "upper": upper_sequence,
    "lower": lower_sequence,
}

CSV_COLUMNS = (
    "p",
    "q",
    "tunnel",
    "simple_slope",
    "slopes",
    "binaries",
    "case",
    "distinct_count",
)


@dataclass(frozen=True)
class OutputRecord:
    """One printable result; unused fields stay None and are left out of JSON."""

    p: int
    q: int
    tunnel: str | None = None
    simple_slope: tuple[int, int] | None = None
    slopes: tuple[int, ...] | None = None
    binaries: tuple[int, ...] | None = None
    intermediates: tuple[tuple[int, int], ...] | None = None
    case: str | None = None
    distinct_count: int | None = None
    classes: tuple[tuple[str, ...], ...] | None = None


def sequence_record(
    p: int,
    q: int,
    kind: str,
    seq: CablingSequence,
    case: str | None = None,
    distinct_count: int | None = None,
) -> OutputRecord:
    return OutputRecord(
        p=p,
        q=q,
        tunnel=kind,
        simple_slope=(seq.simple_slope.num, seq.simple_slope.den),
        slopes=seq.slopes,
        binaries=seq.binaries,
        intermediates=seq.intermediates,
        case=case,
        distinct_count=distinct_count,
    )


def classification_record(p: int, q: int, result: TunnelClassification) -> OutputRecord:
    return OutputRecord(
        p=p,
        q=q,
        case=result.case_label,
        distinct_count=result.distinct_count,
        classes=result.coincidences,
    )


def record_to_dict(record: OutputRecord) -> dict:
    out: dict = {"p": record.p, "q": record.q}
    if record.tunnel is not None:
        out["tunnel"] = record.tunnel
    if record.simple_slope is not None:
        out["simple_slope"] = {
            "num": record.simple_slope[0],
            "den": record.simple_slope[1],
        }
    if record.slopes is not None:
        out["slopes"] = list(record.slopes)
    if record.binaries is not None:
        out["binaries"] = list(record.binaries)
    if record.intermediates is not None:
        out["intermediates"] = [list(pair) for pair in record.intermediates]
    if record.case is not None:
        out["case"] = record.case
    if record.distinct_count is not None:
        out["distinct_count"] = record.distinct_count
    if record.classes is not None:
        out["classes"] = [list(part) for part in record.classes]
    return out


def record_from_dict(data: dict) -> OutputRecord:
    simple = data.get("simple_slope")
    return OutputRecord(
        p=data["p"],
        q=data["q"],
        tunnel=data.get("tunnel"),
        simple_slope=(simple["num"], simple["den"]) if simple is not None else None,
        slopes=tuple(data["slopes"]) if "slopes" in data else None,
        binaries=tuple(data["binaries"]) if "binaries" in data else None,
        intermediates=tuple((a, b) for a, b in data["intermediates"])
        if "intermediates" in data
        else None,
        case=data.get("case"),
        distinct_count=data.get("distinct_count"),
        classes=tuple(tuple(part) for part in data["classes"])
        if "classes" in data
        else None,
    )


def slope_text(record: OutputRecord) -> str:
    num, den = record.simple_slope
    return ", ".join([f"[{num}/{den}]"] + [str(m) for m in record.slopes])


def intermediates_text(record: OutputRecord) -> str:
    return ", ".join(f"({a},{b})" for a, b in record.intermediates)


def binaries_text(record: OutputRecord) -> str:
    return str(list(record.binaries))


def classification_text(record: OutputRecord) -> str:
    noun = "distinct tunnel" if record.distinct_count == 1 else "distinct tunnels"
    head = f"case {record.case}: {record.distinct_count} {noun}"
    if all(len(part) == 1 for part in record.classes):
        return head
    clauses = [
        " = ".join(part) if len(part) > 1 else f"{part[0]} distinct"
        for part in record.classes
    ]
    return f"{head} ({'; '.join(clauses)})"


TEXT_RENDERERS = {
    "slopes": slope_text,
    "intermediates": intermediates_text,
    "binaries": binaries_text,
    "classify": classification_text,
}


def record_to_csv_row(record: OutputRecord) -> list:
    simple = (
        ""
        if record.simple_slope is None
        else f"{record.simple_slope[0]}/{record.simple_slope[1]}"
    )
    return [
        record.p,
        record.q,
        record.tunnel or "",
        simple,
        "" if record.slopes is None else ";".join(str(m) for m in record.slopes),
        "" if record.binaries is None else ";".join(str(b) for b in record.binaries),
        record.case or "",
        "" if record.distinct_count is None else record.distinct_count,
    ]


def _read_batch(path: str) -> list[tuple[int, int]]:
    pairs = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            tokens = line.split()
            if not tokens:
                continue
            try:
                if len(tokens) != 2:
                    raise ValueError
                pairs.append((int(tokens[0]), int(tokens[1])))
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: expected two integers, got {line.strip()!r}"
                ) from None
    return pairs


def _input_pairs(args: argparse.Namespace) -> list[tuple[int, int]]:
    if args.batch is not None:
        if args.p is not None or args.q is not None:
            raise ValueError("give p q arguments or --batch, not both")
        return _read_batch(args.batch)
    if args.p is None or args.q is None:
        raise ValueError("p and q are required unless --batch FILE is given")
    return [(args.p, args.q)]


def run_knot_command(args: argparse.Namespace) -> int:
    writer = None
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    for p, q in _input_pairs(args):
        if args.view == "classify":
            record = classification_record(p, q, classify(p, q))
        else:
            record = sequence_record(p, q, args.tunnel, SEQUENCE_FUNCS[args.tunnel](p, q))
        if args.format == "json":
            print(json.dumps(record_to_dict(record)))
        elif args.format == "csv":
            writer.writerow(record_to_csv_row(record))
        else:
            print(TEXT_RENDERERS[args.view](record))
    return 0


def run_enumerate(args: argparse.Namespace) -> int:
    if args.max < 2:
        raise ValueError("--max must be at least 2")
    kinds = (args.tunnel,) if args.tunnel else ("middle", "upper", "lower")
    writer = None
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    for p, q in coprime_pairs(args.max):
        sequences = {kind: SEQUENCE_FUNCS[kind](p, q) for kind in SEQUENCE_FUNCS}
        parts = partition_tunnels(
            sequences["middle"], sequences["upper"], sequences["lower"]
        )
        label = case_of(p, q)
        for kind in kinds:
            record = sequence_record(
                p, q, kind, sequences[kind], case=label, distinct_count=len(parts)
            )
            if args.format == "json":
                print(json.dumps(record_to_dict(record)))
            elif args.format == "csv":
                writer.writerow(record_to_csv_row(record))
            else:
                print(f"({p},{q}) {kind}: {slope_text(record)}")
    return 0


def _add_common_flags(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--format", choices=("text", "json", "csv"), default="text")
    cmd.add_argument(
        "--batch",
        metavar="FILE",
        default=None,
        help="read whitespace-separated p q pairs, one per line",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-tunnels",
        description="Exact cabling-sequence invariants of torus knot tunnels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    knot_commands = (
        ("middle-slopes", "slopes", "middle", "slope sequence of the middle tunnel"),
        ("upper-slopes", "slopes", "upper", "slope sequence of the upper tunnel"),
        ("lower-slopes", "slopes", "lower", "slope sequence of the lower tunnel"),
        (
            "intermediates",
            "intermediates",
            "middle",
            "intermediate torus knots of the middle tunnel",
        ),
        ("binaries", "binaries", "middle", "binary invariants of the middle tunnel"),
        ("classify", "classify", None, "count distinct tunnels and coincidences"),
    )
    for name, view, tunnel, help_text in knot_commands:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("p", type=int, nargs="?", default=None, help="first parameter")
        cmd.add_argument("q", type=int, nargs="?", default=None, help="second parameter")
        _add_common_flags(cmd)
        cmd.set_defaults(func=run_knot_command, view=view, tunnel=tunnel)

    enum = sub.add_parser("enumerate", help="sweep all coprime pairs 2 <= q < p <= MAX")
    enum.add_argument("--max", type=int, required=True, help="largest p to enumerate")
    enum.add_argument(
        "--tunnel",
        choices=("middle", "upper", "lower"),
        default=None,
        help="restrict output to one tunnel kind",
    )
    enum.add_argument("--format", choices=("text", "json", "csv"), default="text")
    enum.set_defaults(func=run_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotAKnotError, UnknotError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
