"""Command-line front end.

Subcommands
-----------

``conres table``    spectral table (homological or cohomological view)
``conres link``     reduced link homology polynomial
``conres gamma``    quotient collection-space homology (trivial or sign system)
``conres verify``   run the consistency checks and report them
``conres order``    order of a degree-2 class given as an integer sequence
``conres stab``     stabilization bound of a cell, or the scan for one shape

Output goes to stdout as json, csv or markdown; diagnostics go to stderr.
Exit codes: 0 success, 1 usage error, 2 a consistency check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import __version__
from .cohomring import h2_order
from .flagchar import CHARACTERS, gamma_poincare
from .qcombinat import ConsistencyError, GradedDims, MultiIndex, QPoly
from .resolution import ALL_CHECKS, SpectralTable, link_poincare, spectral_table, verify
from .stab import cohomological_rank, e1_stable_bound, stab_index

DEFAULT_MAX_N = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; route that to exit code 1 instead
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


# --------------------------------------------------------------------------
# output documents
# --------------------------------------------------------------------------


def _poly_pairs(p: QPoly | GradedDims) -> list[list[int]]:
    return [[e, c] for e, c in p.items()]


@dataclass(frozen=True)
class OutputDocument:
    """One command's result: metadata plus a json-ready payload.

    Polynomial values are serialized as [exponent, coefficient] pairs with
    ascending exponents, so serialization is deterministic and round-trips.
    """

    name: str
    version: str
    arguments: dict[str, Any]
    payload: dict[str, Any]
    format: str = "md"

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.name,
            "version": self.version,
            "arguments": self.arguments,
            "format": self.format,
            "payload": self.payload,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "OutputDocument":
        raw = json.loads(text)
        return OutputDocument(
            raw["command"], raw["version"], raw["arguments"], raw["payload"], raw["format"]
        )

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        for row in _csv_rows(self.payload):
            writer.writerow(row)
        return out.getvalue()

    def to_markdown(self) -> str:
        return _markdown(self.payload, self.arguments)

    def render(self) -> str:
        if self.format == "json":
            return self.to_json()
        if self.format == "csv":
            return self.to_csv()
        if self.format == "md":
            return self.to_markdown()
        raise UsageError(f"unknown format {self.format!r}")


def _csv_rows(payload: dict[str, Any]) -> list[list[Any]]:
    if "cells" in payload:
        rows: list[list[Any]] = [["p", "q", "block", "rank"]]
        for cell in payload["cells"]:
            for parts, rank in sorted(cell["blocks"].items()):
                rows.append([cell["p"], cell["q"], parts, rank])
        return rows
    if "polynomial" in payload:
        rows = [["exponent", "coefficient"]]
        rows.extend(payload["polynomial"])
        return rows
    if "checks" in payload:
        rows = [["check", "location", "passed", "detail"]]
        for check in payload["checks"]:
            rows.append(
                [check["name"], check["location"], int(check["passed"]), check["detail"]]
            )
        return rows
    # flat key/value payloads (order, stab)
    keys = sorted(payload)
    return [keys, [json.dumps(payload[k]) if isinstance(payload[k], (list, dict)) else payload[k] for k in keys]]


def _markdown(payload: dict[str, Any], arguments: dict[str, Any]) -> str:
    if "cells" in payload:
        return _markdown_table(payload, arguments)
    if "polynomial" in payload:
        return payload["pretty"] + "\n"
    if "checks" in payload:
        lines = [
            f"{'ok' if c['passed'] else 'FAIL'} {c['name']} @ {c['location']}"
            + (f" ({c['detail']})" if c["detail"] else "")
            for c in payload["checks"]
        ]
        lines.append(f"result: {'all checks passed' if payload['passed'] else 'FAILURES'}")
        return "\n".join(lines) + "\n"
    lines = [f"{k} = {payload[k]}" for k in sorted(payload)]
    return "\n".join(lines) + "\n"


def _markdown_table(payload: dict[str, Any], arguments: dict[str, Any]) -> str:
    cells = payload["cells"]
    if not cells:
        return "(empty table)\n"
    columns = sorted({c["p"] for c in cells})
    rows = sorted({c["q"] for c in cells}, reverse=True)
    by_pos = {(c["p"], c["q"]): c for c in cells}
    column_blocks: dict[int, list[str]] = {}
    for p in columns:
        seen: list[str] = []
        for c in cells:
            if c["p"] == p:
                for parts in c["blocks"]:
                    if parts not in seen:
                        seen.append(parts)
        column_blocks[p] = sorted(seen, key=_parts_sort_key)
    row_label = "i" if arguments.get("total_degree") and payload["view"] == "hom" else "q"
    header = f"| {row_label} \\ p | " + " | ".join(str(p) for p in columns) + " |"
    rule = "|" + "---|" * (len(columns) + 1)
    lines = [
        f"spectral table, n = {payload['n']} ({payload['view']} view)",
        "",
        header,
        rule,
    ]
    for q in rows:
        entries = []
        for p in columns:
            cell = by_pos.get((p, q))
            if cell is None:
                entries.append(".")
            else:
                entries.append(
                    "+".join(
                        str(cell["blocks"][parts])
                        for parts in column_blocks[p]
                        if parts in cell["blocks"]
                    )
                )
        lines.append(f"| {q} | " + " | ".join(entries) + " |")
    lines.append("")
    for p in columns:
        lines.append(f"p={p} blocks: " + ", ".join(f"({b})" for b in column_blocks[p]))
    return "\n".join(lines) + "\n"


def _parts_sort_key(parts: str) -> tuple[int, ...]:
    return tuple(-int(x) for x in parts.split(","))


# --------------------------------------------------------------------------
# argument handling
# --------------------------------------------------------------------------


def _parse_parts(text: str) -> MultiIndex:
    try:
        parts = tuple(int(x) for x in text.split(","))
        return MultiIndex(parts)
    except ValueError as exc:
        raise UsageError(f"bad --parts value {text!r}: {exc}") from exc


def _parse_seq(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --seq value {text!r}: {exc}") from exc


def _check_n(n: int, max_n: int, minimum: int = 2) -> None:
    if not minimum <= n <= max_n:
        raise UsageError(f"--n must be between {minimum} and {max_n} (got {n})")


def _table_cells(table: SpectralTable, view: str, total_degree: bool) -> list[dict[str, Any]]:
    cells: list[dict[str, Any]] = []
    for p, i, rank in table.cells():
        blocks = {
            ",".join(map(str, A.parts)): r for A, r in table.breakdown(p, i).items()
        }
        if view == "hom":
            q = i if total_degree else i - p
            cells.append({"p": p, "q": q, "rank": rank, "blocks": blocks})
        else:
            n = table.n
            cells.append(
                {
                    "p": -p,
                    "q": n * n - (i - p) - 1,
                    "rank": rank,
                    "blocks": blocks,
                }
            )
    cells.sort(key=lambda c: (c["p"], c["q"]))
    return cells


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def _cmd_table(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    _check_n(args.n, args.max_n)
    table = spectral_table(args.n, koszul=args.koszul)
    cells = _table_cells(table, args.view, args.total_degree)
    payload = {"n": args.n, "view": args.view, "cells": cells}
    doc = OutputDocument(
        "table",
        __version__,
        {
            "n": args.n,
            "view": args.view,
            "koszul": args.koszul,
            "total_degree": args.total_degree,
        },
        payload,
        args.format,
    )
    return doc, 0


def _cmd_link(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    _check_n(args.n, args.max_n, minimum=3)
    poly = link_poincare(args.n, koszul=args.koszul)
    payload = {
        "n": args.n,
        "polynomial": _poly_pairs(poly),
        "pretty": str(poly),
    }
    doc = OutputDocument(
        "link", __version__, {"n": args.n, "koszul": args.koszul}, payload, args.format
    )
    return doc, 0


def _cmd_gamma(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    A = _parse_parts(args.parts)
    _check_n(args.n, args.max_n)
    if A.size > args.n:
        raise UsageError(f"parts {A} do not fit in ambient dimension {args.n}")
    poly = gamma_poincare(A, args.n, args.character)
    payload = {
        "n": args.n,
        "parts": list(A.parts),
        "character": args.character,
        "polynomial": _poly_pairs(poly),
        "pretty": str(poly),
    }
    doc = OutputDocument(
        "gamma",
        __version__,
        {"parts": list(A.parts), "n": args.n, "character": args.character},
        payload,
        args.format,
    )
    return doc, 0


def _cmd_verify(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    _check_n(args.n, args.max_n)
    checks = tuple(args.checks.split(",")) if args.checks else None
    try:
        report = verify(args.n, checks=checks, koszul=args.koszul)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "n": args.n,
        "passed": report.ok,
        "checks": [
            {
                "name": c.name,
                "location": c.location,
                "passed": c.passed,
                "detail": c.detail,
            }
            for c in report.checks
        ],
    }
    doc = OutputDocument(
        "verify",
        __version__,
        {"n": args.n, "checks": args.checks or "all", "koszul": args.koszul},
        payload,
        args.format,
    )
    return doc, 0 if report.ok else 2


def _cmd_order(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    seq = _parse_seq(args.seq)
    if not seq:
        raise UsageError("--seq must contain at least one integer")
    payload = {"sequence": list(seq), "order": h2_order(seq)}
    doc = OutputDocument("order", __version__, {"seq": list(seq)}, payload, args.format)
    return doc, 0


def _cmd_stab(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    cell_mode = args.p is not None or args.q is not None
    scan_mode = args.parts is not None or args.degree is not None
    if cell_mode == scan_mode:
        raise UsageError("give either --p and --q, or --parts and --degree")
    if cell_mode:
        if args.p is None or args.q is None:
            raise UsageError("--p and --q must be given together")
        if args.p > 0 or args.p + args.q < 0:
            raise UsageError("the cell must satisfy p <= 0 <= p + q")
        bound = e1_stable_bound(args.p, args.q)
        ranks = [cohomological_rank(m, args.p, args.q) for m in (bound, bound + 1, bound + 2)]
        payload = {
            "p": args.p,
            "q": args.q,
            "bound_n": bound,
            "ranks": ranks,
            "stable_rank": ranks[0] if len(set(ranks)) == 1 else None,
        }
        doc = OutputDocument(
            "stab", __version__, {"p": args.p, "q": args.q}, payload, args.format
        )
        return doc, 0 if len(set(ranks)) == 1 else 2
    if args.parts is None or args.degree is None:
        raise UsageError("--parts and --degree must be given together")
    A = _parse_parts(args.parts)
    report = stab_index(A, args.degree)
    payload = {
        "parts": list(A.parts),
        "degree": args.degree,
        "stab_n": report.stab_n,
        "witness": _poly_pairs(report.witness),
    }
    doc = OutputDocument(
        "stab", __version__, {"parts": list(A.parts), "degree": args.degree}, payload, args.format
    )
    return doc, 0


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="conres", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"conres {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_view: bool = False) -> None:
        p.add_argument("--format", choices=("json", "csv", "md"), default="md")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
        p.add_argument(
            "--koszul",
            action="store_true",
            help="alternative (Koszul) sign rule for the fiber trace; for "
            "sensitivity analysis, contradicts the known link values from n=4 on",
        )
        if with_view:
            p.add_argument("--view", choices=("hom", "cohom"), default="hom")
            p.add_argument(
                "--total-degree",
                action="store_true",
                help="label homological rows by the total degree i instead of q = i - p",
            )

    p_table = sub.add_parser("table", help="spectral table for one ambient dimension")
    p_table.add_argument("--n", type=int, required=True)
    common(p_table, with_view=True)
    p_table.set_defaults(func=_cmd_table)

    p_link = sub.add_parser("link", help="reduced link homology polynomial")
    p_link.add_argument("--n", type=int, required=True)
    common(p_link)
    p_link.set_defaults(func=_cmd_link)

    p_gamma = sub.add_parser("gamma", help="quotient collection-space homology")
    p_gamma.add_argument("--parts", required=True, help="comma-separated, e.g. 2,2")
    p_gamma.add_argument("--n", type=int, required=True)
    p_gamma.add_argument("--character", choices=CHARACTERS, default="trivial")
    p_gamma.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p_gamma.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p_gamma.set_defaults(func=_cmd_gamma)

    p_verify = sub.add_parser("verify", help="run the consistency checks")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument(
        "--checks", default="", help=f"comma-separated subset of {','.join(ALL_CHECKS)}"
    )
    common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_order = sub.add_parser("order", help="order of a degree-2 class")
    p_order.add_argument("--seq", required=True, help="comma-separated integers")
    p_order.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p_order.set_defaults(func=_cmd_order)

    p_stab = sub.add_parser("stab", help="stabilization bound or coefficient scan")
    p_stab.add_argument("--p", type=int, default=None)
    p_stab.add_argument("--q", type=int, default=None)
    p_stab.add_argument("--parts", default=None, help="comma-separated, e.g. 2,2")
    p_stab.add_argument("--degree", type=int, default=None)
    p_stab.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p_stab.set_defaults(func=_cmd_stab)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        doc, code = args.func(args)
        sys.stdout.write(doc.render())
        if code == 2:
            sys.stderr.write("consistency failure; see the document payload\n")
        return code
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    except ConsistencyError as exc:
        sys.stderr.write(f"consistency failure: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
