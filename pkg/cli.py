"""
Command-line front end for the polyadic ring toolkit.

Subcommands: shape-table, class-info, padic, lift, verify.
Exit codes: 0 computed/verified, 1 property refuted, 2 usage or input error.
"""
import argparse
import csv
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

from models import save_report
from padic_core import (
    check_prime,
    partial_sums,
    to_integer,
    to_positional_string,
    valuation,
)
from padic_polyadic import PAdicClass, lift_digits, verify_ring
from residue_core import (
    ResidueClass,
    add_querelement,
    arity_shape,
    closed_add_arities,
    closed_mul_arities,
    is_zeroless,
    min_add_arity,
    min_mul_arity,
    mul_identity,
    representative,
    shape_table,
)
from utils import (
    EMPTY_CELL_TEXT,
    Settings,
    evaluate_expression,
    literal_precision,
    load_settings,
    parse_padic_literal,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2

FORMATS = ("text", "csv", "json")


class PolyadicCLI:
    """Dispatches subcommands and renders their results."""

    def __init__(self, settings: Optional[Settings] = None, out: Optional[TextIO] = None):
        self.settings = settings or Settings()
        self.out = out or sys.stdout
        self.parser = self.create_parser()

    def create_parser(self) -> argparse.ArgumentParser:
        """Create the argument parser with all subcommands."""
        parser = argparse.ArgumentParser(
            prog="polyadic-rings",
            description="Nonderived (m,n)-rings from integer and p-adic residue classes.",
        )
        parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
        parser.add_argument("--config", default="polyadic_config.json", help="JSON settings file")
        subparsers = parser.add_subparsers(dest="command", required=True)

        table = subparsers.add_parser("shape-table", help="arity shape table (a, b) => (m, n)")
        table.add_argument("--a-max", type=int, default=9)
        table.add_argument("--b-max", type=int, default=10)
        table.add_argument("--n-cap", type=int, default=None)
        table.add_argument("--format", choices=FORMATS, default="text")

        info = subparsers.add_parser("class-info", help="inspect the class [a]_b")
        info.add_argument("a", type=int)
        info.add_argument("b", type=int)
        info.add_argument("--n-cap", type=int, default=None)
        info.add_argument("--format", choices=FORMATS, default="text")

        padic = subparsers.add_parser("padic", help="evaluate a +,-,* expression in Z_p")
        padic.add_argument("expr")
        padic.add_argument("--p", type=int, required=True)
        padic.add_argument("--n", "--N", dest="precision", type=int, default=None,
                           help="number of digits N")
        padic.add_argument("--format", choices=FORMATS, default="text")

        lift = subparsers.add_parser("lift", help="digit lifting of a for fixed arities")
        lift.add_argument("--p", type=int, required=True)
        lift.add_argument("--m", type=int, required=True)
        lift.add_argument("--n", type=int, required=True)
        lift.add_argument("--v", type=int, required=True, help="valuation of b")
        lift.add_argument("--N", dest="precision", type=int, default=None)
        lift.add_argument("--format", choices=FORMATS, default="text")

        verify = subparsers.add_parser("verify", help="verify the (m,n)-ring laws on [a]_b in Z_p")
        verify.add_argument("--p", type=int, required=True)
        verify.add_argument("--a", required=True, help="integer or p:N:digits")
        verify.add_argument("--b", required=True, help="integer or p:N:digits")
        verify.add_argument("--m", type=int, required=True)
        verify.add_argument("--n", type=int, required=True)
        verify.add_argument("--samples", type=int, default=None)
        verify.add_argument("--N", dest="precision", type=int, default=None,
                            help="number of digits N (default: from p:N:digits literals, else settings)")
        verify.add_argument("--seed", type=int, default=None)
        verify.add_argument("--report", default=None, help="write the JSON report to this file")
        verify.add_argument("--format", choices=("text", "json"), default="text")
        return parser

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Parse arguments and run one subcommand."""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        try:
            self.settings = load_settings(args.config)
            logger.debug("running %s with %s", args.command, self.settings)
            if args.command == "shape-table":
                return self.cmd_shape_table(args.a_max, args.b_max, args.format, args.n_cap)
            if args.command == "class-info":
                return self.cmd_class_info(args.a, args.b, args.format, args.n_cap)
            if args.command == "padic":
                return self.cmd_padic(args.expr, args.p, args.precision, args.format)
            if args.command == "lift":
                return self.cmd_lift(args.p, args.m, args.n, args.v, args.precision, args.format)
            return self.cmd_verify(args.p, args.a, args.b, args.m, args.n, args.samples,
                                   args.precision, args.seed, args.report, args.format)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE

    def _emit_json(self, data: Any) -> None:
        self.out.write(json.dumps(data, indent=2) + "\n")

    def _emit_csv(self, header: List[str], rows: List[List[Any]]) -> None:
        writer = csv.writer(self.out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)

    def _emit_pairs(self, pairs: Dict[str, Any], fmt: str) -> None:
        if fmt == "json":
            self._emit_json(pairs)
        elif fmt == "csv":
            self._emit_csv(["key", "value"], [[key, _csv_value(value)] for key, value in pairs.items()])
        else:
            for key, value in pairs.items():
                self.out.write(f"{key}: {_text_value(value)}\n")

    def cmd_shape_table(self, a_max: int, b_max: int, fmt: str = "text", n_cap: Optional[int] = None) -> int:
        """Render the arity shape table."""
        table = shape_table(a_max, b_max, n_cap if n_cap is not None else self.settings.n_cap)

        if fmt == "json":
            self._emit_json({
                "a_max": table.a_max,
                "b_max": table.b_max,
                "cells": [
                    {
                        "a": cell.a,
                        "b": cell.b,
                        "shape": cell.shape.to_dict() if cell.shape else None,
                        "misprint": cell.misprint or None,
                    }
                    for cell in table.cells
                ],
            })
        elif fmt == "csv":
            rows = []
            for cell in table.cells:
                shape = cell.shape
                values = [shape.m, shape.n, shape.I, shape.J] if shape else ["", "", "", ""]
                note = "; ".join(f"printed {key}={value}" for key, value in cell.misprint.items())
                rows.append([cell.a, cell.b] + values + [note])
            self._emit_csv(["a", "b", "m", "n", "I", "J", "note"], rows)
        else:
            self._render_table_text(table)
        return EXIT_OK

    def _render_table_text(self, table) -> None:
        columns = list(range(2, table.b_max + 1))
        rows = sorted({cell.a for cell in table.cells})
        lookup = {(cell.a, cell.b): cell for cell in table.cells}
        grid = [["a\\b"] + [str(b) for b in columns]]
        footnotes = []
        for a in rows:
            line = [str(a)]
            for b in columns:
                cell = lookup.get((a, b))
                if cell is None:
                    line.append("")
                elif cell.shape is None:
                    line.append(EMPTY_CELL_TEXT)
                else:
                    text = f"{cell.shape.m},{cell.shape.n},{cell.shape.I},{cell.shape.J}"
                    if cell.misprint:
                        text += "*"
                        printed = ", ".join(f"{key}={value}" for key, value in cell.misprint.items())
                        footnotes.append(
                            f"* (a={a}, b={b}): printed {printed}, computed I={cell.shape.I}"
                        )
                    line.append(text)
            grid.append(line)
        widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
        self.out.write("cells: m,n,I,J\n")
        for row in grid:
            self.out.write("  ".join(entry.rjust(width) for entry, width in zip(row, widths)).rstrip() + "\n")
        for footnote in footnotes:
            self.out.write(footnote + "\n")

    def cmd_class_info(self, a: int, b: int, fmt: str = "text", n_cap: Optional[int] = None) -> int:
        """Describe the class [a]_b as a polyadic ring."""
        cls = ResidueClass(a, b)
        n_cap = n_cap if n_cap is not None else (self.settings.n_cap or b + 1)
        m = min_add_arity(cls)
        n = min_mul_arity(cls, n_cap)
        info: Dict[str, Any] = {
            "class": str(cls),
            "representatives": [representative(cls, k).value for k in range(-2, 3)],
        }
        if cls.is_degenerate:
            info["shape"] = {"m": 2, "n": 2, "I": 0, "J": 0}
            info["note"] = (
                "degenerate class: Z = Z_(2,2)(0,1), the binary ring of integers"
                if b == 1 else f"degenerate class: {b}Z is a binary ring"
            )
        else:
            shape = arity_shape(cls, n_cap)
            info["shape"] = shape.to_dict() if shape else None
            if shape is None:
                info["note"] = f"no n exists <= {n_cap}"
        info["m"] = m
        info["n"] = n
        info["closed_m"] = closed_add_arities(cls, 4)
        info["closed_n"] = closed_mul_arities(cls, max(n_cap, 12))
        info["querelement"] = f"r -> ({2 - m})*r"
        info["querelement_examples"] = {
            str(r.value): add_querelement(cls, m, r).value
            for r in (representative(cls, k) for k in range(0, 3))
        }
        identity = mul_identity(cls, n) if n is not None else None
        info["identity"] = identity.value if identity else None
        info["zeroless"] = is_zeroless(cls, m)
        self._emit_pairs(info, fmt)
        return EXIT_OK

    def cmd_padic(self, expr: str, p: int, precision: Optional[int], fmt: str = "text") -> int:
        """Evaluate an integer expression in Z_p mod p^N."""
        precision = precision if precision is not None else self.settings.precision
        result = evaluate_expression(expr, p, precision)
        v = valuation(result)
        self._emit_pairs({
            "p": p,
            "N": precision,
            "value": to_integer(result),
            "digits": list(result.digits),
            "positional": to_positional_string(result),
            "partial_sums": list(partial_sums(result).values),
            "valuation": v if isinstance(v, int) else str(v),
        }, fmt)
        return EXIT_OK

    def cmd_lift(self, p: int, m: int, n: int, v: int, precision: Optional[int], fmt: str = "text") -> int:
        """Run the recursive digit search for a given (m, n) and valuation of b."""
        precision = precision if precision is not None else max(v, self.settings.precision)
        solution = lift_digits(p, m, n, v, precision)
        if fmt == "json":
            self._emit_json(solution.to_dict())
        elif fmt == "csv":
            self._emit_csv(["residue", "modulus"], [[a, solution.modulus] for a in solution.admissible])
        else:
            self.out.write(f"p={p} m={m} n={n} v={v} (b = {p}^{v} * unit), N={precision}\n")
            for i, level in enumerate(solution.levels):
                shown = ", ".join(str(a) for a in level) or "none"
                self.out.write(f"level {i} (mod {p ** (i + 1)}): {shown}\n")
            if solution.admissible:
                shown = ", ".join(str(a) for a in solution.admissible)
                self.out.write(f"admissible a mod {solution.modulus}: {{{shown}}}\n")
                self.out.write(f"digits from index {solution.free_from} on are free\n")
            else:
                self.out.write(f"admissible a mod {solution.modulus}: none (no such ring)\n")
        return EXIT_OK

    def cmd_verify(self, p: int, a: str, b: str, m: int, n: int, samples: Optional[int],
                   precision: Optional[int], seed: Optional[int], report_path: Optional[str],
                   fmt: str = "text") -> int:
        """Verify the (m,n)-ring laws; exit 1 with a witness on refutation."""
        check_prime(p)
        if precision is None:
            precision = literal_precision((a, b), self.settings.precision)
        samples = samples if samples is not None else self.settings.samples
        if samples < 0:
            raise ValueError(f"samples must be non-negative, got {samples}")
        seed = seed if seed is not None else self.settings.seed
        cls = PAdicClass(parse_padic_literal(a, p, precision), parse_padic_literal(b, p, precision))
        report = verify_ring(cls, m, n, samples, seed)
        if report_path:
            save_report(report, report_path)

        if fmt == "json":
            self._emit_json(report.to_dict())
        else:
            self.out.write(f"class {cls}, (m,n) = ({m},{n})\n")
            if report.degenerate:
                self.out.write("note: a = 0, degenerate class\n")
            for check in report.checks:
                if check.skipped:
                    self.out.write(f"SKIP {check.name}: {check.skipped}\n")
                elif check.passed:
                    self.out.write(f"PASS {check.name} ({check.samples} samples)\n")
                else:
                    self.out.write(f"FAIL {check.name}: {check.witness}\n")
            self.out.write("verified\n" if report.passed else "refuted\n")
        return EXIT_OK if report.passed else EXIT_REFUTED


def _text_value(value: Any) -> str:
    if value is None:
        return EMPTY_CELL_TEXT
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ", ".join(str(item) for item in value)
    if isinstance(value, dict):
        return " ".join(f"{key}={item}" for key, item in value.items())
    return str(value)


def _csv_value(value: Any) -> str:
    if value is None:
        return ""
    return _text_value(value)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main function to run the command line tool."""
    return PolyadicCLI().run(argv)


if __name__ == "__main__":
    sys.exit(main())
