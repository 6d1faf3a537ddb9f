#!/usr/bin/env python3
"""
speh-kit CLI
Command-line surface for the distinction calculator
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

import structlog
from rich.console import Console
from rich.table import Table
from rich.text import Text
from rich.tree import Tree

from config import Settings, configure_logging, get_settings
from core.errors import SpehKitError
from core.segments import format_rational
from distinction import ProofTrace
from main import SpehKit, __version__

logger = structlog.get_logger("speh-kit.cli")

OUTPUT_VERSION = 1

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


# ============================================================================
# OUTPUT HELPERS
# ============================================================================

class Output:
    """stdout writer: JSON documents, plain lines, or rich renderables"""

    def __init__(self, settings: Settings, as_json: bool):
        self.as_json = as_json
        self.indent = settings.json_indent or None
        self.console = Console(highlight=False, soft_wrap=True)

    def document(self, payload: Dict[str, Any]) -> None:
        data = {"version": OUTPUT_VERSION, **payload}
        sys.stdout.write(json.dumps(data, indent=self.indent, ensure_ascii=False) + "\n")

    def line(self, text: str) -> None:
        sys.stdout.write(text + "\n")

    def rich(self, renderable: Any) -> None:
        self.console.print(renderable)


def _verdict(flag: bool) -> str:
    return "DISTINGUISHED" if flag else "NOT-DISTINGUISHED"


def trace_tree(trace: ProofTrace) -> Tree:
    """rich Tree mirroring a ProofTrace."""
    def label(node: ProofTrace) -> Text:
        return Text(node.label(), style="green" if node.verdict else "red")

    def grow(branch: Tree, node: ProofTrace) -> None:
        for child in node.children:
            grow(branch.add(label(child)), child)

    root = Tree(label(trace))
    grow(root, trace)
    return root


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_check(kit: SpehKit, args, out: Output) -> int:
    rep = kit.parse(args.expr)
    verdict = kit.check(args.expr)
    if out.as_json:
        out.document({"rep": rep.to_text(), "distinguished": verdict})
    else:
        out.line(_verdict(verdict))
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_trace(kit: SpehKit, args, out: Output) -> int:
    trace = kit.trace(args.expr)
    if out.as_json:
        out.document({"trace": trace.to_dict()})
    else:
        out.rich(trace_tree(trace))
    return EXIT_OK


def cmd_canonical(kit: SpehKit, args, out: Output) -> int:
    text = kit.canonical(args.expr)
    if out.as_json:
        out.document({"canonical": text})
    else:
        out.line(text)
    return EXIT_OK


def cmd_derive(kit: SpehKit, args, out: Output) -> int:
    reps = kit.derive(args.expr, ladder=args.ladder)
    if out.as_json:
        out.document({
            "ladder": args.ladder,
            "derivatives": [rep.to_dict() for rep in reps],
        })
    else:
        for rep in reps:
            out.line(rep.to_text())
    return EXIT_OK


def cmd_langlands(kit: SpehKit, args, out: Output) -> int:
    segments = kit.langlands(args.expr)
    if out.as_json:
        out.document({"langlands": [segment.to_dict() for segment in segments]})
    else:
        for segment in segments:
            out.line(f"{segment.to_text()}\tcenter {format_rational(segment.center)}")
    return EXIT_OK


def cmd_end_cs(kit: SpehKit, args, out: Output) -> int:
    report = kit.end_cs(args.segment, args.k)
    if out.as_json:
        out.document(report.to_dict())
    else:
        out.line(f"A  {report.pi_a.to_text()}\t{_verdict(report.distinguished_a)}")
        out.line(f"B  {report.pi_b.to_text()}\t{_verdict(report.distinguished_b)}")
    return EXIT_OK


def cmd_decompose(kit: SpehKit, args, out: Output) -> int:
    blocks = kit.decompose(args.expr)
    if out.as_json:
        out.document({
            "selfDual": blocks is not None,
            "blocks": blocks.to_dict() if blocks is not None else None,
        })
    elif blocks is None:
        out.line("NOT-SELF-DUAL")
    else:
        for text in blocks.to_lines():
            out.line(text)
    return EXIT_OK if blocks is not None else EXIT_NEGATIVE


def _universe(kit: SpehKit, args):
    return kit.universe(args.max_degree, args.max_k, args.alpha_grid)


def cmd_enumerate(kit: SpehKit, args, out: Output) -> int:
    spec = _universe(kit, args)
    if out.as_json:
        out.document({
            "spec": spec.to_dict(),
            "reps": [rep.to_text() for rep in kit.enumerate(spec)],
        })
    else:
        for rep in kit.enumerate(spec):
            out.line(rep.to_text())
    return EXIT_OK


def cmd_selfcheck(kit: SpehKit, args, out: Output) -> int:
    report = kit.selfcheck(
        _universe(kit, args),
        inject_parity_flip=args.inject_parity_flip,
        detail_degree=args.detail_degree,
    )
    if out.as_json:
        out.document({key: value for key, value in report.to_dict().items() if key != "version"})
        return EXIT_OK if report.success else EXIT_NEGATIVE

    table = Table(title=(
        f"selfcheck over {report.representations} representations"
        f" (detail up to degree {report.detail_max_degree})"
    ))
    table.add_column("property")
    table.add_column("instances", justify="right")
    table.add_column("failures", justify="right")
    for result in report.properties:
        table.add_row(
            result.name,
            str(result.instances),
            Text(str(result.failure_count), style="red" if result.failure_count else "green"),
        )
    out.rich(table)
    for result in report.properties:
        for failure in result.failures:
            out.rich(Text(f"{result.name}: {failure['subject']}  -- {failure['detail']}", style="red"))
    out.line("OK" if report.success else f"FAILED ({report.counterexamples} counterexamples)")
    return EXIT_OK if report.success else EXIT_NEGATIVE


COMMANDS = {
    "check": cmd_check,
    "trace": cmd_trace,
    "canonical": cmd_canonical,
    "derive": cmd_derive,
    "langlands": cmd_langlands,
    "end-cs": cmd_end_cs,
    "decompose": cmd_decompose,
    "enumerate": cmd_enumerate,
    "selfcheck": cmd_selfcheck,
}


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", "-a", help="Alphabet file (JSON)")
    common.add_argument("--json", action="store_true", help="Emit JSON")

    universe = argparse.ArgumentParser(add_help=False)
    universe.add_argument("--max-degree", type=int, help="Largest total degree")
    universe.add_argument("--max-k", type=int, help="Largest Speh multiplier")
    universe.add_argument("--alpha-grid", help="Comma-separated alphas, e.g. 1/4,1/3")

    parser = argparse.ArgumentParser(
        prog="speh-kit",
        description="Distinction calculator for the unitary dual of GL(n) over a quadratic extension",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  speh-kit check --alphabet fixture.json "u(St(r0,1),2) x St(t,1) x St(ts,1)"
  speh-kit trace --alphabet fixture.json --json "pi(u(St(r1,1),2),1/3)"
  speh-kit end-cs --alphabet fixture.json "St(r0,1)" 2
  speh-kit selfcheck --alphabet fixture.json --max-degree 8
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    for name, help_text in [
        ("check", "Decide sigma-distinction (exit 0 distinguished, 1 not)"),
        ("trace", "Show the proof trace behind a verdict"),
        ("canonical", "Print the canonical form"),
        ("langlands", "List Langlands data with centers"),
        ("decompose", "Split a sigma-self-dual rep into pairing blocks"),
    ]:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("expr", help="Representation expression")

    derive_parser = subparsers.add_parser("derive", parents=[common], help="Highest shifted derivative")
    derive_parser.add_argument("expr", help="Representation expression")
    derive_parser.add_argument("--ladder", action="store_true", help="Iterate down to the trivial rep")

    end_cs_parser = subparsers.add_parser(
        "end-cs", parents=[common], help="Subquotients at the end of the complementary series"
    )
    end_cs_parser.add_argument("segment", help="Unitary segment, e.g. St(r0,2)")
    end_cs_parser.add_argument("k", type=int, help="Speh multiplier (>= 2)")

    subparsers.add_parser(
        "enumerate", parents=[common, universe], help="List every rep in a bounded universe"
    )

    selfcheck_parser = subparsers.add_parser(
        "selfcheck", parents=[common, universe], help="Run every exhaustive cross-check"
    )
    selfcheck_parser.add_argument(
        "--inject-parity-flip",
        metavar="ID",
        help="Flip one declared parity for the engine only (mutation test)",
    )
    selfcheck_parser.add_argument(
        "--detail-degree",
        type=int,
        help="Largest degree that gets the pair, split and text properties",
    )

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    settings = get_settings()
    configure_logging(settings.effective_log_level, settings.log_json)

    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_ERROR

    out = Output(settings, args.json)
    try:
        kit = SpehKit.from_file(args.alphabet, settings)
        return COMMANDS[args.command](kit, args, out)
    except SpehKitError as e:
        logger.error("cli.error", command=args.command, error=e.__class__.__name__, message=str(e))
        if out.as_json:
            out.document(e.to_dict())
        else:
            Console(stderr=True, highlight=False, soft_wrap=True).print(Text(f"error: {e}", style="red"))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
