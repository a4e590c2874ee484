"""Command-line entry point: counts, bounds, sweeps, and the check suite.

Exit codes: 0 success, 1 usage or domain error, 2 exhausted budget or
precision, 3 verification failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .biclique import count_biclique, sweep_lower_bounds
from .counting import brute_force_count, count_star_free
from .errors import BudgetExceededError, MonochromaticStarForcedError, PrecisionError
from .graphs import complete_bipartite, parse_graph_spec
from .numeric import DEFAULT_DIGITS, format_rational, int_to_str
from .params import ForbidParams
from .shearer import upper_bound_b
from .starcounts import (
    f_star,
    f_star_brute,
    f_star_t3_closed,
    f_star_t3_profile_sum,
    f_star_two_colors,
)
from .verify import run_verification

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="starfree",
        description=(
            "Exact bounds on the number of edge colorings without a "
            "monochromatic star"
        ),
    )
    parser.add_argument("--version", action="version", version=f"starfree {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--r", type=int, required=True, help="number of colors (>= 2)")
        p.add_argument("--t", type=int, required=True, help="edges of the forbidden star")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_f = sub.add_parser("f", help="star-coloring table value f(a)")
    common(p_f)
    p_f.add_argument("--a", type=int, required=True, help="edges of the star")
    p_f.add_argument(
        "--method",
        choices=["auto", "dp", "two-color", "t3-closed", "t3-profile", "brute"],
        default="auto",
        help="which of the independent routes computes it",
    )

    p_upper = sub.add_parser("upper", help="optimized upper bound on the growth rate")
    common(p_upper)
    p_upper.add_argument(
        "--precision",
        type=int,
        default=DEFAULT_DIGITS,
        help="significant digits of the decimal value",
    )

    p_count = sub.add_parser("count", help="exact coloring count of a graph")
    common(p_count)
    p_count.add_argument(
        "--graph",
        required=True,
        help="graph spec: kbip:M,N | union:<spec>+<spec> | file:<path>",
    )
    p_count.add_argument(
        "--engine", choices=["auto", "brute", "backtrack"], default="auto"
    )

    p_bic = sub.add_parser("biclique", help="exact coloring count of K_{m,n}")
    common(p_bic)
    p_bic.add_argument("--m", type=int, required=True)
    p_bic.add_argument("--n", type=int, required=True)
    p_bic.add_argument("--engine", choices=["dp", "brute"], default="dp")

    p_sweep = sub.add_parser(
        "sweep", help="lower bounds from all small complete bipartite graphs"
    )
    common(p_sweep)
    p_sweep.add_argument("--max-vertices", type=int, required=True)

    p_verify = sub.add_parser("verify", help="replay the published anchor values")
    p_verify.add_argument("--json", action="store_true", help="machine-readable output")

    return parser


def _params(args: argparse.Namespace) -> ForbidParams:
    return ForbidParams(args.r, args.t)


def _env_workers() -> int:
    raw = os.environ.get("STARFREE_THREADS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"STARFREE_THREADS must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ValueError("STARFREE_THREADS must be at least 1")
    return workers


def _cmd_f(args: argparse.Namespace) -> int:
    p = _params(args)
    method = args.method
    if method in ("auto", "dp"):
        value, method = f_star(p, args.a), "dp"
    elif method == "two-color":
        if p.r != 2:
            raise ValueError("the two-color route needs --r 2")
        value = f_star_two_colors(p.t, args.a)
    elif method == "t3-closed":
        if p.t != 3:
            raise ValueError("the closed route needs --t 3")
        value = f_star_t3_closed(p.r, args.a)
    elif method == "t3-profile":
        if p.t != 3:
            raise ValueError("the profile-sum route needs --t 3")
        value = f_star_t3_profile_sum(p.r, args.a)
    else:
        value = f_star_brute(p, args.a)
    if args.json:
        print(
            json.dumps(
                {"r": p.r, "t": p.t, "a": args.a, "f": int_to_str(value), "method": method}
            )
        )
    else:
        print(int_to_str(value))
    return 0


def _cmd_upper(args: argparse.Namespace) -> int:
    p = _params(args)
    report = upper_bound_b(p, digits=args.precision)
    if args.json:
        print(
            json.dumps(
                {
                    "r": p.r,
                    "t": p.t,
                    "k": p.k,
                    "a_star": report.a_star,
                    "base": format_rational(report.base),
                    "exponent": format_rational(report.exponent),
                    "value": report.value,
                    "g": {
                        str(a): format_rational(v) for a, v in report.g_table.items()
                    },
                }
            )
        )
    else:
        print(f"a* = {report.a_star}")
        print(f"base = {format_rational(report.base)}")
        print(f"exponent = {format_rational(report.exponent)}")
        print(f"value = {report.value}")
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    p = _params(args)
    g = parse_graph_spec(args.graph)
    if args.engine == "brute":
        result = brute_force_count(g, p)
    else:
        result = count_star_free(g, p, workers=_env_workers())
    if args.json:
        n, m, delta = result.graph_summary
        print(
            json.dumps(
                {
                    "r": p.r,
                    "t": p.t,
                    "graph": {"vertices": n, "edges": m, "max_degree": delta},
                    "count": int_to_str(result.count),
                    "engine": result.engine,
                }
            )
        )
    else:
        print(int_to_str(result.count))
    return 0


def _cmd_biclique(args: argparse.Namespace) -> int:
    p = _params(args)
    if args.engine == "brute":
        result = brute_force_count(complete_bipartite(args.m, args.n), p)
        count, engine = result.count, result.engine
    else:
        count, engine = count_biclique(args.m, args.n, p), "dp"
    if args.json:
        print(
            json.dumps(
                {
                    "r": p.r,
                    "t": p.t,
                    "m": args.m,
                    "n": args.n,
                    "count": int_to_str(count),
                    "engine": engine,
                }
            )
        )
    else:
        print(int_to_str(count))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    p = _params(args)
    rows, best = sweep_lower_bounds(p, args.max_vertices)
    if args.json:
        def row_json(row):
            return {
                "m": row.m,
                "n": row.n,
                "count": None if row.count is None else int_to_str(row.count),
                "bound": row.bound,
                "skipped": row.skipped,
                "note": row.note,
            }

        print(
            json.dumps(
                {
                    "r": p.r,
                    "t": p.t,
                    "max_vertices": args.max_vertices,
                    "rows": [row_json(row) for row in rows],
                    "best": None if best is None else row_json(best),
                }
            )
        )
    else:
        for row in rows:
            if row.skipped:
                print(f"K_{{{row.m},{row.n}}}  skipped: {row.note}")
            else:
                print(f"K_{{{row.m},{row.n}}}  count={int_to_str(row.count)}  bound={row.bound}")
        if best is not None:
            print(f"best: K_{{{best.m},{best.n}}} with bound {best.bound}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification()
    if args.json:
        print(
            json.dumps(
                {
                    "checks": [
                        {
                            "name": c.name,
                            "expected": c.expected,
                            "computed": c.computed,
                            "status": c.status,
                            "source": c.source,
                        }
                        for c in report.checks
                    ],
                    "passed": report.passed,
                    "failed": report.failed,
                }
            )
        )
    else:
        width = max(len(c.name) for c in report.checks)
        for c in report.checks:
            print(
                f"{c.status.upper():4}  {c.name:<{width}}  "
                f"expected {c.expected}  got {c.computed}  [{c.source}]"
            )
        print(f"{report.passed} passed, {report.failed} failed")
    return 0 if report.ok else 3


_COMMANDS = {
    "f": _cmd_f,
    "upper": _cmd_upper,
    "count": _cmd_count,
    "biclique": _cmd_biclique,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (BudgetExceededError, PrecisionError) as err:
        print(f"starfree: {err}", file=sys.stderr)
        return 2
    except (ValueError, MonochromaticStarForcedError, OSError) as err:
        print(f"starfree: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
