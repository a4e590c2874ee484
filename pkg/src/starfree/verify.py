"""Reproduction suite replaying the published anchor values.

Each check pins one number or identity the package must reproduce: table
values of f, the optimized upper bounds and their closed forms, exact
coloring counts of small complete bipartite graphs, root lower bounds, and
the structural identities behind the covering argument.  Checks are data:
a failing check lands in the report, it does not raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial

from .biclique import count_biclique, lower_bound_from_count, sweep_lower_bounds
from .counting import brute_force_count, count_star_free
from .graphs import Graph, complete_bipartite
from .numeric import compare_powers, format_rational, power_quotient_decimal
from .params import ForbidParams
from .shearer import (
    closed_form_b2t,
    closed_form_br3,
    g_edge,
    upper_bound_b,
)
from .starcounts import f_star

__all__ = ["Check", "VerifyReport", "run_verification"]

# sources: "reference" = a printed value being reproduced; "cross-check" =
# two independent routes of this package compared; "identity" = a structural
# equality that must hold exactly.


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    computed: str
    status: str
    source: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _round_to(text: str, places: int) -> str:
    """Half-up rounding of a plain decimal string, for display tolerances."""
    with localcontext() as ctx:
        ctx.prec = len(text) + places + 4
        q = Decimal(text).quantize(Decimal(1).scaleb(-places), rounding="ROUND_HALF_UP")
    return str(q)


def run_verification() -> VerifyReport:
    checks: list[Check] = []

    def add(name: str, expected: str, computed: str, source: str) -> None:
        status = "pass" if expected == computed else "fail"
        checks.append(Check(name, expected, computed, status, source))

    p23 = ForbidParams(2, 3)
    p24 = ForbidParams(2, 4)

    # star-coloring table values
    for p, a, want in [(p23, 2, 2), (p23, 3, 3), (p24, 3, 4), (p24, 4, 7), (p24, 5, 10)]:
        add(
            f"f({a}) with {p.r} colors, {p.t}-edge star",
            str(want),
            str(f_star(p, a)),
            "reference",
        )

    # factorial forms of the three top-degree values when t=3
    top_degree_forms = [
        (
            "f(2r-1) = (2r-1)!/2^(r-1)",
            lambda r: 2 * r - 1,
            lambda r: factorial(2 * r - 1) // 2 ** (r - 1),
        ),
        (
            "f(2r-2) = r(2r-2)!/2^(r-1)",
            lambda r: 2 * r - 2,
            lambda r: r * factorial(2 * r - 2) // 2 ** (r - 1),
        ),
        (
            "f(2r-3) = (r+1)(2r-2)!/(3*2^(r-1))",
            lambda r: 2 * r - 3,
            lambda r: (r + 1) * factorial(2 * r - 2) // (3 * 2 ** (r - 1)),
        ),
    ]
    for label, degree_of, form in top_degree_forms:
        outcome = "agree for r=2..8"
        for r in range(2, 9):
            a = degree_of(r)
            if a < 1:
                continue
            got = f_star(ForbidParams(r, 3), a)
            want = form(r)
            if got != want:
                outcome = f"r={r}: {got} != {want}"
                break
        add(label + " (t=3)", "agree for r=2..8", outcome, "cross-check")

    # optimized upper bounds and their printed roundings
    rep23 = upper_bound_b(p23, digits=10)
    add(
        "upper bound, 2 colors, 3-edge star",
        "a*=3, 18^(3/10)",
        f"a*={rep23.a_star}, {format_rational(rep23.base)}^({format_rational(rep23.exponent)})",
        "reference",
    )
    add("2-color 3-star bound to 2 places", "2.38", _round_to(rep23.value, 2), "reference")
    rep24 = upper_bound_b(p24, digits=10)
    add(
        "upper bound, 2 colors, 4-edge star",
        "a*=5, 200^(5/18)",
        f"a*={rep24.a_star}, {format_rational(rep24.base)}^({format_rational(rep24.exponent)})",
        "reference",
    )
    add("2-color 4-star bound to 2 places", "4.36", _round_to(rep24.value, 2), "reference")

    # closed forms against the optimizer
    outcome = "equal (base, exponent) for r=2..40"
    for r in range(2, 41):
        rep = upper_bound_b(ForbidParams(r, 3), digits=6)
        cf = closed_form_br3(r)
        if (rep.base, rep.exponent) != (cf.base, cf.exponent) or rep.a_star != 2 * r - 1:
            outcome = f"r={r}: optimizer disagrees with the closed form"
            break
    add(
        "3-edge-star closed form matches the optimizer",
        "equal (base, exponent) for r=2..40",
        outcome,
        "cross-check",
    )
    outcome = "equal (base, exponent) for t=3..20"
    for t in range(3, 21):
        rep = upper_bound_b(ForbidParams(2, t), digits=6)
        cf = closed_form_b2t(t)
        if (rep.base, rep.exponent) != (cf.base, cf.exponent) or rep.a_star != 2 * t - 3:
            outcome = f"t={t}: optimizer disagrees with the closed form"
            break
    add(
        "two-color closed form matches the optimizer",
        "equal (base, exponent) for t=3..20",
        outcome,
        "cross-check",
    )

    # exact counts of K_{3,3} with 2 colors, 3-edge star, via three engines
    k33 = complete_bipartite(3, 3)
    add("count K_{3,3} by backtracking", "102", str(count_star_free(k33, p23).count), "reference")
    add("count K_{3,3} by brute force", "102", str(brute_force_count(k33, p23).count), "reference")
    add("count K_{3,3} by profile DP", "102", str(count_biclique(3, 3, p23)), "reference")

    # K_{5,5} with 2 colors, 4-edge star: frozen exact count, printed root bound
    c55 = count_biclique(5, 5, p24)
    add("count K_{5,5}, 2 colors, 4-edge star", "384080", str(c55), "cross-check")
    clears = compare_powers(c55, Fraction(1, 10), Fraction(361, 100), 1) >= 0
    add(
        "10th root of the K_{5,5} count clears 3.61",
        "root >= 3.61",
        "root >= 3.61" if clears else "root < 3.61",
        "reference",
    )

    # root renderings at the printed granularity
    add(
        "6th root of 102 rounds to 2.16",
        "2.16",
        _round_to(lower_bound_from_count(102, 6).text, 2),
        "reference",
    )
    add(
        "10th root of the K_{5,5} count, 4 places",
        "3.6178",
        lower_bound_from_count(c55, 10).text,
        "cross-check",
    )

    # switch identity g(a,b)^2 = g(a,a) g(b,b), all degrees in range, r,t <= 5
    outcome = "exact for all r,t <= 5"
    for r in range(2, 6):
        for t in range(2, 6):
            p = ForbidParams(r, t)
            for a in range(1, p.degree_capacity + 1):
                for b in range(1, p.degree_capacity + 1):
                    if g_edge(p, a, b) ** 2 != g_edge(p, a, a) * g_edge(p, b, b):
                        outcome = f"broken at r={r}, t={t}, a={a}, b={b}"
    add(
        "switch identity of the edge weights",
        "exact for all r,t <= 5",
        outcome,
        "identity",
    )

    # covering bound on whole graphs: exact dominance, tight on C_4 and K_2
    c4 = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    lhs = count_star_free(c4, p23).count ** p23.k
    rhs = g_edge(p23, 2, 2) ** 4
    add(
        "covering bound tight on the 4-cycle",
        "16^5 = 32^4",
        "16^5 = 32^4" if lhs == rhs else f"{lhs} vs {rhs}",
        "identity",
    )
    k2 = Graph(2, ((0, 1),))
    lhs = count_star_free(k2, p23).count ** p23.k
    rhs = g_edge(p23, 1, 1)
    add(
        "covering bound tight on a single edge",
        "2^5 = 32",
        "2^5 = 32" if lhs == rhs else f"{lhs} vs {rhs}",
        "identity",
    )
    lhs = count_star_free(k33, p23).count ** p23.k
    rhs = g_edge(p23, 3, 3) ** 9
    add(
        "covering bound dominates the K_{3,3} count",
        "102^5 <= 18^9",
        "102^5 <= 18^9" if lhs <= rhs else f"{lhs} > {rhs}",
        "identity",
    )

    # improvements over the earlier bounds
    better = compare_powers(Fraction(18), Fraction(3, 10), Fraction(6), Fraction(1, 2)) < 0
    add(
        "18^(3/10) beats sqrt(6)",
        "strictly smaller",
        "strictly smaller" if better else "not smaller",
        "reference",
    )
    better = compare_powers(Fraction(200), Fraction(5, 18), Fraction(20), Fraction(1, 2)) < 0
    add(
        "200^(5/18) beats sqrt(20)",
        "strictly smaller",
        "strictly smaller" if better else "not smaller",
        "reference",
    )
    outcome = "strictly smaller for r=2..10"
    for r in range(2, 11):
        cf = closed_form_br3(r)
        old = Fraction(factorial(2 * r), 2**r)
        if compare_powers(cf.base, cf.exponent, old, Fraction(1, 2)) >= 0:
            outcome = f"not smaller at r={r}"
            break
    add(
        "3-edge-star bound beats ((2r)!/2^r)^(1/2)",
        "strictly smaller for r=2..10",
        outcome,
        "reference",
    )

    # the asymptotic ratio window and its limit constant
    rep50 = upper_bound_b(ForbidParams(50, 3), digits=6)
    ratio = power_quotient_decimal(
        rep50.base, rep50.exponent, Fraction(factorial(100), 2**50), Fraction(1, 2), places=4
    ).text
    inside = Decimal("0.80") < Decimal(ratio) < Decimal("0.90")
    add(
        "bound-to-factorial ratio at r=50 sits in (0.80, 0.90)",
        "inside",
        "inside" if inside else f"outside ({ratio})",
        "cross-check",
    )
    with localcontext() as ctx:
        ctx.prec = 30
        limit = Decimal(2) ** (Decimal(1) / 8) * (Decimal(-1) / 4).exp()
        rounded = str(limit.quantize(Decimal("0.01"), rounding="ROUND_HALF_UP"))
    add("limit constant 2^(1/8) e^(-1/4) rounds to 0.85", "0.85", rounded, "reference")

    # sweep of small complete bipartite graphs
    _rows, best = sweep_lower_bounds(p23, 6)
    add(
        "best lower-bound graph on at most 6 vertices",
        "K_{3,3} at 2.1616",
        f"K_{{{best.m},{best.n}}} at {best.bound}" if best else "none",
        "cross-check",
    )

    # trivial sandwich r^((t-1)/2) <= value <= r^(r(t-1)/2)
    outcome = "holds for r,t <= 4"
    for r in range(2, 5):
        for t in range(3, 5):
            rep = upper_bound_b(ForbidParams(r, t), digits=6)
            low_ok = (
                compare_powers(Fraction(r), Fraction(t - 1, 2), rep.base, rep.exponent) <= 0
            )
            high_ok = (
                compare_powers(rep.base, rep.exponent, Fraction(r), Fraction(r * (t - 1), 2))
                <= 0
            )
            if not (low_ok and high_ok):
                outcome = f"violated at r={r}, t={t}"
    add(
        "trivial bounds sandwich the optimized bound",
        "holds for r,t <= 4",
        outcome,
        "identity",
    )

    return VerifyReport(tuple(checks))
