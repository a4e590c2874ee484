"""Exact big-integer comparisons and certified decimal rendering.

All user-facing decimals in this package come from enclosures: an interval
[m*10^j, (m+1)*10^j] proven to contain the true value, computed either from
integer q-th roots of scaled powers (exact route, preferred) or from
correctly-rounded Decimal ln/exp with outward rounding (log route, used when
materializing the integer power would blow past the digit budget).  A string
is emitted only once both endpoints round to the same representation, so a
printed digit is never a float artifact.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import lcm

import gmpy2

from .errors import PrecisionError

__all__ = [
    "DEFAULT_DIGITS",
    "DEFAULT_DIGIT_BUDGET",
    "DecimalBound",
    "digits10",
    "integer_root",
    "int_to_str",
    "format_rational",
    "parse_rational",
    "power_decimal",
    "power_quotient_decimal",
    "compare_powers",
    "argmax_powers",
]

DEFAULT_DIGITS = 30
DEFAULT_DIGIT_BUDGET = 10**6

# precision ladder for the certified log route
_LOG_PRECISIONS = (40, 80, 160, 320, 640, 1280, 2560, 5120, 10240)
_GUARDS = (4, 16, 64, 256, 1024)

Rational = Fraction | int


def digits10(n: int) -> int:
    """Exact number of decimal digits of |n| (0 counts as one digit)."""
    if n == 0:
        return 1
    return gmpy2.num_digits(gmpy2.mpz(n), 10)


def integer_root(n: int, q: int) -> tuple[int, bool]:
    """Floor q-th root of n >= 0 and whether it is exact."""
    if n < 0:
        raise ValueError("negative radicand")
    if q < 1:
        raise ValueError("root order must be positive")
    root, exact = gmpy2.iroot(gmpy2.mpz(n), q)
    return int(root), bool(exact)


def int_to_str(n: int) -> str:
    """Decimal string of n, unaffected by the interpreter's int->str limit."""
    try:
        return str(n)
    except ValueError:
        return gmpy2.mpz(n).digits(10)


def format_rational(x: Rational) -> str:
    """Serialize a rational as "p/q", or just "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return int_to_str(x.numerator)
    return f"{int_to_str(x.numerator)}/{int_to_str(x.denominator)}"


def parse_rational(s: str) -> Fraction:
    """Inverse of format_rational."""
    return Fraction(s.strip())


@dataclass(frozen=True)
class DecimalBound:
    """A rendered decimal together with its certified enclosure.

    text is the rounded display string.  The true value y satisfies
    mantissa*10^shift <= y < (mantissa+1)*10^shift, with equality on the
    left and exact=True when y is exactly representable.
    """

    text: str
    mantissa: int
    shift: int
    exact: bool

    def __str__(self) -> str:
        return self.text


def _pow10(m: int) -> "gmpy2.mpz":
    return gmpy2.mpz(10) ** m


def _cmp_scaled(num: int, den: int, m: int) -> int:
    """Sign of num/den - 10^m for positive num, den."""
    if m >= 0:
        left, right = gmpy2.mpz(num), gmpy2.mpz(den) * _pow10(m)
    else:
        left, right = gmpy2.mpz(num) * _pow10(-m), gmpy2.mpz(den)
    return (left > right) - (left < right)


def _floor_log10_root(num: int, den: int, q: int) -> int:
    """e with 10^e <= (num/den)^(1/q) < 10^(e+1), by certified comparison."""
    d = digits10(num) - digits10(den)
    e = (d - 1) // q
    while _cmp_scaled(num, den, (e + 1) * q) >= 0:
        e += 1
    while _cmp_scaled(num, den, e * q) < 0:
        e -= 1
    return e


def _round_half_up(value: int, step: int) -> int:
    # floor(value/step + 1/2) in pure integers
    return (2 * value + step) // (2 * step)


def _plain_decimal(n: int, exp: int) -> str:
    """Render n * 10^exp (n >= 0) as a plain decimal string."""
    s = int_to_str(n)
    if exp >= 0:
        return s + "0" * exp
    if len(s) > -exp:
        return s[:exp] + "." + s[exp:]
    return "0." + "0" * (-exp - len(s)) + s


def _strip_trailing(s: str) -> str:
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s or "0"


def _ln_interval(x: Fraction, prec: int) -> tuple[Decimal, Decimal]:
    """[lo, hi] containing ln(x) rigorously, for x > 0."""
    if x.numerator == x.denominator:
        return Decimal(0), Decimal(0)
    with localcontext() as ctx:
        ctx.prec = prec
        a = Decimal(x.numerator).ln()
        b = Decimal(x.denominator).ln()
        # ln() is correctly rounded, so the true values sit strictly between
        # the neighbors of the computed ones; widen once more for the subtraction
        lo = (a.next_minus() - b.next_plus()).next_minus()
        hi = (a.next_plus() - b.next_minus()).next_plus()
    return lo, hi


def _scale_interval(
    lo: Decimal, hi: Decimal, p: int, q: int, prec: int
) -> tuple[Decimal, Decimal]:
    """Rigorous [lo, hi] * (p/q) for p >= 0, q > 0 (interval may span zero)."""
    with localcontext() as ctx:
        ctx.prec = prec
        new_lo = ((lo * p).next_minus() / q).next_minus()
        new_hi = ((hi * p).next_plus() / q).next_plus()
    return new_lo, new_hi


def _power_log_interval(
    base: Fraction, p: int, q: int, prec: int
) -> tuple[Decimal, Decimal]:
    """Rigorous interval for base^(p/q) via Decimal ln/exp."""
    lo, hi = _ln_interval(base, prec)
    lo, hi = _scale_interval(lo, hi, p, q, prec)
    with localcontext() as ctx:
        ctx.prec = prec
        return lo.exp().next_minus(), hi.exp().next_plus()


def _render(
    m: int, j: int, exact: bool, qexp: int, places: int | None
) -> tuple[str, bool] | None:
    """Round the enclosure [m, m+1]*10^j to quantum 10^qexp.

    Returns (display string, rendering is the true value), or None when the
    endpoints round apart and more precision is needed.  `exact` says the
    true value is m*10^j itself; the rendering stays exact only when the
    quantum did not round anything away.
    """
    step = int(_pow10(qexp - j))
    lo_q = _round_half_up(m, step)
    hi_q = lo_q if exact else _round_half_up(m + 1, step)
    if lo_q != hi_q:
        return None
    rendered_exact = exact and m % step == 0
    text = _plain_decimal(lo_q, qexp)
    if places is None and rendered_exact:
        text = _strip_trailing(text)
    return text, rendered_exact


def power_decimal(
    base: Rational,
    exponent: Rational,
    *,
    digits: int = DEFAULT_DIGITS,
    places: int | None = None,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> DecimalBound:
    """Certified decimal rendering of base**exponent for base >= 0.

    By default the result carries `digits` significant digits; passing
    `places` switches to a fixed number of digits after the decimal point
    (as used for lower-bound tables).  Rounding is half-up, decided from a
    proven enclosure, never from floats.
    """
    base = Fraction(base)
    exponent = Fraction(exponent)
    if base < 0:
        raise ValueError("base must be nonnegative")
    if digits < 1:
        raise ValueError("need at least one significant digit")
    if base == 0:
        if exponent <= 0:
            raise ValueError("0 cannot be raised to a nonpositive exponent")
        text = "0" if places is None else _plain_decimal(0, -places)
        return DecimalBound(text, 0, 0, True)
    if exponent < 0:
        base = 1 / base
        exponent = -exponent
    p, q = exponent.numerator, exponent.denominator
    if p == 0 or base == 1:
        base, p, q = Fraction(1), 1, 1

    cost = p * (digits10(base.numerator) + digits10(base.denominator))
    if cost <= digit_budget:
        return _power_decimal_exact(base, p, q, digits, places)
    return _power_decimal_log(base, p, q, digits, places)


def _power_decimal_exact(
    base: Fraction, p: int, q: int, digits: int, places: int | None
) -> DecimalBound:
    num = gmpy2.mpz(base.numerator) ** p
    den = gmpy2.mpz(base.denominator) ** p
    e = _floor_log10_root(num, den, q)
    qexp = -places if places is not None else e + 1 - digits
    for guard in _GUARDS:
        # j <= -guard keeps the scaling shift positive even when the value
        # is so large that the rounding quantum sits left of the units digit
        j = min(qexp, 0) - guard
        shift = -j * q
        scaled = num * _pow10(shift)
        m_root, root_exact = gmpy2.iroot(scaled // den, q)
        exact = bool(root_exact) and scaled % den == 0
        rendered = _render(int(m_root), j, exact, qexp, places)
        if rendered is not None:
            text, rendered_exact = rendered
            return DecimalBound(text, int(m_root), j, rendered_exact)
    raise PrecisionError(
        f"indistinguishable candidates: could not round {base}^({p}/{q}) "
        f"to quantum 1e{qexp} within the precision ladder"
    )


def _render_interval(
    lo: Decimal, hi: Decimal, prec: int, digits: int, places: int | None
) -> DecimalBound | None:
    """Round a positive enclosure [lo, hi] to the requested quantum.

    Returns None when the interval is too wide to decide the rounding (or
    the endpoints disagree on the leading-digit position), asking the
    caller to retry at higher precision.
    """
    if lo <= 0:
        return None
    if lo.adjusted() != hi.adjusted():
        return None
    e = lo.adjusted()
    qexp = -places if places is not None else e + 1 - digits
    j = min(qexp, e) - max(4, prec // 8)
    with localcontext() as ctx:
        # scaleb only shifts the exponent, but it is a context operation;
        # give it room so no digits are dropped
        ctx.prec = prec + abs(qexp - j) + 20
        m_lo = int(lo.scaleb(-j).to_integral_value(rounding="ROUND_FLOOR"))
        m_hi = int(hi.scaleb(-j).to_integral_value(rounding="ROUND_CEILING"))
    step = int(_pow10(qexp - j))
    lo_q = _round_half_up(m_lo, step)
    hi_q = _round_half_up(m_hi, step)
    if lo_q != hi_q:
        return None
    return DecimalBound(_plain_decimal(lo_q, qexp), m_lo, j, False)


def _power_decimal_log(
    base: Fraction, p: int, q: int, digits: int, places: int | None
) -> DecimalBound:
    for prec in _LOG_PRECISIONS:
        lo, hi = _power_log_interval(base, p, q, prec)
        rendered = _render_interval(lo, hi, prec, digits, places)
        if rendered is not None:
            return rendered
    raise PrecisionError(
        f"indistinguishable candidates: log-interval rendering of "
        f"{base}^({p}/{q}) did not converge"
    )


def power_quotient_decimal(
    xbase: Rational,
    xexp: Rational,
    ybase: Rational,
    yexp: Rational,
    *,
    digits: int = DEFAULT_DIGITS,
    places: int | None = None,
) -> DecimalBound:
    """Certified decimal of (xbase**xexp) / (ybase**yexp), both bases > 0.

    Works entirely in log space (difference of scaled ln intervals), so huge
    powers never materialize; suited to ratios of astronomically large
    bounds.  Quotients landing exactly on a power of ten cannot be certified
    from open intervals and raise PrecisionError (except the syntactically
    identical case, which short-circuits to 1).
    """
    sides: list[tuple[Fraction, int, int]] = []
    for base, exp in ((xbase, xexp), (ybase, yexp)):
        base, exp = Fraction(base), Fraction(exp)
        if base <= 0:
            raise ValueError("quotient bases must be positive")
        if exp < 0:
            base, exp = 1 / base, -exp
        sides.append((base, exp.numerator, exp.denominator))
    (xb, xp, xq), (yb, yp, yq) = sides
    if (xb, xp, xq) == (yb, yp, yq) or xb == yb == 1:
        return power_decimal(1, 1, digits=digits, places=places)
    for prec in _LOG_PRECISIONS:
        num_lo, num_hi = _scale_interval(*_ln_interval(xb, prec), xp, xq, prec)
        den_lo, den_hi = _scale_interval(*_ln_interval(yb, prec), yp, yq, prec)
        with localcontext() as ctx:
            ctx.prec = prec
            lo = (num_lo - den_hi).next_minus().exp().next_minus()
            hi = (num_hi - den_lo).next_plus().exp().next_plus()
        rendered = _render_interval(lo, hi, prec, digits, places)
        if rendered is not None:
            return rendered
    raise PrecisionError(
        "indistinguishable candidates: log-interval rendering of the "
        "quotient did not converge"
    )


def compare_powers(
    xbase: Rational,
    xexp: Rational,
    ybase: Rational,
    yexp: Rational,
    *,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> int:
    """Sign of xbase**xexp - ybase**yexp, for positive bases.

    Cross-exponentiates exactly when the integer powers fit the digit
    budget; otherwise compares certified ln intervals with precision
    escalation, raising PrecisionError if the candidates never separate.
    """
    xbase, ybase = Fraction(xbase), Fraction(ybase)
    xexp, yexp = Fraction(xexp), Fraction(yexp)
    if xbase <= 0 or ybase <= 0:
        raise ValueError("bases must be positive")
    if xexp < 0:
        xbase, xexp = 1 / xbase, -xexp
    if yexp < 0:
        ybase, yexp = 1 / ybase, -yexp
    den = lcm(xexp.denominator, yexp.denominator)
    p1 = xexp.numerator * (den // xexp.denominator)
    p2 = yexp.numerator * (den // yexp.denominator)

    # each side is materialized separately, so the budget gauges the larger one
    cost = max(
        p1 * (digits10(xbase.numerator) + digits10(xbase.denominator)),
        p2 * (digits10(ybase.numerator) + digits10(ybase.denominator)),
    )
    if cost <= digit_budget:
        left = gmpy2.mpz(xbase.numerator) ** p1 * gmpy2.mpz(ybase.denominator) ** p2
        right = gmpy2.mpz(ybase.numerator) ** p2 * gmpy2.mpz(xbase.denominator) ** p1
        return (left > right) - (left < right)

    for prec in _LOG_PRECISIONS:
        xlo, xhi = _scale_interval(*_ln_interval(xbase, prec), p1, 1, prec)
        ylo, yhi = _scale_interval(*_ln_interval(ybase, prec), p2, 1, prec)
        if xlo > yhi:
            return 1
        if xhi < ylo:
            return -1
    raise PrecisionError(
        "indistinguishable candidates: certified log intervals still overlap "
        f"at {_LOG_PRECISIONS[-1]} digits; an exact comparison would need "
        f"about {cost} digits (budget {digit_budget})"
    )


def argmax_powers(
    candidates: list[tuple[Rational, int]],
    *,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> tuple[int, list[int], list[int] | None]:
    """Index maximizing base**exp over (base, exp) pairs with integer bases.

    Returns (index, tied_indices, values): ties are broken toward the later
    candidate, and values holds the exact powers when the whole table fits
    the digit budget (None on the log route, where a certified strict winner
    is required and ties raise PrecisionError).
    """
    if not candidates:
        raise ValueError("no candidates")
    bases = [Fraction(b) for b, _ in candidates]
    exps = [e for _, e in candidates]
    if any(b <= 0 for b in bases) or any(e < 0 for e in exps):
        raise ValueError("bases must be positive and exponents nonnegative")

    cost = max(
        e * (digits10(b.numerator) + digits10(b.denominator))
        for b, e in zip(bases, exps)
    )
    if cost <= digit_budget:
        values = [
            int(gmpy2.mpz(b.numerator) ** e) if b.denominator == 1 else None
            for b, e in zip(bases, exps)
        ]
        if any(v is None for v in values):
            fracs = [Fraction(b.numerator**e, b.denominator**e) for b, e in zip(bases, exps)]
            best = max(range(len(fracs)), key=lambda i: (fracs[i], i))
            ties = [i for i, v in enumerate(fracs) if v == fracs[best]]
            return best, ties, None
        best = max(range(len(values)), key=lambda i: (values[i], i))
        ties = [i for i, v in enumerate(values) if v == values[best]]
        return best, ties, values

    for prec in _LOG_PRECISIONS:
        intervals = [
            _scale_interval(*_ln_interval(b, prec), e, 1, prec)
            for b, e in zip(bases, exps)
        ]
        floor = max(lo for lo, _ in intervals)
        alive = [i for i, (_, hi) in enumerate(intervals) if hi >= floor]
        if len(alive) == 1:
            return alive[0], alive, None
    raise PrecisionError(
        "indistinguishable candidates: argmax over the digit budget and the "
        "remaining candidates' log intervals keep overlapping"
    )
