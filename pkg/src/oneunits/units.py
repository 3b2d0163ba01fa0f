"""One-units of F_p[[x]] and their p-adic exponent structure.

A one-unit is a truncated series with constant term 1.  The powers of
1 + x among them are exactly the series f(x) = (1+x)^y for a p-adic
integer y, and three different characterizations of that set live here:
expansion (:func:`pow_binomial`, :func:`pow_product`), digit-by-digit
recovery with verification (:func:`recover_exponent`,
:func:`is_endomorphism_via_theorem`), and the two-variable product
comparison f(x)f(y) = f(x + y + xy) (:func:`is_endomorphism_bivariate`).
On top of those sit automorphism inversion, the Hasse-derivative
identity, and the rationality probes that compare what the digits of y
say with what the coefficient stream of f shows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import (
    InconsistentReport,
    NotAnEndomorphism,
    NotAPthPower,
    PrecisionExhausted,
    TooLargeToEnumerate,
)
from .fp import Prime
from .padic import IntegerVerdict, PadicApprox
from .periodic import PeriodReport, find_period
from .ratfn import RationalFn, from_period
from .series import TruncSeries, outer_product, subst_group_law

__all__ = [
    "OneUnit",
    "BoxVerdict",
    "EndoVerdict",
    "RationalityReport",
    "digits_for_precision",
    "pow_binomial",
    "pow_product",
    "recover_exponent",
    "is_endomorphism_bivariate",
    "is_endomorphism_via_theorem",
    "hasse_identity_check",
    "is_automorphism",
    "invert_automorphism",
    "compose_unit",
    "detect_coeff_period",
    "coeffs_to_rational",
    "rationality_report",
    "enumerate_endomorphisms",
]


@dataclass(frozen=True)
class OneUnit:
    """A truncated series with constant term 1."""

    series: TruncSeries

    def __post_init__(self) -> None:
        if self.series.coefficient(0) != 1:
            raise ValueError("a one-unit has constant term 1")

    @classmethod
    def from_ints(cls, modulus: Prime, values: Iterable[int]) -> "OneUnit":
        return cls(TruncSeries.from_ints(modulus, values))

    @classmethod
    def one_plus_x(cls, modulus: Prime, precision: int) -> "OneUnit":
        return cls(TruncSeries.one_plus_x(modulus, precision))

    @classmethod
    def parse(cls, text: str) -> "OneUnit":
        return cls(TruncSeries.parse(text))

    @property
    def modulus(self) -> Prime:
        return self.series.modulus

    @property
    def precision(self) -> int:
        return self.series.precision

    def coefficient(self, n: int) -> int:
        return self.series.coefficient(n)

    def __mul__(self, other: "OneUnit") -> "OneUnit":
        return OneUnit(self.series * other.series)

    def truncate(self, precision: int) -> "OneUnit":
        return OneUnit(self.series.truncate(precision))

    def serialize(self) -> str:
        return self.series.serialize()

    def __repr__(self) -> str:
        return f"<OneUnit {self.serialize()}>"


def digits_for_precision(modulus: Prime, precision: int) -> int:
    """Fewest base-p digits of y that pin down (1+x)^y mod x^precision.

    This is the least k with p^k >= precision, floored at one digit.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    k, q = 0, 1
    while q < precision:
        q *= modulus.p
        k += 1
    return max(k, 1)


def _check_digit_window(exponent: PadicApprox, precision: int) -> None:
    covered = exponent.modulus.p ** exponent.precision
    if covered < precision:
        raise PrecisionExhausted(
            f"{exponent.precision} digits determine coefficients only "
            f"below x^{covered}, need x^{precision}")


def pow_binomial(exponent: PadicApprox, precision: int) -> OneUnit:
    """(1+x)^y mod x^N, coefficient of x^n being the binomial C(y, n).

    Each binomial is a base-p digit product, so K digits of y settle
    every n < p^K; p^K >= N is demanded up front.
    """
    _check_digit_window(exponent, precision)
    out = np.zeros(precision, dtype=np.int64)
    for n in range(precision):
        out[n] = int(exponent.binom(n))
    return OneUnit(TruncSeries(exponent.modulus, out))


def pow_product(exponent: PadicApprox, precision: int) -> OneUnit:
    """(1+x)^y mod x^N as the product of (1 + x^(p^i))^(digit i of y).

    Factors with p^i >= N are trivial mod x^N, so the product is finite.
    Agrees with :func:`pow_binomial` on every input.
    """
    _check_digit_window(exponent, precision)
    modulus = exponent.modulus
    acc = TruncSeries.constant(modulus, precision)
    q = 1
    for d in exponent.digits:
        if q >= precision:
            break
        if d:
            factor = np.zeros(precision, dtype=np.int64)
            factor[0] = 1
            factor[q] = 1
            acc = acc * TruncSeries(modulus, factor).pow_int(d)
        q *= modulus.p
    return OneUnit(acc)


def recover_exponent(u: OneUnit) -> PadicApprox:
    """The digits of the y with u = (1+x)^y, read off one stage at a time.

    Stage i strips the factor (1+x)^(digit i) and takes a p-th root,
    which costs precision; the loop ends when no further digit is
    determined, after exactly digits_for_precision(p, N) stages.  A
    residue whose support refuses the p-th root certifies that u is no
    power of 1+x, raising NotAnEndomorphism with the failing stage.

    Success only means every stage passed.  The caller must still
    verify the candidate by re-expansion (or rely on
    :func:`is_endomorphism_via_theorem`, which does both).
    """
    if u.precision < 2:
        raise PrecisionExhausted("precision 1 determines no exponent digits")
    g = u.series
    digits: list[int] = []
    stage = 0
    while g.precision >= 2:
        d = g.coefficient(1)
        digits.append(d)
        if d:
            stripped = TruncSeries.one_plus_x(g.modulus, g.precision)
            g = g * stripped.pow_int(d).invert()
        try:
            g = g.pth_root()
        except NotAPthPower as exc:
            raise NotAnEndomorphism(stage=stage) from exc
        stage += 1
    return PadicApprox(u.modulus, tuple(digits))


@dataclass(frozen=True)
class BoxVerdict:
    """Outcome of the two-variable product comparison.

    mismatch is the first box position (row-major) where f(x)f(y) and
    f(x + y + xy) disagree, or None when the full box matches; the
    verdict is truthy exactly in the latter case.
    """

    mismatch: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.mismatch is None


def is_endomorphism_bivariate(u: OneUnit) -> BoxVerdict:
    """Compare f(x)f(y) with f(x + y + xy) on the full N-by-N box."""
    lhs = outer_product(u.series, u.series)
    rhs = subst_group_law(u.series)
    return BoxVerdict(lhs.first_mismatch(rhs))


@dataclass(frozen=True)
class EndoVerdict:
    """Outcome of the recover-and-verify test.

    exponent is the recovered y when re-expansion reproduces u at full
    precision; otherwise reason says what failed, phrased so it can be
    shown to a user as "not an endomorphism (<reason>)".
    """

    exponent: PadicApprox | None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.exponent is not None


def is_endomorphism_via_theorem(u: OneUnit) -> EndoVerdict:
    """Recover a candidate exponent, then verify it by re-expansion."""
    try:
        y = recover_exponent(u)
    except NotAnEndomorphism as exc:
        reason = f"stage {exc.stage}" if exc.stage is not None else str(exc)
        return EndoVerdict(None, reason)
    check = pow_binomial(y, u.precision)
    diff = np.nonzero(check.series.coeffs != u.series.coeffs)[0]
    if diff.size:
        return EndoVerdict(None, f"coefficient mismatch at x^{int(diff[0])}")
    return EndoVerdict(y)


def hasse_identity_check(u: OneUnit, m: int) -> bool:
    """Whether a_m * f == D^m(f) * (1+x)^m holds mod x^(N-m).

    Truncated powers of 1+x satisfy this for every order m below their
    precision, so one failing order certifies a non-power.
    """
    if m < 0:
        raise ValueError("derivative order must be nonnegative")
    if m >= u.precision:
        raise PrecisionExhausted(
            f"order {m} exceeds what precision {u.precision} supports")
    reduced = u.series.truncate(u.precision - m)
    lhs = reduced.scaled(u.coefficient(m))
    shift = TruncSeries.one_plus_x(u.modulus, u.precision - m).pow_int(m)
    rhs = u.series.hasse_derivative(m) * shift
    return lhs == rhs


def is_automorphism(u: OneUnit) -> bool:
    """Whether u is a power of 1+x with invertible exponent.

    Raises NotAnEndomorphism when u is not a power of 1+x at all; the
    remaining distinction is simply whether y is a unit, i.e. whether
    the coefficient of x is nonzero.
    """
    verdict = is_endomorphism_via_theorem(u)
    if not verdict:
        raise NotAnEndomorphism(detail=verdict.reason)
    return verdict.exponent.digits[0] != 0


def compose_unit(f: OneUnit, g: OneUnit) -> OneUnit:
    """Substitute g - 1 into f.

    For powers of 1+x this multiplies exponents:
    compose_unit((1+x)^a, (1+x)^b) = (1+x)^(ab).
    """
    inner = np.array(g.series.coeffs, dtype=np.int64)
    inner[0] = 0
    return OneUnit(f.series.compose(TruncSeries(g.modulus, inner)))


def invert_automorphism(u: OneUnit) -> OneUnit:
    """The power of 1+x that undoes u under substitution.

    With u = (1+x)^y and y a unit this is (1+x)^(1/y); composing either
    way around returns 1 + x.  NotAnEndomorphism or NonUnitExponent is
    raised when u fails the respective precondition.
    """
    verdict = is_endomorphism_via_theorem(u)
    if not verdict:
        raise NotAnEndomorphism(detail=verdict.reason)
    return pow_binomial(verdict.exponent.unit_inverse(), u.precision)


def detect_coeff_period(u: OneUnit, max_preperiod: int | None = None,
                        max_period: int | None = None) -> PeriodReport | None:
    """Scan the coefficient stream of u for an eventual period.

    Defaults bound both the preperiod and the period by an eighth of
    the precision, which always leaves room for the two full repeats
    the detector demands; callers widen the window when they can
    afford the cost.
    """
    if max_preperiod is None:
        max_preperiod = u.precision // 8
    if max_period is None:
        max_period = max(1, u.precision // 8)
    return find_period(u.series.coeffs, max_preperiod, max_period)


def coeffs_to_rational(u: OneUnit, report: PeriodReport) -> RationalFn:
    """The rational function matching u's coefficients under the report.

    The reconstruction is re-expanded to full precision and compared
    against u; a report that does not actually describe the stream
    raises InconsistentReport.
    """
    fn = from_period(u.modulus, u.series.coeffs, report)
    if fn.expand(u.precision) != u.series:
        raise InconsistentReport(
            f"report {report} does not re-expand to the stream")
    return fn


@dataclass(frozen=True)
class RationalityReport:
    """Two window-bounded views of one exponent, side by side.

    integer_verdict reads the digit tail of y; coeff_period scans the
    coefficients of (1+x)^y for eventual periodicity, with rational
    carrying the reconstructed fraction when a period was found.
    consistent records whether the views agree: y integral exactly when
    the stream is eventually periodic.  A False value does not decide
    anything by itself, it flags that at least one window was too small
    for the structure it was looking at.
    """

    integer_verdict: IntegerVerdict
    coeff_period: PeriodReport | None
    rational: RationalFn | None
    consistent: bool


def rationality_report(exponent: PadicApprox, precision: int,
                       max_preperiod: int | None = None,
                       max_period: int | None = None) -> RationalityReport:
    """Expand (1+x)^y and compare the digit and coefficient views of y."""
    u = pow_binomial(exponent, precision)
    verdict = exponent.is_integer_window()
    report = detect_coeff_period(u, max_preperiod, max_period)
    fn = coeffs_to_rational(u, report) if report is not None else None
    return RationalityReport(
        integer_verdict=verdict,
        coeff_period=report,
        rational=fn,
        consistent=verdict.is_integer == (report is not None),
    )


def enumerate_endomorphisms(modulus: Prime, precision: int) -> list[OneUnit]:
    """Every one-unit passing the full box check, in lex coefficient order.

    Walks all p^(N-1) candidate tails, so the search space is capped at
    2^20 and TooLargeToEnumerate is raised beyond that.
    """
    p, n = modulus.p, precision
    count = p ** (n - 1)
    if count > 1 << 20:
        raise TooLargeToEnumerate(
            f"{count} candidates at p={p}, N={n}; refusing beyond 2^20")
    found = []
    for tail in itertools.product(range(p), repeat=n - 1):
        u = OneUnit(TruncSeries(modulus, np.array((1,) + tail, dtype=np.int64)))
        if is_endomorphism_bivariate(u):
            found.append(u)
    return found
