"""Exact verification of the identity catalog over parameter grids.

Every ``verify_*`` function checks one identity at one parameter point by
computing both sides independently and comparing for exact equality; the
outcome is an :class:`IdentityReport`.  Points that violate an identity's
stated precondition are reported as filtered, never as failures, and
enumeration-backed checks whose instance exceeds the tiling cap are
reported as resource-limited.  :func:`run_grid` sweeps the whole catalog
(or a subset) over its default grid, which mirrors the acceptance bounds,
with per-axis overrides via :class:`GridConfig`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import tilings
from . import tribonacci as trib
from .poly import ONE, Polynomial, X, ZERO
from .series import TruncatedSeries, rational_expand

PASSED = "passed"
FAILED = "failed"
FILTERED = "filtered"
RESOURCE_LIMITED = "resource_limited"

ALL_IDENTITY_IDS = (
    "EQ4",
    "ID1",
    "ID2",
    "ID3",
    "REMARK_A",
    "ID4",
    "ID5",
    "ID6",
    "EQ12",
    "EQ13",
    "THM1",
    "THM2",
    "COR2",
)

_ONE_PLUS_X3 = Polynomial((1, 0, 0, 1))


@dataclass
class IdentityReport:
    """Outcome of one identity at one parameter point."""

    identity_id: str
    params: dict[str, int]
    status: str
    passed: bool
    elapsed_ms: float
    lhs: str | None = None
    rhs: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "status": self.status,
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        return out


@dataclass(frozen=True)
class GridConfig:
    """Per-axis overrides for :func:`run_grid`; None keeps an identity's default."""

    n_range: tuple[int, int] | None = None
    s_range: tuple[int, int] | None = None
    h_range: tuple[int, int] | None = None
    series_order: int | None = None
    cap: int = tilings.DEFAULT_CAP


def _filtered(identity_id: str, params: dict[str, int]) -> IdentityReport:
    return IdentityReport(identity_id, params, FILTERED, False, 0.0)


def _judge(
    identity_id: str,
    params: dict[str, int],
    started: float,
    lhs: object,
    rhs: object,
    extra_ok: bool = True,
) -> IdentityReport:
    elapsed = (time.perf_counter() - started) * 1000.0
    if lhs == rhs and extra_ok:
        return IdentityReport(identity_id, params, PASSED, True, elapsed)
    return IdentityReport(
        identity_id, params, FAILED, False, elapsed, lhs=str(lhs), rhs=str(rhs)
    )


def _divmod_poly(numerator: Polynomial, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Long division for a divisor with leading coefficient +-1 (exact over Z)."""
    dc = divisor.coeffs
    if not dc or dc[-1] not in (1, -1):
        raise ValueError("division requires a divisor with leading coefficient +-1")
    rem = list(numerator.coeffs)
    quo = [0] * max(0, len(rem) - len(dc) + 1)
    for k in reversed(range(len(quo))):
        c = rem[k + len(dc) - 1] // dc[-1]
        if c:
            quo[k] = c
            for j, d in enumerate(dc):
                rem[k + j] -= c * d
    return Polynomial(quo), Polynomial(rem)


# ----------------------------------------------------------------------
# the catalog


def verify_eq4(n: int, s: int) -> IdentityReport:
    """Three-term recurrence of the incomplete polynomials with end-piece corrections."""
    params = {"n": n, "s": s}
    if s < 0 or n < 2 * s + 1:
        return _filtered("EQ4", params)
    started = time.perf_counter()
    inc = trib.incomplete_tribonacci_poly
    lhs = inc(n + 3, s)
    correction = trib.triangle_poly(n - s, s).times_monomial(1, 1) + trib.triangle_poly(
        n - 1 - s, s
    )
    rhs = (
        inc(n + 2, s).times_monomial(1, 2)
        + inc(n + 1, s).times_monomial(1, 1)
        + inc(n, s)
        - correction
    )
    return _judge("EQ4", params, started, lhs, rhs)


def verify_id1(n: int, s: int, h: int) -> IdentityReport:
    """Geometric-weighted window sum against a level-(s+1) telescope, in the
    form cleared of the 1 + x^3 denominator, plus the exact-divisibility check
    that makes the uncleared statement a genuine polynomial identity."""
    params = {"n": n, "s": s, "h": h}
    if h < 1 or s < 0 or n < 2 * s + 2:
        return _filtered("ID1", params)
    started = time.perf_counter()
    inc = trib.incomplete_tribonacci_poly
    window = ZERO
    for i in range(h):
        window = window + inc(n + i, s).times_monomial(1, 2 * (h - i - 1))
    bracket = (
        inc(n + h + 2, s + 1)
        - inc(n + 2, s + 1).times_monomial(1, 2 * h)
        + inc(n, s).times_monomial(1, 2 * h + 1)
        - inc(n + h, s).times_monomial(1, 1)
    )
    quotient, remainder = _divmod_poly(bracket, _ONE_PLUS_X3)
    divisible = remainder.is_zero and quotient == window
    return _judge("ID1", params, started, _ONE_PLUS_X3 * window, bracket, extra_ok=divisible)


def verify_id2(n: int) -> IdentityReport:
    """Sum over all restriction levels versus the double-sum correction term."""
    params = {"n": n}
    if n < 1:
        return _filtered("ID2", params)
    started = time.perf_counter()
    half = n // 2
    lhs = ZERO
    for s in range(half + 1):
        lhs = lhs + trib.incomplete_tribonacci_poly(n + 1, s)
    terms: dict[int, int] = {}
    for i in range(half + 1):
        for j in range(i + 1):
            c = i * trib.binom(i, j) * trib.binom(n - i - j, i)
            if c:
                e = 2 * n - 3 * (i + j)
                terms[e] = terms.get(e, 0) + c
    rhs = trib.tribonacci_poly(n + 1) * (half + 1) - Polynomial.from_terms(terms)
    return _judge("ID2", params, started, lhs, rhs)


def verify_id3(n: int) -> IdentityReport:
    """Sum over all restriction levels versus a convolution over the position
    of a longer piece."""
    params = {"n": n}
    if n < 1:
        return _filtered("ID3", params)
    started = time.perf_counter()
    half = n // 2
    lhs = ZERO
    for s in range(half + 1):
        lhs = lhs + trib.incomplete_tribonacci_poly(n + 1, s)
    tp = trib.tribonacci_poly
    conv = ZERO
    for j in range(1, n):
        conv = conv + (tp(j).times_monomial(1, 1) + tp(j - 1)) * tp(n - j)
    rhs = tp(n + 1) * (half + 1) - conv
    return _judge("ID3", params, started, lhs, rhs)


def _correction_total(n: int) -> int:
    """x = 1 value of the double-sum correction appearing in ID2."""
    return sum(
        i * trib.binom(i, j) * trib.binom(n - i - j, i)
        for i in range(n // 2 + 1)
        for j in range(i + 1)
    )


def verify_remark_a(order: int) -> IdentityReport:
    """Closed rational generating function for the correction totals at x = 1."""
    params = {"order": order}
    if order < 0:
        return _filtered("REMARK_A", params)
    started = time.perf_counter()
    lhs = TruncatedSeries([_correction_total(k) for k in range(order + 1)], order)
    base = TruncatedSeries([1, -1, -1, -1][: order + 1], order)
    rhs = rational_expand(TruncatedSeries([0, 0, 1, 1][: order + 1], order), base * base)
    return _judge("REMARK_A", params, started, lhs, rhs)


def verify_id4(n: int, s: int) -> IdentityReport:
    """Decomposition of an incomplete polynomial by its run of trailing dominos."""
    params = {"n": n, "s": s}
    if s < 0 or n < 2 * s + 1:
        return _filtered("ID4", params)
    started = time.perf_counter()
    inc = trib.incomplete_tribonacci_poly
    lhs = inc(n + 1, s)
    rhs = ZERO
    for i in range(s + 1):
        rhs = rhs + inc(n - 2 * i, s - i).times_monomial(1, i + 2)
        rhs = rhs + inc(n - 2 * i - 2, s - i - 1).times_monomial(1, i)
    return _judge("ID4", params, started, lhs, rhs)


def verify_id5(n: int, s: int) -> IdentityReport:
    """Decomposition by the composition of the final s tiles (trinomial refinement)."""
    params = {"n": n, "s": s}
    if s < 0 or n < 3 * s + 1:
        return _filtered("ID5", params)
    started = time.perf_counter()
    inc = trib.incomplete_tribonacci_poly
    lhs = inc(n, s)
    rhs = ZERO
    for i in range(s + 1):
        for j in range(s - i + 1):
            coeff = trib.binom(s, i) * trib.binom(s - i, j)
            rhs = rhs + inc(n - s - i - 2 * j, s - i - j).times_monomial(
                coeff, 2 * s - i - 2 * j
            )
    return _judge("ID5", params, started, lhs, rhs)


def verify_id6(n: int, s: int) -> IdentityReport:
    """Expansion through the incomplete Fibonacci family.  The statement lives
    at half-integer exponents, so both sides are compared after x -> y^2:
    tribonacci members carry exponents doubled, Fibonacci members tripled."""
    params = {"n": n, "s": s}
    if s < 0 or n < 2 * s:
        return _filtered("ID6", params)
    started = time.perf_counter()
    inc = trib.incomplete_tribonacci_poly
    fib = trib.incomplete_fibonacci_poly
    lhs = inc(n + 1, s).substitute_power(2)
    rhs = fib(n + 1, s).substitute_power(3).times_monomial(1, n)
    for i in range(1, n - 1):
        for j in range(s):
            delta = inc(n - i - 1, j) - inc(n - i - 1, j - 1)
            if delta.is_zero:
                continue
            piece = delta.substitute_power(2) * fib(i, s - j - 1).substitute_power(3)
            rhs = rhs + piece.times_monomial(1, i - 1)
    return _judge("ID6", params, started, lhs, rhs)


def verify_eq12(n: int, s: int) -> IdentityReport:
    """Full polynomial minus the overshoot convolution equals the incomplete one."""
    params = {"n": n, "s": s}
    if s < 0 or n < 2 * s + 1:
        return _filtered("EQ12", params)
    started = time.perf_counter()
    lhs = trib.incomplete_tribonacci_poly(n, s)
    acc = ZERO
    for i in range(n - 2 * s):
        acc = acc + trib.overshoot_poly(i, s) * trib.tribonacci_poly(n - 2 * s - i)
    rhs = trib.tribonacci_poly(n) - acc
    return _judge("EQ12", params, started, lhs, rhs)


def verify_eq13(n: int, s: int) -> IdentityReport:
    """Splitting of the full polynomial at a fixed boundary position."""
    params = {"n": n, "s": s}
    if s < 0 or n < 2 * s + 1:
        return _filtered("EQ13", params)
    started = time.perf_counter()
    tp = trib.tribonacci_poly
    lhs = tp(n)
    rhs = (
        tp(n - 2 * s) * tp(2 * s + 1)
        + tp(n - 2 * s - 1) * (tp(2 * s - 1) + tp(2 * s).times_monomial(1, 1))
        + tp(n - 2 * s - 2) * tp(2 * s)
    )
    return _judge("EQ13", params, started, lhs, rhs)


def verify_thm1(n: int, s: int, *, cap: int = tilings.DEFAULT_CAP) -> IdentityReport:
    """Enumerated weight distribution of budget-restricted tilings equals the
    incomplete polynomial formula."""
    params = {"n": n, "s": s}
    if n < 0 or s < 0:
        return _filtered("THM1", params)
    started = time.perf_counter()
    try:
        members = tilings.enumerate_restricted(n, s, cap=cap)
    except tilings.EnumerationCapError:
        elapsed = (time.perf_counter() - started) * 1000.0
        return IdentityReport("THM1", params, RESOURCE_LIMITED, False, elapsed)
    lhs = tilings.weight_distribution(members)
    rhs = trib.incomplete_tribonacci_poly(n + 1, s)
    return _judge("THM1", params, started, lhs, rhs)


# ----------------------------------------------------------------------
# generating functions


def overshoot_generating_series(s: int, order: int) -> TruncatedSeries:
    """z^2 * ((x + z) / (1 - x^2 z))^(s+1); its z^n coefficient is
    ``overshoot_poly(n, s)``."""
    if s < 0:
        raise ValueError(f"overshoot level must be >= 0, got {s}")
    x_sq = X * X
    frac = rational_expand(
        TruncatedSeries([X, ONE], order), TruncatedSeries([ONE, -x_sq], order)
    )
    return (frac ** (s + 1)).shifted(2)


def direct_generating_series(s: int, order: int, *, x1: bool = False) -> TruncatedSeries:
    """Sum of the level-s incomplete family over all admissible indices,
    straight from the defining formulas; coefficients are numbers when x1."""
    if s < 0:
        raise ValueError(f"restriction level must be >= 0, got {s}")
    terms: list[Polynomial | int] = []
    for k in range(order + 1):
        if k < 2 * s + 1:
            terms.append(ZERO)
        elif x1:
            terms.append(trib.incomplete_tribonacci_number(k, s))
        else:
            terms.append(trib.incomplete_tribonacci_poly(k, s))
    return TruncatedSeries(terms, order)


def closed_form_generating_series(
    s: int, order: int, *, x1: bool = False, z2_offset: int = 0
) -> TruncatedSeries:
    """Rational closed form of the level-s generating function, expanded.

    ``z2_offset`` perturbs the z^2 coefficient of the numerator; the catalog
    uses it as a regression control (the perturbed form must not match).
    """
    if s < 0:
        raise ValueError(f"restriction level must be >= 0, got {s}")
    if x1:
        tn = trib.tribonacci_number
        head = [tn(2 * s + 1), tn(2 * s - 1) + tn(2 * s), tn(2 * s) + z2_offset]
        tail = (
            rational_expand(
                TruncatedSeries([1, 1], order), TruncatedSeries([1, -1], order)
            )
            ** (s + 1)
        ).shifted(2)
        denominator = TruncatedSeries([1, -1, -1, -1][: order + 1], order)
    else:
        tp = trib.tribonacci_poly
        x_sq = X * X
        head = [
            tp(2 * s + 1),
            tp(2 * s - 1) + tp(2 * s).times_monomial(1, 1),
            tp(2 * s) + z2_offset,
        ]
        tail = overshoot_generating_series(s, order)
        denominator = TruncatedSeries(
            [ONE, -x_sq, -X, -ONE][: order + 1], order
        )
    numerator = TruncatedSeries(head[: order + 1], order) - tail
    return rational_expand(numerator, denominator).shifted(2 * s + 1)


def verify_thm2(s: int, order: int) -> IdentityReport:
    """Symbolic generating function: closed rational form against the direct sum."""
    params = {"s": s, "order": order}
    if s < 0 or order < 2 * s + 1:
        return _filtered("THM2", params)
    started = time.perf_counter()
    lhs = direct_generating_series(s, order)
    rhs = closed_form_generating_series(s, order)
    return _judge("THM2", params, started, lhs, rhs)


def verify_cor2(s: int, order: int) -> IdentityReport:
    """x = 1 generating function, including the regression control: the
    numerator with its z^2 coefficient shifted by -2 must fail to match."""
    params = {"s": s, "order": order}
    if s < 0 or order < 2 * s + 1:
        return _filtered("COR2", params)
    started = time.perf_counter()
    lhs = direct_generating_series(s, order, x1=True)
    rhs = closed_form_generating_series(s, order, x1=True)
    control = closed_form_generating_series(s, order, x1=True, z2_offset=-2)
    return _judge("COR2", params, started, lhs, rhs, extra_ok=(control != lhs))


# ----------------------------------------------------------------------
# grid sweep

_DEFAULT_N = {
    "EQ4": (1, 18),
    "ID1": (2, 14),
    "ID2": (1, 16),
    "ID3": (1, 16),
    "ID4": (1, 16),
    "ID5": (1, 16),
    "ID6": (0, 14),
    "EQ12": (1, 18),
    "EQ13": (1, 18),
    "THM1": (0, 14),
    "REMARK_A": (1, 20),
}
_DEFAULT_S = {"ID1": (0, 3)}
_FALLBACK_S = (0, 4)
_DEFAULT_H = (1, 4)
_DEFAULT_ORDER = {"REMARK_A": 20, "THM2": 25, "COR2": 25}


def _span(bounds: tuple[int, int]) -> range:
    return range(bounds[0], bounds[1] + 1)


def _reports_for_identity(identity_id: str, cfg: GridConfig) -> Iterator[IdentityReport]:
    n_r = cfg.n_range if cfg.n_range is not None else _DEFAULT_N.get(identity_id)
    s_r = cfg.s_range if cfg.s_range is not None else _DEFAULT_S.get(identity_id, _FALLBACK_S)
    h_r = cfg.h_range if cfg.h_range is not None else _DEFAULT_H
    order = cfg.series_order if cfg.series_order is not None else _DEFAULT_ORDER.get(identity_id)

    if identity_id == "EQ4":
        for n in _span(n_r):
            for s in _span(s_r):
                yield verify_eq4(n, s)
    elif identity_id == "ID1":
        for n in _span(n_r):
            for s in _span(s_r):
                for h in _span(h_r):
                    yield verify_id1(n, s, h)
    elif identity_id == "ID2":
        for n in _span(n_r):
            yield verify_id2(n)
    elif identity_id == "ID3":
        for n in _span(n_r):
            yield verify_id3(n)
    elif identity_id == "REMARK_A":
        # quantified over n up to the order; gated on the n axis
        if n_r[0] <= n_r[1]:
            yield verify_remark_a(order)
    elif identity_id == "ID4":
        for n in _span(n_r):
            for s in _span(s_r):
                yield verify_id4(n, s)
    elif identity_id == "ID5":
        for n in _span(n_r):
            for s in _span(s_r):
                yield verify_id5(n, s)
    elif identity_id == "ID6":
        for n in _span(n_r):
            for s in _span(s_r):
                yield verify_id6(n, s)
    elif identity_id == "EQ12":
        for n in _span(n_r):
            for s in _span(s_r):
                yield verify_eq12(n, s)
    elif identity_id == "EQ13":
        for n in _span(n_r):
            for s in _span(s_r):
                yield verify_eq13(n, s)
    elif identity_id == "THM1":
        for n in _span(n_r):
            s_bounds = cfg.s_range if cfg.s_range is not None else (0, n // 2)
            for s in _span(s_bounds):
                yield verify_thm1(n, s, cap=cfg.cap)
    elif identity_id == "THM2":
        for s in _span(s_r):
            yield verify_thm2(s, order)
    elif identity_id == "COR2":
        for s in _span(s_r):
            yield verify_cor2(s, order)
    else:  # pragma: no cover - guarded by run_grid
        raise ValueError(f"unknown identity id: {identity_id}")


def run_grid(
    config: GridConfig | None = None, identities: Sequence[str] | None = None
) -> list[IdentityReport]:
    """Verify identities over their grids, in catalog order; deterministic."""
    cfg = config if config is not None else GridConfig()
    if identities is None:
        wanted = set(ALL_IDENTITY_IDS)
    else:
        wanted = set(identities)
        unknown = wanted - set(ALL_IDENTITY_IDS)
        if unknown:
            raise ValueError(f"unknown identity ids: {sorted(unknown)}")
    reports: list[IdentityReport] = []
    for identity_id in ALL_IDENTITY_IDS:
        if identity_id in wanted:
            reports.extend(_reports_for_identity(identity_id, cfg))
    return reports


def summarize(reports: Sequence[IdentityReport]) -> dict[str, int]:
    counts = {PASSED: 0, FAILED: 0, FILTERED: 0, RESOURCE_LIMITED: 0}
    for report in reports:
        counts[report.status] += 1
    return counts


def all_passed(reports: Sequence[IdentityReport]) -> bool:
    """True when no point failed (filtered/resource-limited points are not failures)."""
    return not any(report.status == FAILED for report in reports)
