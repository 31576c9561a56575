"""Compound asymptotic expansions: dominant, intermediate (n = 5) and subdominant levels.

For x -> +infinity the recombined real expansions are, per exponential level,

  dominant (all n):
      2 A0 x^theta e^(x cos(pi/n)) sum_j c_j x^(-j) cos(x sin(pi/n) + pi(theta-j)/n)

  subdominant:
      n=3:  2 A0 cos(pi(a-b)) x^theta e^(-x) sum_j (-)^j c_j x^(-j)
      n=4: -2 A0 x^theta e^(x cos(3pi/4)) sum_j c_j x^(-j)
               { cos(phi_j) sum_r cos(2 pi b_r) - sin(phi_j) sum_r sin(2 pi b_r) },
           phi_j = x sin(3pi/4) + 3 pi (theta-j)/4
      n=5:  2 A0 [sum_{r<=3} cos(pi(theta + 2 b_r + 2 b_4))] x^theta e^(-x)
               sum_j (-)^j c_j x^(-j)

  intermediate (n = 5 only):
      -2 A0 x^theta e^(x cos(3pi/5)) sum_j c_j x^(-j)
               { cos(phi_j) sum_r cos(2 pi b_r) - sin(phi_j) sum_r sin(2 pi b_r) },
      phi_j = x sin(3pi/5) + 3 pi (theta-j)/5.

Optimal truncation cuts each sum at the least magnitude |c_j| x^(-j) over the
available coefficient table (oscillatory cosine factors excluded from the
magnitude, so all levels share one index).
"""

import enum
from dataclasses import dataclass
from math import ceil

from mpmath import mp

from .coeffs import CoeffTable, stirling_matching_coeffs
from .errors import CoeffShortfall, DomainError, NoMinimumDetected, OrderUnsupported
from .params import ExpansionParams
from .precision import check_dps, to_mpf
from .reference import METHOD_ASYMPTOTIC, METHOD_COMPOUND, EvalResult, series_eval


class Kind(enum.Enum):
    DOMINANT = "dominant"
    INTERMEDIATE = "intermediate"
    SUBDOMINANT = "subdominant"


@dataclass(frozen=True)
class AsymSeriesSpec:
    """One exponential level of the compound expansion, bound to its coefficients."""

    params: ExpansionParams
    coeffs: CoeffTable
    kind: Kind

    def __post_init__(self):
        if self.kind is Kind.INTERMEDIATE and self.params.n != 5:
            raise OrderUnsupported("the intermediate level exists only for n = 5")
        if self.coeffs.params != self.params:
            raise ValueError("coefficient table belongs to different parameters")


def _check_args(params, coeffs, x, M, dps):
    if coeffs.params != params:
        raise ValueError("coefficient table belongs to different parameters")
    if M < 1:
        raise ValueError("need at least one term")
    if M > len(coeffs):
        raise CoeffShortfall(f"requested {M} terms but the table holds {len(coeffs)}")
    working = check_dps(dps) if dps is not None else params.dps
    with mp.workdps(working):
        xm = to_mpf(x, working)
    if xm <= 0:
        raise DomainError(f"asymptotic series require x > 0, got {xm}")
    return xm, working


def _trace(coeffs, xm, M):
    return tuple(abs(coeffs[j]) * xm ** (-j) for j in range(M))


def _result(value, trace, error, M):
    return EvalResult(value=value, method=METHOD_ASYMPTOTIC, terms_used=M,
                      max_term_magnitude=max(trace), error_estimate=abs(error),
                      term_trace=trace)


def dominant_series(params, coeffs, x, M, dps=None):
    """Truncated dominant expansion (M terms, j = 0..M-1)."""
    xm, working = _check_args(params, coeffs, x, M, dps)
    n = params.n
    with mp.workdps(working):
        theta = to_mpf(params.theta, working)
        a0 = to_mpf(params.A0, working) if working > params.dps else params.A0
        pref = 2 * a0 * xm ** theta * mp.exp(xm * mp.cospi(mp.mpf(1) / n))
        osc = xm * mp.sinpi(mp.mpf(1) / n)
        total = mp.mpf(0)
        for j in range(M):
            total += coeffs[j] * xm ** (-j) * mp.cos(osc + mp.pi * (theta - j) / n)
        trace = _trace(coeffs, xm, M)
        omitted = abs(coeffs[M]) * xm ** (-M) if M < len(coeffs) else trace[-1]
        return _result(pref * total, trace, abs(pref) * omitted, M)


def _cos_sin_sums(params, working):
    c = sum(mp.cospi(to_mpf(2 * br, working)) for br in params.b_list)
    s = sum(mp.sinpi(to_mpf(2 * br, working)) for br in params.b_list)
    return c, s


def subdominant_series(params, coeffs, x, M, dps=None):
    """Truncated exponentially small expansion (M terms)."""
    xm, working = _check_args(params, coeffs, x, M, dps)
    n = params.n
    with mp.workdps(working):
        theta = to_mpf(params.theta, working)
        a0 = to_mpf(params.A0, working) if working > params.dps else params.A0
        trace = _trace(coeffs, xm, M)
        if n == 3:
            a, b = params.b_list
            parity = mp.cospi(to_mpf(a - b, working))  # exact 0 at half-integer a-b
            pref = 2 * a0 * parity * xm ** theta * mp.exp(-xm)
            total = mp.mpf(0)
            for j in range(M):
                total += (-1) ** j * coeffs[j] * xm ** (-j)
        elif n == 4:
            csum, ssum = _cos_sin_sums(params, working)
            pref = -2 * a0 * xm ** theta * mp.exp(xm * mp.cospi(mp.mpf(3) / 4))
            osc = xm * mp.sinpi(mp.mpf(3) / 4)
            total = mp.mpf(0)
            for j in range(M):
                phi = osc + 3 * mp.pi * (theta - j) / 4
                total += coeffs[j] * xm ** (-j) * (mp.cos(phi) * csum - mp.sin(phi) * ssum)
        else:
            b4 = params.b_list[3]
            fac = sum(mp.cospi(to_mpf(params.theta + 2 * br + 2 * b4, working))
                      for br in params.b_list[:3])
            pref = 2 * a0 * fac * xm ** theta * mp.exp(-xm)
            total = mp.mpf(0)
            for j in range(M):
                total += (-1) ** j * coeffs[j] * xm ** (-j)
        omitted = abs(coeffs[M]) * xm ** (-M) if M < len(coeffs) else trace[-1]
        return _result(pref * total, trace, abs(pref) * omitted, M)


def intermediate_series_n5(params, coeffs, x, M, dps=None):
    """Truncated middle exponential level, which exists only for n = 5."""
    if params.n != 5:
        raise OrderUnsupported("the intermediate level exists only for n = 5")
    xm, working = _check_args(params, coeffs, x, M, dps)
    with mp.workdps(working):
        theta = to_mpf(params.theta, working)
        a0 = to_mpf(params.A0, working) if working > params.dps else params.A0
        csum, ssum = _cos_sin_sums(params, working)
        pref = -2 * a0 * xm ** theta * mp.exp(xm * mp.cospi(mp.mpf(3) / 5))
        osc = xm * mp.sinpi(mp.mpf(3) / 5)
        total = mp.mpf(0)
        for j in range(M):
            phi = osc + 3 * mp.pi * (theta - j) / 5
            total += coeffs[j] * xm ** (-j) * (mp.cos(phi) * csum - mp.sin(phi) * ssum)
        trace = _trace(coeffs, xm, M)
        omitted = abs(coeffs[M]) * xm ** (-M) if M < len(coeffs) else trace[-1]
        return _result(pref * total, trace, abs(pref) * omitted, M)


def optimal_truncation_index(coeffs, x, kind=Kind.DOMINANT):
    """Index of the least magnitude |c_j| x^(-j) over the table.

    The coefficient magnitudes oscillate, so the scan takes the global least
    term of the available table rather than the first local dip (shallow
    pre-asymptotic dips would truncate far too early).  If the least term
    sits at the very end of the table the minimum is unconfirmed and
    NoMinimumDetected is raised: extend the table.
    """
    if kind is Kind.INTERMEDIATE and coeffs.params.n != 5:
        raise OrderUnsupported("the intermediate level exists only for n = 5")
    if len(coeffs) < 2:
        raise NoMinimumDetected("need at least two coefficients")
    mags = coeffs.term_magnitudes(x)
    best = 0
    for j in range(1, len(mags)):
        if mags[j] < mags[best]:
            best = j
    if best == len(mags) - 1:
        raise NoMinimumDetected(
            f"term magnitudes still decreasing at the end of a {len(coeffs)}-coefficient table")
    return best


OPTIMAL = "optimal"


def _table_for(params, x, truncation):
    if truncation == OPTIMAL:
        m = max(32, ceil(2.0 * float(to_mpf(x, 30))) + 16)
        for _ in range(3):
            table = stirling_matching_coeffs(params, m)
            try:
                j0 = optimal_truncation_index(table, x)
                return table, j0
            except NoMinimumDetected:
                m = ceil(m * 1.5)
        raise NoMinimumDetected(f"no confirmed least term within {m} coefficients")
    m = int(truncation)
    if m < 1:
        raise ValueError("fixed truncation must request at least one term")
    return stirling_matching_coeffs(params, max(m + 1, 2)), m - 1


def compound_eval(params, x, truncation=OPTIMAL, dps=None):
    """Dominant (+ intermediate for n = 5) + subdominant, jointly truncated.

    ``truncation`` is either ``"optimal"`` (least-term index, one shared index
    since all levels carry the same |c_j| x^(-j) trace) or an integer M (use
    exactly M terms per level).  ``error_estimate`` is the magnitude of the
    first omitted dominant term, prefactor included.
    """
    table, j0 = _table_for(params, x, truncation)
    m_used = j0 + 1
    working = check_dps(dps) if dps is not None else params.dps
    dom = dominant_series(params, table, x, m_used, dps=working)
    sub = subdominant_series(params, table, x, m_used, dps=working)
    with mp.workdps(working):
        value = dom.value + sub.value
        if params.n == 5:
            value += intermediate_series_n5(params, table, x, m_used, dps=working).value
    return EvalResult(value=value, method=METHOD_COMPOUND, terms_used=m_used,
                      max_term_magnitude=dom.max_term_magnitude,
                      error_estimate=dom.error_estimate, term_trace=dom.term_trace)


def _residual_target_digits(x):
    # resolve the e^(-x) level under e^(x cos(pi/n)) with several digits spare
    return ceil(0.8 * float(to_mpf(x, 30))) + 12


def residual_F(params, x, j0, dps=None):
    """F_n(x) minus the dominant expansion summed through index j0 (inclusive).

    This is the numerically extracted exponentially small residual; compare it
    with ``subdominant_series`` (plus the intermediate level for n = 5).
    """
    if j0 < 0:
        raise ValueError("truncation index must be non-negative")
    target = _residual_target_digits(x)
    from .precision import auto_series_dps
    working = check_dps(dps) if dps is not None else auto_series_dps(x, target)
    base = series_eval(params, x, target_digits=target, dps=working)
    table = stirling_matching_coeffs(params, j0 + 2)
    dom = dominant_series(params, table, x, j0 + 1, dps=working)
    with mp.workdps(working):
        return base.value - dom.value


def subdominant_optimal(params, x, table=None, dps=None):
    """Subdominant expansion summed to its own least term; returns (value, index)."""
    if table is None:
        table, j0 = _table_for(params, x, OPTIMAL)
    else:
        j0 = optimal_truncation_index(table, x, Kind.SUBDOMINANT)
    return subdominant_series(params, table, x, j0 + 1, dps=dps).value, j0


def exp_small_optimal(params, x, table=None, dps=None):
    """All below-dominant levels at their least term (the residual's counterpart).

    For n = 3 and n = 4 this is just the subdominant expansion; for n = 5 it
    also includes the middle exponential level.  Returns (value, index).
    """
    if table is None:
        table, j0 = _table_for(params, x, OPTIMAL)
    else:
        j0 = optimal_truncation_index(table, x, Kind.SUBDOMINANT)
    working = check_dps(dps) if dps is not None else params.dps
    value = subdominant_series(params, table, x, j0 + 1, dps=working).value
    if params.n == 5:
        with mp.workdps(working):
            value += intermediate_series_n5(params, table, x, j0 + 1, dps=working).value
    return value, j0
