"""Ground-truth evaluation by direct series summation, plus exact closed forms.

The central object is

    F_n(x) = sum_{k>=0} (-)^k (x/n)^(n k) / (Gamma(k+b_1) ... Gamma(k+b_{n-1}) k!),

an entire function whose terms peak near k ~ x/n at magnitude ~e^x while the
sum itself is only ~e^(x cos(pi/n)); the working precision chosen by
``auto_series_dps`` absorbs that cancellation.  The Humbert hyper-Bessel
function is the rescaled n = 3 case

    J_{m,nu}(x) = (x/3)^(m+nu) F_3(x; b = (m+1, nu+1)).
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .errors import DomainError, PrecisionInsufficient, TailNotConverged
from .params import derive_params
from .precision import auto_series_dps, check_dps, to_fraction, to_mpf

METHOD_SERIES = "series"
METHOD_CLOSED_FORM = "closed-form"
METHOD_ASYMPTOTIC = "asymptotic"
METHOD_COMPOUND = "compound"


@dataclass(frozen=True)
class EvalResult:
    """One evaluation: value plus convergence/cancellation diagnostics.

    ``error_estimate`` is absolute.  ``max_term_magnitude`` exposes how much
    cancellation occurred: digits lost ~ log10(max_term / |value|).
    """

    value: object
    method: str
    terms_used: int
    max_term_magnitude: object
    error_estimate: object
    term_trace: tuple = ()

    @property
    def digits_lost(self):
        if self.value == 0 or self.max_term_magnitude == 0:
            return mp.mpf(0)
        return mp.log10(abs(self.max_term_magnitude) / abs(self.value))


def series_eval(params, x, target_digits=20, dps=None):
    """Sum F_n(x) directly until the tail is provably below the target.

    Terms are accumulated by the ratio recurrence
    t_{k+1} = -t_k (x/n)^n / ((k+1) prod_j (k+b_j)); summation stops once the
    magnitudes have passed their peak, the next ratio is below 1/2 (so a
    geometric tail bound applies) and the current term is 10 digits below the
    target relative to the accumulated sum (floored at the rounding noise, so
    a transient zero of the partial sum cannot stall termination).
    ``error_estimate`` is the resulting tail bound 2|t_K|.

    Raises PrecisionInsufficient when accumulated rounding noise (or a
    near-zero of F) makes the relative target unreachable at the working
    precision.
    """
    working = check_dps(dps) if dps is not None else auto_series_dps(x, target_digits)
    with mp.workdps(working):
        xm = to_mpf(x, working)
        if xm < 0:
            raise DomainError(f"x must be non-negative, got {xm}")
        bs = params.b_mp if params.dps >= working else tuple(to_mpf(b, working) for b in params.b_list)
        n = params.n
        big_x = (xm / n) ** n
        term = 1 / mp.fprod([mp.gamma(bj) for bj in bs])
        total = term
        max_term = abs(term)
        trace = [abs(term)]
        peak_passed = False
        k = 0
        stop_threshold = mp.mpf(10) ** (-target_digits - 10)
        while True:
            ratio = -big_x / ((k + 1) * mp.fprod([k + bj for bj in bs]))
            term = term * ratio
            total += term
            k += 1
            mag = abs(term)
            trace.append(mag)
            if mag > max_term:
                max_term = mag
            elif mag < trace[-2]:
                peak_passed = True
            next_ratio = abs(big_x / ((k + 1) * mp.fprod([k + bj for bj in bs])))
            scale = max(abs(total), max_term * mp.mpf(10) ** (-working))
            if peak_passed and next_ratio <= mp.mpf("0.5") and mag <= stop_threshold * scale:
                break
            if k > 200 * working:
                raise PrecisionInsufficient(f"series did not terminate within {k} terms")
        error = 2 * mag
        rounding = (k + 1) * max_term * mp.mpf(10) ** (1 - working)
        if abs(total) == 0 or rounding + error > mp.mpf(10) ** (-target_digits) * abs(total):
            raise PrecisionInsufficient(
                f"cannot certify {target_digits} digits at {working} dps "
                f"(cancellation {mp.nstr(max_term, 3)} vs value {mp.nstr(total, 3)})")
        return EvalResult(value=total, method=METHOD_SERIES, terms_used=k + 1,
                          max_term_magnitude=max_term, error_estimate=error,
                          term_trace=tuple(trace))


class ClosedFormCase(enum.Enum):
    """Parameter sets with an exact elementary evaluation."""

    N3_THIRDS = "n3:(1/3,2/3)"
    N3_FOUR_FIVE_THIRDS = "n3:(4/3,5/3)"
    N4_QUARTERS = "n4:(1/4,1/2,3/4)"
    N5_FIFTHS = "n5:(1/5,2/5,3/5,4/5)"

    @property
    def order(self):
        return {ClosedFormCase.N3_THIRDS: 3, ClosedFormCase.N3_FOUR_FIVE_THIRDS: 3,
                ClosedFormCase.N4_QUARTERS: 4, ClosedFormCase.N5_FIFTHS: 5}[self]

    @property
    def b_list(self):
        return {
            ClosedFormCase.N3_THIRDS: (Fraction(1, 3), Fraction(2, 3)),
            ClosedFormCase.N3_FOUR_FIVE_THIRDS: (Fraction(4, 3), Fraction(5, 3)),
            ClosedFormCase.N4_QUARTERS: (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)),
            ClosedFormCase.N5_FIFTHS: (Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5)),
        }[self]


def closed_form_eval(case, x, precision=None):
    """Exact elementary formula for the four special parameter sets.

    N3_FOUR_FIVE_THIRDS carries an x^(-2) prefactor and requires x > 0.
    """
    dps = check_dps(precision) if precision is not None else 50
    with mp.workdps(dps):
        xm = to_mpf(x, dps)
        if xm < 0:
            raise DomainError(f"x must be non-negative, got {xm}")
        if case is ClosedFormCase.N3_THIRDS:
            value = 3 ** mp.mpf("-0.5") / (2 * mp.pi) * (
                2 * mp.exp(xm / 2) * mp.cos(mp.sqrt(3) / 2 * xm) + mp.exp(-xm))
        elif case is ClosedFormCase.N3_FOUR_FIVE_THIRDS:
            if xm == 0:
                raise DomainError("x = 0 not allowed: the formula carries an x^(-2) prefactor")
            value = 3 ** mp.mpf("1.5") / (2 * mp.pi * xm ** 2) * (
                2 * mp.exp(xm / 2) * mp.cos(mp.sqrt(3) / 2 * xm - 2 * mp.pi / 3) + mp.exp(-xm))
        elif case is ClosedFormCase.N4_QUARTERS:
            a0 = mp.mpf(4) ** mp.mpf("-0.5") / (2 * mp.pi) ** mp.mpf("1.5")
            value = 4 * a0 * mp.cos(xm / mp.sqrt(2)) * mp.cosh(xm / mp.sqrt(2))
        elif case is ClosedFormCase.N5_FIFTHS:
            a0 = mp.mpf(5) ** mp.mpf("-0.5") / (2 * mp.pi) ** 2
            value = a0 * (2 * mp.exp(xm * mp.cospi(mp.mpf(1) / 5)) * mp.cos(xm * mp.sinpi(mp.mpf(1) / 5))
                          + 2 * mp.exp(xm * mp.cospi(mp.mpf(3) / 5)) * mp.cos(xm * mp.sinpi(mp.mpf(3) / 5))
                          + mp.exp(-xm))
        else:
            raise ValueError(f"unknown case {case!r}")
        return EvalResult(value=value, method=METHOD_CLOSED_FORM, terms_used=1,
                          max_term_magnitude=abs(value), error_estimate=abs(value) * mp.mpf(10) ** (5 - dps))


def humbert_J(m, nu, x, target_digits=20, dps=None):
    """The hyper-Bessel function J_{m,nu}(x) = (x/3)^(m+nu) F_3(x; m+1, nu+1).

    The orders need not be integers; m+1 and nu+1 must avoid the gamma poles.
    x = 0 requires m + nu >= 0 (J = 1 at m + nu = 0, else 0).
    """
    m = to_fraction(m)
    nu = to_fraction(nu)
    power = m + nu
    x_frac_zero = to_mpf(x, 30) == 0
    if x_frac_zero and power < 0:
        raise DomainError("x = 0 requires m + nu >= 0")
    working = check_dps(dps) if dps is not None else auto_series_dps(x, target_digits)
    params = derive_params(3, (m + 1, nu + 1), precision=working)
    if x_frac_zero and power > 0:
        with mp.workdps(working):
            return EvalResult(value=mp.mpf(0), method=METHOD_SERIES, terms_used=1,
                              max_term_magnitude=mp.mpf(0), error_estimate=mp.mpf(0))
    base = series_eval(params, x, target_digits=target_digits, dps=working)
    with mp.workdps(working):
        scale = 1 if power == 0 else (to_mpf(x, working) / 3) ** to_mpf(power, working)
        return EvalResult(value=scale * base.value, method=base.method,
                          terms_used=base.terms_used,
                          max_term_magnitude=abs(scale) * base.max_term_magnitude,
                          error_estimate=abs(scale) * base.error_estimate,
                          term_trace=base.term_trace)


def humbert_identity_check(x, lam, N, target_digits=20, dps=None):
    """Partial sum of sum_k (-lam*x/3)^k / k! J_{k,k}(x) against J_{0,0}(x (1+lam)^(1/3)).

    Returns (lhs, rhs, |lhs - rhs|).  Raises TailNotConverged when the first
    omitted outer term still exceeds the 10^(-target) tolerance.
    """
    lam = to_fraction(lam)
    if lam < -1:
        raise DomainError("need 1 + lam >= 0 so the right-hand argument is real")
    working = check_dps(dps) if dps is not None else max(auto_series_dps(x, target_digits) + 10, 50)
    with mp.workdps(working):
        xm = to_mpf(x, working)
        lam_m = to_mpf(lam, working)
        lhs = mp.mpf(0)
        outer = mp.mpf(1)  # (-lam x/3)^k / k!
        for k in range(N + 1):
            jkk = humbert_J(k, k, xm, target_digits=target_digits + 10, dps=working)
            lhs += outer * jkk.value
            outer = outer * (-lam_m * xm / 3) / (k + 1)
        tol = mp.mpf(10) ** (-target_digits)
        if outer != 0:
            omitted = abs(outer) * abs(humbert_J(N + 1, N + 1, xm,
                                                 target_digits=10, dps=working).value)
            if omitted > tol:
                raise TailNotConverged(
                    f"omitted term at k={N + 1} still {mp.nstr(omitted, 3)} > {mp.nstr(tol, 3)}")
        arg = xm * (1 + lam_m) ** (mp.mpf(1) / 3)
        rhs = humbert_J(0, 0, arg, target_digits=target_digits + 10, dps=working).value
        return lhs, rhs, abs(lhs - rhs)
