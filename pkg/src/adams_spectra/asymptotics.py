"""Asymptotics of antipode traces against dimensions for rational profiles.

When the dimension generating function h is rational with a unique
dominant singularity R (of multiplicity gamma) that is positive real and
small enough, the trace-to-dimension ratio in degree m behaves like

    R^(m/2) / 2^gamma * ( 1/h(sqrt R) + (-1)^m / h(-sqrt R) ),

provided h does not vanish on the closed disk of radius sqrt(R) and takes
genuinely different values at the two square roots.  Each hypothesis is
checked, exactly where rational arithmetic suffices and at high working
precision otherwise; the first failure raises HypothesisViolated with the
check's name.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath

from .combinatorics import divisors
from .errors import HypothesisViolatedError, InvalidInputError
from .series import RationalFunction, poly_eval, poly_trim

CHECK_ORDER = (
    "expandable_profile",
    "radius_exists",
    "positive_real_singularity",
    "radius_at_most_one",
    "unique_dominant_singularity",
    "nonvanishing_in_disk",
    "distinct_values_at_sqrt",
)


@dataclass(frozen=True)
class RatioEntry:
    degree: int
    predicted: str
    exact: str
    relative_error: str


@dataclass(frozen=True)
class AsymptoticReport:
    precision_bits: int
    tolerance: str
    radius: str
    radius_exact: Optional[str]       # p/q when the pole was found exactly
    gamma: int
    h_at_sqrt: str
    h_at_neg_sqrt: str
    h_star: str
    checks: Tuple[str, ...]
    ratios: Tuple[RatioEntry, ...]

    def to_json(self) -> dict:
        return {
            "precision_bits": self.precision_bits,
            "tolerance": self.tolerance,
            "radius": self.radius,
            "radius_exact": self.radius_exact,
            "gamma": self.gamma,
            "h_at_sqrt": self.h_at_sqrt,
            "h_at_neg_sqrt": self.h_at_neg_sqrt,
            "h_star": self.h_star,
            "checks_passed": list(self.checks),
            "ratios": [
                {
                    "m": r.degree,
                    "predicted": r.predicted,
                    "exact": r.exact,
                    "relative_error": r.relative_error,
                }
                for r in self.ratios
            ],
        }


def _small_divisors(n: int, cap: int = 10**6) -> List[int]:
    n = abs(n)
    if n == 0 or n > cap:
        return []
    return divisors(n)


def _deflate(p: List[Fraction], r: Fraction) -> List[Fraction]:
    """Exact synthetic division of p by (x - r); p(r) must be 0."""
    out: List[Fraction] = []
    acc = p[-1]
    for i in range(len(p) - 2, -1, -1):
        out.append(acc)
        acc = p[i] + acc * r
    return list(reversed(out))


def _rational_roots(poly: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    """Split off rational roots (with multiplicity) by the rational root
    test plus exact deflation.  Returns (roots, deflated polynomial)."""
    p = list(poly_trim(poly))
    roots: List[Fraction] = []
    if len(p) <= 1:
        return roots, p
    scale = 1
    for c in p:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ip = [int(c * scale) for c in p]
    while ip and ip[0] == 0:
        # root at zero (cannot happen for our denominators, kept for safety)
        roots.append(Fraction(0))
        ip = ip[1:]
    candidates = set()
    if len(ip) > 1:
        for a in _small_divisors(ip[0]):
            for b in _small_divisors(ip[-1]):
                candidates.add(Fraction(a, b))
                candidates.add(Fraction(-a, b))
    p = [Fraction(c) for c in ip]
    for r in sorted(candidates, key=lambda x: (abs(x), x < 0)):
        while len(p) > 1 and poly_eval(p, r) == 0:
            p = _deflate(p, r)
            roots.append(r)
    return roots, p


def _numeric_roots(poly: Sequence[Fraction]) -> list:
    p = list(poly_trim(poly))
    if len(p) <= 1:
        return []
    coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p)]
    return list(mpmath.polyroots(coeffs, maxsteps=200, extraprec=200))


def _fail(check: str, detail: str, value=None):
    raise HypothesisViolatedError(
        f"hypothesis {check} fails: {detail}", check=check, value=value)


def asymptotic_ratio(
    f: RationalFunction,
    degrees: Sequence[int],
    precision_bits: int = 128,
    tolerance: float = 1e-20,
) -> AsymptoticReport:
    """Check the hypotheses for the rational dimension OGF f and compare
    predicted trace/dimension ratios with exact values at the given
    degrees."""
    degrees = sorted(set(int(m) for m in degrees))
    if not degrees or degrees[0] < 0:
        raise InvalidInputError("degrees must be nonnegative", value=list(degrees))
    top = degrees[-1]

    with mpmath.workprec(precision_bits):
        tol = mpmath.mpf(tolerance)
        passed: List[str] = []

        # the profile must expand to nonnegative integer dimensions with h_0=1
        h_series = f.taylor(max(top, 2))
        hs = h_series.coeffs
        if hs[0] != 1:
            _fail("expandable_profile", "constant term is not 1",
                  value=f.to_json())
        for m, c in enumerate(hs):
            if c.denominator != 1 or c < 0:
                _fail("expandable_profile",
                      f"coefficient at degree {m} is {c}, not a nonnegative "
                      "integer dimension", value=f.to_json())
        passed.append("expandable_profile")

        exact_poles, rest = _rational_roots(f.den)
        numeric_poles = _numeric_roots(rest)
        all_poles = [(mpmath.mpf(r.numerator) / r.denominator, r)
                     for r in exact_poles]
        all_poles += [(z, None) for z in numeric_poles]
        if not all_poles:
            _fail("radius_exists", "denominator has no roots: h is a polynomial",
                  value=f.to_json())
        passed.append("radius_exists")

        moduli = [mpmath.fabs(z) for z, _ in all_poles]
        rmin = min(moduli)
        dominant = [i for i, mod in enumerate(moduli) if mod <= rmin + tol]
        real_pos = [
            i for i in dominant
            if (all_poles[i][1] is not None and all_poles[i][1] > 0)
            or (all_poles[i][1] is None
                and abs(mpmath.im(all_poles[i][0])) <= tol
                and mpmath.re(all_poles[i][0]) > 0)
        ]
        if not real_pos:
            _fail("positive_real_singularity",
                  f"smallest-modulus pole (|z| = {mpmath.nstr(rmin, 10)}) "
                  "is not positive real", value=f.to_json())
        passed.append("positive_real_singularity")

        r_idx = real_pos[0]
        R_exact = all_poles[r_idx][1]
        R = mpmath.re(all_poles[r_idx][0])
        if R > 1 + tol:
            _fail("radius_at_most_one",
                  f"radius {mpmath.nstr(R, 10)} exceeds 1", value=f.to_json())
        passed.append("radius_at_most_one")

        # uniqueness (with multiplicity gamma) in the disk |z| <= R^(1/4)
        disk = R ** Fraction(1, 4)
        gamma = 0
        for z, ex in all_poles:
            if mpmath.fabs(z) <= disk + tol:
                if (ex is not None and ex == R_exact and R_exact is not None) or \
                   mpmath.fabs(z - R) <= tol:
                    gamma += 1
                else:
                    _fail("unique_dominant_singularity",
                          f"second pole at {mpmath.nstr(z, 10)} inside "
                          f"|z| <= R^(1/4) = {mpmath.nstr(disk, 10)}",
                          value=f.to_json())
        passed.append("unique_dominant_singularity")

        # h must not vanish for |z| <= sqrt(R)
        sqrtR = mpmath.sqrt(R)
        exact_zeros, rest_num = _rational_roots(f.num)
        numeric_zeros = _numeric_roots(rest_num)
        zeros = [mpmath.mpf(r.numerator) / r.denominator for r in exact_zeros]
        zeros += numeric_zeros
        for z in zeros:
            if mpmath.fabs(z) <= sqrtR + tol:
                _fail("nonvanishing_in_disk",
                      f"h vanishes at {mpmath.nstr(z, 10)} with "
                      f"|z| <= sqrt(R) = {mpmath.nstr(sqrtR, 10)}",
                      value=f.to_json())
        # poles on that circle would make h(+-sqrt R) meaningless; the
        # uniqueness check already cleared the open disk except R itself
        if mpmath.fabs(R - sqrtR) <= tol:
            _fail("nonvanishing_in_disk",
                  "dominant pole lies on the circle |z| = sqrt(R)",
                  value=f.to_json())
        passed.append("nonvanishing_in_disk")

        def h_at(x):
            num = mpmath.polyval([mpmath.mpf(c.numerator) / c.denominator
                                  for c in reversed(f.num)], x)
            den = mpmath.polyval([mpmath.mpf(c.numerator) / c.denominator
                                  for c in reversed(f.den)], x)
            return num / den

        h_plus = h_at(sqrtR)
        h_minus = h_at(-sqrtR)
        if mpmath.fabs(h_plus - h_minus) <= tol or \
           mpmath.fabs(h_plus + h_minus) <= tol:
            _fail("distinct_values_at_sqrt",
                  f"h(sqrt R) = {mpmath.nstr(h_plus, 10)} and h(-sqrt R) = "
                  f"{mpmath.nstr(h_minus, 10)} coincide up to sign",
                  value=f.to_json())
        passed.append("distinct_values_at_sqrt")

        # h_star: limit of (1 - z/R)^gamma h(z) at z = R, via exact or
        # numeric deflation of the denominator
        den_poly = [mpmath.mpf(c.numerator) / c.denominator for c in f.den]
        for _ in range(gamma):
            out = []
            acc = den_poly[-1]
            for i in range(len(den_poly) - 2, -1, -1):
                out.append(acc)
                acc = den_poly[i] + acc * R
            den_poly = list(reversed(out))
        num_at_R = mpmath.polyval(
            [mpmath.mpf(c.numerator) / c.denominator
             for c in reversed(f.num)], R)
        den_tilde_at_R = mpmath.polyval(list(reversed(den_poly)), R)
        h_star = ((-1) ** gamma) * num_at_R / (R**gamma * den_tilde_at_R)

        # exact ratios from the trace generating function h(t^2)/h(t)
        a = f.substitute_square() / f
        a_series = a.taylor(top)
        ratios: List[RatioEntry] = []
        for m in degrees:
            hm = hs[m]
            am = a_series.coefficient(m)
            pred = (R ** (mpmath.mpf(m) / 2) / 2**gamma) * \
                (1 / h_plus + (-1) ** m / h_minus)
            if hm == 0:
                ratios.append(RatioEntry(m, mpmath.nstr(pred, 25),
                                         "undefined (h_m = 0)", "inf"))
                continue
            exact = Fraction(am, hm)
            exact_mp = mpmath.mpf(exact.numerator) / exact.denominator
            if exact_mp == 0:
                rel = mpmath.fabs(pred - exact_mp)
            else:
                rel = mpmath.fabs(pred - exact_mp) / mpmath.fabs(exact_mp)
            ratios.append(RatioEntry(
                degree=m,
                predicted=mpmath.nstr(pred, 25),
                exact=str(exact),
                relative_error=mpmath.nstr(rel, 8),
            ))

        return AsymptoticReport(
            precision_bits=precision_bits,
            tolerance=mpmath.nstr(tol, 5),
            radius=mpmath.nstr(R, 25),
            radius_exact=str(R_exact) if R_exact is not None else None,
            gamma=gamma,
            h_at_sqrt=mpmath.nstr(h_plus, 25),
            h_at_neg_sqrt=mpmath.nstr(h_minus, 25),
            h_star=mpmath.nstr(h_star, 25),
            checks=tuple(passed),
            ratios=tuple(ratios),
        )
