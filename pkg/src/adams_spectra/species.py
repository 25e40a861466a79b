"""Exponential analogue: spectra for connected Hopf monoids in species.

Here dimension data is an exponential generating function h with h = exp(p)
for the primitive-part EGF p, and the convolution-power spectrum in
cardinality m is prod (x - n^k)^expmul(k, m) with

    expmul(k, m) = (m! / k!) [t^m] p(t)^k,

the coefficients of exp(s p(t)).  The antipode trace generating function is
the reciprocal EGF 1/h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import (
    DegreeOutOfRangeError,
    InvalidInputError,
    NotRealizableError,
)
from .series import Series, one_series
from .spectra import Rational, SpectrumFactorization

SPECIES_PRESETS = ("Sigma", "Pi", "L", "E")


@dataclass(frozen=True)
class SpeciesProfile:
    """EGF dimension data of a connected Hopf monoid: h_m counts structures
    on m labelled points, p is log h (primitive part)."""

    max_degree: int
    h: Tuple[Fraction, ...]      # analytic coefficients: h_m / m!
    p: Tuple[Fraction, ...]      # analytic coefficients of log h
    source: str

    @staticmethod
    def from_h(h: Sequence, source: str = "h") -> "SpeciesProfile":
        coeffs = [Fraction(x) for x in h]
        if not coeffs or coeffs[0] != 1:
            raise InvalidInputError(
                "species dimensions must start with h_0 = 1",
                value=[str(x) for x in coeffs[:3]])
        M = len(coeffs) - 1
        analytic = [c / math.factorial(m) for m, c in enumerate(coeffs)]
        p = Series(analytic, M).log()
        return SpeciesProfile(M, tuple(analytic), tuple(p.coeffs), source)

    @staticmethod
    def from_p(p_dims: Sequence, source: str = "p") -> "SpeciesProfile":
        coeffs = [Fraction(x) for x in p_dims]
        if coeffs and coeffs[0] != 0:
            raise InvalidInputError(
                "primitive dimensions must start with p_0 = 0",
                value=[str(x) for x in coeffs[:3]])
        M = len(coeffs) - 1 if coeffs else 0
        analytic = [c / math.factorial(m) for m, c in enumerate(coeffs)]
        h = Series(analytic, M).exp()
        return SpeciesProfile(M, tuple(h.coeffs), tuple(analytic), source)

    @staticmethod
    def preset(name: str, max_degree: int) -> "SpeciesProfile":
        return species_preset(name, max_degree)

    def dimensions(self) -> List[int]:
        """h_m as integers."""
        out = []
        for m, c in enumerate(self.h):
            x = c * math.factorial(m)
            if x.denominator != 1:
                raise NotRealizableError(
                    f"species dimension at {m} is not an integer: {x}")
            out.append(int(x))
        return out

    def primitive_dimensions(self) -> List[Fraction]:
        return [c * math.factorial(m) for m, c in enumerate(self.p)]

    def check_degree(self, m: int) -> None:
        if not 0 <= m <= self.max_degree:
            raise DegreeOutOfRangeError(
                f"degree {m} outside 0..{self.max_degree}", value=m)

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "h": [str(x) for x in self.dimensions()],
            "p": [str(x) for x in self.primitive_dimensions()],
            "source": self.source,
        }


def species_preset(name: str, max_degree: int) -> SpeciesProfile:
    M = max_degree
    if name == "Sigma":
        # compositions of finite sets: h = 1/(2 - exp(t))
        denom = [Fraction(1)] + [Fraction(-1, math.factorial(m))
                                 for m in range(1, M + 1)]
        h = one_series(M) / Series(denom, M)
        dims = [c * math.factorial(m) for m, c in enumerate(h.coeffs)]
        return SpeciesProfile.from_h(dims, source="Sigma")
    if name == "Pi":
        # set partitions: primitives are nonempty sets, p_m = 1 for m >= 1
        return SpeciesProfile.from_p([0] + [1] * M, source="Pi")
    if name == "L":
        # linear orders: h_m = m!
        return SpeciesProfile.from_h(
            [math.factorial(m) for m in range(M + 1)], source="L")
    if name == "E":
        # sets: h_m = 1
        return SpeciesProfile.from_h([1] * (M + 1), source="E")
    raise InvalidInputError(
        f"unknown species preset {name!r}; known: {', '.join(SPECIES_PRESETS)}",
        value=name)


def free_on_primitives(p_dims: Sequence, max_degree: Optional[int] = None,
                       source: str = "L(P)") -> SpeciesProfile:
    """Profile of the free (associative) Hopf monoid on a positive species
    with the given dimensions: h = 1/(1 - p).  The caller asserts that the
    underlying object really is free; only dimensions are checked here."""
    coeffs = [Fraction(x) for x in p_dims]
    if coeffs and coeffs[0] != 0:
        raise InvalidInputError(
            "primitive dimensions must start with p_0 = 0",
            value=[str(x) for x in coeffs[:3]])
    M = (len(coeffs) - 1 if coeffs else 0) if max_degree is None else max_degree
    analytic = [c / math.factorial(m) for m, c in enumerate(coeffs)]
    analytic = (analytic + [Fraction(0)] * (M + 1))[: M + 1]
    h = one_series(M) / (one_series(M) - Series(analytic, M))
    dims = [c * math.factorial(m) for m, c in enumerate(h.coeffs)]
    return SpeciesProfile.from_h(dims, source=source)


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------

def species_expmul(profile: SpeciesProfile, max_degree: Optional[int] = None
                   ) -> List[List[int]]:
    """Table expmul[k][m] = (m!/k!) [t^m] p^k; rows k, columns m.

    Raises NotRealizable when any entry is negative or non-integral, since
    the multiplicities of an actual Hopf monoid are dimensions.
    """
    M = profile.max_degree if max_degree is None else max_degree
    profile.check_degree(M)
    p = Series(list(profile.p[: M + 1]), M)
    table = [[0] * (M + 1) for _ in range(M + 1)]
    power = one_series(M)
    for k in range(M + 1):
        for m in range(M + 1):
            x = power.coefficient(m) * Fraction(math.factorial(m),
                                                math.factorial(k))
            if x.denominator != 1:
                raise NotRealizableError(
                    f"multiplicity at (k={k}, m={m}) is not an integer: {x}",
                    value=profile.source)
            if x < 0:
                raise NotRealizableError(
                    f"multiplicity at (k={k}, m={m}) is negative: {x}",
                    value=profile.source)
            table[k][m] = int(x)
        power = power * p
    return table


def species_char_poly(profile: SpeciesProfile, n: Rational, m: int
                      ) -> SpectrumFactorization:
    """Factored characteristic polynomial of the n-th convolution power in
    cardinality m."""
    profile.check_degree(m)
    table = species_expmul(profile, m)
    factors = tuple((k, table[k][m]) for k in range(m + 1) if table[k][m])
    return SpectrumFactorization(scalar=Fraction(n), degree=m, factors=factors)


def species_antipode_trace(profile: SpeciesProfile,
                           max_degree: Optional[int] = None) -> List[int]:
    """Antipode traces via the reciprocal EGF: trace_m = m! [t^m] (1/h)."""
    M = profile.max_degree if max_degree is None else max_degree
    profile.check_degree(M)
    inv = one_series(M) / Series(list(profile.h[: M + 1]), M)
    out = []
    for m in range(M + 1):
        x = inv.coefficient(m) * math.factorial(m)
        if x.denominator != 1:
            raise NotRealizableError(
                f"antipode trace at degree {m} is not an integer: {x}",
                value=profile.source)
        out.append(int(x))
    return out


def assembly_trace(p_dims: Sequence, max_degree: Optional[int] = None
                   ) -> List[int]:
    """Signed fixed-point counts m! [t^m] exp(-p) for the assembly EGF of a
    positive species with the given dimensions."""
    coeffs = [Fraction(x) for x in p_dims]
    if coeffs and coeffs[0] != 0:
        raise InvalidInputError(
            "primitive dimensions must start with p_0 = 0",
            value=[str(x) for x in coeffs[:3]])
    M = (len(coeffs) - 1 if coeffs else 0) if max_degree is None else max_degree
    analytic = [-c / math.factorial(m) for m, c in enumerate(coeffs)]
    analytic = (analytic + [Fraction(0)] * (M + 1))[: M + 1]
    e = Series(analytic, M).exp()
    out = []
    for m in range(M + 1):
        x = e.coefficient(m) * math.factorial(m)
        if x.denominator != 1:
            raise NotRealizableError(
                f"assembly trace at degree {m} is not an integer: {x}")
        out.append(int(x))
    return out
