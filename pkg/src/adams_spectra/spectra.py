"""Spectra of convolution powers of the identity from dimension data alone.

A graded connected Hopf algebra over a characteristic-zero field is
determined, for spectral purposes, by its dimension sequence h_m: the
characteristic polynomial of the m-th graded piece of the n-th convolution
power of the identity is

    prod over k of (x - n^k)^(mult(k, m)),

where mult(k, m) counts multisets of k generators of total degree m drawn
from the generator counts g obtained by inverting the Euler transform of h.
The multiplicities do not depend on n; the antipode is the case n = -1.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .combinatorics import (
    alphabet_counts,
    multiplicity_table,
    multiset_binom,
    witt_counts,
    word_counts,
)
from .errors import (
    DegreeOutOfRangeError,
    InvalidInputError,
    NotApplicableError,
    NotRationalError,
    NotRealizableError,
)
from .series import (
    RationalFunction,
    Series,
    euler_transform,
    inverse_euler_transform,
    one_series,
)

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# dimension profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DimensionProfile:
    """Dimension data of a graded connected Hopf algebra up to max_degree.

    h[m] is the dimension in degree m (h[0] = 1), g[i-1] the generator
    count in degree i recovered from h, and v the alphabet sizes when the
    dimensions are those of words over a weighted alphabet (h = 1/(1-v(t))
    with nonnegative integer v), else None.  ogf carries an exact rational
    form of sum h_m t^m when one is known.
    """

    max_degree: int
    h: Tuple[int, ...]
    g: Tuple[int, ...]
    v: Optional[Tuple[int, ...]]
    source: str
    realizable: bool
    ogf: Optional[RationalFunction] = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_h(h: Sequence[int], force: bool = False,
               source: str = "h", ogf: Optional[RationalFunction] = None
               ) -> "DimensionProfile":
        hh = tuple(int(x) for x in h)
        if any(int(x) != x for x in h):
            raise InvalidInputError("dimensions must be integers", value=list(h))
        g = tuple(inverse_euler_transform(hh, allow_negative=force))
        realizable = all(x >= 0 for x in g)
        return DimensionProfile(
            max_degree=len(hh) - 1, h=hh, g=g, v=_alphabet_candidate(hh),
            source=source, realizable=realizable, ogf=ogf)

    @staticmethod
    def from_g(g: Sequence[int], max_degree: Optional[int] = None,
               force: bool = False, source: str = "g",
               ogf: Optional[RationalFunction] = None) -> "DimensionProfile":
        gg = list(int(x) for x in g)
        M = len(gg) if max_degree is None else max_degree
        gg = (gg + [0] * M)[:M]
        realizable = all(x >= 0 for x in gg)
        if not realizable and not force:
            bad = next(i for i, x in enumerate(gg, start=1) if x < 0)
            raise NotRealizableError(
                f"generator count g_{bad} = {gg[bad - 1]} is negative",
                value=list(g))
        h = tuple(euler_transform(gg, M).integer_coeffs())
        return DimensionProfile(
            max_degree=M, h=h, g=tuple(gg), v=_alphabet_candidate(h),
            source=source, realizable=realizable, ogf=ogf)

    @staticmethod
    def from_v(v: Sequence[int], max_degree: Optional[int] = None,
               source: str = "v", ogf: Optional[RationalFunction] = None
               ) -> "DimensionProfile":
        vv = alphabet_counts(v)
        M = len(vv) if max_degree is None else max_degree
        vv = tuple((list(vv) + [0] * M)[:M])
        h = tuple(word_counts(vv, M))
        g = tuple(witt_counts(vv, M))
        return DimensionProfile(
            max_degree=M, h=h, g=g, v=vv, source=source,
            realizable=True, ogf=ogf)

    @staticmethod
    def preset(name: str, max_degree: int) -> "DimensionProfile":
        return profile_preset(name, max_degree)

    # -- accessors ----------------------------------------------------------

    def check_degree(self, m: int) -> None:
        if not 0 <= m <= self.max_degree:
            raise DegreeOutOfRangeError(
                f"degree {m} outside 0..{self.max_degree}", value=m)

    def require_realizable(self, force: bool = False) -> None:
        if not self.realizable and not force:
            bad = next(i for i, x in enumerate(self.g, start=1) if x < 0)
            raise NotRealizableError(
                f"profile has negative generator count g_{bad} = "
                f"{self.g[bad - 1]}; pass force to evaluate formally",
                value=list(self.h))

    def multiplicities(self, m: int) -> List[Tuple[int, int]]:
        """Nonzero (k, mult(k, m)) pairs."""
        self.check_degree(m)
        table = _multiplicity_table_cached(self.g, self.max_degree)
        return [(k, table[k][m]) for k in range(m + 1) if table[k][m]]

    def rational_ogf(self) -> RationalFunction:
        if self.ogf is None:
            raise NotRationalError(
                f"no exact rational generating function known for profile "
                f"source {self.source!r}", value=self.source)
        return self.ogf

    def to_json(self) -> dict:
        out = {
            "max_degree": self.max_degree,
            "h": list(self.h),
            "g": list(self.g),
            "v": list(self.v) if self.v is not None else None,
            "source": self.source,
            "realizable": self.realizable,
        }
        if self.ogf is not None:
            out["ogf"] = self.ogf.to_json()
        return out


def _alphabet_candidate(h: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """Alphabet sizes v with h = 1/(1 - v(t)), if they are nonnegative."""
    M = len(h) - 1
    if h[0] != 1:
        return None
    inv = (one_series(M) / Series([Fraction(x) for x in h], M)).coeffs
    v = [-inv[n] for n in range(1, M + 1)]
    if all(x.denominator == 1 and x >= 0 for x in v):
        return tuple(int(x) for x in v)
    return None


@functools.lru_cache(maxsize=256)
def _multiplicity_table_cached(g: Tuple[int, ...], M: int):
    return multiplicity_table(g, M)


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

PRESET_NAMES = ("sym", "schur_p", "qsym", "ssym", "peak", "fibonacci",
                "geometric:r")


def profile_preset(name: str, max_degree: int) -> DimensionProfile:
    if max_degree < 0:
        raise InvalidInputError("max_degree must be >= 0", value=max_degree)
    M = max_degree
    if name == "sym":
        return DimensionProfile.from_g([1] * M, M, source="sym")
    if name == "schur_p":
        g = [1 if i % 2 == 1 else 0 for i in range(1, M + 1)]
        return DimensionProfile.from_g(g, M, source="schur_p")
    if name == "qsym":
        return DimensionProfile.from_v([1] * M, M, source="qsym",
                                       ogf=RationalFunction([1, -1], [1, -2]))
    if name == "ssym":
        import math
        h = [math.factorial(m) for m in range(M + 1)]
        return DimensionProfile.from_h(h, source="ssym")
    if name in ("peak", "fibonacci"):
        v = [1 if i % 2 == 1 else 0 for i in range(1, M + 1)]
        return DimensionProfile.from_v(
            v, M, source=name, ogf=RationalFunction([-1, 0, 1], [-1, 1, 1]))
    if name.startswith("geometric:"):
        try:
            r = int(name.split(":", 1)[1])
        except ValueError:
            raise InvalidInputError(
                f"geometric preset needs an integer ratio, got {name!r}")
        if r < 0:
            raise InvalidInputError("geometric ratio must be >= 0", value=r)
        return DimensionProfile.from_v([r], M, source=name,
                                       ogf=RationalFunction([1], [1, -r]))
    raise InvalidInputError(
        f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}",
        value=name)


# ---------------------------------------------------------------------------
# spectrum factorizations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumFactorization:
    """Characteristic polynomial prod (x - scalar^k)^mult in factored form."""

    scalar: Fraction
    degree: int
    factors: Tuple[Tuple[int, int], ...]    # (k, multiplicity), k ascending

    def dimension(self) -> int:
        return sum(mult for _, mult in self.factors)

    def trace(self) -> Fraction:
        return sum((mult * self.scalar**k for k, mult in self.factors),
                   Fraction(0))

    def eigenvalues(self) -> Dict[Fraction, int]:
        """Multiplicity of each eigenvalue value scalar^k (values collide,
        e.g. for scalar 0 or +-1)."""
        out: Dict[Fraction, int] = {}
        for k, mult in self.factors:
            ev = self.scalar**k if k or self.scalar else Fraction(1)
            out[ev] = out.get(ev, 0) + mult
        return {ev: m for ev, m in sorted(out.items()) if m}

    def poly_coeffs(self) -> Tuple[Fraction, ...]:
        """Expanded monic characteristic polynomial, ascending powers of x."""
        if any(mult < 0 for _, mult in self.factors):
            raise NotApplicableError(
                "cannot expand a factorization with negative multiplicities")
        poly = [Fraction(1)]
        for k, mult in self.factors:
            root = self.scalar**k if k or self.scalar else Fraction(1)
            for _ in range(mult):
                poly = [Fraction(0)] + poly
                for i in range(len(poly) - 1):
                    poly[i] -= root * poly[i + 1]
        return tuple(poly)

    def to_json(self) -> dict:
        return {
            "n": str(self.scalar),
            "m": self.degree,
            "factors": [{"k": k, "mult": mult} for k, mult in self.factors],
        }


@dataclass(frozen=True)
class AntipodeSpectrum:
    """Antipode characteristic polynomial (x - 1)^plus (x + 1)^minus."""

    degree: int
    plus: int
    minus: int

    def dimension(self) -> int:
        return self.plus + self.minus

    def trace(self) -> int:
        return self.plus - self.minus

    def poly_coeffs(self) -> Tuple[Fraction, ...]:
        poly = [Fraction(1)]
        for root, mult in ((Fraction(1), self.plus), (Fraction(-1), self.minus)):
            for _ in range(mult):
                poly = [Fraction(0)] + poly
                for i in range(len(poly) - 1):
                    poly[i] -= root * poly[i + 1]
        return tuple(poly)

    def to_json(self) -> dict:
        return {"m": self.degree, "plus": self.plus, "minus": self.minus}


def char_poly_adams(profile: DimensionProfile, n: Rational, m: int,
                    force: bool = False) -> SpectrumFactorization:
    """Factored characteristic polynomial of the n-th convolution power of
    the identity in degree m.  n may be any rational number."""
    profile.require_realizable(force)
    profile.check_degree(m)
    return SpectrumFactorization(
        scalar=Fraction(n), degree=m,
        factors=tuple(profile.multiplicities(m)))


def char_poly_antipode(profile: DimensionProfile, m: int,
                       force: bool = False) -> AntipodeSpectrum:
    """Antipode spectrum: eigenvalue (-1)^k with multiplicity mult(k, m)."""
    profile.require_realizable(force)
    profile.check_degree(m)
    plus = minus = 0
    for k, mult in profile.multiplicities(m):
        if k % 2 == 0:
            plus += mult
        else:
            minus += mult
    return AntipodeSpectrum(degree=m, plus=plus, minus=minus)


def comp_power_char_poly(profile: DimensionProfile, power: int, m: int,
                         force: bool = False) -> AntipodeSpectrum:
    """Spectrum of the power-th composition power of the antipode: identity
    for even powers, antipode for odd."""
    profile.check_degree(m)
    if power % 2 == 0:
        profile.require_realizable(force)
        return AntipodeSpectrum(degree=m, plus=profile.h[m], minus=0)
    return char_poly_antipode(profile, m, force=force)


def trace_adams(profile: DimensionProfile, n: Rational, m: int,
                force: bool = False) -> Fraction:
    return char_poly_adams(profile, n, m, force=force).trace()


def trace_table(profile: DimensionProfile, n: Rational,
                max_degree: Optional[int] = None,
                force: bool = False) -> List[Fraction]:
    M = profile.max_degree if max_degree is None else max_degree
    profile.check_degree(M)
    return [trace_adams(profile, n, m, force=force) for m in range(M + 1)]


def schur_indicator(profile: DimensionProfile, n: Rational, m: int,
                    force: bool = False) -> Fraction:
    """Trace of antipode composed with the n-th convolution power; equals
    the trace of the (-n)-th convolution power."""
    return trace_adams(profile, Fraction(-1) * Fraction(n), m, force=force)


# ---------------------------------------------------------------------------
# trace generating functions
# ---------------------------------------------------------------------------

def trace_gf(profile: DimensionProfile, n: Rational,
             max_degree: Optional[int] = None, force: bool = False) -> Series:
    """Generating function of convolution-power traces:
    prod over i of (1 - n t^i)^(-g_i)."""
    profile.require_realizable(force)
    M = profile.max_degree if max_degree is None else max_degree
    profile.check_degree(M)
    n = Fraction(n)
    result = one_series(M)
    for i in range(1, M + 1):
        gi = profile.g[i - 1]
        if gi == 0:
            continue
        coeffs = [Fraction(0)] * (M + 1)
        j = 0
        while i * j <= M:
            coeffs[i * j] = multiset_binom(gi, j) * n**j
            j += 1
        result = result * Series(coeffs, M)
    return result


def antipode_trace_gf(profile: DimensionProfile,
                      max_degree: Optional[int] = None,
                      force: bool = False) -> Series:
    """Generating function of antipode traces: h(t^2)/h(t)."""
    profile.require_realizable(force)
    M = profile.max_degree if max_degree is None else max_degree
    profile.check_degree(M)
    h = Series([Fraction(x) for x in profile.h[: M + 1]], M)
    return h.stretch(2, order=M) / h
