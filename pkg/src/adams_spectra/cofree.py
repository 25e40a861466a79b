"""Antipode spectra on word Hopf algebras: palindrome route and q-analogue.

For deconcatenation coalgebras on words over a weighted alphabet the
antipode sends a word to its signed reversal, so its spectrum is governed
by palindromic words: even-length palindromes give eigenvalue +1,
odd-length give -1, and non-palindromes pair off into (x^2 - 1) blocks.
Under the q-shuffle product the same geometry persists with q-power
weights: a palindromic word of length k and multiweight alpha contributes
(x - (-1)^k q^inv(alpha)), a reversal pair contributes
(x^2 - q^(2 inv(alpha))).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .combinatorics import (
    AlphabetLike,
    alphabet_counts,
    palindrome_table,
    weighted_compositions,
    word_counts,
)
from .errors import NonIntegralError, NotApplicableError
from .qlaurent import QLaurent
from .series import Series, one_series
from .spectra import AntipodeSpectrum


# ---------------------------------------------------------------------------
# rational (q = 1) antipode spectrum from palindrome counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CofreeAntipodeSpectrum:
    """(x - 1)^even_pal (x + 1)^odd_pal (x^2 - 1)^(non_pal / 2)."""

    degree: int
    even_pal: int
    odd_pal: int
    non_pal: int

    def dimension(self) -> int:
        return self.even_pal + self.odd_pal + self.non_pal

    def trace(self) -> int:
        return self.even_pal - self.odd_pal

    def as_antipode_spectrum(self) -> AntipodeSpectrum:
        """Collapse the (x^2 - 1) blocks into eigenvalues +1 and -1."""
        half = self.non_pal // 2
        return AntipodeSpectrum(
            degree=self.degree,
            plus=self.even_pal + half,
            minus=self.odd_pal + half,
        )

    def poly_coeffs(self) -> Tuple[Fraction, ...]:
        return self.as_antipode_spectrum().poly_coeffs()

    def to_json(self) -> dict:
        return {
            "m": self.degree,
            "even_palindromes": self.even_pal,
            "odd_palindromes": self.odd_pal,
            "non_palindromes": self.non_pal,
        }


def cofree_char_poly(v: AlphabetLike, m: int) -> CofreeAntipodeSpectrum:
    table = palindrome_table(v, m)
    non_pal = table.non_palindromic(m)
    if non_pal % 2:
        raise NonIntegralError(
            f"non-palindromic words of weight {m} do not pair up: {non_pal}")
    return CofreeAntipodeSpectrum(
        degree=m,
        even_pal=table.even_length(m),
        odd_pal=table.odd_length(m),
        non_pal=non_pal,
    )


def cofree_trace(v: AlphabetLike, m: int) -> int:
    """Antipode trace in degree m: signed palindrome count."""
    t = palindrome_table(v, m)
    return t.even_length(m) - t.odd_length(m)


# ---------------------------------------------------------------------------
# palindrome generating functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PalindromeGfs:
    """Per-length generating functions: even[j] expands palindromes of
    length 2j, odd[j] palindromes of length 2j+1, trace the signed total."""

    max_degree: int
    even: Tuple[Series, ...]
    odd: Tuple[Series, ...]
    trace: Series


def _alphabet_series(v: AlphabetLike, M: int, ring: str = "Q",
                     q_pow: int = 1, stretch: int = 1) -> Series:
    """sum of v_n q^(-q_pow * C(n,2)) t^(stretch * n), or plain v(t^stretch)
    over Q."""
    vv = alphabet_counts(v)
    if ring == "Q":
        coeffs: List = [0] * (M + 1)
        for n in range(1, len(vv) + 1):
            if stretch * n <= M:
                coeffs[stretch * n] = vv[n - 1]
        return Series(coeffs, M)
    coeffs = [QLaurent(0)] * (M + 1)
    for n in range(1, len(vv) + 1):
        if stretch * n <= M and vv[n - 1]:
            coeffs[stretch * n] = QLaurent.monomial(
                vv[n - 1], -q_pow * (n * (n - 1) // 2))
    return Series(coeffs, M, ring="ZQ")


def pal_gfs(v: AlphabetLike, max_degree: int) -> PalindromeGfs:
    """Expansions of 1/(1 - s v(t^2)) and v(t)/(1 - s v(t^2)) in powers of
    s: the s^j coefficients are the length-2j and length-(2j+1) palindrome
    generating functions.  trace is (1 - v(t))/(1 - v(t^2))."""
    M = max_degree
    v1 = _alphabet_series(v, M)
    v2 = _alphabet_series(v, M, stretch=2)
    even: List[Series] = []
    odd: List[Series] = []
    power = one_series(M)
    for _ in range(M // 2 + 1):
        even.append(power)
        odd.append(v1 * power)
        power = power * v2
    trace = (one_series(M) - v1) / (one_series(M) - v2)
    return PalindromeGfs(max_degree=M, even=tuple(even), odd=tuple(odd),
                         trace=trace)


# ---------------------------------------------------------------------------
# q-deformation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QSpectrumFactorization:
    """Antipode characteristic polynomial over Z[q, q^-1]:

    prod (x - sign q^q_exp)^mult over linear, times
    prod (x^2 - q^q_exp2)^mult over quadratic.
    """

    degree: int
    linear: Tuple[Tuple[int, int, int], ...]     # (sign, q_exp, mult)
    quadratic: Tuple[Tuple[int, int], ...]       # (q_exp2, mult)

    def dimension(self) -> int:
        return (sum(m for _, _, m in self.linear)
                + 2 * sum(m for _, m in self.quadratic))

    def trace(self) -> QLaurent:
        acc = QLaurent(0)
        for sign, e, mult in self.linear:
            acc = acc + QLaurent.monomial(sign * mult, e)
        return acc

    def specialize_q1(self) -> CofreeAntipodeSpectrum:
        even = sum(m for s, _, m in self.linear if s == 1)
        odd = sum(m for s, _, m in self.linear if s == -1)
        return CofreeAntipodeSpectrum(
            degree=self.degree, even_pal=even, odd_pal=odd,
            non_pal=2 * sum(m for _, m in self.quadratic))

    def poly_coeffs(self) -> Tuple[QLaurent, ...]:
        """Expanded monic polynomial in x with Laurent coefficients,
        ascending powers of x."""
        poly = [QLaurent(1)]
        for sign, e, mult in self.linear:
            root = QLaurent.monomial(sign, e)
            for _ in range(mult):
                poly = [QLaurent(0)] + poly
                for i in range(len(poly) - 1):
                    poly[i] = poly[i] - root * poly[i + 1]
        for e2, mult in self.quadratic:
            sq = QLaurent.monomial(1, e2)
            for _ in range(mult):
                poly = [QLaurent(0), QLaurent(0)] + poly
                for i in range(len(poly) - 2):
                    poly[i] = poly[i] - sq * poly[i + 2]
        return tuple(poly)

    def to_json(self) -> dict:
        return {
            "m": self.degree,
            "linear": [{"sign": s, "q_exp": e, "mult": m}
                       for s, e, m in self.linear],
            "quadratic": [{"q_exp": e, "mult": m} for e, m in self.quadratic],
        }


def q_char_poly(v: AlphabetLike, m: int, cap: int = 10**6
                ) -> QSpectrumFactorization:
    """Antipode spectrum for the q-shuffle algebra on words over v,
    degree m, with q symbolic."""
    linear: Dict[Tuple[int, int], int] = {}
    quadratic: Dict[int, Fraction] = {}
    for comp in weighted_compositions(v, m, cap=cap):
        words = comp.word_count(v)
        if words == 0:
            continue
        inv = comp.inversion_stat()
        pal = comp.palindromic_word_count(v)
        if pal:
            sign = -1 if comp.length % 2 else 1
            key = (sign, inv)
            linear[key] = linear.get(key, 0) + pal
        non_pal = words - pal
        if non_pal:
            quadratic[2 * inv] = (quadratic.get(2 * inv, Fraction(0))
                                  + Fraction(non_pal, 2))
    quad: List[Tuple[int, int]] = []
    for e2, mult in sorted(quadratic.items()):
        if mult.denominator != 1:
            raise NonIntegralError(
                f"reversal pairs at q-exponent {e2} in degree {m} "
                f"do not pair up: {mult}")
        quad.append((e2, int(mult)))
    lin = tuple(sorted((s, e, mult) for (s, e), mult in linear.items()))
    return QSpectrumFactorization(degree=m, linear=lin, quadratic=tuple(quad))


def q_trace(v: AlphabetLike, m: int, cap: int = 10**6) -> QLaurent:
    """Antipode trace in degree m over Z[q]: signed palindromic word count
    weighted by q^inv(alpha)."""
    acc: Dict[int, int] = {}
    for comp in weighted_compositions(v, m, cap=cap):
        pal = comp.palindromic_word_count(v)
        if pal:
            e = comp.inversion_stat()
            sign = -1 if comp.length % 2 else 1
            acc[e] = acc.get(e, 0) + sign * pal
    return QLaurent(acc)


@dataclass(frozen=True)
class QPalindromeGfs:
    """q-weighted palindrome generating functions over Z[q, q^-1].

    Degree-m coefficients are normalized by q^(-C(m,2)): multiply the t^m
    coefficient by q^(m choose 2) to recover the unnormalized statistic.
    """

    max_degree: int
    even: Tuple[Series, ...]
    odd: Tuple[Series, ...]
    trace: Series

    def trace_coefficient(self, m: int) -> QLaurent:
        """Unnormalized antipode trace read off the trace series."""
        return self.trace.coefficient(m).shift(m * (m - 1) // 2)


def q_pal_gfs(v: AlphabetLike, max_degree: int) -> QPalindromeGfs:
    """Expansions of 1/(1 - s w(t^2)) and w_1(t)/(1 - s w(t^2)) where
    w(t) doubles letter weights with q^(-2 C(n,2)) and w_1 uses
    q^(-C(n,2)); trace is (1 - w_1(t))/(1 - w(t^2))."""
    M = max_degree
    w1 = _alphabet_series(v, M, ring="ZQ", q_pow=1)
    w2 = _alphabet_series(v, M, ring="ZQ", q_pow=2, stretch=2)
    one = one_series(M, ring="ZQ")
    even: List[Series] = []
    odd: List[Series] = []
    power = one
    for _ in range(M // 2 + 1):
        even.append(power)
        odd.append(w1 * power)
        power = power * w2
    trace = (one - w1) / (one - w2)
    return QPalindromeGfs(max_degree=M, even=tuple(even), odd=tuple(odd),
                          trace=trace)
