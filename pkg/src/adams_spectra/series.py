"""Truncated formal power series and exact rational functions.

A Series is a fixed-truncation list of coefficients over Q (Fraction) or
over Z[q, q^-1] (QLaurent), tagged ogf or egf.  Multiplication uses the
Cauchy convolution for ogf and the binomial convolution for egf, so the
same coefficient lists can be read as ordinary or exponential generating
functions without rescaling.

The Euler transform sends generator counts (g_1, g_2, ...) to the graded
dimension sequence of the free graded-commutative algebra they generate;
its inverse recovers generator counts from dimensions via a logarithm and
one Moebius summation, and certifies integrality and nonnegativity.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple, Union

from .combinatorics import divisors, moebius, multiset_binom
from .errors import (
    DegreeOutOfRangeError,
    InvalidInputError,
    NonIntegralError,
    NonUnitConstantError,
    NotApplicableError,
    NotRealizableError,
    SeriesMismatchError,
)
from .qlaurent import QLaurent, parse_qlaurent

Coeff = Union[Fraction, QLaurent]

RING_Q = "Q"
RING_ZQ = "ZQ"
FLAVORS = ("ogf", "egf")


def _coerce(ring: str, x) -> Coeff:
    if ring == RING_Q:
        if isinstance(x, QLaurent):
            raise SeriesMismatchError("Laurent coefficient in a Q series", value=str(x))
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)
    if ring == RING_ZQ:
        if isinstance(x, str):
            return parse_qlaurent(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise SeriesMismatchError(
                    "non-integer coefficient in a Laurent series", value=str(x)
                )
            return QLaurent(int(x))
        return QLaurent.coerce(x)
    raise InvalidInputError(f"unknown coefficient ring {ring!r}", value=ring)


def _zero(ring: str) -> Coeff:
    return Fraction(0) if ring == RING_Q else QLaurent(0)


def _one(ring: str) -> Coeff:
    return Fraction(1) if ring == RING_Q else QLaurent(1)


def _unit_inverse(ring: str, x: Coeff) -> Coeff:
    if ring == RING_Q:
        if x == 0:
            raise NonUnitConstantError("division by series with zero constant term")
        return Fraction(1) / x
    return x.unit_inverse()


class Series:
    """Power series truncated at a fixed order (inclusive)."""

    __slots__ = ("coeffs", "order", "flavor", "ring")

    def __init__(self, coeffs: Sequence, order: int | None = None,
                 flavor: str = "ogf", ring: str = RING_Q):
        if flavor not in FLAVORS:
            raise InvalidInputError(f"flavor must be ogf or egf, got {flavor!r}")
        coeffs = [_coerce(ring, c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise InvalidInputError("series needs at least the constant term")
            order = len(coeffs) - 1
        if order < 0:
            raise InvalidInputError("truncation order must be >= 0", value=order)
        if len(coeffs) > order + 1:
            raise InvalidInputError(
                f"{len(coeffs)} coefficients exceed truncation order {order}"
            )
        coeffs = coeffs + [_zero(ring)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, *_):
        raise AttributeError("Series is immutable")

    # -- basics ---------------------------------------------------------

    def coefficient(self, m: int) -> Coeff:
        if not 0 <= m <= self.order:
            raise DegreeOutOfRangeError(
                f"coefficient {m} outside truncation 0..{self.order}", value=m
            )
        return self.coeffs[m]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.coeffs, self.order, self.flavor, self.ring) == (
            other.coeffs, other.order, other.flavor, other.ring)

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order, self.flavor, self.ring))

    def _compat(self, other: "Series") -> None:
        if self.order != other.order:
            raise SeriesMismatchError(
                f"truncation orders differ: {self.order} vs {other.order}")
        if self.flavor != other.flavor:
            raise SeriesMismatchError(
                f"flavors differ: {self.flavor} vs {other.flavor}")
        if self.ring != other.ring:
            raise SeriesMismatchError(
                f"coefficient rings differ: {self.ring} vs {other.ring}")

    def _weight(self) -> Callable[[int, int], int]:
        if self.flavor == "ogf":
            return lambda m, j: 1
        return lambda m, j: math.comb(m, j)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._compat(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)],
                      self.order, self.flavor, self.ring)

    def __sub__(self, other: "Series") -> "Series":
        self._compat(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)],
                      self.order, self.flavor, self.ring)

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs], self.order, self.flavor, self.ring)

    def scale(self, c) -> "Series":
        c = _coerce(self.ring, c)
        return Series([c * a for a in self.coeffs], self.order, self.flavor, self.ring)

    def __mul__(self, other: "Series") -> "Series":
        self._compat(other)
        w = self._weight()
        out = [_zero(self.ring) for _ in range(self.order + 1)]
        for j, a in enumerate(self.coeffs):
            if a == _zero(self.ring):
                continue
            for m in range(j, self.order + 1):
                b = other.coeffs[m - j]
                if b != _zero(self.ring):
                    out[m] = out[m] + w(m, j) * (a * b)
        return Series(out, self.order, self.flavor, self.ring)

    def __truediv__(self, other: "Series") -> "Series":
        self._compat(other)
        w = self._weight()
        b0inv = _unit_inverse(self.ring, other.coeffs[0])
        out: List[Coeff] = []
        for m in range(self.order + 1):
            acc = self.coeffs[m]
            for j in range(1, m + 1):
                bj = other.coeffs[j]
                if bj != _zero(self.ring):
                    acc = acc - w(m, j) * (bj * out[m - j])
            out.append(acc * b0inv)
        return Series(out, self.order, self.flavor, self.ring)

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return (one_series(self.order, self.flavor, self.ring) / self) ** (-n)
        result = one_series(self.order, self.flavor, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- transcendental operations (rational coefficients only) ----------

    def _analytic(self) -> List[Fraction]:
        if self.ring != RING_Q:
            raise NotApplicableError(
                "exp/log need rational coefficients", value=self.ring)
        if self.flavor == "egf":
            return [c / math.factorial(m) for m, c in enumerate(self.coeffs)]
        return list(self.coeffs)

    def _from_analytic(self, coeffs: List[Fraction]) -> "Series":
        if self.flavor == "egf":
            coeffs = [c * math.factorial(m) for m, c in enumerate(coeffs)]
        return Series(coeffs, self.order, self.flavor, RING_Q)

    def exp(self) -> "Series":
        a = self._analytic()
        if a[0] != 0:
            raise NonUnitConstantError(
                "exp needs zero constant term", value=str(a[0]))
        e = [Fraction(1)] + [Fraction(0)] * self.order
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                if a[j]:
                    acc += j * a[j] * e[m - j]
            e[m] = acc / m
        return self._from_analytic(e)

    def log(self) -> "Series":
        a = self._analytic()
        if a[0] != 1:
            raise NonUnitConstantError(
                "log needs constant term 1", value=str(a[0]))
        lg = [Fraction(0)] * (self.order + 1)
        for m in range(1, self.order + 1):
            acc = Fraction(m) * a[m]
            for j in range(1, m):
                if a[m - j]:
                    acc -= j * lg[j] * a[m - j]
            lg[m] = acc / m
        return self._from_analytic(lg)

    # -- reshaping --------------------------------------------------------

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise DegreeOutOfRangeError(
                f"cannot extend truncation {self.order} to {order}", value=order)
        return Series(self.coeffs[: order + 1], order, self.flavor, self.ring)

    def stretch(self, k: int, order: int | None = None) -> "Series":
        """Substitute t -> t^k (ogf only)."""
        if self.flavor != "ogf":
            raise NotApplicableError("stretch is an ogf operation")
        if k < 1:
            raise InvalidInputError("stretch factor must be >= 1", value=k)
        order = self.order if order is None else order
        if self.order < order // k:
            raise DegreeOutOfRangeError(
                f"need coefficients to {order // k} to stretch, have {self.order}")
        out = [_zero(self.ring) for _ in range(order + 1)]
        for m in range(0, order // k + 1):
            out[k * m] = self.coeffs[m]
        return Series(out, order, self.flavor, self.ring)

    def evaluate_q(self, q: Fraction) -> "Series":
        """Specialize a Laurent-coefficient series at a nonzero rational q."""
        if self.ring != RING_ZQ:
            raise NotApplicableError("evaluate_q needs Laurent coefficients")
        return Series([c.evaluate(q) for c in self.coeffs],
                      self.order, self.flavor, RING_Q)

    def integer_coeffs(self) -> List[int]:
        out = []
        for m, c in enumerate(self.coeffs):
            if isinstance(c, QLaurent):
                out.append(c.as_int())
            else:
                if c.denominator != 1:
                    raise NonIntegralError(
                        f"coefficient of degree {m} is not an integer: {c}")
                out.append(int(c))
        return out

    # -- text and JSON ------------------------------------------------------

    def __str__(self) -> str:
        var = "t"
        parts = []
        for m, c in enumerate(self.coeffs):
            if c == _zero(self.ring):
                continue
            cs = str(c)
            if isinstance(c, QLaurent) and len(c.terms) > 1:
                cs = f"({cs})"
            if m == 0:
                parts.append(cs)
            else:
                mono = var if m == 1 else f"{var}^{m}"
                if self.flavor == "egf":
                    mono = f"{mono}/{m}!"
                parts.append(mono if cs == "1" else f"{cs}*{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({var}^{self.order + 1})"

    def __repr__(self) -> str:
        return f"Series({self!s}, flavor={self.flavor}, ring={self.ring})"

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "truncation": self.order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "Series":
        try:
            flavor = data["flavor"]
            order = int(data["truncation"])
            raw = list(data["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed series JSON: {exc}", value=data)
        ring = RING_ZQ if any("q" in s for s in map(str, raw)) else RING_Q
        return Series(raw, order, flavor, ring)


def one_series(order: int, flavor: str = "ogf", ring: str = RING_Q) -> Series:
    return Series([_one(ring)], order, flavor, ring)


def monomial_series(c, m: int, order: int, flavor: str = "ogf",
                    ring: str = RING_Q) -> Series:
    coeffs = [_zero(ring)] * (order + 1)
    if m <= order:
        coeffs[m] = _coerce(ring, c)
    return Series(coeffs, order, flavor, ring)


# ---------------------------------------------------------------------------
# Euler transform
# ---------------------------------------------------------------------------

def euler_transform(g: Sequence[int], max_degree: int) -> Series:
    """Dimension series prod over i of (1 - t^i)^(-g_i), truncated.

    Missing g_i count as 0; negative g_i are accepted and expanded
    formally.
    """
    M = max_degree
    out = [Fraction(0)] * (M + 1)
    out[0] = Fraction(1)
    result = Series(out, M)
    for i in range(1, M + 1):
        gi = g[i - 1] if i - 1 < len(g) else 0
        if not isinstance(gi, int):
            raise InvalidInputError("generator counts must be integers", value=list(g))
        if gi == 0:
            continue
        factor = [Fraction(0)] * (M + 1)
        j = 0
        while i * j <= M:
            factor[i * j] = Fraction(multiset_binom(gi, j))
            j += 1
        result = result * Series(factor, M)
    return result


def inverse_euler_transform(h: Sequence, allow_negative: bool = False) -> List[int]:
    """Recover generator counts g_1..g_M from dimensions h_0..h_M.

    Takes the series logarithm, reads off c_n = n [t^n] log h = sum of
    d*g_d over d | n, then Moebius-inverts.  Raises NonIntegral when the
    dimensions are not an Euler transform of integers, NotRealizable when
    some g_n < 0 (unless allowed).
    """
    hh = [Fraction(x) for x in h]
    if not hh or hh[0] != 1:
        raise NonUnitConstantError(
            "dimension sequence must start with h_0 = 1",
            value=[str(x) for x in hh[:3]],
        )
    M = len(hh) - 1
    lg = Series(hh, M).log()
    c = [Fraction(0)] * (M + 1)
    for n in range(1, M + 1):
        c[n] = n * lg.coefficient(n)
    g: List[int] = []
    for n in range(1, M + 1):
        total = Fraction(0)
        for d in divisors(n):
            mu = moebius(n // d)
            if mu:
                total += mu * c[d]
        total /= n
        if total.denominator != 1:
            raise NonIntegralError(
                f"generator count at degree {n} is not an integer: {total}",
                value=[str(x) for x in hh],
            )
        g.append(int(total))
    if not allow_negative:
        for n, gn in enumerate(g, start=1):
            if gn < 0:
                raise NotRealizableError(
                    f"generator count g_{n} = {gn} is negative; dimensions are "
                    "not realizable by a graded connected Hopf algebra",
                    value=[str(x) for x in hh],
                )
    return g


# ---------------------------------------------------------------------------
# polynomials over Q (dense, ascending coefficients)
# ---------------------------------------------------------------------------

Poly = Tuple[Fraction, ...]


def poly_trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[Poly, Poly]:
    a, b = list(poly_trim(a)), poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] * inv
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
        a = list(poly_trim(a))
        if not a:
            break
    return poly_trim(q), poly_trim(a)


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    a, b = poly_trim(a), poly_trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return ()
    inv = Fraction(1) / a[-1]
    return tuple(c * inv for c in a)


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


class RationalFunction:
    """Quotient of polynomials over Q in canonical form: numerator and
    denominator coprime, denominator constant term scaled to 1 (so the
    Taylor expansion at 0 exists)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence, den: Sequence):
        num = poly_trim([Fraction(x) for x in num])
        den = poly_trim([Fraction(x) for x in den])
        if not den:
            raise InvalidInputError("rational function needs a nonzero denominator")
        if not num:
            num, den = (Fraction(0),), (Fraction(1),)
        else:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num, _ = poly_divmod(num, g)
                den, _ = poly_divmod(den, g)
        if den[0] == 0:
            raise NonUnitConstantError(
                "denominator vanishes at 0; no power series expansion",
                value=[str(c) for c in den],
            )
        c = den[0]
        num = tuple(x / c for x in num)
        den = tuple(x / c for x in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(poly_mul(self.num, other.num),
                                poly_mul(self.den, other.den))

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if poly_trim(other.num) == ():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(poly_mul(self.num, other.den),
                                poly_mul(self.den, other.num))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        a = poly_mul(self.num, other.den)
        b = poly_mul(other.num, self.den)
        n = tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(max(len(a), len(b), 1))
        )
        return RationalFunction(n, poly_mul(self.den, other.den))

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + RationalFunction(tuple(-c for c in other.num), other.den)

    def substitute_square(self) -> "RationalFunction":
        """Return f(t^2)."""

        def spread(p: Poly) -> List[Fraction]:
            out = [Fraction(0)] * (2 * len(p) - 1) if p else [Fraction(0)]
            for i, c in enumerate(p):
                out[2 * i] = c
            return out

        return RationalFunction(spread(self.num), spread(self.den))

    def taylor(self, order: int) -> Series:
        out: List[Fraction] = []
        for m in range(order + 1):
            acc = self.num[m] if m < len(self.num) else Fraction(0)
            for j in range(1, min(m, len(self.den) - 1) + 1):
                acc -= self.den[j] * out[m - j]
            out.append(acc)
        return Series(out, order)

    def evaluate(self, x: Fraction) -> Fraction:
        d = poly_eval(self.den, x)
        if d == 0:
            raise InvalidInputError(f"pole at {x}", value=str(x))
        return poly_eval(self.num, x) / d

    def __str__(self) -> str:
        def fmt(p: Poly) -> str:
            if not p:
                return "0"
            parts = []
            for i, c in enumerate(p):
                if c == 0:
                    continue
                if i == 0:
                    parts.append(str(c))
                else:
                    mono = "t" if i == 1 else f"t^{i}"
                    if c == 1:
                        parts.append(mono)
                    elif c == -1:
                        parts.append(f"-{mono}")
                    else:
                        parts.append(f"{c}*{mono}")
            return "+".join(parts).replace("+-", "-") or "0"

        return f"({fmt(self.num)})/({fmt(self.den)})"

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    @staticmethod
    def from_json(data: dict) -> "RationalFunction":
        try:
            return RationalFunction(
                [Fraction(s) for s in data["num"]],
                [Fraction(s) for s in data["den"]],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed rational function JSON: {exc}",
                                    value=data)
