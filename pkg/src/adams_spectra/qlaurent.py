"""Laurent polynomials in one variable q with integer coefficients.

These form the coefficient ring for q-deformed traces and characteristic
polynomials, where negative powers of q arise from the normalization that
divides degree-m data by q^(m choose 2).  Only ring operations are needed
(no general division), plus evaluation at a nonzero rational and division
by units +-q^j.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import InvalidInputError, NonUnitConstantError

IntLike = Union[int, "QLaurent"]


class QLaurent:
    """Immutable sparse Laurent polynomial sum(c_e * q^e) with c_e in Z."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[int, Mapping[int, int], None] = None):
        if terms is None:
            data: Dict[int, int] = {}
        elif isinstance(terms, int):
            data = {0: terms} if terms else {}
        else:
            data = {}
            for e, c in terms.items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise InvalidInputError(
                        "Laurent terms need integer exponents and coefficients",
                        value={"exp": repr(e), "coef": repr(c)},
                    )
                if c:
                    data[e] = data.get(e, 0) + c
            data = {e: c for e, c in data.items() if c}
        object.__setattr__(self, "terms", dict(sorted(data.items())))

    def __setattr__(self, *_):
        raise AttributeError("QLaurent is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def monomial(coef: int, exp: int) -> "QLaurent":
        return QLaurent({exp: coef})

    @staticmethod
    def coerce(x: IntLike) -> "QLaurent":
        if isinstance(x, QLaurent):
            return x
        if isinstance(x, int):
            return QLaurent(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into QLaurent")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units of Z[q, q^-1] are the monomials +-q^j."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def is_int(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def as_int(self) -> int:
        if not self.is_int():
            raise NonUnitConstantError(
                "Laurent polynomial is not a plain integer", value=str(self)
            )
        return self.terms.get(0, 0)

    def unit_inverse(self) -> "QLaurent":
        if not self.is_unit():
            raise NonUnitConstantError(
                "not a unit of Z[q, q^-1]", value=str(self)
            )
        ((e, c),) = self.terms.items()
        return QLaurent({-e: c})

    # -- ring operations ------------------------------------------------

    def __add__(self, other: IntLike) -> "QLaurent":
        other = QLaurent.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return QLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: IntLike) -> "QLaurent":
        return self + (-QLaurent.coerce(other))

    def __rsub__(self, other: IntLike) -> "QLaurent":
        return QLaurent.coerce(other) + (-self)

    def __mul__(self, other: IntLike) -> "QLaurent":
        other = QLaurent.coerce(other)
        out: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = QLaurent(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, j: int) -> "QLaurent":
        """Multiply by q^j."""
        return QLaurent({e + j: c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_int() and self.as_int() == other
        if isinstance(other, QLaurent):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- evaluation ------------------------------------------------------

    def evaluate(self, q: Fraction) -> Fraction:
        q = Fraction(q)
        if q == 0 and any(e < 0 for e in self.terms):
            raise InvalidInputError(
                "cannot evaluate negative powers of q at q = 0", value=str(self)
            )
        return sum((Fraction(c) * q**e for e, c in self.terms.items()), Fraction(0))

    # -- text and JSON -----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            if e == 0:
                parts.append(f"{c}")
            else:
                var = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"QLaurent({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"exp": e, "coef": c} for e, c in self.terms.items()]}

    @staticmethod
    def from_json(data: Mapping) -> "QLaurent":
        try:
            return QLaurent({int(t["exp"]): int(t["coef"]) for t in data["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(
                f"malformed Laurent polynomial JSON: {exc}", value=data
            ) from None


_TERM = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<coef>\d+)\*?)?"
    r"(?:(?P<var>q)(?:\^(?P<exp>-?\d+))?)?"
)


def parse_qlaurent(text: str) -> QLaurent:
    """Parse the textual form produced by str(), e.g. '2*q^-1+1' or '-q^3+2'."""
    s = text.replace(" ", "")
    if not s:
        raise InvalidInputError("empty Laurent polynomial literal", value=text)
    if s == "0":
        return QLaurent(0)
    pos = 0
    terms: Dict[int, int] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise InvalidInputError(
                f"cannot parse Laurent polynomial near {s[pos:]!r}", value=text
            )
        sign = -1 if m.group("sign") == "-" else 1
        coef_txt, var, exp_txt = m.group("coef"), m.group("var"), m.group("exp")
        if coef_txt is None and var is None:
            raise InvalidInputError(
                f"cannot parse Laurent polynomial near {s[pos:]!r}", value=text
            )
        coef = sign * (int(coef_txt) if coef_txt is not None else 1)
        if var is None:
            exp = 0
        else:
            exp = int(exp_txt) if exp_txt is not None else 1
        terms[exp] = terms.get(exp, 0) + coef
        pos = m.end()
    return QLaurent(terms)
