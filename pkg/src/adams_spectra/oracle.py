"""Brute-force matrix model of graded connected Hopf algebras.

An instance stores explicit structure constants for the product and
coproduct on a graded basis, verifies the bialgebra axioms on construction
(associativity, coassociativity, counit, and the product/coproduct
compatibility, braided by q^(degree * degree) for q-deformed instances),
and exposes graded endomorphisms with convolution.  Convolution powers of
the identity, the antipode via the finite geometric series, and Eulerian
idempotents are all computed from structure constants alone, so every
closed-form spectrum elsewhere in the package can be checked against
characteristic polynomials of literal matrices.

Builders cover q-shuffle algebras on weighted alphabets (deconcatenation
coproduct), the polynomial algebra on one generator per degree in a
power-sum style basis, and the quasi-shuffle algebra on compositions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .combinatorics import AlphabetLike, alphabet_counts, partitions, rational_binom
from .errors import (
    DegreeOutOfRangeError,
    InvalidInputError,
    NotApplicableError,
    NotNilpotentError,
    TooLargeError,
)
from .exact_linalg import (
    berkowitz_charpoly,
    mat_identity,
    mat_is_zero,
    mat_mul,
    mat_sub,
)
from .qlaurent import QLaurent, parse_qlaurent

Label = Union[tuple, int, str]
Vec = Dict[int, object]            # sparse vector {basis index: coefficient}
MuTable = Dict[Tuple[int, int], Dict[Tuple[int, int], Vec]]
DeltaTerm = Tuple[int, int, int, object]   # (d1, a, b, coeff)

SYMBOLIC = "symbolic"


def _coerce_coeff(ring: str, x):
    if ring == "int":
        if isinstance(x, str):
            return int(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise InvalidInputError(f"non-integer coefficient {x} in int ring")
            return int(x)
        return int(x)
    if ring == "Q":
        return Fraction(x)
    if ring == "ZQ":
        if isinstance(x, str):
            return parse_qlaurent(x)
        return QLaurent.coerce(x)
    raise InvalidInputError(f"unknown oracle coefficient ring {ring!r}")


class HopfInstance:
    """Explicit structure constants of a graded connected Hopf algebra,
    checked against the bialgebra axioms on construction."""

    def __init__(
        self,
        name: str,
        max_degree: int,
        basis: Sequence[Sequence[Label]],
        product: MuTable,
        coproduct: Sequence[Sequence[Sequence[DeltaTerm]]],
        ring: str = "int",
        q: Union[Fraction, str] = Fraction(1),
        dimension_cap: int = 2000,
        force_dimensions: bool = False,
        check: bool = True,
    ):
        self.name = name
        self.max_degree = max_degree
        self.basis = [tuple(level) for level in basis]
        self.index = [
            {label: i for i, label in enumerate(level)} for level in self.basis
        ]
        self.product = product
        self.coproduct = [
            [tuple(terms) for terms in level] for level in coproduct
        ]
        self.ring = ring
        self.q = q if q == SYMBOLIC else Fraction(q)
        self._commutative: Optional[bool] = None
        self._cocommutative: Optional[bool] = None
        self._j_powers: List["GradedEndomorphism"] = []
        if len(self.basis) != max_degree + 1:
            raise InvalidInputError(
                f"need basis levels 0..{max_degree}, got {len(self.basis)}")
        if self.dim(0) != 1:
            raise InvalidInputError(
                "connected instance needs a one-dimensional degree 0")
        for m in range(max_degree + 1):
            if self.dim(m) > dimension_cap and not force_dimensions:
                raise TooLargeError(
                    f"dimension {self.dim(m)} in degree {m} exceeds cap "
                    f"{dimension_cap}", value={"degree": m, "cap": dimension_cap})
        if check:
            self._check_axioms()

    # -- basic structure ---------------------------------------------------

    def dim(self, m: int) -> int:
        return len(self.basis[m])

    def dims(self) -> List[int]:
        return [self.dim(m) for m in range(self.max_degree + 1)]

    def check_degree(self, m: int) -> None:
        if not 0 <= m <= self.max_degree:
            raise DegreeOutOfRangeError(
                f"degree {m} outside 0..{self.max_degree}", value=m)

    def braid_factor(self, d: int):
        """Coefficient picked up when a degree-a leg crosses a degree-b leg
        with a*b = d."""
        if self.q == SYMBOLIC:
            return QLaurent.monomial(1, d)
        if self.ring == "int":
            qd = self.q**d
            return int(qd) if qd.denominator == 1 else qd
        return self.q**d

    def mu_pair(self, d1: int, d2: int, i: int, j: int) -> Vec:
        return self.product[(d1, d2)][(i, j)]

    def mu_vec(self, d1: int, d2: int, va: Vec, vb: Vec) -> Vec:
        """Product of two sparse vectors of pure degrees d1 and d2."""
        out: Vec = {}
        table = self.product[(d1, d2)]
        for ia, ca in va.items():
            for ib, cb in vb.items():
                c = ca * cb
                for k, ck in table[(ia, ib)].items():
                    out[k] = out.get(k, 0) + c * ck
        return {k: c for k, c in out.items() if c != 0}

    # -- axiom verification ---------------------------------------------------

    def _check_axioms(self) -> None:
        M = self.max_degree
        self._check_unit_counit()
        for d1 in range(M + 1):
            for d2 in range(M + 1 - d1):
                for d3 in range(M + 1 - d1 - d2):
                    self._check_associativity(d1, d2, d3)
        for m in range(M + 1):
            for i in range(self.dim(m)):
                self._check_coassociativity(m, i)
        for d1 in range(M + 1):
            for d2 in range(M + 1 - d1):
                self._check_compatibility(d1, d2)

    def _check_unit_counit(self) -> None:
        M = self.max_degree
        for m in range(M + 1):
            for i in range(self.dim(m)):
                left = self.mu_vec(0, m, {0: 1}, {i: 1})
                right = self.mu_vec(m, 0, {i: 1}, {0: 1})
                if left != {i: 1} or right != {i: 1}:
                    raise InvalidInputError(
                        f"unit axiom fails on basis element {m}:{i}",
                        value=self.name)
                # counit: degree-0 tensor legs must reproduce the element
                lsum: Vec = {}
                rsum: Vec = {}
                for d1, a, b, c in self.coproduct[m][i]:
                    if d1 == 0:
                        lsum[b] = lsum.get(b, 0) + c
                    if d1 == m:
                        rsum[a] = rsum.get(a, 0) + c
                lsum = {k: v for k, v in lsum.items() if v != 0}
                rsum = {k: v for k, v in rsum.items() if v != 0}
                if lsum != {i: 1} or rsum != {i: 1}:
                    raise InvalidInputError(
                        f"counit axiom fails on basis element {m}:{i}",
                        value=self.name)

    def _check_associativity(self, d1: int, d2: int, d3: int) -> None:
        for i in range(self.dim(d1)):
            for j in range(self.dim(d2)):
                ij = self.mu_pair(d1, d2, i, j)
                for k in range(self.dim(d3)):
                    left = self.mu_vec(d1 + d2, d3, ij, {k: 1})
                    jk = self.mu_pair(d2, d3, j, k)
                    right = self.mu_vec(d1, d2 + d3, {i: 1}, jk)
                    if left != right:
                        raise InvalidInputError(
                            f"associativity fails at degrees "
                            f"({d1},{d2},{d3}) indices ({i},{j},{k})",
                            value=self.name)

    def _check_coassociativity(self, m: int, i: int) -> None:
        left: Dict[tuple, object] = {}
        right: Dict[tuple, object] = {}
        for d1, a, b, c in self.coproduct[m][i]:
            for e1, x, y, cc in self.coproduct[d1][a]:
                key = (e1, d1 - e1, m - d1, x, y, b)
                left[key] = left.get(key, 0) + c * cc
            for e1, x, y, cc in self.coproduct[m - d1][b]:
                key = (d1, e1, m - d1 - e1, a, x, y)
                right[key] = right.get(key, 0) + c * cc
        left = {k: v for k, v in left.items() if v != 0}
        right = {k: v for k, v in right.items() if v != 0}
        if left != right:
            raise InvalidInputError(
                f"coassociativity fails on basis element {m}:{i}",
                value=self.name)

    def _check_compatibility(self, d1: int, d2: int) -> None:
        """Delta(xy) must equal Delta(x) Delta(y) in the braided sense:
        crossing legs of degrees a and b costs q^(a b)."""
        m = d1 + d2
        for i in range(self.dim(d1)):
            dx = self.coproduct[d1][i]
            for j in range(self.dim(d2)):
                dy = self.coproduct[d2][j]
                # expand Delta(x) Delta(y)
                expected: Dict[tuple, object] = {}
                for e1, a1, a2, ca in dx:
                    for e2, b1, b2, cb in dy:
                        braid = self.braid_factor((d1 - e1) * e2)
                        left_vec = self.mu_pair(e1, e2, a1, b1)
                        right_vec = self.mu_pair(d1 - e1, d2 - e2, a2, b2)
                        c0 = ca * cb * braid
                        for u, cu in left_vec.items():
                            for w, cw in right_vec.items():
                                key = (e1 + e2, u, w)
                                expected[key] = (
                                    expected.get(key, 0) + c0 * cu * cw)
                # expand Delta of the product
                actual: Dict[tuple, object] = {}
                for k, ck in self.mu_pair(d1, d2, i, j).items():
                    for e, a, b, c in self.coproduct[m][k]:
                        key = (e, a, b)
                        actual[key] = actual.get(key, 0) + ck * c
                expected = {k: v for k, v in expected.items() if v != 0}
                actual = {k: v for k, v in actual.items() if v != 0}
                if expected != actual:
                    raise InvalidInputError(
                        f"bialgebra compatibility fails at degrees "
                        f"({d1},{d2}) indices ({i},{j})", value=self.name)

    # -- structural predicates ------------------------------------------------

    def is_commutative(self) -> bool:
        if self._commutative is None:
            res = True
            M = self.max_degree
            for d1 in range(M + 1):
                for d2 in range(M + 1 - d1):
                    for i in range(self.dim(d1)):
                        for j in range(self.dim(d2)):
                            if self.mu_pair(d1, d2, i, j) != \
                               self.mu_pair(d2, d1, j, i):
                                res = False
            self._commutative = res
        return self._commutative

    def is_cocommutative(self) -> bool:
        if self._cocommutative is None:
            res = True
            for m in range(self.max_degree + 1):
                for i in range(self.dim(m)):
                    terms: Dict[tuple, object] = {}
                    for d1, a, b, c in self.coproduct[m][i]:
                        key = (d1, a, b)
                        terms[key] = terms.get(key, 0) + c
                    for (d1, a, b), c in terms.items():
                        if terms.get((m - d1, b, a), 0) != c:
                            res = False
            self._cocommutative = res
        return self._cocommutative

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        def label_out(label):
            if isinstance(label, tuple):
                return [label_out(x) for x in label]
            return label

        prod = []
        for (d1, d2), table in sorted(self.product.items()):
            for (i, j), vec in sorted(table.items()):
                for k, c in sorted(vec.items()):
                    prod.append([d1, d2, i, j, k, str(c)])
        cop = []
        for m, level in enumerate(self.coproduct):
            for i, terms in enumerate(level):
                for d1, a, b, c in terms:
                    cop.append([m, i, d1, a, b, str(c)])
        return {
            "name": self.name,
            "max_degree": self.max_degree,
            "ring": self.ring,
            "q": self.q if self.q == SYMBOLIC else str(self.q),
            "basis": [[label_out(x) for x in level] for level in self.basis],
            "product": prod,
            "coproduct": cop,
        }

    @staticmethod
    def from_json(data: dict, check: bool = True) -> "HopfInstance":
        def label_in(label):
            if isinstance(label, list):
                return tuple(label_in(x) for x in label)
            return label

        try:
            ring = data["ring"]
            M = int(data["max_degree"])
            basis = [[label_in(x) for x in level] for level in data["basis"]]
            product: MuTable = {}
            for d1, d2, i, j, k, c in data["product"]:
                product.setdefault((d1, d2), {}).setdefault((i, j), {})[k] = \
                    _coerce_coeff(ring, c)
            coproduct: List[List[List[DeltaTerm]]] = [
                [[] for _ in level] for level in basis
            ]
            for m, i, d1, a, b, c in data["coproduct"]:
                coproduct[m][i].append((d1, a, b, _coerce_coeff(ring, c)))
            q = data["q"] if data["q"] == SYMBOLIC else Fraction(data["q"])
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise InvalidInputError(f"malformed instance JSON: {exc}")
        # pairs with no listed entries multiply to zero; fill them in
        for d1 in range(M + 1):
            for d2 in range(M + 1 - d1):
                table = product.setdefault((d1, d2), {})
                for i in range(len(basis[d1])):
                    for j in range(len(basis[d2])):
                        table.setdefault((i, j), {})
        return HopfInstance(
            name=data.get("name", "imported"), max_degree=M, basis=basis,
            product=product, coproduct=coproduct, ring=ring, q=q, check=check)


# ---------------------------------------------------------------------------
# graded endomorphisms and convolution
# ---------------------------------------------------------------------------

class GradedEndomorphism:
    """Degree-preserving linear map stored as sparse columns per degree:
    cols[m][j] = {i: coefficient of basis_i in the image of basis_j}."""

    __slots__ = ("inst", "cols")

    def __init__(self, inst: HopfInstance, cols: List[List[Vec]]):
        self.inst = inst
        self.cols = cols

    @staticmethod
    def identity(inst: HopfInstance) -> "GradedEndomorphism":
        return GradedEndomorphism(
            inst, [[{j: 1} for j in range(inst.dim(m))]
                   for m in range(inst.max_degree + 1)])

    @staticmethod
    def unit_counit(inst: HopfInstance) -> "GradedEndomorphism":
        """iota composed with epsilon: identity in degree 0, zero above."""
        cols: List[List[Vec]] = [[{0: 1}]]
        for m in range(1, inst.max_degree + 1):
            cols.append([{} for _ in range(inst.dim(m))])
        return GradedEndomorphism(inst, cols)

    @staticmethod
    def zero(inst: HopfInstance) -> "GradedEndomorphism":
        return GradedEndomorphism(
            inst, [[{} for _ in range(inst.dim(m))]
                   for m in range(inst.max_degree + 1)])

    @staticmethod
    def from_images(inst: HopfInstance, image) -> "GradedEndomorphism":
        """Build from a function (m, j) -> sparse image vector."""
        return GradedEndomorphism(
            inst, [[dict(image(m, j)) for j in range(inst.dim(m))]
                   for m in range(inst.max_degree + 1)])

    def __add__(self, other: "GradedEndomorphism") -> "GradedEndomorphism":
        out = []
        for ca, cb in zip(self.cols, other.cols):
            level = []
            for va, vb in zip(ca, cb):
                v = dict(va)
                for i, c in vb.items():
                    v[i] = v.get(i, 0) + c
                level.append({i: c for i, c in v.items() if c != 0})
            out.append(level)
        return GradedEndomorphism(self.inst, out)

    def __sub__(self, other: "GradedEndomorphism") -> "GradedEndomorphism":
        return self + other.scale(-1)

    def scale(self, c) -> "GradedEndomorphism":
        return GradedEndomorphism(
            self.inst,
            [[{i: c * x for i, x in v.items() if c * x != 0} for v in level]
             for level in self.cols])

    def compose(self, other: "GradedEndomorphism") -> "GradedEndomorphism":
        """self after other."""
        out = []
        for m in range(self.inst.max_degree + 1):
            level = []
            for j in range(self.inst.dim(m)):
                acc: Vec = {}
                for mid, c in other.cols[m][j].items():
                    for i, cc in self.cols[m][mid].items():
                        acc[i] = acc.get(i, 0) + c * cc
                level.append({i: c for i, c in acc.items() if c != 0})
            out.append(level)
        return GradedEndomorphism(self.inst, out)

    def convolve(self, other: "GradedEndomorphism") -> "GradedEndomorphism":
        """Convolution product: multiply after applying both to the two
        coproduct legs."""
        inst = self.inst
        out = []
        for m in range(inst.max_degree + 1):
            level = []
            for j in range(inst.dim(m)):
                acc: Vec = {}
                for d1, a, b, c in inst.coproduct[m][j]:
                    va = self.cols[d1][a]
                    vb = other.cols[m - d1][b]
                    if not va or not vb:
                        continue
                    prod = inst.mu_vec(d1, m - d1, va, vb)
                    for i, cc in prod.items():
                        acc[i] = acc.get(i, 0) + c * cc
                level.append({i: c for i, c in acc.items() if c != 0})
            out.append(level)
        return GradedEndomorphism(self.inst, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedEndomorphism):
            return NotImplemented
        return self.cols == other.cols

    def to_dense(self, m: int) -> List[List]:
        self.inst.check_degree(m)
        n = self.inst.dim(m)
        rows = [[0] * n for _ in range(n)]
        for j in range(n):
            for i, c in self.cols[m][j].items():
                rows[i][j] = c
        return rows

    def trace(self, m: int):
        self.inst.check_degree(m)
        acc = 0
        for j in range(self.inst.dim(m)):
            acc = acc + self.cols[m][j].get(j, 0)
        return acc

    def is_zero(self) -> bool:
        return all(not v for level in self.cols for v in level)


# ---------------------------------------------------------------------------
# convolution powers and the antipode
# ---------------------------------------------------------------------------

def _j_power(inst: HopfInstance, k: int) -> GradedEndomorphism:
    """(id - unit counit)^(* k), cached on the instance."""
    if not inst._j_powers:
        inst._j_powers.append(GradedEndomorphism.unit_counit(inst))
    while len(inst._j_powers) <= k:
        j1 = GradedEndomorphism.identity(inst) - \
            GradedEndomorphism.unit_counit(inst)
        inst._j_powers.append(inst._j_powers[-1].convolve(j1))
    return inst._j_powers[k]


def adams_endo(inst: HopfInstance, n: Union[int, Fraction]
               ) -> GradedEndomorphism:
    """The n-th convolution power of the identity, for any rational n, via
    the binomial series in id - unit counit (which is locally nilpotent:
    its degree-m component dies at convolution power m+1)."""
    n = Fraction(n)
    if inst.ring == "ZQ" and n.denominator != 1:
        raise NotApplicableError(
            "non-integer convolution powers need rational coefficients, "
            "not Laurent ones", value=str(n))
    result = GradedEndomorphism.zero(inst)
    for k in range(inst.max_degree + 1):
        coef = rational_binom(n, k)
        if coef == 0:
            continue
        if inst.ring in ("int", "ZQ") and coef.denominator == 1:
            coef = int(coef)
        result = result + _j_power(inst, k).scale(coef)
    return result


def antipode_endo(inst: HopfInstance) -> GradedEndomorphism:
    """Antipode as the (-1)-st convolution power: the alternating geometric
    series in id - unit counit."""
    return adams_endo(inst, -1)


def identity_conv_power(inst: HopfInstance, n: int) -> GradedEndomorphism:
    """Direct n-fold convolution of the identity with itself (n >= 0),
    an independent route to the same operator as adams_endo."""
    if n < 0:
        raise InvalidInputError("direct convolution power needs n >= 0", value=n)
    result = GradedEndomorphism.unit_counit(inst)
    ident = GradedEndomorphism.identity(inst)
    for _ in range(n):
        result = result.convolve(ident)
    return result


def adams_matrix(inst: HopfInstance, n: Union[int, Fraction], m: int
                 ) -> List[List]:
    return adams_endo(inst, n).to_dense(m)


def char_poly_exact(endo: GradedEndomorphism, m: int) -> List:
    """Characteristic polynomial of the degree-m block, ascending
    coefficients, via the division-free Berkowitz iteration."""
    return berkowitz_charpoly(endo.to_dense(m))


def nilpotency_order(inst: HopfInstance, m: int) -> int:
    """Least d with (S^2 - id)^d = 0 on degree m; raises NotNilpotent when
    the graded bound m + 1 is passed."""
    s = antipode_endo(inst)
    s2 = s.compose(s).to_dense(m)
    n = mat_sub(s2, mat_identity(inst.dim(m)))
    power = mat_identity(inst.dim(m))
    for d in range(0, m + 2):
        if mat_is_zero(power):
            return d
        power = mat_mul(power, n)
    raise NotNilpotentError(
        f"(S^2 - id) not nilpotent within order {m + 1} in degree {m}",
        value=inst.name)


def eulerian_idempotents(inst: HopfInstance, k_max: Optional[int] = None
                         ) -> List[GradedEndomorphism]:
    """First convolution-logarithm idempotents E^(0), ..., E^(k_max).

    Defined when the instance is commutative or cocommutative:
    E^(1) = log(id) as a convolution series (finite in each degree) and
    E^(k) = E^(1)^(* k) / k!.
    """
    if inst.ring == "ZQ":
        raise NotApplicableError(
            "Eulerian idempotents need rational coefficients")
    if not (inst.is_commutative() or inst.is_cocommutative()):
        raise NotApplicableError(
            "Eulerian idempotents need a commutative or cocommutative "
            "instance", value=inst.name)
    M = inst.max_degree
    K = M if k_max is None else k_max
    e1 = GradedEndomorphism.zero(inst)
    for k in range(1, M + 1):
        e1 = e1 + _j_power(inst, k).scale(
            Fraction((-1) ** (k + 1), k))
    out = [GradedEndomorphism.unit_counit(inst)]
    power = e1
    for k in range(1, K + 1):
        out.append(power.scale(Fraction(1, math.factorial(k))))
        power = power.convolve(e1)
    return out


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _word_weight(word: tuple) -> int:
    return sum(w for w, _ in word)


def build_shuffle(
    v: AlphabetLike,
    max_degree: int,
    q: Union[int, Fraction, str] = 1,
    name: Optional[str] = None,
    dimension_cap: int = 2000,
    force_dimensions: bool = False,
    check: bool = True,
) -> HopfInstance:
    """q-shuffle algebra on words over a weighted alphabet with the
    deconcatenation coproduct.  Interleaving a letter of weight a past a
    block of weight b costs q^(a b); q may be rational or "symbolic"."""
    vv = alphabet_counts(v)
    M = max_degree
    symbolic = q == SYMBOLIC
    qfrac = None if symbolic else Fraction(q)
    ring = "ZQ" if symbolic else ("int" if qfrac == 1 else "Q")
    letters = [(w, c) for w in range(1, len(vv) + 1) for c in range(vv[w - 1])]
    words: List[List[tuple]] = [[()]]
    for m in range(1, M + 1):
        level = []
        for letter in letters:
            if letter[0] <= m:
                level.extend((letter,) + rest for rest in words[m - letter[0]])
        words.append(level)
    index = [{w: i for i, w in enumerate(level)} for level in words]

    memo: Dict[tuple, Dict[tuple, Dict[int, int]]] = {}

    def shuffle_terms(x: tuple, y: tuple) -> Dict[tuple, Dict[int, int]]:
        """Interleavings of x and y as {word: {q-exponent: count}}."""
        if not x:
            return {y: {0: 1}}
        if not y:
            return {x: {0: 1}}
        key = (x, y)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: Dict[tuple, Dict[int, int]] = {}
        for word, exps in shuffle_terms(x[1:], y).items():
            dst = out.setdefault((x[0],) + word, {})
            for e, c in exps.items():
                dst[e] = dst.get(e, 0) + c
        shift = y[0][0] * _word_weight(x)
        for word, exps in shuffle_terms(x, y[1:]).items():
            dst = out.setdefault((y[0],) + word, {})
            for e, c in exps.items():
                dst[e + shift] = dst.get(e + shift, 0) + c
        memo[key] = out
        return out

    def to_coeff(exps: Dict[int, int]):
        if symbolic:
            return QLaurent(exps)
        if qfrac == 1:
            return sum(exps.values())
        acc = Fraction(0)
        for e, c in exps.items():
            acc += c * qfrac**e
        return acc

    product: MuTable = {}
    for d1 in range(M + 1):
        for d2 in range(M + 1 - d1):
            table: Dict[Tuple[int, int], Vec] = {}
            tgt = index[d1 + d2]
            for i, x in enumerate(words[d1]):
                for j, y in enumerate(words[d2]):
                    vec: Vec = {}
                    for word, exps in shuffle_terms(x, y).items():
                        c = to_coeff(exps)
                        if c != 0:
                            vec[tgt[word]] = c
                    table[(i, j)] = vec
            product[(d1, d2)] = table

    coproduct: List[List[List[DeltaTerm]]] = []
    for m in range(M + 1):
        level = []
        for w in words[m]:
            terms = []
            for cut in range(len(w) + 1):
                left, right = w[:cut], w[cut:]
                d1 = _word_weight(left)
                terms.append((d1, index[d1][left],
                              index[m - d1][right], 1))
            level.append(terms)
        coproduct.append(level)

    label = name or (f"shuffle{tuple(vv)}" if not symbolic and qfrac == 1
                     else f"qshuffle{tuple(vv)},q={q}")
    return HopfInstance(
        name=label, max_degree=M, basis=[tuple(l) for l in words],
        product=product, coproduct=coproduct, ring=ring,
        q=SYMBOLIC if symbolic else qfrac,
        dimension_cap=dimension_cap, force_dimensions=force_dimensions,
        check=check)


def build_sym_powersum(max_degree: int, check: bool = True) -> HopfInstance:
    """Polynomial algebra on one primitive generator per positive degree,
    in the basis of generator monomials indexed by partitions."""
    M = max_degree
    basis = [tuple(sorted(partitions(m), reverse=True)) for m in range(M + 1)]
    index = [{p: i for i, p in enumerate(level)} for level in basis]

    product: MuTable = {}
    for d1 in range(M + 1):
        for d2 in range(M + 1 - d1):
            table: Dict[Tuple[int, int], Vec] = {}
            for i, lam in enumerate(basis[d1]):
                for j, mu in enumerate(basis[d2]):
                    merged = tuple(sorted(lam + mu, reverse=True))
                    table[(i, j)] = {index[d1 + d2][merged]: 1}
            product[(d1, d2)] = table

    coproduct: List[List[List[DeltaTerm]]] = []
    for m in range(M + 1):
        level = []
        for lam in basis[m]:
            mults: Dict[int, int] = {}
            for p in lam:
                mults[p] = mults.get(p, 0) + 1
            parts = sorted(mults)
            terms: List[DeltaTerm] = []

            def walk(idx: int, taken: List[int], coeff: int):
                if idx == len(parts):
                    left = []
                    for p, k in zip(parts, taken):
                        left.extend([p] * k)
                    left_t = tuple(sorted(left, reverse=True))
                    remaining: Dict[int, int] = dict(mults)
                    for p, k in zip(parts, taken):
                        remaining[p] -= k
                    right_l = []
                    for p, k in remaining.items():
                        right_l.extend([p] * k)
                    right_t = tuple(sorted(right_l, reverse=True))
                    d1 = sum(left_t)
                    terms.append((d1, index[d1][left_t],
                                  index[m - d1][right_t], coeff))
                    return
                p = parts[idx]
                for k in range(mults[p] + 1):
                    walk(idx + 1, taken + [k], coeff * math.comb(mults[p], k))

            walk(0, [], 1)
            level.append(terms)
        coproduct.append(level)

    return HopfInstance(
        name=f"sym_powersum(M={M})", max_degree=M, basis=basis,
        product=product, coproduct=coproduct, ring="int", q=Fraction(1),
        check=check)


def _compositions(m: int) -> List[tuple]:
    if m == 0:
        return [()]
    out = []
    for a in range(1, m + 1):
        out.extend((a,) + rest for rest in _compositions(m - a))
    return out


def build_qsym_monomial(max_degree: int, check: bool = True) -> HopfInstance:
    """Quasi-shuffle algebra on compositions with the deconcatenation
    coproduct (monomial-style basis)."""
    M = max_degree
    basis = [tuple(_compositions(m)) for m in range(M + 1)]
    index = [{c: i for i, c in enumerate(level)} for level in basis]

    memo: Dict[tuple, Dict[tuple, int]] = {}

    def quasi_shuffle(a: tuple, b: tuple) -> Dict[tuple, int]:
        if not a:
            return {b: 1}
        if not b:
            return {a: 1}
        key = (a, b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: Dict[tuple, int] = {}
        for comp, c in quasi_shuffle(a[1:], b).items():
            t = (a[0],) + comp
            out[t] = out.get(t, 0) + c
        for comp, c in quasi_shuffle(a, b[1:]).items():
            t = (b[0],) + comp
            out[t] = out.get(t, 0) + c
        for comp, c in quasi_shuffle(a[1:], b[1:]).items():
            t = (a[0] + b[0],) + comp
            out[t] = out.get(t, 0) + c
        memo[key] = out
        return out

    product: MuTable = {}
    for d1 in range(M + 1):
        for d2 in range(M + 1 - d1):
            table: Dict[Tuple[int, int], Vec] = {}
            tgt = index[d1 + d2]
            for i, a in enumerate(basis[d1]):
                for j, b in enumerate(basis[d2]):
                    table[(i, j)] = {
                        tgt[comp]: c for comp, c in quasi_shuffle(a, b).items()
                    }
            product[(d1, d2)] = table

    coproduct: List[List[List[DeltaTerm]]] = []
    for m in range(M + 1):
        level = []
        for comp in basis[m]:
            terms: List[DeltaTerm] = []
            for cut in range(len(comp) + 1):
                left, right = comp[:cut], comp[cut:]
                d1 = sum(left)
                terms.append((d1, index[d1][left], index[m - d1][right], 1))
            level.append(terms)
        coproduct.append(level)

    return HopfInstance(
        name=f"qsym_monomial(M={M})", max_degree=M, basis=basis,
        product=product, coproduct=coproduct, ring="int", q=Fraction(1),
        check=check)


# ---------------------------------------------------------------------------
# closed-form antipodes for the builders
# ---------------------------------------------------------------------------

def shuffle_antipode_formula(inst: HopfInstance) -> GradedEndomorphism:
    """Signed q-weighted reversal: a word of length k and letter weights
    w_1..w_k maps to (-1)^k q^(sum of w_a w_b over a < b) times its
    reversal."""

    def image(m: int, j: int) -> Vec:
        word = inst.basis[m][j]
        k = len(word)
        inv = 0
        ws = [w for w, _ in word]
        for a in range(k):
            for b in range(a + 1, k):
                inv += ws[a] * ws[b]
        coeff = inst.braid_factor(inv)
        if k % 2:
            coeff = -coeff
        target = inst.index[m][word[::-1]]
        return {target: coeff}

    return GradedEndomorphism.from_images(inst, image)


def sym_antipode_formula(inst: HopfInstance) -> GradedEndomorphism:
    """Diagonal signs: a generator monomial with k factors maps to
    (-1)^k times itself."""

    def image(m: int, j: int) -> Vec:
        lam = inst.basis[m][j]
        return {j: (-1) ** len(lam)}

    return GradedEndomorphism.from_images(inst, image)


def _coarsenings(comp: tuple) -> List[tuple]:
    """All ways of summing adjacent blocks of a composition."""
    if not comp:
        return [()]
    out = []
    for first_len in range(1, len(comp) + 1):
        head = sum(comp[:first_len])
        for rest in _coarsenings(comp[first_len:]):
            out.append((head,) + rest)
    return out


def qsym_antipode_formula(inst: HopfInstance) -> GradedEndomorphism:
    """Signed sum of reversed coarsenings."""

    def image(m: int, j: int) -> Vec:
        comp = inst.basis[m][j]
        sign = (-1) ** len(comp)
        out: Vec = {}
        for beta in _coarsenings(comp):
            t = inst.index[m][beta[::-1]]
            out[t] = out.get(t, 0) + sign
        return out

    return GradedEndomorphism.from_images(inst, image)
