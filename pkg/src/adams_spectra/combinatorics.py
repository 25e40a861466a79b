"""Partition and composition combinatorics underlying operator spectra.

Everything here is exact integer (or Fraction) arithmetic, no series
machinery: partitions by length, eigenvalue multiplicity tables built from
generator counts, Witt-style alphabet inversion, palindromic word counts on
weighted alphabets, and weighted compositions with their inversion
statistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import (
    InvalidInputError,
    NonIntegralError,
    TooLargeError,
)


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

def divisors(n: int) -> List[int]:
    if n < 1:
        raise InvalidInputError("divisors need n >= 1", value=n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def moebius(n: int) -> int:
    if n < 1:
        raise InvalidInputError("moebius needs n >= 1", value=n)
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def multiset_binom(g: int, j: int) -> int:
    """Multisets of size j from g types: C(g+j-1, j).

    Defined for any integer g by the polynomial g(g+1)...(g+j-1)/j!,
    so formal evaluation at negative generator counts stays exact.
    """
    if j < 0:
        raise InvalidInputError("multiset size must be >= 0", value=j)
    num = 1
    for r in range(j):
        num *= g + r
    return num // math.factorial(j)


def rational_binom(n: Fraction, k: int) -> Fraction:
    """Generalized binomial C(n, k) = n(n-1)...(n-k+1)/k! for rational n."""
    if k < 0:
        raise InvalidInputError("binomial lower index must be >= 0", value=k)
    num = Fraction(1)
    for r in range(k):
        num *= Fraction(n) - r
    return num / math.factorial(k)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def partitions(m: int) -> Iterator[Tuple[int, ...]]:
    """Yield all partitions of m as weakly decreasing tuples of parts."""
    if m < 0:
        raise InvalidInputError("cannot partition a negative integer", value=m)

    def gen(remaining: int, largest: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(remaining, largest), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    yield from gen(m, m, ())


def partitions_by_length(m: int, max_degree: int | None = None) -> List[List[int]]:
    """Table p[k][m'] = number of partitions of m' with exactly k parts,
    for 0 <= k, m' <= m (or max_degree)."""
    n = m if max_degree is None else max_degree
    p = [[0] * (n + 1) for _ in range(n + 1)]
    p[0][0] = 1
    for k in range(1, n + 1):
        for mm in range(k, n + 1):
            # smallest part 1 stripped, or all parts decreased by 1
            p[k][mm] = p[k - 1][mm - 1] + (p[k][mm - k] if mm - k >= 0 else 0)
    return p


def conjugate_partition(parts: Sequence[int]) -> Tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


@dataclass(frozen=True)
class Partition:
    """A partition stored as its weakly decreasing parts tuple."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise InvalidInputError("partition parts must be >= 1", value=self.parts)
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise InvalidInputError(
                "partition parts must be weakly decreasing", value=self.parts
            )

    @staticmethod
    def from_parts(parts: Iterable[int]) -> "Partition":
        return Partition(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def conjugate(self) -> "Partition":
        return Partition(conjugate_partition(self.parts))

    def is_self_conjugate(self) -> bool:
        return self.parts == conjugate_partition(self.parts)

    def is_strict(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def all_parts_odd(self) -> bool:
        return all(p % 2 == 1 for p in self.parts)


@dataclass(frozen=True)
class PartitionStats:
    """Counts of partition families of a fixed size, from one enumeration pass."""

    size: int
    total: int
    self_conjugate: int
    even_even_parts: int   # partitions with an even number of even parts
    odd_even_parts: int    # partitions with an odd number of even parts
    even_length: int
    odd_length: int
    strict: int
    all_parts_odd: int


def partition_statistics(m: int) -> PartitionStats:
    total = c = ee = oe = el = ol = st = od = 0
    for parts in partitions(m):
        total += 1
        even_parts = sum(1 for p in parts if p % 2 == 0)
        if even_parts % 2 == 0:
            ee += 1
        else:
            oe += 1
        if len(parts) % 2 == 0:
            el += 1
        else:
            ol += 1
        if len(set(parts)) == len(parts):
            st += 1
        if all(p % 2 == 1 for p in parts):
            od += 1
        if parts == conjugate_partition(parts):
            c += 1
    return PartitionStats(m, total, c, ee, oe, el, ol, st, od)


# ---------------------------------------------------------------------------
# eigenvalue multiplicity table from generator counts
# ---------------------------------------------------------------------------

def multiplicity_table(g: Sequence[int], max_degree: int) -> List[List[int]]:
    """Table mul[k][m] = sum over partitions of m with k parts of the product
    of multisets C(g_i + k_i - 1, k_i), for 0 <= k, m <= max_degree.

    Negative g_i are accepted (formal evaluation); missing g_i count as 0.
    """
    if max_degree < 0:
        raise InvalidInputError("max_degree must be >= 0", value=max_degree)
    M = max_degree
    gg = list(g) + [0] * max(0, M - len(g))
    for x in gg:
        if not isinstance(x, int):
            raise InvalidInputError("generator counts must be integers", value=g)
    table = [[0] * (M + 1) for _ in range(M + 1)]
    table[0][0] = 1
    for i in range(1, M + 1):
        gi = gg[i - 1]
        if gi == 0:
            continue
        nxt = [row[:] for row in table]
        j = 1
        while i * j <= M:
            b = multiset_binom(gi, j)
            if b:
                for k in range(0, M - j + 1):
                    row = table[k]
                    dst = nxt[k + j]
                    for mm in range(0, M - i * j + 1):
                        if row[mm]:
                            dst[mm + i * j] += b * row[mm]
            j += 1
        table = nxt
    return table


# ---------------------------------------------------------------------------
# weighted alphabets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightedAlphabet:
    """Finitely many letters per positive weight: counts[i] letters of
    weight i+1."""

    counts: Tuple[int, ...]

    def __post_init__(self):
        if any((not isinstance(c, int)) or c < 0 for c in self.counts):
            raise InvalidInputError(
                "alphabet letter counts must be nonnegative integers",
                value=self.counts,
            )

    def count(self, weight: int) -> int:
        return self.counts[weight - 1] if 1 <= weight <= len(self.counts) else 0

    @property
    def max_weight(self) -> int:
        return len(self.counts)


AlphabetLike = Union[WeightedAlphabet, Sequence[int]]


def alphabet_counts(v: AlphabetLike) -> Tuple[int, ...]:
    if isinstance(v, WeightedAlphabet):
        return v.counts
    return WeightedAlphabet(tuple(v)).counts


def word_counts(v: AlphabetLike, max_degree: int) -> List[int]:
    """Number of words of each total weight 0..max_degree."""
    vv = alphabet_counts(v)
    h = [0] * (max_degree + 1)
    h[0] = 1
    for m in range(1, max_degree + 1):
        h[m] = sum(vv[a - 1] * h[m - a] for a in range(1, min(m, len(vv)) + 1))
    return h


def witt_counts(v: AlphabetLike, max_degree: int) -> List[int]:
    """Free Lie style generator counts g_1..g_N for the alphabet v, via
    Moebius summation over partitions: g_n = sum over d | n of mu(d)/d
    times sum over partitions L of n/d of (len(L)-1)!/prod(mult_i!) * v^L."""
    vv = alphabet_counts(v)

    def inner(n: int) -> Fraction:
        acc = Fraction(0)
        for parts in partitions(n):
            prod = Fraction(math.factorial(len(parts) - 1))
            mults: Dict[int, int] = {}
            for p in parts:
                mults[p] = mults.get(p, 0) + 1
            ok = True
            for p, k in mults.items():
                c = vv[p - 1] if p <= len(vv) else 0
                if c == 0:
                    ok = False
                    break
                prod *= Fraction(c) ** k
                prod /= math.factorial(k)
            if ok:
                acc += prod
        return acc

    out: List[int] = []
    for n in range(1, max_degree + 1):
        total = Fraction(0)
        for d in divisors(n):
            mu = moebius(d)
            if mu:
                total += Fraction(mu, d) * inner(n // d)
        if total.denominator != 1:
            raise NonIntegralError(
                f"Witt count at degree {n} is not an integer: {total}",
                value=list(vv),
            )
        out.append(int(total))
    return out


# ---------------------------------------------------------------------------
# palindromic words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PalindromeCounts:
    """Palindromic word counts on a weighted alphabet, by length and weight.

    by_length[k][m] counts palindromes of length k and weight m; totals,
    parity splits and the non-palindrome count follow from one table.
    """

    max_degree: int
    by_length: Tuple[Tuple[int, ...], ...]
    words: Tuple[int, ...]

    def pal(self, m: int) -> int:
        return sum(self.by_length[k][m] for k in range(len(self.by_length)))

    def even_length(self, m: int) -> int:
        return sum(self.by_length[k][m] for k in range(0, len(self.by_length), 2))

    def odd_length(self, m: int) -> int:
        return sum(self.by_length[k][m] for k in range(1, len(self.by_length), 2))

    def non_palindromic(self, m: int) -> int:
        return self.words[m] - self.pal(m)


def palindrome_table(v: AlphabetLike, max_degree: int) -> PalindromeCounts:
    """Count palindromic words by (length, weight) up to max_degree.

    Stripping the equal first and last letters gives the recursion
    pal(k, m) = sum_a v_a * pal(k-2, m-2a) for k >= 2, seeded by
    pal(0, 0) = 1 and pal(1, m) = v_m.
    """
    vv = alphabet_counts(v)
    M = max_degree
    table = [[0] * (M + 1) for _ in range(M + 1)]
    if M >= 0:
        table[0][0] = 1
    for m in range(1, M + 1):
        table[1][m] = vv[m - 1] if m <= len(vv) else 0
    for k in range(2, M + 1):
        for m in range(k, M + 1):
            s = 0
            for a in range(1, min(len(vv), (m - (k - 2)) // 2) + 1):
                if vv[a - 1] and m - 2 * a >= 0:
                    s += vv[a - 1] * table[k - 2][m - 2 * a]
            table[k][m] = s
    return PalindromeCounts(
        max_degree=M,
        by_length=tuple(tuple(row) for row in table),
        words=tuple(word_counts(vv, M)),
    )


# ---------------------------------------------------------------------------
# weighted compositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightedComposition:
    """A composition of its weight into parts supported by some alphabet."""

    parts: Tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def reversal(self) -> "WeightedComposition":
        return WeightedComposition(self.parts[::-1])

    def is_palindromic(self) -> bool:
        return self.parts == self.parts[::-1]

    def inversion_stat(self) -> int:
        """sum of a_i * a_j over i < j; equals (weight^2 - sum a_i^2)/2."""
        m = self.weight
        return (m * m - sum(a * a for a in self.parts)) // 2

    def word_count(self, v: AlphabetLike) -> int:
        vv = alphabet_counts(v)
        n = 1
        for a in self.parts:
            n *= vv[a - 1] if a <= len(vv) else 0
        return n

    def palindromic_word_count(self, v: AlphabetLike) -> int:
        """Palindromic words with this multiweight: free choice on the first
        half (middle letter included), zero unless the composition itself is
        palindromic."""
        if not self.is_palindromic():
            return 0
        vv = alphabet_counts(v)
        n = 1
        for a in self.parts[: (len(self.parts) + 1) // 2]:
            n *= vv[a - 1] if a <= len(vv) else 0
        return n


def weighted_compositions(
    v: AlphabetLike, degree: int, cap: int = 10**6
) -> Iterator[WeightedComposition]:
    """Yield compositions of degree into parts with at least one letter,
    in lexicographic order.  Refuses degrees whose total word count
    exceeds cap, since downstream uses enumerate per-word data."""
    vv = alphabet_counts(v)
    if degree < 0:
        raise InvalidInputError("degree must be >= 0", value=degree)
    total_words = word_counts(vv, degree)[degree]
    if total_words > cap:
        raise TooLargeError(
            f"{total_words} words of weight {degree} exceeds cap {cap}",
            value={"degree": degree, "cap": cap},
        )
    support = [a for a in range(1, len(vv) + 1) if vv[a - 1]]

    def gen(remaining: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield WeightedComposition(prefix)
            return
        for a in support:
            if a <= remaining:
                yield from gen(remaining - a, prefix + (a,))

    yield from gen(degree, ())
