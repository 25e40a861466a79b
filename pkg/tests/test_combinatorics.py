import math
from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, settings, strategies as st

from adams_spectra.combinatorics import (
    Partition,
    WeightedComposition,
    conjugate_partition,
    divisors,
    moebius,
    multiplicity_table,
    multiset_binom,
    palindrome_table,
    partition_statistics,
    partitions,
    partitions_by_length,
    rational_binom,
    weighted_compositions,
    witt_counts,
    word_counts,
)
from adams_spectra.errors import InvalidInputError, TooLargeError


# --- elementary -----------------------------------------------------------

def test_moebius_brute_force():
    def brute(n):
        # count prime factors, zero on squares
        for p in range(2, n + 1):
            if n % (p * p) == 0:
                return 0
        k = 0
        m = n
        p = 2
        while m > 1:
            if m % p == 0:
                k += 1
                while m % p == 0:
                    m //= p
            p += 1
        return (-1) ** k

    for n in range(1, 200):
        assert moebius(n) == brute(n)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(9) == [1, 3, 9]


def test_multiset_binom_matches_comb():
    for g in range(1, 8):
        for j in range(0, 8):
            assert multiset_binom(g, j) == math.comb(g + j - 1, j)
    assert multiset_binom(0, 0) == 1
    assert all(multiset_binom(0, j) == 0 for j in range(1, 6))
    # brute force: multisets of size j from g labelled types
    for g in range(1, 6):
        for j in range(0, 6):
            brute = sum(1 for _ in combinations_with_replacement(range(g), j))
            assert multiset_binom(g, j) == brute


def test_multiset_binom_negative_argument():
    # (1-x)^g expansion: C(-g+j-1, j) = (-1)^j C(g, j)
    for g in range(0, 7):
        for j in range(0, 7):
            assert multiset_binom(-g, j) == (-1) ** j * math.comb(g, j)


def test_rational_binom():
    assert rational_binom(Fraction(5), 2) == 10
    assert rational_binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert rational_binom(Fraction(-1), 3) == -1
    for n in range(8):
        for k in range(8):
            assert rational_binom(Fraction(n), k) == math.comb(n, k) if k <= n \
                else rational_binom(Fraction(n), k) == 0


# --- partitions -----------------------------------------------------------

KNOWN_P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_partition_counts():
    for m, pm in enumerate(KNOWN_P):
        got = list(partitions(m))
        assert len(got) == pm
        assert len(set(got)) == pm
        for parts in got:
            assert sum(parts) == m
            assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def test_partitions_by_length_vs_enumeration():
    table = partitions_by_length(10)
    for m in range(11):
        by_len = {}
        for parts in partitions(m):
            by_len[len(parts)] = by_len.get(len(parts), 0) + 1
        for k in range(11):
            assert table[k][m] == by_len.get(k, 0)


def test_conjugate():
    assert conjugate_partition((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate_partition(()) == ()
    for m in range(9):
        for parts in partitions(m):
            assert conjugate_partition(conjugate_partition(parts)) == parts


def test_partition_class():
    p = Partition.from_parts([1, 3, 1])
    assert p.parts == (3, 1, 1)
    assert p.size == 5 and p.length == 3
    assert p.multiplicities() == {3: 1, 1: 2}
    assert p.conjugate().parts == (3, 1, 1)
    assert p.is_self_conjugate()
    assert not p.is_strict()
    assert p.all_parts_odd()
    with pytest.raises(InvalidInputError):
        Partition((1, 3))


def test_partition_statistics_identities():
    # classical: self-conjugate partitions are counted by the signed count
    # over even parts, and strict partitions match all-odd-parts partitions
    for m in range(0, 16):
        s = partition_statistics(m)
        assert s.total == len(list(partitions(m)))
        assert s.even_even_parts + s.odd_even_parts == s.total
        assert s.even_length + s.odd_length == s.total
        assert s.even_even_parts - s.odd_even_parts == s.self_conjugate
        assert s.strict == s.all_parts_odd


def test_self_conjugate_known_values():
    # distinct odd parts <-> self-conjugate
    expected = []
    for m in range(12):
        n = 0
        for parts in partitions(m):
            if len(set(parts)) == len(parts) and all(p % 2 for p in parts):
                n += 1
        expected.append(n)
    got = [partition_statistics(m).self_conjugate for m in range(12)]
    assert got == expected


# --- multiplicity table ----------------------------------------------------

def brute_multiplicity(g, k, m):
    """Count multisets of k generators with total degree m by enumeration:
    generators are (degree, label) pairs, g[i-1] labels in degree i."""
    gens = []
    for i, gi in enumerate(g, start=1):
        gens.extend((i, lab) for lab in range(gi))
    count = 0
    for combo in combinations_with_replacement(gens, k):
        if sum(d for d, _ in combo) == m:
            count += 1
    return count


def test_multiplicity_table_vs_brute_force():
    for g in [(1, 1, 1, 1, 1, 1), (2, 1, 2), (3,), (0, 2, 0, 1), (1, 0, 3, 1)]:
        table = multiplicity_table(g, 6)
        for k in range(5):
            for m in range(7):
                assert table[k][m] == brute_multiplicity(g, k, m), (g, k, m)


def test_multiplicity_table_all_ones_counts_partitions_by_length():
    table = multiplicity_table([1] * 12, 12)
    by_len = partitions_by_length(12)
    assert table == by_len


def test_multiplicity_table_edges():
    t = multiplicity_table([5, 7], 4)
    assert t[0][0] == 1
    assert all(t[0][m] == 0 for m in range(1, 5))
    # one part: k=1 row reads off g
    assert [t[1][m] for m in range(1, 5)] == [5, 7, 0, 0]
    # k exceeding m impossible
    for m in range(5):
        for k in range(m + 1, 5):
            assert t[k][m] == 0


def test_multiplicity_table_row_sums_match_euler_transform():
    from adams_spectra.series import euler_transform
    g = [2, 0, 1, 3]
    table = multiplicity_table(g, 8)
    h = euler_transform(g, 8).integer_coeffs()
    for m in range(9):
        assert sum(table[k][m] for k in range(9)) == h[m]


def test_multiplicity_table_negative_counts_formal():
    # generator count -1 in degree 1 contributes the polynomial factor 1 - t:
    # the only nonzero entries are (k, m) = (0, 0) and (1, 1)
    t = multiplicity_table([-1], 5)
    assert t[0][0] == 1 and t[1][1] == -1
    assert sum(abs(t[k][m]) for k in range(6) for m in range(6)) == 2
    # degree 2 with count -2: (1 - t^2)^2 = 1 - 2t^2 + t^4
    t2 = multiplicity_table([0, -2], 4)
    assert t2[1][2] == -2 and t2[2][4] == 1
    from adams_spectra.series import euler_transform
    h = euler_transform([0, -2], 4).coeffs
    for m in range(5):
        assert sum(t2[k][m] for k in range(5)) == h[m]


# --- Witt counts -----------------------------------------------------------

def brute_necklaces(r, n):
    """Aperiodic necklaces of length n over r letters, by direct check."""
    count = 0
    for word in product(range(r), repeat=n):
        rots = {word[i:] + word[:i] for i in range(n)}
        if len(rots) == n and min(rots) == word:
            count += 1
    return count


def test_witt_counts_unweighted_alphabet_vs_necklaces():
    # alphabet of r letters in weight 1: generator counts are aperiodic
    # necklace counts except in degree 1 where they equal r
    for r in (2, 3):
        g = witt_counts([r], 8)
        assert g[0] == r
        for n in range(2, 9):
            assert g[n - 1] == brute_necklaces(r, n), (r, n)


def brute_lyndon_weighted(v, n):
    """Lyndon words of weight n over a weighted alphabet, brute force."""
    letters = []
    for w, cnt in enumerate(v, start=1):
        letters.extend((w, i) for i in range(cnt))
    results = []

    def gen(remaining, prefix):
        if remaining == 0:
            results.append(tuple(prefix))
            return
        for letter in letters:
            if letter[0] <= remaining:
                gen(remaining - letter[0], prefix + [letter])

    gen(n, [])
    count = 0
    for word in results:
        rots = {word[i:] + word[:i] for i in range(len(word))}
        if len(rots) == len(word) and min(rots) == word:
            count += 1
    return count


def test_witt_counts_weighted_vs_lyndon():
    for v in [(1, 1), (2, 1), (1, 0, 3)]:
        g = witt_counts(v, 7)
        for n in range(1, 8):
            assert g[n - 1] == brute_lyndon_weighted(v, n), (v, n)


def test_witt_counts_all_ones_alphabet():
    assert witt_counts([1] * 6, 6) == [1, 1, 2, 3, 6, 9]


def test_witt_consistency_with_inverse_euler():
    from adams_spectra.series import inverse_euler_transform
    for v in [(1, 1), (2,), (1, 2, 1), (3, 0, 1)]:
        h = word_counts(v, 8)
        assert witt_counts(v, 8) == inverse_euler_transform(h)


# --- palindromes ------------------------------------------------------------

def enumerate_words(v, max_degree):
    """All words as letter tuples, letters are (weight, label)."""
    letters = []
    for w, cnt in enumerate(v, start=1):
        letters.extend((w, i) for i in range(cnt))
    by_weight = {0: [()]}
    for m in range(1, max_degree + 1):
        level = []
        for letter in letters:
            if letter[0] <= m:
                for rest in by_weight[m - letter[0]]:
                    level.append((letter,) + rest)
        by_weight[m] = level
    return by_weight


@pytest.mark.parametrize("v", [(1, 1), (2, 1), (1, 0, 3), (3,)])
def test_palindrome_table_vs_word_enumeration(v):
    M = 9
    table = palindrome_table(v, M)
    words = enumerate_words(v, M)
    for m in range(M + 1):
        assert table.words[m] == len(words[m])
        by_len = {}
        for w in words[m]:
            if w == w[::-1]:
                by_len[len(w)] = by_len.get(len(w), 0) + 1
        for k in range(M + 1):
            assert table.by_length[k][m] == by_len.get(k, 0), (v, k, m)
        assert table.pal(m) == sum(by_len.values())
        assert table.non_palindromic(m) == len(words[m]) - sum(by_len.values())


def test_palindrome_parity_invariants():
    for v in [(1, 1), (2, 2), (1, 1, 1, 1)]:
        t = palindrome_table(v, 12)
        for m in range(13):
            # non-palindromes pair up under reversal
            assert t.non_palindromic(m) % 2 == 0
            for k in range(0, 13, 2):
                if m % 2 == 1:
                    # even-length palindromes have even weight
                    assert t.by_length[k][m] == 0


def test_palindrome_table_single_heavy_letter():
    # alphabet with r letters of weight 1: palindromes of weight m are r^ceil(m/2)
    for r in (1, 2, 3):
        t = palindrome_table([r], 10)
        for m in range(11):
            assert t.pal(m) == r ** ((m + 1) // 2)


# --- weighted compositions ---------------------------------------------------

def test_weighted_compositions_enumeration():
    comps = list(weighted_compositions((1, 1), 4))
    parts = sorted(c.parts for c in comps)
    assert parts == [(1, 1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2)]


def test_weighted_composition_statistics():
    c = WeightedComposition((2, 1, 3))
    assert c.weight == 6 and c.length == 3
    assert c.reversal().parts == (3, 1, 2)
    assert not c.is_palindromic()
    assert c.inversion_stat() == 2 * 1 + 2 * 3 + 1 * 3
    # brute force the inversion statistic
    for parts in [(1, 1), (2, 3, 4), (1, 2, 1, 2)]:
        w = WeightedComposition(parts)
        brute = sum(parts[i] * parts[j]
                    for i in range(len(parts))
                    for j in range(i + 1, len(parts)))
        assert w.inversion_stat() == brute


def test_word_and_palindrome_counts_by_composition():
    for v in [(1, 1), (2, 1), (1, 0, 3)]:
        t = palindrome_table(v, 8)
        for m in range(9):
            comps = list(weighted_compositions(v, m))
            assert sum(c.word_count(v) for c in comps) == t.words[m]
            assert sum(c.palindromic_word_count(v) for c in comps) == t.pal(m)


def test_weighted_compositions_cap():
    with pytest.raises(TooLargeError):
        list(weighted_compositions((2,), 30, cap=10**6))
    # exactly at the cap is fine
    assert len(list(weighted_compositions((2,), 3, cap=8))) == 1


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_composition_word_totals(v, m):
    total = word_counts(v, m)[m]
    comps = list(weighted_compositions(v, m, cap=10**7))
    assert sum(c.word_count(v) for c in comps) == total
