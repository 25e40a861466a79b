"""Antipode spectra of cofree towers: palindrome-counted factorizations,
their generating functions, and the q-deformed refinement."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adams_spectra.cofree import (
    cofree_char_poly,
    cofree_trace,
    pal_gfs,
    q_char_poly,
    q_pal_gfs,
    q_trace,
)
from adams_spectra.combinatorics import (
    palindrome_table,
    rational_binom,
    weighted_compositions,
)
from adams_spectra.errors import TooLargeError
from adams_spectra.qlaurent import QLaurent
from adams_spectra.spectra import (
    DimensionProfile,
    char_poly_antipode,
    trace_adams,
)

alphabets = st.lists(
    st.integers(min_value=0, max_value=3), min_size=1, max_size=4
).filter(lambda v: sum(v) >= 1)

FACTORIAL_TOWER_V = (1, 1, 3, 13, 71, 461)

# palindrome counts pal(k, m) of the factorial tower alphabet:
# row k, columns m = k..6
FACTORIAL_TOWER_PAL_ROWS = {
    1: (1, 1, 3, 13, 71, 461),
    2: (1, 0, 1, 0, 3),
    3: (1, 1, 4, 14),
    4: (1, 0, 2),
    5: (1, 1),
    6: (1,),
}


def test_factorial_tower_palindrome_rows():
    table = palindrome_table(FACTORIAL_TOWER_V, 6).by_length
    for k, row in FACTORIAL_TOWER_PAL_ROWS.items():
        assert tuple(table[k][m] for m in range(k, 7)) == row


def test_factorial_tower_antipode_degree_three():
    spec = cofree_char_poly(FACTORIAL_TOWER_V, 3)
    assert (spec.even_pal, spec.odd_pal, spec.non_pal) == (0, 4, 2)
    assert spec.trace() == -4
    assert spec.dimension() == 6
    anti = spec.as_antipode_spectrum()
    assert (anti.plus, anti.minus) == (1, 5)


def test_cofree_route_matches_multiplicity_route():
    """(x-1)^epal (x+1)^opal (x^2-1)^(nopal/2) equals the parity split of
    the length-multiplicity factorization, word alphabet by word
    alphabet."""
    for v in ((1,), (2,), (1, 1), (1, 0, 3), (2, 1)):
        prof = DimensionProfile.from_v(v, 8)
        for m in range(9):
            cof = cofree_char_poly(v, m).as_antipode_spectrum()
            anti = char_poly_antipode(prof, m)
            assert (cof.plus, cof.minus) == (anti.plus, anti.minus)
            assert cof.poly_coeffs() == anti.poly_coeffs()


@settings(max_examples=30, deadline=None)
@given(v=alphabets, m=st.integers(min_value=0, max_value=8))
def test_cofree_trace_matches_closed_trace(v, m):
    prof = DimensionProfile.from_v(v, 8)
    assert cofree_trace(v, m) == trace_adams(prof, -1, m)


@settings(max_examples=30, deadline=None)
@given(v=alphabets, m=st.integers(min_value=0, max_value=8))
def test_dimension_accounting(v, m):
    prof = DimensionProfile.from_v(v, 8)
    spec = cofree_char_poly(v, m)
    assert spec.dimension() == prof.h[m]
    assert spec.non_pal % 2 == 0


def test_cofree_json():
    data = cofree_char_poly(FACTORIAL_TOWER_V, 3).to_json()
    assert data == {"m": 3, "even_palindromes": 0, "odd_palindromes": 4,
                    "non_palindromes": 2}


# ---------------------------------------------------------------------------
# palindrome generating functions
# ---------------------------------------------------------------------------

@settings(max_examples=20, deadline=None)
@given(v=alphabets)
def test_pal_gfs_expand_palindrome_table(v):
    M = 9
    gfs = pal_gfs(v, M)
    table = palindrome_table(v, M).by_length
    for j in range(M // 2 + 1):
        for m in range(M + 1):
            assert gfs.even[j].coefficient(m) == table[2 * j][m]
            if 2 * j + 1 <= M:
                assert gfs.odd[j].coefficient(m) == table[2 * j + 1][m]


@settings(max_examples=20, deadline=None)
@given(v=alphabets)
def test_pal_trace_gf_expands_traces(v):
    M = 9
    gfs = pal_gfs(v, M)
    for m in range(M + 1):
        assert gfs.trace.coefficient(m) == cofree_trace(v, m)


def _fib(h: int) -> int:
    f = [1, 1, 1]
    while len(f) <= h:
        f.append(f[-1] + f[-2])
    return f[h]


def test_odd_alphabet_palindromes_match_binomial_formula():
    """For the alphabet with one letter in each odd weight, palindrome
    counts collapse to single binomial coefficients."""
    M = 12
    v = tuple(1 if i % 2 == 0 else 0 for i in range(M))
    table = palindrome_table(v, M).by_length
    for m in range(M + 1):
        for k in range(M + 1):
            if m % 2 == 0 and (m - k) % 4 == 0 and k <= m:
                want = rational_binom(Fraction((m + k) // 4 - 1),
                                      (m - k) // 4)
            elif m % 2 == 1 and k % 2 == 1 and k <= m:
                want = rational_binom(Fraction((m + k - 1) // 4),
                                      (m - k + 1) // 4)
            else:
                want = 0
            assert table[k][m] == want, (k, m)


def test_odd_alphabet_trace_is_signed_fibonacci():
    M = 12
    v = tuple(1 if i % 2 == 0 else 0 for i in range(M))
    for m in range(M + 1):
        if m % 2 == 0:
            assert cofree_trace(v, m) == _fib(m // 2)
        else:
            assert cofree_trace(v, m) == -_fib((m + 1) // 2 + 1)


def test_pal_gf_square_alphabet_collapse():
    # one letter in each weight: palindromes of length k and weight m are
    # determined by the first half, so the trace telescopes
    gfs = pal_gfs((1, 1, 1, 1, 1, 1), 6)
    assert [gfs.trace.coefficient(m) for m in range(7)] == \
        [1, -1, 0, -2, 0, -4, 0]


# ---------------------------------------------------------------------------
# q-deformation
# ---------------------------------------------------------------------------

def test_q_factorization_fibonacci_degree_three():
    spec = q_char_poly((1, 1), 3)
    assert spec.linear == ((-1, 3, 1),)
    assert spec.quadratic == ((4, 1),)
    assert spec.dimension() == 3
    assert spec.trace() == QLaurent.monomial(-1, 3)
    # (x + q^3)(x^2 - q^4), ascending in x
    q = QLaurent.monomial
    assert spec.poly_coeffs() == (q(-1, 7), q(-1, 4), q(1, 3), q(1, 0))


def test_q_factorization_specializes_at_one():
    for v in ((1,), (1, 1), (2,), (1, 0, 3)):
        for m in range(7):
            spec = q_char_poly(v, m)
            plain = cofree_char_poly(v, m)
            assert spec.specialize_q1() == plain
            assert spec.trace().evaluate(Fraction(1)) == plain.trace()


@settings(max_examples=25, deadline=None)
@given(v=alphabets, m=st.integers(min_value=0, max_value=7))
def test_q_trace_matches_factorization_trace(v, m):
    assert q_trace(v, m) == q_char_poly(v, m).trace()


def test_q_trace_gf_expands_q_traces():
    M = 8
    for v in ((1, 1), (2,), (1, 0, 3)):
        gfs = q_pal_gfs(v, M)
        for m in range(M + 1):
            assert gfs.trace_coefficient(m) == q_trace(v, m)


def test_q_pal_gfs_expand_weighted_palindromes():
    """The s^j coefficients expand palindromic compositions of length 2j
    and 2j+1, with the inversion statistic recovered after the triangular
    renormalization."""
    M = 8
    for v in ((1, 1), (1, 0, 3)):
        gfs = q_pal_gfs(v, M)
        shift = lambda m: m * (m - 1) // 2
        for m in range(M + 1):
            want_even: dict = {}
            want_odd: dict = {}
            for comp in weighted_compositions(v, m):
                count = comp.palindromic_word_count(v)
                if not count:
                    continue
                target = want_even if comp.length % 2 == 0 else want_odd
                j = comp.length // 2
                key = (j, comp.inversion_stat())
                target[key] = target.get(key, 0) + count
            for j in range(M // 2 + 1):
                even_terms = QLaurent(
                    {e: c for (jj, e), c in want_even.items() if jj == j})
                got = gfs.even[j].coefficient(m)
                assert QLaurent.coerce(got).shift(shift(m)) == even_terms
                if 2 * j + 1 <= M:
                    odd_terms = QLaurent(
                        {e: c for (jj, e), c in want_odd.items() if jj == j})
                    got = gfs.odd[j].coefficient(m)
                    assert QLaurent.coerce(got).shift(shift(m)) == odd_terms


def test_q_word_count_cap():
    with pytest.raises(TooLargeError):
        q_char_poly((5,), 10, cap=100)
    # generous cap succeeds
    assert q_char_poly((5,), 4, cap=10**6).dimension() == 625


def test_q_json():
    data = q_char_poly((1, 1), 3).to_json()
    assert data == {
        "m": 3,
        "linear": [{"sign": -1, "q_exp": 3, "mult": 1}],
        "quadratic": [{"q_exp": 4, "mult": 1}],
    }
