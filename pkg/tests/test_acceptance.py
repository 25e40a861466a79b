"""End-to-end acceptance gate.

Twelve numbered criteria tie the whole package together: the factorial-tower
figure arrays, the cross-array alternating-sum identity, the classical
partition identities, the antipode trace tables, exact agreement between the
closed-form spectra and the brute-force matrix oracle, antipode structure,
the Eulerian idempotent system, the q-refinement, species, the
generating-function identities, the asymptotic ratio predictions, and the
realizability guard.

Each criterion is one test that prints a single ``[PASS]``/``[FAIL]`` line
(visible with ``pytest -s tests/test_acceptance.py``).  All comparisons are
exact unless the criterion itself states a tolerance.
"""

from __future__ import annotations

import functools
import math
import random
from fractions import Fraction

import pytest

from adams_spectra import (
    DimensionProfile,
    HypothesisViolatedError,
    NotRealizableError,
    QLaurent,
    RationalFunction,
    antipode_trace_gf,
    asymptotic_ratio,
    char_poly_adams,
    cofree_char_poly,
    cofree_trace,
    euler_transform,
    inverse_euler_transform,
    pal_gfs,
    palindrome_table,
    partition_statistics,
    profile_preset,
    q_char_poly,
    q_pal_gfs,
    q_trace,
    species_antipode_trace,
    species_expmul,
    species_preset,
    trace_gf,
    weighted_compositions,
)
from adams_spectra.exact_linalg import factor_plus_minus_one
from adams_spectra.oracle import (
    GradedEndomorphism,
    adams_endo,
    antipode_endo,
    build_qsym_monomial,
    build_shuffle,
    build_sym_powersum,
    char_poly_exact,
    eulerian_idempotents,
    qsym_antipode_formula,
    shuffle_antipode_formula,
)


def _criterion(num: int, label: str):
    """Print one pass/fail line per criterion, then let pytest see the
    original outcome."""

    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                fn()
            except BaseException:
                print(f"[FAIL] criterion {num:2d}: {label}")
                raise
            print(f"[PASS] criterion {num:2d}: {label}")

        return run

    return wrap


# ---------------------------------------------------------------------------
# criterion 1: the two factorial-tower arrays, exactly
# ---------------------------------------------------------------------------

# rows k = 1..6, columns m = k..6
FACTORIAL_MULT_ROWS = {
    1: (1, 1, 4, 17, 92, 572),
    2: (1, 1, 5, 21, 119),
    3: (1, 1, 5, 22),
    4: (1, 1, 5),
    5: (1, 1),
    6: (1,),
}
FACTORIAL_PAL_ROWS = {
    1: (1, 1, 3, 13, 71, 461),
    2: (1, 0, 1, 0, 3),
    3: (1, 1, 4, 14),
    4: (1, 0, 2),
    5: (1, 1),
    6: (1,),
}
FACTORIAL_ALPHABET = (1, 1, 3, 13, 71, 461)


@_criterion(1, "factorial-tower multiplicity and palindrome arrays")
def test_criterion_01_figure_arrays():
    prof = DimensionProfile.from_h([math.factorial(m) for m in range(7)])
    # the derived alphabet is the very one indexing the right-hand array
    assert prof.v == FACTORIAL_ALPHABET

    for m in range(1, 7):
        mul = dict(prof.multiplicities(m))
        for k in range(1, m + 1):
            assert mul.get(k, 0) == FACTORIAL_MULT_ROWS[k][m - k]
    mul6 = dict(prof.multiplicities(6))
    assert mul6[2] == 119
    assert mul6[3] == 22

    tab = palindrome_table(FACTORIAL_ALPHABET, 6)
    for m in range(1, 7):
        for k in range(1, m + 1):
            assert tab.by_length[k][m] == FACTORIAL_PAL_ROWS[k][m - k]
    assert tab.by_length[3][5] == 4
    assert tab.by_length[2][6] == 3
    assert tab.by_length[4][6] == 2


# ---------------------------------------------------------------------------
# criterion 2: alternating column sums of the two arrays agree
# ---------------------------------------------------------------------------

def _alt_mult_sum(prof: DimensionProfile, m: int) -> int:
    return sum((-1) ** k * mult for k, mult in prof.multiplicities(m))


def _alt_pal_sum(tab, m: int) -> int:
    return sum(
        (-1) ** k * tab.by_length[k][m] for k in range(len(tab.by_length))
    )


@_criterion(2, "alternating column sums agree across both arrays")
def test_criterion_02_cross_array_identity():
    prof = DimensionProfile.from_h([math.factorial(m) for m in range(7)])
    tab = palindrome_table(FACTORIAL_ALPHABET, 6)
    for m in range(7):
        assert _alt_mult_sum(prof, m) == _alt_pal_sum(tab, m)

    rng = random.Random(190117)
    checked = 0
    while checked < 200:
        length = rng.randint(1, 6)
        v = tuple(rng.randint(0, 4) for _ in range(length))
        if not 1 <= sum(v) <= 8:
            continue
        checked += 1
        prof = DimensionProfile.from_v(v, 12)
        tab = palindrome_table(v, 12)
        for m in range(13):
            assert _alt_mult_sum(prof, m) == _alt_pal_sum(tab, m), (v, m)
    assert checked == 200


# ---------------------------------------------------------------------------
# criterion 3: partition identities on the symmetric-function tower
# ---------------------------------------------------------------------------

@_criterion(3, "self-conjugate partition identities up to degree 40")
def test_criterion_03_partition_identities():
    gf = antipode_trace_gf(profile_preset("sym", 40))
    for m in range(41):
        st = partition_statistics(m)
        c = st.self_conjugate
        # c(m) = e(m) - o(m): even minus odd number of even parts
        assert c == st.even_even_parts - st.odd_even_parts
        # (-1)^m c(m) = sum over k of (-1)^k p_k(m): length-signed count
        assert (-1) ** m * c == st.even_length - st.odd_length
        # and the antipode trace generating function produces the same value
        assert gf.coefficient(m) == (-1) ** m * c


# ---------------------------------------------------------------------------
# criterion 4: antipode trace tables by two independent routes
# ---------------------------------------------------------------------------

def _fib_run(upto: int):
    f = [1, 1, 1]
    while len(f) <= upto:
        f.append(f[-1] + f[-2])
    return f


@_criterion(4, "quasisymmetric and peak antipode trace tables, two routes")
def test_criterion_04_trace_tables():
    M = 20
    f = _fib_run(M)

    def qsym_closed(m: int) -> int:
        if m == 0:
            return 1
        return 0 if m % 2 == 0 else -(2 ** ((m - 1) // 2))

    def peak_closed(m: int) -> int:
        return f[m // 2] if m % 2 == 0 else -f[(m + 1) // 2 + 1]

    for name, closed in (("qsym", qsym_closed), ("peak", peak_closed)):
        prof = profile_preset(name, M)
        assert prof.v is not None
        gf = antipode_trace_gf(prof)
        for m in range(M + 1):
            want = closed(m)
            assert gf.coefficient(m) == want, (name, m)          # h(t^2)/h(t)
            assert cofree_trace(prof.v, m) == want, (name, m)    # palindromes


# ---------------------------------------------------------------------------
# criterion 5: closed-form spectra equal the matrix oracle
# ---------------------------------------------------------------------------

ORACLE_DEGREE = 5
ORACLE_SCALARS = (-2, -1, 0, 1, 2, 3, Fraction(1, 2))


def _oracle_cases():
    cases = []
    for v in ((1,), (2,), (1, 1), (1, 1, 3)):
        cases.append(
            (build_shuffle(v, max_degree=ORACLE_DEGREE),
             DimensionProfile.from_v(v, ORACLE_DEGREE))
        )
    cases.append((build_sym_powersum(ORACLE_DEGREE),
                  profile_preset("sym", ORACLE_DEGREE)))
    cases.append((build_qsym_monomial(ORACLE_DEGREE),
                  profile_preset("qsym", ORACLE_DEGREE)))
    return cases


@_criterion(5, "characteristic polynomials match the matrix oracle")
def test_criterion_05_oracle_equivalence():
    compared = 0
    for inst, prof in _oracle_cases():
        for n in ORACLE_SCALARS:
            endo = adams_endo(inst, n)
            for m in range(ORACLE_DEGREE + 1):
                want = list(char_poly_adams(prof, n, m).poly_coeffs())
                assert char_poly_exact(endo, m) == want, (inst.name, n, m)
                compared += 1
    assert compared == 6 * len(ORACLE_SCALARS) * (ORACLE_DEGREE + 1)


# ---------------------------------------------------------------------------
# criterion 6: antipode structure on the matrix instances
# ---------------------------------------------------------------------------

@_criterion(6, "antipode formulas, axioms, and +-1 eigenvalues")
def test_criterion_06_antipode_structure():
    cases = _oracle_cases()
    shuffle_insts = [inst for inst, _ in cases[:4]]
    qsym_inst = cases[5][0]

    # signed reversal on shuffle towers
    for inst in shuffle_insts:
        assert antipode_endo(inst) == shuffle_antipode_formula(inst)
    # reversed-coarsening formula on the quasi-shuffle tower
    assert antipode_endo(qsym_inst) == qsym_antipode_formula(qsym_inst)

    for inst, _ in cases:
        s = antipode_endo(inst)
        ident = GradedEndomorphism.identity(inst)
        unit_counit = GradedEndomorphism.unit_counit(inst)
        # both antipode axioms
        assert s.convolve(ident) == unit_counit
        assert ident.convolve(s) == unit_counit
        # every eigenvalue is +1 or -1, with the right total count
        for m in range(ORACLE_DEGREE + 1):
            split = factor_plus_minus_one(char_poly_exact(s, m))
            assert split is not None, (inst.name, m)
            assert split[0] + split[1] == inst.dim(m)


# ---------------------------------------------------------------------------
# criterion 7: the Eulerian idempotent system
# ---------------------------------------------------------------------------

@_criterion(7, "Eulerian idempotents: complete, orthogonal, diagonalizing")
def test_criterion_07_eulerian_idempotents():
    inst = build_shuffle((2,), max_degree=4)
    es = eulerian_idempotents(inst)

    total = es[0]
    for e in es[1:]:
        total = total + e
    assert total == GradedEndomorphism.identity(inst)

    for j, ej in enumerate(es):
        assert ej.compose(ej) == ej
        for k, ek in enumerate(es):
            if j != k:
                assert ej.compose(ek).is_zero()

    for n in (-1, 2, Fraction(1, 2)):
        want = adams_endo(inst, n)
        acc = GradedEndomorphism.zero(inst)
        for k, ek in enumerate(es):
            acc = acc + ek.scale(Fraction(n) ** k)
        assert acc == want, n


# ---------------------------------------------------------------------------
# criterion 8: the q-refinement
# ---------------------------------------------------------------------------

@_criterion(8, "q-antipode spectra: symbolic oracle, traces, q=1 collapse")
def test_criterion_08_q_theory():
    # symbolic-q matrix antipode equals the structural factorization
    inst = build_shuffle((1, 1), max_degree=4, q="symbolic")
    s = antipode_endo(inst)
    for m in range(5):
        got = [QLaurent.coerce(c) for c in char_poly_exact(s, m)]
        assert got == list(q_char_poly((1, 1), m).poly_coeffs()), m

    # geometric alphabets: trace is (-1)^m r^(ceil(m/2)) q^(m choose 2)
    for r in (1, 2, 3):
        for m in range(9):
            want = QLaurent.monomial(
                (-1) ** m * r ** ((m + 1) // 2), m * (m - 1) // 2
            )
            assert q_trace((r,), m) == want, (r, m)

    # q = 1 specialization collapses to the plain antipode spectrum
    for v in ((1,), (2,), (1, 1), (1, 0, 3)):
        for m in range(7):
            collapsed = q_char_poly(v, m).specialize_q1()
            direct = cofree_char_poly(v, m)
            assert collapsed.poly_coeffs() == direct.poly_coeffs(), (v, m)
            assert collapsed.trace() == direct.trace(), (v, m)
            assert collapsed.dimension() == direct.dimension(), (v, m)


# ---------------------------------------------------------------------------
# criterion 9: set partitions and set compositions
# ---------------------------------------------------------------------------

PI_ANTIPODE_TRACES = (1, -1, 0, 1, 1, -2, -9, -9, 50, 267)


@_criterion(9, "species traces and Stirling-number multiplicities")
def test_criterion_09_species():
    assert species_antipode_trace(species_preset("Pi", 9)) == list(
        PI_ANTIPODE_TRACES
    )

    sigma = species_antipode_trace(species_preset("Sigma", 12))
    assert sigma[0] == 1
    assert all(sigma[m] == -1 for m in range(1, 13))

    # independent Stirling-second-kind oracle via the additive recurrence
    M = 10
    stirling = [[0] * (M + 1) for _ in range(M + 1)]
    stirling[0][0] = 1
    for m in range(1, M + 1):
        for k in range(1, m + 1):
            stirling[m][k] = k * stirling[m - 1][k] + stirling[m - 1][k - 1]
    table = species_expmul(species_preset("Pi", M))
    for m in range(M + 1):
        for k in range(M + 1):
            want = stirling[m][k] if k <= m else 0
            assert table[k][m] == want, (k, m)


# ---------------------------------------------------------------------------
# criterion 10: generating-function identities
# ---------------------------------------------------------------------------

@_criterion(10, "trace square law and palindrome generating functions")
def test_criterion_10_gf_identities():
    # T_{n^2}(t^2) = T_n(t) T_{-n}(t), coefficientwise to degree 30
    M = 30
    for prof in (profile_preset("ssym", M), profile_preset("sym", M)):
        for n in (1, 2, 3):
            lhs = trace_gf(prof, n * n).stretch(2, order=M)
            rhs = trace_gf(prof, n) * trace_gf(prof, -n)
            assert lhs == rhs, (prof.source, n)

    # per-length palindrome generating functions vs direct counts
    M = 20
    for v in ((1,), (2,), (1, 1), (1, 0, 3), (2, 1)):
        gfs = pal_gfs(v, M)
        tab = palindrome_table(v, M)
        for m in range(M + 1):
            for j, series in enumerate(gfs.even):
                want = tab.by_length[2 * j][m] if 2 * j <= M else 0
                assert series.coefficient(m) == want, (v, m, 2 * j)
            for j, series in enumerate(gfs.odd):
                want = tab.by_length[2 * j + 1][m] if 2 * j + 1 <= M else 0
                assert series.coefficient(m) == want, (v, m, 2 * j + 1)
            assert gfs.trace.coefficient(m) == (
                tab.even_length(m) - tab.odd_length(m)
            )

    # q-analogues vs direct weighted enumeration
    M = 8
    for v in ((1, 1), (1, 0, 3)):
        gfs = q_pal_gfs(v, M)
        for m in range(M + 1):
            want_even: dict = {}
            want_odd: dict = {}
            for comp in weighted_compositions(v, m):
                count = comp.palindromic_word_count(v)
                if not count:
                    continue
                target = want_even if comp.length % 2 == 0 else want_odd
                key = (comp.length // 2, comp.inversion_stat())
                target[key] = target.get(key, 0) + count
            unshift = m * (m - 1) // 2
            for j in range(M // 2 + 1):
                even_terms = QLaurent(
                    {e: c for (jj, e), c in want_even.items() if jj == j}
                )
                got = QLaurent.coerce(gfs.even[j].coefficient(m))
                assert got.shift(unshift) == even_terms, (v, m, 2 * j)
                if 2 * j + 1 <= M:
                    odd_terms = QLaurent(
                        {e: c for (jj, e), c in want_odd.items() if jj == j}
                    )
                    got = QLaurent.coerce(gfs.odd[j].coefficient(m))
                    assert got.shift(unshift) == odd_terms, (v, m, 2 * j + 1)


# ---------------------------------------------------------------------------
# criterion 11: asymptotic trace/dimension ratios
# ---------------------------------------------------------------------------

@_criterion(11, "asymptotic antipode trace ratios")
def test_criterion_11_asymptotics():
    fib = profile_preset("fibonacci", 2).rational_ogf()
    report = asymptotic_ratio(fib, [40, 80])
    errs = {r.degree: float(r.relative_error) for r in report.ratios}
    assert errs[40] <= 1e-2
    assert errs[80] <= 1e-3

    geometric = RationalFunction([1], [1, -2])
    report = asymptotic_ratio(geometric, [16, 48], precision_bits=128,
                              tolerance=1e-20)
    assert all(float(r.relative_error) < 1e-20 for r in report.ratios)

    with pytest.raises(HypothesisViolatedError):
        asymptotic_ratio(RationalFunction([1], [1, 0, -1]), [10])


# ---------------------------------------------------------------------------
# criterion 12: realizability guard
# ---------------------------------------------------------------------------

@_criterion(12, "negative generator counts rejected; 500 exact round trips")
def test_criterion_12_realizability():
    # 1,1,1,2,... continued so that the generator count turns negative
    with pytest.raises(NotRealizableError) as excinfo:
        inverse_euler_transform([1, 1, 1, 2, 2, 3, 3])
    assert "g_6" in str(excinfo.value)
    with pytest.raises(NotRealizableError):
        inverse_euler_transform([1, 1, 0, 0])

    rng = random.Random(40320)
    for _ in range(500):
        length = rng.randint(1, 10)
        g = [rng.randint(0, 4) for _ in range(length)]
        h = euler_transform(g, length).coeffs
        assert inverse_euler_transform(h) == g, g
