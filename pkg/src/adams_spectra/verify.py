"""Named self-verification suites with machine-readable reports.

Each suite runs a battery of cross-checks between independent computation
routes (closed forms vs. structure-constant matrices, generating functions
vs. direct enumeration, frozen reference tables) and reports one named
pass/fail entry per check.  Check failures are data, not exceptions: the
report carries them so callers can render or alert on them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List

from .cofree import cofree_char_poly, pal_gfs, q_char_poly, q_pal_gfs, q_trace
from .oracle import (
    GradedEndomorphism,
    adams_endo,
    antipode_endo,
    build_qsym_monomial,
    build_shuffle,
    build_sym_powersum,
    char_poly_exact,
    eulerian_idempotents,
    identity_conv_power,
    qsym_antipode_formula,
    shuffle_antipode_formula,
    sym_antipode_formula,
)
from .qlaurent import QLaurent
from .species import (
    assembly_trace,
    species_antipode_trace,
    species_expmul,
    species_preset,
)
from .spectra import (
    DimensionProfile,
    antipode_trace_gf,
    char_poly_adams,
    char_poly_antipode,
    trace_adams,
    trace_gf,
)

SUITE_NAMES = ("oracle", "identities", "qidentities", "species", "figures")


def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def _run_checks(suite: str, steps: List[Callable[[], dict]]) -> dict:
    checks = []
    for step in steps:
        try:
            checks.append(step())
        except Exception as exc:  # surface unexpected blowups as failures
            checks.append(_check(
                getattr(step, "__name__", "check"), False,
                f"raised {type(exc).__name__}: {exc}"))
    return {
        "suite": suite,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }


# ---------------------------------------------------------------------------
# oracle suite: structure constants vs closed forms
# ---------------------------------------------------------------------------

def _suite_oracle() -> dict:
    fib = build_shuffle((1, 1), max_degree=4)
    two = build_shuffle((2,), max_degree=3)
    sym = build_sym_powersum(4)
    qsym = build_qsym_monomial(4)

    def axioms_verified() -> dict:
        return _check(
            "axioms_verified", True,
            "bialgebra axioms checked on construction for 4 instances")

    def antipode_formulas() -> dict:
        ok = (antipode_endo(fib) == shuffle_antipode_formula(fib)
              and antipode_endo(two) == shuffle_antipode_formula(two)
              and antipode_endo(sym) == sym_antipode_formula(sym)
              and antipode_endo(qsym) == qsym_antipode_formula(qsym))
        return _check(
            "antipode_formulas", ok,
            "geometric-series antipode equals the closed-form antipode on "
            "all 4 instances")

    def charpolys_match() -> dict:
        cases = 0
        for inst, prof in (
            (fib, DimensionProfile.from_v((1, 1), 4)),
            (two, DimensionProfile.from_v((2,), 3)),
            (sym, DimensionProfile.preset("sym", 4)),
            (qsym, DimensionProfile.preset("qsym", 4)),
        ):
            for n in (-1, 2, Fraction(1, 2)):
                for m in range(inst.max_degree + 1):
                    got = char_poly_exact(adams_endo(inst, n), m)
                    want = char_poly_adams(prof, Fraction(n), m).poly_coeffs()
                    if list(got) != list(want):
                        return _check(
                            "charpolys_match", False,
                            f"{inst.name}: mismatch at n={n}, m={m}")
                    cases += 1
        return _check("charpolys_match", True,
                      f"{cases} characteristic polynomials agree")

    def convolution_group_law() -> dict:
        ok = (adams_endo(fib, 2).convolve(adams_endo(fib, 3))
              == adams_endo(fib, 5)
              and identity_conv_power(fib, 3) == adams_endo(fib, 3)
              and antipode_endo(fib).convolve(
                  GradedEndomorphism.identity(fib))
              == GradedEndomorphism.unit_counit(fib))
        return _check("convolution_group_law", ok,
                      "power additivity, direct powers, antipode axiom")

    def eulerian_resolution() -> dict:
        es = eulerian_idempotents(sym)
        total = GradedEndomorphism.zero(sym)
        for e in es:
            total = total + e
        ok = total == GradedEndomorphism.identity(sym)
        recon = GradedEndomorphism.zero(sym)
        for k, e in enumerate(es):
            recon = recon + e.scale(Fraction(2) ** k)
        ok = ok and recon == adams_endo(sym, 2)
        return _check("eulerian_resolution", ok,
                      "idempotents sum to the identity and rebuild the "
                      "second convolution power")

    def monomial_antipode_values() -> dict:
        s = antipode_endo(qsym)
        ix = qsym.index
        ok = s.cols[2][ix[2][(1, 1)]] == {ix[2][(1, 1)]: 1,
                                          ix[2][(2,)]: 1}
        return _check("monomial_antipode_values", ok,
                      "antipode of the (1,1) monomial is M(1,1) + M(2)")

    return _run_checks("oracle", [
        axioms_verified, antipode_formulas, charpolys_match,
        convolution_group_law, eulerian_resolution,
        monomial_antipode_values,
    ])


# ---------------------------------------------------------------------------
# identities suite: generating-function laws
# ---------------------------------------------------------------------------

def _suite_identities() -> dict:
    def trace_gf_expands_traces() -> dict:
        prof = DimensionProfile.preset("qsym", 12)
        gf = trace_gf(prof, 2)
        ok = all(gf.coefficient(m) == trace_adams(prof, 2, m)
                 for m in range(13))
        return _check("trace_gf_expands_traces", ok,
                      "product form reproduces 13 traces of the second "
                      "power on the composition tower")

    def square_law() -> dict:
        M = 20
        for name in ("sym", "qsym", "ssym"):
            prof = DimensionProfile.preset(name, M)
            for n in (1, 2, 3):
                left = trace_gf(prof, n * n).stretch(2, order=M)
                right = trace_gf(prof, n) * trace_gf(prof, -n)
                if left != right:
                    return _check("square_law", False,
                                  f"{name}: T[n^2](t^2) != T[n] T[-n] "
                                  f"at n={n}")
        return _check("square_law", True,
                      "T[n^2](t^2) = T[n](t) T[-n](t) for 3 towers, "
                      "n in {1,2,3}, 20 degrees")

    def antipode_gf() -> dict:
        ok = all(
            antipode_trace_gf(DimensionProfile.preset(name, 14))
            == trace_gf(DimensionProfile.preset(name, 14), -1)
            for name in ("sym", "qsym", "peak", "ssym"))
        return _check("antipode_gf", ok,
                      "h(t^2)/h(t) equals the trace generating function "
                      "at -1 on 4 towers")

    def cofree_matches_multiplicities() -> dict:
        for v in ((1,), (2,), (1, 1), (1, 0, 3)):
            prof = DimensionProfile.from_v(v, 8)
            for m in range(9):
                cof = cofree_char_poly(v, m).as_antipode_spectrum()
                anti = char_poly_antipode(prof, m)
                if (cof.plus, cof.minus) != (anti.plus, anti.minus):
                    return _check(
                        "cofree_matches_multiplicities", False,
                        f"v={v}, m={m}: palindrome route disagrees")
        return _check("cofree_matches_multiplicities", True,
                      "palindrome factorization equals the parity-split "
                      "multiplicity factorization on 4 alphabets")

    def palindrome_gfs_expand() -> dict:
        v = (1, 1)
        gfs = pal_gfs(v, 10)
        from .combinatorics import palindrome_table
        table = palindrome_table(v, 10).by_length
        for j in range(6):
            for m in range(11):
                if gfs.even[j].coefficient(m) != table[2 * j][m]:
                    return _check("palindrome_gfs_expand", False,
                                  f"even length {2 * j}, weight {m}")
                if 2 * j + 1 <= 10 and \
                        gfs.odd[j].coefficient(m) != table[2 * j + 1][m]:
                    return _check("palindrome_gfs_expand", False,
                                  f"odd length {2 * j + 1}, weight {m}")
        return _check("palindrome_gfs_expand", True,
                      "per-length palindrome series match enumeration up "
                      "to weight 10")

    return _run_checks("identities", [
        trace_gf_expands_traces, square_law, antipode_gf,
        cofree_matches_multiplicities, palindrome_gfs_expand,
    ])


# ---------------------------------------------------------------------------
# q-identities suite
# ---------------------------------------------------------------------------

def _suite_qidentities() -> dict:
    def symbolic_oracle_charpoly() -> dict:
        inst = build_shuffle((1, 1), max_degree=3, q="symbolic")
        s = antipode_endo(inst)
        for m in range(4):
            got = [QLaurent.coerce(c) for c in char_poly_exact(s, m)]
            want = list(q_char_poly((1, 1), m).poly_coeffs())
            if got != want:
                return _check("symbolic_oracle_charpoly", False,
                              f"degree {m} disagrees")
        return _check("symbolic_oracle_charpoly", True,
                      "Laurent-coefficient matrices reproduce the factored "
                      "q-characteristic polynomial up to degree 3")

    def q_trace_gf() -> dict:
        for v in ((1, 1), (2,), (1, 0, 3)):
            gfs = q_pal_gfs(v, 8)
            for m in range(9):
                if gfs.trace_coefficient(m) != q_trace(v, m):
                    return _check("q_trace_gf", False,
                                  f"v={v}, m={m}")
        return _check("q_trace_gf", True,
                      "q-trace generating function matches the inversion-"
                      "statistic enumeration on 3 alphabets to weight 8")

    def specialization() -> dict:
        for v in ((1, 1), (2,), (1, 0, 3)):
            for m in range(7):
                if q_char_poly(v, m).specialize_q1() != \
                        cofree_char_poly(v, m):
                    return _check("specialization", False,
                                  f"v={v}, m={m}")
        return _check("specialization", True,
                      "setting q = 1 recovers the undeformed palindrome "
                      "factorization")

    def rational_q_specialization() -> dict:
        q = Fraction(2, 3)
        inst = build_shuffle((1, 1), max_degree=3, q=q)
        got = [Fraction(c) for c in char_poly_exact(antipode_endo(inst), 3)]
        want = [c.evaluate(q) for c in q_char_poly((1, 1), 3).poly_coeffs()]
        return _check("rational_q_specialization", got == want,
                      "evaluating the q-factorization at 2/3 matches the "
                      "rational-coefficient matrix model")

    return _run_checks("qidentities", [
        symbolic_oracle_charpoly, q_trace_gf, specialization,
        rational_q_specialization,
    ])


# ---------------------------------------------------------------------------
# species suite
# ---------------------------------------------------------------------------

def _suite_species() -> dict:
    def preset_dimensions() -> dict:
        ok = (species_preset("Pi", 9).dimensions()
              == [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]
              and species_preset("Sigma", 8).dimensions()
              == [1, 1, 3, 13, 75, 541, 4683, 47293, 545835])
        return _check("preset_dimensions", ok,
                      "set partitions give Bell numbers, set compositions "
                      "give ordered-partition counts")

    def partition_multiplicities() -> dict:
        table = species_expmul(species_preset("Pi", 6))

        def stirling2(m, k):
            if m == k == 0:
                return 1
            if m == 0 or k == 0:
                return 0
            return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)

        ok = all(table[k][m] == stirling2(m, k)
                 for m in range(7) for k in range(7))
        return _check("partition_multiplicities", ok,
                      "multiplicity table equals block counts of set "
                      "partitions")

    def antipode_traces() -> dict:
        ok = (species_antipode_trace(species_preset("Pi", 9))
              == [1, -1, 0, 1, 1, -2, -9, -9, 50, 267]
              and species_antipode_trace(species_preset("Sigma", 8))
              == [1] + [-1] * 8
              and species_antipode_trace(species_preset("L", 8))
              == [1, -1] + [0] * 7
              and species_antipode_trace(species_preset("E", 8))
              == [(-1) ** m for m in range(9)])
        return _check("antipode_traces", ok,
                      "reciprocal-series traces match the reference values "
                      "for 4 Hopf monoids")

    def assembly_agrees() -> dict:
        for name in ("Pi", "Sigma", "E"):
            prof = species_preset(name, 8)
            if assembly_trace(prof.primitive_dimensions(), 8) != \
                    species_antipode_trace(prof):
                return _check("assembly_agrees", False, name)
        return _check("assembly_agrees", True,
                      "exp(-p) route equals 1/h route on 3 Hopf monoids")

    return _run_checks("species", [
        preset_dimensions, partition_multiplicities, antipode_traces,
        assembly_agrees,
    ])


# ---------------------------------------------------------------------------
# figures suite: frozen reference tables for the factorial tower
# ---------------------------------------------------------------------------

FACTORIAL_TOWER_MULT_ROWS: Dict[int, tuple] = {
    1: (1, 1, 4, 17, 92, 572),
    2: (1, 1, 5, 21, 119),
    3: (1, 1, 5, 22),
    4: (1, 1, 5),
    5: (1, 1),
    6: (1,),
}

FACTORIAL_TOWER_PAL_ROWS: Dict[int, tuple] = {
    1: (1, 1, 3, 13, 71, 461),
    2: (1, 0, 1, 0, 3),
    3: (1, 1, 4, 14),
    4: (1, 0, 2),
    5: (1, 1),
    6: (1,),
}


def _suite_figures() -> dict:
    def multiplicity_table_frozen() -> dict:
        prof = DimensionProfile.preset("ssym", 6)
        table = {}
        for m in range(7):
            for k, mult in prof.multiplicities(m):
                table[(k, m)] = mult
        for k, row in FACTORIAL_TOWER_MULT_ROWS.items():
            got = tuple(table.get((k, m), 0) for m in range(k, 7))
            if got != row:
                return _check("multiplicity_table_frozen", False,
                              f"row k={k}: {got} != {row}")
        return _check("multiplicity_table_frozen", True,
                      "factorial-tower multiplicity rows match the frozen "
                      "table")

    def palindrome_table_frozen() -> dict:
        from .combinatorics import palindrome_table
        prof = DimensionProfile.preset("ssym", 6)
        if prof.v is None:
            return _check("palindrome_table_frozen", False,
                          "factorial tower did not yield an alphabet")
        table = palindrome_table(prof.v, 6).by_length
        for k, row in FACTORIAL_TOWER_PAL_ROWS.items():
            got = tuple(table[k][m] for m in range(k, 7))
            if got != row:
                return _check("palindrome_table_frozen", False,
                              f"row k={k}: {got} != {row}")
        return _check("palindrome_table_frozen", True,
                      "factorial-tower palindrome rows match the frozen "
                      "table")

    def degree_three_example() -> dict:
        prof = DimensionProfile.preset("ssym", 3)
        spec = char_poly_adams(prof, -1, 3)
        ok = (spec.factors == ((1, 4), (2, 1), (3, 1))
              and spec.eigenvalues() == {Fraction(-1): 5, Fraction(1): 1}
              and spec.trace() == -4)
        return _check("degree_three_example", ok,
                      "antipode spectrum in degree 3 is (x-1)(x+1)^5 with "
                      "trace -4")

    def preset_trace_rows() -> dict:
        qsym = DimensionProfile.preset("qsym", 9)
        peak = DimensionProfile.preset("peak", 8)
        ok = ([trace_adams(qsym, -1, m) for m in range(10)]
              == [1, -1, 0, -2, 0, -4, 0, -8, 0, -16]
              and [trace_adams(peak, -1, m) for m in range(9)]
              == [1, -1, 1, -2, 1, -3, 2, -5, 3])
        return _check("preset_trace_rows", ok,
                      "antipode trace rows for the composition and odd "
                      "towers match the frozen values")

    return _run_checks("figures", [
        multiplicity_table_frozen, palindrome_table_frozen,
        degree_three_example, preset_trace_rows,
    ])


def _suite_oracle_bounded(bounds: dict) -> dict:
    """Charpoly comparison on a caller-chosen word Hopf algebra.

    Empty bounds (no letters, no scalars, or max_degree < 0) pass
    vacuously with zero comparisons.
    """
    alphabet = tuple(int(x) for x in (bounds.get("alphabet") or ()))
    max_degree = bounds.get("max_degree")
    M = -1 if max_degree is None else int(max_degree)
    raw_ns = bounds.get("n_values")
    ns = [Fraction(x) for x in (raw_ns if raw_ns is not None else (-1, 2))]

    def charpolys_match() -> dict:
        if not alphabet or not ns or M < 0:
            return _check("charpolys_match", True,
                          "0 comparisons (vacuous)")
        inst = build_shuffle(alphabet, max_degree=M)
        prof = DimensionProfile.from_v(alphabet, M)
        cases = 0
        for n in ns:
            for m in range(M + 1):
                got = char_poly_exact(adams_endo(inst, n), m)
                want = char_poly_adams(prof, n, m).poly_coeffs()
                if list(got) != list(want):
                    return _check(
                        "charpolys_match", False,
                        f"alphabet {alphabet}: matrix and closed-form "
                        f"characteristic polynomials differ at n={n}, m={m}")
                cases += 1
        return _check("charpolys_match", True,
                      f"{cases} characteristic polynomials agree on "
                      f"alphabet {alphabet}")

    return _run_checks("oracle", [charpolys_match])


_SUITES: Dict[str, Callable[[], dict]] = {
    "oracle": _suite_oracle,
    "identities": _suite_identities,
    "qidentities": _suite_qidentities,
    "species": _suite_species,
    "figures": _suite_figures,
}


def verify_suite(name: str, bounds: dict | None = None) -> dict:
    """Run one named suite; unknown names raise InvalidInput.

    For the oracle suite, an explicit ``bounds`` dict (keys ``alphabet``,
    ``max_degree``, ``n_values``) replaces the default battery with a
    comparison on the requested instance; empty bounds pass vacuously.
    Other suites ignore ``bounds``.
    """
    from .errors import InvalidInputError

    if name not in _SUITES:
        raise InvalidInputError(
            f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}",
            value=name)
    if bounds is not None and name == "oracle":
        return _suite_oracle_bounded(bounds)
    return _SUITES[name]()


def verify_all() -> dict:
    """Run every suite and aggregate."""
    reports = [verify_suite(name) for name in SUITE_NAMES]
    return {
        "suites": reports,
        "passed": all(r["passed"] for r in reports),
    }
