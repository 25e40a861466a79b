"""Request handlers shared by the HTTP service and the command line.

Each handler takes a validated request model and returns a response
model, raising DomainError subclasses for anticipated failures; the
service maps those to HTTP 400 and the CLI to exit code 1.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .. import __version__
from ..cofree import cofree_char_poly, q_char_poly, q_trace
from ..combinatorics import palindrome_table, witt_counts, word_counts
from ..errors import InvalidInputError, NotApplicableError
from ..oeis import oeis_check
from ..series import RationalFunction
from ..spectra import (
    DimensionProfile,
    char_poly_adams,
    trace_adams,
    trace_gf,
)
from ..species import SpeciesProfile, species_antipode_trace, species_expmul
from ..asymptotics import asymptotic_ratio
from ..verify import SUITE_NAMES, verify_suite
from . import schemas as S

# expanded characteristic polynomials have one coefficient per matrix row;
# past this dimension the response carries only the factored form
POLY_EXPANSION_CAP = 512
Q_POLY_EXPANSION_CAP = 64


def parse_rational(text: str, what: str = "n") -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError(
            f"{what} must be an integer or p/q rational, got {text!r}",
            value=text) from None


def resolve_profile(p: S.ProfileInput) -> DimensionProfile:
    if p.preset is not None:
        return DimensionProfile.preset(p.preset, p.max_degree)
    if p.h is not None:
        h = p.h if p.max_degree is None else p.h[: p.max_degree + 1]
        return DimensionProfile.from_h(h, force=p.force)
    if p.g is not None:
        return DimensionProfile.from_g(p.g, p.max_degree, force=p.force)
    return DimensionProfile.from_v(p.v, p.max_degree)


def profile_report(prof: DimensionProfile) -> S.ProfileReport:
    return S.ProfileReport(
        max_degree=prof.max_degree,
        h=list(prof.h),
        g=list(prof.g),
        v=list(prof.v) if prof.v is not None else None,
        source=prof.source,
        realizable=prof.realizable,
        ogf=prof.ogf.to_json() if prof.ogf is not None else None,
    )


# ---------------------------------------------------------------------------
# endpoint handlers
# ---------------------------------------------------------------------------

def handle_euler(req: S.EulerRequest) -> S.EulerResponse:
    if req.mode == "invert":
        values = req.values if req.max_degree is None \
            else req.values[: req.max_degree + 1]
        prof = DimensionProfile.from_h(values, force=req.force)
    else:
        prof = DimensionProfile.from_g(req.values, req.max_degree,
                                       force=req.force)
    return S.EulerResponse(mode=req.mode, profile=profile_report(prof))


def _require_alphabet(prof: DimensionProfile, route: str) -> tuple:
    if prof.v is None:
        raise NotApplicableError(
            f"the {route} route needs dimensions realized by words over a "
            "weighted alphabet, and this profile is not of that form",
            value=list(prof.h))
    return prof.v


def handle_charpoly(req: S.CharpolyRequest) -> S.CharpolyResponse:
    n = parse_rational(req.n)
    prof = resolve_profile(req.profile)
    prof.check_degree(req.m)

    if req.route == "adams":
        spec = char_poly_adams(prof, n, req.m, force=req.profile.force)
        dim = spec.dimension()
        poly: Optional[List[str]] = None
        if 0 <= dim <= POLY_EXPANSION_CAP and \
                all(mult >= 0 for _, mult in spec.factors):
            poly = [str(c) for c in spec.poly_coeffs()]
        eigenvalues = [S.EigenvalueEntry(value=str(ev), mult=mult)
                       for ev, mult in spec.eigenvalues().items()]
        return S.CharpolyResponse(
            route="adams", n=str(n), m=req.m, dimension=dim,
            trace=str(spec.trace()),
            factors=[S.FactorEntry(k=k, mult=mult)
                     for k, mult in spec.factors],
            eigenvalues=eigenvalues, poly=poly)

    if n != -1:
        raise InvalidInputError(
            f"the {req.route} route factorizes the antipode; n must be -1, "
            f"got {n}", value=str(n))
    v = _require_alphabet(prof, req.route)

    if req.route == "cofree":
        cof = cofree_char_poly(v, req.m)
        anti = cof.as_antipode_spectrum()
        dim = cof.dimension()
        poly = [str(c) for c in anti.poly_coeffs()] \
            if dim <= POLY_EXPANSION_CAP else None
        return S.CharpolyResponse(
            route="cofree", n="-1", m=req.m, dimension=dim,
            trace=str(cof.trace()),
            eigenvalues=[
                S.EigenvalueEntry(value="-1", mult=anti.minus),
                S.EigenvalueEntry(value="1", mult=anti.plus),
            ],
            poly=poly,
            even_palindromes=cof.even_pal, odd_palindromes=cof.odd_pal,
            non_palindromes=cof.non_pal,
            plus=anti.plus, minus=anti.minus)

    qspec = q_char_poly(v, req.m)
    dim = qspec.dimension()
    expand = dim <= Q_POLY_EXPANSION_CAP
    if req.q == "symbolic":
        trace = str(qspec.trace())
        poly = [str(c) for c in qspec.poly_coeffs()] if expand else None
        eigenvalues = None
    else:
        qv = parse_rational(req.q, "q")
        trace = str(qspec.trace().evaluate(qv))
        poly = [str(c.evaluate(qv)) for c in qspec.poly_coeffs()] \
            if expand else None
        values: dict = {}
        for sign, e, mult in qspec.linear:
            val = sign * qv**e
            values[val] = values.get(val, 0) + mult
        for e2, mult in qspec.quadratic:
            for val in (qv ** (e2 // 2), -(qv ** (e2 // 2))):
                values[val] = values.get(val, 0) + mult
        eigenvalues = [S.EigenvalueEntry(value=str(val), mult=mult)
                       for val, mult in sorted(values.items()) if mult]
    return S.CharpolyResponse(
        route="q", n="-1", m=req.m, dimension=dim,
        trace=trace, poly=poly, eigenvalues=eigenvalues,
        linear=[S.QLinearFactor(sign=s, q_exp=e, mult=mult)
                for s, e, mult in qspec.linear],
        quadratic=[S.QQuadraticFactor(q_exp=e, mult=mult)
                   for e, mult in qspec.quadratic])


def handle_trace(req: S.TraceRequest) -> S.TraceResponse:
    n = parse_rational(req.n)
    prof = resolve_profile(req.profile)
    degrees = [req.m] if req.m is not None \
        else list(range(prof.max_degree + 1))
    traces = [str(trace_adams(prof, n, m, force=req.profile.force))
              for m in degrees]
    return S.TraceResponse(n=str(n), degrees=degrees, traces=traces)


def handle_tracegf(req: S.TraceGfRequest) -> S.TraceGfResponse:
    n = parse_rational(req.n)
    prof = resolve_profile(req.profile)
    gf = trace_gf(prof, n, force=req.profile.force)
    return S.TraceGfResponse(
        n=str(n), max_degree=prof.max_degree,
        coefficients=[str(gf.coefficient(m))
                      for m in range(prof.max_degree + 1)])


def handle_palindromes(req: S.PalindromesRequest) -> S.PalindromesResponse:
    table = palindrome_table(req.v, req.max_degree)
    degrees = range(req.max_degree + 1)
    even = [table.even_length(m) for m in degrees]
    odd = [table.odd_length(m) for m in degrees]
    return S.PalindromesResponse(
        v=list(req.v), max_degree=req.max_degree,
        by_length=[list(row) for row in table.by_length],
        even=even, odd=odd,
        non_palindromic=[table.non_palindromic(m) for m in degrees],
        trace=[e - o for e, o in zip(even, odd)])


def handle_qtrace(req: S.QTraceRequest) -> S.QTraceResponse:
    degrees = [req.m] if req.m is not None \
        else list(range(req.max_degree + 1))
    traces = [q_trace(req.v, m) for m in degrees]
    if req.q == "symbolic":
        rendered = [str(t) for t in traces]
    else:
        qv = parse_rational(req.q, "q")
        rendered = [str(t.evaluate(qv)) for t in traces]
    return S.QTraceResponse(
        v=list(req.v), degrees=degrees,
        traces=rendered,
        terms=[[S.QTermEntry(q_exp=e, coef=c)
                for e, c in sorted(t.terms.items())] for t in traces])


def handle_witt(req: S.WittRequest) -> S.WittResponse:
    return S.WittResponse(
        v=list(req.v), max_degree=req.max_degree,
        witt=witt_counts(req.v, req.max_degree),
        word_counts=word_counts(req.v, req.max_degree))


def resolve_species(p: S.SpeciesInput) -> SpeciesProfile:
    if p.preset is not None:
        return SpeciesProfile.preset(p.preset, p.max_degree)
    if p.h is not None:
        h = p.h if p.max_degree is None else p.h[: p.max_degree + 1]
        return SpeciesProfile.from_h(h)
    pp = p.p if p.max_degree is None else p.p[: p.max_degree + 1]
    return SpeciesProfile.from_p(pp)


def handle_species(req: S.SpeciesRequest) -> S.SpeciesResponse:
    prof = resolve_species(req.profile)
    return S.SpeciesResponse(
        source=prof.source, max_degree=prof.max_degree,
        dimensions=prof.dimensions(),
        primitive_dimensions=[str(x) for x in prof.primitive_dimensions()],
        expmul=species_expmul(prof),
        antipode_traces=species_antipode_trace(prof))


def handle_asym(req: S.AsymRequest) -> S.AsymResponse:
    if req.preset is not None:
        prof = DimensionProfile.preset(req.preset, 2)
        f = prof.rational_ogf()
    else:
        f = RationalFunction([parse_rational(x, "num") for x in req.num],
                             [parse_rational(x, "den") for x in req.den])
    report = asymptotic_ratio(f, req.degrees,
                              precision_bits=req.precision_bits,
                              tolerance=req.tolerance)
    data = report.to_json()
    data["ratios"] = [S.RatioEntryModel(**r) for r in data["ratios"]]
    return S.AsymResponse(**data)


def handle_verify(req: S.VerifyRequest) -> S.VerifyResponse:
    bounds = None
    if any(x is not None for x in (req.alphabet, req.max_degree,
                                   req.n_values)):
        bounds = {
            "alphabet": req.alphabet,
            "max_degree": req.max_degree,
            "n_values": None if req.n_values is None
            else [parse_rational(x) for x in req.n_values],
        }
    names = SUITE_NAMES if req.suite is None else (req.suite,)
    reports = [verify_suite(name, bounds) for name in names]
    return S.VerifyResponse(
        suites=[S.SuiteReport(**r) for r in reports],
        passed=all(r["passed"] for r in reports))


def handle_oeis(req: S.OeisRequest) -> S.OeisResponse:
    if req.values is not None:
        values = req.values
    else:
        prof = resolve_profile(req.profile)
        if req.sequence == "h":
            values = list(prof.h)
        elif req.sequence == "g":
            values = list(prof.g)
        else:
            if prof.v is None:
                raise NotApplicableError(
                    "this profile has no alphabet sequence v to compare",
                    value=list(prof.h))
            values = list(prof.v)
    match = oeis_check(
        req.sequence_id, values,
        cache_dir=Path(req.cache_dir) if req.cache_dir else None,
        allow_network=req.allow_network)
    return S.OeisResponse(
        id=match.sequence_id, matched=match.matched,
        compared=match.compared, first_mismatch=match.first_mismatch,
        values=list(match.values), offline=match.offline)


def handle_health() -> S.HealthResponse:
    return S.HealthResponse(status="ok", version=__version__)
