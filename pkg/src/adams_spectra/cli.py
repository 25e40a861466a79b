"""Command-line surface.

Every subcommand builds the same validated request models the HTTP
service uses and calls the shared handlers in-process, so CLI and
service results are identical.  Output formats: json (full response),
csv (the tabular core), text (compact human-readable summary).

Exit codes: 0 success (verification failures and OEIS mismatches are
data, not errors), 1 anticipated domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from .errors import DomainError
from .service import handlers as H
from .service import schemas as S


class CliUsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated integer list, got {text!r}")


def _str_list(text: str) -> List[str]:
    text = text.strip()
    return [x.strip() for x in text.split(",")] if text else []


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv", "text"),
                     default="text", help="output format (default text)")


def _add_profile_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--preset",
                     help="named dimension profile (sym, schur_p, qsym, "
                          "ssym, peak, fibonacci, geometric:R)")
    sub.add_argument("--h", type=_int_list,
                     help="comma-separated dimensions h_0,h_1,...")
    sub.add_argument("--g", type=_int_list,
                     help="comma-separated generator counts g_1,g_2,...")
    sub.add_argument("--v", type=_int_list,
                     help="comma-separated alphabet sizes v_1,v_2,...")
    sub.add_argument("--max-degree", type=int, default=None)
    sub.add_argument("--force-nonrealizable", action="store_true",
                     help="evaluate formally even when generator counts "
                          "go negative")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adams-spectra",
        description="Spectra, traces, and characteristic polynomials of "
                    "convolution powers on graded connected Hopf algebras, "
                    "computed exactly from dimension data.")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("euler",
                        help="Euler transform (g to h) and its inverse")
    p.add_argument("mode", choices=("expand", "invert"))
    p.add_argument("--h", type=_int_list,
                   help="dimensions to invert (mode invert)")
    p.add_argument("--g", type=_int_list,
                   help="generator counts to expand (mode expand)")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--force-nonrealizable", action="store_true")
    _add_format(p)

    p = subs.add_parser("charpoly",
                        help="factored characteristic polynomial of a "
                             "convolution power")
    _add_profile_flags(p)
    p.add_argument("--n", default="-1",
                   help='convolution power, integer or "p/q" (default -1, '
                        "the antipode)")
    p.add_argument("--m", type=int, required=True, help="degree")
    p.add_argument("--route", choices=("adams", "cofree", "q"),
                   default="adams",
                   help="adams: multiplicity formula for any n; cofree: "
                        "palindrome counts (antipode); q: q-deformed "
                        "antipode factorization")
    p.add_argument("--q", default="symbolic",
                   help='q route only: "symbolic" or a rational value')
    _add_format(p)

    p = subs.add_parser("trace", help="convolution-power traces")
    _add_profile_flags(p)
    p.add_argument("--n", default="-1")
    p.add_argument("--m", type=int, default=None,
                   help="single degree (default: table up to max degree)")
    _add_format(p)

    p = subs.add_parser("tracegf",
                        help="trace generating function coefficients")
    _add_profile_flags(p)
    p.add_argument("--n", default="-1")
    _add_format(p)

    p = subs.add_parser("palindromes",
                        help="palindromic word counts by length and weight")
    p.add_argument("--v", type=_int_list, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    _add_format(p)

    p = subs.add_parser("qtrace",
                        help="q-weighted antipode traces on words")
    p.add_argument("--v", type=_int_list, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--q", default="symbolic")
    _add_format(p)

    p = subs.add_parser("witt",
                        help="free-Lie generator counts for a weighted "
                             "alphabet")
    p.add_argument("--v", type=_int_list, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    _add_format(p)

    p = subs.add_parser("species",
                        help="Hopf-monoid multiplicities and antipode "
                             "traces from exponential dimension data")
    p.add_argument("--preset", help="Pi, Sigma, L, or E")
    p.add_argument("--h", type=_int_list,
                   help="dimensions h_0,h_1,... (h_m = dimension in "
                        "cardinality m)")
    p.add_argument("--p", type=_int_list,
                   help="primitive dimensions p_0,p_1,... (free case)")
    p.add_argument("--max-degree", type=int, default=None)
    _add_format(p)

    p = subs.add_parser("asym",
                        help="asymptotic antipode-trace ratios for a "
                             "rational dimension generating function")
    p.add_argument("--preset",
                   help="preset with a rational generating function "
                        "(fibonacci, peak, qsym, geometric:R)")
    p.add_argument("--num", type=_str_list,
                   help="numerator coefficients, ascending")
    p.add_argument("--den", type=_str_list,
                   help="denominator coefficients, ascending")
    p.add_argument("--m", type=_int_list, required=True,
                   help="degrees to evaluate, e.g. 20,40,80")
    p.add_argument("--precision-bits", type=int, default=128)
    p.add_argument("--tolerance", type=float, default=1e-20)
    _add_format(p)

    p = subs.add_parser("verify", help="run self-verification suites")
    p.add_argument("--suite",
                   help="oracle, identities, qidentities, species, or "
                        "figures (default: all)")
    p.add_argument("--alphabet", type=_int_list,
                   help="oracle suite: alphabet sizes for a custom "
                        "comparison")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--n", type=_str_list, default=None,
                   help="oracle suite: comma-separated scalars")
    _add_format(p)

    p = subs.add_parser("oeis",
                        help="prefix-match computed values against a "
                             "cached reference sequence")
    p.add_argument("--id", required=True, help="sequence id, e.g. A003319")
    p.add_argument("--values", type=_int_list,
                   help="values to compare (alternative to a profile)")
    _add_profile_flags(p)
    p.add_argument("--sequence", choices=("h", "g", "v"),
                   help="which derived sequence of the profile to compare")
    p.add_argument("--cache-dir", default=None,
                   help="override the cache directory (else "
                        "ADAMS_SPECTRA_CACHE or the platform cache dir)")
    p.add_argument("--allow-network", action="store_true",
                   help="permit fetching uncached sequences")
    _add_format(p)

    return parser


# ---------------------------------------------------------------------------
# request building
# ---------------------------------------------------------------------------

def _profile_input(args) -> S.ProfileInput:
    max_degree = args.max_degree
    if max_degree is None and getattr(args, "m", None) is not None:
        max_degree = args.m          # a single requested degree bounds it
    return S.ProfileInput(
        preset=args.preset, h=args.h, g=args.g, v=args.v,
        max_degree=max_degree, force=args.force_nonrealizable)


def _maybe_profile(args) -> Optional[S.ProfileInput]:
    if any(getattr(args, k) is not None for k in ("preset", "h", "g", "v")):
        return _profile_input(args)
    return None


def _dispatch(args):
    sub = args.subcommand
    if sub == "euler":
        if args.mode == "invert":
            if args.h is None:
                raise CliUsageError("euler invert requires --h")
            values = args.h
        else:
            if args.g is None:
                raise CliUsageError("euler expand requires --g")
            values = args.g
        return H.handle_euler(S.EulerRequest(
            mode=args.mode, values=values, max_degree=args.max_degree,
            force=args.force_nonrealizable))
    if sub == "charpoly":
        return H.handle_charpoly(S.CharpolyRequest(
            profile=_profile_input(args), m=args.m, n=args.n,
            route=args.route, q=args.q))
    if sub == "trace":
        return H.handle_trace(S.TraceRequest(
            profile=_profile_input(args), n=args.n, m=args.m))
    if sub == "tracegf":
        return H.handle_tracegf(S.TraceGfRequest(
            profile=_profile_input(args), n=args.n))
    if sub == "palindromes":
        return H.handle_palindromes(S.PalindromesRequest(
            v=args.v, max_degree=args.max_degree))
    if sub == "qtrace":
        return H.handle_qtrace(S.QTraceRequest(
            v=args.v, max_degree=args.max_degree, m=args.m, q=args.q))
    if sub == "witt":
        return H.handle_witt(S.WittRequest(
            v=args.v, max_degree=args.max_degree))
    if sub == "species":
        return H.handle_species(S.SpeciesRequest(profile=S.SpeciesInput(
            preset=args.preset, h=args.h, p=args.p,
            max_degree=args.max_degree)))
    if sub == "asym":
        return H.handle_asym(S.AsymRequest(
            preset=args.preset, num=args.num, den=args.den, degrees=args.m,
            precision_bits=args.precision_bits, tolerance=args.tolerance))
    if sub == "verify":
        return H.handle_verify(S.VerifyRequest(
            suite=args.suite, alphabet=args.alphabet,
            max_degree=args.max_degree, n_values=args.n))
    if sub == "oeis":
        return H.handle_oeis(S.OeisRequest(
            id=args.id, values=args.values, profile=_maybe_profile(args),
            sequence=args.sequence, cache_dir=args.cache_dir,
            allow_network=args.allow_network))
    raise CliUsageError(f"unknown subcommand {sub!r}")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _join(xs) -> str:
    return ",".join(str(x) for x in xs)


def _render_text(args, resp, out) -> None:
    sub = args.subcommand
    if sub == "euler":
        seq = resp.profile.g if args.mode == "invert" else resp.profile.h
        print(_join(seq), file=out)
    elif sub == "charpoly":
        print(f"dimension {resp.dimension}", file=out)
        print(f"trace {resp.trace}", file=out)
        if resp.factors is not None:
            print("factors " + " ".join(f"k={f.k}:{f.mult}"
                                        for f in resp.factors), file=out)
        if resp.linear is not None:
            print("linear " + " ".join(f"sign={f.sign},q_exp={f.q_exp}:"
                                       f"{f.mult}" for f in resp.linear),
                  file=out)
            print("quadratic " + " ".join(f"q_exp={f.q_exp}:{f.mult}"
                                          for f in resp.quadratic), file=out)
        if resp.plus is not None:
            print(f"palindromes even={resp.even_palindromes} "
                  f"odd={resp.odd_palindromes} "
                  f"other={resp.non_palindromes}", file=out)
        if resp.eigenvalues is not None:
            print("eigenvalues " + " ".join(f"{e.value}:{e.mult}"
                                            for e in resp.eigenvalues),
                  file=out)
        if resp.poly is not None:
            print("poly " + _join(resp.poly), file=out)
    elif sub in ("trace", "qtrace"):
        print(_join(resp.traces), file=out)
    elif sub == "tracegf":
        print(_join(resp.coefficients), file=out)
    elif sub == "palindromes":
        print("even " + _join(resp.even), file=out)
        print("odd " + _join(resp.odd), file=out)
        print("non_palindromic " + _join(resp.non_palindromic), file=out)
        print("trace " + _join(resp.trace), file=out)
    elif sub == "witt":
        print(_join(resp.witt), file=out)
    elif sub == "species":
        print("dimensions " + _join(resp.dimensions), file=out)
        print("primitives " + _join(resp.primitive_dimensions), file=out)
        print("antipode_traces " + _join(resp.antipode_traces), file=out)
    elif sub == "asym":
        print(f"radius {resp.radius}", file=out)
        if resp.radius_exact is not None:
            print(f"radius_exact {resp.radius_exact}", file=out)
        print(f"gamma {resp.gamma}", file=out)
        print("checks " + _join(resp.checks_passed), file=out)
        for r in resp.ratios:
            print(f"m={r.m} predicted={r.predicted} exact={r.exact} "
                  f"relative_error={r.relative_error}", file=out)
    elif sub == "verify":
        for suite in resp.suites:
            for c in suite.checks:
                mark = "PASS" if c.passed else "FAIL"
                print(f"{mark} {suite.suite}/{c.name}: {c.detail}",
                      file=out)
        print("PASSED" if resp.passed else "FAILED", file=out)
    elif sub == "oeis":
        line = (f"{resp.sequence_id} matched={resp.matched} "
                f"compared={resp.compared} offline={resp.offline}")
        if resp.first_mismatch is not None:
            line += f" first_mismatch={resp.first_mismatch}"
        print(line, file=out)


def _render_csv(args, resp, out) -> None:
    sub = args.subcommand
    w = csv.writer(out, lineterminator="\n")
    if sub == "euler":
        w.writerow(["m", "h", "g", "v"])
        prof = resp.profile
        for m in range(prof.max_degree + 1):
            w.writerow([m, prof.h[m],
                        prof.g[m - 1] if m >= 1 else "",
                        prof.v[m - 1] if prof.v is not None and m >= 1
                        else ""])
    elif sub == "charpoly":
        if resp.factors is not None:
            w.writerow(["k", "mult"])
            for f in resp.factors:
                w.writerow([f.k, f.mult])
        elif resp.linear is not None:
            w.writerow(["kind", "sign", "q_exp", "mult"])
            for f in resp.linear:
                w.writerow(["linear", f.sign, f.q_exp, f.mult])
            for f in resp.quadratic:
                w.writerow(["quadratic", "", f.q_exp, f.mult])
        else:
            w.writerow(["eigenvalue", "mult"])
            w.writerow(["1", resp.plus])
            w.writerow(["-1", resp.minus])
    elif sub in ("trace", "qtrace"):
        w.writerow(["m", "trace"])
        for m, t in zip(resp.degrees, resp.traces):
            w.writerow([m, t])
    elif sub == "tracegf":
        w.writerow(["m", "coefficient"])
        for m, c in enumerate(resp.coefficients):
            w.writerow([m, c])
    elif sub == "palindromes":
        w.writerow(["m", "even", "odd", "non_palindromic", "trace"])
        for m in range(resp.max_degree + 1):
            w.writerow([m, resp.even[m], resp.odd[m],
                        resp.non_palindromic[m], resp.trace[m]])
    elif sub == "witt":
        w.writerow(["m", "witt", "word_count"])
        for m in range(resp.max_degree + 1):
            w.writerow([m, resp.witt[m - 1] if m >= 1 else "",
                        resp.word_counts[m]])
    elif sub == "species":
        w.writerow(["m", "dimension", "primitive", "antipode_trace"])
        for m in range(resp.max_degree + 1):
            w.writerow([m, resp.dimensions[m], resp.primitive_dimensions[m],
                        resp.antipode_traces[m]])
    elif sub == "asym":
        w.writerow(["m", "predicted", "exact", "relative_error"])
        for r in resp.ratios:
            w.writerow([r.m, r.predicted, r.exact, r.relative_error])
    elif sub == "verify":
        w.writerow(["suite", "check", "passed", "detail"])
        for suite in resp.suites:
            for c in suite.checks:
                w.writerow([suite.suite, c.name, c.passed, c.detail])
    elif sub == "oeis":
        w.writerow(["field", "value"])
        w.writerow(["id", resp.sequence_id])
        w.writerow(["matched", resp.matched])
        w.writerow(["compared", resp.compared])
        w.writerow(["first_mismatch",
                    "" if resp.first_mismatch is None
                    else resp.first_mismatch])
        w.writerow(["offline", resp.offline])
        w.writerow(["values", " ".join(str(x) for x in resp.values)])


def _render(args, resp, out) -> None:
    if args.format == "json":
        print(json.dumps(S.dump(resp), indent=2), file=out)
    elif args.format == "csv":
        _render_csv(args, resp, out)
    else:
        _render_text(args, resp, out)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

_VALUE_FLAGS = frozenset((
    "--n", "--q", "--num", "--den", "--values", "--h", "--g", "--v",
    "--alphabet", "--p", "--m",
))


def _preprocess(argv: List[str]) -> List[str]:
    """Join value flags with arguments that start with a minus sign
    (negative numbers, rationals, comma lists) so argparse does not read
    them as option strings."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and len(nxt) > 1 \
                and nxt[0] == "-" and nxt[1].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(
            _preprocess(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        resp = _dispatch(args)
    except CliUsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        for err in exc.errors():
            loc = ".".join(str(x) for x in err["loc"]) or "request"
            print(f"usage error: {loc}: {err['msg']}", file=sys.stderr)
        return 2
    except DomainError as exc:
        payload = {"schema": S.SCHEMA_VERSION}
        payload.update(exc.payload())
        print(json.dumps(payload, default=str), file=sys.stderr)
        return 1
    _render(args, resp, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
