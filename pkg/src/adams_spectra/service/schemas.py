"""Request and response models for the HTTP service.

All responses carry a ``schema`` field (currently 1) so downstream
fixtures can detect format changes.  Exact values (rationals, Laurent
polynomials) travel as strings; dimension and multiplicity counts as
integers.
"""

from __future__ import annotations

from typing import Any, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCHEMA_VERSION = 1

# guard rails for a shared service: exact arithmetic is polynomial-time in
# the degree for most routes, but unbounded degrees would still allow
# accidental memory blowups
MAX_DEGREE_CAP = 1000


class ApiModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")


class ApiResponse(ApiModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")


# ---------------------------------------------------------------------------
# shared inputs
# ---------------------------------------------------------------------------

class ProfileInput(ApiModel):
    """Dimension data given by exactly one of: a named preset, the
    dimension sequence h, the generator counts g, or the alphabet sizes v."""

    preset: Optional[str] = None
    h: Optional[List[int]] = None
    g: Optional[List[int]] = None
    v: Optional[List[int]] = None
    max_degree: Optional[int] = Field(default=None, ge=0, le=MAX_DEGREE_CAP)
    force: bool = False

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "ProfileInput":
        given = [name for name in ("preset", "h", "g", "v")
                 if getattr(self, name) is not None]
        if len(given) != 1:
            raise ValueError(
                "exactly one of preset, h, g, v is required"
                + (f"; got {', '.join(given)}" if given else ""))
        if self.preset is not None and self.max_degree is None:
            raise ValueError("a preset profile requires max_degree")
        if self.h is not None and not self.h:
            raise ValueError("h must contain at least h_0")
        if self.h is not None and self.max_degree is not None \
                and self.max_degree > len(self.h) - 1:
            raise ValueError(
                "max_degree exceeds the highest degree h provides")
        return self


class SpeciesInput(ApiModel):
    """Hopf-monoid dimension data: a named preset, the dimension sequence
    h (h[m] = dimension in cardinality m), or primitive dimensions p."""

    preset: Optional[str] = None
    h: Optional[List[int]] = None
    p: Optional[List[int]] = None
    max_degree: Optional[int] = Field(default=None, ge=0, le=MAX_DEGREE_CAP)

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "SpeciesInput":
        given = [name for name in ("preset", "h", "p")
                 if getattr(self, name) is not None]
        if len(given) != 1:
            raise ValueError(
                "exactly one of preset, h, p is required"
                + (f"; got {', '.join(given)}" if given else ""))
        if self.preset is not None and self.max_degree is None:
            raise ValueError("a preset requires max_degree")
        return self


class ProfileReport(ApiModel):
    max_degree: int
    h: List[int]
    g: List[int]
    v: Optional[List[int]]
    source: str
    realizable: bool
    ogf: Optional[dict] = None


# ---------------------------------------------------------------------------
# euler
# ---------------------------------------------------------------------------

class EulerRequest(ApiModel):
    mode: Literal["expand", "invert"]
    values: List[int] = Field(min_length=1)
    max_degree: Optional[int] = Field(default=None, ge=0, le=MAX_DEGREE_CAP)
    force: bool = False


class EulerResponse(ApiResponse):
    mode: str
    profile: ProfileReport


# ---------------------------------------------------------------------------
# charpoly
# ---------------------------------------------------------------------------

class CharpolyRequest(ApiModel):
    profile: ProfileInput
    m: int = Field(ge=0, le=MAX_DEGREE_CAP)
    n: str = "-1"
    route: Literal["adams", "cofree", "q"] = "adams"
    q: str = "symbolic"

    @model_validator(mode="after")
    def _q_only_on_q_route(self) -> "CharpolyRequest":
        if self.q != "symbolic" and self.route != "q":
            raise ValueError("q is only meaningful on the q route")
        return self


class FactorEntry(ApiModel):
    k: int
    mult: int


class EigenvalueEntry(ApiModel):
    value: str
    mult: int


class QLinearFactor(ApiModel):
    sign: int
    q_exp: int
    mult: int


class QQuadraticFactor(ApiModel):
    q_exp: int
    mult: int


class CharpolyResponse(ApiResponse):
    route: str
    n: str
    m: int
    dimension: int
    trace: str
    factors: Optional[List[FactorEntry]] = None
    eigenvalues: Optional[List[EigenvalueEntry]] = None
    poly: Optional[List[str]] = None
    even_palindromes: Optional[int] = None
    odd_palindromes: Optional[int] = None
    non_palindromes: Optional[int] = None
    plus: Optional[int] = None
    minus: Optional[int] = None
    linear: Optional[List[QLinearFactor]] = None
    quadratic: Optional[List[QQuadraticFactor]] = None


# ---------------------------------------------------------------------------
# trace / tracegf
# ---------------------------------------------------------------------------

class TraceRequest(ApiModel):
    profile: ProfileInput
    n: str = "-1"
    m: Optional[int] = Field(default=None, ge=0, le=MAX_DEGREE_CAP)


class TraceResponse(ApiResponse):
    n: str
    degrees: List[int]
    traces: List[str]


class TraceGfRequest(ApiModel):
    profile: ProfileInput
    n: str = "-1"


class TraceGfResponse(ApiResponse):
    n: str
    max_degree: int
    coefficients: List[str]


# ---------------------------------------------------------------------------
# palindromes / qtrace / witt
# ---------------------------------------------------------------------------

class PalindromesRequest(ApiModel):
    v: List[int]
    max_degree: int = Field(ge=0, le=MAX_DEGREE_CAP)


class PalindromesResponse(ApiResponse):
    v: List[int]
    max_degree: int
    by_length: List[List[int]]
    even: List[int]
    odd: List[int]
    non_palindromic: List[int]
    trace: List[int]


class QTraceRequest(ApiModel):
    v: List[int]
    max_degree: Optional[int] = Field(default=None, ge=0, le=MAX_DEGREE_CAP)
    m: Optional[int] = Field(default=None, ge=0, le=MAX_DEGREE_CAP)
    q: str = "symbolic"

    @model_validator(mode="after")
    def _exactly_one_bound(self) -> "QTraceRequest":
        if (self.max_degree is None) == (self.m is None):
            raise ValueError("exactly one of max_degree, m is required")
        return self


class QTermEntry(ApiModel):
    q_exp: int
    coef: int


class QTraceResponse(ApiResponse):
    v: List[int]
    degrees: List[int]
    traces: List[str]
    terms: List[List[QTermEntry]]


class WittRequest(ApiModel):
    v: List[int]
    max_degree: int = Field(ge=0, le=MAX_DEGREE_CAP)


class WittResponse(ApiResponse):
    v: List[int]
    max_degree: int
    witt: List[int]
    word_counts: List[int]


# ---------------------------------------------------------------------------
# species
# ---------------------------------------------------------------------------

class SpeciesRequest(ApiModel):
    profile: SpeciesInput


class SpeciesResponse(ApiResponse):
    source: str
    max_degree: int
    dimensions: List[int]
    primitive_dimensions: List[str]
    expmul: List[List[int]]
    antipode_traces: List[int]


# ---------------------------------------------------------------------------
# asym
# ---------------------------------------------------------------------------

class AsymRequest(ApiModel):
    preset: Optional[str] = None
    num: Optional[List[str]] = None
    den: Optional[List[str]] = None
    degrees: List[int] = Field(min_length=1)
    precision_bits: int = Field(default=128, ge=16, le=4096)
    tolerance: float = Field(default=1e-20, gt=0)

    @model_validator(mode="after")
    def _one_source(self) -> "AsymRequest":
        if self.preset is not None:
            if self.num is not None or self.den is not None:
                raise ValueError("preset and num/den are mutually exclusive")
        elif self.num is None or self.den is None:
            raise ValueError("either preset or both num and den are required")
        if any(m < 0 or m > 10**6 for m in self.degrees):
            raise ValueError("degrees must lie in 0..10^6")
        return self


class RatioEntryModel(ApiModel):
    m: int
    predicted: str
    exact: str
    relative_error: str


class AsymResponse(ApiResponse):
    precision_bits: int
    tolerance: str
    radius: str
    radius_exact: Optional[str]
    gamma: int
    h_at_sqrt: str
    h_at_neg_sqrt: str
    h_star: str
    checks_passed: List[str]
    ratios: List[RatioEntryModel]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

class VerifyRequest(ApiModel):
    suite: Optional[str] = None          # None runs every suite
    alphabet: Optional[List[int]] = None
    max_degree: Optional[int] = Field(default=None, ge=0, le=MAX_DEGREE_CAP)
    n_values: Optional[List[str]] = None


class CheckEntry(ApiModel):
    name: str
    passed: bool
    detail: str


class SuiteReport(ApiModel):
    suite: str
    checks: List[CheckEntry]
    passed: bool


class VerifyResponse(ApiResponse):
    suites: List[SuiteReport]
    passed: bool


# ---------------------------------------------------------------------------
# oeis
# ---------------------------------------------------------------------------

class OeisRequest(ApiModel):
    sequence_id: str = Field(alias="id")
    values: Optional[List[int]] = None
    profile: Optional[ProfileInput] = None
    sequence: Optional[Literal["h", "g", "v"]] = None
    cache_dir: Optional[str] = None
    allow_network: bool = False

    @model_validator(mode="after")
    def _values_or_profile(self) -> "OeisRequest":
        if self.values is not None:
            if self.profile is not None or self.sequence is not None:
                raise ValueError(
                    "values and profile/sequence are mutually exclusive")
        elif self.profile is None or self.sequence is None:
            raise ValueError(
                "either values or both profile and sequence are required")
        return self


class OeisResponse(ApiResponse):
    sequence_id: str = Field(alias="id")
    matched: bool
    compared: int
    first_mismatch: Optional[int]
    values: List[int]
    offline: bool


# ---------------------------------------------------------------------------
# health
# ---------------------------------------------------------------------------

class HealthResponse(ApiResponse):
    status: str
    version: str


def dump(model: BaseModel) -> Any:
    """Serialize a model to JSON-ready data using wire aliases, dropping
    nulls exactly as the HTTP layer does."""
    return model.model_dump(by_alias=True, exclude_none=True)
