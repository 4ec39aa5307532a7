"""FastAPI service exposing the library operations.

Every route body is a pydantic model; the handler functions are plain
functions over those models so the CLI can call them in-process and a
remote client can POST the same JSON.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .arith import AdmissibilityError, Level, ring_for
from .codes import (GuardExceeded, SpanKind, build_code, make_code,
                    parse_generators)
from .enumerators import cwe, symmetrize
from .examples import UnknownExample, example_names, verify_all, verify_example
from .kernel import (BudgetExceeded, build_matrix, exact_nullity,
                     nullity_table_csv, stabilized_nullity)
from .qseries import QSeries
from .search import (DEFAULT_PRECISION, SearchSpec, VectorDomain,
                     count_table_csv, find_collisions)
from .theta import code_theta, code_theta_oracle, coset_theta


class SeriesModel(BaseModel):
    scale: int
    precision: str
    terms: list[list[int]]

    @classmethod
    def of(cls, s: QSeries) -> "SeriesModel":
        return cls(**s.to_json_dict())


class CosetThetaRequest(BaseModel):
    p: int
    ell: int
    a: int
    b: int
    method: str = "direct"
    precision: int = DEFAULT_PRECISION


class CosetThetaResponse(BaseModel):
    config: dict
    series: SeriesModel


class CodeSpecModel(BaseModel):
    """A code, either as inline generators or an explicit word list."""
    generators: str | None = Field(
        default=None, description="inline 'a1;a2;v1,v2,...' syntax")
    words: list[list[list[int]]] | None = None
    span: str = "module"


class CodeThetaRequest(BaseModel):
    p: int
    ell: int
    code: CodeSpecModel
    precision: int = DEFAULT_PRECISION
    oracle: bool = False


class CodeThetaResponse(BaseModel):
    config: dict
    series: SeriesModel
    oracle_series: SeriesModel | None = None
    oracle_matches: bool | None = None


class SweRequest(BaseModel):
    p: int
    ell: int
    code: CodeSpecModel


class SweResponse(BaseModel):
    config: dict
    cwe: dict
    swe: dict
    pretty: str


class NullityRequest(BaseModel):
    p: int
    ell: int
    n: int
    truncation: int | None = None   # None = stabilized (auto)
    ceiling: int = 2048


class NullityResponse(BaseModel):
    config: dict
    report: dict


class NullityTableRequest(BaseModel):
    p: int
    ells: list[int]
    ns: list[int]
    ceiling: int = 2048


class TableResponse(BaseModel):
    config: dict
    csv: str


class CollideRequest(BaseModel):
    p: int
    ell: int
    n: int
    span: str = "module"
    vectors: str = "all"
    precision: int = DEFAULT_PRECISION


class CollideResponse(BaseModel):
    config: dict
    report: dict


class CountTableRequest(BaseModel):
    p: int
    ells: list[int]
    ns: list[int]
    span: str = "module"
    vectors: str = "all"
    precision: int = DEFAULT_PRECISION


class VerifyRequest(BaseModel):
    example: str | None = None  # None = all


class VerifyResponse(BaseModel):
    config: dict
    results: list[dict]
    passed: bool


# -- handlers -----------------------------------------------------------------

def _span_kind(text: str) -> SpanKind:
    try:
        return SpanKind(text)
    except ValueError:
        raise ValueError(f"span must be 'module' or 'fp', got {text!r}")


def _vector_domain(text: str) -> VectorDomain:
    if text == "all":
        return VectorDomain.ALL_R
    if text == "fp":
        return VectorDomain.FP_ONLY
    raise ValueError(f"vectors must be 'all' or 'fp', got {text!r}")


def _resolve_code(p: int, ell: int, spec: CodeSpecModel):
    ctx = ring_for(p, ell)
    kind = _span_kind(spec.span)
    if spec.generators:
        a1, a2, v = parse_generators(spec.generators, ctx)
        return build_code(a1, a2, v, kind, ctx)
    if spec.words:
        words = [tuple(tuple(x) for x in w) for w in spec.words]
        return make_code(ctx, words, kind)
    raise ValueError("code needs either generators or words")


def handle_coset_theta(req: CosetThetaRequest) -> CosetThetaResponse:
    level = Level(req.ell)
    series = coset_theta(level, req.p, (req.a, req.b), req.precision,
                         req.method)
    return CosetThetaResponse(config=req.model_dump(),
                              series=SeriesModel.of(series))


def handle_code_theta(req: CodeThetaRequest) -> CodeThetaResponse:
    level = Level(req.ell)
    code = _resolve_code(req.p, req.ell, req.code)
    series = code_theta(level, code, req.precision)
    oracle_series = None
    matches = None
    if req.oracle:
        bound = min(req.precision, 40)
        o = code_theta_oracle(level, code, bound)
        oracle_series = SeriesModel.of(o)
        matches = series.truncate(bound).equal_to(o, bound)
    return CodeThetaResponse(config=req.model_dump(),
                             series=SeriesModel.of(series),
                             oracle_series=oracle_series,
                             oracle_matches=matches)


def handle_swe(req: SweRequest) -> SweResponse:
    code = _resolve_code(req.p, req.ell, req.code)
    w = cwe(code)
    s = symmetrize(w, req.p)
    return SweResponse(config=req.model_dump(), cwe=w.to_json_dict(),
                       swe=s.to_json_dict(), pretty=s.pretty(req.p))


def handle_nullity(req: NullityRequest) -> NullityResponse:
    level = Level(req.ell)
    if req.truncation is None:
        report = stabilized_nullity(req.p, level, req.n, req.ceiling)
    else:
        report = exact_nullity(build_matrix(req.p, level, req.n,
                                            req.truncation))
    return NullityResponse(config=req.model_dump(),
                           report=report.to_json_dict())


def handle_nullity_table(req: NullityTableRequest) -> TableResponse:
    csv = nullity_table_csv(req.p, req.ells, req.ns, req.ceiling)
    return TableResponse(config=req.model_dump(), csv=csv)


def handle_collide(req: CollideRequest) -> CollideResponse:
    spec = SearchSpec(req.p, req.ell, req.n, _span_kind(req.span),
                      _vector_domain(req.vectors), req.precision)
    report = find_collisions(spec)
    return CollideResponse(config=req.model_dump(),
                           report=report.to_json_dict())


def handle_count_table(req: CountTableRequest) -> TableResponse:
    csv = count_table_csv(req.p, req.ells, req.ns, _span_kind(req.span),
                          _vector_domain(req.vectors), req.precision)
    return TableResponse(config=req.model_dump(), csv=csv)


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    if req.example is None:
        results = verify_all()
    else:
        results = [verify_example(req.example)]
    return VerifyResponse(config=req.model_dump(), results=results,
                          passed=all(r["passed"] for r in results))


# -- FastAPI wiring -----------------------------------------------------------

app = FastAPI(title="codetheta",
              description="Exact theta series of Construction-A lattices "
                          "over imaginary quadratic fields")

_HANDLED = (AdmissibilityError, GuardExceeded, BudgetExceeded, ValueError,
            UnknownExample)


def _wrap(handler, req):
    try:
        return handler(req)
    except _HANDLED as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/examples")
def examples():
    return {"examples": example_names()}


@app.post("/coset-theta", response_model=CosetThetaResponse)
def coset_theta_route(req: CosetThetaRequest):
    return _wrap(handle_coset_theta, req)


@app.post("/code-theta", response_model=CodeThetaResponse)
def code_theta_route(req: CodeThetaRequest):
    return _wrap(handle_code_theta, req)


@app.post("/swe", response_model=SweResponse)
def swe_route(req: SweRequest):
    return _wrap(handle_swe, req)


@app.post("/nullity", response_model=NullityResponse)
def nullity_route(req: NullityRequest):
    return _wrap(handle_nullity, req)


@app.post("/nullity-table", response_model=TableResponse)
def nullity_table_route(req: NullityTableRequest):
    return _wrap(handle_nullity_table, req)


@app.post("/collide", response_model=CollideResponse)
def collide_route(req: CollideRequest):
    return _wrap(handle_collide, req)


@app.post("/count-table", response_model=TableResponse)
def count_table_route(req: CountTableRequest):
    return _wrap(handle_count_table, req)


@app.post("/verify", response_model=VerifyResponse)
def verify_route(req: VerifyRequest):
    return _wrap(handle_verify, req)
