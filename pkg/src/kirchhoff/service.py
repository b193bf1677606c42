"""FastAPI service exposing the exact graph-invariant operations.

The handler functions take and return pydantic models and contain no HTTP
specifics; the CLI calls them in-process and the FastAPI routes wrap the
same functions, so both front ends share one code path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import closed_forms, crosscheck, linalg, oracle, spectral
from .extremal import (
    ExtremalResult,
    extremal_dkf,
    extremal_kf,
    generate_table,
)
from .formats import fraction_str, matrix_to_strings, sig_digits
from .graphs import (
    DisconnectedGraphError,
    Graph,
    PartitionSpec,
    complete_multipartite,
    parse_edge_list,
)

SCHEMA_VERSION = 1


class GraphInput(BaseModel):
    """Exactly one input source: a partition spec string or edge-list text."""

    spec: Optional[str] = None
    edge_list: Optional[str] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.spec is None) == (self.edge_list is None):
            raise ValueError("provide exactly one of 'spec' or 'edge_list'")
        return self

    def partition(self) -> Optional[PartitionSpec]:
        return PartitionSpec.parse(self.spec) if self.spec is not None else None

    def graph(self) -> Graph:
        if self.spec is not None:
            return complete_multipartite(PartitionSpec.parse(self.spec))
        return parse_edge_list(self.edge_list)


class ResistanceRequest(BaseModel):
    input: GraphInput
    pair: Optional[tuple[int, int]] = None


class ResistanceResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    source: Literal["closed-form", "oracle"]
    matrix: Optional[list[list[str]]] = None
    pair_value: Optional[str] = None

    model_config = {"populate_by_name": True}


class IndexRequest(BaseModel):
    input: GraphInput
    all_methods: bool = False


class IndexResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    exact: str
    decimal: str
    source: Literal["closed-form", "oracle"]
    methods: Optional[dict[str, str]] = None

    model_config = {"populate_by_name": True}


class TreesResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    count: str
    source: Literal["closed-form", "oracle"]
    methods: Optional[dict[str, str]] = None

    model_config = {"populate_by_name": True}


class SpectrumResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    exact: Optional[list[str]] = None
    values: list[float]
    residual: Optional[float] = None
    source: Literal["closed-form", "oracle"]

    model_config = {"populate_by_name": True}


class MinorPolyRequest(BaseModel):
    spec: str
    t: list[int]


class MinorPolyResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    parts: list[int]
    t: list[int]
    rational_factor: list[list[int]]
    linear_factors: list[list[int]]
    coefficients: list[str]

    model_config = {"populate_by_name": True}


class ExtremalRequest(BaseModel):
    n: int
    r: int
    index: Literal["kf", "dkf"] = "kf"


class ExtremalResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    r: int
    index: str
    minimizer: str
    min_exact: str
    min_decimal: str
    min_agrees: bool
    min_tie: bool
    maximizer: str
    max_exact: str
    max_decimal: str
    max_agrees: bool
    max_tie: bool
    predicted_min: str
    predicted_max: str

    model_config = {"populate_by_name": True}


class TableRequest(BaseModel):
    n: int
    r: int
    digits: int = 5


class TableRowModel(BaseModel):
    spec: str
    parts: list[int]
    m: int
    dkf: str
    dkf_decimal: str
    dkf_arrow: Optional[str]
    kf: str
    kf_decimal: str
    kf_arrow: Optional[str]


class TableResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    r: int
    rows: list[TableRowModel]

    model_config = {"populate_by_name": True}


class VerifyRequest(BaseModel):
    max_n: int = 8


class CheckModel(BaseModel):
    name: str
    cases: int
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    passed: bool
    checks: list[CheckModel]

    model_config = {"populate_by_name": True}


# Handlers


def handle_resistance(req: ResistanceRequest) -> ResistanceResponse:
    spec = req.input.partition()
    if spec is not None:
        matrix = closed_forms.resistance_matrix_closed(spec)
        source = "closed-form"
    else:
        matrix = oracle.resistance_matrix(req.input.graph())
        source = "oracle"
    if req.pair is not None:
        u, v = req.pair
        if not (0 <= u < matrix.rows and 0 <= v < matrix.rows):
            raise ValueError(f"pair ({u},{v}) out of range for n={matrix.rows}")
        return ResistanceResponse(
            n=matrix.rows, source=source, pair_value=fraction_str(matrix[u, v])
        )
    return ResistanceResponse(
        n=matrix.rows, source=source, matrix=matrix_to_strings(matrix)
    )


def handle_kirchhoff(req: IndexRequest, digits: int = 6) -> IndexResponse:
    spec = req.input.partition()
    if spec is not None:
        value = closed_forms.kf_closed(spec)
        source = "closed-form"
    else:
        value = oracle.kirchhoff_index(req.input.graph())
        source = "oracle"
    methods = None
    if req.all_methods:
        g = req.input.graph()
        methods = {
            "oracle_trace": fraction_str(oracle.kirchhoff_index(g)),
            "spectral_float": repr(spectral.kf_from_spectrum(g)),
        }
        if spec is not None:
            methods["closed_form"] = fraction_str(value)
            exact_spectrum = closed_forms.multipartite_spectrum(spec)
            methods["spectrum_reciprocal_sum"] = fraction_str(
                g.n * sum(Fraction(1, int(lam)) for lam in exact_spectrum.nonzero())
            )
        _assert_methods_agree(value, methods)
    return IndexResponse(
        exact=fraction_str(value),
        decimal=sig_digits(value, digits),
        source=source,
        methods=methods,
    )


def handle_degree_kirchhoff(req: IndexRequest, digits: int = 6) -> IndexResponse:
    spec = req.input.partition()
    if spec is not None:
        value = closed_forms.dkf_closed(spec)
        source = "closed-form"
    else:
        value = oracle.degree_kirchhoff_index(req.input.graph())
        source = "oracle"
    methods = None
    if req.all_methods:
        g = req.input.graph()
        definitional = oracle.degree_kirchhoff_index(g)
        methods = {
            "oracle_pair_sum": fraction_str(definitional),
            "normalized_trace": fraction_str(
                2 * g.edge_count() * oracle.normalized_inverse_trace(g)
            ),
            "spectral_float": repr(spectral.dkf_from_spectrum(g)),
        }
        _assert_methods_agree(definitional, methods)
        if spec is not None:
            methods["closed_form"] = fraction_str(value)
            # The edge-count closed form matches the definitional sum only
            # on equal-part partitions.
            if len(set(spec.parts)) == 1 and value != definitional:
                raise RuntimeError(
                    f"closed form disagrees on regular partition: {value} vs {definitional}"
                )
    return IndexResponse(
        exact=fraction_str(value),
        decimal=sig_digits(value, digits),
        source=source,
        methods=methods,
    )


def handle_trees(req: IndexRequest) -> TreesResponse:
    spec = req.input.partition()
    if spec is not None:
        count = closed_forms.spanning_trees(spec)
        source = "closed-form"
    else:
        count = oracle.spanning_tree_count(req.input.graph())
        source = "oracle"
    methods = None
    if req.all_methods:
        methods = {
            "matrix_tree": str(oracle.spanning_tree_count(req.input.graph()))
        }
        if spec is not None:
            methods["closed_form"] = str(count)
        if any(v != str(count) for v in methods.values()):
            raise RuntimeError(f"spanning-tree routes disagree: {methods}")
    return TreesResponse(count=str(count), source=source, methods=methods)


def _assert_methods_agree(value: Fraction, methods: dict[str, str]) -> None:
    for name, rendered in methods.items():
        if name.endswith("_float"):
            if abs(float(rendered) - float(value)) > 1e-6 * max(1.0, abs(float(value))):
                raise RuntimeError(f"route {name} disagrees: {rendered} vs {value}")
        elif Fraction(rendered) != value:
            raise RuntimeError(f"route {name} disagrees: {rendered} vs {value}")


def handle_spectrum(req: IndexRequest) -> SpectrumResponse:
    spec = req.input.partition()
    if spec is not None:
        exact = closed_forms.multipartite_spectrum(spec).values
        return SpectrumResponse(
            exact=[fraction_str(Fraction(x)) for x in exact],
            values=[float(x) for x in exact],
            source="closed-form",
        )
    result = spectral.laplacian_spectrum(req.input.graph())
    return SpectrumResponse(
        values=list(result.eigenvalues), residual=result.residual, source="oracle"
    )


def handle_minor_poly(req: MinorPolyRequest) -> MinorPolyResponse:
    spec = PartitionSpec.parse(req.spec)
    factored = closed_forms.minor_charpoly(spec, req.t)
    payload = factored.to_dict()
    return MinorPolyResponse(**payload)


def handle_extremal(req: ExtremalRequest) -> ExtremalResponse:
    result: ExtremalResult = (
        extremal_kf(req.n, req.r) if req.index == "kf" else extremal_dkf(req.n, req.r)
    )
    return ExtremalResponse(
        n=req.n,
        r=req.r,
        index=req.index,
        minimizer=str(result.minimizer),
        min_exact=fraction_str(result.min_value),
        min_decimal=sig_digits(result.min_value, 5),
        min_agrees=result.min_agrees,
        min_tie=result.min_tie,
        maximizer=str(result.maximizer),
        max_exact=fraction_str(result.max_value),
        max_decimal=sig_digits(result.max_value, 5),
        max_agrees=result.max_agrees,
        max_tie=result.max_tie,
        predicted_min=str(result.predicted_min),
        predicted_max=str(result.predicted_max),
    )


def handle_table(req: TableRequest) -> TableResponse:
    rows = generate_table(req.n, req.r)
    return TableResponse(
        n=req.n,
        r=req.r,
        rows=[
            TableRowModel(
                spec=str(row.spec),
                parts=list(row.spec.parts),
                m=row.m,
                dkf=fraction_str(row.dkf),
                dkf_decimal=sig_digits(row.dkf, req.digits),
                dkf_arrow=row.dkf_arrow,
                kf=fraction_str(row.kf),
                kf_decimal=sig_digits(row.kf, req.digits),
                kf_arrow=row.kf_arrow,
            )
            for row in rows
        ],
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    checks = crosscheck.run_verification(req.max_n)
    return VerifyResponse(
        passed=all(c.passed for c in checks),
        checks=[
            CheckModel(name=c.name, cases=c.cases, passed=c.passed, detail=c.detail)
            for c in checks
        ],
    )


# FastAPI wiring

app = FastAPI(
    title="kirchhoff-tools",
    description="Exact effective resistance and Kirchhoff index computations",
)


def _wrap(handler, req):
    try:
        return handler(req)
    except (ValueError, DisconnectedGraphError, linalg.SizeLimitError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/resistance", response_model=ResistanceResponse, response_model_exclude_none=True)
def resistance_endpoint(req: ResistanceRequest):
    return _wrap(handle_resistance, req)


@app.post("/kirchhoff", response_model=IndexResponse, response_model_exclude_none=True)
def kirchhoff_endpoint(req: IndexRequest):
    return _wrap(handle_kirchhoff, req)


@app.post("/degree-kirchhoff", response_model=IndexResponse, response_model_exclude_none=True)
def degree_kirchhoff_endpoint(req: IndexRequest):
    return _wrap(handle_degree_kirchhoff, req)


@app.post("/spanning-trees", response_model=TreesResponse, response_model_exclude_none=True)
def trees_endpoint(req: IndexRequest):
    return _wrap(handle_trees, req)


@app.post("/spectrum", response_model=SpectrumResponse, response_model_exclude_none=True)
def spectrum_endpoint(req: IndexRequest):
    return _wrap(handle_spectrum, req)


@app.post("/minor-poly", response_model=MinorPolyResponse)
def minor_poly_endpoint(req: MinorPolyRequest):
    return _wrap(handle_minor_poly, req)


@app.post("/extremal", response_model=ExtremalResponse)
def extremal_endpoint(req: ExtremalRequest):
    return _wrap(handle_extremal, req)


@app.post("/table", response_model=TableResponse)
def table_endpoint(req: TableRequest):
    return _wrap(handle_table, req)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest):
    return _wrap(handle_verify, req)


@app.get("/health")
def health():
    return {"status": "ok", "schema": SCHEMA_VERSION}
