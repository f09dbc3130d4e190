"""Request/response models and handlers shared by the HTTP API and the CLI.

The CLI is a thin client over these handlers; the FastAPI app in
``platjones.api`` wires the same handlers to HTTP endpoints, so both
surfaces emit identical JSON documents.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from . import invariant, library, oracle, qcircuit
from .braid import ColoredBraidWord, parse_word
from .errors import ParseError
from .qalgebra import RootOfUnity


class BraidIn(BaseModel):
    """Braid word in the wire schema of the braid module."""

    strands: int
    colors_twice: list[int]
    orient: list[str]
    word: list[list[int]] = Field(default_factory=list)
    framings: Optional[list[int]] = None

    def to_word(self) -> ColoredBraidWord:
        return parse_word(self.model_dump())


class ComplexOut(BaseModel):
    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "ComplexOut":
        z = complex(z)
        return cls(re=z.real, im=z.imag)


class RunMeta(BaseModel):
    """Provenance recorded with every result."""

    k: int
    q: ComplexOut
    q_convention: str
    library_version: str
    seed: Optional[int] = None


def _meta(root: RootOfUnity, seed: int | None = None) -> RunMeta:
    return RunMeta(
        k=root.k,
        q=ComplexOut.of(root.q),
        q_convention="exp(-2*pi*i/(k+2))" if root.conjugate else "exp(+2*pi*i/(k+2))",
        library_version=library.library_version(),
        seed=seed,
    )


def _resolve_braid(braid: BraidIn | None, knot: str | None,
                   color_twice: int | None) -> ColoredBraidWord:
    if braid is None and knot is None:
        raise ParseError("provide either a braid word or a library knot name")
    if braid is not None and knot is not None:
        raise ParseError("provide a braid word or a knot name, not both")
    word = braid.to_word() if braid is not None else library.resolve(knot).word
    if color_twice is not None:
        word = word.recolored(color_twice)
    return word


# -- compute ----------------------------------------------------------------


class ComputeRequest(BaseModel):
    braid: Optional[BraidIn] = None
    knot: Optional[str] = None
    color_twice: Optional[int] = Field(default=None, ge=0)
    k: int = Field(ge=1)
    conjugate_q: bool = False


class ComputeResponse(BaseModel):
    V: ComplexOut
    J: ComplexOut
    writhe: int
    n_components: int
    colors_twice: list[int]
    block_dimension: int
    meta: RunMeta


def compute(req: ComputeRequest) -> ComputeResponse:
    root = RootOfUnity(req.k, req.conjugate_q)
    word = _resolve_braid(req.braid, req.knot, req.color_twice)
    res = invariant.colored_jones(word, root)
    from .blocks import enumerate_basis

    dim = enumerate_basis(word.puncture_colors(), root).dim
    return ComputeResponse(
        V=ComplexOut.of(res.V),
        J=ComplexOut.of(res.J),
        writhe=res.w,
        n_components=res.n_components,
        colors_twice=[s.twice for s in res.colors],
        block_dimension=dim,
        meta=_meta(root),
    )


# -- sample -----------------------------------------------------------------


class SampleRequest(BaseModel):
    braid: Optional[BraidIn] = None
    knot: Optional[str] = None
    color_twice: Optional[int] = Field(default=None, ge=0)
    k: int = Field(ge=1)
    conjugate_q: bool = False
    delta: float = Field(default=0.1, gt=0)
    confidence: float = Field(default=0.75, gt=0, lt=1)
    variance_bound: float = Field(default=1.0, gt=0)
    shots: Optional[int] = Field(default=None, ge=1)
    seed: int = 0
    component: Literal["re", "im", "both"] = "re"
    include_exact: bool = True


class ComponentEstimate(BaseModel):
    component: str
    estimate: float
    counts: dict[str, int]
    exact: Optional[float] = None


class SampleResponse(BaseModel):
    estimates: list[ComponentEstimate]
    shots: int
    seed: int
    delta: float
    confidence: float
    meta: RunMeta


def sample(req: SampleRequest) -> SampleResponse:
    root = RootOfUnity(req.k, req.conjugate_q)
    word = _resolve_braid(req.braid, req.knot, req.color_twice)
    parts = ["re", "im"] if req.component == "both" else [req.component]
    out = []
    shots = None
    for i, part in enumerate(parts):
        plan = qcircuit.SamplePlan(delta=req.delta, variance_bound=req.variance_bound,
                                   confidence=req.confidence, shots=req.shots,
                                   seed=req.seed + i)
        est, counts = qcircuit.hadamard_test(word, root, part, plan)
        shots = plan.resolved_shots()
        exact = None
        if req.include_exact:
            exact = 2.0 * qcircuit.exact_bernoulli(word, root, part) - 1.0
        out.append(ComponentEstimate(component=part, estimate=est, counts=counts, exact=exact))
    return SampleResponse(estimates=out, shots=shots, seed=req.seed, delta=req.delta,
                          confidence=req.confidence, meta=_meta(root, seed=req.seed))


# -- rt ---------------------------------------------------------------------


class RTRequest(BaseModel):
    braid: Optional[BraidIn] = None
    knot: Optional[str] = None
    empty_link: bool = False
    framings: Optional[list[int]] = None
    k: int = Field(ge=1)
    conjugate_q: bool = False
    rt_shift: bool = False
    threads: int = Field(default=1, ge=1)


class RTResponse(BaseModel):
    tau: ComplexOut
    alpha: ComplexOut
    b: float
    c: ComplexOut
    n_components: int
    signature: int
    meta: RunMeta


def rt(req: RTRequest) -> RTResponse:
    root = RootOfUnity(req.k, req.conjugate_q)
    if req.empty_link:
        word = None
    else:
        word = _resolve_braid(req.braid, req.knot, None)
    res = invariant.rt_invariant(word, req.framings, root, shift=req.rt_shift,
                               threads=req.threads)
    return RTResponse(
        tau=ComplexOut.of(res.tau),
        alpha=ComplexOut.of(res.alpha),
        b=res.b,
        c=ComplexOut.of(res.c),
        n_components=res.n_components,
        signature=res.sigma,
        meta=_meta(root),
    )


# -- volscan ----------------------------------------------------------------


class VolScanRequest(BaseModel):
    knot: str = "fig8"
    nmax: int = Field(default=30, ge=2)


class VolScanRow(BaseModel):
    N: int
    abs_jones: float
    ratio: float
    ratio_corrected: float


class VolScanResponse(BaseModel):
    knot: str
    volume: float
    rows: list[VolScanRow]


def volscan(req: VolScanRequest) -> VolScanResponse:
    rows = invariant.volume_scan(req.nmax, knot=req.knot)
    return VolScanResponse(
        knot=req.knot,
        volume=oracle.fig8_volume(),
        rows=[VolScanRow(N=r.N, abs_jones=r.abs_jones, ratio=r.ratio,
                         ratio_corrected=r.ratio_corrected) for r in rows],
    )


def volscan_csv(resp: VolScanResponse) -> str:
    lines = ["N,abs_jones,ratio"]
    for r in resp.rows:
        lines.append(f"{r.N},{r.abs_jones:.17g},{r.ratio:.17g}")
    return "\n".join(lines) + "\n"


# -- basis ------------------------------------------------------------------


class BasisRequest(BaseModel):
    colors_twice: list[int]
    orient: Optional[list[str]] = None
    k: int = Field(ge=1)


class BasisResponse(BaseModel):
    dimension: int
    labels: list[dict]
    vacuum_index: Optional[int] = None


def basis(req: BasisRequest) -> BasisResponse:
    from .blocks import OrientedSpin, PunctureColors, enumerate_basis, vacuum_label
    from .errors import NotPlatCompatible

    n = len(req.colors_twice)
    orient = req.orient or ["+", "-"] * (n // 2)
    if len(orient) != n:
        raise ParseError(f"orient must have length {n}")
    cols = PunctureColors(tuple(
        OrientedSpin(tw, +1 if o == "+" else -1) for tw, o in zip(req.colors_twice, orient)
    ))
    root = RootOfUnity(req.k)
    b = enumerate_basis(cols, root)
    try:
        vac = b.index_of(vacuum_label(b))
    except NotPlatCompatible:
        vac = None
    return BasisResponse(
        dimension=b.dim,
        labels=[{"p": list(lab.p), "r": list(lab.r)} for lab in b.labels],
        vacuum_index=vac,
    )


# -- verify -----------------------------------------------------------------


class VerifyRow(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[VerifyRow]


def verify(tolerance: float = 1e-9) -> VerifyResponse:
    rows = [VerifyRow(name=r.name, passed=r.passed, detail=r.detail)
            for r in oracle.verify_all(tolerance=tolerance)]
    return VerifyResponse(passed=all(r.passed for r in rows), checks=rows)
