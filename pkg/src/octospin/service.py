"""Request/response models and handlers behind the HTTP API.

Handlers are plain functions over pydantic models, so the CLI can call them
in-process while the FastAPI app exposes the same surface over HTTP.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

from . import families as fam
from . import invariants as inv
from .linalg import matrix_to_json
from .octonion import structure_constants
from .scalars import scalar_from_json, scalar_repr
from .verify import GROUPS, run_suites

FamilyName = Literal["spin8", "spin9", "spin10", "spin101", "spin102", "spin91"]


class VerifyRequest(BaseModel):
    family: str = "all"
    trials: int = Field(default=20, ge=1)
    seed: int = 0
    mode: Literal["exact", "float"] = "exact"

    @field_validator("family")
    @classmethod
    def _known_family(cls, v: str) -> str:
        if v != "all" and v not in GROUPS:
            raise ValueError(
                "unknown family %r (expected one of %s or 'all')"
                % (v, ", ".join(GROUPS))
            )
        return v


class SuiteReport(BaseModel):
    name: str
    group: str
    mode: str
    trials: int
    max_residual: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    family: str
    trials: int
    seed: int
    mode: str
    passed: bool
    suites: List[SuiteReport]


class DimsResponse(BaseModel):
    spin8: int
    spin9: int
    spin10: int
    spin101: int
    spin102: int
    spin91: int


class MultableEntry(BaseModel):
    i: int
    j: int
    k: int
    c: int


class MultableResponse(BaseModel):
    triples: List[MultableEntry]


class StructureConstant(BaseModel):
    i: int
    j: int
    k: int
    c: List[str]  # exact rational as [num, den]


class MatrixJSON(BaseModel):
    rows: int
    cols: int
    mode: Literal["exact", "float"]
    entries: list


class TripleJSON(BaseModel):
    a1: MatrixJSON
    a2: MatrixJSON
    a3: MatrixJSON


class BasisResponse(BaseModel):
    family: str
    dimension: int
    matrices: Optional[List[MatrixJSON]] = None
    triples: Optional[List[TripleJSON]] = None
    structure_constants: Optional[List[StructureConstant]] = None


class SpinorIn(BaseModel):
    """Spinor slots as 8 scalars each; numbers, 'p/q' strings, or [num, den]."""

    x1: list = Field(default_factory=lambda: [0] * 8)
    y1: list = Field(default_factory=lambda: [0] * 8)
    x2: list = Field(default_factory=lambda: [0] * 8)
    y2: list = Field(default_factory=lambda: [0] * 8)

    def to_spinor(self) -> inv.Spinor:
        slots = []
        for name in ("x1", "y1", "x2", "y2"):
            coords = getattr(self, name)
            if len(coords) != 8:
                raise ValueError("slot %s needs 8 scalars" % name)
            slots.append([scalar_from_json(v) for v in coords])
        flat = [v for slot in slots for v in slot]
        exact = all(not isinstance(v, float) for v in flat)
        if not exact:
            flat = [float(v) for v in flat]
        return inv.Spinor.from_vector(flat)


class ClassifyRequest(BaseModel):
    family: Literal["spin8", "spin9", "spin10", "spin101"]
    spinor: SpinorIn


class StabilizerRequest(BaseModel):
    family: FamilyName
    spinor: SpinorIn


class StabilizerResponse(BaseModel):
    family: str
    dimension: int
    coefficients: List[list]


def do_verify(req: VerifyRequest) -> VerifyResponse:
    results = run_suites(req.family, req.trials, req.seed, req.mode)
    return VerifyResponse(
        family=req.family,
        trials=req.trials,
        seed=req.seed,
        mode=req.mode,
        passed=all(r.passed for r in results),
        suites=[SuiteReport(**vars(r)) for r in results],
    )


def do_dims() -> DimsResponse:
    return DimsResponse(**fam.FAMILY_DIMS)


def do_multable() -> MultableResponse:
    return MultableResponse(
        triples=[
            MultableEntry(i=i, j=j, k=k, c=c)
            for i, j, k, c in sorted(structure_constants())
        ]
    )


def _structure_constants_for(family: str) -> List[StructureConstant]:
    from .linalg import fast_bracket
    from .verify import family_solver

    mats = fam.family_matrices(family)
    solver = family_solver(family)
    out = []
    for i, j in itertools.combinations(range(len(mats)), 2):
        coeffs = solver.coefficients(fast_bracket(mats[i], mats[j]).ravel())
        if coeffs is None:
            raise RuntimeError("bracket [%d, %d] left the span" % (i, j))
        for k, c in enumerate(coeffs):
            if c != 0:
                f = Fraction(c)
                out.append(
                    StructureConstant(
                        i=i, j=j, k=k, c=[str(f.numerator), str(f.denominator)]
                    )
                )
    return out


def do_basis(family: str, include_structure: bool = False) -> BasisResponse:
    basis = fam.family_basis(family)
    resp = BasisResponse(family=family, dimension=basis.dimension)
    if family == "spin8":
        resp.triples = [
            TripleJSON(
                a1=MatrixJSON(**matrix_to_json(el.params["a"].a1)),
                a2=MatrixJSON(**matrix_to_json(el.params["a"].a2)),
                a3=MatrixJSON(**matrix_to_json(el.params["a"].a3)),
            )
            for el in basis.elements
        ]
    resp.matrices = [MatrixJSON(**matrix_to_json(el.matrix)) for el in basis.elements]
    if include_structure:
        resp.structure_constants = _structure_constants_for(family)
    return resp


def do_classify(req: ClassifyRequest) -> dict:
    """Flat orbit label: family, invariant values, canonical parameters, orbit."""
    z = req.spinor.to_spinor()
    label = inv.classify(req.family, z)
    flat = label.as_flat_dict()
    return {
        k: (scalar_repr(v) if k not in ("family", "orbit") else v)
        for k, v in flat.items()
    }


def do_stabilizer(req: StabilizerRequest) -> StabilizerResponse:
    z = req.spinor.to_spinor()
    coeffs = inv.stabilizer(req.family, z)
    return StabilizerResponse(
        family=req.family,
        dimension=len(coeffs),
        coefficients=[[scalar_repr(c) for c in vec] for vec in coeffs],
    )
