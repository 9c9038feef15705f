"""Pydantic models: CyclicClass, TraceOutcome, ObstructionReport."""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field, model_serializer

from tamewild.algebra.field import format_rational
from tamewild.algebra.ncpoly import NcPoly
from tamewild.services.deriv import Side


class CyclicClass(BaseModel):
    representative: NcPoly = Field(..., description="Every word replaced by its minimal rotation, coefficients merged")

    model_config = {"extra": "forbid", "frozen": True, "arbitrary_types_allowed": True}

    def is_zero(self) -> bool:
        return self.representative.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicClass):
            return NotImplemented
        return self.representative == other.representative

    def __hash__(self) -> int:
        return hash(self.representative)

    def __str__(self) -> str:
        return str(self.representative)

    @model_serializer
    def serialize_model(self) -> str:
        return str(self.representative)


class TraceStatus(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"


class TraceOutcome(BaseModel):
    status: TraceStatus
    side: Side
    k: int | None = Field(None, description="Lowest degree of sigma - id, at least 2")
    residual: CyclicClass | None = Field(None, description="Nonzero class of the degree k-1 trace part on Fail")
    reason: str | None = None

    model_config = {"extra": "forbid", "arbitrary_types_allowed": True}

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        out: dict[str, Any] = {"status": self.status.value, "side": self.side.value}
        if self.k is not None:
            out["k"] = self.k
        if self.residual is not None:
            out["residual"] = str(self.residual)
        if self.reason:
            out["reason"] = self.reason
        return out


class ObstructionReport(BaseModel):
    basis: list[str] = Field(..., description="Degree-4 products allowed in the lifting ansatz")
    right_vector: list[Fraction] = Field(..., description="Coefficient of xyz - xzy in each right-trace contribution")
    left_vector: list[Fraction]
    right_offset: Fraction = Field(..., description="Contribution of x^2[y,z] to the right trace")
    left_offset: Fraction
    consistent: bool = Field(..., description="Whether both trace constraints can hold at once")

    model_config = {"extra": "forbid", "arbitrary_types_allowed": True}

    @property
    def verdict(self) -> str:
        return "Consistent" if self.consistent else "Inconsistent"

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        return {
            "basis": self.basis,
            "right_vector": [format_rational(c) for c in self.right_vector],
            "right_offset": format_rational(self.right_offset),
            "left_vector": [format_rational(c) for c in self.left_vector],
            "left_offset": format_rational(self.left_offset),
            "verdict": self.verdict,
        }


__all__ = ["CyclicClass", "TraceStatus", "TraceOutcome", "ObstructionReport"]
