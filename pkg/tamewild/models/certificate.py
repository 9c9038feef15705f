"""Pydantic models: ElemStep, Certificate, StuckWitness.
Elementary-matrix factorizations over K[Z] and the pairs on which reduction stops.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field, model_serializer, model_validator

from tamewild.algebra.context import Context
from tamewild.algebra.cring import CMatrix, CPoly
from tamewild.algebra.field import format_rational


class StepKind(str, Enum):
    E12 = "E12"
    E21 = "E21"
    DIAG = "Diag"


class ElemStep(BaseModel):
    kind: StepKind = Field(..., description="E12(q)=[[1,q],[0,1]], E21(q)=[[1,0],[q,1]] or Diag(alpha, beta)")
    q: CPoly | None = Field(None, description="Off-diagonal entry of an elementary step")
    alpha: Fraction | None = Field(None, description="First diagonal entry of a Diag step")
    beta: Fraction | None = Field(None, description="Second diagonal entry of a Diag step")

    model_config = {
        "extra": "forbid",
        "frozen": True,
        "arbitrary_types_allowed": True,
    }

    @model_validator(mode="after")
    def _check_payload(self) -> "ElemStep":
        if self.kind is StepKind.DIAG:
            if self.alpha is None or self.beta is None or self.q is not None:
                raise ValueError("Diag needs alpha and beta only")
            if self.alpha == 0 or self.beta == 0:
                raise ValueError("Diag entries must be nonzero")
        elif self.q is None or self.alpha is not None or self.beta is not None:
            raise ValueError(f"{self.kind.value} needs q only")
        return self

    @classmethod
    def e12(cls, q: CPoly) -> "ElemStep":
        return cls(kind=StepKind.E12, q=q)

    @classmethod
    def e21(cls, q: CPoly) -> "ElemStep":
        return cls(kind=StepKind.E21, q=q)

    @classmethod
    def diag(cls, alpha: Fraction | int, beta: Fraction | int) -> "ElemStep":
        return cls(kind=StepKind.DIAG, alpha=Fraction(alpha), beta=Fraction(beta))

    def inverse(self) -> "ElemStep":
        if self.kind is StepKind.DIAG:
            return ElemStep.diag(1 / self.alpha, 1 / self.beta)  # type: ignore[operator]
        return ElemStep(kind=self.kind, q=-self.q)  # type: ignore[operator]

    def is_trivial(self) -> bool:
        if self.kind is StepKind.DIAG:
            return self.alpha == 1 and self.beta == 1
        return self.q.is_zero()  # type: ignore[union-attr]

    def matrix(self, context: Context) -> CMatrix:
        one, zero = CPoly.one(context), CPoly.zero(context)
        if self.kind is StepKind.DIAG:
            return CMatrix([[CPoly.constant(context, self.alpha), zero], [zero, CPoly.constant(context, self.beta)]])  # type: ignore[arg-type]
        q = self.q.embed(context)  # type: ignore[union-attr]
        if self.kind is StepKind.E12:
            return CMatrix([[one, q], [zero, one]])
        return CMatrix([[one, zero], [q, one]])

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        if self.kind is StepKind.DIAG:
            return {"kind": self.kind.value, "alpha": format_rational(self.alpha), "beta": format_rational(self.beta)}  # type: ignore[arg-type]
        return {"kind": self.kind.value, "q": str(self.q)}

    def __str__(self) -> str:
        if self.kind is StepKind.DIAG:
            return f"Diag({format_rational(self.alpha)}, {format_rational(self.beta)})"  # type: ignore[arg-type]
        return f"{self.kind.value}({self.q})"


class Certificate(BaseModel):
    steps: list[ElemStep] = Field(default_factory=list, description="Steps whose left-to-right product is target")
    target: CMatrix = Field(..., description="The matrix the steps multiply to")

    model_config = {
        "extra": "forbid",
        "arbitrary_types_allowed": True,
    }

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        return {
            "steps": [s.serialize_model() for s in self.steps],
            "target": self.target.to_lists(),
        }


class StuckReason(str, Enum):
    NEITHER_DIVIDES = "neither-leading-form-divides"
    ZERO_PARTNER = "nonconstant-with-zero-partner"


class StuckWitness(BaseModel):
    a: CPoly = Field(..., description="First entry of the pair where reduction stopped")
    b: CPoly = Field(..., description="Second entry of the pair where reduction stopped")
    reason: StuckReason
    input_pair: tuple[CPoly, CPoly] = Field(..., description="The pair reduction started from")
    steps: list[ElemStep] = Field(default_factory=list, description="Row operations S_1..S_k applied to reach (a, b)")

    model_config = {
        "extra": "forbid",
        "arbitrary_types_allowed": True,
    }

    @property
    def pair(self) -> tuple[CPoly, CPoly]:
        return (self.a, self.b)

    def generates_proper_ideal(self) -> bool:
        """True when (a, b) visibly cannot be unimodular."""
        if self.reason is StuckReason.ZERO_PARTNER:
            return True
        return self.a.constant_term() == 0 and self.b.constant_term() == 0

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        return {
            "pair": [str(self.a), str(self.b)],
            "reason": self.reason.value,
            "input_pair": [str(p) for p in self.input_pair],
            "steps": [s.serialize_model() for s in self.steps],
        }


__all__ = ["StepKind", "ElemStep", "Certificate", "StuckReason", "StuckWitness"]
