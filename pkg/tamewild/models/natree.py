"""Pydantic models: outcomes of Z-tame decomposition in K{X, Z}."""
from __future__ import annotations

from typing import Any, Union

from pydantic import BaseModel, Field, model_serializer

from tamewild.algebra.endo import NcEndo
from tamewild.algebra.napoly import NaEndo

_CONFIG = {"extra": "forbid", "arbitrary_types_allowed": True}


class ReductionStep(BaseModel):
    variable: str = Field(..., description="Generator whose image had its leading form removed")
    expression: str = Field(..., description="Leading form written in the other images' leading forms")
    tau: NaEndo = Field(..., description="Elementary map x_i - g(others) composed on the right")

    model_config = _CONFIG

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        return {"variable": self.variable, "expression": self.expression, "tau": str(self.tau)}


class NaCertificate(BaseModel):
    reason: str
    stuck: NaEndo = Field(..., description="Endomorphism reached when no further reduction applied")
    reductions: list[ReductionStep] = Field(default_factory=list)

    model_config = _CONFIG

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        return {
            "reason": self.reason,
            "stuck": str(self.stuck),
            "degree": self.stuck.degree(),
            "reductions": [r.serialize_model() for r in self.reductions],
        }


class Decomposed(BaseModel):
    steps: list[NaEndo] = Field(..., description="Z-elementary maps composing left to right to the input")
    reductions: list[ReductionStep] = Field(default_factory=list)

    model_config = _CONFIG


class NotAutomorphism(BaseModel):
    certificate: NaCertificate

    model_config = _CONFIG


class IsZAutomorphism(BaseModel):
    steps: list[NaEndo]
    associative_steps: list[NcEndo] = Field(..., description="Images of the steps in K<X, Z>")
    commutative_steps: list[list[str]] = Field(..., description="Images of the steps in K[X, Z]")

    model_config = _CONFIG

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        return {
            "steps": [str(s) for s in self.steps],
            "associative_steps": [str(s) for s in self.associative_steps],
            "commutative_steps": [" ; ".join(images) for images in self.commutative_steps],
        }


class No(BaseModel):
    certificate: NaCertificate

    model_config = _CONFIG


DecompositionOutcome = Union[Decomposed, NotAutomorphism]
LiftOutcome = Union[IsZAutomorphism, No]

__all__ = [
    "ReductionStep",
    "NaCertificate",
    "Decomposed",
    "NotAutomorphism",
    "IsZAutomorphism",
    "No",
    "DecompositionOutcome",
    "LiftOutcome",
]
