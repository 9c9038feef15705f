"""Pydantic models: outcomes of the GE2 Euclidean reduction."""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from pydantic import BaseModel, Field

from tamewild.algebra.cring import CPoly
from .certificate import Certificate, ElemStep, StuckWitness

_CONFIG = {"extra": "forbid", "arbitrary_types_allowed": True}


class Reduced(BaseModel):
    unit: Fraction = Field(..., description="Nonzero constant alpha with S_k...S_1 (a, b)^T = (alpha, 0)^T")
    steps: list[ElemStep] = Field(default_factory=list, description="Row operations S_1..S_k in application order")

    model_config = _CONFIG


class Stuck(BaseModel):
    witness: StuckWitness

    model_config = _CONFIG


class Member(BaseModel):
    certificate: Certificate

    model_config = _CONFIG


class NotMember(BaseModel):
    witness: StuckWitness

    model_config = _CONFIG


class Completed(BaseModel):
    c: CPoly = Field(..., description="Upper-right entry of the completed matrix")
    d: CPoly = Field(..., description="Lower-right entry of the completed matrix")
    certificate: Certificate

    model_config = _CONFIG


class NotCompletable(BaseModel):
    witness: StuckWitness

    model_config = _CONFIG


ReductionOutcome = Union[Reduced, Stuck]
MembershipOutcome = Union[Member, NotMember]
CompletionOutcome = Union[Completed, NotCompletable]

__all__ = [
    "Reduced",
    "Stuck",
    "Member",
    "NotMember",
    "Completed",
    "NotCompletable",
    "ReductionOutcome",
    "MembershipOutcome",
    "CompletionOutcome",
]
