"""Pydantic model: Verdict.
Outcome of a tame/wild decision: Tame with a factorization, Wild with a
stuck witness, or Inconclusive with a reason.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field, model_serializer

from tamewild.algebra.cring import CMatrix
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.field import format_rational
from .certificate import Certificate, StuckWitness


class VerdictKind(str, Enum):
    TAME = "Tame"
    WILD = "Wild"
    INCONCLUSIVE = "Inconclusive"


class Criterion(str, Enum):
    Z_LINEAR_GE2 = "z-linear-ge2"
    LINEAR_COORDINATE = "linear-coordinate"
    LINEAR_PART_COORDINATE = "linear-part-coordinate"
    LINEAR_PART_AUTOMORPHISM = "linear-part-automorphism"
    METABELIAN_J2 = "metabelian-j2"

    @property
    def theorem(self) -> str:
        """Statement of the result the decision rests on, cited in reports."""
        return _THEOREMS[self]


_THEOREMS = {
    Criterion.Z_LINEAR_GE2: "a z-linear automorphism is z-tame iff its J_z lies in GE2(K[z1,z2])",
    Criterion.LINEAR_COORDINATE: "an xy-linear coordinate is tame iff its coefficient column completes to GE2(K[z1,z2])",
    Criterion.LINEAR_PART_COORDINATE: "a coordinate whose linear part in x, y is z-wild is wild",
    Criterion.LINEAR_PART_AUTOMORPHISM: "a z-fixing automorphism whose linear part in x, y is z-wild is wild",
    Criterion.METABELIAN_J2: "J_2 outside GE2(K[z1,z2]) makes both coordinates wild",
}


class Verdict(BaseModel):
    kind: VerdictKind
    criterion: Criterion | None = Field(None, description="Decision rule that produced a Tame/Wild answer")
    steps: list[NcEndo] = Field(
        default_factory=list,
        description="z-elementary automorphisms whose left-to-right composite realizes the Tame claim",
    )
    certificate: Certificate | None = Field(None, description="GE2 factorization behind the steps")
    witness: StuckWitness | None = Field(None, description="Stuck pair behind a Wild answer")
    reason: str | None = Field(None, description="Why no Tame/Wild answer is justified")
    linear_part_jz: CMatrix | None = Field(None, description="J_z of the linear part that was tested")
    offset: tuple[Fraction, Fraction] | None = Field(
        None, description="Constant translation (x+a, y+b, z) composed before testing the linear part"
    )

    model_config = {
        "extra": "forbid",
        "arbitrary_types_allowed": True,
    }

    @classmethod
    def tame(cls, criterion: Criterion, steps: list[NcEndo], certificate: Certificate | None = None, **extra: Any) -> "Verdict":
        return cls(kind=VerdictKind.TAME, criterion=criterion, steps=steps, certificate=certificate, **extra)

    @classmethod
    def wild(cls, criterion: Criterion, witness: StuckWitness, **extra: Any) -> "Verdict":
        return cls(kind=VerdictKind.WILD, criterion=criterion, witness=witness, **extra)

    @classmethod
    def inconclusive(cls, reason: str, **extra: Any) -> "Verdict":
        return cls(kind=VerdictKind.INCONCLUSIVE, reason=reason, **extra)

    @property
    def is_tame(self) -> bool:
        return self.kind is VerdictKind.TAME

    @property
    def is_wild(self) -> bool:
        return self.kind is VerdictKind.WILD

    @model_serializer
    def serialize_model(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": self.kind.value}
        if self.criterion is not None:
            out["theorem"] = self.criterion.theorem
            out["criterion"] = self.criterion.value
        if self.kind is VerdictKind.TAME:
            out["steps"] = [str(s) for s in self.steps]
        if self.certificate is not None:
            out["certificate"] = self.certificate.serialize_model()
        if self.witness is not None:
            out["witness"] = self.witness.serialize_model()
        if self.reason:
            out["reason"] = self.reason
        if self.linear_part_jz is not None:
            out["linear_part_jz"] = self.linear_part_jz.to_lists()
        if self.offset is not None:
            out["offset"] = [format_rational(c) for c in self.offset]
        return out


__all__ = ["VerdictKind", "Criterion", "Verdict"]
