"""Pydantic model: Report.
Versioned, machine-checkable output of one CLI command.
"""
from __future__ import annotations

from typing import Any

import orjson
from pydantic import BaseModel, Field

from .verdict import Verdict

SCHEMA_VERSION = 1


class Report(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, description="Report layout version")
    command: str = Field(..., min_length=1, description="Command that produced the report, e.g. 'coord decide'")
    input: dict[str, Any] = Field(default_factory=dict, description="Canonical inputs needed to re-check the report")
    verdict: str | None = Field(None, description="Tame / Wild / Inconclusive, Member / NotMember, ...")
    theorem: str | None = Field(None, description="Result a Tame/Wild verdict rests on")
    criterion: str | None = Field(None, description="Decision rule behind a Tame/Wild verdict")
    witness: dict[str, Any] | None = None
    certificate: dict[str, Any] | None = None
    steps: list[str] | None = Field(None, description="Endomorphisms composing left to right to the input")
    result: dict[str, Any] | None = Field(None, description="Command specific payload")
    timing_ms: float | None = None

    model_config = {
        "extra": "forbid",
    }

    @classmethod
    def from_verdict(cls, command: str, input: dict[str, Any], verdict: Verdict, **extra: Any) -> "Report":
        body = verdict.serialize_model()
        result = {k: body[k] for k in ("reason", "linear_part_jz", "offset") if k in body}
        result.update(extra.pop("result", None) or {})
        return cls(
            command=command,
            input=input,
            verdict=body["verdict"],
            theorem=body.get("theorem"),
            criterion=body.get("criterion"),
            witness=body.get("witness"),
            certificate=body.get("certificate"),
            steps=body.get("steps"),
            result=result or None,
            **extra,
        )

    def to_json(self) -> bytes:
        return orjson.dumps(self.model_dump(exclude_none=True), option=orjson.OPT_INDENT_2)

    def render_text(self) -> str:
        lines = [f"{self.command}: {self.verdict}" if self.verdict else self.command]
        if self.criterion:
            lines.append(f"  criterion: {self.criterion}")
        if self.theorem:
            lines.append(f"  theorem: {self.theorem}")
        if self.witness:
            a, b = self.witness["pair"]
            lines.append(f"  witness: ({a}, {b})  [{self.witness['reason']}]")
        if self.steps:
            lines.append("  steps:")
            lines += [f"    {i + 1}. ({step})" for i, step in enumerate(self.steps)]
        elif self.certificate and self.certificate.get("steps"):
            lines.append("  certificate:")
            lines += [f"    {_format_step(s)}" for s in self.certificate["steps"]]
        for key, value in (self.result or {}).items():
            lines.append(f"  {key}: {_format_value(value)}")
        return "\n".join(lines)


def _format_step(step: dict[str, Any]) -> str:
    if "q" in step:
        return f"{step['kind']}({step['q']})"
    return f"{step['kind']}({step['alpha']}, {step['beta']})"


def _format_value(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_format_value(v) for v in value) + "]"
    return str(value)


__all__ = ["SCHEMA_VERSION", "Report"]
