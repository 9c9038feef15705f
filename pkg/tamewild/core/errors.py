"""Central error types and the CLI error body.
Minimal, focused; each custom error carries a process exit code.
"""
from __future__ import annotations
from typing import Any


class TameWildError(Exception):
    exit_code: int = 2
    detail: str = "Invalid input"

    def __init__(self, detail: str | None = None):
        if detail:
            self.detail = detail
        super().__init__(self.detail)


class ContextMismatch(TameWildError):
    detail = "Operands live in different variable contexts"


class ParseError(TameWildError):
    detail = "Syntax error"

    def __init__(self, detail: str | None = None, position: tuple[int, int] | None = None, source: str | None = None):
        self.position = position
        self.source = source
        if detail and position is not None:
            detail = f"{detail} at column {position[0] + 1}"
        super().__init__(detail)


class UnknownVariable(TameWildError):
    detail = "Unknown variable"


class MissingImage(TameWildError):
    detail = "Substitution has no image for a variable"


class NotXYLinear(TameWildError):
    detail = "Polynomial is not linear in x, y with z-coefficients"


class NotHomogeneous(TameWildError):
    detail = "Polynomial is not homogeneous"


class ZeroPolynomial(TameWildError):
    detail = "Operation undefined on the zero polynomial"


class NotInvertible(TameWildError):
    detail = "Determinant is not a nonzero constant"


class NotZFixing(TameWildError):
    detail = "Endomorphism does not fix z"


class HypothesisViolated(TameWildError):
    detail = "Input violates the hypothesis of the decision procedure"


class IdentityInductionFailed(TameWildError):
    detail = "Endomorphism does not induce the identity on the polynomial algebra"


class ReportInvalid(TameWildError):
    detail = "Report cannot be read"


class ResourceLimit(TameWildError):
    exit_code = 3
    detail = "Configured degree limit exceeded"


class ShapeViolation(TameWildError):
    exit_code = 4
    detail = "Internal invariant violated"


def classify(exc: BaseException) -> str:
    if isinstance(exc, ParseError):
        return "parse_error"
    if isinstance(exc, (UnknownVariable, ContextMismatch, MissingImage)):
        return "context_error"
    if isinstance(exc, ResourceLimit):
        return "resource_limit"
    if isinstance(exc, ShapeViolation):
        return "internal_error"
    if isinstance(exc, (HypothesisViolated, NotZFixing, IdentityInductionFailed, NotXYLinear, NotHomogeneous)):
        return "hypothesis"
    if isinstance(exc, TameWildError):
        return "domain_error"
    return "internal_error"


def error_body(exc: BaseException, run_id: str | None) -> dict[str, Any]:
    if isinstance(exc, TameWildError):
        message = exc.detail
    else:
        message = str(exc) or "Unexpected error"
    body: dict[str, Any] = {
        "code": exc.__class__.__name__ if isinstance(exc, TameWildError) else "InternalError",
        "message": message,
        "classification": classify(exc),
        "run_id": run_id,
    }
    position = getattr(exc, "position", None)
    if position is not None:
        body["position"] = list(position)
    return body


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, TameWildError):
        return exc.exit_code
    return 4


__all__ = [
    "TameWildError",
    "ContextMismatch",
    "ParseError",
    "UnknownVariable",
    "MissingImage",
    "NotXYLinear",
    "NotHomogeneous",
    "ZeroPolynomial",
    "NotInvertible",
    "NotZFixing",
    "HypothesisViolated",
    "IdentityInductionFailed",
    "ReportInvalid",
    "ResourceLimit",
    "ShapeViolation",
    "classify",
    "error_body",
    "exit_code_for",
]
