"""GE2 membership over K[Z] by Euclidean reduction of leading forms.

A column (a, b) is reduced by row operations: a <- a - q*b (recorded as
E12(-q)) when lead(b) divides lead(a), otherwise b <- b - q*a (E21(-q))
when lead(a) divides lead(b). Reduction succeeds when it reaches
(alpha, 0) with alpha a nonzero constant.
"""
from __future__ import annotations

from tamewild.algebra.context import same_context
from tamewild.algebra.cring import (
    CMatrix,
    CPoly,
    det,
    exact_divide_homogeneous,
    is_unit,
    leading_form,
    mat_mul,
)
from tamewild.core.errors import NotInvertible, ZeroPolynomial
from tamewild.core.logging import get_logger, log_timed
from tamewild.models.certificate import Certificate, ElemStep, StuckReason, StuckWitness
from tamewild.models.ge2 import (
    Completed,
    CompletionOutcome,
    Member,
    MembershipOutcome,
    NotCompletable,
    NotMember,
    Reduced,
    ReductionOutcome,
    Stuck,
)

logger = get_logger("ge2")


def apply_step(step: ElemStep, a: CPoly, b: CPoly) -> tuple[CPoly, CPoly]:
    """Row operation ``(a, b)^T <- S (a, b)^T``."""
    m = step.matrix(a.context)
    return m[0, 0] * a + m[0, 1] * b, m[1, 0] * a + m[1, 1] * b


def euclid_reduce_pair(a: CPoly, b: CPoly) -> ReductionOutcome:
    same_context(a.context, b.context)
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomial("cannot reduce the pair (0, 0)")
    start = (a, b)
    one = CPoly.one(a.context)
    steps: list[ElemStep] = []
    while True:
        if b.is_zero():
            if a.is_constant():
                return Reduced(unit=a.constant_term(), steps=steps)
            return Stuck(
                witness=StuckWitness(a=a, b=b, reason=StuckReason.ZERO_PARTNER, input_pair=start, steps=steps)
            )
        if a.is_zero():
            # (0, b) -> (b, b) -> (b, 0)
            for step in (ElemStep.e12(one), ElemStep.e21(-one)):
                a, b = apply_step(step, a, b)
                steps.append(step)
            continue
        la, lb = leading_form(a), leading_form(b)
        q = exact_divide_homogeneous(la, lb)
        if q is not None:
            a = a - b * q
            steps.append(ElemStep.e12(-q))
            continue
        q = exact_divide_homogeneous(lb, la)
        if q is not None:
            b = b - a * q
            steps.append(ElemStep.e21(-q))
            continue
        return Stuck(
            witness=StuckWitness(a=a, b=b, reason=StuckReason.NEITHER_DIVIDES, input_pair=start, steps=steps)
        )


def recompose(cert: Certificate) -> CMatrix:
    ctx = cert.target.context
    out = CMatrix.identity(ctx, 2)
    for step in cert.steps:
        out = mat_mul(out, step.matrix(ctx))
    return out


def _nontrivial(steps: list[ElemStep]) -> list[ElemStep]:
    return [s for s in steps if not s.is_trivial()]


@log_timed("ge2.membership")
def ge2_membership(m: CMatrix) -> MembershipOutcome:
    if m.size != 2:
        raise NotInvertible("GE2 membership is defined for 2x2 matrices")
    d = det(m)
    if not is_unit(d):
        raise NotInvertible(f"det = {d} is not a nonzero constant")
    outcome = euclid_reduce_pair(m[0, 0], m[1, 0])
    if isinstance(outcome, Stuck):
        logger.info("ge2.member", verdict="NotMember", reason=outcome.witness.reason.value)
        return NotMember(witness=outcome.witness)
    upper = m
    for step in outcome.steps:
        upper = mat_mul(step.matrix(m.context), upper)
    alpha, c, delta = upper[0, 0].constant_term(), upper[0, 1], upper[1, 1]
    if not is_unit(delta):
        # alpha * delta = det is a unit
        raise NotInvertible(f"reduced matrix has non-unit corner {delta}")
    delta_c = delta.constant_term()
    steps = [s.inverse() for s in outcome.steps]
    steps += [ElemStep.e12(c.scale(1 / delta_c)), ElemStep.diag(alpha, delta_c)]
    cert = Certificate(steps=_nontrivial(steps), target=m)
    logger.info("ge2.member", verdict="Member", steps=len(cert.steps))
    return Member(certificate=cert)


@log_timed("ge2.complete")
def complete_to_ge2(a: CPoly, b: CPoly) -> CompletionOutcome:
    outcome = euclid_reduce_pair(a, b)
    if isinstance(outcome, Stuck):
        logger.info("ge2.complete", verdict="NotCompletable", reason=outcome.witness.reason.value)
        return NotCompletable(witness=outcome.witness)
    ctx = a.context
    c, d = CPoly.zero(ctx), CPoly.one(ctx)
    for step in reversed(outcome.steps):
        c, d = apply_step(step.inverse(), c, d)
    target = CMatrix([[a, c], [b, d]])
    steps = [s.inverse() for s in outcome.steps] + [ElemStep.diag(outcome.unit, 1)]
    logger.info("ge2.complete", verdict="Completed", steps=len(outcome.steps))
    return Completed(c=c, d=d, certificate=Certificate(steps=_nontrivial(steps), target=target))


__all__ = [
    "apply_step",
    "euclid_reduce_pair",
    "ge2_membership",
    "complete_to_ge2",
    "recompose",
]
