"""Automorphisms of K<x,y,z>: composition, z-linear automorphisms, tame/wild decisions.

Composition follows ``(phi psi)(u) = phi(psi(u))``. A z-linear
endomorphism fixes z and sends x, y to polynomials of degree one in x, y
with z-coefficients; its matrix J_z has the x- and y-coefficients of
rho(x), rho(y) as columns.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from pydantic import BaseModel, Field

from tamewild.algebra.context import XYZ, Context, same_context
from tamewild.algebra.cring import CMatrix, det, is_unit, mat_inverse_2x2_unit_det
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.field import Scalar, to_rational
from tamewild.algebra.ncpoly import (
    NcPoly,
    homogeneous_component,
    substitute,
    xy_linear_decompose,
    z_sandwich,
)
from tamewild.core.errors import (
    ContextMismatch,
    HypothesisViolated,
    NotInvertible,
    NotXYLinear,
    NotZFixing,
)
from tamewild.core.logging import get_logger, log_timed
from tamewild.core.settings import get_settings
from tamewild.models.certificate import ElemStep, StepKind
from tamewild.models.ge2 import NotCompletable, NotMember, Stuck
from tamewild.models.verdict import Criterion, Verdict
from tamewild.services.ge2 import complete_to_ge2, euclid_reduce_pair, ge2_membership

logger = get_logger("autom")

XY = ("x", "y")


def _require_xyz(context: Context) -> None:
    if context != XYZ:
        raise ContextMismatch(f"expected the context (x, y, z), got {context!r}")


def _require_z_fixed(rho: NcEndo) -> None:
    _require_xyz(rho.context)
    if rho.image("z") != NcPoly.var(rho.context, "z"):
        raise NotZFixing(f"rho(z) = {rho.image('z')}")


# -------------------------------------------------
# Composition and z-linear automorphisms
# -------------------------------------------------
def compose(phi: NcEndo, psi: NcEndo) -> NcEndo:
    same_context(phi.context, psi.context)
    return phi.compose(psi)


def compose_all(steps: Sequence[NcEndo], context: Context = XYZ) -> NcEndo:
    out = NcEndo.identity(context)
    for step in steps:
        out = compose(out, step)
    return out


class ZLinearAuto(BaseModel):
    matrix: CMatrix = Field(..., description="J_z: columns are the x/y coefficients of rho(x), rho(y)")
    tail: tuple[NcPoly, NcPoly] = Field(..., description="z-only parts f0(z), g0(z) of rho(x), rho(y)")

    model_config = {"extra": "forbid", "arbitrary_types_allowed": True, "frozen": True}

    @classmethod
    def from_endo(cls, rho: NcEndo) -> "ZLinearAuto":
        _require_z_fixed(rho)
        f = xy_linear_decompose(rho.image("x"))
        g = xy_linear_decompose(rho.image("y"))
        return cls(matrix=CMatrix([[f.a, g.a], [f.b, g.b]]), tail=(f.tail, g.tail))

    def to_endo(self) -> NcEndo:
        ctx = self.tail[0].context
        x, y = NcPoly.var(ctx, "x"), NcPoly.var(ctx, "y")
        m = self.matrix
        return NcEndo(
            ctx,
            {
                "x": z_sandwich(m[0, 0], x) + z_sandwich(m[1, 0], y) + self.tail[0],
                "y": z_sandwich(m[0, 1], x) + z_sandwich(m[1, 1], y) + self.tail[1],
                "z": NcPoly.var(ctx, "z"),
            },
        )


def jz(rho: NcEndo) -> CMatrix:
    return ZLinearAuto.from_endo(rho).matrix


def is_z_linear_automorphism(rho: NcEndo) -> bool:
    return is_unit(det(jz(rho)))


def translation(f0: NcPoly | None = None, g0: NcPoly | None = None, context: Context = XYZ) -> NcEndo:
    """The z-translation (x + f0(z), y + g0(z), z)."""
    zero = NcPoly.zero(context)
    f0 = zero if f0 is None else f0
    g0 = zero if g0 is None else g0
    for tail in (f0, g0):
        if tail.depends_on(XY):
            raise HypothesisViolated(f"translation tail {tail} must not involve x or y")
    return NcEndo(
        context,
        {"x": NcPoly.var(context, "x") + f0, "y": NcPoly.var(context, "y") + g0, "z": NcPoly.var(context, "z")},
    )


def invert_z_linear(rho: ZLinearAuto) -> ZLinearAuto:
    """rho = lambda o tau+ with tau+ the translation, so rho^-1 = tau- o lambda^-1."""
    inverse_matrix = mat_inverse_2x2_unit_det(rho.matrix)
    ctx = rho.tail[0].context
    zero = NcPoly.zero(ctx)
    linear_inverse = ZLinearAuto(matrix=inverse_matrix, tail=(zero, zero)).to_endo()
    back = translation(-rho.tail[0], -rho.tail[1], ctx)
    return ZLinearAuto.from_endo(compose(back, linear_inverse))


def elementary_from_step(step: ElemStep, context: Context = XYZ) -> NcEndo:
    _require_xyz(context)
    x, y, z = (NcPoly.var(context, n) for n in context.names)
    if step.kind is StepKind.DIAG:
        return NcEndo(context, [x.scale(step.alpha), y.scale(step.beta), z])  # type: ignore[arg-type]
    if step.kind is StepKind.E21:
        return NcEndo(context, [x + z_sandwich(step.q, y), y, z])  # type: ignore[arg-type]
    return NcEndo(context, [x, y + z_sandwich(step.q, x), z])  # type: ignore[arg-type]


def _tail_steps(f0: NcPoly, g0: NcPoly) -> list[NcEndo]:
    steps = []
    if not f0.is_zero():
        steps.append(translation(f0, None, f0.context))
    if not g0.is_zero():
        steps.append(translation(None, g0, g0.context))
    return steps


# -------------------------------------------------
# Decisions
# -------------------------------------------------
@log_timed("autom.decide_z_tame_linear")
def decide_z_tame_linear(rho: NcEndo) -> Verdict:
    auto = ZLinearAuto.from_endo(rho)
    if not is_unit(det(auto.matrix)):
        raise NotInvertible(f"det J_z = {det(auto.matrix)} is not a nonzero constant")
    outcome = ge2_membership(auto.matrix)
    if isinstance(outcome, NotMember):
        logger.info("autom.decided", verdict="Wild", criterion=Criterion.Z_LINEAR_GE2.value)
        return Verdict.wild(Criterion.Z_LINEAR_GE2, outcome.witness, linear_part_jz=auto.matrix)
    cert = outcome.certificate
    steps = [elementary_from_step(s, rho.context) for s in cert.steps]
    steps += _tail_steps(*auto.tail)
    logger.info("autom.decided", verdict="Tame", steps=len(steps))
    return Verdict.tame(Criterion.Z_LINEAR_GE2, steps, cert, linear_part_jz=auto.matrix)


@log_timed("autom.decide_tame_coordinate_linear")
def decide_tame_coordinate_linear(f: NcPoly) -> Verdict:
    _require_xyz(f.context)
    form = xy_linear_decompose(f)
    if form.a.is_zero() and form.b.is_zero():
        return Verdict.inconclusive("polynomial does not involve x or y, so it is not a coordinate")
    outcome = complete_to_ge2(form.a, form.b)
    if isinstance(outcome, NotCompletable):
        witness = outcome.witness
        if witness.generates_proper_ideal():
            return Verdict.inconclusive("coefficient pair generates a proper ideal; input is not a coordinate", witness=witness)
        logger.info("coord.decided", verdict="Wild", criterion=Criterion.LINEAR_COORDINATE.value)
        return Verdict.wild(Criterion.LINEAR_COORDINATE, witness)
    steps = [elementary_from_step(s, f.context) for s in outcome.certificate.steps]
    steps += _tail_steps(form.tail, NcPoly.zero(f.context))
    logger.info("coord.decided", verdict="Tame", steps=len(steps))
    return Verdict.tame(Criterion.LINEAR_COORDINATE, steps, outcome.certificate)


@log_timed("autom.decide_wild_coordinate")
def decide_wild_coordinate(f: NcPoly) -> Verdict:
    _require_xyz(f.context)
    if not homogeneous_component(f, 0, XY).is_zero():
        raise HypothesisViolated("f has terms depending only on z; subtract f(0,0,z) first")
    linear = homogeneous_component(f, 1, XY)
    if linear.is_zero():
        return Verdict.inconclusive("f has no part linear in x, y")
    form = xy_linear_decompose(linear)
    outcome = euclid_reduce_pair(form.a, form.b)
    if isinstance(outcome, Stuck):
        witness = outcome.witness
        if witness.generates_proper_ideal():
            return Verdict.inconclusive("linear part generates a proper ideal; input is not a coordinate", witness=witness)
        logger.info("coord.decided", verdict="Wild", criterion=Criterion.LINEAR_PART_COORDINATE.value)
        return Verdict.wild(Criterion.LINEAR_PART_COORDINATE, witness)
    if linear == f:
        return decide_tame_coordinate_linear(f)
    logger.info("coord.decided", verdict="Inconclusive", reason="tame-linear-part")
    return Verdict.inconclusive(
        "linear part is a tame coordinate and f is not linear in x, y; wildness of the linear part is only sufficient"
    )


def decide_coordinate(f: NcPoly) -> Verdict:
    """Dispatch: xy-linear inputs are decided exactly, others through their linear part."""
    try:
        xy_linear_decompose(f)
    except NotXYLinear:
        return decide_wild_coordinate(f - homogeneous_component(f, 0, XY))
    return decide_tame_coordinate_linear(f)


def decide_coordinates_linear(rho: NcEndo) -> tuple[Verdict, Verdict]:
    _require_z_fixed(rho)
    return decide_tame_coordinate_linear(rho.image("x")), decide_tame_coordinate_linear(rho.image("y"))


def _strip_tails(rho: NcEndo) -> NcEndo:
    """rho o (x - f0(z), y - g0(z), z), which removes the z-only parts of rho(x), rho(y)."""
    f0 = homogeneous_component(rho.image("x"), 0, XY)
    g0 = homogeneous_component(rho.image("y"), 0, XY)
    return compose(rho, translation(-f0, -g0, rho.context))


def linear_part(rho: NcEndo) -> NcEndo:
    return rho.replace(
        x=homogeneous_component(rho.image("x"), 1, XY),
        y=homogeneous_component(rho.image("y"), 1, XY),
    )


def _constant_translation(alpha: Fraction, beta: Fraction, context: Context) -> NcEndo:
    return translation(NcPoly.constant(context, alpha), NcPoly.constant(context, beta), context)


def offset_linear_part(rho: NcEndo, offset: tuple[Scalar, Scalar] | None = None) -> NcEndo:
    """Linear part of rho without z-tails, after substituting x + alpha, y + beta when an offset is given."""
    _require_z_fixed(rho)
    normalized = _strip_tails(rho)
    if offset is not None:
        shift = _constant_translation(to_rational(offset[0]), to_rational(offset[1]), rho.context)
        normalized = _strip_tails(compose(shift, normalized))
    return linear_part(normalized)


@log_timed("autom.decide_wild_automorphism_zfixing")
def decide_wild_automorphism_zfixing(
    rho: NcEndo, offsets: Sequence[tuple[Scalar, Scalar]] | None = None
) -> Verdict:
    _require_z_fixed(rho)
    if offsets is None:
        offsets = get_settings().translation_offsets
    normalized = _strip_tails(rho)
    linear = linear_part(normalized)
    matrix = jz(linear)
    if not is_unit(det(matrix)):
        return Verdict.inconclusive("linear part is not an automorphism", linear_part_jz=matrix)
    if normalized == linear:
        return decide_z_tame_linear(rho)
    verdict = decide_z_tame_linear(linear)
    if verdict.is_wild:
        return Verdict.wild(Criterion.LINEAR_PART_AUTOMORPHISM, verdict.witness, linear_part_jz=matrix)  # type: ignore[arg-type]
    # tau o rho is wild iff rho is; its linear part can be wild when rho's is not
    for alpha, beta in offsets:
        alpha, beta = to_rational(alpha), to_rational(beta)
        shifted_linear = offset_linear_part(rho, (alpha, beta))
        shifted_matrix = jz(shifted_linear)
        if not is_unit(det(shifted_matrix)):
            continue
        offset_verdict = decide_z_tame_linear(shifted_linear)
        if offset_verdict.is_wild:
            logger.info("autom.decided", verdict="Wild", offset=[str(alpha), str(beta)])
            return Verdict.wild(
                Criterion.LINEAR_PART_AUTOMORPHISM,
                offset_verdict.witness,  # type: ignore[arg-type]
                linear_part_jz=shifted_matrix,
                offset=(alpha, beta),
            )
    return Verdict.inconclusive(
        "linear part is z-tame and the map is not linear in x, y; no offset produced a wild linear part",
        linear_part_jz=matrix,
    )


# -------------------------------------------------
# Named automorphisms
# -------------------------------------------------
def _xyz() -> tuple[NcPoly, NcPoly, NcPoly]:
    return NcPoly.var(XYZ, "x"), NcPoly.var(XYZ, "y"), NcPoly.var(XYZ, "z")


def anick_m(m: int) -> NcEndo:
    """(x + z(xz - zy)^m, y + (xz - zy)^m z, z)."""
    if not isinstance(m, int) or m < 1:
        raise HypothesisViolated("m must be a positive integer")
    x, y, z = _xyz()
    t = x * z - z * y
    return NcEndo(XYZ, [x + z * t**m, y + t**m * z, z])


def anick() -> NcEndo:
    return anick_m(1)


def sigma_h(h: NcPoly) -> NcEndo:
    """(x + z h(xz - zy, z), y + h(xz - zy, z) z, z) for h in K<t, z> with h(0, 0) = 0."""
    if set(h.context.names) != {"t", "z"}:
        raise ContextMismatch(f"h must live in K<t, z>, got {h.context!r}")
    if h.constant_term() != 0:
        raise HypothesisViolated("h(0, 0) must be 0")
    x, y, z = _xyz()
    hv = substitute(h, {"t": x * z - z * y, "z": z}, XYZ)
    return NcEndo(XYZ, [x + z * hv, y + hv * z, z])


def elementary(variable: str, alpha: Scalar, f: NcPoly) -> NcEndo:
    """(..., alpha x_j + f(others), ...) with x_j = ``variable``."""
    alpha = to_rational(alpha)
    if alpha == 0:
        raise HypothesisViolated("alpha must be nonzero")
    if f.depends_on([variable]):
        raise HypothesisViolated(f"f must not involve {variable}")
    identity = NcEndo.identity(f.context)
    return identity.replace(**{variable: NcPoly.var(f.context, variable).scale(alpha) + f})


class ElementaryShape(NamedTuple):
    variable: str
    alpha: Fraction
    rest: NcPoly


def elementary_shape(rho: NcEndo) -> ElementaryShape | None:
    """(variable, alpha, f) when rho changes one generator to alpha*x_j + f(others)."""
    changed = [n for n in rho.context.names if rho.image(n) != NcPoly.var(rho.context, n)]
    if len(changed) != 1:
        return None
    name = changed[0]
    image = rho.image(name)
    alpha = image.coefficient((rho.context.index(name),))
    rest = image - NcPoly.var(rho.context, name).scale(alpha)
    if alpha == 0 or rest.depends_on([name]):
        return None
    return ElementaryShape(name, alpha, rest)


def swap_variables(phi: NcEndo, a: str, b: str) -> NcEndo:
    """Conjugate phi by the transposition of generators a and b."""
    ctx = phi.context
    swap = NcEndo.identity(ctx).replace(**{a: NcPoly.var(ctx, b), b: NcPoly.var(ctx, a)})
    return compose(compose(swap, phi), swap)


def anick_original() -> NcEndo:
    """(x + y(xy - yz), y, z + (xy - yz)y): the Anick map with y and z exchanged."""
    return swap_variables(anick(), "y", "z")


__all__ = [
    "compose",
    "compose_all",
    "ZLinearAuto",
    "jz",
    "is_z_linear_automorphism",
    "translation",
    "invert_z_linear",
    "elementary_from_step",
    "decide_z_tame_linear",
    "decide_tame_coordinate_linear",
    "decide_wild_coordinate",
    "decide_coordinate",
    "decide_coordinates_linear",
    "decide_wild_automorphism_zfixing",
    "linear_part",
    "offset_linear_part",
    "anick",
    "anick_m",
    "sigma_h",
    "elementary",
    "ElementaryShape",
    "elementary_shape",
    "swap_variables",
    "anick_original",
]
