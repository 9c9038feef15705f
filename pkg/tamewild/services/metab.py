"""Free metabelian algebra M(x, y, z) through K<x,y,z> representatives.

Elements are never put in a metabelian normal form; every computation
factors through metabelian derivatives valued in K[U, V] with
U = {x1, y1, z1}, V = {x2, y2, z2}.
"""
from __future__ import annotations

from fractions import Fraction

from tamewild.algebra.context import XYZ, Z2, Context
from tamewild.algebra.cring import CMatrix, CPoly, det, is_unit
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.field import solve
from tamewild.algebra.ncpoly import NcPoly, Word, commutator, homogeneous_component
from tamewild.core.errors import ContextMismatch, IdentityInductionFailed, ShapeViolation
from tamewild.core.logging import get_logger, log_timed
from tamewild.models.ge2 import NotMember
from tamewild.models.metab import CyclicClass, ObstructionReport, TraceOutcome, TraceStatus
from tamewild.models.verdict import Criterion, Verdict
from tamewild.services.autom import ZLinearAuto, compose, invert_z_linear
from tamewild.services.deriv import Side, UVContext, fox, metab_derivative
from tamewild.services.ge2 import ge2_membership

logger = get_logger("metab")


def _uv(context: Context) -> UVContext:
    if len(context) != 3:
        raise ContextMismatch(f"metabelian Jacobians need three generators, got {context!r}")
    return UVContext(context)


def jm(phi: NcEndo) -> CMatrix:
    """Entry (i, j) is the metabelian derivative of phi(x_j) by x_i."""
    uv = _uv(phi.context)
    names = phi.context.names
    return CMatrix([[metab_derivative(phi.images[j], names[i], uv) for j in range(3)] for i in range(3)])


def is_metab_automorphism(phi: NcEndo) -> bool:
    return is_unit(det(jm(phi)))


def metab_equivalent(phi: NcEndo, psi: NcEndo) -> bool:
    """phi and psi induce the same endomorphism of M(X)."""
    return jm(phi) == jm(psi)


def commutator_ideal_member(f: NcPoly) -> bool:
    if f.constant_term() != 0:
        return False
    uv = UVContext(f.context)
    total = CPoly.zero(uv.context)
    for name in f.context.names:
        total = total + (uv.u(name) - uv.v(name)) * metab_derivative(f, name, uv)
    return total.is_zero()


def _to_z2(p: CPoly, uv: UVContext) -> CPoly:
    """Set the first two generators to 0 on both sides and rename the third to z1, z2."""
    a, b, c = uv.source.names
    zero = CPoly.zero(Z2)
    images = {f"{a}1": zero, f"{b}1": zero, f"{a}2": zero, f"{b}2": zero}
    images[f"{c}1"] = CPoly.var(Z2, "z1")
    images[f"{c}2"] = CPoly.var(Z2, "z2")
    return p.substitute(images, Z2)


def j2_bar(phi: NcEndo) -> CMatrix:
    uv = _uv(phi.context)
    for name, image in zip(phi.context.names, phi.images):
        if not commutator_ideal_member(image - NcPoly.var(phi.context, name)):
            raise IdentityInductionFailed(f"phi({name}) - {name} is not in the commutator ideal")
    m = jm(phi).map(lambda p: _to_z2(p, uv))
    if [m[2, j] for j in range(3)] != [0, 0, 1]:
        raise ShapeViolation(f"third row of the specialized J_M is {[str(m[2, j]) for j in range(3)]}")
    for i in range(2):
        for j in range(3):
            w = m[i, j] - 1 if i == j else m[i, j]
            if w.constant_term() != 0:
                raise ShapeViolation(f"entry ({i}, {j}) of the specialized J_M has a constant term")
    return CMatrix([[m[0, 0], m[0, 1]], [m[1, 0], m[1, 1]]])


@log_timed("metab.evidence")
def umirbaev_wildness_evidence(phi: NcEndo) -> Verdict:
    """Wild when J_2 is outside GE2; membership is only necessary for tameness."""
    j2 = j2_bar(phi)
    outcome = ge2_membership(j2)
    if isinstance(outcome, NotMember):
        logger.info("metab.evidence", verdict="Wild")
        return Verdict.wild(Criterion.METABELIAN_J2, outcome.witness, linear_part_jz=j2)
    logger.info("metab.evidence", verdict="Inconclusive")
    return Verdict.inconclusive(
        "J_2 is a product of elementary matrices; this does not imply tameness",
        certificate=outcome.certificate,
        linear_part_jz=j2,
    )


def kernel_representative(rho: NcEndo) -> NcEndo:
    """psi^-1 o rho0 for a z-linear automorphism rho.

    rho0 drops the z-tails of rho; psi lifts the commutative image of rho
    with every z placed to the left of x and y. The result induces the
    identity on K[x, y, z] and its J_2 equals J_z(psi^-1) J_z(rho0).
    """
    auto = ZLinearAuto.from_endo(rho)
    zero = NcPoly.zero(rho.context)
    rho0 = ZLinearAuto(matrix=auto.matrix, tail=(zero, zero))
    z1 = CPoly.var(Z2, "z1")
    left_matrix = auto.matrix.map(lambda p: p.substitute({"z2": z1}, Z2))
    psi = ZLinearAuto(matrix=left_matrix, tail=(zero, zero))
    return compose(invert_z_linear(psi).to_endo(), rho0.to_endo())


# -------------------------------------------------
# Cyclic equivalence and the trace test
# -------------------------------------------------
def _min_rotation(word: Word) -> Word:
    if not word:
        return word
    return min(word[k:] + word[:k] for k in range(len(word)))


def cyclic_class(f: NcPoly) -> CyclicClass:
    terms: dict[Word, Fraction] = {}
    for word, c in f.terms():
        key = _min_rotation(word)
        terms[key] = terms.get(key, Fraction(0)) + c
    return CyclicClass(representative=NcPoly(f.context, terms))


@log_timed("metab.trace_test")
def trace_test(sigma: NcEndo, side: Side | str = Side.RIGHT) -> TraceOutcome:
    side = Side(side)
    names = sigma.context.names
    diffs = [img - NcPoly.var(sigma.context, n) for n, img in zip(names, sigma.images)]
    nonzero = [d for d in diffs if not d.is_zero()]
    if not nonzero:
        return TraceOutcome(status=TraceStatus.NOT_APPLICABLE, side=side, reason="sigma is the identity")
    k = min(d.min_degree() for d in nonzero)
    if k < 2:
        return TraceOutcome(
            status=TraceStatus.NOT_APPLICABLE, side=side, reason="sigma - id has a part of degree 0 or 1"
        )
    trace = NcPoly.zero(sigma.context)
    for name, d in zip(names, diffs):
        trace = trace + fox(homogeneous_component(d, k), name, side)
    residual = cyclic_class(trace)
    status = TraceStatus.PASS if residual.is_zero() else TraceStatus.FAIL
    logger.info("metab.trace", status=status.value, side=side.value, k=k)
    return TraceOutcome(status=status, side=side, k=k, residual=None if residual.is_zero() else residual)


def _multilinear_part(f: NcPoly) -> NcPoly:
    n = len(f.context)
    return NcPoly(f.context, {w: c for w, c in f.terms() if sorted(w) == list(range(n))})


def _xyz_minus_xzy_coefficient(f: NcPoly) -> Fraction:
    """Coefficient c with multilinear(f) ~ c (xyz - xzy)."""
    rep = cyclic_class(_multilinear_part(f)).representative
    c = rep.coefficient((0, 1, 2))
    expected = NcPoly.word(f.context, "xyz", c) - NcPoly.word(f.context, "xzy", c)
    if rep != expected:
        raise ShapeViolation(f"multilinear trace part {rep} is not a multiple of xyz - xzy")
    return c


def tau_lift_obstruction() -> ObstructionReport:
    """Right and left trace constraints on degree-4 liftings of tau = (x + x^2[y, z], y, z)."""
    x, y, z = (NcPoly.var(XYZ, n) for n in "xyz")
    xy, xz, yz = commutator(x, y), commutator(x, z), commutator(y, z)
    basis = [
        ("[x,y][x,z]", xy * xz, "x"),
        ("[x,z][x,y]", xz * xy, "x"),
        ("[x,y][y,z]", xy * yz, "y"),
        ("[y,z][x,y]", yz * xy, "y"),
        ("[x,z][y,z]", xz * yz, "z"),
        ("[y,z][x,z]", yz * xz, "z"),
    ]
    base = x * x * yz
    vectors: dict[Side, list[Fraction]] = {}
    offsets: dict[Side, Fraction] = {}
    for side in (Side.RIGHT, Side.LEFT):
        vectors[side] = [_xyz_minus_xzy_coefficient(fox(p, slot, side)) for _, p, slot in basis]
        offsets[side] = _xyz_minus_xzy_coefficient(fox(base, "x", side))
    rows = [vectors[Side.RIGHT], vectors[Side.LEFT]]
    rhs = [-offsets[Side.RIGHT], -offsets[Side.LEFT]]
    consistent = solve(rows, rhs, len(basis)) is not None
    logger.info("metab.obstruction", consistent=consistent)
    return ObstructionReport(
        basis=[label for label, _, _ in basis],
        right_vector=vectors[Side.RIGHT],
        left_vector=vectors[Side.LEFT],
        right_offset=offsets[Side.RIGHT],
        left_offset=offsets[Side.LEFT],
        consistent=consistent,
    )


__all__ = [
    "jm",
    "is_metab_automorphism",
    "metab_equivalent",
    "commutator_ideal_member",
    "j2_bar",
    "umirbaev_wildness_evidence",
    "kernel_representative",
    "cyclic_class",
    "trace_test",
    "tau_lift_obstruction",
]
