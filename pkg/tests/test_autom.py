import random
from fractions import Fraction

import pytest

from tamewild.algebra.context import XYZ, Z2, Context
from tamewild.algebra.cring import CMatrix, CPoly, det, is_unit, mat_mul
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.ncpoly import NcPoly
from tamewild.core.errors import ContextMismatch, HypothesisViolated, NotInvertible, NotZFixing
from tamewild.models.certificate import ElemStep, StuckReason
from tamewild.models.verdict import Criterion, VerdictKind
from tamewild.services.autom import (
    ZLinearAuto,
    anick,
    anick_m,
    anick_original,
    compose,
    compose_all,
    decide_coordinate,
    decide_coordinates_linear,
    decide_tame_coordinate_linear,
    decide_wild_automorphism_zfixing,
    decide_wild_coordinate,
    decide_z_tame_linear,
    elementary,
    elementary_from_step,
    elementary_shape,
    invert_z_linear,
    is_z_linear_automorphism,
    jz,
    offset_linear_part,
    sigma_h,
    swap_variables,
    translation,
)
from tamewild.services.deriv import abelianize
from tests.helpers import cp, endo, nc, random_coefficient, random_cpoly, random_homogeneous_cpoly

x, y, z = (NcPoly.var(XYZ, n) for n in "xyz")
IDENTITY = NcEndo.identity(XYZ)
ANICK_JZ = CMatrix([[cp("1 + z1*z2"), cp("z2^2")], [cp("-z1^2"), cp("1 - z1*z2")]])


def test_compose_convention():
    phi = endo("x + y ; y ; z")
    psi = endo("x*x ; y ; z")
    assert compose(phi, psi).image("x") == (x + y) * (x + y)
    assert compose_all([phi, psi]) == compose(phi, psi)
    assert compose_all([]) == IDENTITY


def test_anick_shape():
    omega = anick()
    assert omega.image("x") == nc("x + z*(x*z - z*y)")
    assert omega.image("y") == nc("y + (x*z - z*y)*z")
    assert omega.image("z") == z
    assert jz(omega) == ANICK_JZ
    assert det(jz(omega)) == 1
    assert is_z_linear_automorphism(omega)


def test_jz_is_multiplicative():
    rho = endo("x + z*y ; y ; z")
    sigma = endo("x ; y + x*z^2 ; z")
    assert jz(compose(rho, sigma)) == mat_mul(jz(rho), jz(sigma))


def test_anick_is_wild_through_ge2():
    verdict = decide_z_tame_linear(anick())
    assert verdict.kind is VerdictKind.WILD
    assert verdict.criterion is Criterion.Z_LINEAR_GE2
    assert verdict.witness.pair == (cp("1 + z1*z2"), cp("-z1^2"))


def test_tame_verdict_steps_compose_to_the_input():
    rho = endo("x + z*y + z^2 ; y + 3 ; z")
    verdict = decide_z_tame_linear(rho)
    assert verdict.is_tame
    assert compose_all(verdict.steps) == rho
    assert verdict.certificate.target == jz(rho)


def test_random_tame_automorphisms_decompose():
    rng = random.Random(17)
    for _ in range(200):
        steps = []
        for k in range(rng.randint(1, 8)):
            q = random_cpoly(rng, 3)
            steps.append(elementary_from_step(ElemStep.e21(q) if k % 2 else ElemStep.e12(q)))
        steps.append(elementary_from_step(ElemStep.diag(Fraction(rng.randint(1, 4)), -1)))
        if rng.random() < 0.5:
            steps.append(translation(z**rng.randint(0, 3), z.scale(random_coefficient(rng))))
        rho = compose_all(steps)
        verdict = decide_z_tame_linear(rho)
        assert verdict.is_tame
        assert compose_all(verdict.steps) == rho
        assert verdict.certificate.target == jz(rho)


def test_decide_z_tame_linear_needs_unit_determinant():
    with pytest.raises(NotInvertible):
        decide_z_tame_linear(endo("z*x ; y ; z"))


def test_z_must_be_fixed():
    with pytest.raises(NotZFixing):
        jz(endo("x ; y ; z + x"))


def test_wrong_context_is_rejected():
    ctx = Context(("a", "b", "c"))
    with pytest.raises(ContextMismatch):
        decide_z_tame_linear(endo("a ; b ; c", ctx))


def test_invert_z_linear():
    for text in ("x + z*(x*z - z*y) ; y + (x*z - z*y)*z ; z", "2*x + z*y + z^2 ; y - z ; z"):
        rho = endo(text)
        inverse = invert_z_linear(ZLinearAuto.from_endo(rho)).to_endo()
        assert compose(inverse, rho) == IDENTITY
        assert compose(rho, inverse) == IDENTITY


def test_anick_coordinates_are_wild():
    vx = decide_coordinate(nc("x + z*(x*z - z*y)"))
    assert vx.kind is VerdictKind.WILD
    assert vx.criterion is Criterion.LINEAR_COORDINATE
    assert vx.witness.pair == (cp("1 + z1*z2"), cp("-z1^2"))
    vy = decide_coordinate(nc("y + (x*z - z*y)*z"))
    assert vy.kind is VerdictKind.WILD
    assert vy.witness.pair == (cp("z2^2"), cp("1 - z1*z2"))
    both = decide_coordinates_linear(anick())
    assert [v.kind for v in both] == [VerdictKind.WILD, VerdictKind.WILD]


def test_tame_coordinate_with_tail():
    f = nc("x + z*y*z + z^2")
    verdict = decide_tame_coordinate_linear(f)
    assert verdict.is_tame
    assert compose_all(verdict.steps).image("x") == f
    target = verdict.certificate.target
    assert target.column(0) == (cp("1"), cp("z1*z2"))


def test_proper_ideal_is_inconclusive():
    verdict = decide_tame_coordinate_linear(nc("z*x + y*z"))
    assert verdict.kind is VerdictKind.INCONCLUSIVE
    assert decide_tame_coordinate_linear(nc("z^2")).kind is VerdictKind.INCONCLUSIVE


def test_nonlinear_coordinate_with_wild_linear_part():
    f = compose(anick(), elementary("x", 1, y * y)).image("x")
    verdict = decide_coordinate(f)
    assert verdict.kind is VerdictKind.WILD
    assert verdict.criterion is Criterion.LINEAR_PART_COORDINATE
    assert verdict.witness.pair == (cp("1 + z1*z2"), cp("-z1^2"))


def test_nonlinear_coordinate_with_tame_linear_part_is_inconclusive():
    verdict = decide_wild_coordinate(anick_m(2).image("x"))
    assert verdict.kind is VerdictKind.INCONCLUSIVE
    with pytest.raises(HypothesisViolated):
        decide_wild_coordinate(nc("x*y + z"))


def test_zfixing_decision_on_anick():
    verdict = decide_wild_automorphism_zfixing(anick())
    assert verdict.kind is VerdictKind.WILD
    assert verdict.criterion is Criterion.Z_LINEAR_GE2


def test_zfixing_decision_uses_translation_offset_for_anick_m():
    rho = anick_m(2)
    assert jz(offset_linear_part(rho)) == CMatrix.identity(ANICK_JZ.context)
    verdict = decide_wild_automorphism_zfixing(rho)
    assert verdict.kind is VerdictKind.WILD
    assert verdict.criterion is Criterion.LINEAR_PART_AUTOMORPHISM
    assert verdict.offset is not None
    assert verdict.linear_part_jz == jz(offset_linear_part(rho, verdict.offset))
    assert is_unit(det(verdict.linear_part_jz))
    assert verdict.witness.reason is StuckReason.NEITHER_DIVIDES


def test_zfixing_decision_without_offsets_is_inconclusive():
    verdict = decide_wild_automorphism_zfixing(anick_m(2), offsets=[])
    assert verdict.kind is VerdictKind.INCONCLUSIVE


def test_zfixing_decision_on_tame_nonlinear_map():
    rho = compose(endo("x + z*y ; y ; z"), elementary("y", 1, x * x))
    verdict = decide_wild_automorphism_zfixing(rho, offsets=[(0, 0)])
    assert verdict.kind is VerdictKind.INCONCLUSIVE


def test_sigma_h_with_h_t_is_anick():
    tz = Context(("t", "z"))
    assert sigma_h(NcPoly.var(tz, "t")) == anick()
    with pytest.raises(HypothesisViolated):
        sigma_h(NcPoly.var(tz, "t") + 1)


def test_anick_m_rejects_nonpositive_m():
    with pytest.raises(HypothesisViolated):
        anick_m(0)


def test_elementary_constructor_and_shape():
    rho = elementary("x", 2, y * y)
    assert rho == endo("2*x + y^2 ; y ; z")
    shape = elementary_shape(rho)
    assert shape == ("x", 2, y * y)
    assert elementary_shape(anick()) is None
    with pytest.raises(HypothesisViolated):
        elementary("x", 1, x * y)
    with pytest.raises(HypothesisViolated):
        elementary("x", 0, y)


def test_translation_requires_z_only_tails():
    assert translation(z * z) == endo("x + z^2 ; y ; z")
    with pytest.raises(HypothesisViolated):
        translation(x)


def test_anick_original_form():
    phi = anick_original()
    assert phi == endo("x + y*(x*y - y*z) ; y ; z + (x*y - y*z)*y")
    assert swap_variables(phi, "y", "z") == anick()


def test_offset_linear_part_of_anick_m():
    q = cp("z1 + z2")
    expected = CMatrix(
        [[cp("1") + q * cp("z1*z2"), q * cp("z2^2")], [-(q * cp("z1^2")), cp("1") - q * cp("z1*z2")]]
    )
    assert jz(offset_linear_part(anick_m(2), (1, 0))) == expected


def test_sigma_h_examples():
    tz = Context(("t", "z"))
    t, tz_z = NcPoly.var(tz, "t"), NcPoly.var(tz, "z")
    sigma = sigma_h(t * tz_z)
    commutator_xz_zy = nc("x*z - z*y")
    assert sigma.apply(commutator_xz_zy) == commutator_xz_zy
    verdict = decide_wild_automorphism_zfixing(sigma)
    assert verdict.kind is VerdictKind.WILD
    assert verdict.witness.pair == (cp("1 + z1*z2^2"), cp("-z1^2*z2"))


def test_identity_is_tame():
    verdict = decide_wild_automorphism_zfixing(IDENTITY)
    assert verdict.is_tame
    assert verdict.steps == [] or compose_all(verdict.steps) == IDENTITY


def test_anick_is_triangular_after_abelianizing():
    assert abelianize(anick().image("x")) == CPoly(XYZ, {(1, 0, 0): 1, (1, 0, 2): 1, (0, 1, 2): -1})
    assert abelianize(anick().image("y")) == CPoly(XYZ, {(0, 1, 0): 1, (1, 0, 2): 1, (0, 1, 2): -1})


def test_elementary_steps_have_their_own_matrix():
    rng = random.Random(31)
    for _ in range(20):
        q = random_homogeneous_cpoly(rng, rng.randint(0, 3))
        for step in (ElemStep.e12(q), ElemStep.e21(q), ElemStep.diag(Fraction(rng.randint(1, 5)), -2)):
            assert jz(elementary_from_step(step)) == step.matrix(ANICK_JZ.context)


def test_wild_verdict_survives_translations():
    shifted = compose(anick(), translation(z * z, z))
    verdict = decide_wild_automorphism_zfixing(shifted)
    assert verdict.kind is VerdictKind.WILD
    assert verdict.witness.pair == (cp("1 + z1*z2"), cp("-z1^2"))


def test_toolkit_maps_fixing_y_and_z_have_elementary_shape():
    rho = compose(elementary("x", 3, nc("y*z*y")), elementary("x", 1, nc("z^2")))
    assert elementary_shape(rho) == ("x", 3, nc("y*z*y + z^2"))


def omega_linear_part(m):
    z1, z2 = CPoly.var(Z2, "z1"), CPoly.var(Z2, "z2")
    q = sum((z1 ** (m - 1 - i) * z2**i for i in range(m)), CPoly.zero(Z2))
    return q, CMatrix([[1 + q * z1 * z2, q * z2 * z2], [-(q * z1 * z1), 1 - q * z1 * z2]])


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_anick_family_is_wild(m):
    q, expected = omega_linear_part(m)
    verdict = decide_wild_automorphism_zfixing(anick_m(m))
    assert verdict.kind is VerdictKind.WILD
    assert verdict.linear_part_jz == expected
    assert verdict.witness.pair == (expected[0, 0], expected[1, 0])
    if m == 1:
        assert verdict.criterion is Criterion.Z_LINEAR_GE2
        assert q == 1
    else:
        assert verdict.criterion is Criterion.LINEAR_PART_AUTOMORPHISM
        assert verdict.offset == (1, 0)
        assert q.is_homogeneous() and q.degree() == m - 1


@pytest.mark.parametrize("h", ["t", "t*z", "z*t + t*t"])
def test_sigma_family_fixes_the_commutator_and_is_wild(h):
    tz = Context(("t", "z"))
    sigma = sigma_h(nc(h, tz))
    commutator_xz_zy = nc("x*z - z*y")
    assert sigma.apply(commutator_xz_zy) == commutator_xz_zy
    assert decide_wild_automorphism_zfixing(sigma).kind is VerdictKind.WILD


def random_z_linear(rng):
    matrix = CMatrix([[random_cpoly(rng, 2) for _ in range(2)] for _ in range(2)])
    tails = tuple(
        sum(((z**k).scale(random_coefficient(rng)) for k in range(rng.randint(0, 3))), NcPoly.zero(XYZ))
        for _ in range(2)
    )
    return ZLinearAuto(matrix=matrix, tail=tails).to_endo()


def test_jz_is_functorial_on_random_pairs():
    rng = random.Random(41)
    for _ in range(200):
        rho, sigma = random_z_linear(rng), random_z_linear(rng)
        assert jz(compose(rho, sigma)) == jz(rho) @ jz(sigma)
