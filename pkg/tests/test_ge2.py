import random

import pytest

from tamewild.algebra.context import Z2
from tamewild.algebra.cring import CMatrix, det, exact_divide_homogeneous, is_unit, leading_form, mat_mul
from tamewild.core.errors import NotInvertible, ZeroPolynomial
from tamewild.models.certificate import Certificate, ElemStep, StepKind, StuckReason
from tamewild.models.ge2 import Completed, Member, NotCompletable, NotMember, Reduced, Stuck
from tamewild.services.ge2 import apply_step, complete_to_ge2, euclid_reduce_pair, ge2_membership, recompose
from tests.helpers import cp, random_cpoly, random_homogeneous_cpoly

ANICK_JZ = CMatrix([[cp("1 + z1*z2"), cp("z2^2")], [cp("-z1^2"), cp("1 - z1*z2")]])
# E21(z1) E12(z2^2) Diag(2, 3)
PRODUCT = CMatrix([[cp("2"), cp("3*z2^2")], [cp("2*z1"), cp("3*z1*z2^2 + 3")]])


def test_identity_is_member_with_empty_certificate():
    outcome = ge2_membership(CMatrix.identity(Z2))
    assert isinstance(outcome, Member)
    assert outcome.certificate.steps == []


def test_product_of_elementary_matrices_is_member():
    outcome = ge2_membership(PRODUCT)
    assert isinstance(outcome, Member)
    steps = outcome.certificate.steps
    assert steps == [ElemStep.e21(cp("z1")), ElemStep.e12(cp("z2^2")), ElemStep.diag(2, 3)]
    assert recompose(outcome.certificate) == PRODUCT


def test_anick_matrix_is_not_member():
    outcome = ge2_membership(ANICK_JZ)
    assert isinstance(outcome, NotMember)
    witness = outcome.witness
    assert witness.pair == (cp("1 + z1*z2"), cp("-z1^2"))
    assert witness.reason is StuckReason.NEITHER_DIVIDES
    assert witness.steps == []


def test_stuck_witness_admits_no_euclidean_step():
    witness = ge2_membership(ANICK_JZ).witness
    la, lb = leading_form(witness.a), leading_form(witness.b)
    assert exact_divide_homogeneous(la, lb) is None
    assert exact_divide_homogeneous(lb, la) is None


def test_random_elementary_products_recompose():
    rng = random.Random(2024)
    for _ in range(200):
        m = CMatrix.identity(Z2)
        for k in range(rng.randint(1, 8)):
            q = random_cpoly(rng, 3)
            step = ElemStep.e12(q) if k % 2 == 0 else ElemStep.e21(q)
            m = mat_mul(m, step.matrix(Z2))
        m = mat_mul(m, ElemStep.diag(rng.randint(1, 5), -1).matrix(Z2))
        outcome = ge2_membership(m)
        assert isinstance(outcome, Member)
        assert recompose(outcome.certificate) == m


def test_mutated_certificate_no_longer_recomposes():
    cert = ge2_membership(PRODUCT).certificate
    for i, step in enumerate(cert.steps):
        if step.kind is StepKind.DIAG:
            mutated = ElemStep.diag(step.alpha + 1, step.beta)
        else:
            mutated = ElemStep(kind=step.kind, q=step.q + 1)
        steps = list(cert.steps)
        steps[i] = mutated
        assert recompose(Certificate(steps=steps, target=cert.target)) != cert.target


def test_membership_requires_unit_determinant():
    with pytest.raises(NotInvertible):
        ge2_membership(CMatrix([[cp("z1"), cp("0")], [cp("0"), cp("1")]]))


def test_euclid_reduces_zero_first_entry():
    outcome = euclid_reduce_pair(cp("0"), cp("1"))
    assert isinstance(outcome, Reduced)
    assert outcome.unit == 1


def test_euclid_reports_zero_partner():
    outcome = euclid_reduce_pair(cp("z1"), cp("0"))
    assert isinstance(outcome, Stuck)
    assert outcome.witness.reason is StuckReason.ZERO_PARTNER


def test_euclid_rejects_zero_pair():
    with pytest.raises(ZeroPolynomial):
        euclid_reduce_pair(cp("0"), cp("0"))


def test_witness_steps_replay_to_the_pair():
    outcome = euclid_reduce_pair(cp("1 + z1*z2 - z1^3"), cp("-z1^2"))
    assert isinstance(outcome, Stuck)
    a, b = outcome.witness.input_pair
    for step in outcome.witness.steps:
        a, b = apply_step(step, a, b)
    assert (a, b) == outcome.witness.pair
    assert outcome.witness.steps


def test_complete_to_ge2():
    outcome = complete_to_ge2(cp("1 + z1*z2"), cp("z1"))
    assert isinstance(outcome, Completed)
    target = outcome.certificate.target
    assert target.column(0) == (cp("1 + z1*z2"), cp("z1"))
    assert target.column(1) == (outcome.c, outcome.d)
    assert is_unit(det(target))
    assert recompose(outcome.certificate) == target


def test_complete_agrees_with_membership_on_anick_column():
    assert isinstance(complete_to_ge2(cp("1 + z1*z2"), cp("-z1^2")), NotCompletable)
    assert isinstance(euclid_reduce_pair(cp("1 + z1*z2"), cp("-z1^2")), Stuck)


def test_step_inverse_and_triviality():
    step = ElemStep.e12(cp("z1 - z2"))
    assert mat_mul(step.matrix(Z2), step.inverse().matrix(Z2)) == CMatrix.identity(Z2)
    assert ElemStep.diag(1, 1).is_trivial()
    with pytest.raises(ValueError):
        ElemStep(kind=StepKind.DIAG, alpha=0, beta=1)
