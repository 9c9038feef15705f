import random
from functools import reduce

import pytest

from tamewild.algebra.context import XYZ
from tamewild.algebra.endo import NcEndo
from tamewild.algebra.napoly import NaEndo, NaPoly
from tamewild.algebra.parser import parse_na_endo
from tamewild.core.errors import (
    ContextMismatch,
    HypothesisViolated,
    NotHomogeneous,
    NotZFixing,
    ResourceLimit,
    UnknownVariable,
)
from tamewild.models.natree import Decomposed, IsZAutomorphism, No, NotAutomorphism
from tamewild.services.natree import (
    kurosh_reduce_step,
    lift_candidate_check,
    subalgebra_express_homogeneous,
    to_associative,
    z_tame_decompose,
)
from tests.helpers import endo, na, nc, random_coefficient, random_napoly

ANICK_CANDIDATE = "x + z*((x*z) - (z*y)) ; y + ((x*z) - (z*y))*z ; z"


def na_endo(text):
    return parse_na_endo(text, XYZ)


def compose_steps(steps):
    return reduce(lambda a, b: a.compose(b), steps, NaEndo.identity(XYZ))


def test_member_with_default_labels():
    gens = [na("x*y"), na("x")]
    expr = subalgebra_express_homogeneous(na("(x*y)*x"), gens)
    assert expr is not None
    assert list(expr.slots.names) == ["f1", "x"]
    assert expr.evaluate({"f1": gens[0], "x": gens[1]}, XYZ) == na("(x*y)*x")


def test_member_respects_parenthesization():
    assert subalgebra_express_homogeneous(na("x*(y*x)"), [na("x*y"), na("x")]) is None


def test_member_with_linear_combinations():
    gens = [na("x*y + y*x"), na("z")]
    g = na("(x*y)*z + (y*x)*z - 2*z*(x*y) - 2*z*(y*x)")
    expr = subalgebra_express_homogeneous(g, gens, labels=["a", "b"])
    assert expr is not None
    assert expr.evaluate({"a": gens[0], "b": gens[1]}, XYZ) == g


def test_member_of_zero_and_empty_generators():
    assert subalgebra_express_homogeneous(NaPoly.zero(XYZ), [na("x")]) is not None
    assert subalgebra_express_homogeneous(na("x"), []) is None


def test_member_hypotheses():
    with pytest.raises(NotHomogeneous):
        subalgebra_express_homogeneous(na("x + x*y"), [na("x")])
    with pytest.raises(NotHomogeneous):
        subalgebra_express_homogeneous(na("x*y"), [na("x + y*y")])
    with pytest.raises(HypothesisViolated):
        subalgebra_express_homogeneous(na("x*y"), [na("1")])
    with pytest.raises(HypothesisViolated):
        subalgebra_express_homogeneous(na("x*y"), [na("x")], labels=["a", "b"])


def test_member_degree_limit():
    g = na("x")
    for _ in range(8):
        g = g * na("x")
    assert g.degree() == 9
    with pytest.raises(ResourceLimit):
        subalgebra_express_homogeneous(g, [na("x")], max_degree=8)
    assert subalgebra_express_homogeneous(g, [na("x")], max_degree=9) is not None


def test_single_elementary_map_decomposes():
    phi = na_endo("x + (y*y) ; y ; z")
    outcome = z_tame_decompose(phi, ["z"])
    assert isinstance(outcome, Decomposed)
    assert outcome.steps == [phi]


def test_two_step_map_decomposes_and_recomposes():
    phi = na_endo("x + (y*y) ; y ; z").compose(na_endo("x ; y + (x*z) ; z"))
    outcome = z_tame_decompose(phi, ["z"])
    assert isinstance(outcome, Decomposed)
    assert [r.variable for r in outcome.reductions] == ["y", "x"]
    assert compose_steps(outcome.steps) == phi


def test_affine_map_decomposes():
    phi = na_endo("y + z ; 2*x ; z")
    outcome = z_tame_decompose(phi, ["z"])
    assert isinstance(outcome, Decomposed)
    assert compose_steps(outcome.steps) == phi


def test_square_is_not_an_automorphism():
    outcome = z_tame_decompose(na_endo("x*x ; y ; z"), ["z"])
    assert isinstance(outcome, NotAutomorphism)
    assert outcome.certificate.stuck.image("x") == na("x*x")


def test_image_without_free_variables_is_not_an_automorphism():
    outcome = z_tame_decompose(na_endo("z*z ; y ; z"), ["z"])
    assert isinstance(outcome, NotAutomorphism)


def test_anick_candidate_does_not_lift():
    outcome = lift_candidate_check(na_endo(ANICK_CANDIDATE), ["z"])
    assert isinstance(outcome, No)
    assert outcome.certificate.stuck.degree() >= 4


def test_lift_reports_associative_and_commutative_images():
    outcome = lift_candidate_check(na_endo("x + (y*y) ; y ; z"), ["z"])
    assert isinstance(outcome, IsZAutomorphism)
    assert outcome.associative_steps == [endo("x + y^2 ; y ; z")]
    assert outcome.commutative_steps[0][0] == "x + y^2"


def test_fixed_variables_must_be_fixed_and_known():
    with pytest.raises(NotZFixing):
        z_tame_decompose(na_endo("x ; y ; z + x"), ["z"])
    with pytest.raises(UnknownVariable):
        z_tame_decompose(na_endo("x ; y ; z"), ["w"])


def test_kurosh_step_lowers_degree():
    phi = na_endo("x + (y*y) ; y ; z")
    name, expr, tau = kurosh_reduce_step(phi)
    assert name == "x"
    assert phi.compose(tau).degree() < phi.degree()
    assert kurosh_reduce_step(na_endo("x*x ; y ; z")) is None


def test_to_associative():
    assert to_associative(na("(x*y)*z - x*(y*z)")).is_zero()
    assert to_associative(na("2*(x*y)*z")) == nc("2*x*y*z")


def random_z_elementary(rng):
    name, other = rng.choice((("x", "y"), ("y", "x")))
    image = NaPoly.var(XYZ, name).scale(random_coefficient(rng)) + random_napoly(rng, [other, "z"], rng.randint(1, 3))
    return NaEndo.identity(XYZ).replace(**{name: image})


def test_random_kurosh_composites_decompose():
    rng = random.Random(31)
    checked = 0
    while checked < 100:
        phi = compose_steps([random_z_elementary(rng) for _ in range(rng.randint(1, 3))])
        if max(img.degree() for img in phi) > 6:
            continue
        outcome = z_tame_decompose(phi, ["z"])
        assert isinstance(outcome, Decomposed), str(phi)
        assert compose_steps(outcome.steps) == phi
        checked += 1


def test_endomorphisms_reject_unknown_keys_and_foreign_images():
    x, y, z = (NaPoly.var(XYZ, n) for n in "xyz")
    with pytest.raises(ContextMismatch):
        NaEndo(XYZ, {"x": x, "y": y, "z": z, "w": x})
    with pytest.raises(ContextMismatch):
        NaEndo(XYZ, [nc("x"), nc("y"), nc("z")])
    with pytest.raises(ContextMismatch):
        NcEndo(XYZ, [x, y, z])


def test_fixes_is_shared_by_both_endomorphism_kinds():
    assert na_endo("x + (y*z) ; y ; z").fixes(["y", "z"])
    assert not na_endo("x ; y + (x*x) ; z").fixes(["y"])
    assert endo("x + y*z ; y ; z").fixes(["y", "z"])
    assert not endo("x ; y + x ; z").fixes(["y", "z"])
