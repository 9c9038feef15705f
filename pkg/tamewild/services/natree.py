"""Z-tame decomposition of automorphisms of the absolutely free algebra K{X, Z}.

Membership of a homogeneous element in the subalgebra generated by
homogeneous polynomials is decided degree by degree. In degree e >= 2 the
top-level product splits K{X}_e into the direct sum of K{X}_p (x) K{X}_q
over p + q = e, so a subalgebra A satisfies

    A_e = span(generators of degree e) + sum_p A_p (x) A_q

and the part of A_e inside a given span is found by intersecting with
the (small) spaces spanned by the tensor slices of that span.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from tamewild.algebra.context import Context
from tamewild.algebra.field import nullspace, rank
from tamewild.algebra.napoly import NaEndo, NaExpression, NaPoly, NaWord, leading_form
from tamewild.algebra.ncpoly import NcPoly
from tamewild.core.errors import HypothesisViolated, NotHomogeneous, NotZFixing, ResourceLimit
from tamewild.core.logging import get_logger, log_timed
from tamewild.core.settings import get_settings
from tamewild.models.natree import (
    Decomposed,
    DecompositionOutcome,
    IsZAutomorphism,
    LiftOutcome,
    NaCertificate,
    No,
    NotAutomorphism,
    ReductionStep,
)

logger = get_logger("natree")


class _Element(NamedTuple):
    poly: NaPoly
    expr: NaPoly


def _coordinates(polys: Sequence[NaPoly]) -> list[list[Fraction]]:
    """Rows indexed by words, one column per polynomial."""
    words: dict[NaWord, int] = {}
    for p in polys:
        for w, _ in p.terms():
            words.setdefault(w, len(words))
    rows = [[Fraction(0)] * len(polys) for _ in words]
    for j, p in enumerate(polys):
        for w, c in p.terms():
            rows[words[w]][j] = c
    return rows


def _independent(elements: Iterable[_Element]) -> list[_Element]:
    kept: list[_Element] = []
    for el in elements:
        trial = [e.poly for e in kept] + [el.poly]
        if rank(_coordinates(trial), len(trial)) == len(trial):
            kept.append(el)
    return kept


def _slices(polys: Sequence[NaPoly], p: int) -> tuple[list[NaPoly], list[NaPoly]]:
    """Left and right factor spaces of the degree-(p, e-p) part of each polynomial."""
    lefts: list[NaPoly] = []
    rights: list[NaPoly] = []
    for f in polys:
        by_right: dict[NaWord, dict[NaWord, Fraction]] = {}
        by_left: dict[NaWord, dict[NaWord, Fraction]] = {}
        for (left, right), c in f.split_component(p).items():
            by_right.setdefault(right, {})[left] = c
            by_left.setdefault(left, {})[right] = c
        lefts += [NaPoly(f.context, terms) for terms in by_right.values()]
        rights += [NaPoly(f.context, terms) for terms in by_left.values()]
    return lefts, rights


def _intersect(vectors: Sequence[NaPoly], e: int, gens: Sequence[_Element], slots: Context) -> list[_Element]:
    """Basis of A_e intersected with span(vectors), each element with its expression."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    level = [g for g in gens if g.poly.degree() == e]
    products: list[_Element] = []
    if e >= 2:
        pool = vectors + [g.poly for g in level]
        for p in range(1, e):
            lefts, rights = _slices(pool, p)
            left_basis = _intersect(lefts, p, gens, slots)
            if not left_basis:
                continue
            right_basis = _intersect(rights, e - p, gens, slots)
            products += [_Element(a.poly * b.poly, a.expr * b.expr) for a in left_basis for b in right_basis]
    columns = vectors + [-g.poly for g in level] + [-m.poly for m in products]
    spanning = level + products
    found: list[_Element] = []
    for vec in nullspace(_coordinates(columns), len(columns)):
        alpha, mu = vec[: len(vectors)], vec[len(vectors) :]
        poly = NaPoly.zero(vectors[0].context)
        for a, v in zip(alpha, vectors):
            poly = poly + v.scale(a)
        if poly.is_zero():
            continue
        expr = NaPoly.zero(slots)
        for m, el in zip(mu, spanning):
            expr = expr + el.expr.scale(m)
        found.append(_Element(poly, expr))
    return _independent(found)


def _default_labels(gens: Sequence[NaPoly]) -> list[str]:
    labels = []
    for i, g in enumerate(gens):
        leaves = g.leaf_component()
        if len(g.terms()) == 1 and len(leaves) == 1 and next(iter(leaves.values())) == 1:
            labels.append(g.context.names[next(iter(leaves))])
        else:
            labels.append(f"f{i + 1}")
    return labels if len(set(labels)) == len(labels) else [f"f{i + 1}" for i in range(len(gens))]


@log_timed("natree.member")
def subalgebra_express_homogeneous(
    g: NaPoly,
    gens: Sequence[NaPoly],
    labels: Sequence[str] | None = None,
    max_degree: int | None = None,
) -> NaExpression | None:
    """Write g as a polynomial in ``gens``, or None when g is outside their subalgebra."""
    if not g.is_homogeneous():
        raise NotHomogeneous(f"{g} is not homogeneous")
    for f in gens:
        if not f.is_homogeneous():
            raise NotHomogeneous(f"generator {f} is not homogeneous")
        if f.is_zero() or f.degree() < 1:
            raise HypothesisViolated(f"generator {f} must have degree at least 1")
    limit = max_degree if max_degree is not None else get_settings().MAX_DEGREE
    if g.degree() > limit:
        raise ResourceLimit(f"degree {g.degree()} exceeds the membership limit {limit}")
    labels = list(labels) if labels is not None else _default_labels(gens)
    if len(labels) != len(gens):
        raise HypothesisViolated("one label per generator is required")
    if not gens:
        return None
    slots = Context(labels)
    if g.is_zero():
        return NaExpression(NaPoly.zero(slots))
    elements = [_Element(f, NaPoly.var(slots, label)) for f, label in zip(gens, labels)]
    found = _intersect([g], g.degree(), elements, slots)
    if not found:
        logger.debug("natree.member", found=False, degree=g.degree())
        return None
    # the single vector g spans, so found[0].poly = c * g
    el = found[0]
    word = g.terms()[0][0]
    c = el.poly.coefficient(word) / g.coefficient(word)
    logger.debug("natree.member", found=True, degree=g.degree())
    return NaExpression(el.expr.scale(1 / c))


def kurosh_reduce_step(
    phi: NaEndo, candidates: Iterable[str] | None = None
) -> tuple[str, NaExpression, NaEndo] | None:
    """Find x_i whose leading form is a polynomial g in the other leading forms.

    Returns (x_i, g, tau) with tau = (.., x_i - g(others), ..) and
    deg(phi tau) < deg(phi), or None when no generator qualifies.
    """
    ctx = phi.context
    names = list(candidates) if candidates is not None else list(ctx.names)
    for name in names:
        f = phi.image(name)
        if f.degree() < 2:
            continue
        others = [(n, img) for n, img in phi.as_mapping().items() if n != name and img.degree() >= 1]
        expr = subalgebra_express_homogeneous(
            leading_form(f),
            [leading_form(img) for _, img in others],
            labels=[n for n, _ in others],
        )
        if expr is None:
            continue
        g = expr.evaluate({n: NaPoly.var(ctx, n) for n in expr.slots.names}, ctx)
        tau = NaEndo.identity(ctx).replace(**{name: NaPoly.var(ctx, name) - g})
        if phi.compose(tau).degree() < phi.degree():
            return name, expr, tau
    return None


def _inverse_reduction(tau: NaEndo, name: str) -> NaEndo:
    ctx = tau.context
    g = NaPoly.var(ctx, name) - tau.image(name)
    return tau.replace(**{name: NaPoly.var(ctx, name) + g})


def _linear_step(ctx: Context, target: str, alpha: Fraction, others: dict[str, Fraction]) -> NaEndo:
    """(.., alpha x_target + sum beta_j x_j, ..)."""
    image = NaPoly.var(ctx, target).scale(alpha)
    for n, beta in others.items():
        image = image + NaPoly.var(ctx, n).scale(beta)
    return NaEndo.identity(ctx).replace(**{target: image})


def factor_affine(psi: NaEndo, free: Sequence[str]) -> list[NaEndo] | None:
    """Z-elementary steps composing to an affine Z-fixing psi, or None if its X-block is singular.

    psi = L o T with T the translations x_i + h_i(Z) and L linear in X.
    Composing L on the right with elementary steps E_1..E_r performs row
    operations on its coefficient rows; once they reach the identity,
    L = E_r^-1 o ... o E_1^-1.
    """
    ctx = psi.context
    n = len(free)
    index = [ctx.index(name) for name in free]
    m = [[psi.image(a).coefficient(index[c]) for c in range(n)] for a in free]
    inverses: list[NaEndo] = []

    def row_op(i: int, alpha: Fraction, others: dict[int, Fraction]) -> None:
        m[i] = [alpha * m[i][c] + sum(beta * m[j][c] for j, beta in others.items()) for c in range(n)]
        inverses.append(
            _linear_step(ctx, free[i], 1 / alpha, {free[j]: -beta / alpha for j, beta in others.items()})
        )

    for c in range(n):
        if m[c][c] == 0:
            pivot = next((r for r in range(c + 1, n) if m[r][c] != 0), None)
            if pivot is None:
                return None
            row_op(c, Fraction(1), {pivot: Fraction(1)})
        if m[c][c] != 1:
            row_op(c, 1 / m[c][c], {})
        for r in range(n):
            if r != c and m[r][c] != 0:
                row_op(r, Fraction(1), {c: -m[r][c]})
    translations = []
    for name in free:
        image = psi.image(name)
        shift = image
        for b, i in zip(free, index):
            shift = shift - NaPoly.var(ctx, b).scale(image.coefficient(i))
        if not shift.is_zero():
            translations.append(NaEndo.identity(ctx).replace(**{name: NaPoly.var(ctx, name) + shift}))
    return list(reversed(inverses)) + translations


@log_timed("natree.decompose")
def z_tame_decompose(phi: NaEndo, fixed: Iterable[str] = ()) -> DecompositionOutcome:
    fixed = list(fixed)
    ctx = phi.context
    for name in fixed:
        ctx.index(name)
    if not phi.fixes(fixed):
        raise NotZFixing(f"endomorphism does not fix {', '.join(fixed)}")
    free = [n for n in ctx.names if n not in fixed]
    for name in free:
        image = phi.image(name)
        if not image.depends_on(free):
            return NotAutomorphism(
                certificate=NaCertificate(reason=f"image of {name} does not depend on {', '.join(free)}", stuck=phi)
            )
    current = phi
    reductions: list[ReductionStep] = []
    while any(current.image(n).degree() > 1 for n in free):
        found = kurosh_reduce_step(current, free)
        if found is None:
            logger.info("natree.decomposed", verdict="NotAutomorphism", degree=current.degree())
            return NotAutomorphism(
                certificate=NaCertificate(
                    reason="no leading form lies in the subalgebra generated by the others",
                    stuck=current,
                    reductions=reductions,
                )
            )
        name, expr, tau = found
        reductions.append(ReductionStep(variable=name, expression=str(expr), tau=tau))
        current = current.compose(tau)
    affine = factor_affine(current, free)
    if affine is None:
        logger.info("natree.decomposed", verdict="NotAutomorphism", degree=current.degree())
        return NotAutomorphism(
            certificate=NaCertificate(reason="affine part has a singular X-block", stuck=current, reductions=reductions)
        )
    steps = affine + [_inverse_reduction(r.tau, r.variable) for r in reversed(reductions)]
    logger.info("natree.decomposed", verdict="Decomposed", steps=len(steps), reductions=len(reductions))
    return Decomposed(steps=steps, reductions=reductions)


def lift_candidate_check(psi: NaEndo, fixed: Iterable[str] = ()) -> LiftOutcome:
    outcome = z_tame_decompose(psi, fixed)
    if isinstance(outcome, NotAutomorphism):
        return No(certificate=outcome.certificate)
    return IsZAutomorphism(
        steps=outcome.steps,
        associative_steps=[s.flatten() for s in outcome.steps],
        commutative_steps=[[str(img.abelianize()) for img in s] for s in outcome.steps],
    )


def to_associative(f: NaPoly) -> NcPoly:
    """Image under the natural map K{X} -> K<X>."""
    return f.flatten()


__all__ = [
    "subalgebra_express_homogeneous",
    "kurosh_reduce_step",
    "factor_affine",
    "z_tame_decompose",
    "lift_candidate_check",
    "to_associative",
]
