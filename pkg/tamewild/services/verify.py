"""Independent re-check of emitted reports.

Certificates are recomposed and stuck witnesses are replayed from the
input; nothing is re-derived by running the decision procedure again.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable

from tamewild.algebra.context import Z2, Context
from tamewild.algebra.cring import CMatrix, CPoly, det, exact_divide_homogeneous, is_unit, leading_form
from tamewild.algebra.napoly import NaEndo, NaPoly
from tamewild.algebra.ncpoly import homogeneous_component, xy_linear_decompose
from tamewild.algebra.parser import Mode, parse_endo, parse_matrix, parse_na_endo, parse_poly
from tamewild.core.errors import ReportInvalid
from tamewild.core.logging import get_logger
from tamewild.models.certificate import Certificate, ElemStep, StepKind, StuckReason
from tamewild.models.report import SCHEMA_VERSION
from tamewild.models.verdict import Criterion
from tamewild.services.autom import compose_all, jz, offset_linear_part
from tamewild.services.ge2 import apply_step, recompose
from tamewild.services.metab import j2_bar
from tamewild.services.natree import factor_affine, kurosh_reduce_step

logger = get_logger("verify")

Check = Callable[[dict[str, Any]], "str | None"]


def _context(report: dict[str, Any], key: str, default: str) -> Context:
    return Context.parse(report.get("input", {}).get(key, default))


def _matrix(rows: list[list[str]], ctx: Context) -> CMatrix:
    return parse_matrix("[" + ",".join("[" + ",".join(row) + "]" for row in rows) + "]", ctx)


def _step(data: dict[str, Any], ctx: Context) -> ElemStep:
    kind = StepKind(data["kind"])
    if kind is StepKind.DIAG:
        return ElemStep.diag(Fraction(data["alpha"]), Fraction(data["beta"]))
    return ElemStep(kind=kind, q=parse_poly(data["q"], ctx, Mode.COMMUTATIVE))


def _certificate(data: dict[str, Any], ctx: Context) -> Certificate:
    return Certificate(steps=[_step(s, ctx) for s in data["steps"]], target=_matrix(data["target"], ctx))


def _check_certificate(data: dict[str, Any] | None, ctx: Context, expected: CMatrix | None = None) -> str | None:
    if not data:
        return "missing certificate"
    cert = _certificate(data, ctx)
    if recompose(cert) != cert.target:
        return "certificate steps do not multiply to the target"
    if expected is not None and cert.target != expected:
        return "certificate target differs from the input"
    return None


def _check_witness(data: dict[str, Any] | None, ctx: Context, start: tuple[CPoly, CPoly]) -> str | None:
    if not data:
        return "missing witness"
    input_pair = tuple(parse_poly(p, ctx, Mode.COMMUTATIVE) for p in data["input_pair"])
    if input_pair != start:
        return "witness does not start from the input pair"
    a, b = start
    for s in data["steps"]:
        a, b = apply_step(_step(s, ctx), a, b)
    pair = tuple(parse_poly(p, ctx, Mode.COMMUTATIVE) for p in data["pair"])
    if (a, b) != pair:
        return "witness steps do not reach the reported pair"
    reason = StuckReason(data["reason"])
    if reason is StuckReason.ZERO_PARTNER:
        return None if b.is_zero() and not a.is_constant() else "pair is not a nonconstant with zero partner"
    if a.is_zero() or b.is_zero():
        return "stuck pair has a zero entry"
    la, lb = leading_form(a), leading_form(b)
    if exact_divide_homogeneous(la, lb) is not None or exact_divide_homogeneous(lb, la) is not None:
        return "a leading form of the stuck pair divides the other"
    return None


def _not_proper(data: dict[str, Any], ctx: Context) -> str | None:
    a, b = (parse_poly(p, ctx, Mode.COMMUTATIVE) for p in data["pair"])
    if a.constant_term() == 0 and b.constant_term() == 0:
        return "stuck pair generates a proper ideal; Wild is not justified"
    return None


def _first_column(m: CMatrix) -> tuple[CPoly, CPoly]:
    return m[0, 0], m[1, 0]


# -------------------------------------------------
# Per-command checks
# -------------------------------------------------
def _ge2_check(report: dict[str, Any]) -> str | None:
    ctx = _context(report, "zvars", "z1,z2")
    m = parse_matrix(report["input"]["matrix"], ctx)
    if report["verdict"] == "Member":
        return _check_certificate(report.get("certificate"), ctx, m)
    if not is_unit(det(m)):
        return "determinant is not a nonzero constant"
    return _check_witness(report.get("witness"), ctx, _first_column(m))


def _ge2_complete(report: dict[str, Any]) -> str | None:
    ctx = _context(report, "zvars", "z1,z2")
    a = parse_poly(report["input"]["a"], ctx, Mode.COMMUTATIVE)
    b = parse_poly(report["input"]["b"], ctx, Mode.COMMUTATIVE)
    if report["verdict"] == "Completed":
        problem = _check_certificate(report.get("certificate"), ctx)
        if problem:
            return problem
        target = _certificate(report["certificate"], ctx).target
        return None if _first_column(target) == (a, b) else "completed matrix does not start with the input column"
    return _check_witness(report.get("witness"), ctx, (a, b))


def _coord_decide(report: dict[str, Any]) -> str | None:
    ctx = _context(report, "vars", "x,y,z")
    f = parse_poly(report["input"]["f"], ctx)
    verdict = report["verdict"]
    if verdict == "Inconclusive":
        return None
    form = xy_linear_decompose(homogeneous_component(f, 1, ("x", "y")))
    if verdict == "Tame":
        composite = compose_all([parse_endo(s, ctx) for s in report.get("steps") or []], ctx)
        if composite.image("x") != f:
            return "steps do not send x to the input"
        problem = _check_certificate(report.get("certificate"), Z2)
        if problem:
            return problem
        target = _certificate(report["certificate"], Z2).target
        return None if _first_column(target) == (form.a, form.b) else "certificate column differs from the input"
    return _check_witness(report.get("witness"), Z2, (form.a, form.b)) or _not_proper(report["witness"], Z2)


def _auto_decide(report: dict[str, Any]) -> str | None:
    ctx = _context(report, "vars", "x,y,z")
    rho = parse_endo(report["input"]["endo"], ctx)
    verdict = report["verdict"]
    if verdict == "Inconclusive":
        return None
    if verdict == "Tame":
        if compose_all([parse_endo(s, ctx) for s in report.get("steps") or []], ctx) != rho:
            return "steps do not compose to the input"
        return _check_certificate(report.get("certificate"), Z2, jz(rho))
    result = report.get("result") or {}
    if "linear_part_jz" not in result:
        return "missing linear_part_jz"
    m = _matrix(result["linear_part_jz"], Z2)
    offset = tuple(Fraction(c) for c in result["offset"]) if "offset" in result else None
    if report["criterion"] == "z-linear-ge2":
        expected = jz(rho)
    else:
        expected = jz(offset_linear_part(rho, offset))  # type: ignore[arg-type]
    if m != expected:
        return "linear_part_jz is not the J_z of the tested linear part"
    if not is_unit(det(m)):
        return "tested linear part is not an automorphism"
    return _check_witness(report.get("witness"), Z2, _first_column(m))


def _metab_evidence(report: dict[str, Any]) -> str | None:
    ctx = _context(report, "vars", "x,y,z")
    theta = parse_endo(report["input"]["endo"], ctx)
    if report["verdict"] != "Wild":
        return None
    m = _matrix((report.get("result") or {}).get("linear_part_jz", []), Z2)
    if m != j2_bar(theta):
        return "reported J_2 differs from the input's"
    return _check_witness(report.get("witness"), Z2, _first_column(m))


def _is_elementary(step: NaEndo, fixed: list[str]) -> bool:
    ctx = step.context
    changed = [n for n in ctx.names if step.image(n) != NaPoly.var(ctx, n)]
    if len(changed) > 1 or any(n in fixed for n in changed):
        return False
    if not changed:
        return True
    name = changed[0]
    image = step.image(name)
    alpha = image.coefficient(ctx.index(name))
    rest = image - NaPoly.var(ctx, name).scale(alpha)
    return alpha != 0 and not rest.depends_on([name])


def _natree(report: dict[str, Any]) -> str | None:
    ctx = _context(report, "vars", "x,y,z")
    phi = parse_na_endo(report["input"]["endo"], ctx)
    fixed = list(report["input"].get("fixed") or [])
    if report["verdict"] in ("Decomposed", "IsZAutomorphism"):
        steps = [parse_na_endo(s, ctx) for s in report.get("steps") or []]
        composite = NaEndo.identity(ctx)
        for step in steps:
            if not _is_elementary(step, fixed):
                return f"step ({step}) is not Z-elementary"
            composite = composite.compose(step)
        return None if composite == phi else "steps do not compose to the input"
    cert = report.get("certificate") or {}
    current = phi
    for r in cert.get("reductions", []):
        tau = parse_na_endo(r["tau"], ctx)
        if not _is_elementary(tau, fixed):
            return f"reduction ({tau}) is not Z-elementary"
        current = current.compose(tau)
    if str(current) != cert.get("stuck"):
        return "reductions do not reach the reported endomorphism"
    return _stuck_problem(current, [n for n in ctx.names if n not in fixed])


def _stuck_problem(stuck: NaEndo, free: list[str]) -> str | None:
    """Re-check that ``stuck`` is not an automorphism fixing the non-free generators."""
    if any(not stuck.image(n).depends_on(free) for n in free):
        return None
    if all(stuck.image(n).degree() <= 1 for n in free):
        if factor_affine(stuck, free) is not None:
            return "stuck endomorphism is affine with an invertible X-block"
        return None
    if kurosh_reduce_step(stuck, free) is not None:
        return "a degree-reducing elementary step exists"
    return None


_CHECKS: dict[str, Check] = {
    "ge2 check": _ge2_check,
    "ge2 complete": _ge2_complete,
    "coord decide": _coord_decide,
    "auto decide-zfix": _auto_decide,
    "auto decide-linear": _auto_decide,
    "metab evidence": _metab_evidence,
    "natree decompose": _natree,
    "natree lift": _natree,
}


def _theorem_problem(report: dict[str, Any]) -> str | None:
    if report.get("criterion") is None:
        return None
    if report.get("theorem") != Criterion(report["criterion"]).theorem:
        return "cited theorem does not match the criterion"
    return None


def verify_report(report: Any) -> tuple[bool, str]:
    """Return (valid, reason) for a parsed JSON report."""
    if not isinstance(report, dict) or "command" not in report:
        raise ReportInvalid("report must be a JSON object with a command")
    if report.get("schema_version") != SCHEMA_VERSION:
        raise ReportInvalid(f"unsupported schema_version {report.get('schema_version')!r}")
    check = _CHECKS.get(report["command"])
    if check is None:
        return True, "report carries no certificate"
    if "verdict" not in report or "input" not in report:
        raise ReportInvalid("report lacks verdict or input")
    try:
        problem = _theorem_problem(report) or check(report)
    except (KeyError, TypeError, ValueError) as exc:
        raise ReportInvalid(f"malformed report field: {exc}") from exc
    logger.info("verify.checked", command=report["command"], valid=problem is None)
    return (problem is None, problem or "certificate verified")


__all__ = ["verify_report"]
