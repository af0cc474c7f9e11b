"""Command-line driver.

Exit codes: 0 success, 1 parse error, 2 precondition refusal, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cubic3_char0 as c0
from . import cubic3_char3 as c3
from .checks import CheckReport
from .curves import CurvePoint
from .errors import GencliffError, ParseError, PreconditionError
from .fieldtower import Field
from .matrices import Matrix
from .ncalg import MatrixContext, decompose_artin_schreier, decompose_pcentral, decompose_rho, overlap_check
from .parsing import (extend_field, format_phi, parse_field, parse_nc, parse_phi, parse_phi_general,
                      parse_point, parse_scalar, _split_top)
from .repcheck import (GeneralPresentation, divisibility_audit, is_representation, load_matrices,
                       minimal_poly_check)

VERBS = ("analyze", "curve", "image", "represent", "verify-rep", "decompose", "nf", "audit-confluence")
REPORT_KEYS = ("invariants", "curve", "image", "representation", "checks")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="QQ.rho",
                        help="field spec, e.g. QQ.rho, GF(3), GF(3).ext(T^2+1), QQ.rho.ext(T^3-2, c)")
    common.add_argument("--phi", help="Phi as an expression in Z and X, Y (or X1..Xn)")
    common.add_argument("--coeffs", help="coefficient list: r,t,e,alpha,beta,gamma,delta "
                                         "(characteristic 3: e,alpha,beta,gamma,delta)")
    common.add_argument("--point", help="curve point R0,S0 (or a single s0)")
    common.add_argument("--ext", help="adjoin a root for the point coordinates: [name=]poly in T")
    common.add_argument("--matrices", help="JSON file holding a list of matrices")
    common.add_argument("--assert-alpha-not-cube", action="store_true",
                        help="assert that alpha is not a cube when this cannot be decided")
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    parser = argparse.ArgumentParser(prog="gencliff",
                                     description="Generalized Clifford algebras of monic cubic forms.")
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("analyze", parents=[common], help="invariants, curve and identity checks") \
        .add_argument("--oracle", action="store_true", help="also run the function-field oracle")
    sub.add_parser("curve", parents=[common], help="the associated curve and its singular points")
    sub.add_parser("image", parents=[common], help="simple image at a curve point")
    sub.add_parser("represent", parents=[common], help="explicit 3x3 matrices at a curve point")
    sub.add_parser("verify-rep", parents=[common], help="check matrices against a general Phi")
    dec = sub.add_parser("decompose", parents=[common],
                         help="eigen-decomposition of y (second matrix) with respect to x (first)")
    dec.add_argument("--degree", type=int, default=3)
    nf = sub.add_parser("nf", parents=[common], help="normal form of a noncommutative expression")
    nf.add_argument("expression")
    audit = sub.add_parser("audit-confluence", parents=[common], help="overlap ambiguity audit")
    audit.add_argument("--max-len", type=int, default=8)
    return parser


# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------

def load_presentation(args, field: Field):
    if args.phi and args.coeffs:
        raise ParseError("give either --phi or --coeffs, not both")
    if args.phi:
        return parse_phi(args.phi, field)
    if args.coeffs:
        values = [parse_scalar(p, field) for p in _split_top(args.coeffs)]
        if field.characteristic == 3:
            if len(values) != 5:
                raise ParseError("characteristic 3 takes five coefficients e,alpha,beta,gamma,delta")
            return c3.char3_from_coeffs(field, *values)
        if len(values) != 7:
            raise ParseError("expected seven coefficients r,t,e,alpha,beta,gamma,delta")
        return c0.CubicPresentation.from_tuple(field, values)
    raise ParseError("a presentation is required: pass --phi or --coeffs")


def structure_presentation(args, field: Field):
    pres = load_presentation(args, field)
    if isinstance(pres, GeneralPresentation):
        raise PreconditionError("structure commands accept only binary cubic forms Z^3 - f1 Z^2 - f2 Z - f3",
                                clause="binary cubic family")
    if isinstance(pres, c0.CubicPresentation):
        pres.validate()
    return pres


def point_field(args, field: Field) -> Field:
    return extend_field(field, args.ext) if args.ext else field


def read_point(args, field: Field) -> list:
    if not args.point:
        raise ParseError("this command needs --point")
    return parse_point(args.point, point_field(args, field))


def read_matrices(args, field: Field):
    if not args.matrices:
        raise ParseError("this command needs --matrices FILE")
    try:
        text = Path(args.matrices).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.matrices}: {exc}") from None
    try:
        return load_matrices(text, field, parse_scalar)
    except (json.JSONDecodeError, ValueError) as exc:
        if isinstance(exc, GencliffError):
            raise
        raise ParseError(f"bad matrix file: {exc}") from None


# ---------------------------------------------------------------------------
# report pieces
# ---------------------------------------------------------------------------

def is_char3(pres) -> bool:
    return isinstance(pres, c3.Char3Presentation)


def invariants_json(pres) -> dict:
    if is_char3(pres):
        out = {"branch": pres.branch}
        if pres.branch == c3.E_ZERO:
            out["Delta"] = str(c3.delta_char3(pres))
        else:
            out["kappa"] = str(pres.kappa)
        return out
    return pres.invariants().to_json()


def curve_of(pres):
    return c3.curve_char3(pres) if is_char3(pres) else c0.curve_char0(pres)


def rewrite_system(pres):
    return c3.rewrite_system_char3(pres) if is_char3(pres) else c0.rewrite_system_char0(pres)


def presentation_json(pres) -> dict:
    out = {"phi": format_phi(pres), "coefficients": pres.coeff_dict()}
    if is_char3(pres):
        out["branch"] = pres.branch
        if pres.transform is not None:
            out["transform"] = pres.transform.to_strings()
    return out


def describe(pres, report: dict) -> None:
    report["presentation"] = presentation_json(pres)
    report["invariants"] = invariants_json(pres)
    if is_char3(pres):
        report["branch"] = pres.branch
        report["transform"] = None if pres.transform is None else pres.transform.to_strings()


def new_report(verb: str, field: Field) -> dict:
    report = {"verb": verb, "field": field.name}
    for key in REPORT_KEYS:
        report[key] = [] if key == "checks" else None
    return report


def add_checks(report: dict, checks: CheckReport) -> None:
    report["checks"].extend(c.to_json() for c in checks.checks)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_analyze(args, field: Field, report: dict) -> None:
    pres = structure_presentation(args, field)
    describe(pres, report)
    curve = curve_of(pres)
    report["curve"] = curve.to_json()
    report["curve_equation"] = str(curve)
    if is_char3(pres):
        rs = c3.rewrite_system_char3(pres)
        add_checks(report, c3.verify_central_char3(pres, rs))
        add_checks(report, c3.verify_decomposition(pres, rs))
    else:
        rs = c0.rewrite_system_char0(pres)
        add_checks(report, c0.verify_centrality(pres, rs))
        add_checks(report, c0.verify_identities(pres, rs))
        if args.oracle:
            add_checks(report, c0.verify_phi(pres))


def cmd_curve(args, field: Field, report: dict) -> None:
    pres = structure_presentation(args, field)
    describe(pres, report)
    curve = curve_of(pres)
    report["curve"] = curve.to_json()
    report["curve_equation"] = str(curve)
    report["smoothness"] = curve.smoothness().to_json()
    if args.point:
        pt = read_point(args, field)
        ok = len(pt) == 2 and curve.contains(pt)
        report["checks"].append({"name": "point on curve", "ok": ok, "detail": args.point})


def _image(args, pres, field: Field):
    coords = read_point(args, field)
    if is_char3(pres):
        if len(coords) == 1:
            return c3.simple_image_char3(pres, CurvePoint.scalar(coords[0]))
        return c3.simple_image_char3(pres, tuple(coords))
    if len(coords) != 2:
        raise ParseError("--point needs two coordinates R0,S0")
    return c0.simple_image(pres, tuple(coords), assert_alpha_not_cube=args.assert_alpha_not_cube)


def cmd_image(args, field: Field, report: dict) -> None:
    pres = structure_presentation(args, field)
    describe(pres, report)
    report["curve"] = curve_of(pres).to_json()
    image = _image(args, pres, field)
    report["image"] = image.to_json()
    report["rendered"] = image.render()
    if is_char3(pres):
        report["azumaya"] = image.azumaya
        report["localized"] = image.localized


def cmd_represent(args, field: Field, report: dict) -> None:
    pres = structure_presentation(args, field)
    if is_char3(pres):
        raise PreconditionError("explicit representations are built for characteristic != 3 only")
    describe(pres, report)
    report["curve"] = curve_of(pres).to_json()
    coords = read_point(args, field)
    if len(coords) != 2:
        raise ParseError("--point needs two coordinates R0,S0")
    image = c0.simple_image(pres, tuple(coords), assert_alpha_not_cube=args.assert_alpha_not_cube)
    report["image"] = image.to_json()
    report["rendered"] = image.render()
    rep = c0.build_representation(pres, tuple(coords))
    report["representation"] = rep.to_json()
    report["representation_field"] = rep.field.name
    gp = pres.general()
    report["checks"].append({"name": "Phi(a X + b Y) = 0 identically",
                             "ok": is_representation(gp, rep).ok, "detail": ""})
    report["checks"].append({"name": "minimal polynomial has degree 3",
                             "ok": minimal_poly_check(gp, rep), "detail": ""})


def cmd_verify_rep(args, field: Field, report: dict) -> None:
    if not args.phi:
        raise ParseError("verify-rep needs --phi")
    gp = parse_phi_general(args.phi, field)
    report["presentation"] = {"phi": str(gp), "d": gp.d, "n": gp.n}
    rep = read_matrices(args, field)
    report["representation"] = rep.to_json()
    verdict = is_representation(gp, rep)
    detail = ""
    if not verdict:
        mu, W = verdict.witness
        detail = f"coefficient of X^{mu} is nonzero: {W.to_strings()}"
    report["checks"].append({"name": "is_representation", "ok": verdict.ok, "detail": detail})
    if verdict:
        report["checks"].append({"name": "minimal polynomial has degree d",
                                 "ok": minimal_poly_check(gp, rep), "detail": ""})
    report["divisibility"] = divisibility_audit(gp, rep.dim)


def cmd_decompose(args, field: Field, report: dict) -> None:
    rep = read_matrices(args, field)
    if len(rep.matrices) != 2:
        raise ParseError("decompose expects two matrices [x, y]")
    x, y = rep.matrices
    L = rep.field
    ctx = MatrixContext(L, rep.dim)
    d = args.degree
    checks = CheckReport("decomposition")
    if L.characteristic == d:
        if ctx.as_scalar(x ** d - x) is not None:
            parts = decompose_artin_schreier(y, x, d, ctx)
            report["method"] = "artin-schreier"
            total = Matrix.zero(L, rep.dim)
            for k, zk in enumerate(parts.z):
                total = total + zk
                checks.zero(f"x z_{k} - z_{k} x = {k} z_{k}", x * zk - zk * x - zk * k)
            checks.zero("sum of parts = y", total - y)
            out = parts.z
        else:
            out = decompose_pcentral(y, x, d, ctx)
            report["method"] = "p-central"
            checks.zero("x z_0 - z_0 x = 0", x * out[0] - out[0] * x)
            for k in range(1, d):
                checks.zero(f"x z_{k} - z_{k} x = z_{k - 1}", x * out[k] - out[k] * x - out[k - 1])
            checks.zero("y = z_(p-1) - z_(p-2)", out[d - 1] - out[d - 2] - y)
    else:
        out = decompose_rho(y, x, d, L.rho, ctx)
        report["method"] = "root-of-unity"
        total = Matrix.zero(L, rep.dim)
        for k, part in enumerate(out):
            total = total + part
            checks.zero(f"y_{k} x = rho^{k} x y_{k}", part * x - x * part * L.rho ** k)
        checks.zero("sum of parts = y", total - y)
    report["decomposition"] = [P.to_strings() for P in out]
    add_checks(report, checks)


def nc_macros(pres, ring) -> tuple[dict, dict]:
    if is_char3(pres):
        macros = {"y": c3.y_expression(pres, ring), "w": c3.w_expression(pres, ring)}
        a, b, c, d = pres.coeffs()
        scalars = {"alpha": a, "beta": b, "gamma": c, "delta": d}
        if pres.branch == c3.E_ZERO:
            scalars["Delta"] = c3.delta_char3(pres)
            if not b.is_zero():
                macros["z"] = ring.gen("x") * ring.gen("y1") * b.inverse()
        else:
            scalars["kappa"] = pres.kappa
        return macros, scalars
    inv = pres.invariants()
    macros = {"y0": c0.y0_expression(pres, ring), "y": c0.y_expression(pres, ring),
              "w": c0.w_expression(pres, ring)}
    scalars = dict(zip(c0.COEFF_NAMES, pres.coeffs()))
    scalars.update({"D": inv.D, "D1": inv.D1, "D2": inv.D2})
    return macros, scalars


def cmd_nf(args, field: Field, report: dict) -> None:
    pres = structure_presentation(args, field)
    describe(pres, report)
    rs = rewrite_system(pres)
    macros, scalars = nc_macros(pres, rs.ring)
    expr = parse_nc(args.expression, rs.ring, macros, scalars)
    report["normal_form"] = str(rs.normal_form(expr))


def cmd_audit(args, field: Field, report: dict) -> None:
    pres = structure_presentation(args, field)
    describe(pres, report)
    rs = rewrite_system(pres)
    report["rules"] = rs.rule_strings()
    bad = overlap_check(rs, args.max_len)
    report["ambiguities"] = [a.describe(rs.ring) for a in bad]
    report["checks"].append({"name": f"all overlaps up to length {args.max_len} resolve",
                             "ok": not bad, "detail": f"{len(bad)} unresolved"})


DISPATCH = {
    "analyze": cmd_analyze, "curve": cmd_curve, "image": cmd_image, "represent": cmd_represent,
    "verify-rep": cmd_verify_rep, "decompose": cmd_decompose, "nf": cmd_nf, "audit-confluence": cmd_audit,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def format_text(report: dict) -> str:
    lines = []
    verb = report["verb"]
    if verb == "nf":
        return report["normal_form"]
    pres = report.get("presentation")
    if pres:
        lines.append(f"Phi: {pres['phi']}  over {report['field']}")
        coeffs = pres.get("coefficients")
        if coeffs:
            lines.append("coefficients: " + ", ".join(f"{k}={v}" for k, v in coeffs.items()))
    if report["invariants"]:
        lines.append("invariants: " + ", ".join(f"{k}={v}" for k, v in report["invariants"].items()))
    if "curve_equation" in report:
        lines.append(f"curve: {report['curve_equation']}")
    if "smoothness" in report:
        sm = report["smoothness"]
        lines.append(f"smooth: {sm['smooth']} ({sm['method']}; {sm['detail']})")
        for p in sm["singular_points"]:
            lines.append(f"  singular point ({', '.join(p)})")
    if "rendered" in report:
        lines.append(f"image: {report['rendered']}")
        if "azumaya" in report:
            lines.append(f"azumaya: {report['azumaya']}, localized: {report['localized']}")
        if report["image"].get("note"):
            lines.append(f"note: {report['image']['note']}")
    if report["representation"] is not None:
        names = "XY" if len(report["representation"]) == 2 else None
        for i, M in enumerate(report["representation"]):
            label = names[i] if names else f"A{i + 1}"
            lines.append(f"{label} =")
            lines.extend("  [" + ", ".join(row) + "]" for row in M)
    if "decomposition" in report:
        lines.append(f"method: {report['method']}")
        for k, M in enumerate(report["decomposition"]):
            lines.append(f"part {k} =")
            lines.extend("  [" + ", ".join(row) + "]" for row in M)
    if "divisibility" in report:
        lines.append(f"dimension gate: {report['divisibility']}")
    if "rules" in report:
        lines.append("rules:")
        lines.extend(f"  {r}" for r in report["rules"])
        for a in report["ambiguities"]:
            lines.append(f"  unresolved: {a}")
    for c in report["checks"]:
        status = "PASS" if c["ok"] else "FAIL"
        lines.append(f"[{status}] {c['name']}" + (f": {c['detail']}" if c["detail"] and not c["ok"] else ""))
    return "\n".join(lines)


def run(args) -> tuple[int, dict]:
    field = parse_field(args.field)
    report = new_report(args.verb, field)
    DISPATCH[args.verb](args, field, report)
    code = 0 if all(c["ok"] for c in report["checks"]) else 3
    return code, report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = run(args)
    except GencliffError as exc:
        code = exc.exit_code
        clause = getattr(exc, "clause", None)
        msg = str(exc) + (f" [violated hypothesis: {clause}]" if clause else "")
        if args.json:
            report = {"verb": args.verb, "field": args.field}
            for key in REPORT_KEYS:
                report[key] = [] if key == "checks" else None
            report["error"] = {"exit_code": code, "type": type(exc).__name__, "message": msg}
            print(json.dumps(report, indent=2))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return code
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(format_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
