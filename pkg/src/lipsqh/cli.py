"""Command-line interface.

Subcommands: classify1d, classify2d, symbol, roots. Exit codes:
0 equivalent, 1 not equivalent, 2 undetermined, 3 usage/parse error,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algnum import AlgebraicNumber, ConstructionError, eval_at, make_algebraic
from .classify2d import EQUIVALENT, NOT_EQUIVALENT, UNDETERMINED, classify, explain
from .lipeq1d import ConstantSet, critical_points, equivalence_1d
from .parser import ParseError, parse_polynomial
from .polyarith import DomainError, Poly, isolate_real_roots
from .quasihomog import Beta, from_monomials
from .witness import WitnessError, verify_conjugacy, witness_for

EXIT_EQUIVALENT = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_UNDETERMINED = 2
EXIT_USAGE = 3
EXIT_INTERNAL = 4


def _poly_str(p: Poly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i] if i < len(p.coeffs) else 0
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if mag == 1 else f"{mag}*{v}"
        parts.append(("- " if c < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _constant_json(c: AlgebraicNumber) -> dict:
    return {
        "defining": _poly_str(c.defining),
        "interval": [str(c.isolating.lo), str(c.isolating.hi)],
        "approx": float(f"{c.to_float():.17g}"),
    }


def _constant_str(c: AlgebraicNumber) -> str:
    q = c.rat
    if q is not None:
        return str(q)
    return (f"root of {_poly_str(c.defining)} in "
            f"[{c.isolating.lo}, {c.isolating.hi}] ~ {c.to_float():.17g}")


def _constant_set_json(cs: ConstantSet) -> dict:
    out: dict = {"kind": cs.kind}
    if cs.kind == "Finite":
        out["members"] = [_constant_json(m) for m in cs.members]
    return out


def _constant_set_str(cs: ConstantSet) -> str:
    if cs.kind == "Empty":
        return "(none)"
    if cs.kind == "AllPositive":
        return "any c > 0"
    return "{" + ", ".join(_constant_str(m) for m in cs.members) + "}"


def _parse_beta(text: str) -> Beta:
    try:
        if "/" in text:
            r, s = text.split("/")
        else:
            r, s = text, "1"
        return Beta(int(r), int(s))
    except ValueError as exc:
        raise ParseError(f"bad --beta {text!r}: {exc}") from None


def _emit(args, payload_json: dict, payload_text: str) -> None:
    out = json.dumps(payload_json, indent=2) if args.json else payload_text
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _cmd_classify1d(args) -> int:
    f = parse_polynomial(args.f, 1).to_poly()
    g = parse_polynomial(args.g, 1).to_poly()
    v = equivalence_1d(f, g)
    status = EQUIVALENT if v.equivalent else NOT_EQUIVALENT
    payload = {
        "status": status,
        "reason": v.reason,
        "direct": _constant_set_json(v.direct),
        "reverse": _constant_set_json(v.reverse),
    }
    text = "\n".join([
        f"f = {_poly_str(f)}",
        f"g = {_poly_str(g)}",
        f"status: {status}",
        f"reason: {v.reason}",
        f"constants (increasing phi): {_constant_set_str(v.direct)}",
        f"constants (decreasing phi): {_constant_set_str(v.reverse)}",
    ])
    _emit(args, payload, text)
    return EXIT_EQUIVALENT if v.equivalent else EXIT_NOT_EQUIVALENT


def _cmd_classify2d(args) -> int:
    beta = _parse_beta(args.beta)
    F = from_monomials(parse_polynomial(args.F, 2).terms, beta)
    G = from_monomials(parse_polynomial(args.G, 2).terms, beta)
    v = classify(F, G)
    constants = []
    orientation = None
    if v.chosen is not None:
        constants = [_constant_json(v.chosen.c1), _constant_json(v.chosen.c2)]
        orientation = v.chosen.cert.orientation
    payload = {
        "status": v.status,
        "reason": v.reason,
        "detail": v.detail,
        "constants": constants,
        "orientation": orientation,
        "conditions": v.conditions,
    }
    text = explain(v)
    if args.witness and v.status == EQUIVALENT:
        Phi = witness_for(v, args.tol)
        report = verify_conjugacy(
            F, G, Phi,
            {"x_count": args.grid, "t_count": args.grid}, args.tol)
        payload["witness"] = report.to_dict()
        text += ("\nwitness: max_rel_residual = "
                 f"{report.max_rel_residual:.3g}, "
                 f"lip ratios in [{report.lip_ratio_min:.3g}, "
                 f"{report.lip_ratio_max:.3g}], "
                 f"strip L ~ {report.strip_lipschitz_estimate:.3g}, "
                 f"success = {report.success}")
    _emit(args, payload, text)
    return {EQUIVALENT: EXIT_EQUIVALENT,
            NOT_EQUIVALENT: EXIT_NOT_EQUIVALENT,
            UNDETERMINED: EXIT_UNDETERMINED}[v.status]


def _cmd_symbol(args) -> int:
    f = parse_polynomial(args.f, 1).to_poly()
    crit = critical_points(f)
    pts = []
    for t, m in crit.points:
        val = eval_at(f, t)
        pts.append({
            "point": _constant_json(t),
            "multiplicity": m,
            "value": _constant_json(val),
        })
    payload = {"polynomial": _poly_str(f), "critical_points": pts}
    lines = [f"f = {_poly_str(f)}",
             f"critical points: {len(pts)}"]
    for entry in pts:
        lines.append(
            f"  t ~ {entry['point']['approx']:.12g} "
            f"(mult {entry['multiplicity']}), "
            f"f(t) ~ {entry['value']['approx']:.12g}")
    if len(pts) >= 2:
        values = tuple(e["value"]["approx"] for e in pts)
        mults = tuple(e["multiplicity"] for e in pts)
        payload["symbol"] = {"values": [e["value"] for e in pts],
                             "mults": list(mults)}
        lines.append(f"multiplicity symbol: ({values}, {mults})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_EQUIVALENT


def _cmd_roots(args) -> int:
    p = parse_polynomial(args.p, 1).to_poly()
    roots = []
    for box, mult in isolate_real_roots(p):
        alpha = make_algebraic(p, box)
        roots.append({
            "root": _constant_json(alpha),
            "multiplicity": mult,
        })
    payload = {"polynomial": _poly_str(p), "roots": roots}
    lines = [f"p = {_poly_str(p)}", f"real roots: {len(roots)}"]
    for entry in roots:
        lines.append(f"  t ~ {entry['root']['approx']:.12g} "
                     f"(mult {entry['multiplicity']})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_EQUIVALENT


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lipsqh",
        description="Lipschitz classification of univariate and "
                    "quasihomogeneous bivariate polynomials")
    sub = ap.add_subparsers(dest="command", required=True)

    p1 = sub.add_parser("classify1d", help="decide f ~ g on the line")
    p1.add_argument("f")
    p1.add_argument("g")
    p1.add_argument("--json", action="store_true")
    p1.add_argument("--out")
    p1.set_defaults(func=_cmd_classify1d)

    p2 = sub.add_parser("classify2d",
                        help="classify a beta-quasihomogeneous pair")
    p2.add_argument("F")
    p2.add_argument("G")
    p2.add_argument("--beta", required=True, metavar="r/s")
    p2.add_argument("--json", action="store_true")
    p2.add_argument("--witness", action="store_true")
    p2.add_argument("--grid", type=int, default=64)
    p2.add_argument("--tol", type=float, default=1e-9)
    p2.add_argument("--out")
    p2.set_defaults(func=_cmd_classify2d)

    p3 = sub.add_parser("symbol", help="critical data of a 1-D polynomial")
    p3.add_argument("f")
    p3.add_argument("--json", action="store_true")
    p3.add_argument("--out")
    p3.set_defaults(func=_cmd_symbol)

    p4 = sub.add_parser("roots", help="isolate the real roots")
    p4.add_argument("p")
    p4.add_argument("--json", action="store_true")
    p4.add_argument("--out")
    p4.set_defaults(func=_cmd_roots)
    return ap


def _shield_negative_polys(argv: list[str]) -> list[str]:
    """Stop argparse from eating positional polynomials like '-3*X^4':
    anything dash-led that parses as a polynomial gets a leading space."""
    out = []
    for tok in argv:
        if tok.startswith("-") and len(tok) > 1 and not tok.startswith("--"):
            for nv in (2, 1):
                try:
                    parse_polynomial(tok, nv)
                    tok = " " + tok
                    break
                except ParseError:
                    pass
        out.append(tok)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _shield_negative_polys(list(argv))
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, DomainError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, WitnessError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
