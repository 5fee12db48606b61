"""Command-line entry point: ``loopbraid {components,construct,extend,check,report}``.

Exit codes: 0 success, 1 I/O or validation error, 2 a mathematical negative
(extension obstructed, or a check that found violated relations).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction


from . import quiver
from .components import AlphaTuple, Density, irreducible_density
from .extend import MultiplicityMismatch, assemble_lb3, relation_residuals, verify_lb3_relations, RELATION_NAMES
from .irreducibility import burnside_dimension, commutant_dimension
from .linalg import DEFAULT_TOL, frobenius_distance, identity, mat_power
from .repfile import (
    KIND_LB3,
    MalformedFile,
    deserialize_rep,
    lb3_rep_from_dict,
    read_document,
    serialize_lb3,
    serialize_rep,
)
from .reps import NotIrreducible, RepError, build_gamma_rep, restriction_multiplicities_c2, restriction_multiplicities_c3
from .report import b3_rows, g_rows, gamma_rows, lambda_from_angle, reproduction_report

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


def _uvw(row) -> str:
    return "-" if row.witness_uvw is None else "u={},v={},w={}".format(*row.witness_uvw)


def _print_table(rows, out) -> None:
    header = f"{'alpha':<18} {'n':>3} {'dim':>4}  {'dense':<18} {'status':<18} witness"
    print(header, file=out)
    print("-" * len(header), file=out)
    for r in rows:
        a = r.alpha
        label = f"({a.a},{a.b};{a.x},{a.y},{a.z})"
        extra = _uvw(r)
        if r.uplusv_slot:
            extra += f" [u+v in {r.uplusv_slot}]"
        if r.witness_uvw is None and r.witness_alpha is not None and r.status == "EXTENDS":
            w = r.witness_alpha
            extra = f"direct via ({w.a},{w.b};{w.x},{w.y},{w.z})"
        if r.orbit_flag:
            extra += " [orbit has no member with b >= x]"
        print(f"{label:<18} {r.n:>3} {r.dim:>4}  {r.irreducible_dense:<18} {r.status:<18} {extra}", file=out)


def cmd_components(args) -> int:
    out = sys.stdout
    if args.group == "g":
        rows = g_rows(args.n)
        excluded = [list(g) for g in quiver.excluded_singletons(args.n)]
        if args.format == "json":
            json.dump({"group": "g", "n": args.n, "rows": rows,
                       "excluded_singletons": excluded}, out, indent=2)
            print(file=out)
        else:
            print(f"{'g=(p,q,r,s,t)':<18} {'beta':<16} {'restriction':<16} gamma_condition", file=out)
            for row in rows:
                print(f"{str(tuple(row['g'])):<18} {str(tuple(row['beta'])):<16} "
                      f"{str(tuple(row['restriction'])):<16} {row['gamma_condition']}", file=out)
            if excluded:
                print("excluded single-vertex vectors (verbatim criterion): "
                      + ", ".join(str(tuple(g)) for g in excluded), file=out)
        return EXIT_OK
    rows = b3_rows(args.n) if args.group == "b3" else gamma_rows(args.n, args.all)
    if args.format == "json":
        json.dump({"group": args.group, "n": args.n, "rows": [r.as_dict() for r in rows]}, out, indent=2)
        print(file=out)
    else:
        _print_table(rows, out)
    return EXIT_OK


def parse_angle(text: str) -> float:
    """``p/q`` (or any rational literal) as a multiple of pi."""
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad angle {text!r}; expected p/q") from exc


def parse_alpha(text: str) -> AlphaTuple:
    try:
        return AlphaTuple.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def cmd_construct(args) -> int:
    alpha = args.alpha
    if alpha.n == 0:
        print("DegenerateAlpha: dimension zero", file=sys.stderr)
        return EXIT_ERROR
    density = irreducible_density(alpha)
    if density is not Density.YES and not args.allow_reducible:
        print(f"{alpha} is not an irreducible-dense component ({density.value}); "
              "use --allow-reducible to build anyway", file=sys.stderr)
        return EXIT_ERROR
    lam = lambda_from_angle(args.lambda_angle)
    try:
        rep = build_gamma_rep(alpha, args.seed, require_irreducible=not args.allow_reducible,
                              retries=args.retries, lam=lam)
    except NotIrreducible as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    bdim = burnside_dimension([rep.S, rep.T])
    serialize_rep(rep, args.out)
    print(f"wrote {args.out}: alpha={alpha} n={rep.n} seed={args.seed} burnside_dim={bdim}")
    return EXIT_OK


def cmd_extend(args) -> int:
    try:
        rep = deserialize_rep(args.rep_path)
    except (OSError, MalformedFile) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        lb3 = assemble_lb3(rep, rep.lam, args.v1_split)
    except MultiplicityMismatch as exc:
        cert = exc.certificate
        print(f"obstruction certificate: {cert}")
        print(json.dumps({"reason": cert.reason.value, "mults": list(cert.mults)}))
        return EXIT_NEGATIVE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report = verify_lb3_relations(lb3, args.tol)
    for name, r in zip(RELATION_NAMES, report.residuals):
        print(f"{name:<45} {r:.3e}")
    if not report.passed:
        print("constructed matrices failed verification", file=sys.stderr)
        return EXIT_ERROR
    serialize_lb3(lb3, args.out, report)
    print(f"wrote {args.out}: max residual {report.max_residual:.3e}")
    return EXIT_OK


def _check_lb3(doc, tol: float) -> int:
    rep = lb3_rep_from_dict(doc)
    res = relation_residuals(rep.sigma1, rep.sigma2, rep.s1, rep.s2)
    ok = True
    for name, r in zip(RELATION_NAMES, res):
        verdict = "ok" if r <= tol else "VIOLATED"
        ok &= r <= tol
        print(f"{name:<45} {r:.3e}  {verdict}")
    n = rep.n
    central = frobenius_distance(mat_power(rep.sigma1 @ rep.sigma2, 3), rep.lam ** 6 * identity(n))
    print(f"{'(sigma1 sigma2)^3 = lambda^6 I':<45} {central:.3e}")
    bdim = burnside_dimension([rep.sigma1, rep.sigma2, rep.s1, rep.s2])
    print(f"burnside dimension {bdim} of {n * n} ({'irreducible' if bdim == n * n else 'reducible'})")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _check_gamma(doc, tol: float) -> int:
    lb = lb3_rep_from_dict({**doc, **{k: doc.get("S") for k in ("sigma1", "sigma2", "s1", "s2")}})
    S, T = lb.source.S, lb.source.T
    n = S.shape[0]
    rs = frobenius_distance(S @ S, identity(n))
    rt = frobenius_distance(mat_power(T, 3), identity(n))
    ok = rs <= tol and rt <= tol
    print(f"{'S^2 = I':<20} {rs:.3e}  {'ok' if rs <= tol else 'VIOLATED'}")
    print(f"{'T^3 = I':<20} {rt:.3e}  {'ok' if rt <= tol else 'VIOLATED'}")
    if ok:
        try:
            got = (*restriction_multiplicities_c2(S), *restriction_multiplicities_c3(T))
        except RepError as exc:
            print(f"multiplicities: {exc}")
            ok = False
        else:
            match = got == tuple(lb.source.alpha)
            ok &= match
            print(f"multiplicities {got} {'match' if match else 'DIFFER FROM'} declared {tuple(lb.source.alpha)}")
        bdim = burnside_dimension([S, T])
        print(f"burnside dimension {bdim} of {n * n}; commutant dimension {commutant_dimension(lb.source)}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_check(args) -> int:
    try:
        doc = read_document(args.path)
        if doc.get("kind") == KIND_LB3:
            return _check_lb3(doc, args.tol)
        return _check_gamma(doc, args.tol)
    except (OSError, MalformedFile, AttributeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def cmd_report(args) -> int:
    rep = reproduction_report(args.n_max, args.seeds, args.lambda_angle)
    if args.format == "json":
        json.dump(rep, sys.stdout, indent=2)
        print()
        return EXIT_OK
    for block in rep["results"]:
        print(f"n = {block['n']}")
        for row in block["rows"]:
            checks = row["checks"]
            if row["status"] == "EXTENDS":
                worst = max(c["max_residual"] for c in checks) if checks else float("nan")
                ok = all(c["ok"] for c in checks)
                note = f"{len(checks)} witnesses {'verified' if ok else 'FAILED'}, max residual {worst:.2e}"
            else:
                obs = {tuple(c["obstruction"]) for c in checks if "obstruction" in c}
                note = "criterion unmet; " + (f"obstruction {sorted(obs)}" if obs else "no obstruction found")
            print(f"  {str(tuple(row['alpha'])):<22} dim {row['dim']:>3}  {row['status']:<8} {note}")
    s = rep["summary"]
    if s["all_extendable_witnesses_verified"] and not s["flagged"]:
        print("all components EXTENDS, all witnesses verified")
    else:
        print(f"flagged components: {s['flagged']}; extendable witnesses verified: "
              f"{s['all_extendable_witnesses_verified']}")
    print(json.dumps({"summary": s}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopbraid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("components", help="classification table of components")
    c.add_argument("--group", choices=("gamma", "b3", "g"), default="b3")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("table", "json"), default="table")
    c.add_argument("--all", action="store_true", help="gamma: include components without dense irreducibles")
    c.set_defaults(func=cmd_components)

    c = sub.add_parser("construct", help="write a seeded witness representation")
    c.add_argument("--alpha", type=parse_alpha, required=True, help="a,b,x,y,z")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--lambda-angle", type=parse_angle, default=0.0, help="lambda = exp(i pi p/q)")
    c.add_argument("--retries", type=int, default=16)
    c.add_argument("--allow-reducible", action="store_true")
    c.add_argument("-o", "--out", required=True)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("extend", help="extend a witness to LB3")
    c.add_argument("rep_path")
    c.add_argument("--v1-split", type=int, default=None)
    c.add_argument("--tol", type=float, default=DEFAULT_TOL.residual_eps)
    c.add_argument("-o", "--out", required=True)
    c.set_defaults(func=cmd_extend)

    c = sub.add_parser("check", help="verify relations of a representation file")
    c.add_argument("path")
    c.add_argument("--tol", type=float, default=DEFAULT_TOL.residual_eps)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("report", help="reproduce the classification with verified witnesses")
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--seeds", type=int, default=3)
    c.add_argument("--lambda-angle", type=parse_angle, default=0.0)
    c.add_argument("--format", choices=("table", "json"), default="table")
    c.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n", 1) < 1 or getattr(args, "n_max", 1) < 1:
        print("n must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
