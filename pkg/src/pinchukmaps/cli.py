"""Command-line entry point: ``pinchukmaps <command> ...``.

Commands
  verify {all,jacobian,minpoly,levelsets,avariety,identities}
  minpoly --print
  fiber --p RAT --q RAT
  levelset --c RAT --samples N
  avariety --from RAT --to RAT --step RAT
  family --s-coeffs RAT,RAT,...

Exit codes: 0 success, 1 a verification failed, 2 usage or precondition error.
Output is deterministic for fixed arguments; set PINCHUKMAPS_VERBOSE=1 for
progress messages on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import random
import sys
import time
from fractions import Fraction

from . import avariety, fibers, fieldext, levelset, pinchuk
from .qpoly import UniPoly, parse_rat
from .ratfn import QuadNum, to_decimal
from .uniroots import AlgNum

log = logging.getLogger("pinchukmaps")

SCOPES = ("all", "jacobian", "minpoly", "levelsets", "avariety", "identities")
REFERENCE_C3_VALUES = (Fraction(14965, 4), Fraction(-4235, 4))


class PreconditionError(ValueError):
    pass


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (QuadNum, AlgNum)):
        return {"exact": str(obj), "approx": to_decimal(obj)}
    if isinstance(obj, UniPoly):
        return [str(c) for c in obj.coeffs]
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


def rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def rat_list_arg(text: str) -> list:
    try:
        return [parse_rat(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# verification checks; each returns (passed, details)


def check_jacobian_identity(rng):
    core = pinchuk.build_core()
    ok = pinchuk.verify_jacobian_identity(core)
    return ok, {"identity": "j(P,Q) = t^2 + (t + f(13 + 15h))^2 + f^2", "holds": ok}


def check_degrees(rng):
    core = pinchuk.build_core()
    dP, dQ = core.P.total_degree(), core.Q.total_degree()
    return (dP, dQ) == (10, 25), {"deg_P": dP, "deg_Q": dQ, "terms_P": len(core.P), "terms_Q": len(core.Q)}


def check_positivity(rng):
    core = pinchuk.build_core()
    chain = pinchuk.positivity_chain()
    ok = pinchuk.verify_positivity(core)
    return ok, chain


def check_R_derivation(rng):
    R = fieldext.derive_R()
    return True, {"coeffs_by_power_of_T": R.text()}


def check_R_annihilates(rng):
    return fieldext.verify_R_annihilates_h(), {"identity": "R(P, Q, h) = 0 in Q[x, y]"}


def check_minpoly(rng):
    m = fieldext.minimal_polynomial()
    cert = m.certificate
    monic = m.coeffs[-1].is_constant() and m.coeffs[-1].constant_value() == 1
    ok = m.degree == 6 and monic and fieldext.check_certificate(cert)
    return ok, {
        "degree": m.degree,
        "monic": monic,
        "certificate": {"P0": cert.P0, "Q0": cert.Q0, "prime": cert.prime},
    }


def check_level_c3(rng):
    poles = levelset.poles(3)
    locs = sorted(p.location for p in poles)
    vals = dict(levelset.asymptotic_values(3))
    div = levelset.limit_on_level(3, Fraction(3))
    on_curve = all(avariety.W_at(3, v) == 0 for v in vals.values())
    ok = locs == [-3, 1, 3] and div.is_pole and vals.get(Fraction(1)) == Fraction(-4235, 4) and on_curve
    return ok, {"poles": locs, "limits": {str(k): v for k, v in vals.items()},
                "divergent_pole_order": div.order, "limits_satisfy_W": on_curve}


def check_level_c3_reference(rng):
    vals = sorted(v for _, v in levelset.asymptotic_values(3))
    reference = sorted(REFERENCE_C3_VALUES)
    return vals == reference, {
        "computed": vals,
        "reference": reference,
        "W_at_reference": [avariety.W_at(3, v) for v in reference],
    }


def check_level_zero(rng):
    lz = levelset.level_zero_components()
    return all(lz.report.values()) and lz.component_count == 5, {**lz.report, "components": lz.component_count}


def check_level_params(rng):
    results = {}
    for c in (Fraction(-3), Fraction(-1, 2), Fraction(2), Fraction(7, 3)):
        levelset.param_level(c)
        results[str(c)] = True
    return True, results


def check_avariety_points(rng):
    named = [(Fraction(0), Fraction(0)), (Fraction(0), Fraction(208)),
             avariety.SINGULAR_POINT, avariety.CLOSURE_POINT]
    vals = {f"({p}, {q})": avariety.W_at(p, q) for p, q in named}
    cls = avariety.classify_point(*avariety.CLOSURE_POINT)
    ok = all(v == 0 for v in vals.values()) and cls == avariety.CLOSURE_ONLY
    return ok, {"W_values": vals, "closure_point_class": cls}


def check_avariety_param(rng):
    ap = avariety.param_asymptotic()
    pts = {str(s): ap.point(s) for s in (0, -1, -2)}
    ok = (avariety.param_identity_holds(ap)
          and pts["0"] == (0, 208) and pts["-1"] == avariety.SINGULAR_POINT and pts["-2"] == (0, 0))
    return ok, {"P_of_s": str(ap.P_of_s), "Q_of_s": str(ap.Q_of_s), "special": pts}


def check_singular(rng):
    sp = avariety.singular_points()
    ok = sp.on_curve == [avariety.SINGULAR_POINT] and sp.closure_only == [avariety.CLOSURE_POINT]
    return ok, {"on_curve": sp.on_curve, "closure_only": sp.closure_only}


def check_fh_coordinates(rng):
    _, _, report = fieldext.fh_coordinates()
    return all(report.values()), report


def check_automorphism(rng):
    rep = fieldext.automorphism_identities()
    ok = (rep["a_Q_on_level_zero"] and rep["b_Q_at_minus_2"] == 208 and rep["c_discriminant"] == -1595
          and rep["d_factored_ok"] and rep["d_inner_discriminant"] == -1944 and rep["e_ok"])
    return ok, rep


def random_rat(rng, lo, hi, max_den=5) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_offcurve_targets(rng, count: int) -> list:
    out = []
    while len(out) < count:
        p, q = random_rat(rng, -6, 6), random_rat(rng, -300, 300)
        if avariety.classify_point(p, q) == avariety.OFF:
            out.append((p, q))
    return out


def random_domain_points(rng, count: int) -> list:
    out = []
    while len(out) < count:
        x, y = random_rat(rng, -3, 3, 3), random_rat(rng, -3, 3, 3)
        if avariety.classify_point(*fibers.image(x, y)) == avariety.OFF:
            out.append((x, y))
    return out


def check_fiber_counts(rng):
    named = [(0, 0), (Fraction(-1), Fraction(-163, 4)), (0, 208), (0, -1), (1, 0)]
    counts = {}
    ok = True
    for p, q in named + random_offcurve_targets(rng, 20):
        res = fibers.fiber(p, q)
        exp = fibers.expected_count(p, q)
        counts[f"({p}, {q})"] = {"count": res.count, "expected": exp}
        ok = ok and res.count == exp
    ok = ok and any(pt.same_point((1, 0)) for pt in fibers.fiber(0, -1).points)
    ok = ok and any(pt.same_point((1, 1)) for pt in fibers.fiber(1, 0).points)
    return ok, counts


def check_tau(rng):
    out = {}
    ok = True
    for x, y in random_domain_points(rng, 10):
        other = fibers.tau(x, y)
        back = fibers.tau(other)
        good = back.same_point((x, y)) and not other.same_point((x, y))
        out[f"({x}, {y})"] = {"tau": [to_decimal(other.x), to_decimal(other.y)], "involution": good}
        ok = ok and good
    return ok, out


def random_S(rng) -> UniPoly:
    deg = rng.randint(0, 4)
    return UniPoly([random_rat(rng, -9, 9, 4) for _ in range(deg + 1)] + [rng.choice([1, -1, Fraction(1, 2)])])


def check_family(rng):
    base = pinchuk.build_core()
    cases = [UniPoly([Fraction(1, 2), -5, 0, 1])]
    while len(cases) < 6:
        S = random_S(rng)
        if S.degree() <= 4:
            cases.append(S)
    out = []
    ok = True
    for S in cases:
        fam = pinchuk.build_family(S)
        got = pinchuk.recover_S(base, fam)
        good = got == S and pinchuk.verify_jacobian_identity(fam)
        out.append({"S": S, "recovered": got, "ok": good})
        ok = ok and good
    return ok, out


def check_branches(rng):
    rep = fibers.branch_report()
    return all(rep.values()), rep


CHECKS = [
    ("jacobian_identity", "jacobian", check_jacobian_identity),
    ("degrees", "jacobian", check_degrees),
    ("positivity", "jacobian", check_positivity),
    ("R_derivation", "minpoly", check_R_derivation),
    ("R_annihilates_h", "minpoly", check_R_annihilates),
    ("minimal_polynomial_degree_6", "minpoly", check_minpoly),
    ("level_c3_poles_and_limits", "levelsets", check_level_c3),
    ("level_c3_reference_values", "levelsets", check_level_c3_reference),
    ("level_zero_components", "levelsets", check_level_zero),
    ("level_parametrizations", "levelsets", check_level_params),
    ("implicit_equation_points", "avariety", check_avariety_points),
    ("curve_parametrization", "avariety", check_avariety_param),
    ("singular_points", "avariety", check_singular),
    ("fh_coordinates", "identities", check_fh_coordinates),
    ("automorphism_identities", "identities", check_automorphism),
    ("f_zero_branches", "identities", check_branches),
    ("fiber_counts", "identities", check_fiber_counts),
    ("involution", "identities", check_tau),
    ("family_round_trip", "identities", check_family),
]


def run_checks(scope: str, seed: int = 0, timing: bool = False) -> list:
    reports = []
    for name, check_scope, fn in CHECKS:
        if scope != "all" and scope != check_scope:
            continue
        log.info("running %s", name)
        rng = random.Random(f"{seed}:{name}")
        start = time.perf_counter()
        try:
            passed, details = fn(rng)
        except Exception as exc:  # a crashing check is a failed check
            passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        report = {"check": name, "status": "pass" if passed else "fail", "details": _jsonable(details)}
        if timing:
            report["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 1)
        reports.append(report)
    return reports


def cmd_verify(args, out) -> int:
    reports = run_checks(args.scope, args.seed, args.timing)
    json.dump(reports, out, indent=2)
    out.write("\n")
    return 0 if all(r["status"] == "pass" for r in reports) else 1


def cmd_minpoly(args, out) -> int:
    m = fieldext.minimal_polynomial()
    payload = {
        "degree": m.degree,
        "coeffs_by_power_of_T": [str(c) for c in m.coeffs],
        "certificate": {"P0": str(m.certificate.P0), "Q0": str(m.certificate.Q0),
                        "prime": m.certificate.prime},
    }
    if not args.print:
        payload.pop("coeffs_by_power_of_T")
    json.dump(payload, out, indent=2)
    out.write("\n")
    return 0


def cmd_fiber(args, out) -> int:
    res = fibers.fiber(args.p, args.q)
    payload = {
        "target": [str(args.p), str(args.q)],
        "classification": res.classification,
        "expected": fibers.expected_count(args.p, args.q),
        "points": [pt.as_json() for pt in res.points],
        "count": res.count,
    }
    json.dump(payload, out, indent=2)
    out.write("\n")
    return 0


def _write_csv(out, header: dict, columns: list, rows: list) -> None:
    out.write("# " + json.dumps(header) + "\n")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(row)
    out.write(buf.getvalue())


def cmd_levelset(args, out) -> int:
    c = args.c
    if c in (0, -1):
        raise PreconditionError(f"c must avoid -1 and 0 (got {c})")
    if args.samples < 1:
        raise PreconditionError("--samples must be positive")
    poles = levelset.poles(c)
    asym = levelset.asymptotic_values(c) if c > -1 else []
    header = {
        "c": str(c),
        "poles": [{"h": str(p.location), "h_approx": to_decimal(p.location), "kind": p.kind} for p in poles],
        "asymptotic_values": [{"pole": str(s), "Q": str(v), "Q_approx": to_decimal(v)} for s, v in asym],
    }
    rows = [[str(v) for v in row] for row in levelset.level_samples(c, args.samples)]
    _write_csv(out, header, ["h", "x", "y", "Q"], rows)
    return 0


def cmd_avariety(args, out) -> int:
    try:
        rows = avariety.curve_rows(args.start, args.stop, args.step)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    ap = avariety.param_asymptotic()
    header = {"P_of_s": str(ap.P_of_s), "Q_of_s": str(ap.Q_of_s),
              "singular_point": [str(v) for v in avariety.SINGULAR_POINT]}
    _write_csv(out, header, ["s", "P", "Q"], [[str(v) for v in row] for row in rows])
    return 0


def cmd_family(args, out) -> int:
    S = UniPoly(args.s_coeffs)
    base = pinchuk.build_core()
    fam = pinchuk.build_family(S)
    recovered = pinchuk.recover_S(base, fam)
    payload = {
        "S": [str(c) for c in S.coeffs],
        "deg_Q": fam.Q.total_degree(),
        "terms_Q": len(fam.Q),
        "jacobian_identity": pinchuk.verify_jacobian_identity(fam),
        "recovered_S": [str(c) for c in recovered.coeffs],
        "round_trip": recovered == S,
    }
    if args.print_q:
        payload["Q"] = str(fam.Q)
    json.dump(payload, out, indent=2)
    out.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pinchukmaps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks, JSON report on stdout")
    v.add_argument("scope", choices=SCOPES)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--timing", action="store_true", help="add elapsed_ms to each report")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("minpoly", help="minimal polynomial of h and its certificate")
    m.add_argument("--print", action="store_true", help="include the seven coefficients")
    m.set_defaults(func=cmd_minpoly)

    f = sub.add_parser("fiber", help="exact preimages of a rational target")
    f.add_argument("--p", type=rat_arg, required=True)
    f.add_argument("--q", type=rat_arg, required=True)
    f.set_defaults(func=cmd_fiber)

    ls = sub.add_parser("levelset", help="CSV samples along P = c")
    ls.add_argument("--c", type=rat_arg, required=True)
    ls.add_argument("--samples", type=int, default=8)
    ls.set_defaults(func=cmd_levelset)

    av = sub.add_parser("avariety", help="CSV samples along the asymptotic variety")
    av.add_argument("--from", dest="start", type=rat_arg, required=True)
    av.add_argument("--to", dest="stop", type=rat_arg, required=True)
    av.add_argument("--step", type=rat_arg, required=True)
    av.set_defaults(func=cmd_avariety)

    fa = sub.add_parser("family", help="build Q + S(P) and recover S")
    fa.add_argument("--s-coeffs", type=rat_list_arg, required=True,
                    help="comma-separated rationals, lowest degree first")
    fa.add_argument("--print-q", action="store_true")
    fa.set_defaults(func=cmd_family)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    if os.environ.get("PINCHUKMAPS_VERBOSE"):
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (PreconditionError, levelset.LevelError) as exc:
        print(f"pinchukmaps: precondition violated: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
