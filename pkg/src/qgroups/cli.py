"""Command-line front end: expression normalization, verification targets
with pass/fail certificates, and exact matrix emission.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage,
parse or size errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from . import braid as braid_mod
from . import hopf
from . import jordanian
from . import ncalg as nc
from . import oscillator as osc
from . import parser as expr_parser
from . import reps
from . import scalars as sc
from .errors import EngineError, ParseError, TooLarge, UnknownObject, UnknownTarget
from .report import Report
from .tensor import AlgMatrix, TensorElement

VERIFY_TARGETS = ("rtt", "ybe", "braid", "rep-property", "covariance",
                  "universal-t", "intertwiner", "qboson", "su_q2",
                  "jordanian", "confluence")

MATRIX_OBJECTS = ("rmatrix", "spinrep", "lmatrices", "universal-t", "fock",
                  "sector")


def _parse_spins(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ParseError("expected two spins like 1/2,1/2")
    return tuple(Fraction(p) for p in parts)


def _parse_eval(text: str) -> tuple:
    if "=" not in text:
        raise ParseError("expected var=value, e.g. q=0.7")
    var, raw = text.split("=", 1)
    var = var.strip()
    if var not in ("q", "s", "h"):
        raise ParseError("evaluation variable must be q, s or h")
    return var, Fraction(raw.strip())


def _spot_eval(fe: sc.FieldElement, spec: tuple) -> str:
    var, value = spec
    in_q = var == "q"
    if var == "h" and fe.var != "h":
        return "n/a (different variable)"
    if var in ("q", "s") and fe.var != "s":
        return "n/a (different variable)"
    result = fe.eval_numeric(value, in_q=in_q)
    if result is None:
        return "n/a (irrational or pole)"
    return str(result)


# ---------------------------------------------------------------------------
# Verification target registry
# ---------------------------------------------------------------------------

def _target_rtt(args) -> Report:
    return braid_mod.rtt_check(reps.fundamental_rmatrix())


def _target_ybe(args) -> Report:
    spins = _parse_spins(args.spins) if args.spins else (Fraction(1, 2),) * 2
    rep1, rep2 = reps.spin_rep(spins[0]), reps.spin_rep(spins[1])
    if rep1.dim != rep2.dim:
        raise TooLarge("the Yang-Baxter check needs equal spins")
    r = reps.universal_r(rep1, rep2)
    report = Report(f"Yang-Baxter equation at spins {spins[0]},{spins[1]}")
    report.check_true("R12 R13 R23 = R23 R13 R12",
                      braid_mod.ybe_check(r, rep1.dim))
    return report


def _target_braid(args) -> Report:
    strands = args.strands or 3
    dim = args.dim or 2
    if dim == 2:
        r = reps.fundamental_rmatrix()
    elif dim == 3:
        one = reps.spin_rep(1)
        r = reps.universal_r(one, one)
    else:
        raise TooLarge("braid target supports dim 2 or 3")
    return braid_mod.braid_check(r, strands, dim)


def _target_rep_property(args) -> Report:
    funq = nc.make_preset("fun_q_sl2")
    cm = hopf.matrix_coproduct_map(funq)
    which = (args.rep or "both").upper()
    report = Report(f"representation property ({which})")
    if which in ("T", "BOTH"):
        report.extend(hopf.rep_property_check(
            hopf.fundamental_t_matrix(), cm, funq), prefix="T ")
    if which in ("T1", "BOTH"):
        report.extend(hopf.rep_property_check(
            hopf.three_dim_t_matrix(), cm, funq), prefix="T1 ")
    if not report.checks:
        raise UnknownTarget(f"unknown representation {args.rep!r}")
    return report


def _target_covariance(args) -> Report:
    return hopf.covariance_check()


def _target_universal_t(args) -> Report:
    report = Report("universal T-matrix")
    pa = nc.make_preset("parameter_algebra")
    images = reps.parameter_image(pa)
    t_half = reps.universal_t(reps.spin_rep(Fraction(1, 2)))
    expected = [["A", "B"], ["C", "D"]]
    for i in range(2):
        for j in range(2):
            report.check_equal(
                f"fundamental entry ({i + 1},{j + 1}) = parametrized {expected[i][j]}",
                nc.render_ncpoly(t_half.entries[i][j], pa),
                nc.render_ncpoly(images[expected[i][j]], pa))
    report.extend(reps.universal_t_vs_t1_check(), prefix="spin-1: ")
    return report


def _target_intertwiner(args) -> Report:
    spins = _parse_spins(args.spins) if args.spins else (Fraction(1, 2),) * 2
    rep1, rep2 = reps.spin_rep(spins[0]), reps.spin_rep(spins[1])
    r = reps.universal_r(rep1, rep2)
    return hopf.intertwiner_check(rep1, rep2, r)


def _target_qboson(args) -> Report:
    levels = args.levels or 4
    report = Report(f"q-boson Fock relations up to {levels} levels")
    for d in range(2, levels + 1):
        report.extend(osc.verify_qboson(osc.fock_rep(d, True)),
                      prefix=f"d={d}: ")
    return report


def _target_su_q2(args) -> Report:
    total = args.total or 3
    report = Report(f"two-oscillator angular momentum up to total {total}")
    for t in range(1, total + 1):
        report.extend(osc.verify_su_q2(osc.jordan_schwinger(t, True)),
                      prefix=f"total={t}: ")
        report.extend(osc.sector_embedding_check(t), prefix=f"total={t}: ")
    return report


def _target_jordanian(args) -> Report:
    report = Report("h-deformation")
    report.extend(jordanian.fun_h_checks())
    report.extend(jordanian.uh_fundamental_check())
    report.extend(jordanian.uh_coproduct_check())
    report.extend(jordanian.uh_classical_limit_check())
    return report


def _target_confluence(args) -> Report:
    presets = [args.preset] if args.preset else list(nc.PRESET_NAMES)
    max_len = args.max_len or 6
    trials = args.trials or 500
    report = Report(f"confluence fuzz, words <= {max_len}, {trials} trials")
    for name in presets:
        rs = nc.make_preset(name)
        fuzz = nc.confluence_fuzz(rs, max_len, trials, seed=0)
        report.check_true(
            f"{name}: two reduction strategies agree",
            fuzz.passed,
            lhs="" if fuzz.passed else str(fuzz.counterexamples[:3]))
    return report


_TARGET_RUNNERS = {
    "rtt": _target_rtt,
    "ybe": _target_ybe,
    "braid": _target_braid,
    "rep-property": _target_rep_property,
    "covariance": _target_covariance,
    "universal-t": _target_universal_t,
    "intertwiner": _target_intertwiner,
    "qboson": _target_qboson,
    "su_q2": _target_su_q2,
    "jordanian": _target_jordanian,
    "confluence": _target_confluence,
}


# ---------------------------------------------------------------------------
# Matrix objects
# ---------------------------------------------------------------------------

def _matrix_to_json(m: AlgMatrix, render) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[render(e) for e in row] for row in m.entries]}


def _build_matrices(args) -> dict:
    obj = args.object
    if obj == "rmatrix":
        spins = _parse_spins(args.spins) if args.spins else (Fraction(1, 2),) * 2
        r = reps.universal_r(reps.spin_rep(spins[0]), reps.spin_rep(spins[1]))
        return {"rmatrix": (r, str)}
    if obj == "spinrep":
        rep = reps.spin_rep(Fraction(args.j or "1/2"))
        return {"x0": (rep.x0, str), "xplus": (rep.xplus, str),
                "xminus": (rep.xminus, str)}
    if obj == "lmatrices":
        rep = reps.spin_rep(Fraction(args.j or "1/2"))
        lp, lm = reps.l_matrices(rep)
        return {"lplus": (lp, str), "lminus": (lm, str)}
    if obj == "universal-t":
        rep = reps.spin_rep(Fraction(args.j or "1/2"))
        pa = nc.make_preset("parameter_algebra")
        t = reps.universal_t(rep)
        return {"universal_t": (t, lambda e: nc.render_ncpoly(e, pa))}
    if obj == "fock":
        f = osc.fock_rep(args.levels or 3, bool(args.deformed))
        return {"a": (f.amat, str), "adag": (f.adag, str), "n": (f.nmat, str)}
    if obj == "sector":
        sr = osc.jordan_schwinger(args.total or 1, bool(args.deformed))
        return {"j0": (sr.j0, str), "jplus": (sr.jplus, str),
                "jminus": (sr.jminus, str)}
    raise UnknownObject(f"unknown matrix object {obj!r}")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _emit(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_normalize(args) -> int:
    try:
        rs = nc.make_preset(args.preset)
        value = expr_parser.parse_expression(args.expr, rs)
    except EngineError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if isinstance(value, TensorElement):
        rendered = str(value)
    else:
        nf = rs.normal_form(value)
        rendered = nc.render_ncpoly(nf, rs)
    if args.format == "json":
        _emit(json.dumps({"preset": args.preset, "input": args.expr,
                          "normal_form": rendered}, sort_keys=True), args)
    else:
        _emit(rendered, args)
        if args.eval and not isinstance(value, TensorElement):
            spec = _parse_eval(args.eval)
            for word, coeff in sorted(nf.terms.items()):
                label = "*".join(word) if word else "1"
                print(f"  {label}: {_spot_eval(coeff, spec)}")
    return 0


def _render_certificate(report: Report, command: str) -> str:
    lines = [f"command: {command}", f"engine: qgroups {__version__}",
             f"target: {report.target}"]
    lines.append(report.render_text())
    return "\n".join(lines)


def cmd_verify(args) -> int:
    targets = list(VERIFY_TARGETS) if args.target == "all" else [args.target]
    unknown = [t for t in targets if t not in _TARGET_RUNNERS]
    if unknown:
        raise UnknownTarget(f"unknown verify target {unknown[0]!r} "
                            f"(known: {', '.join(VERIFY_TARGETS)}, all)")
    combined = Report(args.target)
    for t in targets:
        rep = _TARGET_RUNNERS[t](args)
        prefix = f"{t}: " if args.target == "all" else ""
        combined.extend(rep, prefix=prefix)
    command = "qg " + " ".join(sys.argv[1:]) if sys.argv else "qg verify"
    if args.format == "json":
        _emit(json.dumps(combined.to_json_dict(), sort_keys=True), args)
    else:
        _emit(_render_certificate(combined, command), args)
    return 0 if combined.passed else 1


def cmd_matrix(args) -> int:
    mats = _build_matrices(args)
    if args.format == "json":
        payload = {name: _matrix_to_json(m, render)
                   for name, (m, render) in mats.items()}
        if len(payload) == 1:
            payload = next(iter(payload.values()))
        _emit(json.dumps(payload, sort_keys=True), args)
        return 0
    chunks = []
    spec = _parse_eval(args.eval) if args.eval else None
    for name, (m, render) in mats.items():
        chunks.append(f"{name} ({m.rows}x{m.cols}):")
        for row in m.entries:
            chunks.append("  [" + ", ".join(render(e) for e in row) + "]")
        if spec is not None:
            for i, row in enumerate(m.entries):
                vals = [_spot_eval(e, spec) if isinstance(e, sc.FieldElement)
                        else "n/a" for e in row]
                chunks.append("  ~ [" + ", ".join(vals) + "]")
    _emit("\n".join(chunks), args)
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_arg_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qg",
        description="exact verification engine for q- and h-deformed algebras")
    top.add_argument("--version", action="version",
                     version=f"qgroups {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("normalize", help="normal-order an expression")
    p_norm.add_argument("--preset", required=True,
                        help=f"one of: {', '.join(nc.PRESET_NAMES)}")
    p_norm.add_argument("expr")
    p_norm.add_argument("--format", choices=("text", "json"), default="text")
    p_norm.add_argument("--eval", help="spot-evaluate coefficients, e.g. q=0.7")
    p_norm.add_argument("--out", help="write output to a file")
    p_norm.set_defaults(func=cmd_normalize)

    p_ver = sub.add_parser("verify", help="run a verification target")
    p_ver.add_argument("target",
                       help=f"one of: {', '.join(VERIFY_TARGETS)}, all")
    p_ver.add_argument("--spins", help="spin pair, e.g. 1/2,1/2")
    p_ver.add_argument("--dim", type=int)
    p_ver.add_argument("--levels", type=int)
    p_ver.add_argument("--strands", type=int)
    p_ver.add_argument("--total", type=int)
    p_ver.add_argument("--rep", help="T, T1 or both (rep-property)")
    p_ver.add_argument("--preset", help="preset name (confluence)")
    p_ver.add_argument("--trials", type=int)
    p_ver.add_argument("--max-len", type=int, dest="max_len")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--out", help="write output to a file")
    p_ver.set_defaults(func=cmd_verify)

    p_mat = sub.add_parser("matrix", help="print an exact matrix")
    p_mat.add_argument("object",
                       help=f"one of: {', '.join(MATRIX_OBJECTS)}")
    p_mat.add_argument("--spins", help="spin pair for rmatrix")
    p_mat.add_argument("--j", help="spin for spinrep/lmatrices/universal-t")
    p_mat.add_argument("--levels", type=int)
    p_mat.add_argument("--total", type=int)
    p_mat.add_argument("--deformed", action="store_true")
    p_mat.add_argument("--format", choices=("text", "json"), default="text")
    p_mat.add_argument("--eval", help="spot-evaluate entries, e.g. q=0.7")
    p_mat.add_argument("--out", help="write output to a file")
    p_mat.set_defaults(func=cmd_matrix)
    return top


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownTarget, UnknownObject, TooLarge) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except EngineError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
