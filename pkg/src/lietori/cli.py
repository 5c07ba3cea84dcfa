"""``lietori build|verify|export|lift --spec FILE``.

Exit codes: 0 when every check passes, 1 when some check fails (the report
is still written), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .eala import eala_axiom_checks, is_D_invariant, is_pair_invariant, lift_involution, validate_cocycle
from .errors import LieToriError
from .involutions import verify_involution
from .lattice import DegreeWindow
from .lie.checks import check_form, check_lie_torus
from .report import Report
from .spec_io import build_eala, build_involution, build_lie, export_json, load_spec
from .tori import build_torus
from .torus_checks import check_torus

SUITES = ("torus", "lietorus", "involution", "eala")


def _parser():
    p = argparse.ArgumentParser(prog="lietori", description="Exact window checks for Lie tori and EALAs.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("build", "verify", "export", "lift"):
        s = sub.add_parser(name)
        s.add_argument("--spec", required=True, help="JSON spec file")
        s.add_argument("--window", type=int, default=None, help="window radius R (default 2)")
        s.add_argument("--samples", type=int, default=200)
        s.add_argument("--seed", type=int, default=42)
        s.add_argument("--out", default=None, help="output path (default stdout)")
        s.add_argument("--format", choices=("json", "text"), default="json")
        if name == "verify":
            s.add_argument("--suite", choices=SUITES, required=True)
    return p


def _radius(args, spec):
    if args.window is not None:
        R = args.window
    else:
        R = (spec.get("window") or {}).get("radius", 2)
    if R < 0:
        raise LieToriError("window radius must be >= 0")
    return R


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, rep, extra=None):
    if args.format == "json":
        d = rep.to_dict()
        if extra:
            d.update(extra)
        text = json.dumps(d, indent=2) + "\n"
    else:
        text = rep.to_text() + "\n"
        for k, v in (extra or {}).items():
            text += f"{k}: {v}\n"
    _emit(args, text)
    return 0 if rep.passed() else 1


def _torus_spec(spec):
    return spec["coordinates"] if "coordinates" in spec and "family" not in spec else spec


def cmd_build(args, spec):
    R = _radius(args, spec)
    if "family" in spec:
        A = build_torus(spec)
        keys = sum(len(A.keys_at(d)) for d in DegreeWindow(R).enum(A.n))
        info = {"family": A.family, "rank": A.n, "variety": A.variety, "window_keys": keys}
    elif "D" in spec:
        E, L = build_eala(spec)
        info = {"algebra": repr(E), "root_system": repr(L.roots), "rank": L.n, "window_atoms": len(E.window_atoms(R))}
    else:
        L = build_lie(spec)
        info = {"construction": L.construction, "root_system": repr(L.roots), "rank": L.n, "window_atoms": len(L.window_atoms(R))}
    info["window"] = R
    text = json.dumps(info, indent=2) + "\n" if args.format == "json" else "".join(f"{k}: {v}\n" for k, v in info.items())
    _emit(args, text)
    return 0


def cmd_verify(args, spec):
    R = _radius(args, spec)
    suite = args.suite
    if suite == "torus":
        A = build_torus(_torus_spec(spec))
        full = A.family != "Albert"
        return _emit_report(args, check_torus(A, R, samples=args.samples, seed=args.seed, full_pairs=full))
    if suite == "lietorus":
        L = build_lie(spec.get("lie", spec))
        rep = check_lie_torus(L, R, seed=args.seed)
        rep.merge(check_form(L, min(R, 1), seed=args.seed, samples=args.samples), prefix="form.")
        return _emit_report(args, rep)
    if suite == "involution":
        lie_spec = spec.get("lie", spec)
        L = build_lie(lie_spec)
        tau = build_involution(L, spec if "involution" in spec else lie_spec)
        return _emit_report(args, verify_involution(L, tau, R, seed=args.seed))
    E, _ = build_eala(spec, validate=False)
    rep = Report(window=R)
    cocycle = validate_cocycle(E.D, E.kappa, min(R, 1))
    rep.merge(cocycle)
    if cocycle.passed():
        rep.merge(eala_axiom_checks(E, R, seed=args.seed))
    rep.window = R
    return _emit_report(args, rep)


def cmd_export(args, spec):
    L = build_lie(spec.get("lie", spec))
    _emit(args, export_json(L, _radius(args, spec)))
    return 0


def cmd_lift(args, spec):
    R = _radius(args, spec)
    E, L = build_eala(spec)
    tau = build_involution(L, spec)
    bar, F = lift_involution(E, tau, W=R)
    rep = verify_involution(E, bar, R, seed=args.seed)
    extra = {
        "D_invariant": is_D_invariant(E.D, R),
        "pair_invariant": is_pair_invariant(E.D, E.kappa, min(R, 1)),
        "codomain_is_E": F is E,
    }
    return _emit_report(args, rep, extra)


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "export": cmd_export, "lift": cmd_lift}


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        spec = load_spec(args.spec)
        return COMMANDS[args.command](args, spec)
    except (LieToriError, KeyError, TypeError, ValueError, OSError) as exc:
        print(f"lietori: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
