"""Command-line front end: ``mincones <verb> ...``.

Exit status: 0 on success, 1 on a mathematical failure, 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from . import acceptance
from .classify import congruence_class_count, congruence_table, delta, realizability_scan
from .clifford import ResourceGuard, direct_sum, parse_system, system_invariants, verify_system
from .cones import (
    cartan_cubic,
    clifford_cubic,
    determinant_cone,
    fkm_quartic,
    hsiang_cubic,
    parse_cone,
    quadric_cone,
    reducible_example,
)
from .diffgeom import laplacian, verify_eigenfunction
from .grammar import PolySyntaxError, parse_poly
from .polynomial import DimensionError, Polynomial

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2
FAMILIES = ("clifford", "quadric", "det", "cartan", "hsiang", "reducible", "fkm")


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit a JSON object instead of key: value lines")
    p.add_argument("--timing", action="store_true", help="include elapsed times (output no longer reproducible)")
    p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="mincones", description="Exact workbench for algebraic minimal cones.")
    sub = parser.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a cone polynomial")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("--q", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--kplus", type=int)
    c.add_argument("--kminus", type=int)
    c.add_argument("--system", action="store_true", help="emit the Clifford system instead of the cone")

    for verb, text in (("verify", "check L(f) = 0 mod f"), ("invariants", "invariants of a cone or Clifford system")):
        v = sub.add_parser(verb, parents=[common], help=text)
        v.add_argument("--input", metavar="PATH", help="read from PATH instead of stdin")

    k = sub.add_parser("classify", parents=[common], help="admissible pairs and congruence classes for n")
    k.add_argument("--n", type=int, required=True)

    s = sub.add_parser("scan", parents=[common], help="list non-realizable dimensions")
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)

    t = sub.add_parser("table", parents=[common], help="reproduce a table")
    t.add_argument("which", choices=("congruence",))
    t.add_argument("--max-n", type=int, required=True)

    st = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    st.add_argument("--budget-seconds", type=float, default=0.0)
    return parser


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"construct {args.family} requires --{name}")


def _forbid(args, allowed: Sequence[str]) -> None:
    for name in ("q", "m", "p", "d", "kplus", "kminus"):
        if name not in allowed and getattr(args, name) is not None:
            raise UsageError(f"construct {args.family} does not take --{name}")


def _system_from_args(args):
    _forbid(args, ("q", "m", "kplus", "kminus"))
    _need(args, "q", "m")
    if args.q < 1 or args.m < 1:
        raise UsageError("--q and --m must be positive")
    d = delta(args.q)
    if args.m % d:
        raise UsageError(f"no Clifford system with q={args.q} on R^{2 * args.m}: delta(q)={d} does not divide m")
    k = args.m // d
    kminus = args.kminus if args.kminus is not None else (k - args.kplus if args.kplus is not None else 0)
    kplus = args.kplus if args.kplus is not None else k - kminus
    if kplus < 0 or kminus < 0 or kplus + kminus != k:
        raise UsageError(f"--kplus + --kminus must equal m/delta(q) = {k}")
    return direct_sum(args.q, kplus, kminus)


def _construct(args) -> str:
    fam = args.family
    if args.system and fam not in ("clifford", "fkm"):
        raise UsageError("--system only applies to clifford and fkm")
    if fam in ("clifford", "fkm"):
        system = _system_from_args(args)
        if args.system:
            return system.serialize()
        spec = clifford_cubic(system) if fam == "clifford" else fkm_quartic(system)
    elif fam == "quadric":
        _forbid(args, ("p", "q"))
        _need(args, "p", "q")
        spec = quadric_cone(args.p, args.q)
    elif fam == "det":
        _forbid(args, ("m",))
        _need(args, "m")
        spec = determinant_cone(args.m)
    elif fam == "cartan":
        _forbid(args, ("d",))
        _need(args, "d")
        spec = cartan_cubic(args.d)
    else:
        _forbid(args, ())
        spec = hsiang_cubic() if fam == "hsiang" else reducible_example()
    if args.json:
        return json.dumps(
            {"family": spec.family, "n": spec.n, "params": dict(spec.params), "polynomial": str(spec.polynomial)},
            sort_keys=True,
        ) + "\n"
    return spec.serialize()


def _read_input(path: Optional[str], stdin: TextIO) -> str:
    if path is None:
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_polynomial(text: str) -> Polynomial:
    """Accept a serialized cone or a bare polynomial line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("empty input")
    if lines[0].startswith("cone "):
        return parse_cone(text).polynomial
    if len(lines) != 1:
        raise UsageError("expected one polynomial line or a 'cone ...' block")
    return parse_poly(lines[0])


def _verify(args, stdin: TextIO) -> tuple[str, int]:
    f = read_polynomial(_read_input(args.input, stdin))
    if f.is_constant():
        raise UsageError("verify needs a nonconstant polynomial")
    report = verify_eigenfunction(f)
    out = report.to_json(args.timing) if args.json else report.render(args.timing)
    return out, EXIT_OK if report.is_eigenfunction else EXIT_MATH


def _invariants(args, stdin: TextIO) -> tuple[str, int]:
    text = _read_input(args.input, stdin)
    if text.lstrip().startswith("clifford"):
        system = parse_system(text)
        check = verify_system(system)
        q, m, omega = system_invariants(system)
        fields = {
            "valid": str(bool(check)).lower(),
            "q": str(q),
            "m": str(m),
            "omega_trace_abs": "undefined" if omega is None else str(omega),
        }
        if not check:
            fields["failure"] = check.message
        status = EXIT_OK if check else EXIT_MATH
    else:
        f = read_polynomial(text)
        report = verify_eigenfunction(f) if not f.is_constant() else None
        fields = {
            "n": str(f.nvars),
            "degree": str(f.degree()),
            "homogeneous": str(f.is_homogeneous()).lower(),
            "harmonic": str(laplacian(f).is_zero()).lower(),
        }
        if report is not None:
            sub = report.fields()
            for key in ("eigenfunction", "radial_constant", "tau"):
                fields[key] = sub[key]
        status = EXIT_OK
    return _render(fields, args.json), status


def _render(fields: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(fields, sort_keys=True) + "\n"
    return "".join(f"{k}: {v}\n" for k, v in fields.items())


def _classify(args) -> str:
    report = congruence_class_count(args.n)
    return report.to_json() if args.json else report.render()


def _scan(args) -> str:
    bad = realizability_scan(args.n_from, args.n_to)
    if args.json:
        return json.dumps({"from": args.n_from, "to": args.n_to, "non_realizable": bad}, sort_keys=True) + "\n"
    lines = [f"from: {args.n_from}", f"to: {args.n_to}", f"non_realizable_count: {len(bad)}"]
    lines += [f"non_realizable: {n}" for n in bad]
    return "\n".join(lines) + "\n"


def _table(args) -> str:
    rows = congruence_table(args.max_n)
    if args.json:
        return json.dumps({"congruence": {str(n): c for n, c in rows}}, sort_keys=True) + "\n"
    return "".join(f"n={n} classes={c}\n" for n, c in rows)


def _selftest(args, out: TextIO) -> int:
    outcomes = []
    for c in acceptance.CRITERIA:
        o = acceptance.run_criterion(c, args.budget_seconds)
        outcomes.append(o)
        if not args.json:
            out.write(o.line(args.timing) + "\n")
            out.flush()
    passed = sum(o.ok for o in outcomes)
    if args.json:
        payload = {
            "criteria": [{"number": o.criterion.number, "ok": o.ok, "detail": o.detail} for o in outcomes],
            "passed": passed,
            "total": len(outcomes),
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(f"summary: {passed}/{len(outcomes)} passed\n")
    return EXIT_OK if passed == len(outcomes) else EXIT_MATH


def run(argv: Optional[Sequence[str]] = None, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = stdout
    handle = None
    try:
        if args.output:
            handle = out = open(args.output, "w", encoding="utf-8")
        status = EXIT_OK
        if args.verb == "construct":
            text = _construct(args)
        elif args.verb == "verify":
            text, status = _verify(args, stdin)
        elif args.verb == "invariants":
            text, status = _invariants(args, stdin)
        elif args.verb == "classify":
            text = _classify(args)
        elif args.verb == "scan":
            text = _scan(args)
        elif args.verb == "table":
            text = _table(args)
        else:
            return _selftest(args, out)
        out.write(text)
        return status
    except PolySyntaxError as exc:
        stderr.write(f"mincones: parse error: {exc}\n")
        return EXIT_USAGE
    except (UsageError, ResourceGuard, DimensionError, ValueError, OSError) as exc:
        stderr.write(f"mincones: {exc}\n")
        return EXIT_USAGE
    finally:
        if handle is not None:
            handle.close()


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
