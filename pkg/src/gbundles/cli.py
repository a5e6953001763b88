"""Command-line interface.

    gbundles classify  --surface genus=1 --group "U(1)"
    gbundles cohomology --complex M.json --coefficients "Z/2" --degree 1
    gbundles homology --wedge 3
    gbundles validate --complex M.json
    gbundles surface --surface crosscaps=2 --coefficients Z
    gbundles sphere --group "SO(3)" --degree 2
    gbundles oracle --surface genus=2 --group "Z/6"
    gbundles catalog

Exit status: 0 success, 1 domain error (invalid complex, violated
hypothesis, oracle disagreement), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classifier import classify, classify_sphere, surface_closed_form
from .cohomology import DEGREES, cohomology_uct, integral_homology
from .complex import CwComplex2, StandardSpace, build_standard, validate
from .errors import GBundlesError
from .groups import parse_abelian
from .oracle import finite_class_enumeration, h1_hom_counting, uct_vs_direct
from .structure import CATALOG_FAMILIES, parse_group_spec

COMMANDS = ("classify", "cohomology", "homology", "validate", "surface", "sphere", "oracle", "catalog")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbundles",
        description="Classify principal G-bundles over 2-dimensional CW-complexes.",
    )
    parser.add_argument("command", choices=COMMANDS)
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--complex", metavar="PATH", help="JSON complex description")
    src.add_argument("--surface", metavar="SPEC", help="genus=g, crosscaps=k or sphere")
    src.add_argument("--wedge", metavar="N", type=int, help="wedge of N circles")
    parser.add_argument("--group", metavar="EXPR", help='structure group, e.g. "SO(3)" or "U(1) x Z/2"')
    parser.add_argument("--coefficients", metavar="EXPR", help='abelian group, e.g. "Z + Z/2"')
    parser.add_argument("--degree", metavar="N", type=int)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--ascii", action="store_true", help="ASCII group rendering")
    return parser


def _complex(args) -> CwComplex2:
    if args.complex:
        return CwComplex2.load(args.complex)
    if args.surface:
        try:
            return build_standard(StandardSpace.parse(args.surface))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.wedge is not None:
        if args.wedge < 0:
            raise UsageError("--wedge needs a non-negative count")
        return build_standard(StandardSpace("wedge", args.wedge))
    raise UsageError(f"{args.command} needs one of --complex, --surface, --wedge")


def _require(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"{args.command} needs --{name}")
    return getattr(args, name)


def _emit(out, record, text, as_json):
    if as_json:
        out.write(json.dumps(record, ensure_ascii=False, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _cmd_classify(args, out):
    m = _complex(args)
    g = parse_group_spec(_require(args, "group"))
    result = classify(m, g)
    _emit(out, result.to_json(), result.report(ascii=args.ascii), args.json)
    return 0


def _cmd_cohomology(args, out):
    m = _complex(args)
    pi = parse_abelian(_require(args, "coefficients"))
    degrees = DEGREES if args.degree is None else (args.degree,)
    if args.degree is not None and args.degree not in DEGREES:
        raise UsageError("--degree must be in 0..3")
    groups = [cohomology_uct(m, pi, n) for n in degrees]
    record = {
        "complex": m.name,
        "coefficients": pi.to_json(),
        "cohomology": [{"degree": c.degree, "group": c.group.to_json()} for c in groups],
    }
    text = "\n".join(
        f"H^{c.degree}({m.name}; {pi.render(ascii=args.ascii)}) = {c.group.render(ascii=args.ascii)}"
        for c in groups
    )
    _emit(out, record, text, args.json)
    return 0


def _cmd_homology(args, out):
    m = _complex(args)
    h = integral_homology(m)
    record = {"complex": m.name, "homology": [h.degree(n).to_json() for n in range(3)]}
    text = "\n".join(f"H_{n}({m.name}) = {h.degree(n).render(ascii=args.ascii)}" for n in range(3))
    _emit(out, record, text, args.json)
    return 0


def _cmd_validate(args, out):
    m = _complex(args)
    report = validate(m)
    v, e, f = report.cell_counts
    lines = [
        f"complex: {report.name}",
        f"cells: {v} vertices, {e} edges, {f} faces",
        f"euler characteristic: {report.euler_characteristic}",
        f"path-connected: {'yes' if report.path_connected else 'no'}",
    ]
    lines += [f"error {err.code}: {err.message}" for err in report.errors]
    lines.append("valid" if report.ok else "INVALID")
    _emit(out, report.to_json(), "\n".join(lines), args.json)
    return 0 if report.ok else 1


def _cmd_surface(args, out):
    try:
        space = StandardSpace.parse(_require(args, "surface"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not space.is_surface:
        raise UsageError("surface needs genus=g, crosscaps=k or sphere")
    if args.coefficients is not None:
        pi = parse_abelian(args.coefficients)
        label = pi.render(ascii=args.ascii)
    else:
        g = parse_group_spec(_require(args, "group"))
        pi = g.pi1
        label = f"pi_1({g.name})"
    group = surface_closed_form(space, pi)
    rule = "M-comp" if space.is_orientable else "M-noncomp"
    record = {"surface": space.label(), "coefficients": pi.to_json(), "h2": group.to_json(), "citations": [rule]}
    text = f"H^2({space.label()}; {label}) = {group.render(ascii=args.ascii)}  [{rule}]"
    _emit(out, record, text, args.json)
    return 0


def _cmd_sphere(args, out):
    g = parse_group_spec(_require(args, "group"))
    n = 2 if args.degree is None else args.degree
    try:
        group = classify_sphere(g, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = {"sphere": n, "group": g.name, "classified_group": group.to_json(), "citations": ["sphere"]}
    text = f"B_G(S^{n}) = pi_{n - 1}({g.name}) = {group.render(ascii=args.ascii)}  [sphere]"
    _emit(out, record, text, args.json)
    return 0


def _cmd_oracle(args, out):
    m = _complex(args)
    reports = []
    if args.coefficients is not None:
        pi = parse_abelian(args.coefficients)
        reports += uct_vs_direct(m, pi)
        if pi.is_finite():
            reports.append(h1_hom_counting(m, pi))
    else:
        g = parse_group_spec(_require(args, "group"))
        if not g.pi1.is_trivial():
            reports += uct_vs_direct(m, g.pi1)
        if not g.pi0.is_trivial():
            reports += uct_vs_direct(m, g.pi0)
            if g.pi0.is_finite():
                reports.append(h1_hom_counting(m, g.pi0))
        reports.append(finite_class_enumeration(m, g))
    ok = all(r.agreement for r in reports if r.applicable)
    record = {"complex": m.name, "agreement": ok, "reports": [r.to_json() for r in reports]}
    text = "\n".join([r.line(ascii=args.ascii) for r in reports] + ["all checks agree" if ok else "DISAGREEMENT"])
    _emit(out, record, text, args.json)
    return 0 if ok else 1


def _cmd_catalog(args, out):
    rows = [
        {"family": family, "parameters": params, "pi0": pi0, "pi1": pi1}
        for family, params, pi0, pi1 in CATALOG_FAMILIES
    ]
    text = "\n".join(
        f"{family:<6} {params:<18} pi_0 = {pi0:<4} pi_1 = {pi1}"
        for family, params, pi0, pi1 in CATALOG_FAMILIES
    )
    _emit(out, {"catalog": rows}, text, args.json)
    return 0


HANDLERS = {
    "classify": _cmd_classify,
    "cohomology": _cmd_cohomology,
    "homology": _cmd_homology,
    "validate": _cmd_validate,
    "surface": _cmd_surface,
    "sphere": _cmd_sphere,
    "oracle": _cmd_oracle,
    "catalog": _cmd_catalog,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return HANDLERS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except GBundlesError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
