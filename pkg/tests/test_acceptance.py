"""Exit criteria for the package; one pass/fail line per criterion.

All comparisons are exact (canonical-form equality). Run with ``-s`` to see
the summary lines, or execute this file directly.
"""

import itertools
import math
import random

import pytest

from gbundles.classifier import Verdict, classify, classify_sphere, witten_cross_check
from gbundles.cohomology import cohomology_direct, cohomology_uct
from gbundles.complex import StandardSpace, build_standard
from gbundles.errors import DimensionError, HypothesisViolation
from gbundles.groups import FgAbelianGroup, cardinality, ext_group, hom_group, quotient_by_integer
from gbundles.linalg import IntMatrix, smith_normal_form
from gbundles.oracle import h1_hom_counting
from gbundles.structure import catalog_examples, parse_group_spec, with_flags
from conftest import standard_spaces
from oracles import brute_hom_profile, torsion_profile_of

G = FgAbelianGroup
Z = G(1)
TRIV = G()
Z2 = G(0, (2,))


def report(number, passed, detail):
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")
    return passed


def test_criterion_1_u1_orientable():
    u1 = parse_group_spec("U(1)")
    bad = []
    for g in range(0, 6):
        space = StandardSpace("orientable", g) if g else StandardSpace("sphere")
        r = classify(build_standard(space), u1)
        if not (r.verdict is Verdict.ISOMORPHIC_TO_KERNEL and r.classified_group == Z):
            bad.append((g, r.classified_group))
    assert report(1, not bad, f"B_U(1)(Sigma_g) = Z for g = 0..5, failures {bad}")


def test_criterion_2_u1_nonorientable():
    u1 = parse_group_spec("U(1)")
    bad = []
    for k in range(1, 6):
        r = classify(build_standard(StandardSpace("nonorientable", k)), u1)
        if not (r.verdict is Verdict.ISOMORPHIC_TO_KERNEL and r.classified_group == Z2):
            bad.append((k, r.classified_group))
    assert report(2, not bad, f"B_U(1)(N_k) = Z/2 for k = 1..5, failures {bad}")


def test_criterion_3_sphere_formula():
    sphere = build_standard("sphere")
    bad = []
    for g in catalog_examples():
        r = classify(sphere, g)
        via_formula = classify_sphere(g, 2)
        got = r.classified_group
        if got != via_formula or via_formula != g.pi1:
            bad.append(g.name)
    named = {
        n: classify(sphere, parse_group_spec(n)).classified_group
        for n in ("U(1)", "SO(3)", "SU(2)", "SU(3)", "SU(5)")
    }
    ok = not bad and named == {"U(1)": Z, "SO(3)": Z2, "SU(2)": TRIV, "SU(3)": TRIV, "SU(5)": TRIV}
    assert report(3, ok, f"B_G(S^2) = pi_1(G) for {len(catalog_examples())} catalog groups, failures {bad}")


def test_criterion_4_trivial_bundle():
    bad = []
    spaces = standard_spaces(4, 4, 4)
    for name in ("SU(2)", "SU(3)", "Sp(1)"):
        g = parse_group_spec(name)
        for space in spaces:
            r = classify(build_standard(space), g)
            if not (r.verdict is Verdict.BOTH_TRIVIAL and r.cardinality == 1):
                bad.append((name, space.label()))
    assert report(4, not bad, f"SU(2), SU(3), Sp(1) trivial over {len(spaces)} builders, failures {bad}")


def test_criterion_5_witten():
    reports = [witten_cross_check(Z2, g) for g in range(0, 5)]
    ok = all(r.consistent and r.classified_group == Z2 for r in reports)
    assert report(5, ok, "G~/Z2 over Sigma_g classified by Z/2 for g = 0..4")


def test_criterion_6_discrete_groups():
    bad = []
    for g, m in itertools.product((1, 2, 3), (2, 3, 6)):
        M = build_standard(StandardSpace("orientable", g))
        r = classify(M, parse_group_spec(f"Z/{m}"))
        expected = G(0, (m,) * (2 * g))
        o = h1_hom_counting(M, G(0, (m,)))
        if not (
            r.verdict is Verdict.ISOMORPHIC_TO_QUOTIENT
            and r.classified_group == expected
            and o.agreement
            and o.oracle_value == m ** (2 * g) == cardinality(r.classified_group)
        ):
            bad.append((g, m))
    sample = h1_hom_counting(build_standard("genus=2"), G(0, (6,))).oracle_value
    assert report(6, not bad and sample == 1296, f"B_Z/m(Sigma_g) = (Z/m)^2g, oracle count g=2,m=6: {sample}")


def test_criterion_7_two_path_cohomology():
    coeffs = [Z, G(0, (2,)), G(0, (3,)), G(0, (4,)), G(0, (6,)), G(2), G(1, (2,))]
    spaces = standard_spaces(4, 4, 4)
    disagreements = []
    checked = 0
    for space in spaces:
        m = build_standard(space)
        for pi in coeffs:
            for n in range(4):
                checked += 1
                a, b = cohomology_uct(m, pi, n).group, cohomology_direct(m, pi, n).group
                if a != b:
                    disagreements.append((space.label(), str(pi), n, str(a), str(b)))
    assert report(7, not disagreements, f"{checked} (complex, coefficients, degree) cases, {len(disagreements)} disagreements")


def _finite_groups(max_order=64):
    out = set()
    for k in range(0, 7):
        for combo in itertools.combinations_with_replacement((2, 3, 4, 6, 8), k):
            if math.prod(combo) <= max_order:
                out.add(G(0, combo))
    return sorted(out)


def test_criterion_8_algebraic_substrate():
    rng = random.Random(8)
    snf_failures = 0
    for _ in range(1000):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        a = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)], c)
        d = smith_normal_form(a)
        nz = d.elementary_divisors
        diag = d.diagonal
        ok = (
            d.u @ a @ d.v == d.s
            and abs(d.u.determinant()) == 1
            and abs(d.v.determinant()) == 1
            and all(d.s[i, j] == 0 for i in range(r) for j in range(c) if i != j)
            and diag[: len(nz)] == nz
            and all(x > 0 for x in nz)
            and all(y % x == 0 for x, y in zip(nz, nz[1:]))
        )
        snf_failures += not ok
    groups = _finite_groups()
    group_failures = []
    for a in groups:
        for b in groups:
            size, profile = brute_hom_profile(a.invariant_factors, b.invariant_factors)
            h = hom_group(a, b)
            ext_oracle = TRIV
            for d in a.invariant_factors:
                ext_oracle = ext_oracle + quotient_by_integer(b, d)
            if cardinality(h) != size or torsion_profile_of(h) != profile or ext_group(a, b) != ext_oracle:
                group_failures.append((str(a), str(b)))
    ok = snf_failures == 0 and not group_failures
    assert report(
        8, ok,
        f"SNF: 1000 random matrices, {snf_failures} failures; Hom/Ext: {len(groups)}^2 group pairs, "
        f"{len(group_failures)} failures",
    )


def test_criterion_9_hypothesis_enforcement():
    torus = build_standard("genus=1")
    named = {}
    for flag in ("trivial_action", "pi0_abelian"):
        g = with_flags(parse_group_spec("Z/2"), **{flag: False})
        try:
            classify(torus, g)
            named[flag] = None
        except HypothesisViolation as exc:
            named[flag] = exc.flag if flag in str(exc) else None
    data = torus.to_dict()
    data["volumes"] = [{"name": "c", "boundary": [["f", 1], ["f", -1]]}]
    try:
        classify(data, parse_group_spec("U(1)"))
        dim_ok = False
    except DimensionError:
        dim_ok = True
    ok = named == {"trivial_action": "trivial_action", "pi0_abelian": "pi0_abelian"} and dim_ok
    assert report(9, ok, f"flag violations named {named}, 3-cell input rejected: {dim_ok}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
