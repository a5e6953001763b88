"""Classification of principal G-bundles over 2-dimensional CW-complexes.

Equivalence classes of principal G-bundles over a path-connected pointed
2-complex M sit in a short exact sequence of pointed sets

    0 -> H^2(M; pi_1 G) -> B_G(M) -> H^1(M; pi_0 G) -> 0

provided pi_0 G is abelian and discrete and acts trivially on the higher
homotopy groups. When one flanking term vanishes B_G(M) is isomorphic to the
other; when both are nontrivial the extension is left undetermined.

Citation tags used in reports name the rule applied:

    HBH              the exact sequence itself
    B-H1             pi_1 G = 0, so B_G(M) = H^1(M; pi_0 G)
    B-H1a, K-Bpi     discrete G, BG = K(G, 1), so B_G(M) = H^1(M; G)
    B-H2             G path-connected, so B_G(M) = H^2(M; pi_1 G)
    BG-U1            G = U(1), BU(1) = K(Z, 2)
    M-comp           H^2(M; pi) = pi for closed orientable surfaces
    M-noncomp        H^2(M; pi) = pi/2pi for closed non-orientable surfaces
    sphere           B_G(S^n) = pi_(n-1) G
    trivial-bundle   pi_0 G = pi_1 G = 0: only the product bundle exists
    witten           G = G~/Gamma over a closed orientable surface: B_G(M) = Gamma
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cohomology import CohomologyGroup, cohomology_uct
from .complex import CwComplex2, StandardSpace, build_standard, recognize_standard, require_valid
from .errors import HypothesisViolation
from .groups import INFINITE, FgAbelianGroup, cardinality, quotient_by_integer
from .structure import COVERING_QUOTIENT, GroupDescriptor, covering_quotient

UNKNOWN = "unknown"


class Verdict(str, enum.Enum):
    ISOMORPHIC_TO_KERNEL = "IsomorphicToKernel"
    ISOMORPHIC_TO_QUOTIENT = "IsomorphicToQuotient"
    BOTH_TRIVIAL = "BothTrivial"
    EXTENSION_UNDETERMINED = "ExtensionUndetermined"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ClassificationResult:
    complex_name: str
    group_name: str
    kernel_term: CohomologyGroup
    quotient_term: CohomologyGroup
    verdict: Verdict
    classified_group: FgAbelianGroup | None
    cardinality: int | str
    applied_shortcuts: tuple[str, ...] = field(default_factory=tuple)

    @property
    def citations(self) -> tuple[str, ...]:
        return self.applied_shortcuts

    def to_json(self) -> dict:
        return {
            "complex": self.complex_name,
            "group": self.group_name,
            "verdict": self.verdict.value,
            "kernel": self.kernel_term.group.to_json(),
            "quotient": self.quotient_term.group.to_json(),
            "classified_group": None if self.classified_group is None else self.classified_group.to_json(),
            "cardinality": self.cardinality,
            "citations": list(self.applied_shortcuts),
        }

    def report(self, ascii: bool = False) -> str:
        def r(g):
            return g.render(ascii=ascii)

        B = "B_G(M)" if ascii else "𝓑_G(M)"
        iso = "=~" if ascii else "≅"
        lines = [
            f"complex: {self.complex_name}",
            f"group:   {self.group_name}",
            f"exact sequence: 0 -> H^2(M; pi_1 G) = {r(self.kernel_term.group)} -> {B} "
            f"-> H^1(M; pi_0 G) = {r(self.quotient_term.group)} -> 0",
        ]
        case = {
            Verdict.ISOMORPHIC_TO_KERNEL: "H^1(M; pi_0 G) vanishes, the sequence collapses onto its kernel",
            Verdict.ISOMORPHIC_TO_QUOTIENT: "H^2(M; pi_1 G) vanishes, the sequence collapses onto its quotient",
            Verdict.BOTH_TRIVIAL: "both flanking terms vanish, every bundle is trivial",
            Verdict.EXTENSION_UNDETERMINED: "both flanking terms are nontrivial; "
            "the extension is not determined by this data",
        }[self.verdict]
        lines.append(f"case:    {self.verdict.value} ({case})")
        if self.classified_group is not None:
            lines.append(f"result:  {B} {iso} {r(self.classified_group)}")
        lines.append(f"cardinality: {self.cardinality}")
        lines.append(f"citations: {', '.join(self.applied_shortcuts)}")
        return "\n".join(lines)


def check_hypotheses(g: GroupDescriptor):
    if not g.pi0_abelian:
        raise HypothesisViolation("pi0_abelian", f"pi_0 of {g.name} is declared non-abelian")
    if not g.pi0_discrete:
        raise HypothesisViolation("pi0_discrete", f"pi_0 of {g.name} is declared non-discrete")
    if not g.trivial_action:
        raise HypothesisViolation(
            "trivial_action", f"pi_0 of {g.name} is declared to act non-trivially on higher homotopy"
        )


def _coerce_complex(m) -> CwComplex2:
    if isinstance(m, CwComplex2):
        return m
    if isinstance(m, dict):
        return CwComplex2.from_dict(m)
    if isinstance(m, (str, StandardSpace)):
        return build_standard(m)
    raise TypeError(f"cannot interpret {type(m).__name__} as a 2-complex")


def classify(m, g: GroupDescriptor) -> ClassificationResult:
    """Compute both flanking cohomology groups and decide what they determine.

    ``m`` is a :class:`CwComplex2`, a JSON-style dict in the complex file
    format, or a standard-space spec such as ``"genus=2"``.
    """
    m = require_valid(_coerce_complex(m))
    check_hypotheses(g)
    kernel = cohomology_uct(m, g.pi1, 2)
    quotient = cohomology_uct(m, g.pi0, 1)

    citations = ["HBH"]
    k_triv, q_triv = kernel.is_trivial(), quotient.is_trivial()
    if k_triv and q_triv:
        verdict, group = Verdict.BOTH_TRIVIAL, FgAbelianGroup()
    elif q_triv:
        verdict, group = Verdict.ISOMORPHIC_TO_KERNEL, kernel.group
    elif k_triv:
        verdict, group = Verdict.ISOMORPHIC_TO_QUOTIENT, quotient.group
    else:
        verdict, group = Verdict.EXTENSION_UNDETERMINED, None

    if g.pi1.is_trivial():
        citations.append("B-H1")
        if g.pi0_discrete and not g.pi0.is_trivial():
            citations += ["B-H1a", "K-Bpi"]
    if g.is_path_connected:
        citations.append("B-H2")
        if g.name == "U(1)":
            citations.append("BG-U1")
    if g.pi0.is_trivial() and g.pi1.is_trivial():
        citations.append("trivial-bundle")

    space = recognize_standard(m)
    if space is not None and space.is_surface and verdict is not Verdict.EXTENSION_UNDETERMINED:
        if surface_closed_form(space, g.pi1) == kernel.group:
            citations.append("M-comp" if space.is_orientable else "M-noncomp")
        if space.kind == "sphere":
            citations.append("sphere")
        if g.provenance == COVERING_QUOTIENT and space.is_orientable:
            citations.append("witten")

    if group is None:
        count = UNKNOWN
    else:
        count = cardinality(group)
    return ClassificationResult(
        m.name, g.name, kernel, quotient, verdict, group, count, tuple(citations)
    )


def classify_sphere(g: GroupDescriptor, n: int) -> FgAbelianGroup:
    """Bundles over S^n correspond to pi_(n-1)(G); only n = 1, 2 are available here."""
    if n not in (1, 2):
        raise ValueError(f"sphere dimension must be 1 or 2, got {n}")
    check_hypotheses(g)
    return g.pi0 if n == 1 else g.pi1


def surface_closed_form(surface: StandardSpace | str, pi: FgAbelianGroup) -> FgAbelianGroup:
    """H^2 of a closed surface with coefficients ``pi``, without any matrix work."""
    if isinstance(surface, str):
        surface = StandardSpace.parse(surface)
    if not surface.is_surface:
        raise ValueError(f"{surface.label()} is not a closed surface")
    if surface.is_orientable:
        return pi
    return quotient_by_integer(pi, 2)


@dataclass(frozen=True)
class WittenReport:
    gamma: FgAbelianGroup
    genus: int
    classified_group: FgAbelianGroup | None
    consistent: bool

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma.to_json(),
            "genus": self.genus,
            "classified_group": None if self.classified_group is None else self.classified_group.to_json(),
            "consistent": self.consistent,
        }


def witten_cross_check(gamma: FgAbelianGroup, genus: int) -> WittenReport:
    """Bundles for ``G~/gamma`` over a genus-``genus`` surface should be counted by gamma."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    space = StandardSpace("orientable", genus) if genus else StandardSpace("sphere")
    result = classify(build_standard(space), covering_quotient(gamma))
    got = result.classified_group
    return WittenReport(gamma, genus, got, got == gamma)


__all__ = [
    "INFINITE",
    "UNKNOWN",
    "ClassificationResult",
    "Verdict",
    "WittenReport",
    "check_hypotheses",
    "classify",
    "classify_sphere",
    "surface_closed_form",
    "witten_cross_check",
]
