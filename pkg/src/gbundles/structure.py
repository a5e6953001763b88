"""Structure groups, reduced to the homotopy data the classification uses.

A :class:`GroupDescriptor` records ``pi_0(G)``, ``pi_1(G)`` and the flags that
must hold for the exact sequence to apply. Named Lie groups resolve through
a small catalog of known fundamental groups.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace

from .errors import GroupSpecError
from .groups import FgAbelianGroup, direct_sum

CATALOG = "catalog"
EXPLICIT = "explicit"
PRODUCT = "product"
COVERING_QUOTIENT = "covering_quotient"

Z = FgAbelianGroup(1)
TRIVIAL = FgAbelianGroup()
Z2 = FgAbelianGroup.cyclic(2)


@dataclass(frozen=True)
class GroupDescriptor:
    name: str
    pi0: FgAbelianGroup
    pi1: FgAbelianGroup
    pi0_discrete: bool = True
    pi0_abelian: bool = True
    trivial_action: bool = True
    provenance: str = EXPLICIT

    def __post_init__(self):
        if self.pi0.is_trivial() and not self.pi0_discrete:
            # a one-point group of components is discrete
            object.__setattr__(self, "pi0_discrete", True)
        if self.provenance == CATALOG and not (
            self.pi0_discrete and self.pi0_abelian and self.trivial_action
        ):
            raise ValueError(f"catalog entry {self.name!r} must satisfy every hypothesis flag")

    @property
    def is_path_connected(self) -> bool:
        return self.pi0.is_trivial()

    @property
    def is_discrete(self) -> bool:
        """True for groups whose homotopy type is just their set of components."""
        return self.pi1.is_trivial() and self.pi0_discrete

    def to_spec(self) -> str:
        """Text that :func:`parse_group_spec` maps back to this descriptor."""
        if self.provenance == EXPLICIT:
            return json.dumps(
                {
                    "pi0": self.pi0.to_json(),
                    "pi1": self.pi1.to_json(),
                    "pi0_discrete": self.pi0_discrete,
                    "pi0_abelian": self.pi0_abelian,
                    "trivial_action": self.trivial_action,
                },
                separators=(",", ":"),
            )
        return self.name

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "pi0": self.pi0.to_json(),
            "pi1": self.pi1.to_json(),
            "pi0_discrete": self.pi0_discrete,
            "pi0_abelian": self.pi0_abelian,
            "trivial_action": self.trivial_action,
            "provenance": self.provenance,
        }


def _catalog(name, pi0, pi1):
    return GroupDescriptor(name, pi0, pi1, provenance=CATALOG)


_LIE = re.compile(r"^(U|SU|SO|Sp)\((\d+)\)$")
_TORUS = re.compile(r"^T\^(\d+)$")
_CYCLIC = re.compile(r"^Z/(\d+)$")


def _resolve_atom(text: str) -> GroupDescriptor:
    if text.startswith("{"):
        return _parse_explicit(text)
    compact = text.replace(" ", "")
    match = _LIE.match(compact)
    if match:
        family, n = match.group(1), int(match.group(2))
        name = f"{family}({n})"
        if family == "U":
            if n < 1:
                raise GroupSpecError("U(n) requires n >= 1")
            return _catalog(name, TRIVIAL, Z)
        if family == "SU":
            if n < 2:
                raise GroupSpecError("SU(n) is catalogued for n >= 2 only")
            return _catalog(name, TRIVIAL, TRIVIAL)
        if family == "Sp":
            if n < 1:
                raise GroupSpecError("Sp(n) requires n >= 1")
            return _catalog(name, TRIVIAL, TRIVIAL)
        if n == 3 or n >= 5:
            return _catalog(name, TRIVIAL, Z2)
        hint = " (use U(1) for SO(2))" if n == 2 else ""
        raise GroupSpecError(
            f"{name} is not in the catalog, which lists pi_1(SO(n)) = Z/2 only for n = 3 and "
            f"n >= 5{hint}; supply an explicit homotopy descriptor instead"
        )
    match = _TORUS.match(compact)
    if match:
        k = int(match.group(1))
        if k < 1:
            raise GroupSpecError("T^k requires k >= 1")
        return _catalog(f"T^{k}", TRIVIAL, FgAbelianGroup(k))
    match = _CYCLIC.match(compact)
    if match:
        m = int(match.group(1))
        if m < 1:
            raise GroupSpecError("Z/m requires m >= 1")
        return _catalog(f"Z/{m}", FgAbelianGroup.cyclic(m), TRIVIAL)
    if compact == "Z":
        return _catalog("Z", Z, TRIVIAL)
    if compact == "0":
        return _catalog("0", TRIVIAL, TRIVIAL)
    if re.match(r"^O\(\d+\)$", compact):
        raise GroupSpecError(
            f"{compact} is not in the catalog (only connected groups are listed); "
            "supply an explicit homotopy descriptor instead"
        )
    raise GroupSpecError(f"unknown group {text!r}")


def _parse_explicit(text: str) -> GroupDescriptor:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupSpecError(f"malformed explicit descriptor: {exc}") from None
    if not isinstance(data, dict):
        raise GroupSpecError("explicit descriptor must be a JSON object")
    allowed = {"name", "pi0", "pi1", "pi0_discrete", "pi0_abelian", "trivial_action"}
    unknown = set(data) - allowed
    if unknown:
        raise GroupSpecError(f"explicit descriptor has unknown fields {sorted(unknown)}")
    missing = {"pi0", "pi1"} - set(data)
    if missing:
        raise GroupSpecError(f"explicit descriptor is missing {sorted(missing)}")
    flags = {}
    for key in ("pi0_discrete", "pi0_abelian", "trivial_action"):
        value = data.get(key, True)
        if not isinstance(value, bool):
            raise GroupSpecError(f"{key} must be a boolean")
        flags[key] = value
    pi0 = FgAbelianGroup.from_json(data["pi0"])
    pi1 = FgAbelianGroup.from_json(data["pi1"])
    name = data.get("name") or f"explicit(pi0={pi0.render(ascii=True)}, pi1={pi1.render(ascii=True)})"
    return GroupDescriptor(str(name), pi0, pi1, provenance=EXPLICIT, **flags)


def _split_product(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        elif ch in "x×" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_group_spec(text: str) -> GroupDescriptor:
    """Resolve a group expression such as ``"SO(3)"``, ``"U(1) x Z/2"`` or explicit JSON."""
    text = text.strip()
    if not text:
        raise GroupSpecError("empty group expression")
    parts = _split_product(text)
    if any(not p for p in parts):
        raise GroupSpecError(f"malformed product expression {text!r}")
    result = _resolve_atom(parts[0])
    for part in parts[1:]:
        result = product_descriptor(result, _resolve_atom(part))
    return result


def product_descriptor(a: GroupDescriptor, b: GroupDescriptor) -> GroupDescriptor:
    """Homotopy groups of ``a x b`` are componentwise direct sums."""
    if b.provenance == CATALOG and b.name == "0":
        return a
    if a.provenance == CATALOG and a.name == "0":
        return b
    return GroupDescriptor(
        f"{a.to_spec()} x {b.to_spec()}",
        direct_sum(a.pi0, b.pi0),
        direct_sum(a.pi1, b.pi1),
        pi0_discrete=a.pi0_discrete and b.pi0_discrete,
        pi0_abelian=a.pi0_abelian and b.pi0_abelian,
        trivial_action=a.trivial_action and b.trivial_action,
        provenance=PRODUCT,
    )


def covering_quotient(gamma: FgAbelianGroup) -> GroupDescriptor:
    """Connected group ``G~/gamma`` with simply connected ``G~``, so ``pi_1 = gamma``."""
    if not gamma.is_finite():
        raise GroupSpecError(
            f"covering quotient needs a finite discrete subgroup, got {gamma}; "
            "describe such a group with an explicit descriptor"
        )
    return GroupDescriptor(
        f"G~/({gamma.render(ascii=True)})", TRIVIAL, gamma, provenance=COVERING_QUOTIENT
    )


# (family, parameter range, pi_0, pi_1) rows listed by the ``catalog`` command
CATALOG_FAMILIES = (
    ("U(n)", "n >= 1", "0", "Z"),
    ("SU(n)", "n >= 2", "0", "0"),
    ("Sp(n)", "n >= 1", "0", "0"),
    ("SO(n)", "n = 3 or n >= 5", "0", "Z/2"),
    ("T^k", "k >= 1", "0", "Z^k"),
    ("Z/m", "m >= 1, discrete", "Z/m", "0"),
    ("Z", "discrete", "Z", "0"),
    ("0", "trivial group", "0", "0"),
)


def catalog_examples(max_n: int = 6) -> list[GroupDescriptor]:
    """Representative catalog members, used by the CLI listing and the tests."""
    names = [f"U({n})" for n in range(1, max_n + 1)]
    names += [f"SU({n})" for n in range(2, max_n + 1)]
    names += [f"Sp({n})" for n in range(1, max_n + 1)]
    names += ["SO(3)"] + [f"SO({n})" for n in range(5, max_n + 5)]
    names += [f"T^{k}" for k in range(1, 4)]
    names += [f"Z/{m}" for m in (1, 2, 3, 4, 6)] + ["Z", "0"]
    return [parse_group_spec(n) for n in names]


def with_flags(g: GroupDescriptor, **flags) -> GroupDescriptor:
    """Copy of ``g`` as an explicit descriptor with some hypothesis flags replaced."""
    return replace(g, provenance=EXPLICIT, **flags)
