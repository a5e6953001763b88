"""Finitely generated abelian groups in invariant-factor form.

A group is ``Z^r + Z/d1 + ... + Z/dk`` with every ``di >= 2`` and
``di | d(i+1)``. Construction always canonicalises, so two groups are
isomorphic exactly when they compare equal.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GroupSpecError

INFINITE = "infinite"

UNICODE_PLUS = "⊕"


def _invariant_chain(orders: Iterable[int]) -> tuple[int, ...]:
    """Merge cyclic orders (all >= 1) into an invariant-factor chain.

    Pairwise replacement ``(a, b) -> (gcd, lcm)`` over all index pairs leaves
    a divisibility chain; the unit entries are then dropped.
    """
    a = sorted(orders)
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            g = math.gcd(a[i], a[j])
            a[i], a[j] = g, a[i] * a[j] // g
    return tuple(x for x in a if x > 1)


@dataclass(frozen=True, order=True)
class FgAbelianGroup:
    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        orders = [int(d) for d in self.invariant_factors]
        if any(d < 0 for d in orders):
            raise ValueError(f"negative cyclic order in {orders}")
        # Z/0 is Z
        extra_free = sum(1 for d in orders if d == 0)
        object.__setattr__(self, "free_rank", int(self.free_rank) + extra_free)
        object.__setattr__(self, "invariant_factors", _invariant_chain(d for d in orders if d))

    @classmethod
    def trivial(cls) -> FgAbelianGroup:
        return cls()

    @classmethod
    def free(cls, rank: int) -> FgAbelianGroup:
        return cls(rank)

    @classmethod
    def cyclic(cls, order: int) -> FgAbelianGroup:
        """``Z/order``; order 0 gives ``Z``."""
        return cls(0, (order,))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def cyclic_orders(self) -> tuple[int, ...]:
        """Orders of the cyclic summands, free part first, ``0`` standing for ``Z``."""
        return (0,) * self.free_rank + self.invariant_factors

    def __add__(self, other: FgAbelianGroup) -> FgAbelianGroup:
        return direct_sum(self, other)

    def __pow__(self, n: int) -> FgAbelianGroup:
        return FgAbelianGroup(self.free_rank * n, self.invariant_factors * n)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, data) -> FgAbelianGroup:
        if not isinstance(data, dict) or set(data) - {"free_rank", "factors"}:
            raise GroupSpecError(f"GROUP must be an object with free_rank and factors, got {data!r}")
        rank = data.get("free_rank", 0)
        factors = data.get("factors", [])
        if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
            raise GroupSpecError(f"free_rank must be a non-negative integer, got {rank!r}")
        if not isinstance(factors, list) or any(
            not isinstance(d, int) or isinstance(d, bool) or d < 1 for d in factors
        ):
            raise GroupSpecError(f"factors must be a list of positive integers, got {factors!r}")
        return cls(rank, tuple(factors))

    def render(self, ascii: bool = False) -> str:
        terms = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.invariant_factors]
        if not terms:
            return "0"
        return (" + " if ascii else f" {UNICODE_PLUS} ").join(terms)

    def __str__(self) -> str:
        return self.render()


def canonicalize(diagonal_presentation: Sequence[int], ambient_rank: int) -> FgAbelianGroup:
    """Group presented by ``Z^ambient_rank`` modulo a diagonal relation matrix.

    Entry ``di`` contributes ``Z/di``; coordinates beyond the listed entries
    stay free.
    """
    entries = list(diagonal_presentation)
    if any(d < 0 for d in entries):
        raise ValueError(f"diagonal entries must be non-negative: {entries}")
    if ambient_rank < len(entries):
        raise ValueError("ambient rank smaller than the number of relations")
    return FgAbelianGroup(ambient_rank - len(entries), tuple(entries))


def direct_sum(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(a.free_rank + b.free_rank, a.invariant_factors + b.invariant_factors)


def hom_group(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    """Hom(a, b), summed over pairs of cyclic factors.

    Hom(Z, B) = B, Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d, e).
    """
    free = a.free_rank * b.free_rank
    torsion = list(b.invariant_factors) * a.free_rank
    for d in a.invariant_factors:
        torsion.extend(math.gcd(d, e) for e in b.invariant_factors)
    return FgAbelianGroup(free, tuple(torsion))


def ext_group(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    """Ext^1(a, b): free summands of ``a`` contribute nothing, ``Z/d`` gives ``b/db``."""
    out = FgAbelianGroup()
    for d in a.invariant_factors:
        out = direct_sum(out, quotient_by_integer(b, d))
    return out


def quotient_by_integer(a: FgAbelianGroup, m: int) -> FgAbelianGroup:
    if m < 1:
        raise ValueError("m must be a positive integer")
    return FgAbelianGroup(
        0, (m,) * a.free_rank + tuple(math.gcd(d, m) for d in a.invariant_factors)
    )


def torsion_subgroup(a: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(0, a.invariant_factors)


def cardinality(a: FgAbelianGroup):
    """Order of ``a``, or :data:`INFINITE` when it has a free part."""
    if a.free_rank:
        return INFINITE
    return math.prod(a.invariant_factors)


def enumerate_elements(a: FgAbelianGroup) -> list[tuple[int, ...]]:
    """All elements as residue tuples in invariant-factor coordinates, identity first."""
    if a.free_rank:
        raise ValueError(f"cannot enumerate the infinite group {a}")
    return list(itertools.product(*(range(d) for d in a.invariant_factors)))


_TERM = re.compile(r"^(?:(0)|Z(?:\^(\d+)|/(\d+))?)$")


def parse_abelian(text: str) -> FgAbelianGroup:
    """Parse ``"0"``, ``"Z"``, ``"Z^2"``, ``"Z/6"`` and sums of them.

    Terms may be joined with ``"⊕"`` or ``"+"``. A JSON GROUP object
    (``{"free_rank": .., "factors": [..]}``) is accepted as well.
    """
    text = text.strip()
    if text.startswith("{"):
        import json

        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"malformed GROUP JSON: {exc}") from None
        return FgAbelianGroup.from_json(data)
    if not text:
        raise GroupSpecError("empty group expression")
    out = FgAbelianGroup()
    for raw in re.split(rf"[+{UNICODE_PLUS}]", text):
        term = raw.strip().replace(" ", "")
        match = _TERM.match(term)
        if match is None:
            raise GroupSpecError(f"cannot parse abelian group term {raw.strip()!r}")
        zero, power, modulus = match.groups()
        if zero:
            continue
        if power is not None:
            out = out + FgAbelianGroup(int(power))
        elif modulus is not None:
            if int(modulus) < 1:
                raise GroupSpecError("Z/m needs m >= 1")
            out = out + FgAbelianGroup.cyclic(int(modulus))
        else:
            out = out + FgAbelianGroup(1)
    return out
