"""Cellular homology and cohomology with constant coefficients.

:func:`cohomology_uct` is the production route (universal coefficients on the
integral homology); :func:`cohomology_direct` works straight from the cochain
complex and serves as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import CwComplex2, boundary_matrices
from .groups import FgAbelianGroup, direct_sum, ext_group, hom_group
from .linalg import IntMatrix, cokernel_invariants, kernel_basis, kernel_rank, subquotient

DEGREES = (0, 1, 2, 3)


@dataclass(frozen=True)
class HomologyProfile:
    h0: FgAbelianGroup
    h1: FgAbelianGroup
    h2: FgAbelianGroup

    def degree(self, n: int) -> FgAbelianGroup:
        if n in (0, 1, 2):
            return (self.h0, self.h1, self.h2)[n]
        return FgAbelianGroup()


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    coefficients: FgAbelianGroup
    group: FgAbelianGroup

    def is_trivial(self) -> bool:
        return self.group.is_trivial()


def _check_degree(degree: int):
    if degree not in DEGREES:
        raise ValueError(f"cohomology degree must be in 0..3, got {degree}")


def integral_homology(m: CwComplex2) -> HomologyProfile:
    d1, d2 = boundary_matrices(m)
    h0 = cokernel_invariants(d1)
    h1 = subquotient(kernel_basis(d1), d2)
    h2 = FgAbelianGroup(kernel_rank(d2))
    return HomologyProfile(h0, h1, h2)


def cohomology_uct(m: CwComplex2, pi: FgAbelianGroup, degree: int) -> CohomologyGroup:
    """H^n(M; pi) = Hom(H_n M, pi) + Ext(H_{n-1} M, pi)."""
    _check_degree(degree)
    homology = integral_homology(m)
    below = homology.degree(degree - 1) if degree > 0 else FgAbelianGroup()
    group = direct_sum(hom_group(homology.degree(degree), pi), ext_group(below, pi))
    return CohomologyGroup(degree, pi, group)


def _coboundaries(m: CwComplex2) -> list[IntMatrix]:
    """``delta^n: C^n -> C^(n+1)`` for n = -1..3 as integer matrices (transposed boundaries)."""
    d1, d2 = boundary_matrices(m)
    c0, c1, c2 = m.cell_counts
    return [
        IntMatrix.zeros(c0, 0),  # delta^-1
        d1.T,
        d2.T,
        IntMatrix.zeros(0, c2),  # delta^2 into C^3 = 0
        IntMatrix.zeros(0, 0),  # delta^3
    ]


def _cyclic_cohomology(delta_in: IntMatrix, delta_out: IntMatrix, order: int) -> FgAbelianGroup:
    """ker(delta_out) / im(delta_in) on cochains with values in Z/order (Z if order is 0).

    Mod ``order`` the cocycles are the x in Z^c with ``delta_out x`` in
    ``order * Z^c'``; these are the projections of the kernel of
    ``[delta_out | order*I]``. The coboundaries gain ``order * Z^c``.
    """
    c = delta_out.cols
    if order == 0:
        return subquotient(kernel_basis(delta_out), delta_in)
    augmented = IntMatrix.hstack(
        [delta_out, IntMatrix.identity(delta_out.rows) * order], rows=delta_out.rows
    )
    kern = kernel_basis(augmented)
    cocycles = kern.submatrix(range(c), range(kern.cols))
    coboundaries = IntMatrix.hstack([delta_in, IntMatrix.identity(c) * order], rows=c)
    return subquotient(cocycles, coboundaries)


def cohomology_direct(m: CwComplex2, pi: FgAbelianGroup, degree: int) -> CohomologyGroup:
    _check_degree(degree)
    deltas = _coboundaries(m)
    delta_in, delta_out = deltas[degree], deltas[degree + 1]
    group = FgAbelianGroup()
    for order in pi.cyclic_orders:
        group = direct_sum(group, _cyclic_cohomology(delta_in, delta_out, order))
    return CohomologyGroup(degree, pi, group)
