"""Exact integer matrices and Smith normal form.

Everything here works over Python ints, so intermediate coefficient growth
never overflows. Matrices are small (a few thousand cells at most), and the
algorithms are the textbook ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense immutable integer matrix stored row-major.

    Shapes with zero rows or zero columns are legal and stand for the zero
    map into or out of the trivial module.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            data[i][i] = d
        return cls.from_rows(data, cols)

    @classmethod
    def hstack(cls, blocks: Iterable[IntMatrix], rows: int | None = None) -> IntMatrix:
        blocks = list(blocks)
        if rows is None:
            if not blocks:
                raise ValueError("cannot infer row count of an empty hstack")
            rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise ValueError("hstack blocks must share a row count")
        data = [[] for _ in range(rows)]
        for b in blocks:
            for i, r in enumerate(b.tolist()):
                data[i].extend(r)
        return cls.from_rows(data, sum(b.cols for b in blocks))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_rows(
            [[self[i, j] for j in col_idx] for i in row_idx], len(col_idx)
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a = self.tolist()
        b = other.tolist()
        out = []
        for i in range(self.rows):
            ai = a[i]
            out.append(
                [sum(ai[k] * b[k][j] for k in range(self.cols) if ai[k]) for j in range(other.cols)]
            )
        return IntMatrix.from_rows(out, other.cols)

    def __mul__(self, scalar: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(scalar * x for x in self.entries))

    __rmul__ = __mul__

    def __neg__(self) -> IntMatrix:
        return self * -1

    def is_zero(self) -> bool:
        return not any(self.entries)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.tolist()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"<{self.rows}x{self.cols} empty>"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.tolist())


@dataclass(frozen=True)
class SnfDecomposition:
    """Result of :func:`smith_normal_form`: ``u @ a @ v == s``."""

    s: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def source_shape(self) -> tuple[int, int]:
        return self.s.shape

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.s[i, i] for i in range(min(self.s.rows, self.s.cols)))

    @property
    def elementary_divisors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)

    @property
    def rank(self) -> int:
        return len(self.elementary_divisors)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for r in m:
        r[i], r[j] = r[j], r[i]


def _add_row(m, src, dst, q):
    # row_dst += q * row_src
    rs, rd = m[src], m[dst]
    for k in range(len(rd)):
        if rs[k]:
            rd[k] += q * rs[k]


def _add_col(m, src, dst, q):
    for r in m:
        if r[src]:
            r[dst] += q * r[src]


def _round_div(a: int, b: int) -> int:
    """Nearest-integer quotient; keeps remainders small in absolute value."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1 if (r > 0) == (b > 0) else -1
    return q


def smith_normal_form(a: IntMatrix) -> SnfDecomposition:
    """Diagonalise ``a`` by unimodular row and column operations.

    Pivots on a nonzero entry of minimal absolute value, clears its row and
    column by repeated Euclidean steps, and restores the divisibility chain
    by folding an offending row into the pivot row. Returns ``s, u, v`` with
    ``u @ a @ v == s``, the diagonal of ``s`` non-negative, each nonzero
    entry dividing the next and zeros trailing.
    """
    m_rows, n_cols = a.rows, a.cols
    A = a.tolist()
    U = IntMatrix.identity(m_rows).tolist()
    V = IntMatrix.identity(n_cols).tolist()

    t = 0
    while t < min(m_rows, n_cols):
        pivot = _min_abs_entry(A, t)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _swap_rows(A, t, pi)
            _swap_rows(U, t, pi)
        if pj != t:
            _swap_cols(A, t, pj)
            _swap_cols(V, t, pj)

        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m_rows):
                if A[i][t]:
                    q = _round_div(A[i][t], p)
                    _add_row(A, t, i, -q)
                    _add_row(U, t, i, -q)
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n_cols):
                if A[t][j]:
                    q = _round_div(A[t][j], p)
                    _add_col(A, t, j, -q)
                    _add_col(V, t, j, -q)
                    dirty = dirty or A[t][j] != 0
            if dirty:
                # a remainder smaller than the pivot survived: re-pivot on it
                pi, pj = _min_abs_in_cross(A, t)
                if pi != t:
                    _swap_rows(A, t, pi)
                    _swap_rows(U, t, pi)
                if pj != t:
                    _swap_cols(A, t, pj)
                    _swap_cols(V, t, pj)
                continue
            bad_row = _non_divisible_row(A, t)
            if bad_row is None:
                break
            _add_row(A, bad_row, t, 1)
            _add_row(U, bad_row, t, 1)

        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    return SnfDecomposition(
        IntMatrix.from_rows(A, n_cols),
        IntMatrix.from_rows(U, m_rows),
        IntMatrix.from_rows(V, n_cols),
    )


def _min_abs_entry(A, t):
    best = None
    best_val = 0
    for i in range(t, len(A)):
        row = A[i]
        for j in range(t, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best_val):
                best, best_val = (i, j), abs(x)
                if best_val == 1:
                    return best
    return best


def _min_abs_in_cross(A, t):
    best, best_val = (t, t), abs(A[t][t])
    for i in range(t + 1, len(A)):
        if A[i][t] and abs(A[i][t]) < best_val:
            best, best_val = (i, t), abs(A[i][t])
    for j in range(t + 1, len(A[t])):
        if A[t][j] and abs(A[t][j]) < best_val:
            best, best_val = (t, j), abs(A[t][j])
    return best


def _non_divisible_row(A, t):
    p = A[t][t]
    for i in range(t + 1, len(A)):
        for j in range(t + 1, len(A[i])):
            if A[i][j] % p:
                return i
    return None


def cokernel_invariants(a: IntMatrix):
    """Canonical form of ``Z^rows / a Z^cols``."""
    from .groups import FgAbelianGroup

    snf = smith_normal_form(a)
    divisors = snf.elementary_divisors
    return FgAbelianGroup(a.rows - len(divisors), tuple(d for d in divisors if d > 1))


def kernel_rank(a: IntMatrix) -> int:
    return a.cols - smith_normal_form(a).rank


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of ``ker a`` (a ``cols x nullity`` matrix).

    They are the trailing columns of the right transform ``v``, which is
    unimodular, so they span the saturated kernel.
    """
    snf = smith_normal_form(a)
    r = snf.rank
    return snf.v.submatrix(range(a.cols), range(r, a.cols))


def image_basis(gens: IntMatrix) -> IntMatrix:
    """Z-basis of the column span of ``gens``.

    With ``u g v = s`` we have ``g v = u^-1 s``, whose first ``rank`` columns
    are independent and span the same lattice.
    """
    snf = smith_normal_form(gens)
    return (gens @ snf.v).submatrix(range(gens.rows), range(snf.rank))


def solve_integer(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Return an integer ``x`` with ``a @ x == b``.

    Raises ``ValueError`` when no integral solution exists.
    """
    if a.rows != b.rows:
        raise ValueError("row mismatch in solve_integer")
    snf = smith_normal_form(a)
    y = (snf.u @ b).tolist()
    diag = snf.diagonal
    z = [[0] * b.cols for _ in range(a.cols)]
    for i in range(a.rows):
        d = diag[i] if i < len(diag) else 0
        for j in range(b.cols):
            if d == 0:
                if y[i][j] != 0:
                    raise ValueError("system has no solution")
            else:
                q, r = divmod(y[i][j], d)
                if r:
                    raise ValueError("system has no integral solution")
                z[i][j] = q
    return snf.v @ IntMatrix.from_rows(z, b.cols)


def subquotient(kernel_gens: IntMatrix, image_gens: IntMatrix):
    """Isomorphism type of ``K / I`` for lattices ``I <= K <= Z^n``.

    ``kernel_gens`` and ``image_gens`` hold generators of K and I as columns
    (both with ``n`` rows). I is rewritten in a basis of K by an exact solve,
    then the cokernel is read off the Smith form.
    """
    if kernel_gens.rows != image_gens.rows:
        raise ValueError("generator matrices live in different ambient lattices")
    basis = image_basis(kernel_gens)
    if image_gens.cols == 0 or image_gens.is_zero():
        from .groups import FgAbelianGroup

        return FgAbelianGroup(basis.cols)
    coords = solve_integer(basis, image_gens)
    return cokernel_invariants(coords)
