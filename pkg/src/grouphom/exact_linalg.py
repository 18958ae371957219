"""Exact integer matrix and lattice algebra.

Everything here works on Python ints, so intermediate entries never
overflow.  Matrices are immutable :class:`IntMatrix` values; the
algorithms copy them into plain lists of lists and operate in place on
the copies.

Lattices are spanned by *columns* (``LatticeBasis``), while the normal
form routines use the usual row conventions: ``hnf`` returns ``H = U M``
and ``snf`` returns ``S = U M V``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


class DimensionError(ValueError):
    pass


class NotInLattice(ValueError):
    """Raised when a vector is not an integer combination of a basis."""


class SubgroupNotContained(ValueError):
    pass


class IntMatrix:
    """Dense integer matrix with row-major storage.

    ``rows`` and ``cols`` are kept explicitly so that matrices with zero
    rows still know their width.
    """

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise DimensionError("column count required for a matrix with no rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise DimensionError(f"ragged row of length {len(row)}, expected {cols}")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows
        self._hash = None

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        for c in columns:
            if len(c) != rows:
                raise DimensionError(f"column of length {len(c)}, expected {rows}")
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(entries):
            out[i][i] = d
        return cls(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix([list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)], self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, cols={self.cols})"

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self.data], self.cols)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix([[k * a for a in r] for r in self.data], self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c) if a) for c in ocols] for r in self.data],
            other.cols,
        )

    def apply(self, v: Sequence[int]) -> Vector:
        """Matrix-vector product ``M v``."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for a matrix with {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, v) if a) for r in self.data)

    def __pow__(self, k: int) -> IntMatrix:
        if self.rows != self.cols:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative powers are not supported; use an explicit inverse")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise DimensionError("row counts differ")
        return IntMatrix([r + s for r, s in zip(self.data, other.data)], self.cols + other.cols)

    def direct_sum(self, other: IntMatrix) -> IntMatrix:
        out = [list(r) + [0] * other.cols for r in self.data]
        out += [[0] * self.cols + list(r) for r in other.data]
        return IntMatrix(out, self.cols + other.cols)

    def is_zero(self) -> bool:
        return all(not a for r in self.data for a in r)


# ---------------------------------------------------------------------------
# Row-echelon machinery shared by HNF, kernels and membership tests.


def _row_hnf(A: list[list[int]], ncols: int, U: list[list[int]] | None = None) -> list[int]:
    """Bring ``A`` (mutated) to row-style Hermite normal form.

    Row operations are mirrored on ``U`` when given.  Returns the pivot
    column of each nonzero row, in order.
    """
    m = len(A)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            if p != r:
                A[r], A[p] = A[p], A[r]
                if U is not None:
                    U[r], U[p] = U[p], U[r]
            prow = A[r]
            piv = prow[c]
            clean = True
            for i in nz:
                if i == p:
                    i = r
                elif i == r:
                    i = p
                if i == r:
                    continue
                row = A[i]
                q = row[c] // piv
                if q:
                    for k in range(c, ncols):
                        if prow[k]:
                            row[k] -= q * prow[k]
                    if U is not None:
                        urow, uprow = U[i], U[r]
                        for k, x in enumerate(uprow):
                            if x:
                                urow[k] -= q * x
                if row[c]:
                    clean = False
            if clean:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
                if U is not None:
                    U[r] = [-x for x in U[r]]
            prow = A[r]
            piv = prow[c]
            for i in range(r):
                row = A[i]
                q = row[c] // piv
                if q:
                    for k in range(c, ncols):
                        if prow[k]:
                            row[k] -= q * prow[k]
                    if U is not None:
                        urow, uprow = U[i], U[r]
                        for k, x in enumerate(uprow):
                            if x:
                                urow[k] -= q * x
            pivots.append(c)
            r += 1
    return pivots


def hnf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H = U @ M``.  ``H`` is in
    row echelon form, every pivot is positive, and the entries above a
    pivot lie in ``[0, pivot)``.
    """
    A = M.tolist()
    U = [[int(i == j) for j in range(M.rows)] for i in range(M.rows)]
    _row_hnf(A, M.cols, U)
    return IntMatrix(A, M.cols), IntMatrix(U, M.rows)


def row_hnf_basis(vectors: Iterable[Sequence[int]], dim: int) -> list[Vector]:
    """HNF of the rows spanned by ``vectors``; zero rows dropped."""
    A = [list(v) for v in vectors]
    for v in A:
        if len(v) != dim:
            raise DimensionError(f"vector of length {len(v)}, expected {dim}")
    pivots = _row_hnf(A, dim)
    return [tuple(A[i]) for i in range(len(pivots))]


# ---------------------------------------------------------------------------
# Smith normal form


def _smith_in_place(A: list[list[int]], m: int, n: int,
                    U: list[list[int]] | None = None,
                    V: list[list[int]] | None = None) -> None:
    """Diagonalize ``A`` with minimal-|entry| pivoting.

    ``U`` collects the row operations, ``V`` the column operations.
    """

    def row_axpy(dst: int, src: int, q: int) -> None:
        # row[dst] -= q * row[src]
        a, b = A[dst], A[src]
        for k in range(n):
            if b[k]:
                a[k] -= q * b[k]
        if U is not None:
            a, b = U[dst], U[src]
            for k in range(m):
                if b[k]:
                    a[k] -= q * b[k]

    def col_axpy(dst: int, src: int, q: int) -> None:
        for row in A:
            if row[src]:
                row[dst] -= q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    def swap_rows(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                return
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    row_axpy(i, t, A[i][t] // piv)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    col_axpy(j, t, A[t][j] // piv)
                    if A[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot row/column are clear; enforce divisibility of the rest
            bad = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    if row[j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_axpy(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]


def snf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``S = U @ M @ V``.

    ``S`` is diagonal with nonnegative entries ``d1 | d2 | ...``; zero
    entries trail the positive ones.
    """
    m, n = M.shape
    A = M.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    _smith_in_place(A, m, n, U, V)
    return IntMatrix(A, n), IntMatrix(U, m), IntMatrix(V, n)


def smith_invariants(rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Diagonal of the Smith form of the matrix with the given rows.

    Only the nonzero invariant factors are returned.  The matrix is first
    reduced to its row HNF, which keeps the Smith step small when there
    are many more rows than columns.
    """
    A = [list(r) for r in rows]
    pivots = _row_hnf(A, ncols)
    A = A[: len(pivots)]
    _smith_in_place(A, len(A), ncols)
    return [A[i][i] for i in range(len(A)) if A[i][i]]


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = M.rows
    if n != M.cols:
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    A = M.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_unimodular(M: IntMatrix) -> bool:
    if M.rows != M.cols:
        return False
    S, _, _ = snf(M)
    return S == IntMatrix.identity(M.rows)


def inverse(M: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix, via the HNF transform."""
    if M.rows != M.cols:
        raise DimensionError("inverse of a non-square matrix")
    H, U = hnf(M)
    if H != IntMatrix.identity(M.rows):
        raise ValueError("matrix is not unimodular")
    return U


# ---------------------------------------------------------------------------
# Lattices


@dataclass(frozen=True)
class AbelianGroupStructure:
    """``Z^free_rank`` plus cyclic torsion factors in a divisibility chain."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficient {t} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_invariants(cls, rank: int, diagonal: Iterable[int]) -> AbelianGroupStructure:
        """Cokernel of a map onto ``Z^rank`` with the given Smith diagonal."""
        nonzero = [abs(d) for d in diagonal if d]
        return cls(rank - len(nonzero), tuple(sorted(d for d in nonzero if d > 1)))

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z{t}" for t in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LatticeBasis:
    """A lattice in ``Z^ambient_dim`` given by linearly independent vectors."""

    ambient_dim: int
    vectors: tuple[Vector, ...] = ()
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        for v in vecs:
            if len(v) != self.ambient_dim:
                raise DimensionError(f"basis vector of length {len(v)} in dimension {self.ambient_dim}")
        if self.check and len(self._echelon[0]) != len(vecs):
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def spanned_by(cls, dim: int, vectors: Iterable[Sequence[int]]) -> LatticeBasis:
        """Canonical (HNF) basis of the lattice generated by ``vectors``."""
        return cls(dim, tuple(row_hnf_basis(vectors, dim)), check=False)

    @classmethod
    def from_matrix(cls, B: IntMatrix) -> LatticeBasis:
        return cls(B.rows, tuple(B.columns()))

    @classmethod
    def standard(cls, dim: int) -> LatticeBasis:
        return cls(dim, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)), check=False)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    @property
    def basis(self) -> IntMatrix:
        return IntMatrix.from_columns(self.vectors, self.ambient_dim)

    @cached_property
    def _echelon(self) -> tuple[list[list[int]], list[list[int]], list[int]]:
        # U @ rows(vectors) = E with E in row HNF; rows of E past the pivots are zero.
        k = len(self.vectors)
        A = [list(v) for v in self.vectors]
        U = [[int(i == j) for j in range(k)] for i in range(k)]
        pivots = _row_hnf(A, self.ambient_dim, U)
        return A, U, pivots

    @cached_property
    def hnf_rows(self) -> tuple[Vector, ...]:
        A, _, pivots = self._echelon
        return tuple(tuple(A[i]) for i in range(len(pivots)))

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Coordinates ``c`` with ``sum(c[i] * vectors[i]) == v``.

        Raises :class:`NotInLattice` if no integer solution exists.
        """
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in dimension {self.ambient_dim}")
        A, U, pivots = self._echelon
        rest = list(v)
        y = []
        for r, c in enumerate(pivots):
            x = rest[c]
            if x % A[r][c]:
                raise NotInLattice(v)
            q = x // A[r][c]
            y.append(q)
            if q:
                row = A[r]
                for k in range(c, self.ambient_dim):
                    if row[k]:
                        rest[k] -= q * row[k]
        if any(rest):
            raise NotInLattice(v)
        k = len(self.vectors)
        return tuple(sum(y[r] * U[r][j] for r in range(len(pivots)) if y[r]) for j in range(k))

    def contains(self, v: Sequence[int]) -> bool:
        try:
            self.coordinates(v)
        except NotInLattice:
            return False
        return True


def kernel(M: IntMatrix) -> LatticeBasis:
    """Z-basis of ``{v : M v = 0}``, returned in HNF."""
    n = M.cols
    A = M.T.tolist()
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots = _row_hnf(A, M.rows, U)
    return LatticeBasis.spanned_by(n, U[len(pivots):])


def lattice_membership(B: LatticeBasis, v: Sequence[int]) -> Vector:
    """Coordinates of ``v`` in the basis ``B``; raises ``NotInLattice``."""
    return B.coordinates(v)


def lattice_equal(A: LatticeBasis, B: LatticeBasis) -> bool:
    if A.ambient_dim != B.ambient_dim:
        raise DimensionError(f"ambient dimensions {A.ambient_dim} and {B.ambient_dim} differ")
    return A.hnf_rows == B.hnf_rows


def quotient_invariants(K: LatticeBasis, S: Iterable[Sequence[int]]) -> AbelianGroupStructure:
    """The abelian group ``K / <S>``.

    Every element of ``S`` must lie in ``K``; otherwise
    :class:`SubgroupNotContained` is raised.
    """
    coords = []
    for s in S:
        try:
            coords.append(K.coordinates(s))
        except NotInLattice:
            raise SubgroupNotContained(f"vector {tuple(s)} is not in the lattice") from None
    diag = smith_invariants(coords, K.rank) if coords else []
    return AbelianGroupStructure.from_invariants(K.rank, diag)


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
    return g
