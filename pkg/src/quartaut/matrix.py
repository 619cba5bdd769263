"""Square matrices over Q(ζ_N) and exact linear algebra (inverse, determinant, kernels)."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from quartaut.cyclofield import ConductorError, CycScalar, FieldContext, context_new, embed

Entry = Union[CycScalar, int, Fraction]


class SingularMatrixError(ValueError):
    """A matrix that must be invertible is not."""


@dataclass(frozen=True)
class SquareMatrix:
    n: int
    ctx: FieldContext
    rows: tuple[tuple[CycScalar, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]], ctx: FieldContext) -> 'SquareMatrix':
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError(f"Matrix is not square: {[len(row) for row in rows]}")
        return cls(n, ctx, tuple(tuple(ctx.lift(e) for e in row) for row in rows))

    @classmethod
    def identity(cls, n: int, ctx: FieldContext) -> 'SquareMatrix':
        return cls.diag([1] * n, ctx)

    @classmethod
    def diag(cls, entries: Sequence[Entry], ctx: FieldContext) -> 'SquareMatrix':
        n = len(entries)
        return cls.of([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ctx)

    @classmethod
    def from_columns(
        cls,
        cols: Sequence[int],
        ctx: FieldContext,
        scales: Optional[Sequence[Entry]] = None,
    ) -> 'SquareMatrix':
        """Matrix whose k-th column is `scales[k]·e_{cols[k]}` (1-based), e.g. [e3,e1,e2,e4]."""
        n = len(cols)
        if sorted(cols) != list(range(1, n + 1)):
            raise ValueError(f"Columns must be a permutation of 1..{n}: {list(cols)}")
        scales = scales or [1] * n
        rows = [[0] * n for _ in range(n)]
        for k, (c, s) in enumerate(zip(cols, scales)):
            rows[c - 1][k] = s
        return cls.of(rows, ctx)

    @property
    def conductor(self) -> int:
        return self.ctx.conductor

    def __getitem__(self, ij: tuple[int, int]) -> CycScalar:
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: 'SquareMatrix'):
        if other.n != self.n:
            raise ValueError(f"Dimension mismatch: {self.n} vs {other.n}")
        if other.ctx.conductor != self.ctx.conductor:
            raise ConductorError(f"Conductor mismatch: {self.conductor} vs {other.conductor}")

    def __matmul__(self, other: 'SquareMatrix') -> 'SquareMatrix':
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        rows = []
        for row in self.rows:
            nz = [(k, a) for k, a in enumerate(row) if a]
            out = []
            for j in range(n):
                col = cols[j]
                acc = self.ctx.zero
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                out.append(acc)
            rows.append(tuple(out))
        return SquareMatrix(n, self.ctx, tuple(rows))

    def __add__(self, other: 'SquareMatrix') -> 'SquareMatrix':
        self._check(other)
        return SquareMatrix(self.n, self.ctx, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __sub__(self, other: 'SquareMatrix') -> 'SquareMatrix':
        return self + other.scale(-1)

    def scale(self, c: Entry) -> 'SquareMatrix':
        c = self.ctx.lift(c)
        return SquareMatrix(self.n, self.ctx, tuple(tuple(a * c for a in row) for row in self.rows))

    def __pow__(self, k: int) -> 'SquareMatrix':
        if k < 0:
            return self.inverse() ** -k
        result = SquareMatrix.identity(self.n, self.ctx)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self) -> 'SquareMatrix':
        return SquareMatrix(self.n, self.ctx, tuple(zip(*self.rows)))

    def apply(self, vec: Sequence) -> tuple:
        """M·v for a column vector v."""
        return tuple(sum((a * v for a, v in zip(row, vec) if a), self.ctx.zero) for row in self.rows)

    def embed(self, M: int) -> 'SquareMatrix':
        if M == self.conductor:
            return self
        return SquareMatrix(self.n, context_new(M), tuple(tuple(embed(a, M) for a in row) for row in self.rows))

    def det(self) -> CycScalar:
        return bareiss_det([list(row) for row in self.rows], self.ctx)

    def inverse(self) -> 'SquareMatrix':
        """Gauss–Jordan inverse; pivots on the first nonzero entry of each column."""
        n = self.n
        ctx = self.ctx
        aug = [list(row) + [ctx.one if i == j else ctx.zero for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise SingularMatrixError(f"Matrix is singular (no pivot in column {col + 1})")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [a * inv for a in aug[col]]
            for r in range(n):
                if r == col:
                    continue
                f = aug[r][col]
                if f:
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return SquareMatrix(n, ctx, tuple(tuple(row[n:]) for row in aug))

    def is_identity(self) -> bool:
        return self.scalar_value() == 1

    def scalar_value(self) -> Optional[CycScalar]:
        """c if the matrix is c·E, else None."""
        c = self.rows[0][0]
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                if (i == j and a != c) or (i != j and a):
                    return None
        return c


def bareiss_det(rows: list[list[CycScalar]], ctx: FieldContext) -> CycScalar:
    """Fraction-free determinant (Bareiss); consumes `rows`."""
    n = len(rows)
    if n == 0:
        return ctx.one
    sign = 1
    prev = ctx.one
    for k in range(n - 1):
        if not rows[k][k]:
            swap = next((r for r in range(k + 1, n) if rows[r][k]), None)
            if swap is None:
                return ctx.zero
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pkk = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pkk - rows[i][k] * rows[k][j]) / prev
        prev = pkk
    det = rows[n - 1][n - 1]
    return det if sign > 0 else -det


def laplace_det(rows: Sequence[Sequence], zero):
    """Cofactor expansion along the first row, for entries in any commutative ring (e.g. forms)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = zero
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * laplace_det(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def rref(rows: list[list[CycScalar]]) -> tuple[list[list[CycScalar]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows: list[list[CycScalar]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[list[CycScalar]], ncols: int, ctx: FieldContext) -> list[tuple[CycScalar, ...]]:
    """Basis of {v : rows·v = 0}; each vector has a 1 in its free coordinate."""
    if not rows:
        return [tuple(ctx.one if i == j else ctx.zero for i in range(ncols)) for j in range(ncols)]
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [ctx.zero] * ncols
        vec[f] = ctx.one
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis
