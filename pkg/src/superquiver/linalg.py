"""Exact linear algebra over the rationals (or a prime field).

Matrices are immutable row-major grids of field elements.  Everything is
computed by Gauss-Jordan elimination, so results are exact and the chosen
kernel / cokernel bases are deterministic.

Graded spaces label every basis vector with its parity.  The canonical
layout puts the even vectors first; parity change flips the labels without
moving any vector, which keeps the underlying matrices untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Scalar = Fraction


class DimensionError(ValueError):
    """Raised when matrix or graded-space shapes do not fit together."""


class GradingError(ValueError):
    """Raised when a map is not homogeneous of its declared degree."""


# ---------------------------------------------------------------------------
# prime field backend

class _PrimeFieldElement:
    __slots__ = ("value",)
    p: int = 0

    def __init__(self, value) -> None:
        if isinstance(value, _PrimeFieldElement):
            value = value.value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({self.p})")
            value = value.numerator * pow(value.denominator, -1, self.p)
        self.value = int(value) % self.p

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return type(self)(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return type(self)(self.value - other.value)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return type(self)(self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.value == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return type(self)(self.value * pow(other.value, -1, self.p))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __neg__(self):
        return type(self)(-self.value)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.value == other.value

    def __hash__(self) -> int:
        return hash((self.p, self.value))

    def __repr__(self) -> str:
        return f"GF({self.p})({self.value})"

    def __str__(self) -> str:
        return str(self.value)


_PRIME_FIELDS: dict[int, type] = {}


def prime_field(p: int) -> type:
    """Return the element type of GF(p) for an odd prime ``p``."""
    if p < 3 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not an odd prime")
    if p not in _PRIME_FIELDS:
        _PRIME_FIELDS[p] = type(f"GF{p}", (_PrimeFieldElement,), {"p": p, "__slots__": ()})
    return _PRIME_FIELDS[p]


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix shape")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(
                f"entries do not form a {self.rows}x{self.cols} grid"
            )

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None,
                  field: Callable = Fraction) -> Matrix:
        grid = tuple(tuple(field(x) for x in r) for r in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def zero(cls, rows: int, cols: int, field: Callable = Fraction) -> Matrix:
        z = field(0)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, field: Callable = Fraction) -> Matrix:
        z, o = field(0), field(1)
        return cls(n, n, tuple(tuple(o if r == c else z for c in range(n)) for r in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> Matrix:
        cols = len(columns)
        return cls(rows, cols, tuple(tuple(columns[c][r] for c in range(cols)) for r in range(rows)))

    # -- basic access -----------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, rc: tuple[int, int]) -> Scalar:
        r, c = rc
        return self.entries[r][c]

    def column(self, c: int) -> tuple[Scalar, ...]:
        return tuple(row[c] for row in self.entries)

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.column(c) for c in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    @property
    def T(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(tuple(self.entries[r][c] for r in range(self.rows))
                            for c in range(self.cols)))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        zero = _field_of(self)(0)
        out = []
        for row in self.entries:
            out.append(tuple(sum((a * b for a, b in zip(row, col) if a != 0), zero)
                             for col in ocols))
        return Matrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r, s))
                            for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(-1)

    def scale(self, k) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(tuple(k * x for x in r) for r in self.entries))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(len(rows), len(cols),
                      tuple(tuple(self.entries[r][c] for c in cols) for r in rows))

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return Matrix(self.rows, self.cols + other.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def block_matrix(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a matrix from a grid of blocks (all shapes must agree)."""
    out = None
    for brow in blocks:
        row = brow[0]
        for b in brow[1:]:
            row = row.hstack(b)
        out = row if out is None else out.vstack(row)
    return out


def rref(m: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and the pivot column list."""
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    prow = 0
    for c in range(m.cols):
        if prow == m.rows:
            break
        pr = next((r for r in range(prow, m.rows) if a[r][c] != 0), None)
        if pr is None:
            continue
        a[prow], a[pr] = a[pr], a[prow]
        inv = 1 / a[prow][c]
        a[prow] = [x * inv for x in a[prow]]
        for r in range(m.rows):
            if r != prow and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[prow])]
        pivots.append(c)
        prow += 1
    return a, pivots


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(rref(m)[1])


def _field_of(m: Matrix) -> Callable:
    for row in m.entries:
        for x in row:
            return type(x)
    return Fraction


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of ``{v : m v = 0}`` (one per free column of the RREF)."""
    field = _field_of(m)
    if m.rows == 0:
        return Matrix.identity(m.cols, field)
    a, pivots = rref(m)
    pivset = set(pivots)
    zero, one = field(0), field(1)
    cols = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [zero] * m.cols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -a[r][f]
        cols.append(v)
    return Matrix.from_columns(cols, m.cols)


def cokernel_projection(m: Matrix) -> Matrix:
    """A surjection ``target -> target / im m`` onto the non-pivot coordinates.

    Rows are the left-kernel basis of ``m``; the result ``q`` has ``q @ m == 0``.
    """
    return kernel_basis(m.T).T


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """One solution ``x`` of ``a x = b`` or ``None`` when inconsistent."""
    if a.rows != b.rows:
        raise DimensionError("solve needs matching row counts")
    aug, pivots = rref(a.hstack(b))
    if any(p >= a.cols for p in pivots):
        return None
    field = _field_of(a)
    x = [[field(0)] * b.cols for _ in range(a.cols)]
    for r, p in enumerate(pivots):
        x[p] = aug[r][a.cols:]
    return Matrix(a.cols, b.cols, tuple(tuple(r) for r in x))


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionError("only square matrices are invertible")
    x = solve(m, Matrix.identity(m.rows, _field_of(m)))
    if x is None or rank(m) != m.rows:
        raise ZeroDivisionError("matrix is singular")
    return x


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Matrix sending basis vector ``perm[j]`` to position ``j``: ``(P v)[j] = v[perm[j]]``."""
    n = len(perm)
    return Matrix.from_rows([[1 if c == perm[r] else 0 for c in range(n)] for r in range(n)])


# ---------------------------------------------------------------------------
# Z/2-graded spaces and homogeneous maps

@dataclass(frozen=True)
class SuperDim:
    even: int
    odd: int

    def __post_init__(self) -> None:
        if self.even < 0 or self.odd < 0:
            raise ValueError("super dimensions are non-negative")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __str__(self) -> str:
        return f"{self.even}|{self.odd}"


def parity_change(d: SuperDim) -> SuperDim:
    return SuperDim(d.odd, d.even)


@dataclass(frozen=True)
class GradedSpace:
    """A coordinate space whose basis vectors each carry a parity bit."""

    parities: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError("parities must be 0 or 1")

    @classmethod
    def standard(cls, even: int, odd: int) -> GradedSpace:
        return cls((0,) * even + (1,) * odd)

    @classmethod
    def pure(cls, dim: int, parity: int) -> GradedSpace:
        return cls((parity % 2,) * dim)

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def sdim(self) -> SuperDim:
        odd = sum(self.parities)
        return SuperDim(len(self.parities) - odd, odd)

    def flip(self, by: int = 1) -> GradedSpace:
        if by % 2 == 0:
            return self
        return GradedSpace(tuple(1 - p for p in self.parities))

    def indices(self, parity: int) -> list[int]:
        return [k for k, p in enumerate(self.parities) if p == parity]

    def canonical_order(self) -> list[int]:
        """Basis permutation putting even vectors first (stable)."""
        return self.indices(0) + self.indices(1)

    def is_canonical(self) -> bool:
        return list(self.parities) == sorted(self.parities)

    def __add__(self, other: GradedSpace) -> GradedSpace:
        return GradedSpace(self.parities + other.parities)

    def __str__(self) -> str:
        return str(self.sdim)


def check_homogeneous(m: Matrix, source: GradedSpace, target: GradedSpace, degree: int) -> None:
    if m.shape != (target.dim, source.dim):
        raise DimensionError(
            f"matrix {m.shape} does not fit {source.dim} -> {target.dim}"
        )
    for r, row in enumerate(m.entries):
        pr = target.parities[r]
        for c, x in enumerate(row):
            if x != 0 and pr != (source.parities[c] + degree) % 2:
                raise GradingError(
                    f"entry ({r},{c}) breaks homogeneity of degree {degree}"
                )


def homogeneous_degree(m: Matrix, source: GradedSpace, target: GradedSpace) -> int | None:
    """Degree of ``m`` if it is homogeneous (zero maps report 0), else ``None``."""
    seen = set()
    for r, row in enumerate(m.entries):
        for c, x in enumerate(row):
            if x != 0:
                seen.add((target.parities[r] - source.parities[c]) % 2)
    if len(seen) > 1:
        return None
    return seen.pop() if seen else 0


@dataclass(frozen=True)
class GradedMap:
    source: GradedSpace
    target: GradedSpace
    degree: int
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.degree not in (0, 1):
            raise ValueError("degree lives in Z/2")
        check_homogeneous(self.matrix, self.source, self.target, self.degree)

    @classmethod
    def identity(cls, space: GradedSpace) -> GradedMap:
        return cls(space, space, 0, Matrix.identity(space.dim))

    @classmethod
    def zero(cls, source: GradedSpace, target: GradedSpace, degree: int = 0) -> GradedMap:
        return cls(source, target, degree, Matrix.zero(target.dim, source.dim))

    def canonical(self) -> GradedMap:
        """Same map written in even-first bases of source and target."""
        so, to = self.source.canonical_order(), self.target.canonical_order()
        return GradedMap(GradedSpace(tuple(sorted(self.source.parities))),
                         GradedSpace(tuple(sorted(self.target.parities))),
                         self.degree, self.matrix.submatrix(to, so))

    def block(self, target_parity: int, source_parity: int) -> Matrix:
        """The component ``source_parity -> target_parity`` of the map."""
        return self.matrix.submatrix(self.target.indices(target_parity),
                                     self.source.indices(source_parity))

    def blocks(self) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        """``(A, B, C, D)`` for the even-first block form ``[[A, B], [C, D]]``."""
        return self.block(0, 0), self.block(0, 1), self.block(1, 0), self.block(1, 1)


def parity_change_map(f: GradedMap) -> GradedMap:
    """P(f): same linear map between the parity-changed spaces; degree kept."""
    return GradedMap(f.source.flip(), f.target.flip(), f.degree, f.matrix)


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """``f o g``."""
    if f.source != g.target:
        raise DimensionError("source of f must equal target of g")
    return GradedMap(g.source, f.target, (f.degree + g.degree) % 2, f.matrix @ g.matrix)


def parity_swap(space: GradedSpace) -> GradedMap:
    """The degree-1 identification ``V -> P(V)`` (identity on vectors)."""
    return GradedMap(space, space.flip(), 1, Matrix.identity(space.dim))


def nullity(m: Matrix) -> int:
    return m.cols - rank(m)


def stack_rows(rows: Iterable[Sequence[Scalar]], cols: int) -> Matrix:
    grid = tuple(tuple(r) for r in rows)
    return Matrix(len(grid), cols, grid)
