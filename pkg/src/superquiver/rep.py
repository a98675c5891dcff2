"""Classical representations of path quivers and the BGP reflection functors."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (
    DimensionError,
    Matrix,
    cokernel_projection,
    is_invertible,
    kernel_basis,
    rank,
    solve,
)
from .quiver import ColouredQuiver, QuiverError, reflect_quiver


class RepresentationError(ValueError):
    """Raised on malformed representations or violated functor preconditions."""


@dataclass(frozen=True)
class Representation:
    """Vector spaces ``K^dims[i]`` at vertices and a matrix per edge.

    ``maps[e - 1]`` has shape ``dim(target) x dim(source)`` for edge ``e``.
    The quiver's colouring is carried along but plays no role here.
    """

    quiver: ColouredQuiver
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        q = self.quiver
        if len(self.dims) != q.k or any(d < 0 for d in self.dims):
            raise RepresentationError("one non-negative dimension per vertex")
        if len(self.maps) != len(q.edges):
            raise RepresentationError("one matrix per edge")
        for e, ((s, t), mat) in enumerate(zip(q.edges, self.maps), start=1):
            if mat.shape != (self.dims[t - 1], self.dims[s - 1]):
                raise DimensionError(
                    f"edge {e} ({s}->{t}) needs a {self.dims[t - 1]}x{self.dims[s - 1]} matrix,"
                    f" got {mat.shape}"
                )

    @classmethod
    def from_maps(cls, quiver: ColouredQuiver, dims: Sequence[int],
                  maps: Sequence[Sequence[Sequence]] | None = None) -> Representation:
        dims = tuple(dims)
        if maps is None:
            mats = tuple(Matrix.zero(dims[t - 1], dims[s - 1]) for s, t in quiver.edges)
        else:
            mats = []
            for (s, t), rows in zip(quiver.edges, maps):
                mats.append(rows if isinstance(rows, Matrix)
                            else Matrix(dims[t - 1], dims[s - 1],
                                        tuple(tuple(Fraction(x) for x in r) for r in rows)))
            mats = tuple(mats)
        return cls(quiver, dims, mats)

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return self.dims

    def dim(self, i: int) -> int:
        return self.dims[i - 1]

    def map(self, e: int) -> Matrix:
        return self.maps[e - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def direct_sum(self, other: Representation) -> Representation:
        if self.quiver.edges != other.quiver.edges:
            raise RepresentationError("direct sum needs a common quiver")
        dims = tuple(a + b for a, b in zip(self.dims, other.dims))
        maps = []
        for (s, t), x, y in zip(self.quiver.edges, self.maps, other.maps):
            top = x.hstack(Matrix.zero(x.rows, y.cols))
            bot = Matrix.zero(y.rows, x.cols).hstack(y)
            maps.append(top.vstack(bot))
        return Representation(self.quiver, dims, tuple(maps))

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "dims": list(self.dims),
            "maps": [m.to_strings() for m in self.maps],
        }

    @classmethod
    def from_json(cls, data: dict) -> Representation:
        q = ColouredQuiver.from_json(data["quiver"])
        dims = tuple(data["dims"])
        return cls.from_maps(q, dims, [[[Fraction(x) for x in r] for r in m] for m in data["maps"]])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def simple_rep(q: ColouredQuiver, i: int) -> Representation:
    if i not in q.vertices:
        raise RepresentationError(f"vertex {i} not in quiver")
    return Representation.from_maps(q, [1 if j == i else 0 for j in q.vertices])


def zero_rep(q: ColouredQuiver) -> Representation:
    return Representation.from_maps(q, [0] * q.k)


def interval_rep(q: ColouredQuiver, a: int, b: int) -> Representation:
    """``K`` on vertices ``a..b`` with identity maps inside the interval."""
    if not 1 <= a <= b <= q.k:
        raise RepresentationError(f"bad interval [{a}, {b}]")
    dims = [1 if a <= j <= b else 0 for j in q.vertices]
    maps = []
    for s, t in q.edges:
        inside = a <= s <= b and a <= t <= b
        maps.append([[1]] if inside else [[0] * dims[s - 1]] * dims[t - 1])
    return Representation.from_maps(q, dims, maps)


# ---------------------------------------------------------------------------
# reflection functors

def bgp_minus(X: Representation, i: int) -> Representation:
    """``S_i^-`` at a sink: the new space at ``i`` is the kernel of the sum map."""
    q = X.quiver
    if not q.is_sink(i):
        raise QuiverError(f"S_{i}^- needs {i} to be a sink")
    ins = q.in_edges(i)
    sum_map = Matrix.zero(X.dim(i), 0)
    for e, _ in ins:
        sum_map = sum_map.hstack(X.map(e))
    K = kernel_basis(sum_map)
    dims = list(X.dims)
    dims[i - 1] = K.cols
    maps = list(X.maps)
    offset = 0
    for e, k in ins:
        d = X.dim(k)
        maps[e - 1] = K.submatrix(range(offset, offset + d), range(K.cols))
        offset += d
    return Representation(reflect_quiver(q, i), tuple(dims), tuple(maps))


def bgp_plus(X: Representation, i: int) -> Representation:
    """``S_i^+`` at a source: the new space at ``i`` is the cokernel of the joint map."""
    q = X.quiver
    if not q.is_source(i):
        raise QuiverError(f"S_{i}^+ needs {i} to be a source")
    outs = q.out_edges(i)
    joint = Matrix.zero(0, X.dim(i))
    for e, _ in outs:
        joint = joint.vstack(X.map(e))
    Q = cokernel_projection(joint)
    dims = list(X.dims)
    dims[i - 1] = Q.rows
    maps = list(X.maps)
    offset = 0
    for e, k in outs:
        d = X.dim(k)
        maps[e - 1] = Q.submatrix(range(Q.rows), range(offset, offset + d))
        offset += d
    return Representation(reflect_quiver(q, i), tuple(dims), tuple(maps))


def bgp(X: Representation, i: int, direction: str) -> Representation:
    if direction == "-":
        return bgp_minus(X, i)
    if direction == "+":
        return bgp_plus(X, i)
    raise ValueError("direction must be '+' or '-'")


# ---------------------------------------------------------------------------
# morphisms

def hom_equations(
    edges: Sequence[tuple[int, int]],
    src_dims: Sequence[int],
    tgt_dims: Sequence[int],
    src_maps: Sequence[Matrix],
    tgt_maps: Sequence[Matrix],
    allowed=None,
) -> tuple[Matrix, list[tuple[int, int, int]]]:
    """Linear system whose solutions are the families ``phi_i`` with ``phi_t x = y phi_s``.

    ``allowed(i, r, c)`` restricts which entries of ``phi_i`` are unknowns.
    Returns the coefficient matrix and the unknown index list ``(vertex, r, c)``.
    """
    unknowns = []
    for v, (dx, dy) in enumerate(zip(src_dims, tgt_dims), start=1):
        for r in range(dy):
            for c in range(dx):
                if allowed is None or allowed(v, r, c):
                    unknowns.append((v, r, c))
    index = {u: n for n, u in enumerate(unknowns)}
    rows = []
    zero = Fraction(0)
    for (s, t), x, y in zip(edges, src_maps, tgt_maps):
        # (phi_t x)[r, c] - (y phi_s)[r, c] = 0 for r < dim Y(t), c < dim X(s)
        for r in range(tgt_dims[t - 1]):
            for c in range(src_dims[s - 1]):
                row = [zero] * len(unknowns)
                nonzero = False
                for a in range(src_dims[t - 1]):
                    coef = x[a, c]
                    u = index.get((t, r, a))
                    if coef != 0 and u is not None:
                        row[u] += coef
                        nonzero = True
                for b in range(tgt_dims[s - 1]):
                    coef = y[r, b]
                    u = index.get((s, b, c))
                    if coef != 0 and u is not None:
                        row[u] -= coef
                        nonzero = True
                if nonzero:
                    rows.append(tuple(row))
    return Matrix(len(rows), len(unknowns), tuple(rows)), unknowns


def unpack_morphism(vec: Sequence, unknowns, src_dims, tgt_dims) -> tuple[Matrix, ...]:
    grids = [[[Fraction(0)] * dx for _ in range(dy)] for dx, dy in zip(src_dims, tgt_dims)]
    for val, (v, r, c) in zip(vec, unknowns):
        grids[v - 1][r][c] = val
    return tuple(Matrix(dy, dx, tuple(tuple(row) for row in g))
                 for g, dx, dy in zip(grids, src_dims, tgt_dims))


def _check_same_quiver(X: Representation, Y: Representation) -> None:
    if X.quiver.edges != Y.quiver.edges:
        raise RepresentationError("morphisms need a common oriented quiver")


def hom_basis(X: Representation, Y: Representation) -> list[tuple[Matrix, ...]]:
    _check_same_quiver(X, Y)
    A, unknowns = hom_equations(X.quiver.edges, X.dims, Y.dims, X.maps, Y.maps)
    if not unknowns:
        return []
    K = kernel_basis(A) if A.rows else Matrix.identity(len(unknowns))
    return [unpack_morphism(col, unknowns, X.dims, Y.dims) for col in K.columns()]


def hom_dimension(X: Representation, Y: Representation) -> int:
    _check_same_quiver(X, Y)
    A, unknowns = hom_equations(X.quiver.edges, X.dims, Y.dims, X.maps, Y.maps)
    return len(unknowns) - rank(A)


def end_dimension(X: Representation) -> int:
    return hom_dimension(X, X)


def is_morphism(X: Representation, Y: Representation, phi: Sequence[Matrix]) -> bool:
    for e, (s, t) in enumerate(X.quiver.edges, start=1):
        if phi[t - 1] @ X.map(e) != Y.map(e) @ phi[s - 1]:
            return False
    return True


def is_indecomposable(X: Representation) -> bool:
    """Brick test: ``dim End(X) == 1`` (exact for Dynkin-quiver indecomposables)."""
    if X.is_zero():
        raise RepresentationError("the zero representation is not indecomposable")
    return end_dimension(X) == 1


def generic_combination(basis: Sequence[tuple[Matrix, ...]], rng: random.Random) -> tuple[Matrix, ...]:
    out = None
    for phi in basis:
        coef = Fraction(rng.randint(1, 10**6))
        term = tuple(m.scale(coef) for m in phi)
        out = term if out is None else tuple(a + b for a, b in zip(out, term))
    return out


def find_isomorphism(X: Representation, Y: Representation, tries: int = 3,
                     seed: int = 0) -> tuple[Matrix, ...] | None:
    """An isomorphism ``X -> Y`` or ``None``.

    A generic element of Hom(X, Y) is invertible exactly when X and Y are
    isomorphic; a few seeded random combinations make the test deterministic.
    """
    if X.quiver.edges != Y.quiver.edges or X.dims != Y.dims:
        return None
    basis = hom_basis(X, Y)
    if X.is_zero():
        return tuple(Matrix.zero(0, 0) for _ in X.dims)
    if not basis:
        return None
    rng = random.Random(seed)
    candidates = [basis[0]] if len(basis) == 1 else [generic_combination(basis, rng)
                                                     for _ in range(tries)]
    for phi in candidates:
        if all(is_invertible(m) for m in phi):
            return phi
    return None


def is_isomorphic(X: Representation, Y: Representation) -> bool:
    return find_isomorphism(X, Y) is not None


def bricks_isomorphic(X: Representation, Y: Representation) -> bool:
    """Hom-dimension criterion for bricks with equal dimension vectors."""
    return (X.dims == Y.dims
            and hom_dimension(X, Y) == hom_dimension(Y, X) == 1
            and end_dimension(X) == end_dimension(Y) == 1)


def decompose_check(X: Representation, indecomposables: Iterable[Representation]) -> list[tuple[int, ...]]:
    """Multiplicities of the given indecomposables as summands of ``X``.

    Uses ``dim Hom(Z, X) = sum_Y m_Y dim Hom(Z, Y)`` over the supplied list,
    which must contain every indecomposable of the quiver up to isomorphism.
    Returns the multiset of summand dimension vectors, sorted.
    """
    inds = list(indecomposables)
    H = Matrix.from_rows([[hom_dimension(Z, Y) for Y in inds] for Z in inds])
    h = Matrix.from_rows([[hom_dimension(Z, X)] for Z in inds], cols=1) if inds else Matrix.zero(0, 1)
    m = solve(H, h)
    if m is None or rank(H) != len(inds):
        raise RepresentationError("the indecomposables do not determine a decomposition")
    mult = [m[j, 0] for j in range(len(inds))]
    if any(x.denominator != 1 or x < 0 for x in mult):
        raise RepresentationError(f"no consistent decomposition (multiplicities {mult})")
    total = [0] * len(X.dims)
    out = []
    for Y, k in zip(inds, mult):
        for _ in range(int(k)):
            out.append(Y.dims)
            total = [a + b for a, b in zip(total, Y.dims)]
    if tuple(total) != X.dims:
        raise RepresentationError("summand dimension vectors do not add up to dim X")
    return sorted(out)
