"""Super-representations of coloured quivers.

A super-representation puts a graded space at every vertex and, on each
edge ``s -> t``, a homogeneous map of degree ``p(s) + p(t)``.  Each basis
vector carries its own parity (see :class:`GradedSpace`), so the parity
change functor only relabels and the forgetful functor only drops labels.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    GradedMap,
    GradedSpace,
    GradingError,
    Matrix,
    SuperDim,
    check_homogeneous,
    is_invertible,
    kernel_basis,
    rank,
)
from .quiver import ColouredQuiver, arrow_glyph, glyph
from .rep import (
    Representation,
    RepresentationError,
    bgp,
    generic_combination,
    hom_equations,
    unpack_morphism,
)


@dataclass(frozen=True)
class SuperRep:
    quiver: ColouredQuiver
    spaces: tuple[GradedSpace, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        q = self.quiver
        if len(self.spaces) != q.k or len(self.maps) != len(q.edges):
            raise RepresentationError("one graded space per vertex and one map per edge")
        for e, ((s, t), mat) in enumerate(zip(q.edges, self.maps), start=1):
            try:
                check_homogeneous(mat, self.spaces[s - 1], self.spaces[t - 1], q.edge_degree(e))
            except GradingError as exc:
                raise GradingError(f"edge {e} ({s}->{t}): {exc}") from None

    @classmethod
    def build(cls, quiver: ColouredQuiver, sdims: Sequence[tuple[int, int]],
              maps: Sequence | None = None) -> SuperRep:
        """Spaces ``K^{a|b}`` in even-first layout; ``maps`` as nested lists."""
        spaces = tuple(GradedSpace.standard(a, b) for a, b in sdims)
        mats = []
        for e, (s, t) in enumerate(quiver.edges):
            rows, cols = spaces[t - 1].dim, spaces[s - 1].dim
            if maps is None or maps[e] is None:
                mats.append(Matrix.zero(rows, cols))
            elif isinstance(maps[e], Matrix):
                mats.append(maps[e])
            else:
                mats.append(Matrix(rows, cols, tuple(tuple(Fraction(x) for x in r) for r in maps[e])))
        return cls(quiver, spaces, tuple(mats))

    # -- accessors --------------------------------------------------------
    def space(self, i: int) -> GradedSpace:
        return self.spaces[i - 1]

    def sdim(self, i: int) -> SuperDim:
        return self.spaces[i - 1].sdim

    @property
    def sdims(self) -> tuple[SuperDim, ...]:
        return tuple(s.sdim for s in self.spaces)

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.spaces)

    def graded_map(self, e: int) -> GradedMap:
        s, t = self.quiver.edge(e)
        return GradedMap(self.space(s), self.space(t), self.quiver.edge_degree(e), self.maps[e - 1])

    @property
    def parity(self) -> int:
        """Total odd dimension mod 2."""
        return sum(s.sdim.odd for s in self.spaces) % 2

    def is_zero(self) -> bool:
        return all(s.dim == 0 for s in self.spaces)

    def canonical(self) -> SuperRep:
        """Reorder every vertex basis so even vectors come first."""
        orders = [s.canonical_order() for s in self.spaces]
        spaces = tuple(GradedSpace(tuple(sorted(s.parities))) for s in self.spaces)
        maps = tuple(m.submatrix(orders[t - 1], orders[s - 1])
                     for (s, t), m in zip(self.quiver.edges, self.maps))
        return SuperRep(self.quiver, spaces, maps)

    def direct_sum(self, other: SuperRep) -> SuperRep:
        if self.quiver != other.quiver:
            raise RepresentationError("direct sum needs a common coloured quiver")
        spaces = tuple(a + b for a, b in zip(self.spaces, other.spaces))
        maps = []
        for x, y in zip(self.maps, other.maps):
            maps.append(x.hstack(Matrix.zero(x.rows, y.cols))
                        .vstack(Matrix.zero(y.rows, x.cols).hstack(y)))
        return SuperRep(self.quiver, spaces, tuple(maps))

    # -- output -----------------------------------------------------------
    def render(self, ascii: bool = False) -> str:
        q = self.quiver
        parts = [f"{glyph(q.colour(1), ascii)}^{{{self.sdim(1)}}}"]
        for e, ch in enumerate(q.orientation, start=1):
            parts.append(arrow_glyph(ch, ascii))
            parts.append(f"{glyph(q.colour(e + 1), ascii)}^{{{self.sdim(e + 1)}}}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "spaces": [{"even": s.sdim.even, "odd": s.sdim.odd, "basis_parities": list(s.parities)}
                       for s in self.spaces],
            "maps": [{"edge": list(self.quiver.edge(e)), "degree": self.quiver.edge_degree(e),
                      "matrix": m.to_strings()}
                     for e, m in enumerate(self.maps, start=1)],
        }

    @classmethod
    def from_json(cls, data: dict) -> SuperRep:
        q = ColouredQuiver.from_json(data["quiver"])
        spaces = tuple(GradedSpace(tuple(s["basis_parities"])) for s in data["spaces"])
        maps = []
        for (s, t), m in zip(q.edges, data["maps"]):
            maps.append(Matrix(spaces[t - 1].dim, spaces[s - 1].dim,
                               tuple(tuple(Fraction(x) for x in r) for r in m["matrix"])))
        return cls(q, spaces, tuple(maps))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class SuperMorphism:
    """Vertexwise maps ``X(i) -> Y(i)`` of one common degree, commuting with the edges."""

    source: SuperRep
    target: SuperRep
    degree: int
    components: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        X, Y = self.source, self.target
        if X.quiver.edges != Y.quiver.edges:
            raise RepresentationError("morphisms need a common oriented quiver")
        for i, m in enumerate(self.components, start=1):
            check_homogeneous(m, X.space(i), Y.space(i), self.degree)
        for e, (s, t) in enumerate(X.quiver.edges, start=1):
            if self.components[t - 1] @ X.maps[e - 1] != Y.maps[e - 1] @ self.components[s - 1]:
                raise RepresentationError(f"square at edge {e} does not commute")

    def graded_maps(self) -> tuple[GradedMap, ...]:
        return tuple(GradedMap(self.source.space(i), self.target.space(i), self.degree, m)
                     for i, m in enumerate(self.components, start=1))

    def is_isomorphism(self) -> bool:
        return all(is_invertible(m) for m in self.components)


# ---------------------------------------------------------------------------
# functors

def parity_functor(X: SuperRep) -> SuperRep:
    return SuperRep(X.quiver, tuple(s.flip() for s in X.spaces), X.maps)


def parity_isomorphism(X: SuperRep) -> SuperMorphism:
    """The degree-1 isomorphism ``X -> P(X)`` built from vertexwise parity change."""
    return SuperMorphism(X, parity_functor(X), 1,
                         tuple(Matrix.identity(s.dim) for s in X.spaces))


def split_even_odd(X: SuperRep) -> tuple[SuperRep, SuperRep]:
    """``(X', X'')``: colour-matching components and their complements."""
    q = X.quiver
    parts = []
    for flip in (0, 1):
        idx = [X.space(i).indices((q.colour(i) + flip) % 2) for i in q.vertices]
        spaces = tuple(GradedSpace.pure(len(ix), (q.colour(i) + flip) % 2)
                       for i, ix in zip(q.vertices, idx))
        maps = tuple(m.submatrix(idx[t - 1], idx[s - 1]) for (s, t), m in zip(q.edges, X.maps))
        parts.append(SuperRep(q, spaces, maps))
    return parts[0], parts[1]


def embed_G(X: Representation) -> SuperRep:
    """Place ``X(i)`` in the component of ``K^{*|*}`` matching the colour of ``i``."""
    q = X.quiver
    spaces = tuple(GradedSpace.pure(X.dim(i), q.colour(i)) for i in q.vertices)
    return SuperRep(q, spaces, X.maps)


def forget_F(Y: SuperRep) -> Representation:
    return Representation(Y.quiver, Y.dim_vector, Y.maps)


def gf_isomorphism(Y: SuperRep) -> tuple[SuperMorphism, SuperMorphism]:
    """``Y -> G(F(Y))`` as the sum of a degree-0 and a degree-1 morphism.

    The underlying linear map is the identity.  It is degree 0 on the
    colour-matching part ``Y'`` and degree 1 on ``Y''``; the two returned
    morphisms are those restrictions and they add up to an isomorphism.
    """
    target = embed_G(forget_F(Y))
    q = Y.quiver
    comps = {0: [], 1: []}
    for i in q.vertices:
        par = Y.space(i).parities
        for d in (0, 1):
            keep = {c for c, p in enumerate(par) if (p + d) % 2 == q.colour(i)}
            comps[d].append(Matrix.from_rows(
                [[1 if (r == c and c in keep) else 0 for c in range(len(par))]
                 for r in range(len(par))], cols=len(par)))
    return (SuperMorphism(Y, target, 0, tuple(comps[0])),
            SuperMorphism(Y, target, 1, tuple(comps[1])))


def simple_super(q: ColouredQuiver, i: int, p: int) -> SuperRep:
    """``K^{1|0}`` (p = 0) or ``K^{0|1}`` (p = 1) at vertex ``i``, zero elsewhere."""
    if i not in q.vertices:
        raise RepresentationError(f"vertex {i} not in quiver")
    return SuperRep.build(q, [((1 - p, p) if j == i else (0, 0)) for j in q.vertices])


def super_reflect(X: SuperRep, i: int, direction: str) -> SuperRep:
    """The super reflection functor at a sink (``'-'``) or source (``'+'``).

    The underlying data is exactly the classical BGP functor applied to
    ``F(X)``.  The new space at ``i`` is graded so that its maps to (or from)
    each neighbour ``k`` have degree ``p(i) + p(k)``; when ``i`` is odd the
    neighbours' spaces are then parity-changed, matching the recolouring of
    the quiver.
    """
    q = X.quiver
    classical = bgp(forget_F(X), i, direction)
    pi = q.colour(i)
    dim_i = classical.dim(i)
    par_i: list[int | None] = [None] * dim_i
    for e, s, t in q.incident_edges(i):
        k = s if t == i else t
        shift = (pi + q.colour(k)) % 2
        kpar = X.space(k).parities
        mat = classical.maps[e - 1]
        for c in range(dim_i):
            for r in range(len(kpar)):
                x = mat[r, c] if direction == "-" else mat[c, r]
                if x == 0:
                    continue
                val = (kpar[r] + shift) % 2
                if par_i[c] is None:
                    par_i[c] = val
                elif par_i[c] != val:
                    raise GradingError(f"basis vector {c} at vertex {i} is not homogeneous")
    if any(p is None for p in par_i):
        raise GradingError(f"vertex {i} has a basis vector with no neighbour component")
    spaces = list(X.spaces)
    spaces[i - 1] = GradedSpace(tuple(par_i))
    if pi:
        for k in q.neighbours(i):
            spaces[k - 1] = spaces[k - 1].flip()
    return SuperRep(classical.quiver, tuple(spaces), classical.maps)


# ---------------------------------------------------------------------------
# Hom spaces

def super_hom_basis(X: SuperRep, Y: SuperRep, degree: int) -> list[tuple[Matrix, ...]]:
    if X.quiver.edges != Y.quiver.edges:
        raise RepresentationError("morphisms need a common oriented quiver")

    def allowed(v: int, r: int, c: int) -> bool:
        return Y.space(v).parities[r] == (X.space(v).parities[c] + degree) % 2

    A, unknowns = hom_equations(X.quiver.edges, X.dim_vector, Y.dim_vector, X.maps, Y.maps, allowed)
    if not unknowns:
        return []
    K = kernel_basis(A) if A.rows else Matrix.identity(len(unknowns))
    return [unpack_morphism(col, unknowns, X.dim_vector, Y.dim_vector) for col in K.columns()]


def super_hom_dimension(X: SuperRep, Y: SuperRep, degree: int) -> int:
    def allowed(v: int, r: int, c: int) -> bool:
        return Y.space(v).parities[r] == (X.space(v).parities[c] + degree) % 2

    A, unknowns = hom_equations(X.quiver.edges, X.dim_vector, Y.dim_vector, X.maps, Y.maps, allowed)
    return len(unknowns) - rank(A)


def find_super_isomorphism(X: SuperRep, Y: SuperRep, seed: int = 0) -> SuperMorphism | None:
    """A homogeneous isomorphism ``X -> Y`` of degree 0 or 1, if one exists."""
    if X.quiver != Y.quiver or X.dim_vector != Y.dim_vector:
        return None
    rng = random.Random(seed)
    for degree in (0, 1):
        basis = super_hom_basis(X, Y, degree)
        if not basis and not X.is_zero():
            continue
        cands = [basis[0]] if len(basis) == 1 else [generic_combination(basis, rng) for _ in range(3)]
        if X.is_zero():
            cands = [tuple(Matrix.zero(0, 0) for _ in X.spaces)]
        for phi in cands:
            if all(is_invertible(m) for m in phi):
                return SuperMorphism(X, Y, degree, phi)
    return None


def super_is_isomorphic(X: SuperRep, Y: SuperRep) -> bool:
    return find_super_isomorphism(X, Y) is not None
