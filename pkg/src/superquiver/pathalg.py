"""Z2-graded path algebras, super-modules and the graded preprojective algebra.

Paths are stored as the vertex sequence in the order of travel.  The product
``a * b`` follows composition of maps: it is ``b`` followed by ``a`` and is
nonzero only when ``b`` ends where ``a`` starts, so ``e * v_s(e) = e = v_t(e) * e``.
The Z2 degree of a path is the sum of ``p(s) + p(t)`` over its arrows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import GradedSpace, Matrix, check_homogeneous, rank, rref, solve, is_invertible
from .quiver import ColouredQuiver
from .rep import hom_equations
from .srep import SuperRep


class PathAlgebraError(ValueError):
    """Malformed paths, sign functions or module data."""


Arrow = tuple[int, int]


@dataclass(frozen=True, order=True)
class Path:
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise PathAlgebraError("a path visits at least one vertex")

    @classmethod
    def trivial(cls, i: int) -> Path:
        return cls((i,))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def arrows(self) -> list[Arrow]:
        return list(zip(self.vertices, self.vertices[1:]))

    def z2degree(self, parity: Sequence[int]) -> int:
        return sum(parity[s - 1] + parity[t - 1] for s, t in self.arrows()) % 2

    def after(self, first: Path) -> Path | None:
        """``self * first``: travel ``first`` then ``self``."""
        if first.target != self.source:
            return None
        return Path(first.vertices + self.vertices[1:])

    def __str__(self) -> str:
        if self.length == 0:
            return f"v{self.source}"
        return "->".join(map(str, self.vertices))


@dataclass(frozen=True)
class AlgebraElement:
    """Finite rational combination of paths, kept with sorted paths and no zero terms."""

    terms: tuple[tuple[Path, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[Path, Fraction]) -> AlgebraElement:
        return cls(tuple((p, Fraction(c)) for p, c in sorted(d.items()) if c != 0))

    @classmethod
    def from_path(cls, p: Path, coeff=1) -> AlgebraElement:
        return cls.from_dict({p: Fraction(coeff)})

    @classmethod
    def vertex(cls, i: int) -> AlgebraElement:
        return cls.from_path(Path.trivial(i))

    def as_dict(self) -> dict[Path, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        d = self.as_dict()
        for p, c in other.terms:
            d[p] = d.get(p, Fraction(0)) + c
        return AlgebraElement.from_dict(d)

    def __neg__(self) -> AlgebraElement:
        return self.scale(-1)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, k) -> AlgebraElement:
        return AlgebraElement.from_dict({p: c * Fraction(k) for p, c in self.terms})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return multiply(self, other)

    def degrees(self, parity: Sequence[int]) -> set[int]:
        return {p.z2degree(parity) for p, _ in self.terms}

    def is_homogeneous(self, parity: Sequence[int]) -> bool:
        return len(self.degrees(parity)) <= 1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{p}]" for p, c in self.terms)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    out: dict[Path, Fraction] = {}
    for p, c in a.terms:
        for q, d in b.terms:
            r = p.after(q)
            if r is not None:
                out[r] = out.get(r, Fraction(0)) + c * d
    return AlgebraElement.from_dict(out)


def arrows_of(q) -> list[Arrow]:
    if isinstance(q, DoubleQuiver):
        return q.arrows
    return list(q.edges)


@dataclass(frozen=True)
class DoubleQuiver:
    """A coloured quiver with a reversed companion for each arrow and a sign ``eps``."""

    base: ColouredQuiver
    sign: tuple[tuple[Arrow, int], ...]

    def __post_init__(self) -> None:
        eps = dict(self.sign)
        if set(eps) != set(self.arrows):
            raise PathAlgebraError("the sign function must be defined on every arrow of the double quiver")
        for (s, t), v in eps.items():
            if v not in (1, -1):
                raise PathAlgebraError("signs are +1 or -1")
            if v + eps[(t, s)] != 0:
                raise PathAlgebraError(f"eps({s},{t}) + eps({t},{s}) must vanish")

    @classmethod
    def of(cls, base: ColouredQuiver, flipped: Iterable[int] = ()) -> DoubleQuiver:
        """Default sign +1 on original arrows, -1 on reversed ones; edges in ``flipped`` swap."""
        flipped = set(flipped)
        sign = []
        for e, (s, t) in enumerate(base.edges, start=1):
            v = -1 if e in flipped else 1
            sign += [((s, t), v), ((t, s), -v)]
        return cls(base, tuple(sorted(sign)))

    @property
    def arrows(self) -> list[Arrow]:
        return sorted([a for e in self.base.edges for a in (e, (e[1], e[0]))])

    @property
    def parity(self) -> tuple[int, ...]:
        return self.base.parity

    @property
    def k(self) -> int:
        return self.base.k

    def eps(self, a: Arrow) -> int:
        return dict(self.sign)[a]


def paths_of_length(q, length: int, source: int | None = None) -> list[Path]:
    """Every path of the given length, sorted."""
    out_arrows: dict[int, list[int]] = {}
    for s, t in arrows_of(q):
        out_arrows.setdefault(s, []).append(t)
    starts = [source] if source is not None else list(range(1, _k(q) + 1))
    frontier = [(i,) for i in starts]
    for _ in range(length):
        frontier = [p + (t,) for p in frontier for t in sorted(out_arrows.get(p[-1], []))]
    return sorted(Path(p) for p in frontier)


def _k(q) -> int:
    return q.k


def graded_component(q, i: int, j: int, k: int) -> list[tuple[Path, int]]:
    """Basis of the paths ``i -> j`` of length ``k``, each with its Z2 degree."""
    if k < 0:
        raise PathAlgebraError("path length is non-negative")
    return [(p, p.z2degree(q.parity)) for p in paths_of_length(q, k, i) if p.target == j]


def mesh_elements(dq: DoubleQuiver) -> list[AlgebraElement]:
    """``theta_i``: signed sum of the 2-cycles ``i -> j -> i`` through each arrow leaving ``i``."""
    out = []
    for i in range(1, dq.k + 1):
        d = {Path((i, t, i)): Fraction(dq.eps((i, t))) for (s, t) in dq.arrows if s == i}
        out.append(AlgebraElement.from_dict(d))
    return out


def _vector(x: AlgebraElement, index: Mapping[Path, int]) -> list[Fraction]:
    v = [Fraction(0)] * len(index)
    for p, c in x.terms:
        v[index[p]] = c
    return v


def _row_basis(vectors: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    if not vectors or width == 0:
        return []
    rows, _ = rref(Matrix.from_rows(vectors, cols=width))
    return [list(r) for r in rows if any(c != 0 for c in r)]


def preprojective_dims(dq: DoubleQuiver, max_len: int | None = None) -> dict:
    """Graded dimensions of the path algebra of ``dq`` modulo the mesh ideal.

    The ideal slice in length ``L`` is ``theta * P_{L-2} + P_1 * J_{L-1}``;
    once a quotient slice is zero every later slice is zero as well.
    """
    if max_len is None:
        max_len = 2 * (dq.k + 1)
    if max_len < 0:
        raise PathAlgebraError("max_len must be non-negative")
    parity = dq.parity
    thetas = mesh_elements(dq)
    arrows = [AlgebraElement.from_path(Path(a)) for a in dq.arrows]
    table: dict[int, tuple[int, int]] = {}
    ideal: list[AlgebraElement] = []
    prev_ideal: list[AlgebraElement] = []
    vanishes_at = None
    for L in range(max_len + 1):
        basis = paths_of_length(dq, L)
        index = {p: n for n, p in enumerate(basis)}
        gens: list[AlgebraElement] = []
        if L >= 2:
            for t in thetas:
                for p in paths_of_length(dq, L - 2):
                    gens.append(t * AlgebraElement.from_path(p))
            for a in arrows:
                for x in prev_ideal:
                    gens.append(a * x)
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            if not g.is_homogeneous(parity):
                raise PathAlgebraError(f"ideal element {g} is not Z2-homogeneous")
        counts = [0, 0]
        for p in basis:
            counts[p.z2degree(parity)] += 1
        reduced = _row_basis([_vector(g, index) for g in gens], len(basis))
        ideal_par = [0, 0]
        for r in reduced:
            par = next(basis[c].z2degree(parity) for c, val in enumerate(r) if val != 0)
            ideal_par[par] += 1
        table[L] = (counts[0] - ideal_par[0], counts[1] - ideal_par[1])
        ideal = [AlgebraElement.from_dict({basis[c]: val for c, val in enumerate(r) if val != 0})
                 for r in reduced]
        prev_ideal = ideal
        if L >= 1 and table[L] == (0, 0):
            vanishes_at = L
            break
    even = sum(e for e, _ in table.values())
    odd = sum(o for _, o in table.values())
    return {
        "by_length": table,
        "even": even,
        "odd": odd,
        "total": even + odd,
        "vanishes_at": vanishes_at,
    }


def dims_to_json(result: dict) -> dict:
    return {
        "by_length": {str(L): {"even": e, "odd": o} for L, (e, o) in result["by_length"].items()},
        "even": result["even"],
        "odd": result["odd"],
        "total": result["total"],
        "vanishes_at": result["vanishes_at"],
    }


def dq_for_type(name: str, parity: Sequence[int] | None = None, orientation: str | None = None) -> DoubleQuiver:
    """``"A3"`` and similar; default colouring even and orientation all ``'>'``."""
    if not name.upper().startswith("A") or not name[1:].isdigit():
        raise PathAlgebraError(f"unsupported type {name!r}; expected A<k>")
    k = int(name[1:])
    if k < 1:
        raise PathAlgebraError("rank must be positive")
    orientation = orientation if orientation is not None else ">" * (k - 1)
    parity = tuple(parity) if parity is not None else (0,) * k
    return DoubleQuiver.of(ColouredQuiver.from_orientation(parity, orientation))


# ---------------------------------------------------------------------------
# super-modules

@dataclass(frozen=True)
class SuperModule:
    """A graded space with actions of the idempotents ``v_i`` and of the arrows."""

    quiver: ColouredQuiver
    space: GradedSpace
    idempotents: tuple[Matrix, ...]
    actions: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        n = self.space.dim
        if len(self.idempotents) != self.quiver.k or len(self.actions) != self.quiver.k - 1:
            raise PathAlgebraError("one idempotent per vertex and one action per arrow")
        total = Matrix.zero(n, n)
        for i, v in enumerate(self.idempotents, start=1):
            check_homogeneous(v, self.space, self.space, 0)
            if v @ v != v:
                raise PathAlgebraError(f"v_{i} is not idempotent")
            for j, w in enumerate(self.idempotents, start=1):
                if i != j and not (v @ w).is_zero():
                    raise PathAlgebraError(f"v_{i} v_{j} != 0")
            total = total + v
        if total != Matrix.identity(n):
            raise PathAlgebraError("idempotents must sum to the identity")
        for e, a in enumerate(self.actions, start=1):
            s, t = self.quiver.edge(e)
            check_homogeneous(a, self.space, self.space, self.quiver.edge_degree(e))
            if self.idempotents[t - 1] @ a @ self.idempotents[s - 1] != a:
                raise PathAlgebraError(f"arrow {e} must map v_{s} M into v_{t} M")

    @property
    def sdim(self):
        return self.space.sdim

    def action(self, x: Path | AlgebraElement) -> Matrix:
        """The operator of a path or algebra element."""
        n = self.space.dim
        if isinstance(x, AlgebraElement):
            out = Matrix.zero(n, n)
            for p, c in x.terms:
                out = out + self.action(p).scale(c)
            return out
        op = self.idempotents[x.source - 1]
        index = {edge: e for e, edge in enumerate(self.quiver.edges, start=1)}
        for a in x.arrows():
            if a not in index:
                raise PathAlgebraError(f"{a} is not an arrow of the quiver")
            op = self.actions[index[a] - 1] @ op
        return op

    def generators(self) -> list[Matrix]:
        return list(self.idempotents) + list(self.actions)


def module_from_srep(X: SuperRep) -> SuperModule:
    """Total space ``X(1) + ... + X(k)`` with block idempotents and block arrow actions."""
    q = X.quiver
    offsets = [0]
    for sp in X.spaces:
        offsets.append(offsets[-1] + sp.dim)
    n = offsets[-1]
    space = GradedSpace(tuple(p for sp in X.spaces for p in sp.parities))

    def block(rows: int, cols: int, r0: int, c0: int, m: Matrix) -> Matrix:
        g = [[Fraction(0)] * n for _ in range(n)]
        for r in range(rows):
            for c in range(cols):
                g[r0 + r][c0 + c] = m[r, c]
        return Matrix.from_rows(g, cols=n)

    idem = tuple(block(sp.dim, sp.dim, offsets[i], offsets[i], Matrix.identity(sp.dim))
                 for i, sp in enumerate(X.spaces))
    acts = []
    for e, (s, t) in enumerate(q.edges, start=1):
        acts.append(block(X.spaces[t - 1].dim, X.spaces[s - 1].dim,
                          offsets[t - 1], offsets[s - 1], X.maps[e - 1]))
    return SuperModule(q, space, idem, tuple(acts))


def _image_basis(v: Matrix) -> list[int]:
    _, pivots = rref(v)
    return pivots


def srep_from_module(M: SuperModule) -> SuperRep:
    """``X(i) = v_i M`` with the basis given by pivot columns of ``v_i``."""
    n = M.space.dim
    picks = [_image_basis(v) for v in M.idempotents]
    bases = [Matrix.from_columns([v.column(c) for c in cols], n) if cols else Matrix.zero(n, 0)
             for v, cols in zip(M.idempotents, picks)]
    whole = [c for b in bases for c in b.columns()]
    if len(whole) != n or not is_invertible(Matrix.from_columns(whole, n)):
        raise PathAlgebraError("the idempotents do not split the module into vertex pieces")
    spaces = tuple(GradedSpace(tuple(M.space.parities[c] for c in cols)) for cols in picks)
    maps = []
    for e, (s, t) in enumerate(M.quiver.edges, start=1):
        image = M.actions[e - 1] @ bases[s - 1]
        if bases[t - 1].cols == 0 or image.cols == 0:
            maps.append(Matrix.zero(bases[t - 1].cols, bases[s - 1].cols))
            continue
        coords = solve(bases[t - 1], image)
        if coords is None:
            raise PathAlgebraError(f"arrow {e} does not land in v_{t} M")
        maps.append(coords)
    return SuperRep(M.quiver, spaces, tuple(maps))


def module_hom_dimension(M: SuperModule, N: SuperModule, degree: int) -> int:
    """Dimension of degree-``degree`` module maps ``M -> N``."""
    if M.quiver.edges != N.quiver.edges:
        raise PathAlgebraError("modules over different algebras")
    gens_m, gens_n = M.generators(), N.generators()

    def allowed(v: int, r: int, c: int) -> bool:
        return (N.space.parities[r] + M.space.parities[c]) % 2 == degree % 2

    A, unknowns = hom_equations([(1, 1)] * len(gens_m), [M.space.dim], [N.space.dim],
                                gens_m, gens_n, allowed)
    return len(unknowns) - rank(A)


def dumps_dims(result: dict) -> str:
    return json.dumps(dims_to_json(result), indent=2, sort_keys=True)
