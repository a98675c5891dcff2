"""Indecomposables ``X_alpha`` for A(n, m) and the coloured periodic AR quiver.

For a positive root ``alpha`` the adapted reduced word of ``w_0`` writes
``alpha = s_{i_1} ... s_{i_{j-1}} alpha_{i_j}``.  The simple super object at
``i_j`` (of the colour that vertex has after the first ``j - 1``
reflections) is pushed back to the original quiver by super reflection
functors at the successive sources ``i_{j-1}, ..., i_1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .linalg import Matrix, rank
from .quiver import ColouredQuiver, height_from_orientation, reflect_quiver
from .rep import is_indecomposable
from .roots import (
    Coeffs,
    RootError,
    SimpleSystem,
    SuperRoot,
    Word,
    adapted_longest_word,
    all_roots,
    apply_word,
    coxeter_element,
    enumerate_positive_roots,
    simple_coeffs,
)
from .srep import SuperRep, forget_F, simple_super, super_reflect


class ConstructionError(RuntimeError):
    """Raised when an internal consistency assertion of a construction fails."""


@dataclass(frozen=True)
class RootObject:
    root: SuperRoot
    rep: SuperRep
    dim_vector: tuple[int, ...]
    parity: int
    word_prefix: Word
    seed_vertex: int
    seed_parity: int


@dataclass
class _Chain:
    """Data along an adapted word: quivers ``q_0 .. q_l`` and prefix roots."""

    word: Word
    quivers: list[ColouredQuiver]
    gammas: list[Coeffs]


def _chain(pi: SimpleSystem, orientation: str) -> _Chain:
    word = adapted_longest_word(orientation)
    q = pi.quiver(orientation)
    quivers = [q]
    for i in word:
        q = reflect_quiver(q, i)
        quivers.append(q)
    return _Chain(word, quivers, enumerate_positive_roots(word, pi.rank))


def build_from_chain(chain: _Chain, j: int) -> tuple[SuperRep, int, int]:
    """``X`` for the ``j``-th prefix root (0-based), with the seed vertex and parity."""
    i_j = chain.word[j]
    q = chain.quivers[j]
    p = q.colour(i_j)
    X = simple_super(q, i_j, p)
    for t in range(j - 1, -1, -1):
        X = super_reflect(X, chain.word[t], "+")
    return X, i_j, p


def build_X_alpha(pi: SimpleSystem, orientation: str, alpha: SuperRoot) -> SuperRep:
    """The indecomposable super-representation attached to a positive root."""
    chain = _chain(pi, orientation)
    c = pi.coefficients(alpha)
    if not pi.is_positive(alpha):
        raise RootError(f"{alpha} is not positive for the chosen simple system")
    j = chain.gammas.index(c)
    return build_from_chain(chain, j)[0]


def build_table(pi: SimpleSystem, orientation: str,
                builder: Callable[[_Chain, int], tuple[SuperRep, int, int]] = build_from_chain) -> list[RootObject]:
    """Every ``X_alpha``, in the order of the adapted word."""
    chain = _chain(pi, orientation)
    out = []
    for j, gamma in enumerate(chain.gammas):
        X, i_j, p = builder(chain, j)
        out.append(RootObject(
            root=pi.from_coefficients(gamma),
            rep=X,
            dim_vector=X.dim_vector,
            parity=X.parity,
            word_prefix=chain.word[:j + 1],
            seed_vertex=i_j,
            seed_parity=p,
        ))
    return out


def verify_main_theorem(pi: SimpleSystem, orientation: str,
                        builder: Callable | None = None) -> list[dict]:
    """Per positive root: indecomposable, dimension vector, parity.  Never raises on failure."""
    rows = []
    for obj in build_table(pi, orientation, builder or build_from_chain):
        coeffs = pi.coefficients(obj.root)
        checks = {
            "indecomposable": (not obj.rep.is_zero()) and is_indecomposable(forget_F(obj.rep)),
            "dimension": obj.dim_vector == coeffs,
            "parity": obj.parity == obj.root.parity,
        }
        rows.append(report_row(obj, checks))
    return rows


def report_row(obj: RootObject, checks: dict) -> dict:
    return {
        "root": obj.root.label(ascii=True),
        "dim_vector": list(obj.dim_vector),
        "super_dims": [[d.even, d.odd] for d in obj.rep.sdims],
        "parity": obj.parity,
        "word_prefix": list(obj.word_prefix),
        "indecomposable": checks["indecomposable"],
        "checks": checks,
        "ok": all(checks.values()),
    }


def grothendieck_check(pi: SimpleSystem, orientation: str) -> dict:
    """Classes of ``X_alpha`` and of ``X_{-alpha} = T X_alpha`` against the root lattice."""
    table = build_table(pi, orientation)
    k = pi.rank
    pos = [obj.dim_vector for obj in table]
    classes = {obj.root: obj.dim_vector for obj in table}
    for obj in table:
        classes[-obj.root] = tuple(-x for x in obj.dim_vector)
    span_rank = rank(Matrix.from_rows(pos)) if pos else 0
    simples_present = all(simple_coeffs(i, k) in pos for i in range(1, k + 1))
    all_r = all_roots(pi.system)
    matches = all(classes.get(r) == pi.coefficients(r) for r in all_r)
    negatives = all(classes[-obj.root] == tuple(-x for x in obj.dim_vector) for obj in table)
    distinct = len(set(classes.values())) == len(classes)
    parity_ok = all(obj.parity == obj.root.parity for obj in table)
    return {
        "rank": span_rank,
        "lattice_rank": k,
        "simples_form_basis": simples_present and span_rank == k,
        "class_count": len(classes),
        "root_count": len(all_r),
        "classes_match_roots": matches,
        "negatives_are_shifts": negatives,
        "classes_distinct": distinct,
        "parity_grading": parity_ok,
        "ok": (span_rank == k and simples_present and matches and negatives and distinct
               and parity_ok and len(classes) == len(all_r)),
    }


# ---------------------------------------------------------------------------
# periodic Auslander-Reiten quiver

def projective_dims(orientation: str) -> list[Coeffs]:
    """``dim P_i(j)`` = number of oriented paths ``i -> ... -> j``."""
    q = ColouredQuiver.uncoloured(orientation)
    out = []
    for i in q.vertices:
        v = [0] * q.k
        v[i - 1] = 1
        for step in (1, -1):
            j = i
            while 1 <= j + step <= q.k:
                e = min(j, j + step)
                if q.edge(e) != (j, j + step):
                    break
                j += step
                v[j - 1] = 1
        out.append(tuple(v))
    return out


def bipartition(i: int) -> int:
    return (i - 1) % 2


def ar_levels(orientation: str) -> tuple[int, ...]:
    """Level of the projective at each vertex: minus the height, lifted to the bipartite parity."""
    h = height_from_orientation(orientation)
    top = max(h.values)
    lvl = [top - v for v in h.values]
    if (lvl[0] + bipartition(1)) % 2:
        lvl = [x + 1 for x in lvl]
    return tuple(x % h.modulus for x in lvl)


@dataclass
class ARQuiver:
    k: int
    levels: int
    vertices: list[tuple[int, int]]
    arrows: list[tuple[tuple[int, int], tuple[int, int]]]
    coeffs: dict[tuple[int, int], Coeffs]
    labels: dict[tuple[int, int], SuperRoot] = field(default_factory=dict)
    colour: dict[tuple[int, int], int] = field(default_factory=dict)
    coxeter: Word = ()

    def tau(self, v: tuple[int, int]) -> tuple[int, int]:
        i, n = v
        return i, (n + 2) % self.levels

    def phi(self) -> dict[Coeffs, tuple[int, int]]:
        return {c: v for v, c in self.coeffs.items()}

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "levels": self.levels,
            "coxeter": list(self.coxeter),
            "vertices": [
                {"vertex": list(v), "coeffs": list(self.coeffs[v]),
                 "root": self.labels[v].label(ascii=True) if v in self.labels else None,
                 "parity": self.colour.get(v)}
                for v in self.vertices
            ],
        }


def gamma_hat(k: int) -> tuple[list[tuple[int, int]], list[tuple[tuple[int, int], tuple[int, int]]]]:
    levels = 2 * (k + 1)
    verts = [(i, n) for i in range(1, k + 1) for n in range(levels) if (n + bipartition(i)) % 2 == 0]
    arrows = [((i, n), (j, (n + 1) % levels)) for (i, n) in verts for j in (i - 1, i + 1) if 1 <= j <= k]
    return verts, arrows


def classical_ar_quiver(orientation: str) -> ARQuiver:
    """``Phi`` for A_k: Coxeter orbits of projective dimension vectors placed column by column."""
    k = len(orientation) + 1
    levels = 2 * (k + 1)
    cox = coxeter_element(orientation)
    verts, arrows = gamma_hat(k)
    coeffs: dict[tuple[int, int], Coeffs] = {}
    for i, (beta, lvl) in enumerate(zip(projective_dims(orientation), ar_levels(orientation)), start=1):
        x = beta
        for step in range(k + 1):
            v = (i, (lvl + 2 * step) % levels)
            if v in coeffs:
                raise ConstructionError(f"position {v} hit twice")
            coeffs[v] = x
            x = apply_word(cox, x)
        if x != beta:
            raise ConstructionError(f"Coxeter orbit of P_{i} does not close after h steps")
    ar = ARQuiver(k, levels, verts, arrows, coeffs, coxeter=cox)
    _assert_ar(ar)
    return ar


def _assert_ar(ar: ARQuiver) -> None:
    k = ar.k
    if set(ar.coeffs) != set(ar.vertices):
        raise ConstructionError("Phi does not cover the vertices of the AR quiver")
    vals = list(ar.coeffs.values())
    if len(set(vals)) != len(vals) or len(vals) != k * (k + 1):
        raise ConstructionError("Phi is not injective on roots")
    phi = ar.phi()
    for c, v in phi.items():
        if phi.get(apply_word(ar.coxeter, c)) != ar.tau(v):
            raise ConstructionError(f"tau(Phi({c})) != Phi(C {c})")
    for (i, n) in ar.vertices:
        up = ar.coeffs[(i, (n + 2) % ar.levels)]
        mid = [ar.coeffs[(j, (n + 1) % ar.levels)] for j in (i - 1, i + 1) if 1 <= j <= k]
        lhs = tuple(a + b for a, b in zip(ar.coeffs[(i, n)], up))
        rhs = tuple(sum(col) for col in zip(*mid)) if mid else (0,) * k
        if lhs != rhs:
            raise ConstructionError(f"mesh at {(i, n)} is not additive")


def build_ar_quiver(pi: SimpleSystem, orientation: str) -> ARQuiver:
    """The periodic AR quiver labelled by roots of A(n, m) and coloured by parity."""
    ar = classical_ar_quiver(orientation)
    for v, c in ar.coeffs.items():
        root = pi.from_coefficients(c)
        ar.labels[v] = root
        ar.colour[v] = root.parity
    return ar


def emit_dot(ar: ARQuiver, ascii: bool = False) -> str:
    """Deterministic DOT text; odd vertices are drawn as double circles marked ⊗."""
    odd = "(x)" if ascii else "⊗"
    lines = ["digraph GammaHat {", "  rankdir=BT;", '  node [fontname="Helvetica"];']
    for (i, n) in ar.vertices:
        name = f"v{i}_{n}"
        root = ar.labels.get((i, n))
        text = root.label(ascii) if root is not None else ",".join(map(str, ar.coeffs[(i, n)]))
        if ar.colour.get((i, n)):
            attrs = f'shape=doublecircle, label="{odd}", xlabel="{text}"'
        else:
            attrs = f'shape=circle, label="", xlabel="{text}"'
        lines.append(f"  {name} [{attrs}, pos=\"{i},{n}!\"];")
    for (a, b) in ar.arrows:
        lines.append(f"  v{a[0]}_{a[1]} -> v{b[0]}_{b[1]};")
    for v in ar.vertices:
        t = ar.tau(v)
        lines.append(f"  v{v[0]}_{v[1]} -> v{t[0]}_{t[1]} [style=dashed, constraint=false, label=\"tau\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_report(rows: list[dict]) -> str:
    return json.dumps(rows, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# sweeps

def st_variants(n: int, m: int) -> list[SimpleSystem]:
    """Every ``Pi_{S,T}`` with either sign, in a fixed order."""
    from itertools import combinations

    from .roots import simple_system_from_st

    def chains(top: int, allow_zero: bool):
        lo = 0 if allow_zero else 1
        for r in range(top - lo + 1):
            for cuts in combinations(range(lo, top), r):
                yield list(cuts) + [top]

    out = []
    for S in chains(n, True):
        for T in chains(m, False):
            for sign in (1, -1):
                try:
                    pi = simple_system_from_st(n, m, S, T, sign)
                except RootError:
                    continue
                if pi not in out:
                    out.append(pi)
    return out


def simple_system_family(n: int, m: int, limit: int = 6) -> list[SimpleSystem]:
    """Distinct simple systems: ``Pi_{S,T}`` variants interleaved with reflection-generated ones."""
    from .roots import distinguished_simple_system, reflect_simple_system

    base = distinguished_simple_system(n, m)
    reflected, frontier, seen = [], [base], {base}
    while frontier and len(reflected) < 4 * limit:
        nxt = []
        for pi in frontier:
            for i in range(1, pi.rank + 1):
                r = reflect_simple_system(pi, i)
                if r not in seen:
                    seen.add(r)
                    reflected.append(r)
                    nxt.append(r)
        frontier = nxt
    out: list[SimpleSystem] = []
    pools = [st_variants(n, m), reflected]
    while len(out) < limit and any(pools):
        for pool in pools:
            while pool:
                pi = pool.pop(0)
                if pi not in out:
                    out.append(pi)
                    break
    return out[:limit]


def near_inverse_ok(X: SuperRep) -> list[int]:
    """Sinks ``i`` of ``X`` (with ``X`` not simple at ``i``) where ``S_i^+ S_i^- X`` is not isomorphic to ``X``."""
    from .srep import super_is_isomorphic

    bad = []
    q = X.quiver
    for i in q.vertices:
        if not q.is_sink(i):
            continue
        if X.dim_vector == simple_coeffs(i, q.k):
            continue
        Y = super_reflect(super_reflect(X, i, "-"), i, "+")
        if Y.quiver != q or not super_is_isomorphic(X, Y):
            bad.append(i)
    return bad


def classical_indecomposables(orientation: str) -> list:
    """Indecomposables of the uncoloured quiver, built by classical BGP functors along the adapted word."""
    from .rep import bgp_plus, simple_rep

    q0 = ColouredQuiver.uncoloured(orientation)
    word = adapted_longest_word(orientation)
    quivers = [q0]
    for i in word:
        quivers.append(reflect_quiver(quivers[-1], i))
    out = []
    for j, i_j in enumerate(word):
        X = simple_rep(quivers[j], i_j)
        for t in range(j - 1, -1, -1):
            X = bgp_plus(X, word[t])
        out.append(X)
    return out


def render_table(table: list[RootObject], ascii: bool = False) -> str:
    """One line per positive root: label, parity and the graded rendering of ``X_alpha``."""
    return "".join(f"{obj.root.label(ascii)}\t{obj.parity}\t{obj.rep.render(ascii)}\n" for obj in table)


def reachable_simple_systems(n: int, m: int, depth: int) -> list[SimpleSystem]:
    """Simple systems within ``depth`` odd/even reflections of the distinguished one, sorted."""
    from .roots import distinguished_simple_system, reflect_simple_system

    base = distinguished_simple_system(n, m)
    seen, frontier = {base}, [base]
    for _ in range(depth):
        nxt = []
        for pi in frontier:
            for i in range(1, pi.rank + 1):
                r = reflect_simple_system(pi, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return sorted(seen, key=lambda p: [r.coords for r in p.roots])
