"""Random generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from superquiver.linalg import GradedSpace, Matrix
from superquiver.quiver import ColouredQuiver
from superquiver.rep import Representation
from superquiver.srep import SuperRep


def random_quiver(rng: random.Random, k: int) -> ColouredQuiver:
    parity = tuple(rng.randint(0, 1) for _ in range(k))
    orient = "".join(rng.choice("<>") for _ in range(k - 1))
    return ColouredQuiver.from_orientation(parity, orient)


def random_matrix(rng: random.Random, rows: int, cols: int, mask=None, density: float = 0.7) -> Matrix:
    grid = []
    for r in range(rows):
        row = []
        for c in range(cols):
            ok = mask is None or mask(r, c)
            row.append(Fraction(rng.randint(-2, 2)) if ok and rng.random() < density else Fraction(0))
        grid.append(row)
    return Matrix(rows, cols, tuple(tuple(r) for r in grid))


def random_super_rep(rng: random.Random, k: int | None = None, max_piece: int = 3,
                     quiver: ColouredQuiver | None = None, shuffle: bool = True) -> SuperRep:
    """Graded pieces of dimension <= ``max_piece``; basis parities optionally interleaved."""
    q = quiver or random_quiver(rng, k or rng.randint(1, 5))
    spaces = []
    for _ in q.vertices:
        par = [0] * rng.randint(0, max_piece) + [1] * rng.randint(0, max_piece)
        if shuffle:
            rng.shuffle(par)
        spaces.append(GradedSpace(tuple(par)))
    maps = []
    for e, (s, t) in enumerate(q.edges, start=1):
        deg = q.edge_degree(e)
        sp, tp = spaces[s - 1].parities, spaces[t - 1].parities
        maps.append(random_matrix(rng, len(tp), len(sp), lambda r, c: tp[r] == (sp[c] + deg) % 2))
    return SuperRep(q, tuple(spaces), tuple(maps))


def random_rep(rng: random.Random, q: ColouredQuiver, max_dim: int = 3) -> Representation:
    dims = [rng.randint(0, max_dim) for _ in q.vertices]
    maps = [random_matrix(rng, dims[t - 1], dims[s - 1]) for s, t in q.edges]
    return Representation(q, tuple(dims), tuple(maps))


def intervals(k: int) -> list[tuple[int, ...]]:
    return sorted(tuple(1 if a <= x <= b else 0 for x in range(1, k + 1))
                  for a in range(1, k + 1) for b in range(a, k + 1))


def zero_one_reps(q: ColouredQuiver):
    """Every representation with dims in {0,1} and maps in {0,1}."""
    for dims in itertools.product((0, 1), repeat=q.k):
        live = [e for e, (s, t) in enumerate(q.edges) if dims[s - 1] and dims[t - 1]]
        for vals in itertools.product((0, 1), repeat=len(live)):
            maps = []
            for e, (s, t) in enumerate(q.edges):
                if e in live:
                    maps.append([[vals[live.index(e)]]])
                else:
                    maps.append([[0] * dims[s - 1]] * dims[t - 1])
            yield Representation.from_maps(q, dims, maps)


def connected_support(X: Representation) -> bool:
    """Combinatorial oracle: one block of vertices joined by nonzero maps."""
    support = [i for i in X.quiver.vertices if X.dim(i)]
    if not support:
        return False
    if support != list(range(support[0], support[-1] + 1)):
        return False
    return all(not X.map(e).is_zero() for e in range(support[0], support[-1]))
