from __future__ import annotations

import random

import pytest

from helpers import connected_support, intervals, random_rep, zero_one_reps
from superquiver.gabriel import classical_indecomposables
from superquiver.linalg import Matrix
from superquiver.quiver import ColouredQuiver, QuiverError, all_orientations
from superquiver.rep import (
    Representation,
    RepresentationError,
    bgp,
    bgp_minus,
    bgp_plus,
    bricks_isomorphic,
    decompose_check,
    end_dimension,
    find_isomorphism,
    hom_dimension,
    interval_rep,
    is_indecomposable,
    is_isomorphic,
    is_morphism,
    simple_rep,
    zero_rep,
)
from superquiver.roots import reflect_coefficients


@pytest.mark.parametrize("k", range(1, 7))
def test_brute_force_classification_matches_intervals(k):
    q = ColouredQuiver.uncoloured(">" * (k - 1))
    found = set()
    for X in zero_one_reps(q):
        if X.is_zero():
            continue
        comb = connected_support(X)
        assert is_indecomposable(X) == comb
        if comb:
            found.add(X.dims)
    assert sorted(found) == intervals(k)


@pytest.mark.parametrize("k", range(1, 7))
def test_bgp_indecomposables_are_intervals(k):
    for orient in ("<" * (k - 1), ">" * (k - 1)):
        inds = classical_indecomposables(orient)
        assert sorted(X.dims for X in inds) == intervals(k)
        assert len(inds) == k * (k + 1) // 2
        q = ColouredQuiver.uncoloured(orient)
        for X in inds:
            support = [i for i in q.vertices if X.dim(i)]
            assert is_isomorphic(X, interval_rep(q, support[0], support[-1]))


def test_bgp_on_simple_and_interval():
    q = ColouredQuiver.uncoloured("<<")  # 1 <- 2 <- 3, sink 1
    assert bgp_minus(simple_rep(q, 1), 1).is_zero()
    Y = bgp_minus(interval_rep(q, 1, 2), 1)
    assert Y.dims == (0, 1, 0)
    assert Y.quiver.orientation == "><"
    Z = bgp_minus(interval_rep(q, 2, 2), 1)
    assert Z.dims == (1, 1, 0)


def test_bgp_preconditions():
    q = ColouredQuiver.uncoloured("<<")
    with pytest.raises(QuiverError):
        bgp_minus(simple_rep(q, 2), 2)
    with pytest.raises(QuiverError):
        bgp_plus(simple_rep(q, 1), 1)
    with pytest.raises(ValueError):
        bgp(simple_rep(q, 1), 1, "x")


@pytest.mark.parametrize("k", range(2, 6))
def test_bgp_acts_by_reflection_on_indecomposables(k):
    for orient in all_orientations(k):
        q = ColouredQuiver.uncoloured(orient)
        for X in classical_indecomposables(orient):
            for i in q.vertices:
                if not q.is_sink(i) or X.dims == tuple(int(j == i) for j in q.vertices):
                    continue
                Y = bgp_minus(X, i)
                assert Y.dims == reflect_coefficients(i, X.dims)
                assert is_indecomposable(Y)
                back = bgp_plus(Y, i)
                assert back.quiver == q
                assert is_isomorphic(back, X) and bricks_isomorphic(back, X)


def test_hom_dimensions():
    q = ColouredQuiver.uncoloured(">")  # 1 -> 2
    P1 = interval_rep(q, 1, 2)
    S1, S2 = simple_rep(q, 1), simple_rep(q, 2)
    assert hom_dimension(S2, P1) == 1
    assert hom_dimension(P1, S2) == 0
    assert hom_dimension(P1, S1) == 1
    assert end_dimension(S1.direct_sum(S1)) == 4
    assert not is_indecomposable(S1.direct_sum(S2))
    with pytest.raises(RepresentationError):
        is_indecomposable(zero_rep(q))


def test_find_isomorphism_is_morphism():
    q = ColouredQuiver.uncoloured("><")
    X = interval_rep(q, 1, 3)
    Y = Representation.from_maps(q, (1, 1, 1), [[[3]], [[-2]]])
    phi = find_isomorphism(X, Y)
    assert phi is not None and is_morphism(X, Y, phi)
    assert find_isomorphism(X, interval_rep(q, 1, 2)) is None


@pytest.mark.parametrize("seed", range(8))
def test_decompose_random(seed):
    rng = random.Random(seed)
    orient = "".join(rng.choice("<>") for _ in range(3))
    q = ColouredQuiver.uncoloured(orient)
    inds = classical_indecomposables(orient)
    X = random_rep(rng, q, max_dim=2)
    parts = decompose_check(X, inds)
    total = tuple(sum(col) for col in zip(*parts)) if parts else (0,) * q.k
    assert total == X.dims


def test_decompose_known_sum():
    q = ColouredQuiver.uncoloured(">>")
    X = interval_rep(q, 1, 2).direct_sum(interval_rep(q, 2, 3)).direct_sum(simple_rep(q, 2))
    assert decompose_check(X, classical_indecomposables(">>")) == sorted(
        [(1, 1, 0), (0, 1, 1), (0, 1, 0)])


def test_representation_validation():
    q = ColouredQuiver.uncoloured(">")
    with pytest.raises(Exception):
        Representation(q, (1, 1), (Matrix.from_rows([[1, 2]]),))


def test_json_round_trip():
    q = ColouredQuiver.uncoloured("<>")
    X = interval_rep(q, 1, 3)
    assert Representation.from_json(X.to_json()) == X
