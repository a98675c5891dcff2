from __future__ import annotations

import random
from pathlib import Path

import pytest

from superquiver.gabriel import (
    ConstructionError,
    build_ar_quiver,
    build_table,
    build_X_alpha,
    classical_ar_quiver,
    emit_dot,
    grothendieck_check,
    near_inverse_ok,
    projective_dims,
    reachable_simple_systems,
    render_table,
    simple_system_family,
    verify_main_theorem,
)
from superquiver.quiver import all_orientations
from superquiver.rep import is_indecomposable
from superquiver.roots import (
    RootError,
    SuperRootSystem,
    all_roots,
    apply_word,
    distinguished_simple_system,
    parse_root,
)
from superquiver.srep import forget_F

GOLDEN = Path(__file__).parent / "golden"
A22 = distinguished_simple_system(2, 2)


def sdims(X) -> list[str]:
    return [str(d) for d in X.sdims]


@pytest.mark.parametrize("root,expected,parity", [
    ("e1-e2", ["1|0", "0|0", "0|0"], 0),
    ("e1-d1", ["1|0", "0|1", "0|0"], 1),
    ("e1-d2", ["1|0", "0|1", "1|0"], 1),
    ("e2-d1", ["0|0", "0|1", "0|0"], 1),
    ("e2-d2", ["0|0", "0|1", "1|0"], 1),
    ("d1-d2", ["0|0", "0|0", "1|0"], 0),
])
def test_a22_objects(root, expected, parity):
    X = build_X_alpha(A22, "<<", parse_root(root, 2, 2))
    assert sdims(X) == expected
    assert X.parity == parity
    assert X.quiver.parity == (0, 1, 0)


def test_a22_table_golden():
    assert render_table(build_table(A22, "<<")) == (GOLDEN / "a22_table.txt").read_text()


def test_non_positive_root_rejected():
    with pytest.raises(RootError):
        build_X_alpha(A22, "<<", parse_root("d2-d1", 2, 2))


def test_a11_single_odd_vertex():
    pi = distinguished_simple_system(1, 1)
    rows = verify_main_theorem(pi, "")
    assert len(rows) == 1 and rows[0]["ok"] and rows[0]["root"] == "e1-d1"
    assert rows[0]["super_dims"] == [[0, 1]]


def test_report_schema():
    row = verify_main_theorem(A22, "<<")[0]
    assert {"root", "dim_vector", "parity", "word_prefix", "indecomposable", "checks"} <= set(row)


@pytest.mark.parametrize("orient", all_orientations(4))
def test_a32_all_orientations(orient):
    for pi in simple_system_family(3, 2, 5):
        for row in verify_main_theorem(pi, orient):
            assert row["ok"], row


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 2), (1, 4)])
def test_grothendieck(n, m):
    pi = distinguished_simple_system(n, m)
    for orient in all_orientations(pi.rank):
        report = grothendieck_check(pi, orient)
        assert report["ok"], report
        assert report["class_count"] == len(all_roots(SuperRootSystem(n, m)))


def test_objects_are_bricks():
    for obj in build_table(A22, ">>"):
        assert is_indecomposable(forget_F(obj.rep))


@pytest.mark.parametrize("n,m", [(2, 1), (2, 2), (3, 1)])
def test_near_inverse(n, m):
    for pi in simple_system_family(n, m):
        for orient in all_orientations(pi.rank):
            for obj in build_table(pi, orient):
                assert near_inverse_ok(obj.rep) == []


# -- AR quiver ---------------------------------------------------------------

def test_projective_dims():
    assert projective_dims("<<") == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]
    assert projective_dims("><") == [(1, 1, 0), (0, 1, 0), (0, 1, 1)]


def test_a3_shape():
    ar = classical_ar_quiver("<<")
    assert len(ar.vertices) == 12
    columns = {i: [v for v in ar.vertices if v[0] == i] for i in (1, 2, 3)}
    assert [len(c) for c in columns.values()] == [4, 4, 4]


def test_a22_ar_colouring():
    ar = build_ar_quiver(A22, "<<")
    expected = {
        (1, 0): ("ε1−ε2", 0), (1, 2): ("ε2−δ1", 1), (1, 4): ("δ1−δ2", 0), (1, 6): ("δ2−ε1", 1),
        (2, 1): ("ε1−δ1", 1), (2, 3): ("ε2−δ2", 1), (2, 5): ("δ1−ε1", 1), (2, 7): ("δ2−ε2", 1),
        (3, 0): ("δ2−δ1", 0), (3, 2): ("ε1−δ2", 1), (3, 4): ("ε2−ε1", 0), (3, 6): ("δ1−ε2", 1),
    }
    got = {v: (ar.labels[v].label(), ar.colour[v]) for v in ar.vertices}
    assert got == expected


def test_a22_dot_golden():
    dot = emit_dot(build_ar_quiver(A22, "<<"))
    assert dot == (GOLDEN / "a22_ar.dot").read_text()
    assert dot == emit_dot(build_ar_quiver(A22, "<<"))


def test_a11_dot_is_two_cycle():
    ar = build_ar_quiver(distinguished_simple_system(1, 1), "")
    assert len(ar.vertices) == 2
    dot = emit_dot(ar, ascii=True)
    assert "v1_0 -> v1_2" in dot and "v1_2 -> v1_0" in dot
    assert "(x)" in dot


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, 6) if n + m <= 6])
def test_ar_bijection_and_twist(n, m):
    for pi in simple_system_family(n, m, 3):
        for orient in all_orientations(pi.rank):
            ar = build_ar_quiver(pi, orient)
            roots = all_roots(pi.system)
            assert len(ar.vertices) == (n + m) * (n + m - 1) == len(roots)
            assert set(ar.labels.values()) == set(roots)
            phi = {r: v for v, r in ar.labels.items()}
            for r in roots:
                c = pi.coefficients(r)
                image = pi.from_coefficients(apply_word(ar.coxeter, c))
                assert phi[image] == ar.tau(phi[r])
                # colour of tau(Phi(alpha)) equals the independently computed parity of C alpha
                assert ar.colour[ar.tau(phi[r])] == image.parity


def test_colourless_ar_matches_classical():
    pi = distinguished_simple_system(3, 2)
    for orient in all_orientations(4):
        assert build_ar_quiver(pi, orient).coeffs == classical_ar_quiver(orient).coeffs


def test_bad_placement_detected(monkeypatch):
    import superquiver.gabriel as g

    monkeypatch.setattr(g, "ar_levels", lambda o: tuple(0 for _ in range(len(o) + 1)))
    with pytest.raises(ConstructionError):
        g.classical_ar_quiver("<<")


@pytest.mark.parametrize("n,m", [(n, N - n) for N in range(2, 6) for n in range(1, N)])
def test_all_systems_within_four_reflections(n, m):
    for pi in reachable_simple_systems(n, m, 4):
        for orient in all_orientations(pi.rank):
            assert all(row["ok"] for row in verify_main_theorem(pi, orient))


@pytest.mark.parametrize("n", range(1, 6))
def test_sampled_systems_within_four_reflections_rank5(n):
    rng = random.Random(n)
    systems = reachable_simple_systems(n, 6 - n, 4)
    for pi in rng.sample(systems, 8):
        for orient in all_orientations(pi.rank):
            assert all(row["ok"] for row in verify_main_theorem(pi, orient))
