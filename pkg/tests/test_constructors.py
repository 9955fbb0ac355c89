import itertools
import json
from fractions import Fraction
from math import factorial

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lrbquiver import arrangement_faces, boolean_arrangement, braid_arrangement, free_lrb, load_table, sign_product, validate_lrb
from lrbquiver.constructors import (
    braid_normals,
    load_arrangement,
    ordered_set_partitions,
    partition_signs,
    save_table,
)
from lrbquiver.elimination import cell_nonempty, feasible
from lrbquiver.lattice import support_of
from lrbquiver.lrb import InvalidTableError, SizeGuardError

from conftest import DATA, THREE_LINES, brute_is_lrb


def _sign(v):
    return (v > 0) - (v < 0)


def sampled_faces_2d(normals, grid=12):
    """Sign vectors hit by the origin and by lattice directions: every face of a
    central line arrangement in the plane contains one of them (the rays are
    rational for rational normals and chambers are open cones)."""
    pts = [(0, 0)] + [(x, y) for x in range(-grid, grid + 1) for y in range(-grid, grid + 1) if (x, y) != (0, 0)]
    return {tuple(_sign(h[0] * x + h[1] * y) for h in normals) for x, y in pts}


@pytest.mark.parametrize("n,size", [(1, 2), (2, 5), (3, 16), (4, 65)])
def test_free_sizes(n, size):
    assert size == sum(factorial(n) // factorial(n - k) for k in range(n + 1))
    S = free_lrb(n)
    assert S.size == size and S.identity == 0 and S.labels[0] == "1"


def test_free_guard():
    with pytest.raises(SizeGuardError):
        free_lrb(7)


def test_sign_product_examples():
    assert sign_product((0, 0, 0), (1, -1, 0)) == (1, -1, 0)
    assert sign_product((1, 0), (-1, -1)) == (1, -1)
    with pytest.raises(ValueError):
        sign_product((1,), (1, 0))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*[st.lists(st.sampled_from([-1, 0, 1]), min_size=n, max_size=n)] * 2)))
def test_sign_product_band_axioms(pair):
    x, y = map(tuple, pair)
    assert sign_product(x, x) == x
    assert sign_product(sign_product(x, y), x) == sign_product(x, y)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_boolean(n):
    S = boolean_arrangement(n)
    assert S.size == 3 ** n
    assert brute_is_lrb(S)
    L, supp = support_of(S)
    assert L.size == 2 ** n
    # support is the zero set: sign vectors with the same zero pattern share support
    faces = [tuple(lab) for lab in S.labels]
    for x in range(S.size):
        for y in range(S.size):
            same = [c == "0" for c in faces[x]] == [c == "0" for c in faces[y]]
            assert same == (supp[x] == supp[y])


def test_boolean_lattice_is_subsets():
    S = boolean_arrangement(3)
    L, supp = support_of(S)
    zeros = {}
    for x, lab in enumerate(S.labels):
        zeros[supp[x]] = frozenset(i for i, c in enumerate(lab) if c != "0")
    for X in range(L.size):
        for Y in range(L.size):
            assert L.leq[X, Y] == (zeros[X] <= zeros[Y])


@pytest.mark.parametrize("n,size,chambers", [(2, 3, 2), (3, 13, 6), (4, 75, 24)])
def test_braid_counts(n, size, chambers):
    assert len(ordered_set_partitions(n)) == size
    S = braid_arrangement(n)
    assert S.size == size
    assert sum(1 for lab in S.labels if lab.count("|") == n - 1) == chambers == factorial(n)


def test_braid_product_matches_sign_product():
    n = 4
    parts = ordered_set_partitions(n)
    S = braid_arrangement(n)
    signs = [partition_signs(p, n) for p in parts]
    assert len(set(signs)) == len(parts)
    for i, j in itertools.product(range(S.size), repeat=2):
        assert signs[S.mult[i, j]] == sign_product(signs[i], signs[j])


def test_single_hyperplane():
    assert arrangement_faces([[1, 0]]).size == 3


def test_three_lines_against_sampling():
    S = arrangement_faces(THREE_LINES)
    expected = sampled_faces_2d(THREE_LINES)
    assert len(expected) == 13
    got = {tuple({"0": 0, "+": 1, "-": -1}[c] for c in lab) for lab in S.labels}
    assert got == expected
    assert S.size == 13


@pytest.mark.parametrize("m", [1, 2, 3])
def test_generic_lines(m):
    normals = [[1, 0], [Fraction(1, 2), 1], [-3, 2]][:m]
    S = arrangement_faces(normals)
    got = {tuple({"0": 0, "+": 1, "-": -1}[c] for c in lab) for lab in S.labels}
    assert got == sampled_faces_2d(normals)
    # a single line has no separate origin face
    assert S.size == (4 * m + 1 if m > 1 else 3)
    assert sum(1 for lab in S.labels if "0" not in lab) == 2 * m


def test_braid_normals_isomorphic_to_braid():
    n = 3
    G = arrangement_faces(braid_normals(n))
    C = braid_arrangement(n)
    assert G.size == C.size == 13
    parts = ordered_set_partitions(n)
    # first block holds the smallest coordinates: sign(x_i - x_j) = -1 when i's block is earlier
    lab_index = {lab: i for i, lab in enumerate(G.labels)}
    to_g = np.array([lab_index["".join({0: "0", 1: "+", -1: "-"}[s] for s in partition_signs(p, n))] for p in parts])
    assert sorted(to_g.tolist()) == list(range(G.size))
    assert np.array_equal(to_g[C.mult], G.mult[np.ix_(to_g, to_g)])


def test_elimination_basics():
    # x > 0 and -x > 0 is empty; x > 0, y = 0 is not
    assert not feasible([((1,), ">"), ((-1,), ">")], 1)
    assert feasible([((1, 0), ">"), ((0, 1), "=")], 2)
    # x >= 0, -x >= 0 forces x = 0, so x + y > 0 with -y >= 0 is empty
    assert not feasible([((1, 0), ">="), ((-1, 0), ">="), ((1, 1), ">"), ((0, -1), ">=")], 2)
    assert not cell_nonempty([(1, 0), (0, 1), (1, 1)], (1, 1, -1))
    assert cell_nonempty([(1, 0), (0, 1), (1, 1)], (1, -1, 1))


def test_arrangement_input_errors(tmp_path):
    with pytest.raises(InvalidTableError):
        arrangement_faces([[0, 0]])
    with pytest.raises(InvalidTableError):
        arrangement_faces([[1, 0], [1, 0]])
    with pytest.raises(SizeGuardError):
        arrangement_faces([[1, i] for i in range(11)])
    p = tmp_path / "a.json"
    p.write_text(json.dumps({"dim": 2, "normals": [["1/2", "0"], ["0", "1"]]}))
    assert load_arrangement(p) == [(Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(1))]


def test_bundled_arrangement():
    S = arrangement_faces(load_arrangement(DATA / "three_lines.json"))
    assert S.size == 13


def test_table_roundtrip(tmp_path, free3):
    p = tmp_path / "t.json"
    save_table(free3, p)
    again = load_table(p)
    assert np.array_equal(again.mult, free3.mult) and again.labels == free3.labels


def test_load_table_rejections(tmp_path):
    with pytest.raises(InvalidTableError) as info:
        load_table(DATA / "bad_lrb2.json")
    assert "LRB2" in str(info.value)
    p = tmp_path / "noid.json"
    p.write_text(json.dumps({"size": 2, "identity": None, "labels": ["x", "y"], "mult": [[0, 1], [1, 1]]}))
    with pytest.raises(InvalidTableError):
        load_table(p)
    p.write_text("{not json")
    with pytest.raises(InvalidTableError):
        load_table(p)


def test_constructors_validate():
    for S in (free_lrb(4), boolean_arrangement(3), braid_arrangement(4), arrangement_faces(THREE_LINES)):
        assert validate_lrb(S).ok
