import itertools

import numpy as np
import pytest

from lrbquiver import (
    arrangement_faces,
    arrow_count,
    arrow_count_inductive,
    braid_arrangement,
    build_quiver,
    count_paths,
    ext_dimension,
    free_lrb,
    hasse_covers,
    semigroup_idempotents,
    to_dot,
)
from lrbquiver.lattice import interval, support_of
from lrbquiver.quiver import local_band, path_count_matrix

from conftest import THREE_LINES, trivial_band


def letters_of(S, supp, X):
    return frozenset(S.labels[supp.members[X][0]].replace("1", ""))


def enumerate_paths(Q, X, Y):
    """Count paths by listing them edge by edge (each parallel arrow distinct)."""
    edges = [(a, b, i) for a in range(Q.size) for b in range(Q.size) for i in range(int(Q.arrows[a, b]))]
    found = 0
    stack = [X]
    while stack:
        v = stack.pop()
        if v == Y:
            found += 1
        stack.extend(b for a, b, _ in edges if a == v)
    return found


def test_trivial_quiver():
    S = trivial_band()
    Q = build_quiver(S)
    assert Q.arrows.tolist() == [[0]]
    assert to_dot(Q).count("->") == 0 and to_dot(Q).count("label") == 1


def test_diagonal_zero(example):
    L, supp = support_of(example)
    for X in range(L.size):
        for y in supp.members[X]:
            assert arrow_count(example, X, X, y=y) == 0


def test_free3_top_to_bottom(free3):
    L, _ = support_of(free3)
    assert arrow_count(free3, L.top, L.bottom) == 2


def test_free3_quiver_formula(free3):
    L, supp = support_of(free3)
    Q = build_quiver(free3)
    for X, Y in itertools.product(range(L.size), repeat=2):
        x, y = letters_of(free3, supp, X), letters_of(free3, supp, Y)
        expected = len(x - y) - 1 if y < x and len(x - y) >= 2 else 0
        assert Q.arrows[X, Y] == expected


def test_three_lines_no_long_arrow():
    S = arrangement_faces(THREE_LINES)
    L, _ = support_of(S)
    assert arrow_count(S, L.top, L.bottom) == 0


def test_braid3_is_hasse(braid3):
    L, _ = support_of(braid3)
    Q = build_quiver(braid3)
    arrows = {(X, Y) for X, Y in zip(*np.nonzero(Q.arrows))}
    assert arrows == hasse_covers(L)
    assert Q.arrows.max() == 1


def test_quiver_invariants(example):
    L, _ = support_of(example)
    Q = build_quiver(example)
    for X, Y in itertools.product(range(L.size), repeat=2):
        if Q.arrows[X, Y]:
            assert L.lt(Y, X)
    assert (Q.arrows >= 0).all()


def test_inductive_examples(free3):
    L, supp = support_of(free3)
    a = supp[free3.index("a")]
    assert arrow_count_inductive(free3, L.top, a) == 1
    assert arrow_count_inductive(free3, a, a) == 0
    y = free3.index("a")
    sub = local_band(free3, y, L.top)
    assert sub.band.size == 5 and sub.band.labels[0] == "a"


def test_ext_free2():
    S = free_lrb(2)
    L, _ = support_of(S)
    sys_ = semigroup_idempotents(S)
    assert ext_dimension(S, sys_, L.top, L.bottom) == 1
    assert ext_dimension(S, sys_, L.bottom, L.top) == 0
    assert ext_dimension(trivial_band(), semigroup_idempotents(trivial_band()), 0, 0) == 0


def test_triple_agreement(example):
    L, _ = support_of(example)
    sys_ = semigroup_idempotents(example)
    for X, Y in itertools.product(range(L.size), repeat=2):
        a = arrow_count(example, X, Y)
        assert a == arrow_count_inductive(example, X, Y) == ext_dimension(example, sys_, X, Y)


def test_y_independence(example):
    L, supp = support_of(example)
    for X, Y in itertools.product(range(L.size), repeat=2):
        values = {arrow_count(example, X, Y, y=y) for y in supp.members[Y]}
        assert len(values) == 1


def test_wrong_support_y_rejected(free3):
    L, supp = support_of(free3)
    with pytest.raises(ValueError):
        arrow_count(free3, L.top, L.bottom, y=free3.index("a"))


def _smile(S, L, supp, X, y, x1, x2):
    m = S.mult
    yx1, yx2 = m[y, x1], m[y, x2]
    for w in range(S.size):
        if w == y or m[y, w] != w:
            continue
        if w != yx1 and w != yx2 and m[w, yx1] == yx1 and m[w, yx2] == yx2:
            return True
    return False


@pytest.mark.parametrize("make", [lambda: free_lrb(3), lambda: braid_arrangement(3)])
def test_smile_symmetry_in_y(make):
    # x ~ x' iff x ~ yx'
    S = make()
    L, supp = support_of(S)
    for X, Y in itertools.product(range(L.size), repeat=2):
        if not L.leq[Y, X]:
            continue
        y = supp.members[Y][0]
        for x1, x2 in itertools.product(supp.members[X], repeat=2):
            assert _smile(S, L, supp, X, y, x1, x2) == _smile(S, L, supp, X, y, x1, S.mult[y, x2])


def test_local_quiver_is_full_subquiver(free3):
    L, supp = support_of(free3)
    Q = build_quiver(free3)
    for y in range(free3.size):
        Y = supp[y]
        for X in range(L.size):
            if not L.leq[Y, X]:
                continue
            sub = local_band(free3, y, X)
            Ls, suppb = support_of(sub.band)
            Qs = build_quiver(sub.band)
            to_l = [supp[int(sub.embedding[m[0]])] for m in suppb.members]
            assert sorted(to_l) == interval(L, Y, X)
            for a, b in itertools.product(range(Ls.size), repeat=2):
                assert Qs.arrows[a, b] == Q.arrows[to_l[a], to_l[b]]


def test_count_paths_free3(free3):
    L, supp = support_of(free3)
    Q = build_quiver(free3)
    assert count_paths(Q, L.top, L.bottom) == 2
    for X in range(L.size):
        assert count_paths(Q, X, X) == 1
    a, ab = supp[free3.index("a")], supp[free3.index("ab")]
    assert count_paths(Q, ab, a) == 0


@pytest.mark.parametrize("make", [lambda: free_lrb(3), lambda: free_lrb(4), lambda: braid_arrangement(4)])
def test_count_paths_against_enumeration(make):
    Q = build_quiver(make())
    P = path_count_matrix(Q)
    for X, Y in itertools.product(range(Q.size), repeat=2):
        c = count_paths(Q, X, Y)
        assert c == P[X, Y] == enumerate_paths(Q, X, Y)


def test_free_path_recurrence():
    # p_n = sum_{i<n} C(n, i) (n - i - 1) p_i
    from math import comb

    p = [1]
    for n in range(1, 5):
        p.append(sum(comb(n, i) * (n - i - 1) * p[i] for i in range(n)))
    for n in range(1, 5):
        S = free_lrb(n)
        L, _ = support_of(S)
        assert count_paths(build_quiver(S), L.top, L.bottom) == p[n]


def test_dot(free3):
    Q = build_quiver(free3)
    text = to_dot(Q)
    assert text == to_dot(build_quiver(free_lrb(3)))
    assert text.count("label=") == 8
    # 6 pairs at distance 2 with one arrow, one pair at distance 3 with two
    assert text.count("->") == 6 * 1 + 1 * 2 == int(Q.arrows.sum())
    assert text.startswith("digraph")
