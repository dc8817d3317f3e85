"""Zigzag and truncated preprojective algebras, quadratic duality, centers."""

from __future__ import annotations

import pytest

from quiverhh.fields import QQ, GF
from quiverhh.quiver import path_tree, star_tree, dynkin_tree, standard_form
from quiverhh.pathalg import (GeneratorSymbol, Word, AlgebraElement, zigzag,
                              preprojective, zigzag_quadratic_data,
                              quadratic_dual, center_dims, QuadraticData)

F2 = GF(2)


def a2():
    return standard_form(path_tree(2), 1)


def test_zigzag_a2_dims():
    z = zigzag(a2(), QQ)
    assert z.graded_dims() == {0: 2, 1: 2, 2: 2}
    assert z.dim == 6


def test_zigzag_a1_is_dual_numbers_on_degree_two():
    z = zigzag(standard_form(path_tree(1), 1), QQ)
    assert z.graded_dims() == {0: 1, 2: 1}
    x = z.by_name["x"]
    assert z.mult(x, x) == {}


def test_zigzag_d4_distinct_leg_products_vanish():
    # paths leaf -> center -> other leaf are zero; loops through one leg agree
    q = standard_form(star_tree(3), 0)
    z = zigzag(q, QQ)
    a10, a01 = z.by_name["a[1<0]"], z.by_name["a[0<1]"]
    a20, a02 = z.by_name["a[2<0]"], z.by_name["a[0<2]"]
    s0, s1 = z.by_name["s[0]"], z.by_name["s[1]"]
    assert z.mult(a10, a02) == {}          # path 2 -> 0 -> 1 dies
    assert z.mult(a10, a20) == {}          # not composable
    assert z.mult(a01, a10) == {s0: QQ(1)}
    assert z.mult(a02, a20) == {s0: QQ(1)}
    assert z.mult(a10, a01) == {s1: QQ(1)}


def test_zigzag_products_graded():
    z = zigzag(standard_form(path_tree(3), 1), QQ)
    for b1 in z.basis:
        for b2 in z.basis:
            for k, _ in z.mult(b1.index, b2.index).items():
                assert z.basis[k].degree == b1.degree + b2.degree


def test_preprojective_a2():
    pi = preprojective(a2(), QQ, 4)
    assert pi.dim == 4
    assert pi.stabilized
    assert pi.per_degree_dims == {0: 2, 1: 2, 2: 0, 3: 0, 4: 0}


def test_preprojective_a1():
    pi = preprojective(standard_form(path_tree(1), 1), QQ, 3)
    assert pi.dim == 1 and pi.stabilized


def test_preprojective_star4_grows():
    pi = preprojective(standard_form(star_tree(4), 0), QQ, 2)
    assert pi.per_degree_dims == {0: 5, 1: 8, 2: 15}
    assert not pi.stabilized


def test_preprojective_d4():
    pi = preprojective(standard_form(star_tree(3), 0), QQ, 8)
    assert [pi.per_degree_dims[i] for i in range(6)] == [4, 6, 8, 6, 4, 0]
    assert pi.stabilized


def test_preprojective_root_independent():
    t = dynkin_tree("D", 5)
    dims = None
    for root in t.vertices:
        pi = preprojective(standard_form(t, root), QQ, 8)
        cur = [pi.per_degree_dims[i] for i in range(9)]
        if dims is None:
            dims = cur
        assert cur == dims


def test_preprojective_char_2_d4():
    # relation signs disappear mod 2 but dims match the characteristic-0 ones
    pi = preprojective(standard_form(star_tree(3), 0), F2, 6)
    assert [pi.per_degree_dims[i] for i in range(6)] == [4, 6, 8, 6, 4, 0]


def test_quadratic_dual_of_a1_zigzag_is_free():
    qd = zigzag_quadratic_data(standard_form(path_tree(1), 1), QQ)
    dual = quadratic_dual(qd)
    assert len(dual.relations) == 0
    (xd,) = dual.generators
    assert (xd.r, xd.s) == (1, -2)        # natural degree r + s = -1
    alg = dual.algebra(5)
    assert [alg.per_degree_dims[i] for i in range(6)] == [1, 1, 1, 1, 1, 1]


def test_quadratic_dual_of_zigzag_is_preprojective():
    for tree, root, bound in [(path_tree(2), 1, 4), (path_tree(3), 1, 6),
                              (star_tree(3), 0, 8)]:
        q = standard_form(tree, root)
        dual = quadratic_dual(zigzag_quadratic_data(q, QQ))
        alg = dual.algebra(bound)
        pi = preprojective(q, QQ, bound)
        assert alg.per_degree_dims == pi.per_degree_dims
        # dual arrows reverse endpoints and sit in bidegree (1, -1)
        for g in dual.generators:
            assert (g.r, g.s) == (1, -1)


def test_quadratic_dual_is_involution_on_relation_spans():
    q = standard_form(star_tree(3), 0)
    qd = zigzag_quadratic_data(q, QQ)
    ddual = quadratic_dual(quadratic_dual(qd))
    back = {g.name: g0 for g, g0 in zip(ddual.generators, qd.generators)}

    def span_of(relations, rename=None):
        # reduced row echelon form over a common word ordering: equal spans
        # compare equal as dicts
        rows = []
        for rel in relations:
            row = {}
            for w, c in rel.items():
                a, b = w.letters
                if rename:
                    a, b = rename[a.name], rename[b.name]
                row[(a.name, b.name)] = c
            rows.append(row)

        def axpy(target, c, source):
            for k, v in source.items():
                nv = QQ.sub(target.get(k, QQ.zero), QQ.mul(c, v))
                if QQ.is_zero(nv):
                    target.pop(k, None)
                else:
                    target[k] = nv

        pivots = {}
        for row in rows:
            row = dict(row)
            while row:
                hit = [k for k in row if k in pivots]
                if not hit:
                    break
                axpy(row, row[max(hit)], pivots[max(hit)])
            if not row:
                continue
            key = max(row)
            c = row[key]
            new = {k: QQ.div(v, c) for k, v in row.items()}
            for other in pivots.values():
                if key in other:
                    axpy(other, other[key], new)
            pivots[key] = new
        return pivots

    orig = span_of(qd.relations)
    twice = span_of(ddual.relations, rename=back)
    assert orig == twice


def test_quadratic_dual_of_a2_zigzag_data_round_trip():
    qd = zigzag_quadratic_data(a2(), QQ)
    assert len(qd.relations) == 0         # no length-2 paths survive grading
    dual = quadratic_dual(qd)
    assert len(dual.relations) == 2       # everything is dual-orthogonal
    ddual = quadratic_dual(dual)
    assert len(ddual.relations) == 0
    assert sorted((g.r, g.s) for g in ddual.generators) == \
        sorted((g.r, g.s) for g in qd.generators)


def test_center_zigzag_a2():
    z = zigzag(a2(), QQ)
    assert center_dims(z, range(0, 3)) == {0: 1, 1: 0, 2: 2}


def test_center_star4_matches_leaf_corner():
    q = standard_form(star_tree(4), 0)
    pi = preprojective(q, QQ, 8)
    window = range(0, 7)
    centers = center_dims(pi, window)
    corner = {d: len(pi.basis_at(source=1, target=1, degree=d))
              for d in window}
    assert centers == corner
    assert centers == {0: 1, 1: 0, 2: 0, 3: 0, 4: 2, 5: 0, 6: 1}


def test_center_star5_is_scalars_only():
    pi = preprojective(standard_form(star_tree(5), 0), QQ, 5)
    assert center_dims(pi, range(0, 4)) == {0: 1, 1: 0, 2: 0, 3: 0}


def test_quadratic_data_rejects_bad_relations():
    v = GeneratorSymbol("v", 1, 1, 1, 1)
    with pytest.raises(ValueError):
        QuadraticData(QQ, [v], [{Word((v,)): QQ(1)}])


def test_word_composability():
    g = GeneratorSymbol("g", 1, 2, 1, 0)
    h = GeneratorSymbol("h", 2, 3, 1, 0)
    assert Word((h, g)).source == 1 and Word((h, g)).target == 3
    with pytest.raises(ValueError):
        Word((g, h))
    assert AlgebraElement.of(Word((h, g))).mul(
        AlgebraElement.of(Word.unit(1)), QQ) == AlgebraElement.of(Word((h, g)))
