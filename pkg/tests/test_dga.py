"""Ginzburg and contact DG-algebras: differentials, cohomology windows."""

from __future__ import annotations

import pytest

from quiverhh.fields import QQ, GF
from quiverhh.quiver import (path_tree, star_tree, dynkin_tree, standard_form)
from quiverhh.pathalg import GeneratorSymbol, Word, AlgebraElement
from quiverhh.signs import DEFAULT_SIGNS
from quiverhh.dga import (FreeDGA, build_dga, cohomology_bigraded,
                          cohomology_filtered, GINZBURG, LCA_STANDARD, LCA_DN)
from quiverhh.pathalg import preprojective
from quiverhh.ncgb import corner_ideals, groebner, quotient_dims

F2 = GF(2)
F3 = GF(3)


def by_name(dga):
    return {g.name: g for g in dga.generators}


def elem(f, *terms):
    """terms: (coeff, name sequence or vertex for a unit word)."""
    out = AlgebraElement.zero()
    for coeff, letters in terms:
        out = out.add(AlgebraElement.of(Word(letters), coeff), f)
    return out


def test_ginzburg_a2_differential():
    d = build_dga(standard_form(path_tree(2), 1), GINZBURG, QQ)
    g = by_name(d)
    assert d.diff[g["g[2<1]"]].is_zero()
    assert d.diff[g["g[1<2]"]].is_zero()
    assert d.diff[g["h[1]"]] == elem(QQ, (1, (g["g[1<2]"], g["g[2<1]"])))
    assert d.diff[g["h[2]"]] == elem(QQ, (-1, (g["g[2<1]"], g["g[1<2]"])))


def test_ginzburg_bidegrees():
    d = build_dga(standard_form(star_tree(3), 0), GINZBURG, QQ)
    for g in d.generators:
        if g.name.startswith("h"):
            assert (g.r, g.s) == (1, -2)
        else:
            assert (g.r, g.s) == (1, -1)
    assert d.is_bihomogeneous()


def test_d_squared_checked_at_construction():
    v = 1
    g = GeneratorSymbol("g", v, v, 1, -1)
    h = GeneratorSymbol("h", v, v, 1, -2)
    u = GeneratorSymbol("u", v, v, 1, -3)
    diff = {h: AlgebraElement.of(Word((g, g))),
            u: AlgebraElement.of(Word((h, g)))}
    with pytest.raises(AssertionError):
        FreeDGA(QQ, [v], [g, h, u], diff)
    # dropping the offending generator gives a valid DG-algebra
    FreeDGA(QQ, [v], [g, h], {h: AlgebraElement.of(Word((g, g)))})


def test_differential_raises_total_degree_by_one():
    bad = GeneratorSymbol("b", 1, 1, 1, -1)
    with pytest.raises(AssertionError):
        FreeDGA(QQ, [1], [bad], {bad: AlgebraElement.of(Word((bad, bad)))})


def test_apply_differential_on_units():
    d = build_dga(standard_form(path_tree(2), 1), GINZBURG, QQ)
    assert d.apply_differential(AlgebraElement.of(Word.unit(1))).is_zero()


def test_two_letter_leibniz_explicit():
    d = build_dga(standard_form(path_tree(2), 1), GINZBURG, QQ)
    g = by_name(d)
    w = Word((g["h[1]"], g["g[1<2]"]))
    # d(h1 g12) = (dh1) g12 + (-1)^{|h1|} h1 (dg12) and dg12 = 0
    expected = elem(QQ, (1, (g["g[1<2]"], g["g[2<1]"], g["g[1<2]"])))
    assert d.differential_word(w) == expected


def test_leibniz_exhaustive_short_words():
    for dga in (build_dga(standard_form(dynkin_tree("D", 4), 1), LCA_DN, QQ),
                build_dga(standard_form(path_tree(3), 2), GINZBURG, F3)):
        f = dga.field
        words = dga.words_of_length(1) + dga.words_of_length(2)
        for w1 in words:
            x = AlgebraElement.of(w1)
            dx = dga.apply_differential(x)
            for w2 in words:
                if w1.source != w2.target:
                    continue
                y = AlgebraElement.of(w2)
                dy = dga.apply_differential(y)
                lhs = dga.apply_differential(x.mul(y, f))
                sgn = DEFAULT_SIGNS.sign("leibniz", w1.total)
                rhs = dx.mul(y, f).add(x.mul(dy, f).scale(sgn, f), f)
                assert lhs == rhs, (w1, w2)


def test_lca_standard_matches_ginzburg_on_paths():
    # on a path rooted at a leaf the two constructions agree letter for letter
    for n in (2, 3, 4):
        q = standard_form(path_tree(n), 1)
        gz = build_dga(q, GINZBURG, QQ)
        lca = build_dga(q, LCA_STANDARD, QQ)
        rename = {}
        for c in lca.generators:
            gname = c.name.replace("c[", "g[") if "<" in c.name else \
                c.name.replace("c[", "h[")
            rename[c] = by_name(gz)[gname]
        assert all((rename[c].r, rename[c].s) == (c.r, c.s)
                   for c in lca.generators)
        for c in lca.generators:
            image = {Word(tuple(rename[a] for a in w.letters)): coeff
                     for w, coeff in lca.diff[c].terms.items()}
            assert image == gz.diff[rename[c]].terms, c


def test_lca_standard_star_subsets():
    q = standard_form(star_tree(4), 0)
    lca = build_dga(q, LCA_STANDARD, QQ)
    g = by_name(lca)
    d_center = lca.diff[g["c[0]"]]
    assert len(d_center.terms) == 15      # nonempty subsets of 4 children
    pair = {1: (g["c[0<1]"], g["c[1<0]"]), 2: (g["c[0<2]"], g["c[2<0]"])}
    w12 = Word(pair[1] + pair[2])
    assert d_center.terms[w12] == QQ(1)
    # a leaf sees only its parent term
    assert lca.diff[g["c[1]"]] == elem(QQ, (-1, (g["c[1<0]"], g["c[0<1]"])))


def test_lca_dn4_differential_matches_presentation():
    q = standard_form(dynkin_tree("D", 4), 1)
    d = build_dga(q, LCA_DN, QQ)
    g = by_name(d)

    def w(*pairs):
        return tuple(g[f"c[{a}<{b}]"] for a, b in pairs)

    assert d.diff[g["c[3]"]] == elem(
        QQ,
        (-1, w((3, 1), (1, 3))),
        (-1, w((3, 2), (2, 3))),
        (1, w((3, 4), (4, 3))),
        (-1, w((3, 1), (1, 3), (3, 2), (2, 3))),
    )
    assert d.diff[g["c[1]"]] == elem(QQ, (1, w((1, 3), (3, 1))))
    assert d.diff[g["c[2]"]] == elem(QQ, (1, w((2, 3), (3, 2))))
    assert d.diff[g["c[4]"]] == elem(QQ, (-1, w((4, 3), (3, 4))))
    for name in ("c[1<3]", "c[3<1]", "c[3<4]", "c[4<3]"):
        assert d.diff[g[name]].is_zero()
    assert not d.is_bihomogeneous()       # the length-4 term breaks (1,0)


def test_lca_dn5_tail_differential():
    d = build_dga(standard_form(dynkin_tree("D", 5), 1), LCA_DN, QQ)
    g = by_name(d)
    assert d.diff[g["c[4]"]] == elem(
        QQ,
        (-1, (g["c[4<3]"], g["c[3<4]"])),
        (1, (g["c[4<5]"], g["c[5<4]"])),
    )
    assert d.diff[g["c[5]"]] == elem(QQ, (-1, (g["c[5<4]"], g["c[4<5]"])))


def test_lca_dn_rejects_non_d_trees():
    with pytest.raises(ValueError):
        build_dga(standard_form(path_tree(3), 1), LCA_DN, QQ)


def test_words_total_degree_matches_brute_force():
    d = build_dga(standard_form(dynkin_tree("D", 4), 1), LCA_DN, QQ)
    for t in (1, 0, -1, -2):
        expected = [w for r in range(7) for w in d.words_of_length(r)
                    if w.total == t]
        assert d.words_total_degree(t, 7) == expected


def test_ginzburg_a2_cohomology_degrees():
    d = build_dga(standard_form(path_tree(2), 1), GINZBURG, QQ)
    table = cohomology_bigraded(d, 6, range(-8, 1))
    totals = table.total_degree_dims()
    assert totals[0] == 4 and totals[-1] == 4 and totals[-2] == 4


def test_ginzburg_a3_cohomology_is_preprojective_tower():
    q = standard_form(path_tree(3), 1)
    d = build_dga(q, GINZBURG, QQ)
    # the degree -1 and -2 layers repeat the preprojective tower shifted by
    # bidegree (h-1, -h) = (3, -4), so the window needs r up to 8
    table = cohomology_bigraded(d, 8, range(-11, 1))
    pi = preprojective(q, QQ, 6)
    for r in range(5):
        assert table.dim(r, -r) == pi.per_degree_dims[r]
    assert table.dim(3, -4) == 3 and table.dim(4, -5) == 4
    totals = table.total_degree_dims()
    assert totals[0] == totals[-1] == totals[-2] == pi.dim


def test_ginzburg_star4_concentrated_in_degree_zero():
    q = standard_form(star_tree(4), 0)
    d = build_dga(q, GINZBURG, QQ)
    table = cohomology_bigraded(d, 4, range(-5, 1))
    pi = preprojective(q, QQ, 4)
    for r in range(4):
        assert table.dim(r, -r) == pi.per_degree_dims[r]
    totals = table.total_degree_dims()
    assert -1 not in totals and -2 not in totals


def test_cohomology_bigraded_rejects_filtered_only_dga():
    d = build_dga(standard_form(dynkin_tree("D", 4), 1), LCA_DN, QQ)
    with pytest.raises(ValueError):
        cohomology_bigraded(d, 3, range(-4, 1))


def test_filtered_rejects_length_decreasing_differential():
    u = GeneratorSymbol("u", 1, 1, 1, -2)
    d = FreeDGA(QQ, [1], [u], {u: AlgebraElement.of(Word.unit(1))})
    with pytest.raises(ValueError):
        cohomology_filtered(d, 0, 6)


def test_filtered_lca_dn4():
    tree = dynkin_tree("D", 4)
    d = build_dga(standard_form(tree, 1), LCA_DN, QQ)
    fc = cohomology_filtered(d, 0, 10)
    assert fc.stabilized
    assert fc.dim == 28                   # dim of the D4 preprojective algebra
    corner = fc.component(3, 3)           # the trivalent vertex
    assert corner == 4
    # the corner is K<x,y>/(x^2, y^2, (x+y+xy)^2)
    gens, _ = corner_ideals(4, QQ)
    assert quotient_dims(groebner(gens, QQ, 8), 8).total == corner


def test_filtered_lca_equals_ginzburg_on_a2():
    q = standard_form(path_tree(2), 1)
    gz = build_dga(q, GINZBURG, QQ)
    lca = build_dga(q, LCA_STANDARD, QQ)
    for t in (0, -1, -2):
        a = cohomology_filtered(gz, t, 8)
        b = cohomology_filtered(lca, t, 8)
        assert a.component_dims == b.component_dims
        assert a.stabilized == b.stabilized


def test_filtered_lca_dn5_matches_preprojective_mod2():
    q = standard_form(dynkin_tree("D", 5), 1)
    pi = preprojective(q, F2, 8)
    d = build_dga(q, LCA_DN, F2)
    fc = cohomology_filtered(d, 0, 12)
    assert fc.stabilized
    assert fc.dim == pi.dim == 60
    for w in q.vertices:
        for v in q.vertices:
            assert fc.component(w, v) == len(pi.basis_at(source=v, target=w))
