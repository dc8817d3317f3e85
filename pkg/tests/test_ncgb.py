"""Noncommutative Groebner bases, quotient dimensions, ideal equality."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quiverhh.fields import QQ, GF
from quiverhh.linalg import SparseMatrix, rank
from quiverhh.ncgb import (NCPoly, groebner, normal_form, quotient_dims,
                           normal_words, ideal_equal, corner_ideals,
                           alternating_word)

F2 = GF(2)


def P(f, *terms):
    """terms: (coeff, word-string over single letters)."""
    return NCPoly.of(f, [(tuple(w), c) for c, w in terms])


def test_single_letter_ideal():
    gb = groebner([NCPoly.letter(QQ, "x")], QQ, 5)
    assert gb.generators == [NCPoly.letter(QQ, "x")]
    q = quotient_dims(gb, 5)
    assert q.dims == {0: 1, 1: 0, 2: 0, 3: 0, 4: 0, 5: 0}
    assert q.verdict == "FINITE" and q.total == 1


def test_anticommutator_basis():
    _, j4 = corner_ideals(4, QQ)
    gb = groebner(j4, QQ, 10)
    assert gb.generators == [P(QQ, (1, "xx")), (P(QQ, (1, "xy"), (1, "yx"))),
                             P(QQ, (1, "yy"))]
    q = quotient_dims(gb, 10)
    assert q.total == 4
    assert normal_words(gb, 10) == [(), ("x",), ("y",), ("x", "y")]


def test_length_four_alternating_basis():
    i6, _ = corner_ideals(6, QQ)
    gb = groebner(i6, QQ, 12)
    assert gb.generators == [
        P(QQ, (1, "xx")), P(QQ, (1, "yy")),
        NCPoly.of(QQ, [(alternating_word("x", "y", 4), 1),
                       (alternating_word("y", "x", 4), 1)]),
    ]
    q = quotient_dims(gb, 12)
    assert q.verdict == "FINITE"
    assert q.dims[4] == 1 and q.dims[5] == 0
    assert q.total == 8


def test_corner_quotients_are_finite_for_all_small_n():
    for n in range(4, 9):
        gens, _ = corner_ideals(n, QQ)
        gb = groebner(gens, QQ, 2 * (n - 2) + 2)
        q = quotient_dims(gb, 2 * (n - 2) + 2)
        assert q.verdict == "FINITE"
        # normal words are the alternating ones of length < n - 1
        assert q.total == 2 * (n - 2)
        lead_lengths = sorted(len(w) for w in gb.leading_words())
        assert lead_lengths == [2, 2, n - 2]


def test_ideal_equalities():
    i4, j4 = corner_ideals(4, QQ)
    assert ideal_equal(i4, j4, QQ, 10)
    i6, j6 = corner_ideals(6, F2)
    assert ideal_equal(i6, j6, F2, 12)
    assert not ideal_equal([NCPoly.letter(QQ, "x")],
                           [NCPoly.letter(QQ, "y")], QQ, 5)


def test_ideal_equality_every_n_and_char():
    # the long generator is inhomogeneous, so completion needs headroom
    # past its top degree 2(n-2) before the low-degree consequences appear
    for f in (QQ, F2, GF(3)):
        for n in (4, 5, 6, 7):
            i, j = corner_ideals(n, f)
            assert ideal_equal(i, j, f, 2 * (n - 2) + 4), (f, n)


def test_bound_too_small_rejected():
    gens, _ = corner_ideals(6, QQ)
    with pytest.raises(ValueError):
        groebner(gens, QQ, 3)


def test_corner_ideals_reject_tiny_n():
    with pytest.raises(ValueError):
        corner_ideals(2, QQ)


def brute_quotient_dims(gens, f, dmax, letters=("x", "y")):
    """Rank-based slice oracle; needs homogeneous generators."""
    dims = {}
    for d in range(dmax + 1):
        words = list(itertools.product(letters, repeat=d))
        index = {w: i for i, w in enumerate(words)}
        rows = []
        for g in gens:
            gd = g.degree()
            if g.is_zero() or gd > d:
                continue
            for la in range(d - gd + 1):
                lb = d - gd - la
                for left in itertools.product(letters, repeat=la):
                    for right in itertools.product(letters, repeat=lb):
                        rows.append({index[left + w + right]: c
                                     for w, c in g.terms.items()})
        m = SparseMatrix(max(len(rows), 1), len(words))
        for i, row in enumerate(rows):
            for j, c in row.items():
                m[i, j] = c
        dims[d] = len(words) - rank(m, f)
    return dims


def test_quotient_dims_against_slice_oracle():
    for f in (QQ, F2):
        for n in (4, 5, 6):
            _, jn = corner_ideals(n, f)
            dmax = 2 * (n - 2)
            gb = groebner(jn, f, dmax)
            q = quotient_dims(gb, dmax)
            assert q.dims == brute_quotient_dims(jn, f, dmax), (f, n)


words5 = st.lists(
    st.tuples(st.integers(-3, 3),
              st.text(alphabet="xy", min_size=0, max_size=5)),
    max_size=6,
)


@given(words5)
@settings(max_examples=50, deadline=None)
def test_normal_form_idempotent(terms):
    gens, _ = corner_ideals(6, QQ)
    gb = groebner(gens, QQ, 12)
    p = NCPoly.of(QQ, [(tuple(w), c) for c, w in terms])
    once = gb.normal_form(p, QQ)
    assert gb.normal_form(once, QQ) == once


@given(words5, words5)
@settings(max_examples=50, deadline=None)
def test_normal_form_linear_and_multiplicative(terms_a, terms_b):
    _, gens = corner_ideals(5, QQ)
    gb = groebner(gens, QQ, 10)
    p = NCPoly.of(QQ, [(tuple(w), c) for c, w in terms_a])
    q = NCPoly.of(QQ, [(tuple(w), c) for c, w in terms_b])
    nf = lambda r: gb.normal_form(r, QQ)
    assert nf(p.add(q, QQ)) == nf(nf(p).add(nf(q), QQ))
    assert nf(p.mul(q, QQ)) == nf(nf(p).mul(nf(q), QQ))


def test_normal_form_reduces_relations_to_zero():
    gens, _ = corner_ideals(6, QQ)
    gb = groebner(gens, QQ, 12)
    for g in gens:
        assert gb.normal_form(g, QQ).is_zero()
    # a random two-sided multiple also dies
    x, y = NCPoly.letter(QQ, "x"), NCPoly.letter(QQ, "y")
    multiple = y.mul(gens[2], QQ).mul(x.add(y, QQ), QQ)
    assert gb.normal_form(multiple, QQ).is_zero()


def test_poly_arithmetic():
    f = QQ
    x, y = NCPoly.letter(f, "x"), NCPoly.letter(f, "y")
    s = x.add(y, f)
    assert s.pow(2, f) == P(f, (1, "xx"), (1, "xy"), (1, "yx"), (1, "yy"))
    assert s.sub(s, f).is_zero()
    assert s.degree() == 1 and s.pow(2, f).is_homogeneous()
    assert not s.add(s.pow(2, f), f).is_homogeneous()
    assert alternating_word("x", "y", 5) == ("x", "y", "x", "y", "x")
