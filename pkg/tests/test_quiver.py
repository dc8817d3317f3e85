"""Trees, standard forms, Dynkin classification, derived quivers."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from quiverhh.quiver import (Tree, standard_form, classify, derived_quivers,
                             path_tree, star_tree, dynkin_tree, dn_labeling,
                             tree_from_json)


def test_tree_validation():
    with pytest.raises(ValueError):
        Tree([1, 2, 3], [(1, 2)])                    # disconnected / too few edges
    with pytest.raises(ValueError):
        Tree([1, 2], [(1, 2), (2, 1)])               # duplicate edge
    with pytest.raises(ValueError):
        Tree([1], [(1, 1)])                          # self-loop
    with pytest.raises(ValueError):
        Tree([1, 2, 3, 4], [(1, 2), (3, 4), (1, 3), (2, 4)])  # cycle


def test_standard_form_path():
    q = standard_form(path_tree(3), 1)
    assert q.arrows() == ((1, 2), (2, 3))
    assert q.depth == {1: 0, 2: 1, 3: 2}
    assert q.parent[1] is None and q.parent[3] == 2


def test_standard_form_star():
    t = star_tree(3)
    q = standard_form(t, 0)
    assert set(q.arrows()) == {(0, 1), (0, 2), (0, 3)}
    assert q.children[0] == (1, 2, 3)


def test_standard_form_single_vertex():
    q = standard_form(path_tree(1), 1)
    assert q.arrows() == ()
    assert q.depth == {1: 0}


def test_standard_form_child_order():
    q = standard_form(star_tree(3), 0, child_order={0: (3, 1, 2)})
    assert q.children[0] == (3, 1, 2)
    with pytest.raises(ValueError):
        standard_form(star_tree(3), 0, child_order={0: (3, 1)})


def test_standard_form_bad_root():
    with pytest.raises(ValueError):
        standard_form(path_tree(2), 99)


def test_classify_paths():
    c = classify(path_tree(5))
    assert (c.kind, c.n, c.coxeter) == ("A", 5, 6)
    assert classify(path_tree(1)).coxeter == 2


def test_classify_d4():
    c = classify(star_tree(3))
    assert (c.kind, c.n, c.coxeter) == ("D", 4, 6)


def test_classify_d_and_e_series():
    assert (classify(dynkin_tree("D", 6)).kind,
            classify(dynkin_tree("D", 6)).coxeter) == ("D", 10)
    assert classify(dynkin_tree("E", 6)).coxeter == 12
    assert classify(dynkin_tree("E", 7)).coxeter == 18
    assert classify(dynkin_tree("E", 8)).coxeter == 30


def test_classify_star4_extended():
    c = classify(star_tree(4))
    assert not c.is_dynkin
    assert c.kind == "NonDynkin"
    assert c.extended and c.extended_kind == "D(4)"


def test_classify_star5_not_extended():
    c = classify(star_tree(5))
    assert not c.is_dynkin and not c.extended


@given(st.sampled_from(["A3", "A7", "D4", "D6", "E6", "E8", "star4", "star5"]),
       st.randoms())
@settings(max_examples=40, deadline=None)
def test_classify_relabeling_invariant(name, rng):
    if name.startswith("star"):
        t = star_tree(int(name[4:]))
    else:
        t = dynkin_tree(name[0], int(name[1:]))
    labels = list(t.vertices)
    shuffled = list(labels)
    rng.shuffle(shuffled)
    relabel = dict(zip(labels, shuffled))
    t2 = Tree(shuffled, [(relabel[u], relabel[v]) for u, v in t.edges])
    a, b = classify(t), classify(t2)
    assert (a.kind, a.n, a.coxeter, a.extended) == (b.kind, b.n, b.coxeter, b.extended)


def test_derived_quivers_a2():
    q = standard_form(path_tree(2), 1)
    double, extended = derived_quivers(q)
    assert [(a.kind, a.source, a.target) for a in double] == [
        ("g", 1, 2), ("gstar", 2, 1)]
    assert len(extended) == 4
    assert [(a.kind, a.source) for a in extended[2:]] == [("h", 1), ("h", 2)]


def test_derived_quivers_single_vertex():
    _, extended = derived_quivers(standard_form(path_tree(1), 1))
    assert [(a.kind, a.source, a.target) for a in extended] == [("h", 1, 1)]


def test_derived_quivers_d4_counts():
    double, extended = derived_quivers(standard_form(star_tree(3), 0))
    assert len(double) == 6
    assert len(extended) == 10


def test_every_nonroot_vertex_has_one_parent():
    for t in [path_tree(6), star_tree(4), dynkin_tree("E", 7)]:
        root = t.vertices[0]
        q = standard_form(t, root)
        for v in q.vertices:
            if v == root:
                assert q.parent[v] is None
            else:
                assert q.parent[v] in q.vertices


def test_dn_labeling():
    t = dynkin_tree("D", 5)
    assert dn_labeling(t) == {1: 1, 2: 2, 3: 3, 4: 4, 5: 5}
    # a relabeled copy still gets a valid presentation labeling
    relabel = {1: "a", 2: "b", 3: "c", 4: "d", 5: "e"}
    t2 = Tree(list(relabel.values()),
              [(relabel[u], relabel[v]) for u, v in t.edges])
    lab = dn_labeling(t2)
    adj = {frozenset((lab[u], lab[v])) for u, v in t2.edges}
    assert adj == {frozenset(p) for p in [(1, 3), (2, 3), (3, 4), (4, 5)]}


def test_dn_labeling_rejects_non_d():
    with pytest.raises(ValueError):
        dn_labeling(path_tree(4))


def test_tree_from_json():
    t, root, order = tree_from_json({"vertices": ["u", "v", "w"],
                                     "edges": [["u", "v"], ["v", "w"]]})
    assert classify(t).kind == "A"
    assert root == "u" and order is None
    t, root, _ = tree_from_json({"vertices": [1, 2], "edges": [[1, 2]],
                                 "root": 2})
    assert standard_form(t, root).arrows() == ((2, 1),)
