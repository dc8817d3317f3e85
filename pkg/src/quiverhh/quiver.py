"""Trees, rooted standard forms, Dynkin classification, derived quivers.

A tree is an undirected connected acyclic graph.  Rooting it orients every
edge away from the root and fixes an ordering of the children at each vertex
(input label order unless overridden); both choices feed the DG-algebra
constructors, so they are recorded explicitly.
"""

from __future__ import annotations

import json


class Tree:
    """Finite tree: vertex labels plus unordered edges."""

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        if not self.vertices:
            raise ValueError("tree needs at least one vertex")
        vset = set(self.vertices)
        norm = []
        seen = set()
        for e in edges:
            u, v = e
            if u not in vset or v not in vset:
                raise ValueError(f"edge {e!r} mentions unknown vertex")
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {e!r}")
            seen.add(key)
            norm.append((u, v))
        self.edges = tuple(norm)
        if len(self.edges) != len(self.vertices) - 1:
            raise ValueError("edge count must be vertex count minus one")
        # adjacency in input label order
        pos = {v: i for i, v in enumerate(self.vertices)}
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency = {v: tuple(sorted(ws, key=pos.__getitem__))
                          for v, ws in adj.items()}
        # connectivity (acyclicity then follows from the edge count)
        stack = [self.vertices[0]]
        reached = {self.vertices[0]}
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != len(self.vertices):
            raise ValueError("tree must be connected")

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def __repr__(self):
        return f"Tree({len(self.vertices)} vertices)"


class RootedQuiver:
    """Tree with a root: arrows point away from the root, children ordered."""

    def __init__(self, tree: Tree, root, children, parent, depth):
        self.tree = tree
        self.root = root
        self.children = children      # vertex -> ordered tuple of children
        self.parent = parent          # vertex -> parent vertex or None
        self.depth = depth            # vertex -> distance from root
        self.vertices = tree.vertices

    def arrows(self):
        """Oriented tree arrows (source, target), away from the root."""
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop(0)
            for w in self.children[v]:
                out.append((v, w))
                stack.append(w)
        return tuple(out)

    def __repr__(self):
        return f"RootedQuiver(root={self.root!r}, {len(self.vertices)} vertices)"


def standard_form(t: Tree, root, child_order=None) -> RootedQuiver:
    """Root the tree at root; child order defaults to input label order."""
    if root not in t.adjacency:
        raise ValueError(f"root {root!r} not in tree")
    parent = {root: None}
    depth = {root: 0}
    children = {}
    queue = [root]
    while queue:
        v = queue.pop(0)
        kids = [w for w in t.adjacency[v] if w != parent[v]]
        if child_order and v in child_order:
            given = list(child_order[v])
            if sorted(map(str, given)) != sorted(map(str, kids)):
                raise ValueError(f"child_order for {v!r} must list its children")
            kids = given
        children[v] = tuple(kids)
        for w in kids:
            parent[w] = v
            depth[w] = depth[v] + 1
            queue.append(w)
    return RootedQuiver(t, root, children, parent, depth)


class DynkinClass:
    """ADE classification result; extended marks affine (extended Dynkin) trees."""

    def __init__(self, kind: str, n=None, coxeter=None, extended=False,
                 extended_kind=None):
        self.kind = kind              # "A" | "D" | "E" | "NonDynkin"
        self.n = n
        self.coxeter = coxeter
        self.extended = extended
        self.extended_kind = extended_kind

    @property
    def is_dynkin(self) -> bool:
        return self.kind in ("A", "D", "E")

    def __eq__(self, other):
        return (isinstance(other, DynkinClass)
                and (self.kind, self.n, self.coxeter, self.extended)
                == (other.kind, other.n, other.coxeter, other.extended))

    def __repr__(self):
        if self.is_dynkin:
            return f"{self.kind}({self.n})"
        if self.extended:
            return f"NonDynkin(extended {self.extended_kind})"
        return "NonDynkin"


def _leg_lengths(t: Tree, branch) -> list:
    """Edge-lengths of the simple paths from branch to the leaves, assuming
    every vertex off the branch has degree <= 2."""
    legs = []
    for w in t.adjacency[branch]:
        length = 1
        prev, cur = branch, w
        while t.degree(cur) == 2:
            nxt = [x for x in t.adjacency[cur] if x != prev][0]
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    return sorted(legs)


def classify(t: Tree) -> DynkinClass:
    """Exact ADE recognition, with an extended-Dynkin flag on the affine trees."""
    n = len(t.vertices)
    degrees = [t.degree(v) for v in t.vertices]
    branch = [v for v in t.vertices if t.degree(v) >= 3]
    if not branch:
        return DynkinClass("A", n, coxeter=n + 1)
    if len(branch) == 1:
        b = branch[0]
        if t.degree(b) == 3:
            p, q, r = _leg_lengths(t, b)
            if p == 1 and q == 1:
                return DynkinClass("D", n, coxeter=2 * n - 2)
            if (p, q, r) == (1, 2, 2):
                return DynkinClass("E", 6, coxeter=12)
            if (p, q, r) == (1, 2, 3):
                return DynkinClass("E", 7, coxeter=18)
            if (p, q, r) == (1, 2, 4):
                return DynkinClass("E", 8, coxeter=30)
            if (p, q, r) == (2, 2, 2):
                return DynkinClass("NonDynkin", extended=True, extended_kind="E(6)")
            if (p, q, r) == (1, 3, 3):
                return DynkinClass("NonDynkin", extended=True, extended_kind="E(7)")
            if (p, q, r) == (1, 2, 5):
                return DynkinClass("NonDynkin", extended=True, extended_kind="E(8)")
        if t.degree(b) == 4:
            legs = _leg_lengths(t, b)
            if legs == [1, 1, 1, 1]:
                return DynkinClass("NonDynkin", extended=True, extended_kind="D(4)")
        return DynkinClass("NonDynkin")
    if len(branch) == 2 and max(degrees) == 3:
        # two trivalent forks, each adjacent to two leaves: extended D
        if all(sum(1 for w in t.adjacency[b] if t.degree(w) == 1) == 2
               for b in branch):
            return DynkinClass("NonDynkin", extended=True,
                               extended_kind=f"D({n - 1})")
    return DynkinClass("NonDynkin")


class Arrow:
    """Arrow record of a derived quiver: kind is g (tree arrow), gstar
    (reverse arrow) or h (loop)."""

    __slots__ = ("kind", "source", "target")

    def __init__(self, kind, source, target):
        self.kind = kind
        self.source = source
        self.target = target

    def __iter__(self):
        return iter((self.kind, self.source, self.target))

    def __repr__(self):
        if self.kind == "h":
            return f"h[{self.source}]"
        base = "g*" if self.kind == "gstar" else "g"
        return f"{base}[{self.target}<-{self.source}]"


def derived_quivers(q: RootedQuiver):
    """Double (reverse arrow per arrow) and extended (plus one loop per vertex)."""
    double = []
    for v, w in q.arrows():
        double.append(Arrow("g", v, w))
        double.append(Arrow("gstar", w, v))
    extended = list(double)
    for v in q.vertices:
        extended.append(Arrow("h", v, v))
    return tuple(double), tuple(extended)


# -- standard tree builders -------------------------------------------------

def path_tree(n: int) -> Tree:
    """Type A_n shape: path on vertices 1..n."""
    if n < 1:
        raise ValueError("need n >= 1")
    vs = list(range(1, n + 1))
    return Tree(vs, [(i, i + 1) for i in vs[:-1]])


def star_tree(k: int) -> Tree:
    """Star: center 0 with leaves 1..k."""
    return Tree(range(k + 1), [(0, i) for i in range(1, k + 1)])


def dynkin_tree(kind: str, n: int) -> Tree:
    """Tree of the given ADE type with vertices 1..n.

    D_n uses the presentation labels: leaves 1 and 2 joined to the trivalent
    vertex 3, then the tail 3-4-...-n.
    """
    if kind == "A":
        return path_tree(n)
    if kind == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        vs = list(range(1, n + 1))
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
        return Tree(vs, edges)
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6,7,8}")
        # tail 1-2-...-(n-1) with vertex n attached to vertex 3
        vs = list(range(1, n + 1))
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
        return Tree(vs, edges)
    raise ValueError(f"unknown kind {kind!r}")


def dn_labeling(t: Tree) -> dict:
    """Map the vertices of a D_n tree to the presentation labels 1..n.

    Labels: 1, 2 are the leaves at the trivalent vertex 3 (input order),
    4..n walk down the tail.  Raises on trees that are not type D.
    """
    cls = classify(t)
    if cls.kind != "D":
        raise ValueError(f"tree is {cls!r}, not D_n")
    center = next(v for v in t.vertices if t.degree(v) == 3)
    leaf_nbrs = [w for w in t.adjacency[center] if t.degree(w) == 1]
    n = len(t.vertices)
    if n == 4:
        short = leaf_nbrs[:2]
        tail_start = leaf_nbrs[2]
    else:
        short = leaf_nbrs
        tail_start = next(w for w in t.adjacency[center] if t.degree(w) != 1)
    lab = {short[0]: 1, short[1]: 2, center: 3}
    prev, cur, i = center, tail_start, 4
    while True:
        lab[cur] = i
        nxt = [x for x in t.adjacency[cur] if x != prev]
        if not nxt:
            break
        prev, cur, i = cur, nxt[0], i + 1
    return lab


# -- JSON interface ---------------------------------------------------------

def tree_from_json(obj):
    """Parse {"vertices": [...], "edges": [[u,v],...], "root": u,
    "child_order": {v: [...], ...}?}; returns (Tree, root, child_order)."""
    t = Tree(obj["vertices"], [tuple(e) for e in obj["edges"]])
    root = obj.get("root", t.vertices[0])
    child_order = obj.get("child_order")
    if child_order is not None and not isinstance(child_order, dict):
        raise ValueError("child_order must map vertices to child lists")
    return t, root, child_order


def load_tree(path):
    with open(path) as fh:
        return tree_from_json(json.load(fh))
