"""Path-algebra machinery: bigraded words, finite graded algebras (zigzag,
truncated preprojective), quadratic data and quadratic duality.

Products are read right-to-left throughout: in x*y the factor y acts first,
so x*y needs source(x) == target(y).
"""

from __future__ import annotations

from .fields import FieldSpec
from .linalg import SparseMatrix, kernel_and_solve
from .signs import SignConvention, DEFAULT_SIGNS
from .quiver import RootedQuiver


class GeneratorSymbol:
    """Degree-one generator with bidegree (r, s); total degree is r + s."""

    __slots__ = ("name", "source", "target", "r", "s")

    def __init__(self, name, source, target, r=1, s=0):
        self.name = name
        self.source = source
        self.target = target
        self.r = r
        self.s = s

    @property
    def total(self) -> int:
        return self.r + self.s

    def _key(self):
        return (self.name, self.source, self.target, self.r, self.s)

    def __eq__(self, other):
        return isinstance(other, GeneratorSymbol) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return self.name


class Word:
    """Composable word of generators; letters stored left to right, so the
    rightmost letter acts first.  The empty word at v is the idempotent e_v."""

    __slots__ = ("letters", "vertex", "_hash")

    def __init__(self, letters=(), vertex=None):
        letters = tuple(letters)
        for a, b in zip(letters, letters[1:]):
            if a.source != b.target:
                raise ValueError(f"letters {a!r}*{b!r} not composable")
        if not letters and vertex is None:
            raise ValueError("empty word needs a vertex")
        self.letters = letters
        self.vertex = vertex if not letters else None
        self._hash = hash((self.letters, self.vertex))

    @classmethod
    def unit(cls, vertex) -> "Word":
        return cls((), vertex)

    @property
    def source(self):
        return self.letters[-1].source if self.letters else self.vertex

    @property
    def target(self):
        return self.letters[0].target if self.letters else self.vertex

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def r(self) -> int:
        return sum(a.r for a in self.letters)

    @property
    def s(self) -> int:
        return sum(a.s for a in self.letters)

    @property
    def total(self) -> int:
        return self.r + self.s

    def __mul__(self, other):
        """Concatenation other-then-self; None when not composable."""
        if self.source != other.target:
            return None
        if not self.letters:
            return other
        if not other.letters:
            return self
        return Word(self.letters + other.letters)

    def __eq__(self, other):
        return (isinstance(other, Word) and self.letters == other.letters
                and self.vertex == other.vertex)

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (len(self.letters),
                tuple(a.name for a in self.letters),
                str(self.vertex))

    def __repr__(self):
        if not self.letters:
            return f"e[{self.vertex}]"
        return "*".join(a.name for a in self.letters)


class AlgebraElement:
    """Finite linear combination of words; coefficients live in a FieldSpec
    passed explicitly to the arithmetic methods."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def of(cls, word: Word, coeff=1) -> "AlgebraElement":
        return cls({word: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def add(self, other: "AlgebraElement", f: FieldSpec) -> "AlgebraElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = f.add(f(out.get(w, 0)), f(c))
            if f.is_zero(v):
                out.pop(w, None)
            else:
                out[w] = v
        return AlgebraElement(out)

    def scale(self, c, f: FieldSpec) -> "AlgebraElement":
        c = f(c)
        if f.is_zero(c):
            return AlgebraElement()
        return AlgebraElement({w: f.mul(f(v), c) for w, v in self.terms.items()})

    def mul(self, other: "AlgebraElement", f: FieldSpec) -> "AlgebraElement":
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                if w is None:
                    continue
                v = f.add(f(out.get(w, 0)), f.mul(f(c1), f(c2)))
                if f.is_zero(v):
                    out.pop(w, None)
                else:
                    out[w] = v
        return AlgebraElement(out)

    def bidegree(self):
        """(r, s) when homogeneous; raises on mixed elements."""
        degs = {(w.r, w.s) for w in self.terms}
        if len(degs) != 1:
            raise ValueError(f"element not bihomogeneous: {sorted(degs)}")
        return degs.pop()

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=Word.sort_key):
            bits.append(f"({self.terms[w]})*{w!r}")
        return " + ".join(bits)


class BasisElement:
    __slots__ = ("index", "name", "source", "target", "degree")

    def __init__(self, index, name, source, target, degree):
        self.index = index
        self.name = name
        self.source = source
        self.target = target
        self.degree = degree

    def __repr__(self):
        return self.name


class FiniteGradedAlgebra:
    """Finite-dimensional graded algebra given by basis and structure
    constants; the unit is the sum of the vertex idempotents."""

    def __init__(self, field: FieldSpec, elements, products, idempotents,
                 check=True):
        self.field = field
        self.basis = tuple(BasisElement(i, *e) for i, e in enumerate(elements))
        self.by_name = {b.name: b.index for b in self.basis}
        if len(self.by_name) != len(self.basis):
            raise ValueError("duplicate basis names")
        self.idempotent = dict(idempotents)   # vertex -> basis index
        self.vertices = tuple(self.idempotent)
        self._table = {}
        f = field
        for (i, j), val in products.items():
            row = {k: f(c) for k, c in val.items() if not f.is_zero(f(c))}
            if row:
                self._table[i, j] = row
        idem = set(self.idempotent.values())
        for b in self.basis:
            if b.index not in idem:
                ei = self.idempotent[b.target]
                ej = self.idempotent[b.source]
                self._table[ei, b.index] = {b.index: f.one}
                self._table[b.index, ej] = {b.index: f.one}
        for v, i in self.idempotent.items():
            self._table[i, i] = {i: f.one}
        if check:
            self._check()

    def mult(self, i: int, j: int) -> dict:
        """Structure constants of basis_i * basis_j (basis_j acts first)."""
        bi, bj = self.basis[i], self.basis[j]
        if bi.source != bj.target:
            return {}
        return self._table.get((i, j), {})

    def mult_elements(self, x: dict, y: dict) -> dict:
        f = self.field
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, c in self.mult(i, j).items():
                    v = f.add(out.get(k, f.zero), f.mul(f.mul(ci, cj), c))
                    if f.is_zero(v):
                        out.pop(k, None)
                    else:
                        out[k] = v
        return out

    @property
    def dim(self) -> int:
        return len(self.basis)

    def graded_dims(self) -> dict:
        out = {}
        for b in self.basis:
            out[b.degree] = out.get(b.degree, 0) + 1
        return out

    def basis_at(self, source=None, target=None, degree=None):
        out = []
        for b in self.basis:
            if source is not None and b.source != source:
                continue
            if target is not None and b.target != target:
                continue
            if degree is not None and b.degree != degree:
                continue
            out.append(b)
        return out

    def reduced_indices(self):
        """Indices of the non-idempotent basis elements (the augmentation
        complement used by bar complexes)."""
        idem = set(self.idempotent.values())
        return tuple(b.index for b in self.basis if b.index not in idem)

    def _check(self):
        f = self.field
        for b in self.basis:
            ei = self.idempotent[b.target]
            ej = self.idempotent[b.source]
            if self.mult(ei, b.index) != {b.index: f.one}:
                raise AssertionError(f"left unit fails on {b!r}")
            if self.mult(b.index, ej) != {b.index: f.one}:
                raise AssertionError(f"right unit fails on {b!r}")
        for (i, j), row in self._table.items():
            bi, bj = self.basis[i], self.basis[j]
            if bi.source != bj.target:
                raise AssertionError(f"incomposable product stored: {bi!r},{bj!r}")
            for k in row:
                bk = self.basis[k]
                if (bk.source, bk.target) != (bj.source, bi.target):
                    raise AssertionError(f"product {bi!r}*{bj!r} leaves bimodule")
                if bk.degree != bi.degree + bj.degree:
                    raise AssertionError(f"product {bi!r}*{bj!r} not graded")
        n = len(self.basis)
        for i in range(n):
            for j in range(n):
                if self.basis[i].source != self.basis[j].target:
                    continue
                xy = self.mult(i, j)
                for k in range(n):
                    if self.basis[j].source != self.basis[k].target:
                        continue
                    yz = self.mult(j, k)
                    if not xy and not yz:
                        continue
                    left = self.mult_elements(xy, {k: f.one})
                    right = self.mult_elements({i: f.one}, yz)
                    if left != right:
                        raise AssertionError(
                            f"associativity fails at {self.basis[i]!r},"
                            f"{self.basis[j]!r},{self.basis[k]!r}")

    def __repr__(self):
        return f"FiniteGradedAlgebra(dim={self.dim}, field={self.field})"


def _arrow_name(w, v) -> str:
    return f"a[{w}<{v}]"


def zigzag(q: RootedQuiver, f: FieldSpec, evenized=False) -> FiniteGradedAlgebra:
    """Zigzag algebra: idempotents, one arrow per oriented edge pair, one
    degree-2 loop per vertex; all products of degree > 2 vanish.  The single
    vertex gives K[x]/(x^2) with |x| = 2.  evenized shifts the degree of
    e_w(..)e_v elements by depth(w) - depth(v), an even-degree relabeling."""
    t = q.tree
    if len(t.vertices) == 1:
        v = t.vertices[0]
        elements = [(f"e[{v}]", v, v, 0), ("x", v, v, 2)]
        return FiniteGradedAlgebra(f, elements, {(1, 1): {}}, {v: 0})

    def shift(w, v):
        return q.depth[w] - q.depth[v] if evenized else 0

    elements = []
    idempotents = {}
    for v in t.vertices:
        idempotents[v] = len(elements)
        elements.append((f"e[{v}]", v, v, 0))
    arrow_idx = {}
    for v, w in q.arrows():
        for src, tgt in ((v, w), (w, v)):
            arrow_idx[tgt, src] = len(elements)
            elements.append((_arrow_name(tgt, src), src, tgt,
                             1 + shift(tgt, src)))
    loop_idx = {}
    for v in t.vertices:
        loop_idx[v] = len(elements)
        elements.append((f"s[{v}]", v, v, 2))
    products = {}
    for (w1, v1), i in arrow_idx.items():
        for (w2, v2), j in arrow_idx.items():
            # arrow_i * arrow_j: j first (v2 -> w2) then i (v1 -> w1)
            if v1 != w2:
                continue
            if w1 == v2:
                products[i, j] = {loop_idx[v2]: f.one}
            else:
                products[i, j] = {}
    return FiniteGradedAlgebra(f, elements, products, idempotents)


class _EchelonSpace:
    """Row space of sparse vectors keyed by arbitrary hashables, kept in
    reduced echelon form with the largest key as pivot."""

    def __init__(self, f: FieldSpec, key_order):
        self.f = f
        self.key_order = key_order      # hashable -> sortable pivot rank
        self.pivots = {}                # pivot key -> normalized vector

    def reduce(self, vec: dict) -> dict:
        f = self.f
        vec = {k: f(c) for k, c in vec.items() if not f.is_zero(f(c))}
        while vec:
            hit = [k for k in vec if k in self.pivots]
            if not hit:
                return vec
            p = max(hit, key=self.key_order)
            c = vec[p]
            for k, v in self.pivots[p].items():
                w = f.sub(vec.get(k, f.zero), f.mul(c, v))
                if f.is_zero(w):
                    vec.pop(k, None)
                else:
                    vec[k] = w
        return vec

    def insert(self, vec: dict) -> bool:
        """Reduce and add to the space; True if the vector was new."""
        vec = self.reduce(vec)
        if not vec:
            return False
        f = self.f
        p = max(vec, key=self.key_order)
        inv = f.inv(vec[p])
        self.pivots[p] = {k: f.mul(inv, v) for k, v in vec.items()}
        return True


def preprojective(q: RootedQuiver, f: FieldSpec, length_bound: int,
                  check=True) -> FiniteGradedAlgebra:
    """Length-truncated preprojective algebra of the double quiver: quotient
    by the ideal (sum over arrows of g*g - gg*) plus all words of length
    > length_bound.  The result carries per_degree_dims and a stabilized flag
    (some degree <= bound vanished, hence all higher degrees vanish)."""
    if length_bound < 0:
        raise ValueError("length_bound must be >= 0")
    gens = {}
    for v, w in q.arrows():
        gens[w, v] = GeneratorSymbol(f"g[{w}<{v}]", v, w, 1, 0)
        gens[v, w] = GeneratorSymbol(f"g[{v}<{w}]", w, v, 1, 0)
    relators = []
    for v in q.vertices:
        rel = AlgebraElement()
        for w in q.children[v]:
            rel = rel.add(AlgebraElement.of(
                Word((gens[v, w], gens[w, v]))), f)
        u = q.parent[v]
        if u is not None:
            rel = rel.add(AlgebraElement.of(
                Word((gens[v, u], gens[u, v])), -1), f)
        if not rel.is_zero():
            relators.append(rel)
    return quotient_algebra(f, list(gens.values()),
                            [r.terms for r in relators],
                            length_bound, check=check, vertices=q.vertices)


def quotient_algebra(f: FieldSpec, generators, relation_vectors, length_bound,
                     check=True, vertices=None) -> FiniteGradedAlgebra:
    """Tensor algebra on degree-1 generators modulo homogeneous quadratic
    relations, truncated above length_bound.  relation_vectors are dicts
    (2-letter Word -> coeff)."""
    if vertices is None:
        vertices = sorted({g.source for g in generators}
                          | {g.target for g in generators}, key=str)
    words = {0: [Word.unit(v) for v in vertices]}
    for ell in range(1, length_bound + 1):
        layer = []
        for w in words[ell - 1]:
            for g in generators:
                if g.source == w.target:
                    layer.append(Word((g,) + w.letters))
        layer.sort(key=Word.sort_key)
        words[ell] = layer
    rank = {}
    for ell, layer in words.items():
        for i, w in enumerate(layer):
            rank[w] = i
    spaces = {ell: _EchelonSpace(f, rank.__getitem__)
              for ell in range(length_bound + 1)}
    # ideal degree ell: V * I_{ell-1} plus J tensored with all length-(ell-2) words
    prev = []
    for ell in range(2, length_bound + 1):
        cur = []
        for vec in prev:
            for g in generators:
                shifted = {}
                for w, c in vec.items():
                    if g.source == w.target:
                        shifted[Word((g,) + w.letters)] = c
                if shifted:
                    cur.append(shifted)
        for rel in relation_vectors:
            srcs = {rw.source for rw in rel}
            if any(rw.length != 2 for rw in rel):
                raise ValueError("relations must be quadratic")
            if len(srcs) != 1:
                raise ValueError("relation not bimodule-homogeneous")
            src = srcs.pop()
            for w in words[ell - 2]:
                if src != w.target:
                    continue
                vec = {Word(rw.letters + w.letters): c
                       for rw, c in rel.items()}
                cur.append(vec)
        for vec in cur:
            spaces[ell].insert(vec)
        prev = [dict(v) for v in spaces[ell].pivots.values()]
    elements = []
    idempotents = {}
    word_index = {}
    per_degree = {}
    for ell in range(length_bound + 1):
        space = spaces[ell]
        for w in words[ell]:
            if w in space.pivots:
                continue
            idx = len(elements)
            word_index[w] = idx
            if ell == 0:
                idempotents[w.vertex] = idx
            elements.append((repr(w), w.source, w.target, ell))
            per_degree[ell] = per_degree.get(ell, 0) + 1
    products = {}
    for w1, i in word_index.items():
        for w2, j in word_index.items():
            if w1.length == 0 or w2.length == 0:
                continue
            w = w1 * w2
            if w is None:
                continue
            ell = w.length
            if ell > length_bound:
                products[i, j] = {}
                continue
            reduced = spaces[ell].reduce({w: f.one})
            products[i, j] = {word_index[x]: c for x, c in reduced.items()}
    alg = FiniteGradedAlgebra(f, elements, products, idempotents, check=check)
    alg.basis_words = tuple(sorted(word_index, key=word_index.get))
    alg.per_degree_dims = {ell: per_degree.get(ell, 0)
                           for ell in range(length_bound + 1)}
    alg.stabilized = any(d == 0 for d in alg.per_degree_dims.values())
    alg.length_bound = length_bound
    return alg


class QuadraticData:
    """Quadratic presentation: degree-one generators V and a homogeneous
    relation space J inside V tensor V (dicts 2-letter Word -> coeff)."""

    def __init__(self, field: FieldSpec, generators, relations):
        self.field = field
        self.generators = tuple(generators)
        # a finite algebra the data presents up to higher-degree relations,
        # for callers needing A when the quadratic algebra does not stabilize
        self.finite_model = None
        rels = []
        for rel in relations:
            rel = {w: field(c) for w, c in rel.items()
                   if not field.is_zero(field(c))}
            if not rel:
                continue
            if any(w.length != 2 for w in rel):
                raise ValueError("relations must be quadratic")
            if len({(w.source, w.target, w.s) for w in rel}) != 1:
                raise ValueError("relation not homogeneous")
            rels.append(rel)
        self.relations = tuple(rels)

    def vertices(self):
        return sorted({g.source for g in self.generators}
                      | {g.target for g in self.generators}, key=str)

    def algebra(self, length_bound, check=True) -> FiniteGradedAlgebra:
        """The truncated quadratic algebra T(V)/(J) up to the length bound."""
        return quotient_algebra(self.field, self.generators,
                                [dict(r) for r in self.relations],
                                length_bound, check=check)

    def __repr__(self):
        return (f"QuadraticData({len(self.generators)} generators, "
                f"{len(self.relations)} relations)")


def zigzag_quadratic_data(q: RootedQuiver, f: FieldSpec) -> QuadraticData:
    """Quadratic presentation underlying the zigzag algebra: arrows in
    bidegree (1,1); relations kill distinct-endpoint length-2 paths and
    identify the length-2 loops at each vertex.  A single vertex gives
    (x in bidegree (1,2); x tensor x)."""
    t = q.tree
    if len(t.vertices) == 1:
        v = t.vertices[0]
        x = GeneratorSymbol("x", v, v, 1, 2)
        data = QuadraticData(f, [x], [{Word((x, x)): f.one}])
        data.finite_model = zigzag(q, f)
        return data
    arrows = {}
    for v, w in q.arrows():
        arrows[w, v] = GeneratorSymbol(_arrow_name(w, v), v, w, 1, 1)
        arrows[v, w] = GeneratorSymbol(_arrow_name(v, w), w, v, 1, 1)
    relations = []
    for v in t.vertices:
        nbrs = list(t.adjacency[v])
        for u in nbrs:
            for w in nbrs:
                if u != w:
                    # path w -> v -> u
                    relations.append(
                        {Word((arrows[u, v], arrows[v, w])): f.one})
        for u, w in zip(nbrs, nbrs[1:]):
            relations.append({
                Word((arrows[v, u], arrows[u, v])): f.one,
                Word((arrows[v, w], arrows[w, v])): f(-1),
            })
    data = QuadraticData(f, list(arrows.values()), relations)
    data.finite_model = zigzag(q, f)
    return data


def dual_symbol(g: GeneratorSymbol) -> GeneratorSymbol:
    """Dual generator: reversed endpoints, bidegree (1, -s)."""
    return GeneratorSymbol(f"{g.name}^", g.target, g.source, 1, -g.s)


def quadratic_dual(d: QuadraticData,
                   signs: SignConvention = DEFAULT_SIGNS) -> QuadraticData:
    """Quadratic dual T(V*[-1]) / J-perp with the signed canonical pairing
    <b* a*, a' b'> = (-1)^{|b'|} [b = b'][a = a']."""
    f = d.field
    duals = {g: dual_symbol(g) for g in d.generators}
    dual_words = []
    for g1 in d.generators:
        for g2 in d.generators:
            # dual word duals[g1] * duals[g2] pairs with primal words g2 * g1
            if duals[g1].source == duals[g2].target:
                dual_words.append((g1, g2))
    # pairing matrix: rows = primal relations, cols = dual 2-letter words
    m = SparseMatrix(max(len(d.relations), 1), len(dual_words))
    col = {pair: idx for idx, pair in enumerate(dual_words)}
    for row, rel in enumerate(d.relations):
        for w, c in rel.items():
            a, b = w.letters   # word a*b, b acts first
            pair = (b, a)      # pairs with dual word b^ * a^
            if pair in col:
                sgn = signs.sign("dual_pairing", b.s)
                m[row, col[pair]] = f.mul(f(c), f(sgn))
    kernel, _ = kernel_and_solve(m, None, f)
    relations = []
    for vec in kernel:
        rel = {}
        for idx, c in vec.items():
            g1, g2 = dual_words[idx]
            rel[Word((duals[g1], duals[g2]))] = c
        relations.append(rel)
    return QuadraticData(f, [duals[g] for g in d.generators], relations)


def center_dims(a: FiniteGradedAlgebra, window) -> dict:
    """Per-degree dimension of the center {z : zx = xz for all x} within the
    given iterable of degrees."""
    f = a.field
    out = {}
    for deg in window:
        cand = [b.index for b in a.basis if b.degree == deg]
        if not cand:
            out[deg] = 0
            continue
        rows = {}
        m_entries = {}
        for cpos, i in enumerate(cand):
            for x in a.basis:
                zx = a.mult(i, x.index)
                xz = a.mult(x.index, i)
                for k in set(zx) | set(xz):
                    c = f.sub(zx.get(k, f.zero), xz.get(k, f.zero))
                    if f.is_zero(c):
                        continue
                    row = rows.setdefault((x.index, k), len(rows))
                    m_entries[row, cpos] = c
        m = SparseMatrix(max(len(rows), 1), len(cand))
        for key, v in m_entries.items():
            m[key] = v
        kernel, _ = kernel_and_solve(m, None, f)
        out[deg] = len(kernel)
    return out
