"""Free DG-algebras on quiver generators: the Ginzburg DG-algebra of the
extended quiver and the Legendrian contact DG-algebras, plus bigraded and
length-filtered cohomology in finite windows.

Bidegrees: (r, s) with r the word-length grading and s internal; the
differential raises total degree r + s by 1.  For the Ginzburg variant it is
(1, 0)-homogeneous; the contact differentials only preserve the total degree
and never decrease length.
"""

from __future__ import annotations

import itertools

from .fields import FieldSpec
from .linalg import SparseMatrix, rank
from .signs import SignConvention, DEFAULT_SIGNS
from .quiver import RootedQuiver, classify, dn_labeling
from .pathalg import GeneratorSymbol, Word, AlgebraElement

GINZBURG = "GINZBURG"
LCA_STANDARD = "LCA_STANDARD"
LCA_DN = "LCA_DN"


class FreeDGA:
    """Tensor algebra on bigraded generators over the vertex idempotents,
    with a differential defined on generators and extended by the graded
    Leibniz rule d(xy) = (dx)y + (-1)^{|x|} x (dy)."""

    def __init__(self, field: FieldSpec, vertices, generators, diff,
                 signs: SignConvention = DEFAULT_SIGNS, check=True):
        self.field = field
        self.vertices = tuple(vertices)
        self.generators = tuple(generators)
        self.signs = signs
        self.diff = {g: diff.get(g, AlgebraElement.zero()) for g in generators}
        if check:
            self._check()

    def _check(self):
        for g, dg in self.diff.items():
            for w in dg.terms:
                if (w.source, w.target) != (g.source, g.target):
                    raise AssertionError(f"d({g!r}) leaves the bimodule slot")
                if w.total != g.total + 1:
                    raise AssertionError(f"d({g!r}) is not of total degree +1")
            if not self.apply_differential(dg).is_zero():
                raise AssertionError(f"d^2 != 0 on {g!r}")

    def is_bihomogeneous(self) -> bool:
        """True when d has bidegree (1, 0) on every generator."""
        return all(w.r == g.r + 1 and w.s == g.s
                   for g, dg in self.diff.items() for w in dg.terms)

    def differential_word(self, word: Word) -> AlgebraElement:
        f = self.field
        out = AlgebraElement.zero()
        letters = word.letters
        left_total = 0
        for i, g in enumerate(letters):
            dg = self.diff[g]
            if not dg.is_zero():
                sgn = self.signs.sign("leibniz", left_total)
                for w, c in dg.terms.items():
                    new = Word(letters[:i] + w.letters + letters[i + 1:])
                    out = out.add(AlgebraElement.of(new, f.mul(f(c), f(sgn))), f)
            left_total += g.total
        return out

    def apply_differential(self, x: AlgebraElement) -> AlgebraElement:
        f = self.field
        out = AlgebraElement.zero()
        for w, c in x.terms.items():
            if w.length == 0:
                continue
            out = out.add(self.differential_word(w).scale(c, f), f)
        return out

    # -- word enumeration -------------------------------------------------

    def words_of_length(self, r: int):
        """All composable words of length r (length 0: the idempotents)."""
        if r == 0:
            return [Word.unit(v) for v in self.vertices]
        by_source = {}
        for g in self.generators:
            by_source.setdefault(g.source, []).append(g)
        words = [(g,) for g in self.generators]
        for _ in range(r - 1):
            words = [(h,) + w
                     for w in words
                     for h in by_source.get(w[0].target, ())]
        return [Word(w) for w in words]

    def cell_basis(self, r: int, s: int):
        """Composable words of bidegree exactly (r, s)."""
        return [w for w in self.words_of_length(r) if w.s == s]

    def words_total_degree(self, t: int, max_length: int):
        """Composable words of total degree t and length < max_length."""
        out = []
        if t == 0:
            out.extend(Word.unit(v) for v in self.vertices)
        if max_length <= 1:
            return out
        lo = min((g.total for g in self.generators), default=0)
        hi = max((g.total for g in self.generators), default=0)
        by_source = {}
        for g in self.generators:
            by_source.setdefault(g.source, []).append(g)

        def feasible(total, slots_left):
            # necessary condition for some extension to reach degree t
            gap = t - total
            return min(0, slots_left * lo) <= gap <= max(0, slots_left * hi)

        layer = [((g,), g.total) for g in self.generators
                 if feasible(g.total, max_length - 2)]
        for r in range(1, max_length):
            out.extend(Word(tup) for tup, total in layer if total == t)
            if r == max_length - 1:
                break
            slots = max_length - 2 - r
            layer = [((h,) + tup, total + h.total)
                     for tup, total in layer
                     for h in by_source.get(tup[0].target, ())
                     if feasible(total + h.total, slots)]
        return out

    def __repr__(self):
        return (f"FreeDGA({len(self.vertices)} vertices, "
                f"{len(self.generators)} generators)")


def _differential_matrix(dga: FreeDGA, domain, codomain_index, strict=True):
    """Matrix of d on the span of domain words in the codomain basis; words
    outside the codomain are rejected when strict, else dropped (quotient)."""
    f = dga.field
    m = SparseMatrix(len(codomain_index), len(domain))
    for j, w in enumerate(domain):
        dw = dga.differential_word(w) if w.length else AlgebraElement.zero()
        for w2, c in dw.terms.items():
            i = codomain_index.get(w2)
            if i is None:
                if strict:
                    raise AssertionError(f"d leaves the window at {w2!r}")
                continue
            m[i, j] = c
    return m


class CohomologyTable:
    """Per-(r, s) cohomology dims of a bihomogeneous DG-algebra window."""

    def __init__(self, dims, r_max, s_range):
        self.dims = dict(dims)
        self.r_max = r_max
        self.s_range = tuple(s_range)

    def dim(self, r, s) -> int:
        return self.dims.get((r, s), 0)

    def total_degree_dims(self) -> dict:
        out = {}
        for (r, s), d in self.dims.items():
            if d:
                out[r + s] = out.get(r + s, 0) + d
        return out

    def __repr__(self):
        return f"CohomologyTable({len(self.dims)} cells)"


def cohomology_bigraded(dga: FreeDGA, r_max: int, s_range) -> CohomologyTable:
    """Exact per-cell cohomology dims for a differential of bidegree (1, 0);
    rejects non-homogeneous differentials (use cohomology_filtered there)."""
    if not dga.is_bihomogeneous():
        raise ValueError("differential is not (1,0)-homogeneous; "
                         "use cohomology_filtered")
    f = dga.field
    s_range = list(s_range)
    dims = {}
    cells = {}
    for r in range(r_max + 2):
        for w in dga.words_of_length(r):
            if w.s in s_range:
                cells.setdefault((r, w.s), []).append(w)
    ranks = {}
    for (r, s), basis in sorted(cells.items()):
        if r > r_max:
            continue
        nxt = cells.get((r + 1, s), [])
        idx = {w: i for i, w in enumerate(nxt)}
        # words of bidegree (r+1, s) all lie in the enumerated cell
        m = _differential_matrix(dga, basis, idx)
        ranks[r, s] = rank(m, f)
    for (r, s), basis in cells.items():
        if r > r_max:
            continue
        rk_out = ranks.get((r, s), 0)
        rk_in = ranks.get((r - 1, s), 0)
        dims[r, s] = len(basis) - rk_out - rk_in
    return CohomologyTable(dims, r_max, s_range)


class FilteredCohomology:
    """Cohomology of the quotient by the length filtration F^N at one total
    degree, broken down by (source, target) component."""

    def __init__(self, total_degree, N, component_dims, next_component_dims):
        self.total_degree = total_degree
        self.N = N
        self.component_dims = dict(component_dims)
        self.next_component_dims = dict(next_component_dims)
        self.stabilized = component_dims == next_component_dims

    @property
    def dim(self) -> int:
        return sum(self.component_dims.values())

    def component(self, target, source) -> int:
        return self.component_dims.get((target, source), 0)

    def __repr__(self):
        return (f"FilteredCohomology(degree={self.total_degree}, N={self.N}, "
                f"dim={self.dim}, stabilized={self.stabilized})")


def _filtered_dims(dga: FreeDGA, t: int, N: int) -> dict:
    f = dga.field
    cur = dga.words_total_degree(t, N)
    prev = dga.words_total_degree(t - 1, N)
    nxt = dga.words_total_degree(t + 1, N)
    idx_cur = {w: i for i, w in enumerate(cur)}
    idx_nxt = {w: i for i, w in enumerate(nxt)}
    dims = {}
    by_comp = {}
    for w in cur:
        by_comp.setdefault((w.target, w.source), []).append(w)
    # d preserves (target, source); compute per component
    for comp, basis in sorted(by_comp.items(), key=lambda kv: str(kv[0])):
        sub_prev = [w for w in prev if (w.target, w.source) == comp]
        sub_nxt = [w for w in nxt if (w.target, w.source) == comp]
        idx = {w: i for i, w in enumerate(sub_nxt)}
        m_out = _differential_matrix(dga, basis, idx, strict=False)
        idx_b = {w: i for i, w in enumerate(basis)}
        m_in = _differential_matrix(dga, sub_prev, idx_b, strict=False)
        d = len(basis) - rank(m_out, f) - rank(m_in, f)
        if d:
            dims[comp] = d
    return dims


def cohomology_filtered(dga: FreeDGA, total_degree: int,
                        N: int) -> FilteredCohomology:
    """Cohomology of LCA/F^N at the given total degree, with the
    stabilization flag comparing against F^(N+2)."""
    for g, dg in dga.diff.items():
        if any(w.length < g.r for w in dg.terms):
            raise ValueError("differential decreases length; filtration unsafe")
    dims = _filtered_dims(dga, total_degree, N)
    dims_next = _filtered_dims(dga, total_degree, N + 2)
    return FilteredCohomology(total_degree, N, dims, dims_next)


# -- constructors -----------------------------------------------------------

def _ginzburg_symbols(q: RootedQuiver):
    g = {}
    for v, w in q.arrows():
        g[w, v] = GeneratorSymbol(f"g[{w}<{v}]", v, w, 1, -1)
        g[v, w] = GeneratorSymbol(f"g[{v}<{w}]", w, v, 1, -1)
    h = {v: GeneratorSymbol(f"h[{v}]", v, v, 1, -2) for v in q.vertices}
    return g, h


def _lca_symbols(q: RootedQuiver):
    c = {}
    for v, w in q.arrows():
        c[w, v] = GeneratorSymbol(f"c[{w}<{v}]", v, w, 1, -1)
        c[v, w] = GeneratorSymbol(f"c[{v}<{w}]", w, v, 1, -1)
    loops = {v: GeneratorSymbol(f"c[{v}]", v, v, 1, -2) for v in q.vertices}
    return c, loops


def build_dga(q: RootedQuiver, variant: str, f: FieldSpec,
              signs: SignConvention = DEFAULT_SIGNS) -> FreeDGA:
    """Ginzburg DG-algebra (GINZBURG), standard-form contact DG-algebra
    (LCA_STANDARD), or the D_n-presentation contact DG-algebra (LCA_DN)."""
    if variant == GINZBURG:
        g, h = _ginzburg_symbols(q)
        diff = {}
        for v in q.vertices:
            dh = AlgebraElement.zero()
            for w in q.children[v]:
                dh = dh.add(AlgebraElement.of(Word((g[v, w], g[w, v]))), f)
            u = q.parent[v]
            if u is not None:
                dh = dh.add(AlgebraElement.of(Word((g[v, u], g[u, v])), -1), f)
            diff[h[v]] = dh
        gens = list(g.values()) + list(h.values())
        return FreeDGA(f, q.vertices, gens, diff, signs)

    if variant == LCA_STANDARD:
        c, loops = _lca_symbols(q)
        diff = {}
        for v in q.vertices:
            dv = AlgebraElement.zero()
            u = q.parent[v]
            if u is not None:
                dv = dv.add(AlgebraElement.of(Word((c[v, u], c[u, v])), -1), f)
            kids = q.children[v]
            for i in range(1, len(kids) + 1):
                for sub in itertools.combinations(kids, i):
                    letters = []
                    for w in sub:
                        letters.extend((c[v, w], c[w, v]))
                    dv = dv.add(AlgebraElement.of(Word(tuple(letters))), f)
            diff[loops[v]] = dv
        gens = list(c.values()) + list(loops.values())
        return FreeDGA(f, q.vertices, gens, diff, signs)

    if variant == LCA_DN:
        cls = classify(q.tree)
        if cls.kind != "D":
            raise ValueError(f"LCA_DN needs a D_n tree, got {cls!r}")
        lab = dn_labeling(q.tree)
        inv = {i: v for v, i in lab.items()}
        n = len(q.tree.vertices)
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
        c = {}
        for i, j in edges:
            vi, vj = inv[i], inv[j]
            c[i, j] = GeneratorSymbol(f"c[{vi}<{vj}]", vj, vi, 1, -1)
            c[j, i] = GeneratorSymbol(f"c[{vj}<{vi}]", vi, vj, 1, -1)
        loops = {i: GeneratorSymbol(f"c[{inv[i]}]", inv[i], inv[i], 1, -2)
                 for i in inv}

        def word(*pairs):
            return AlgebraElement.of(Word(tuple(c[p] for p in pairs)))

        diff = {
            loops[1]: word((1, 3), (3, 1)),
            loops[2]: word((2, 3), (3, 2)),
            loops[3]: word((3, 1), (1, 3)).scale(-1, f)
                      .add(word((3, 2), (2, 3)).scale(-1, f), f)
                      .add(word((3, 4), (4, 3)), f)
                      .add(word((3, 1), (1, 3), (3, 2), (2, 3)).scale(-1, f), f),
            loops[n]: word((n, n - 1), (n - 1, n)).scale(-1, f),
        }
        for i in range(4, n):
            diff[loops[i]] = (word((i, i - 1), (i - 1, i)).scale(-1, f)
                              .add(word((i, i + 1), (i + 1, i)), f))
        gens = list(c.values()) + list(loops.values())
        return FreeDGA(f, q.vertices, gens, diff, signs)

    raise ValueError(f"unknown variant {variant!r}")


def apply_differential(dga: FreeDGA, x: AlgebraElement) -> AlgebraElement:
    return dga.apply_differential(x)
