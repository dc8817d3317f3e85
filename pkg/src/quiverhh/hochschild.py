"""Bigraded Hochschild cohomology of finite graded quiver algebras.

The reduced bar complex is taken over the vertex ring: an r-cochain assigns
to every composable word of r non-idempotent basis elements a value in the
matching e_w A e_v component, homogeneous of internal degree s.  The
differential is expressed through mu2(a2, a1) = (-1)^{|a1|} a2*a1 and the
centralized sign rules bar_right / bar_inner: for c in CC^{r,s},

    delta(c)(x_{r+1}, .., x1) = mu2(x_{r+1}, c(x_r, .., x1))
        + (-1)^{(r+s-1)(|x1|-1)} mu2(c(x_{r+1}, .., x2), x1)
        + sum_n (-1)^{r+s+|x_{n-1}|+..+|x1|-(n-1)}
                c(x_{r+1}, .., mu2(x_{n+1}, x_n), .., x1).

At r = 0 this is delta(c)(x1) = mu2(x1, c) + (-1)^{(s-1)(|x1|-1)} mu2(c, x1);
the exponents carry the shifted total degree r+s-1, the unique continuation
for which delta squares to zero.
"""

from __future__ import annotations

from .fields import FieldSpec
from .linalg import NoSolution, SparseMatrix, kernel_and_solve, rank
from .pathalg import FiniteGradedAlgebra, QuadraticData, dual_symbol, quadratic_dual
from .quiver import Tree, classify
from .signs import DEFAULT_SIGNS, SignConvention

DIFFERENTIAL = "DIFFERENTIAL"
CUP = "CUP"
IS_COBOUNDARY = "IS_COBOUNDARY"

TAU1 = "TAU1"
TAU0 = "TAU0"
UPSILON1 = "UPSILON1"


class HHResourceError(RuntimeError):
    """Requested window exceeds the enumeration budget."""


class CochainError(ValueError):
    """Malformed cochain or incompatible cochain arguments."""


# ---------------------------------------------------------------------------
# Composable reduced word enumeration.
# Layer r maps (source, target, degree sum) to the list of words of length r;
# a word is a tuple of non-idempotent basis indices, leftmost letter acting
# last.  Layer 0 holds the vertices themselves.  Words whose degree sum
# exceeds the cap cannot support any cochain in the window and are pruned.
# ---------------------------------------------------------------------------

def _max_basis_degree(a: FiniteGradedAlgebra) -> int:
    return max(b.degree for b in a.basis)


def _reduced_by_source(a: FiniteGradedAlgebra) -> dict:
    by_source = getattr(a, "_reduced_by_source", None)
    if by_source is None:
        by_source = {}
        for i in a.reduced_indices():
            by_source.setdefault(a.basis[i].source, []).append(i)
        a._reduced_by_source = by_source
    return by_source


def _bar_layers(a: FiniteGradedAlgebra, r_max: int, cap: int) -> list:
    cache = getattr(a, "_bar_layer_cache", None)
    if cache is None:
        cache = a._bar_layer_cache = {}
    layers = cache.get(cap)
    if layers is None:
        layers = cache[cap] = [{(v, v, 0): [v] for v in a.vertices}]
    by_source = _reduced_by_source(a)
    while len(layers) <= r_max:
        r = len(layers)
        layer = {}
        if r == 1:
            for i in a.reduced_indices():
                b = a.basis[i]
                if b.degree > cap:
                    continue
                layer.setdefault((b.source, b.target, b.degree), []).append((i,))
        else:
            for (src, tgt, deg), ws in layers[r - 1].items():
                for j in by_source.get(tgt, ()):
                    bj = a.basis[j]
                    if deg + bj.degree > cap:
                        continue
                    bucket = layer.setdefault((src, bj.target, deg + bj.degree), [])
                    for w in ws:
                        bucket.append((j,) + w)
        layers.append(layer)
    return layers


def _bar_counts(a: FiniteGradedAlgebra, r_max: int, cap: int) -> list:
    """Word counts per layer/component without enumerating the words."""
    counts = [{(v, v, 0): 1 for v in a.vertices}]
    by_source = _reduced_by_source(a)
    for r in range(1, r_max + 1):
        layer = {}
        if r == 1:
            for i in a.reduced_indices():
                b = a.basis[i]
                if b.degree <= cap:
                    key = (b.source, b.target, b.degree)
                    layer[key] = layer.get(key, 0) + 1
        else:
            for (src, tgt, deg), n in counts[r - 1].items():
                for j in by_source.get(tgt, ()):
                    bj = a.basis[j]
                    if deg + bj.degree <= cap:
                        key = (src, bj.target, deg + bj.degree)
                        layer[key] = layer.get(key, 0) + n
        counts.append(layer)
    return counts


def _target_counts(a: FiniteGradedAlgebra) -> dict:
    table = getattr(a, "_target_counts", None)
    if table is None:
        table = {}
        for b in a.basis:
            key = (b.source, b.target, b.degree)
            table[key] = table.get(key, 0) + 1
        a._target_counts = table
    return table


def _cell_data(a: FiniteGradedAlgebra, layer: dict, s: int):
    """Ordered basis of CC^{r,s}: pairs (word, target index), plus the column
    index and the per-component target lists."""
    pairs = []
    comp_targets = {}
    for key in sorted(layer, key=lambda k: (str(k[0]), str(k[1]), k[2])):
        src, tgt, deg = key
        targets = [b.index for b in a.basis_at(source=src, target=tgt,
                                               degree=deg + s)]
        if not targets:
            continue
        comp_targets[key] = targets
        for w in layer[key]:
            for m in targets:
                pairs.append((w, m))
    index = {p: i for i, p in enumerate(pairs)}
    return pairs, index, comp_targets


def _delta_matrix(a: FiniteGradedAlgebra, layers: list, r: int, s: int,
                  signs: SignConvention, dom, cod) -> SparseMatrix:
    """Matrix of delta: CC^{r,s} -> CC^{r+1,s} over the given cell bases."""
    f = a.field
    dom_pairs, dom_index, dom_targets = dom
    cod_pairs, cod_index, cod_targets = cod
    m = SparseMatrix(len(cod_pairs), len(dom_pairs))
    if not dom_pairs or not cod_pairs:
        return m
    basis = a.basis
    idem = set(a.idempotent.values())
    for (wsrc, wtgt, dsum), targets in cod_targets.items():
        for W in layers[r + 1][(wsrc, wtgt, dsum)]:
            degs = [basis[i].degree for i in W]
            # left outer term mu2(x_{r+1}, c(x_r..x_1))
            left_key = W[1:] if r >= 1 else basis[W[0]].source
            left_comp = ((wsrc, basis[W[1]].target, dsum - degs[0])
                         if r >= 1 else (left_key, left_key, 0))
            sgn = f(signs.sign("mu2", left_comp[2] + s))
            for k in dom_targets.get(left_comp, ()):
                col = dom_index[left_key, k]
                for m2, cm in a.mult(W[0], k).items():
                    m.add_at(cod_index[W, m2], col, f.mul(sgn, cm))
            # right outer term mu2(c(x_{r+1}..x_2), x_1)
            right_key = W[:-1] if r >= 1 else basis[W[0]].target
            right_comp = ((basis[W[-1]].target, wtgt, dsum - degs[-1])
                          if r >= 1 else (right_key, right_key, 0))
            sgn = f(signs.sign("bar_right", r, s, degs[-1])
                    * signs.sign("mu2", degs[-1]))
            for k in dom_targets.get(right_comp, ()):
                col = dom_index[right_key, k]
                for m2, cm in a.mult(k, W[-1]).items():
                    m.add_at(cod_index[W, m2], col, f.mul(sgn, cm))
            # inner terms c(.., mu2(x_{n+1}, x_n), ..)
            for j in range(r):
                prod = a.mult(W[j], W[j + 1])
                if not prod:
                    continue
                sgn = f(signs.sign("bar_inner", r, s, degs[j + 2:])
                        * signs.sign("mu2", degs[j + 1]))
                for k, ck in prod.items():
                    if k in idem:
                        continue
                    merged = W[:j] + (k,) + W[j + 2:]
                    coeff = f.mul(sgn, ck)
                    for mt in targets:
                        m.add_at(cod_index[W, mt], dom_index[merged, mt], coeff)
    return m


# ---------------------------------------------------------------------------
# Dimension tables.
# ---------------------------------------------------------------------------

class HHTable:
    """Per-cell Hochschild dimensions over a finite (r, s) window."""

    def __init__(self, dims: dict, r_max: int, s_values):
        self.dims = dict(dims)
        self.r_max = r_max
        self.s_values = tuple(sorted(s_values, reverse=True))

    def dim(self, r: int, s: int) -> int:
        try:
            return self.dims[r, s]
        except KeyError:
            raise KeyError(f"cell ({r}, {s}) outside the computed window") from None

    def nonzero_cells(self) -> dict:
        return {cell: d for cell, d in sorted(self.dims.items()) if d}

    def total_degree_dims(self) -> dict:
        out = {}
        for (r, s), d in self.dims.items():
            out[r + s] = out.get(r + s, 0) + d
        return out

    def __repr__(self):
        lo, hi = min(self.s_values), max(self.s_values)
        return (f"HHTable(r<={self.r_max}, {lo}<=s<={hi}, "
                f"{len(self.nonzero_cells())} nonzero cells)")


def _window_values(s_window):
    if (isinstance(s_window, tuple) and len(s_window) == 2
            and all(isinstance(x, int) for x in s_window)):
        lo, hi = s_window
        if lo > hi:
            raise ValueError("s window must be (min, max) with min <= max")
        return list(range(hi, lo - 1, -1))
    values = sorted(set(s_window), reverse=True)
    if not values:
        raise ValueError("empty s window")
    return values


def hh_bar_dims(a: FiniteGradedAlgebra, r_max: int, s_window,
                signs: SignConvention = DEFAULT_SIGNS,
                budget: int = 8_000_000) -> HHTable:
    """Exact dims of HH^r(A, A[s]) for r <= r_max and s in the window.

    s_window is either an inclusive (s_min, s_max) pair or an iterable of
    explicit s values.  Raises HHResourceError when the estimated cochain
    count exceeds the budget.
    """
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    s_values = _window_values(s_window)
    cap = _max_basis_degree(a) - min(s_values)
    counts = _bar_counts(a, r_max + 1, cap)
    tgt = _target_counts(a)
    estimate = 0
    for layer in counts:
        for (src, t, deg), n in layer.items():
            estimate += n
            for s in s_values:
                estimate += n * tgt.get((src, t, deg + s), 0)
    if estimate > budget:
        raise HHResourceError(
            f"window needs about {estimate} cochain pairs, budget {budget}; "
            "shrink r_max or the s window, or raise the budget")
    layers = _bar_layers(a, r_max + 1, cap)
    dims = {}
    for s in s_values:
        cells = [_cell_data(a, layers[r], s) for r in range(r_max + 2)]
        ranks = []
        for r in range(r_max + 1):
            m = _delta_matrix(a, layers, r, s, signs, cells[r], cells[r + 1])
            ranks.append(rank(m, a.field))
        for r in range(r_max + 1):
            below = ranks[r - 1] if r else 0
            dims[r, s] = len(cells[r][0]) - ranks[r] - below
    return HHTable(dims, r_max, s_values)


def hh_cell_dim(a: FiniteGradedAlgebra, r: int, s: int,
                signs: SignConvention = DEFAULT_SIGNS) -> int:
    """Dimension of the single cell HH^r(A, A[s])."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    cap = _max_basis_degree(a) - s
    layers = _bar_layers(a, r + 1, cap)
    cells = [_cell_data(a, layers[k], s) for k in range(max(0, r - 1), r + 2)]
    if r == 0:
        dom, cod = cells
        out_rank = rank(_delta_matrix(a, layers, 0, s, signs, dom, cod), a.field)
        return len(dom[0]) - out_rank
    dom_prev, dom, cod = cells
    below = rank(_delta_matrix(a, layers, r - 1, s, signs, dom_prev, dom), a.field)
    out_rank = rank(_delta_matrix(a, layers, r, s, signs, dom, cod), a.field)
    return len(dom[0]) - out_rank - below


# ---------------------------------------------------------------------------
# Cochains and the calculus on them.
# ---------------------------------------------------------------------------

class Cochain:
    """Reduced bar cochain of bidegree (r, s) with values in the algebra.

    values maps a length-r word (tuple of non-idempotent basis indices,
    leftmost acting last; a vertex label when r = 0) to a sparse algebra
    element {basis index: coefficient}.
    """

    def __init__(self, algebra: FiniteGradedAlgebra, r: int, s: int,
                 values: dict, check: bool = True):
        self.algebra = algebra
        self.r = r
        self.s = s
        f = algebra.field
        vals = {}
        for key, val in values.items():
            if r >= 1:
                key = tuple(key)
            cleaned = {}
            for k, c in val.items():
                fc = f(c)
                if not f.is_zero(fc):
                    cleaned[k] = fc
            if cleaned:
                vals[key] = cleaned
        self.values = vals
        if check:
            self._validate()

    def _component(self, key):
        a = self.algebra
        if self.r == 0:
            return key, key, 0
        src = a.basis[key[-1]].source
        tgt = a.basis[key[0]].target
        dsum = sum(a.basis[i].degree for i in key)
        return src, tgt, dsum

    def _validate(self):
        a = self.algebra
        idem = set(a.idempotent.values())
        for key, val in self.values.items():
            if self.r == 0:
                if key not in a.idempotent:
                    raise CochainError(f"unknown vertex {key!r}")
            else:
                if len(key) != self.r:
                    raise CochainError(f"key {key!r} has wrong length")
                for i in key:
                    if not 0 <= i < len(a.basis):
                        raise CochainError(f"unknown basis index {i!r}")
                    if i in idem:
                        raise CochainError("words must avoid idempotents")
                for i, j in zip(key, key[1:]):
                    if a.basis[i].source != a.basis[j].target:
                        raise CochainError(f"word {key!r} is not composable")
            src, tgt, dsum = self._component(key)
            for k in val:
                b = a.basis[k]
                if (b.source, b.target) != (src, tgt):
                    raise CochainError(
                        f"value of {key!r} leaves the bimodule component")
                if b.degree != dsum + self.s:
                    raise CochainError(
                        f"value of {key!r} is not homogeneous of degree s")

    def value(self, key) -> dict:
        if self.r >= 1:
            key = tuple(key)
        return self.values.get(key, {})

    def is_zero(self) -> bool:
        return not self.values

    def add(self, other: "Cochain") -> "Cochain":
        if (other.algebra is not self.algebra or other.r != self.r
                or other.s != self.s):
            raise CochainError("cochain bidegrees differ")
        f = self.algebra.field
        out = {k: dict(v) for k, v in self.values.items()}
        for key, val in other.values.items():
            acc = out.setdefault(key, {})
            for k, c in val.items():
                w = f.add(acc.get(k, f.zero), c)
                if f.is_zero(w):
                    acc.pop(k, None)
                else:
                    acc[k] = w
        return Cochain(self.algebra, self.r, self.s, out, check=False)

    def scale(self, c) -> "Cochain":
        f = self.algebra.field
        fc = f(c)
        out = {key: {k: f.mul(fc, v) for k, v in val.items()}
               for key, val in self.values.items()}
        return Cochain(self.algebra, self.r, self.s, out, check=False)

    def __eq__(self, other):
        return (isinstance(other, Cochain) and other.algebra is self.algebra
                and (other.r, other.s) == (self.r, self.s)
                and other.values == self.values)

    def __repr__(self):
        return f"Cochain(r={self.r}, s={self.s}, support={len(self.values)})"


def zero_cochain(a: FiniteGradedAlgebra, r: int, s: int) -> Cochain:
    return Cochain(a, r, s, {}, check=False)


def unit_cochain(a: FiniteGradedAlgebra) -> Cochain:
    """The 0-cochain sending e_v to e_v; two-sided identity for CUP."""
    return Cochain(a, 0, 0, {v: {i: a.field.one}
                             for v, i in a.idempotent.items()})


def _acc(acc: dict, k, c, f: FieldSpec):
    w = f.add(acc.get(k, f.zero), c)
    if f.is_zero(w):
        acc.pop(k, None)
    else:
        acc[k] = w


def differential(c: Cochain, signs: SignConvention = DEFAULT_SIGNS) -> Cochain:
    """The Hochschild differential, raising r by one and preserving s."""
    a = c.algebra
    f = a.field
    r, s = c.r, c.s
    cap = _max_basis_degree(a) - s
    layers = _bar_layers(a, r + 1, cap)
    basis = a.basis
    idem = set(a.idempotent.values())
    out = {}
    for (wsrc, wtgt, dsum), ws in layers[r + 1].items():
        if not a.basis_at(source=wsrc, target=wtgt, degree=dsum + s):
            continue
        for W in ws:
            degs = [basis[i].degree for i in W]
            acc = {}
            left_key = W[1:] if r >= 1 else basis[W[0]].source
            val = c.value(left_key)
            if val:
                sgn = f(signs.sign("mu2", dsum - degs[0] + s))
                for k, ck in val.items():
                    for m2, cm in a.mult(W[0], k).items():
                        _acc(acc, m2, f.mul(sgn, f.mul(ck, cm)), f)
            right_key = W[:-1] if r >= 1 else basis[W[0]].target
            val = c.value(right_key)
            if val:
                sgn = f(signs.sign("bar_right", r, s, degs[-1])
                        * signs.sign("mu2", degs[-1]))
                for k, ck in val.items():
                    for m2, cm in a.mult(k, W[-1]).items():
                        _acc(acc, m2, f.mul(sgn, f.mul(ck, cm)), f)
            for j in range(r):
                prod = a.mult(W[j], W[j + 1])
                if not prod:
                    continue
                sgn = f(signs.sign("bar_inner", r, s, degs[j + 2:])
                        * signs.sign("mu2", degs[j + 1]))
                for k, ck in prod.items():
                    if k in idem:
                        continue
                    val = c.value(W[:j] + (k,) + W[j + 2:])
                    for m2, cm in val.items():
                        _acc(acc, m2, f.mul(sgn, f.mul(ck, cm)), f)
            if acc:
                out[W] = acc
    return Cochain(a, r + 1, s, out, check=False)


def cup(c1: Cochain, c2: Cochain,
        signs: SignConvention = DEFAULT_SIGNS) -> Cochain:
    """Cup product: (c1 cup c2)(W_left W_right) = +- c1(W_left) c2(W_right)."""
    if c1.algebra is not c2.algebra:
        raise CochainError("cup factors live over different algebras")
    a = c1.algebra
    f = a.field
    out = {}
    for key1, val1 in c1.values.items():
        src1 = key1 if c1.r == 0 else a.basis[key1[-1]].source
        for key2, val2 in c2.values.items():
            tgt2 = key2 if c2.r == 0 else a.basis[key2[0]].target
            if src1 != tgt2:
                continue
            if c1.r == 0:
                key = key2 if c2.r else key1
            elif c2.r == 0:
                key = key1
            else:
                key = key1 + key2
            degs1 = [] if c1.r == 0 else [a.basis[i].degree for i in key1]
            degs2 = [] if c2.r == 0 else [a.basis[i].degree for i in key2]
            sgn = f(signs.sign("cup", c1.r, c1.s, c2.r, c2.s, degs1, degs2))
            prod = a.mult_elements(val1, val2)
            if not prod:
                continue
            acc = out.setdefault(key, {})
            for k, ck in prod.items():
                _acc(acc, k, f.mul(sgn, ck), f)
    out = {k: v for k, v in out.items() if v}
    return Cochain(a, c1.r + c2.r, c1.s + c2.s, out, check=False)


def _coboundary_solution(c: Cochain, signs: SignConvention):
    a = c.algebra
    r, s = c.r, c.s
    if r == 0:
        return None if c.is_zero() else NoSolution
    cap = _max_basis_degree(a) - s
    layers = _bar_layers(a, r, cap)
    dom = _cell_data(a, layers[r - 1], s)
    cod = _cell_data(a, layers[r], s)
    m = _delta_matrix(a, layers, r - 1, s, signs, dom, cod)
    rhs = {}
    for key, val in c.values.items():
        for k, ck in val.items():
            rhs[cod[1][key, k]] = ck
    _, sol = kernel_and_solve(m, rhs, a.field)
    return sol if sol is not NoSolution else NoSolution


def is_coboundary(c: Cochain, signs: SignConvention = DEFAULT_SIGNS) -> bool:
    return _coboundary_solution(c, signs) is not NoSolution


def coboundary_witness(c: Cochain,
                       signs: SignConvention = DEFAULT_SIGNS):
    """A cochain b with delta(b) = c, or None when c is not a coboundary."""
    sol = _coboundary_solution(c, signs)
    if sol is NoSolution:
        return None
    if c.r == 0:
        return zero_cochain(c.algebra, 0, c.s)
    a = c.algebra
    cap = _max_basis_degree(a) - c.s
    dom_pairs = _cell_data(a, _bar_layers(a, c.r, cap)[c.r - 1], c.s)[0]
    values = {}
    for col, coeff in (sol or {}).items():
        key, k = dom_pairs[col]
        values.setdefault(key, {})[k] = coeff
    return Cochain(a, c.r - 1, c.s, values, check=False)


def cochain_calculus(a: FiniteGradedAlgebra, op: str, *args,
                     signs: SignConvention = DEFAULT_SIGNS):
    """Dispatch DIFFERENTIAL, CUP or IS_COBOUNDARY on cochains over a."""
    for c in args:
        if not isinstance(c, Cochain):
            raise CochainError(f"expected a Cochain, got {type(c).__name__}")
        if c.algebra is not a:
            raise CochainError("cochain belongs to a different algebra")
        c._validate()
    if op == DIFFERENTIAL:
        if len(args) != 1:
            raise CochainError("DIFFERENTIAL takes one cochain")
        return differential(args[0], signs)
    if op == CUP:
        if len(args) != 2:
            raise CochainError("CUP takes two cochains")
        return cup(args[0], args[1], signs)
    if op == IS_COBOUNDARY:
        if len(args) != 1:
            raise CochainError("IS_COBOUNDARY takes one cochain")
        return is_coboundary(args[0], signs)
    raise ValueError(f"unknown cochain operation {op!r}")


def random_cochain(a: FiniteGradedAlgebra, r: int, s: int, rng,
                   density: float = 0.5) -> Cochain:
    """Random cochain of bidegree (r, s); rng is a random.Random."""
    cap = _max_basis_degree(a) - s
    layers = _bar_layers(a, r, cap)
    pairs = _cell_data(a, layers[r], s)[0]
    f = a.field
    values = {}
    for key, k in pairs:
        if rng.random() >= density:
            continue
        c = f(rng.randrange(-7, 8))
        if f.is_zero(c):
            continue
        values.setdefault(key, {})[k] = c
    return Cochain(a, r, s, values, check=False)


# ---------------------------------------------------------------------------
# Reference cocycles on zigzag algebras.
# ---------------------------------------------------------------------------

def _tree_of(a: FiniteGradedAlgebra) -> Tree:
    edges = {frozenset((b.source, b.target))
             for b in a.basis if b.degree == 1}
    return Tree(a.vertices, [tuple(sorted(e, key=str)) for e in edges])


def _chain_order(t: Tree) -> list:
    if len(t.vertices) == 1:
        return list(t.vertices)
    ends = [v for v in t.vertices if t.degree(v) == 1]
    start = min(ends, key=str)
    order = [start]
    prev = None
    while len(order) < len(t.vertices):
        nxt = [w for w in t.adjacency[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def _dn_chain_labels(t: Tree) -> dict:
    """Labels with the chain 1..n-1 and the extra leaf n forked at n-2."""
    n = len(t.vertices)
    center = [v for v in t.vertices if t.degree(v) == 3]
    if len(center) != 1 or classify(t).kind != "D":
        raise CochainError("algebra does not come from a D tree")
    center = center[0]
    leaves = sorted((v for v in t.adjacency[center] if t.degree(v) == 1),
                    key=str)
    labels = {center: n - 2, leaves[0]: n - 1, leaves[1]: n}
    tail = [v for v in t.adjacency[center] if v not in leaves[:2]]
    if n == 4:
        labels[leaves[2]] = 1
    else:
        prev, cur, lbl = center, tail[0], n - 3
        labels[cur] = lbl
        while t.degree(cur) == 2:
            nxt = [x for x in t.adjacency[cur] if x != prev][0]
            prev, cur, lbl = cur, nxt, lbl - 1
            labels[cur] = lbl
    return labels


def _one_basis(a: FiniteGradedAlgebra, source, target, degree) -> int:
    hits = a.basis_at(source=source, target=target, degree=degree)
    if len(hits) != 1:
        raise CochainError(
            f"expected one basis element {source!r}->{target!r} deg {degree}")
    return hits[0].index


def _verified(c: Cochain, name: str, signs: SignConvention) -> Cochain:
    if not differential(c, signs).is_zero():
        raise AssertionError(f"{name} is not closed")
    if is_coboundary(c, signs):
        raise AssertionError(f"{name} is a coboundary")
    return c


def reference_cocycles(a: FiniteGradedAlgebra, which: str,
                       signs: SignConvention = DEFAULT_SIGNS) -> Cochain:
    """Explicit cocycle representatives on zigzag algebras.

    TAU1 (r, s) = (1, 0) and TAU0 (2, -2) need an A-chain algebra; UPSILON1
    (3, -2) needs a D-tree algebra over a field of characteristic 2.  The
    result is verified to be closed and not a coboundary.
    """
    f = a.field
    t = _tree_of(a)
    kind = classify(t)
    if which == TAU1:
        if kind.kind != "A":
            raise CochainError("TAU1 needs an A-chain zigzag algebra")
        if len(a.vertices) == 1:
            x = _one_basis(a, a.vertices[0], a.vertices[0], 2)
            return _verified(Cochain(a, 1, 0, {(x,): {x: f.one}}),
                             "tau1", signs)
        chain = _chain_order(t)
        values = {}
        for i in range(1, len(chain)):
            up = _one_basis(a, chain[i - 1], chain[i], 1)
            values[(up,)] = {up: f(-1)}
        # closure forces w(a_i) + w(b_i) = w(s_j) for every incidence, so the
        # loop weight matches the arrow weight -1 chosen above
        for v in chain:
            loop = _one_basis(a, v, v, 2)
            values[(loop,)] = {loop: f(-1)}
        return _verified(Cochain(a, 1, 0, values), "tau1", signs)
    if which == TAU0:
        if kind.kind != "A" or len(a.vertices) < 2:
            raise CochainError("TAU0 needs an A-chain with at least 2 vertices")
        chain = _chain_order(t)
        n = len(chain)
        up = {i: _one_basis(a, chain[i - 1], chain[i], 1)
              for i in range(1, n)}
        down = {i: _one_basis(a, chain[i], chain[i - 1], 1)
                for i in range(1, n)}
        loop = {i: _one_basis(a, chain[i - 1], chain[i - 1], 2)
                for i in range(1, n + 1)}
        values = {}
        for i in range(1, n):
            values[(up[i], down[i])] = {
                a.idempotent[chain[i]]: f((-1) ** i)}
            values[(up[i], loop[i])] = {up[i]: f((-1) ** (i + 1))}
            values[(loop[i], down[i])] = {down[i]: f((-1) ** i)}
        for i in range(1, n + 1):
            values[(loop[i], loop[i])] = {loop[i]: f((-1) ** (i + 1))}
        return _verified(Cochain(a, 2, -2, values), "tau0", signs)
    if which == UPSILON1:
        if f(2) != f.zero:
            raise CochainError("UPSILON1 needs characteristic 2")
        labels = _dn_chain_labels(t)
        vertex = {lbl: v for v, lbl in labels.items()}
        n = len(a.vertices)
        form = {}
        for i in range(1, n - 1):
            form[_one_basis(a, vertex[i], vertex[i + 1], 1)] = ("a", i)
            form[_one_basis(a, vertex[i + 1], vertex[i], 1)] = ("b", i)
        form[_one_basis(a, vertex[n - 2], vertex[n], 1)] = ("a", n - 1)
        form[_one_basis(a, vertex[n], vertex[n - 2], 1)] = ("b", n - 1)
        for lbl in range(1, n + 1):
            form[_one_basis(a, vertex[lbl], vertex[lbl], 2)] = ("s", lbl)
        excluded = (("b", n - 1), ("a", n - 1), ("b", n - 2))
        special = (("a", n - 2), ("b", n - 1), ("a", n - 1))
        by_source = _reduced_by_source(a)
        values = {}
        for i1 in a.reduced_indices():
            for i2 in by_source.get(a.basis[i1].target, ()):
                for i3 in by_source.get(a.basis[i2].target, ()):
                    shape = (form[i3], form[i2], form[i1])
                    kinds = sorted(k for k, _ in shape)
                    closed_loop = (a.basis[i1].source == a.basis[i3].target)
                    if kinds == ["a", "b", "b"] and shape != excluded:
                        hit = True
                    elif kinds.count("s") == 1 and "s" in kinds and closed_loop:
                        hit = True
                    elif shape == special:
                        hit = True
                    else:
                        hit = False
                    if not hit:
                        continue
                    deg = (a.basis[i1].degree + a.basis[i2].degree
                           + a.basis[i3].degree - 2)
                    tgt = _one_basis(a, a.basis[i1].source,
                                     a.basis[i3].target, deg)
                    values[(i3, i2, i1)] = {tgt: f.one}
        return _verified(Cochain(a, 3, -2, values), "upsilon1", signs)
    raise ValueError(f"unknown reference cocycle {which!r}")


# ---------------------------------------------------------------------------
# Koszul bimodule route.
# ---------------------------------------------------------------------------

def koszul_bimodule_hh(qd: QuadraticData, r_max: int, s_window,
                       signs: SignConvention = DEFAULT_SIGNS,
                       verify_koszul: bool = True) -> HHTable:
    """HH table from the Koszul bimodule complex of a Koszul quadratic pair.

    Cochains are cyclic pairs (xi, x) with xi in the quadratic dual, x in the
    algebra, source(xi) = target(x) and target(xi) = source(x); r is the word
    length of xi and s the internal degree of the pair.  The differential has
    the two-term shape d(xi (x) x) = sum_a xi a^ (x) a x +- a^ xi (x) x a with
    the koszul_left / koszul_right signs.
    """
    if verify_koszul:
        from .koszul import koszulity_failure
        witness = koszulity_failure(qd, positions=r_max + 2)
        if witness is not None:
            raise ValueError(
                f"pair is not Koszul in the window: homology at {witness}")
    f = qd.field
    s_values = _window_values(s_window)
    algebra = None
    for length in range(3, 64):
        algebra = qd.algebra(length, check=False)
        if algebra.stabilized:
            break
    else:
        raise ValueError("quadratic algebra does not stabilize in length 64; "
                         "pair is not finite dimensional")
    dual_data = quadratic_dual(qd, signs=signs)
    dual = dual_data.algebra(r_max + 1, check=False)
    primal_s = {idx: w.s for idx, w in enumerate(algebra.basis_words)}
    dual_internal = {idx: w.s for idx, w in enumerate(dual.basis_words)}

    # pair enumeration per (r, s)
    def pairs_at(r, s):
        out = []
        for xi in dual.basis:
            if xi.degree != r:
                continue
            for x in algebra.basis:
                if (x.source == xi.target and x.target == xi.source
                        and dual_internal[xi.index] + primal_s[x.index] == s):
                    out.append((xi.index, x.index))
        return out

    prim_idx = {w.letters[0].name: idx
                for idx, w in enumerate(algebra.basis_words) if w.length == 1}
    dual_idx = {w.letters[0].name: idx
                for idx, w in enumerate(dual.basis_words) if w.length == 1}
    dual_gen_of = {g.name: dual_symbol(g).name for g in qd.generators}

    dims = {}
    for s in s_values:
        cells = {r: pairs_at(r, s) for r in range(r_max + 2)}
        index = {r: {p: i for i, p in enumerate(cells[r])}
                 for r in range(r_max + 2)}
        ranks = []
        for r in range(r_max + 1):
            m = SparseMatrix(len(cells[r + 1]), len(cells[r]))
            for col, (xi, x) in enumerate(cells[r]):
                for g in qd.generators:
                    gp = prim_idx.get(g.name)
                    gd = dual_idx.get(dual_gen_of[g.name])
                    if gp is None or gd is None:
                        continue
                    sl = f(signs.sign("koszul_left", primal_s[x]))
                    for xi2, c1 in dual.mult(xi, gd).items():
                        for x2, c2 in algebra.mult(gp, x).items():
                            row = index[r + 1].get((xi2, x2))
                            if row is not None:
                                m.add_at(row, col,
                                         f.mul(sl, f.mul(c1, c2)))
                    xi_total = dual.basis[xi].degree + dual_internal[xi]
                    sr = f(signs.sign("koszul_right", g.s,
                                      primal_s[x], xi_total))
                    for xi2, c1 in dual.mult(gd, xi).items():
                        for x2, c2 in algebra.mult(x, gp).items():
                            row = index[r + 1].get((xi2, x2))
                            if row is not None:
                                m.add_at(row, col,
                                         f.mul(sr, f.mul(c1, c2)))
            ranks.append(rank(m, f))
        for r in range(r_max + 1):
            below = ranks[r - 1] if r else 0
            dims[r, s] = len(cells[r]) - ranks[r] - below
    return HHTable(dims, r_max, s_values)


# ---------------------------------------------------------------------------
# Formality probe.
# ---------------------------------------------------------------------------

class ProbeResult:
    """Outcome of the intrinsic-formality probe over a window."""

    def __init__(self, passed: bool, witness, cells: dict):
        self.passed = passed
        self.witness = witness
        self.cells = cells

    def __bool__(self):
        return self.passed

    def __repr__(self):
        if self.passed:
            return "ProbeResult(PASS)"
        return f"ProbeResult(FAIL at {self.witness})"


def formality_probe(a: FiniteGradedAlgebra, s_min: int,
                    signs: SignConvention = DEFAULT_SIGNS) -> ProbeResult:
    """Check HH^{2-s}(A, A[s]) = 0 for s_min <= s <= -1.

    PASS means every probed cell vanishes; FAIL carries the first nonzero
    cell (r, s) = (2 - s, s) as witness.
    """
    if s_min >= 0:
        raise ValueError("s_min must be negative")
    cells = {}
    witness = None
    for s in range(-1, s_min - 1, -1):
        d = hh_cell_dim(a, 2 - s, s, signs)
        cells[2 - s, s] = d
        if d and witness is None:
            witness = (2 - s, s)
    return ProbeResult(witness is None, witness, cells)
