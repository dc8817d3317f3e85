"""Sparse exact linear algebra over Q and F_p.

Column-echelon Gaussian elimination with a fixed pivot rule (first nonzero in
column order), so ranks, kernels and particular solutions are deterministic.
A bitset fast path handles F_2, where the big bar-complex cells live.
"""

from __future__ import annotations

from .fields import FieldSpec


class NoSolutionType:
    """Sentinel signalling an inconsistent linear system (never approximated)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NO_SOLUTION"

    def __bool__(self):
        return False


NoSolution = NoSolutionType()


class SparseMatrix:
    """Sparse matrix: only nonzero entries are stored."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols}")
        if value == 0:
            self.entries.pop((i, j), None)
        else:
            self.entries[i, j] = value

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def add_at(self, i: int, j: int, value):
        """Accumulate value into entry (i, j)."""
        self[i, j] = self.entries.get((i, j), 0) + value

    def columns(self, f: FieldSpec):
        """Column-major copy with coefficients coerced into f."""
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            fv = f(v)
            if not f.is_zero(fv):
                cols[j][i] = fv
        return cols

    def transpose(self) -> "SparseMatrix":
        t = SparseMatrix(self.cols, self.rows)
        for (i, j), v in self.entries.items():
            t.entries[j, i] = v
        return t

    def nnz(self) -> int:
        return len(self.entries)

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


def _axpy(col, c, pivot_col, f: FieldSpec):
    """col -= c * pivot_col, in place, dropping zeros."""
    p = f.characteristic
    if p:
        for i, v in pivot_col.items():
            w = (col.get(i, 0) - c * v) % p
            if w:
                col[i] = w
            else:
                col.pop(i, None)
    else:
        for i, v in pivot_col.items():
            w = col.get(i, 0) - c * v
            if w:
                col[i] = w
            else:
                col.pop(i, None)


def _rank_gf2(cols) -> int:
    """Rank over F_2 with columns packed as ints (bit i = row i)."""
    pivots = {}
    rk = 0
    for col in cols:
        while col:
            r = (col & -col).bit_length() - 1
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = col
                rk += 1
                break
            col ^= piv
    return rk


def rank(m: SparseMatrix, f: FieldSpec) -> int:
    if f.characteristic == 2:
        packed = [0] * m.cols
        for (i, j), v in m.entries.items():
            if v % 2:
                packed[j] ^= 1 << i
        # process sparser columns first; rank is pivot-order independent
        packed.sort(key=lambda c: c.bit_count())
        return _rank_gf2(packed)
    cols = m.columns(f)
    order = sorted(range(len(cols)), key=lambda j: (len(cols[j]), j))
    pivots = {}
    rk = 0
    for j in order:
        col = cols[j]
        while col:
            r = min(col)
            piv = pivots.get(r)
            if piv is None:
                c = f.inv(col[r])
                pivots[r] = {i: f.mul(c, v) for i, v in col.items()}
                rk += 1
                break
            _axpy(col, col[r], piv, f)
    return rk


def kernel_and_solve(m: SparseMatrix, rhs, f: FieldSpec):
    """Kernel basis of m plus a particular solution of m*x = rhs.

    Returns (kernel_basis, solution).  Kernel vectors and the solution are
    sparse dicts col_index -> coefficient.  solution is None when rhs is None
    and NoSolution when the system is inconsistent.  Pivot rule: first nonzero
    in column order; solutions are verified by substitution before return.
    """
    cols = m.columns(f)
    pivots = {}       # pivot row -> (column dict, combo dict)
    kernel = []
    for j in range(m.cols):
        col = cols[j]
        combo = {j: f.one}
        while col:
            r = min(col)
            piv = pivots.get(r)
            if piv is None:
                c = f.inv(col[r])
                norm_col = {i: f.mul(c, v) for i, v in col.items()}
                norm_combo = {i: f.mul(c, v) for i, v in combo.items()}
                pivots[r] = (norm_col, norm_combo)
                break
            c = col[r]
            _axpy(col, c, piv[0], f)
            _combo_axpy(combo, c, piv[1], f)
        else:
            kernel.append(combo)

    solution = None
    if rhs is not None:
        res = _as_sparse_vector(rhs, f)
        sol = {}
        while res:
            r = min(res)
            piv = pivots.get(r)
            if piv is None:
                sol = NoSolution
                break
            c = res[r]
            _axpy(res, c, piv[0], f)
            # sol += c * piv_combo
            _combo_axpy(sol, f.neg(c), piv[1], f)
        solution = sol
        if solution is not NoSolution:
            _verify_solution(m, solution, rhs, f)

    for vec in kernel:
        _verify_solution(m, vec, None, f)
    return kernel, solution


def _as_sparse_vector(rhs, f: FieldSpec) -> dict:
    items = rhs.items() if isinstance(rhs, dict) else enumerate(rhs)
    out = {}
    for i, v in items:
        fv = f(v)
        if not f.is_zero(fv):
            out[i] = fv
    return out


def _combo_axpy(combo, c, other, f: FieldSpec):
    """combo -= c * other, in place, dropping zeros."""
    for i, v in other.items():
        w = f.sub(combo.get(i, f.zero), f.mul(c, v))
        if f.is_zero(w):
            combo.pop(i, None)
        else:
            combo[i] = w


def _verify_solution(m: SparseMatrix, x: dict, rhs, f: FieldSpec):
    """Assert m*x == rhs by substitution (rhs None means the zero vector)."""
    by_col = {}
    for (i, j), v in m.entries.items():
        if j in x:
            by_col.setdefault(j, []).append((i, v))
    acc = {}
    for j, c in x.items():
        for i, v in by_col.get(j, ()):
            w = f.add(acc.get(i, f.zero), f.mul(c, f(v)))
            if f.is_zero(w):
                acc.pop(i, None)
            else:
                acc[i] = w
    target = _as_sparse_vector(rhs, f) if rhs is not None else {}
    if acc != target:
        raise AssertionError("linear solve failed substitution check")


def kernel_dim(m: SparseMatrix, f: FieldSpec) -> int:
    return m.cols - rank(m, f)
