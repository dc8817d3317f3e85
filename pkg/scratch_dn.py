import time
from quiverhh.fields import QQ, GF
from quiverhh.quiver import dynkin_tree, standard_form
from quiverhh.pathalg import zigzag
from quiverhh.hochschild import hh_bar_dims

def ZZ(kind, n, f):
    t = dynkin_tree(kind, n)
    q = standard_form(t, t.vertices[0])
    return zigzag(q, f)

A3_GOLD = {(0, 2): 3, (1, 0): 1, (3, -2): 1, (5, -4): 1, (0, 0): 1,
           (2, -2): 1, (4, -4): 1, (6, -6): "x", (5, -6): "x",
           (7, -8): 1, (6, -8): 1}
D4_GOLD = {(0, 2): 4, (4, -2): "x", (1, 0): 1, (3, -2): "x", (5, -4): 2,
           (9, -8): 1, (0, 0): 1, (4, -4): 2, (6, -6): "x", (8, -8): 1,
           (10, -10): "2x", (5, -6): "x", (9, -10): "2x"}
D5_GOLD = {(0, 2): 5, (4, -2): "x", (1, 0): 1, (3, -2): "x", (5, -4): 1,
           (7, -6): 1, (9, -8): 1, (13, -12): 1, (0, 0): 1, (4, -4): 1,
           (6, -6): 1, (8, -8): 1, (10, -10): "x", (12, -12): 1,
           (14, -14): "x", (9, -10): "x", (13, -14): "x"}

def expand(gold, x):
    want = {}
    for k, d in gold.items():
        if d == "x":
            d = x
        elif d == "2x":
            d = 2 * x
        if d:
            want[k] = d
    return want

t0 = time.time()
for f, x, label in ((QQ, 0, "char0"), (GF(2), 1, "char2"), (GF(3), 0, "char3")):
    a = ZZ("A", 3, f)
    tab = hh_bar_dims(a, 10, (-8, 2))
    nz = tab.nonzero_cells()
    want = expand(A3_GOLD, x)
    print("A3", label, "ok" if nz == want else ("MISMATCH", sorted(set(nz.items()) ^ set(want.items()))))
print("A3 elapsed", round(time.time() - t0, 2))

t0 = time.time()
for f, x, label in ((QQ, 0, "char0"), (GF(2), 1, "char2")):
    a = ZZ("D", 4, f)
    tab = hh_bar_dims(a, 10, (-10, 2), budget=60_000_000)
    nz = tab.nonzero_cells()
    want = expand(D4_GOLD, x)
    rows = {k: v for k, v in nz.items() if -1 <= k[0] + k[1] <= 2}
    extra = {k: v for k, v in nz.items() if not (-1 <= k[0] + k[1] <= 2)}
    print("D4", label, "ok" if rows == want else ("MISMATCH", sorted(set(rows.items()) ^ set(want.items()))),
          "outside-figure-rows:", extra)
    print("  elapsed", round(time.time() - t0, 2))

t0 = time.time()
for f, x, label in ((GF(2), 1, "char2"),):
    a = ZZ("D", 5, f)
    tab = hh_bar_dims(a, 14, (-14, 2), budget=200_000_000)
    nz = tab.nonzero_cells()
    want = expand(D5_GOLD, x)
    rows = {k: v for k, v in nz.items() if -1 <= k[0] + k[1] <= 2}
    extra = {k: v for k, v in nz.items() if not (-1 <= k[0] + k[1] <= 2)}
    print("D5", label, "ok" if rows == want else ("MISMATCH", sorted(set(rows.items()) ^ set(want.items()))),
          "outside:", extra)
    print("  elapsed", round(time.time() - t0, 2))
