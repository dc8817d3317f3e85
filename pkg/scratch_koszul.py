"""Scratch validation for koszul.py (delete before commit)."""
from __future__ import annotations

from quiverhh.fields import QQ, GF
from quiverhh.quiver import dynkin_tree, standard_form, star_tree
from quiverhh.dga import GINZBURG, build_dga
from quiverhh.pathalg import zigzag_quadratic_data
from quiverhh import koszul as K

F2 = GF(2)
F3 = GF(3)


def rooted(t):
    return standard_form(t, t.vertices[0])


A1 = rooted(dynkin_tree("A", 1))
A2 = rooted(dynkin_tree("A", 2))
A3 = rooted(dynkin_tree("A", 3))
D4 = rooted(dynkin_tree("D", 4))
D5 = rooted(dynkin_tree("D", 5))
STAR4 = rooted(star_tree(4))

ok = True


def check(label, got, want=True):
    global ok
    good = got == want
    if not good:
        ok = False
    print(f"{'PASS' if good else 'FAIL'} {label}: got={got!r}" +
          ("" if good else f" want={want!r}"))


# --- 1. ext_over_dga: deep A2 window discriminates the hom_mu1 sign ---
for f, tag in ((QQ, "QQ"), (F2, "F2"), (F3, "F3")):
    dga = build_dga(A2, GINZBURG, f)
    dims = K.ext_over_dga(dga, -6)
    check(f"ext A2 s_min=-6 {tag}", dims,
          {(0, 0): 2, (1, 1): 2, (2, 2): 2})

# --- delta^2 = 0 by composing consecutive matrices ---
def d_squared_zero(dga, s_min, f):
    cells, mats = K._ext_complex(dga, s_min, K.DEFAULT_SIGNS)
    for (kappa, n), m1 in mats.items():
        m2 = mats.get((kappa + 1, n))
        if m2 is None:
            continue
        comp = {}
        for (i, j), a in m2.entries.items():
            for (j2, k2), b in m1.entries.items():
                if j2 != j:
                    continue
                key = (i, k2)
                comp[key] = f.add(comp.get(key, f.zero), f.mul(a, b))
        if any(v != f.zero for v in comp.values()):
            return (kappa, n)
    return None


for f, tag in ((QQ, "QQ"), (F3, "F3")):
    dga = build_dga(A2, GINZBURG, f)
    check(f"ext d^2=0 A2 {tag}", d_squared_zero(dga, -6, f), None)
dga = build_dga(D4, GINZBURG, QQ)
check("ext d^2=0 D4 QQ", d_squared_zero(dga, -4, QQ), None)

# --- 2. ext on A1 and D4 ---
check("ext A1 s_min=-6 QQ",
      K.ext_over_dga(build_dga(A1, GINZBURG, QQ), -6),
      {(0, 0): 1, (2, 2): 1})
check("ext D4 s_min=-4 QQ",
      K.ext_over_dga(build_dga(D4, GINZBURG, QQ), -4),
      {(0, 0): 4, (1, 1): 6, (2, 2): 4})
check("ext D4 s_min=-4 F2",
      K.ext_over_dga(build_dga(D4, GINZBURG, F2), -4),
      {(0, 0): 4, (1, 1): 6, (2, 2): 4})

print("--- ext section done ---", flush=True)

# --- 3. Koszul complex reports ---
rep = K.koszul_complex_report(zigzag_quadratic_data(A1, QQ), 6)
check("koszul A1 exact", rep.is_exact())
check("koszul A1 homology0", rep.homology.get(0), 1)

rep = K.koszul_complex_report(zigzag_quadratic_data(A2, QQ), 6)
check("koszul A2 first_failure", rep.first_failure(), (1, 2))

rep = K.koszul_complex_report(zigzag_quadratic_data(A3, QQ), 6)
ff = rep.first_failure()
check("koszul A3 fails at 2", ff and ff[0], 2)

rep = K.koszul_complex_report(zigzag_quadratic_data(STAR4, QQ), 6)
check("koszul star4 exact", rep.is_exact())

rep = K.koszul_complex_report(zigzag_quadratic_data(D4, QQ), 7)
ff = rep.first_failure()
check("koszul D4 fails at 4", ff and ff[0], 4)
print("  D4 homology:", dict(sorted(rep.homology.items())))

check("koszulity_failure A1", K.koszulity_failure(
    zigzag_quadratic_data(A1, QQ), 6), None)
print("--- koszul reports done ---", flush=True)

# --- 4. Phi verification, 6 trees x 3 chars ---
TREES = [("A1", A1), ("A2", A2), ("A3", A3), ("D4", D4), ("D5", D5),
         ("star4", STAR4)]
for name, q in TREES:
    for f, tag in ((QQ, "QQ"), (F2, "F2"), (F3, "F3")):
        rep = K.phi_build_and_verify(q, f)
        check(f"phi {name} {tag}", bool(rep))
        if not rep:
            print("   ", rep)
check("phi ratio rule D5", K.PhiSigns(D5).ratio_rule_holds(D5))

# rerooted D4: root at an outer leaf
D4_reroot = standard_form(dynkin_tree("D", 4), 4)
check("phi rerooted D4 QQ", bool(K.phi_build_and_verify(D4_reroot, QQ)))
print("--- phi verify done ---", flush=True)

# --- 5. bijectivity windows ---
check("phi bijective A1 r<=6", K.phi_bijectivity_window(A1, QQ, 6))
check("phi bijective A2 r<=5", K.phi_bijectivity_window(A2, QQ, 5))
check("phi bijective D4 r<=4", K.phi_bijectivity_window(D4, QQ, 4))
check("phi bijective A2 r<=4 F2", K.phi_bijectivity_window(A2, F2, 4))
print("--- bijectivity done ---", flush=True)

print("ALL OK" if ok else "FAILURES PRESENT")
