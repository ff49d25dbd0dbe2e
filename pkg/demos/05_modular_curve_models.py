"""Models of the modular curves at levels 4, 6, 7, 8, exactly.

Setting z = 0 in the quadric systems turns the quadrics into quartic
relations among the theta nulls a_k(tau); as tau varies these cut out
models of modular curves.  All of the following are verified as exact
q-series statements, including the classical eta-product forms of the
uniformizing functions.
"""

from thetalab.identities import (
    b1_series,
    b4_series,
    degenerate_fibers_level4,
    eta_quotient_check,
    hesse_check,
    lam_series,
    mu6_series,
    quotient_model_check,
    theta_null_curve_check,
    weierstrass_check_level4,
    x6_series,
    y6_series,
)

ORDER = 80

print("quartic models from the theta nulls:")
for N in (4, 6, 7, 8):
    for r in theta_null_curve_check(N, ORDER):
        print(f"  {r.status.upper():4s} {r.name:24s} {r.detail}")

print("\nuniformizers and their closed eta-product forms:")
print("  lambda =", str(lam_series(12)))
print("  X      =", str(x6_series(8)))
print("  Y      =", str(y6_series(8)))
print("  b1     =", str(b1_series(10)))
print("  b4     =", str(b4_series(12)))
print("  3mu    =", str(mu6_series(8)))
for r in eta_quotient_check(ORDER):
    print(f"  {r.status.upper():4s} {r.name:24s} {r.detail}")

print("\nquotient models (level 6 -> X(6), level 8 -> X(8) and down to level 4):")
for N in (6, 8):
    for r in quotient_model_check(N, ORDER):
        print(f"  {r.status.upper():4s} {r.name:28s} {r.detail}")

print("\ngeometry over the level-4 base:")
w = weierstrass_check_level4()
print(f"  {w.status.upper():4s} {w.name}: {w.detail}")
d = degenerate_fibers_level4()
print(f"  {d.status.upper():4s} {d.name}: {d.detail[:90]}...")
h = hesse_check(ORDER)
print(f"  {h.status.upper():4s} {h.name}: {h.detail}")
