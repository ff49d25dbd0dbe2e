"""The finite projective matrix group attached to an even level.

The coordinate changes induced by the modular group generate, for even
N, a projective representation with generators A0 = [zeta^(ij)] and the
diagonal B0 = Diag(zt^(i(N-i))) over Q(zeta_2N).  All relations are
verified with exact cyclotomic arithmetic: group relations are brittle
under rounding, so no floats are involved here.
"""

from thetalab.projective import build_rho_bar, conjugation_table_check, verify_presentation

for N in (4, 6, 8):
    rep = verify_presentation(N)
    print(f"N={N}: " + ", ".join(f"{k}={v}" for k, v in rep.checks.items()))

print("\nconjugation of the translation matrices (N=6):")
for k, v in conjugation_table_check(6).items():
    print(f"  {k}: {v}")

# restriction to the fixed space of the inversion: the induced action on
# the null-value coordinates (a_0 : ... : a_(N/2))
rb = build_rho_bar(4)
print("\nN=4 induced generators on the null coordinates:")
for row in rb.Abar_null.rows:
    print("  ", [str(c) for c in row])
for row in rb.Bbar_null.rows:
    print("  ", [str(c) for c in row])

bn = rb.Bbar.power(4)
print("B^N restricts to the alternating sign diagonal:",
      [str(bn.rows[i][i]) for i in range(3)])
