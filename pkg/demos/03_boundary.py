"""Tour of the boundary layer.

The distinguished-boundary ideal is generated by four quadratic
elements g_ij.  Representation families split cleanly into those that
kill the ideal (the boundary families) and those that see it; the
boundary families realize the maximum modulus, norm domination, and the
determinant identities.
"""

import numpy as np

from qsymball.boundary import (
    annihilation_residual,
    det_unitarity_check,
    dilation_report,
    holo_matrix_inequalities,
    j_generators,
    norm_domination,
    regular_involution_check,
    shilov_norm,
    vacuum_witness,
)
from qsymball.fock import RepSpec
from qsymball.ncalg import NcExpr, preset

Q = 0.5
P = preset("pol-matsym-q")

# --- the ideal and who annihilates it ----------------------------------------
print("ideal generators:")
for name, g in j_generators().items():
    print(f"  {name} = {g}")

print("\nannihilation residuals / vacuum witnesses:")
for family, phases in (("omega", (0.9,)), ("theta", (0.9, 2.1)),
                       ("chi-coact", (0.9, 2.1))):
    res = annihilation_residual(RepSpec(family, phases), 32, Q)
    print(f"  {family:10s} annihilates: max residual {max(res.values()):.2e}")
for family, phases, N in (("fock", (), 10), ("tau", (0.9,), 16),
                          ("nu", (0.9,), 32)):
    wit = vacuum_witness(RepSpec(family, phases), N, Q)
    print(f"  {family:10s} does not:    witness {wit:.3f} >= q^4/2 = "
          f"{Q**4 / 2}")

# --- maximum modulus -----------------------------------------------------------
# sup over the boundary circle of ||omega_phi(z21) + e^(i theta)|| is
# exactly 2, for every theta.
print("\nmaximum modulus sweep:")
for theta in (0.0, np.pi / 2, np.pi):
    print(f"  theta = {theta:.3f}: {shilov_norm(theta, 64, 48, Q):.10f}")

# --- norm domination and the matrix-level chain --------------------------------
x = NcExpr.word(P.gen("z21", star=True), P.gen("z22"))
print("\nnorm-domination excess for z21* z22:",
      f"{norm_domination([x], 48, 24, 12, Q)[0]:.2e}")

entries = [[NcExpr.word(P.gen("z22")), NcExpr.word(P.gen("z21"))],
           [NcExpr.word(P.gen("z21")), NcExpr.word(P.gen("z11"))]]
lhs, mid, rhs = holo_matrix_inequalities(entries, 48, 24, 12, Q, grid=8)
print("matrix boundary chain:"
      f" {lhs:.8f} <= {mid:.8f} <= {rhs:.8f}")

# --- finite dilation ------------------------------------------------------------
print("\nfinite unitary dilation (m = 4):")
for key, val in dilation_report(8, Q, m=4).items():
    print(f"  {key:24s} {val:.2e}")

# --- the quantum determinant ----------------------------------------------------
out = det_unitarity_check(0.6, 48, Q)
print("\nomega(det) acts as the scalar", np.round(out["scalar"], 6))
print("det* det = q^(-2) residual:", f"{out['det*det']:.2e}")
inv = regular_involution_check(0.6, 48, Q)
print("involution residuals:", {k: f"{v:.1e}" for k, v in inv.items()})
