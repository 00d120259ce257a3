"""Tour of the operator-representation catalog.

Each family represents the quantum matrix-ball algebra on truncated
Fock-space legs built from the shift S and the diagonals C2, C4, D.
Characters of the shift algebra collapse one leg at a time, producing a
chain fock -> tau -> omega of progressively smaller families.
"""

import numpy as np

from qsymball.fock import (
    Phase,
    RepSpec,
    base_ops,
    character_substitute,
    coherent_check,
    generator_images,
    moment_match,
    op_norm,
    relation_residual,
    rep_matrix,
)
from qsymball.ncalg import NcExpr, preset

Q, N = 0.5, 24
P = preset("pol-matsym-q")

# --- the basic operators -----------------------------------------------------
ops = base_ops(8, Q)
print("shift S on 8 levels:\n", ops["S"].toarray().real.astype(int))
print("diagonal D:", np.round(ops["D"].diagonal(), 4))

# --- every catalog family satisfies its defining relations -------------------
print("\nguard-block relation residuals:")
for family, phases in (("fock", ()), ("tau", (0.7,)), ("omega", (0.7,)),
                       ("nu", (0.7,)), ("Fphi-coact", (0.7,)),
                       ("chi-coact", (0.7, 1.9))):
    spec = RepSpec(family, phases)
    trunc = {0: 32, 1: 32, 2: 16, 3: 8}[spec.legs]
    print(f"  {family:12s} {relation_residual(P, spec, trunc, Q):.3e}")

# --- character substitution is exact, not numerical ---------------------------
fock_t = generator_images("fock")
tau_t = generator_images("tau")
print("\nsubstituting S -> e^(i phi) on the third Fock leg:")
for g in ("z11", "z21", "z22"):
    same = character_substitute(fock_t[g], 2, Phase.sym("phi")) == tau_t[g]
    print(f"  {g}: collapses onto the two-leg family: {same}")

# --- coherent structure -------------------------------------------------------
# tau and the coaction composite have the same vacuum moments: they are
# two coherent representations of the same Wick algebra.
phi = np.pi / 3
a, b = RepSpec("tau", (phi,)), RepSpec("Fphi-coact", (phi,))
print("\ncoherent-vector residual (tau):        "
      f"{max(coherent_check(a, N, Q).values()):.3e}")
print("coherent-vector residual (composite):  "
      f"{max(coherent_check(b, N, Q).values()):.3e}")
print("vacuum moment mismatch up to degree 4: "
      f"{moment_match(a, b, 4, N, Q):.3e}")

# --- norms --------------------------------------------------------------------
x = NcExpr.word(P.gen("z22"))
print("\n||z22|| in the one-phase boundary family:",
      round(op_norm(rep_matrix(x, RepSpec("omega", (0.0,)), 48, Q)), 6))
