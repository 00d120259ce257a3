"""Tour of the exact symbolic layer.

Everything in this script is computed over exact Laurent polynomials in
s = q^(1/2) with Gaussian-rational coefficients; no floating point is
involved until the very end.
"""

from qsymball.hopf import act, coaction, pairing
from qsymball.ncalg import (
    NcExpr,
    local_confluence_check,
    nc_mul,
    nc_star,
    normal_form,
    preset,
)
from qsymball.scalars import LaurentScalar

# --- exact scalars ---------------------------------------------------------
s = LaurentScalar.s_pow
q = LaurentScalar.q_pow

delta = q(1) - q(-1)
print("delta * delta^(-1) =", delta * LaurentScalar.delta_inv())
print("(q + q^-1)^2       =", (q(1) + q(-1)) * (q(1) + q(-1)))
print("value at q = 0.5   =", ((q(1) + q(-1)) * (q(1) + q(-1))).eval(0.5))

# --- noncommutative rewriting ----------------------------------------------
# The quantum symmetric 2x2 matrix algebra: three generators, three
# holomorphic relations, six Wick-ordering relations for the stars.
P = preset("pol-matsym-q")
z11, z21, z22 = (NcExpr.word(P.gen(n)) for n in ("z11", "z21", "z22"))

print("\nnormal form of z21 z11:", normal_form(z21.raw_mul(z11), P))
print("normal form of z21* z21:",
      normal_form(nc_star(z21, P).raw_mul(z21), P))

# The rewrite system is locally confluent for all four presets, so
# normal forms are canonical.
for name in ("pol-matsym-q", "c-su2-q", "uq-sl2", "pol-c-q"):
    bad = local_confluence_check(preset(name), max_deg=3)
    print(f"confluence violations in {name}: {len(bad)}")

# --- the quantum group layer ------------------------------------------------
UQ = preset("uq-sl2")
SU2 = preset("c-su2-q")
E, F, K = (NcExpr.word(UQ.gen(n)) for n in ("E", "F", "K"))

print("\npairing <t12, E> =", pairing(NcExpr.word(SU2.gen("t12")), E))
print("pairing <t21, F> =", pairing(NcExpr.word(SU2.gen("t21")), F))

# U_q(sl2) acts on the matrix algebra; E lowers, F raises.
print("\nE . z21 =", act(E, z21))
print("F . z21 =", act(F, z21))
print("K . z11 =", act(K, z11))

# The coaction encodes the substitution Z -> U^T Z U at the Hopf level.
print("\ncoaction of z21:")
print(coaction(z21))
