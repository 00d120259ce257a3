"""Boundary layer: the defining ideal of the distinguished boundary,
the annihilation classification of the representation catalog, the
maximum-modulus computation, norm-domination and matrix-level boundary
inequalities, and the regular-functions determinant identities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.optimize import minimize_scalar

from . import fock, hopf
from .fock import (
    Coeff,
    OpExpr,
    Phase,
    RepSpec,
    character_substitute,
    egervary_dilation,
    frobenius,
    generator_images,
    guard_restrict,
    materialize,
    op_norm,
    psi_image,
    rep_image,
    rep_matrix,
)
from .ncalg import NcExpr, nc_mul, nc_star, normal_form, preset
from .scalars import ONE, LaurentScalar

_q = LaurentScalar.q_pow
_POL = preset("pol-matsym-q")

ANNIHILATING = ("omega", "theta", "chi-coact")
NON_ANNIHILATING = ("fock", "tau", "nu")


# ---------------------------------------------------------------------------
# The boundary ideal
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdealGens:
    """The four normal-form generators g_ij of the boundary ideal."""

    g11: NcExpr
    g12: NcExpr
    g21: NcExpr
    g22: NcExpr

    def items(self):
        return (("g11", self.g11), ("g12", self.g12),
                ("g21", self.g21), ("g22", self.g22))


def _z(i, j, star=False):
    if (i, j) == (1, 2):
        # z12 = q z21
        return NcExpr.word(_POL.gen("z21", star), coeff=_q(1))
    return NcExpr.word(_POL.gen(f"z{i}{j}", star))


def j_generators() -> IdealGens:
    """g_ij = sum_k q^(4-i-j) z_ik z_jk* - delta_ij, in normal form."""
    out = {}
    for i in (1, 2):
        for j in (1, 2):
            total = NcExpr.zero()
            for k in (1, 2):
                term = _z(i, k).raw_mul(nc_star(_z(j, k), _POL))
                total = total + term.scale(_q(4 - i - j))
            if i == j:
                total = total - NcExpr.unit()
            out[f"g{i}{j}"] = normal_form(total, _POL)
    return IdealGens(**out)


def annihilation_residual(spec: RepSpec, N, q, words=None):
    """Guard-block Frobenius norm of every materialized g_ij, optionally
    post-multiplied by each extra word."""
    words = [NcExpr.unit()] + list(words or [])
    out = {}
    for name, g in j_generators().items():
        worst = 0.0
        for w in words:
            x = nc_mul(g, w, _POL)
            img = rep_image(x, spec)
            m = materialize(img, N, q, spec.phase_values)
            res = frobenius(guard_restrict(m, N, spec.legs, img.guard()))
            worst = max(worst, res)
        out[name] = worst
    return out


def vacuum_witness(spec: RepSpec, N, q):
    """max_ij |<g_ij vac, vac>| — the explicit matrix-entry witness that
    a family does not annihilate the ideal."""
    dim = N ** spec.legs
    vac = np.zeros(dim, dtype=complex)
    vac[0] = 1.0
    best = 0.0
    for _, g in j_generators().items():
        m = rep_matrix(g, spec, N, q)
        best = max(best, abs(np.vdot(vac, m @ vac)))
    return best


# ---------------------------------------------------------------------------
# Maximum modulus on the boundary
# ---------------------------------------------------------------------------

def shilov_norm(theta, grid, N, q):
    """sup over the phase grid of ||omega_phi(z21) + e^(i theta) I||."""
    if grid < 4:
        raise ValueError("grid must be at least 4")
    ident = sp.identity(N, format="csr")
    best = 0.0
    for phi in np.arange(grid) * (2 * np.pi / grid):
        spec = RepSpec("omega", (float(phi),))
        m = rep_matrix(NcExpr.word(_POL.gen("z21")), spec, N, q)
        best = max(best, op_norm(m + np.exp(1j * theta) * ident))
    return best


# ---------------------------------------------------------------------------
# Norm domination across the catalog
# ---------------------------------------------------------------------------

def _truncation_for(spec: RepSpec, n1, n2, n3):
    return {0: n1, 1: n1, 2: n2, 3: n3}[spec.legs]


def catalog_specs(phi_grid_points):
    """One RepSpec per catalog family over pol-matsym, swept over the
    supplied phase values."""
    specs = [RepSpec("fock", ())]
    for phi in phi_grid_points:
        for fam in ("tau", "omega", "nu", "Fphi-coact"):
            specs.append(RepSpec(fam, (float(phi),)))
        for phi2 in phi_grid_points:
            specs.append(RepSpec("theta", (float(phi), float(phi2))))
            specs.append(RepSpec("chi-coact", (float(phi), float(phi2))))
    return specs


def guarded_norm(x: NcExpr, spec: RepSpec, N, q):
    """Norm of the representing matrix restricted to guard-block columns.

    On guard columns the truncated matrix acts exactly like the
    untruncated operator, so this is free of truncation-edge junk and
    converges to the true norm from below as N grows."""
    img = rep_image(x, spec)
    m = materialize(img, N, q, spec.phase_values)
    d = img.guard()
    if img.legs and 0 < d < N:
        m = guard_restrict(m, N, img.legs, d)
    return op_norm(m)


def norm_domination(samples, n1, n2, n3, q, phases=4):
    """For each sampled element x, max over the catalog of
    ||pi(x)|| - ||pi_F(x)|| (negative or tiny when domination holds).

    All norms are guard-restricted.  The Fock norm is evaluated as the
    larger of its truncated value and the phase-grid supremum of the
    two-leg field it decomposes into as a direct integral — the two
    agree in infinite dimension, and the latter is dense-exact at
    truncation, so the bound never loses to iterative-solver slack on
    the large third leg.
    """
    grid = np.arange(phases) * (2 * np.pi / phases)
    specs = [
        s for s in catalog_specs(grid) if s.family not in ("fock", "tau")
    ]
    fock_spec = RepSpec("fock", ())
    out = []
    for x in samples:
        tau_sup = max(
            guarded_norm(x, RepSpec("tau", (float(p),)), n2, q)
            for p in grid
        )
        bound = max(guarded_norm(x, fock_spec, n3, q), tau_sup)
        worst = tau_sup - bound
        for spec in specs:
            nn = guarded_norm(x, spec, _truncation_for(spec, n1, n2, n3), q)
            worst = max(worst, nn - bound)
        out.append(worst)
    return out


# ---------------------------------------------------------------------------
# Matrix-level boundary inequalities
# ---------------------------------------------------------------------------

def _is_holomorphic(x: NcExpr):
    return all(not g.star for w in x.terms for g in w)


def _block_norm(entries, spec: RepSpec, N, q):
    n = len(entries)
    blocks = [
        [rep_matrix(entries[i][j], spec, N, q) for j in range(n)]
        for i in range(n)
    ]
    return op_norm(sp.bmat(blocks, format="csr"))


def _refine_sup(f, x0, step):
    """Local refinement of a smooth 1-d maximum around grid point x0."""
    res = minimize_scalar(
        lambda x: -f(x), bounds=(x0 - step, x0 + step), method="bounded",
        options={"xatol": 1e-4},
    )
    return float(-res.fun)


def _sup_phase1(f, grid):
    pts = np.arange(grid) * (2 * np.pi / grid)
    vals = [f(p) for p in pts]
    k = int(np.argmax(vals))
    return max(max(vals), _refine_sup(f, pts[k], 2 * np.pi / grid))


def _sup_phase2(f, grid):
    pts = np.arange(grid) * (2 * np.pi / grid)
    vals = np.array([[f(a, b) for b in pts] for a in pts])
    i, j = np.unravel_index(np.argmax(vals), vals.shape)
    a, b = pts[i], pts[j]
    best = vals[i, j]
    step = 2 * np.pi / grid
    # coordinate-wise scan refinement of the torus maximum
    for _ in range(4):
        a = max((f(a + d, b), a + d) for d in np.linspace(-step, step, 5))[1]
        b = max((f(a, b + d), b + d) for d in np.linspace(-step, step, 5))[1]
        step /= 4
    return max(best, f(a, b))


def holo_matrix_inequalities(entries, n1, n2, n3, q, grid=16):
    """Boundary-norm chain for a square array of holomorphic elements:
    returns (||pi_F||, sup_phi ||tau_phi||, sup_phi1,phi2 ||chi-coact||)."""
    n = len(entries)
    for row in entries:
        for x in row:
            if not _is_holomorphic(x):
                raise ValueError("entries must be star-free")
    lhs = _block_norm(entries, RepSpec("fock", ()), n3, q)
    # keep the middle term dense-exact: it appears on the larger side
    # of one inequality and the smaller side of the other
    n2_eff = min(n2, int(np.sqrt(fock.DENSE_NORM_CUTOFF / (2 * n))))
    mid = _sup_phase1(
        lambda p: _block_norm(entries, RepSpec("tau", (p,)), n2_eff, q), grid
    )
    rhs = _sup_phase2(
        lambda a, b: _block_norm(entries, RepSpec("chi-coact", (a, b)), n1, q),
        grid,
    )
    return lhs, mid, rhs


# ---------------------------------------------------------------------------
# Finite dilation route
# ---------------------------------------------------------------------------

def dilation_report(N, q, m=4):
    """Unitarity and compression checks for the finite dilation of C4 S,
    plus compression of the dilated boundary maps onto the catalog."""
    T = fock.base_ops(N, q)["C4"] @ fock.base_ops(N, q)["S"]
    T = T.toarray()
    U = egervary_dilation(T, m)
    dim = U.shape[0]
    unit_res = max(
        float(np.abs(U @ U.conj().T - np.eye(dim)).max()),
        float(np.abs(U.conj().T @ U - np.eye(dim)).max()),
    )
    comp_res = 0.0
    Un = np.eye(dim)
    Tn = np.eye(N)
    for _ in range(m):
        Un = Un @ U
        Tn = Tn @ T
        comp_res = max(comp_res, float(np.abs(Un[:N, :N] - Tn).max()))

    # compression of Psi to H^(x3) against the Fock family, on
    # generators and their pairwise products (dilation budget m >= 2)
    gens = ("z11", "z21", "z22")
    psi = {g: psi_image(g, U, "Psi", N, q) for g in gens}
    pif = {
        g: rep_matrix(NcExpr.word(_POL.gen(g)), RepSpec("fock", ()), N, q)
    for g in gens}
    idx = _psi_embedding_indices(N, dim)
    psi_res = 0.0
    def _corner(m, rows):
        # slice while still sparse: full densification is quadratic in
        # the dilation dimension
        return sp.csr_matrix(m)[rows, :][:, rows].toarray()

    for a in gens:
        for b in gens:
            big = _corner(psi[a] @ psi[b], idx)
            small = (pif[a] @ pif[b]).toarray()
            psi_res = max(psi_res, float(np.abs(big - small).max()))
        big = _corner(psi[a], idx)
        psi_res = max(psi_res, float(np.abs(big - pif[a].toarray()).max()))

    # compression of Psi_phi to H^(x2) against the coaction composite
    phi = 0.9
    spec = RepSpec("Fphi-coact", (phi,))
    idx2 = np.nonzero(np.kron(np.arange(dim) < N, np.ones(N, bool)))[0]
    psiphi_res = 0.0
    for a in gens:
        for b in gens + (None,):
            # raw concatenation products: rewriting to normal form is
            # only a homomorphism up to truncation corners
            x = NcExpr.word(_POL.gen(a))
            big = psi_image(a, U, "Psi-phi", N, q, phi)
            if b is not None:
                x = x.raw_mul(NcExpr.word(_POL.gen(b)))
                big = big @ psi_image(b, U, "Psi-phi", N, q, phi)
            small = rep_matrix(x, spec, N, q).toarray()
            comp = _corner(big, idx2)
            psiphi_res = max(psiphi_res, float(np.abs(comp - small).max()))
    return {
        "unitarity": unit_res,
        "compression": comp_res,
        "psi-compression": psi_res,
        "psi-phi-compression": psiphi_res,
    }


def _psi_embedding_indices(N, dim):
    """Flat indices of H x H x H inside H x H x K (K-index below N)."""
    mask = np.kron(
        np.ones(N * N, dtype=bool), np.arange(dim) < N
    )
    return np.nonzero(mask)[0]


# ---------------------------------------------------------------------------
# Character identity on the boundary (symbolic)
# ---------------------------------------------------------------------------

def phase_collapse_check():
    """The single-phase boundary family at angle (phi1 + phi2 + pi)/2
    collapses, under the shift character at phi2, onto the two-phase
    character family — exactly, per generator."""
    half_sum = Coeff.phase(
        Phase((("phi1", 1), ("phi2", 1))), LaurentScalar.imag_unit()
    )
    omega = generator_images("omega", (half_sum,))
    theta = generator_images(
        "theta",
        (Coeff.phase(Phase.sym("phi1")), Coeff.phase(Phase.sym("phi2"))),
    )
    return {
        g: character_substitute(omega[g], 0, Phase.sym("phi2")) == theta[g]
        for g in ("z11", "z21", "z22")
    }


def phase_collapse_residual(phi1, phi2, N, q):
    """Numeric form of the same identity at concrete angles."""
    om = RepSpec("omega", (float((phi1 + phi2 + np.pi) / 2),))
    th = RepSpec("theta", (float(phi1), float(phi2)))
    worst = 0.0
    for g in ("z11", "z21", "z22"):
        x = NcExpr.word(_POL.gen(g))
        img = rep_image(x, om)
        # numeric shift character at angle phi2 applied to the one leg
        val = complex(0)
        for w, c in img.terms.items():
            factor = c.eval(q, om.phase_values)
            for letter in w[0]:
                factor *= {
                    "S": np.exp(1j * phi2),
                    "St": np.exp(-1j * phi2),
                    "C2": 1.0,
                    "C4": 1.0,
                    "D": 0.0,
                }[letter]
            val += factor
        tval = complex(rep_matrix(x, th, N, q).toarray()[0, 0])
        worst = max(worst, abs(val - tval))
    return worst


# ---------------------------------------------------------------------------
# Regular functions: determinant and involution identities
# ---------------------------------------------------------------------------

def det_q() -> NcExpr:
    """det = z22 z11 - q^(-1) z21^2, in normal form."""
    z11, z21, z22 = (_z(1, 1), _z(2, 1), _z(2, 2))
    e = z22.raw_mul(z11) - z21.raw_mul(z21).scale(_q(-1))
    return normal_form(e, _POL)


def det_unitarity_check(phi, N, q):
    """Residuals of det* det = q^(-2) and det det* = q^(-2) in the
    single-phase boundary family, plus the scalar it acts by."""
    spec = RepSpec("omega", (float(phi),))
    d = det_q()
    ds = nc_star(d, _POL)
    out = {}
    for name, x in (("det*det", nc_mul(ds, d, _POL)),
                    ("detdet*", nc_mul(d, ds, _POL))):
        img = rep_image(x, spec)
        m = materialize(img, N, q, spec.phase_values)
        m = m - (q ** -2) * sp.identity(N, format="csr")
        out[name] = frobenius(guard_restrict(m, N, 1, img.guard()))
    img = rep_image(d, spec)
    md = materialize(img, N, q, spec.phase_values).toarray()
    out["scalar"] = complex(md[0, 0])
    keep = N - img.guard()
    out["scalar-residual"] = float(
        np.abs((md - md[0, 0] * np.eye(N))[:, :keep]).max()
    )
    return out


def regular_involution_check(phi, N, q):
    """The three involution identities with det^(-1) realized as
    q^2 det* (valid modulo the boundary ideal), in the single-phase
    boundary family on the guard block."""
    spec = RepSpec("omega", (float(phi),))
    d = det_q()
    dinv = nc_star(d, _POL).scale(_q(2))     # q^2 det*
    z11, z21, z22 = _z(1, 1), _z(2, 1), _z(2, 2)
    pairs = {
        "z11*": (nc_star(z11, _POL),
                 nc_mul(z22, dinv, _POL).scale(_q(-2))),
        "z21*": (nc_star(z21, _POL),
                 nc_mul(z21, dinv, _POL).scale(-_q(-1))),
        "z22*": (nc_star(z22, _POL), nc_mul(z11, dinv, _POL)),
    }
    out = {}
    for name, (lhs, rhs) in pairs.items():
        il, ir = rep_image(lhs, spec), rep_image(rhs, spec)
        m = materialize(il - ir, N, q, spec.phase_values)
        out[name] = frobenius(
            guard_restrict(m, N, 1, max(il.guard(), ir.guard()))
        )
    return out
