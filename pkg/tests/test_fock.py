import numpy as np
import pytest

from qsymball.fock import (
    Coeff,
    FAMILIES,
    OpExpr,
    Phase,
    RepSpec,
    base_ops,
    character_substitute,
    coherent_check,
    cstar_identity_residual,
    egervary_dilation,
    generator_images,
    guard_restrict,
    materialize,
    moment_match,
    op_norm,
    rep_image,
    rep_matrix,
    relation_residual,
)
from qsymball.ncalg import NcExpr, preset
from qsymball.scalars import LaurentScalar

Q = 0.5
N = 24


def test_base_operator_relations():
    ops = base_ops(N, Q)
    S, St, C2, D = ops["S"], ops["St"], ops["C2"], ops["D"]
    # S* S = 1 off the truncation corner
    assert abs((St @ S).toarray()[: N - 1, : N - 1]
               - np.eye(N - 1)).max() < 1e-14
    # C2^2 = 1 - D^2
    assert abs((C2 @ C2 + ops["D"] @ ops["D"]).toarray()
               - np.eye(N)).max() < 1e-14
    # D S = q S D
    assert abs((D @ S - Q * S @ D).toarray()).max() < 1e-14


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_every_family_satisfies_its_algebra(family):
    algebra, legs, arity = FAMILIES[family]
    spec = RepSpec(family, tuple(0.4 * (k + 1) for k in range(arity)))
    truncation = {0: 32, 1: 32, 2: 16, 3: 10}[legs]
    assert relation_residual(preset(algebra), spec, truncation, Q) < 1e-10


def test_adjoint_matches_matrix_adjoint():
    P = preset("pol-matsym-q")
    x = NcExpr.word(P.gen("z11"))
    spec = RepSpec("tau", (0.7,))
    a = rep_matrix(x, spec, 16, Q).toarray()
    b = rep_matrix(
        NcExpr.word(P.gen("z11", star=True)), spec, 16, Q
    ).toarray()
    assert abs(a.conj().T - b).max() < 1e-14


def test_character_substitution_chain_is_exact():
    phi = Phase.sym("phi")
    fock_t, tau_t = generator_images("fock"), generator_images("tau")
    omega_t, nu_t = generator_images("omega"), generator_images("nu")
    theta_t = generator_images("theta")
    coact_t = generator_images("Fphi-coact")
    nu2_t = generator_images("nu", (Coeff.phase(Phase.sym("phi2")),))
    for g in ("z11", "z21", "z22"):
        assert character_substitute(fock_t[g], 2, phi) == tau_t[g]
        assert character_substitute(tau_t[g], 1, phi) == omega_t[g]
        assert character_substitute(coact_t[g], 1, Phase.one()) == nu_t[g]
        assert (character_substitute(nu2_t[g], 0, Phase.sym("phi1"))
                == theta_t[g])


def test_character_substitution_is_multiplicative():
    spec = RepSpec("tau", (0.3,))
    P = preset("pol-matsym-q")
    x = NcExpr.word(P.gen("z22"), P.gen("z21", star=True))
    y = NcExpr.word(P.gen("z11"))
    phi = Phase.sym("phi")
    lhs = character_substitute(rep_image(x.raw_mul(y), spec), 1, phi)
    rhs = (character_substitute(rep_image(x, spec), 1, phi)
           * character_substitute(rep_image(y, spec), 1, phi))
    assert lhs == rhs


def test_shift_series_identities():
    res = cstar_identity_residual(2, 64, 40, Q)
    assert max(res.values()) < 1e-12
    res = cstar_identity_residual(4, 64, 40, Q)
    assert max(res.values()) < 1e-12


def test_op_norm_dense_agrees_with_svd():
    rng = np.random.default_rng(3)
    m = rng.standard_normal((40, 40)) + 1j * rng.standard_normal((40, 40))
    assert op_norm(m) == pytest.approx(np.linalg.norm(m, 2), abs=1e-12)


def test_op_norm_sparse_path_is_a_tight_lower_bound():
    import scipy.sparse as sp
    d = np.linspace(0.1, 3.0, 2000)
    m = sp.diags(d).tocsr()
    v = op_norm(m)
    assert v <= 3.0 + 1e-12
    assert v == pytest.approx(3.0, abs=1e-8)


def test_guard_restriction_removes_corner_defect():
    ops = base_ops(8, Q)
    defect = (ops["St"] @ ops["S"]).toarray() - np.eye(8)
    assert abs(defect).max() == pytest.approx(1.0)
    assert abs(guard_restrict(defect, 8, 1, 1)).max() < 1e-15


def test_coherent_vectors_and_moments():
    for phi in (0.0, np.pi / 3):
        a = RepSpec("tau", (phi,))
        b = RepSpec("Fphi-coact", (phi,))
        assert max(coherent_check(a, 24, Q).values()) < 1e-12
        assert max(coherent_check(b, 24, Q).values()) < 1e-12
        assert moment_match(a, b, 4, 24, Q) < 1e-10


def test_egervary_dilation_properties():
    rng = np.random.default_rng(5)
    t = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    t /= 1.1 * np.linalg.norm(t, 2)
    m = 4
    u = egervary_dilation(t, m)
    eye = np.eye(u.shape[0])
    assert abs(u @ u.conj().T - eye).max() < 1e-12
    assert abs(u.conj().T @ u - eye).max() < 1e-12
    tn, un = np.eye(6), eye
    for _ in range(m):
        tn, un = tn @ t, un @ u
        assert abs(un[:6, :6] - tn).max() < 1e-12


def test_phase_symbols_collect_half_integer_exponents():
    p = Phase.sym("phi")
    assert p * p == Phase.sym("phi", 4)
    assert p * p.conj() == Phase.one()
    c = Coeff.phase(p, LaurentScalar.imag_unit())
    assert (c * c.conj()).eval(Q, {"phi": 0.9}) == pytest.approx(1.0)
