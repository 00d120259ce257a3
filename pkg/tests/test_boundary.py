import numpy as np
import pytest

from qsymball.boundary import (
    ANNIHILATING,
    NON_ANNIHILATING,
    annihilation_residual,
    det_q,
    det_unitarity_check,
    dilation_report,
    guarded_norm,
    holo_matrix_inequalities,
    j_generators,
    phase_collapse_check,
    phase_collapse_residual,
    norm_domination,
    regular_involution_check,
    shilov_norm,
    vacuum_witness,
)
from qsymball.fock import FAMILIES, RepSpec
from qsymball.ncalg import NcExpr, nc_equal, nc_star, preset

Q = 0.5
POL = preset("pol-matsym-q")


def _spec(family, base=0.4):
    arity = FAMILIES[family][2]
    return RepSpec(family, tuple(base * (k + 1) for k in range(arity)))


def test_ideal_generators_are_formally_self_adjoint():
    g = dict(j_generators().items())
    assert nc_equal(nc_star(g["g11"], POL), g["g11"], POL)
    assert nc_equal(nc_star(g["g22"], POL), g["g22"], POL)
    assert nc_equal(nc_star(g["g12"], POL), g["g21"], POL)


@pytest.mark.parametrize("family", ANNIHILATING)
def test_annihilating_families(family):
    N = 32 if FAMILIES[family][1] <= 1 else 16
    res = annihilation_residual(_spec(family), N, Q)
    assert max(res.values()) < 1e-10


@pytest.mark.parametrize("family", NON_ANNIHILATING)
def test_non_annihilating_witness(family):
    N = {3: 10, 2: 16, 1: 32}[FAMILIES[family][1]]
    assert vacuum_witness(_spec(family), N, Q) >= Q**4 / 2


@pytest.mark.parametrize("theta", [0.0, np.pi / 2, np.pi])
def test_maximum_modulus_is_two(theta):
    val = shilov_norm(theta, 64, 48, Q)
    assert 2 - 10 / 64**2 <= val <= 2 + 1e-8


def test_norm_domination_small_sample():
    letters = []
    for n in ("z11", "z21", "z22"):
        letters += [POL.gen(n), POL.gen(n, star=True)]
    # include the word that exposes truncation-edge junk when norms are
    # taken without guard restriction
    xs = [
        NcExpr.word(letters[3], letters[4], letters[5]),
        NcExpr.word(letters[0]),
        NcExpr.word(letters[2], letters[1]),
    ]
    excess = norm_domination(xs, 48, 24, 12, Q)
    assert max(excess) < 1e-8


def test_matrix_inequalities_one_by_one():
    entries = [[NcExpr.word(POL.gen("z22"))]]
    lhs, mid, rhs = holo_matrix_inequalities(entries, 48, 24, 12, Q, grid=8)
    assert lhs <= mid + 1e-6
    assert mid <= rhs + 1e-6
    assert rhs == pytest.approx(1.0, abs=1e-8)


def test_matrix_inequalities_reject_starred_entries():
    with pytest.raises(ValueError):
        holo_matrix_inequalities(
            [[NcExpr.word(POL.gen("z22", star=True))]], 16, 16, 8, Q
        )


def test_dilation_report_small():
    res = dilation_report(8, Q, m=4)
    assert max(res.values()) < 1e-12


def test_phase_collapse_identity():
    assert all(phase_collapse_check().values())
    assert phase_collapse_residual(0.8, 2.1, 24, Q) < 1e-12


def test_determinant_unitarity_and_value():
    for phi in (0.0, 1.1):
        out = det_unitarity_check(phi, 48, Q)
        assert out["det*det"] < 1e-10
        assert out["detdet*"] < 1e-10
        assert out["scalar-residual"] < 1e-10
        want = -np.exp(2j * phi) / Q
        assert out["scalar"] == pytest.approx(want, abs=1e-12)


def test_involutions_through_the_determinant():
    res = regular_involution_check(0.6, 48, Q)
    assert max(res.values()) < 1e-10


def test_determinant_normal_form_has_two_terms():
    d = det_q()
    assert len(d.terms) == 2
    assert d.degree() == 2
