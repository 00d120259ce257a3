"""Acceptance suite: ten criteria, each printing one PASS/FAIL line.

All criteria run at the default configuration (q = 0.5, truncations
64/32/16 by leg count, 128-point phase grid) and the stated tolerances.
"""

import dataclasses

import numpy as np

from qsymball import hopf
from qsymball.boundary import (
    ANNIHILATING,
    NON_ANNIHILATING,
    annihilation_residual,
    det_unitarity_check,
    dilation_report,
    holo_matrix_inequalities,
    phase_collapse_check,
    phase_collapse_residual,
    norm_domination,
    regular_involution_check,
    shilov_norm,
    vacuum_witness,
    _truncation_for,
)
from qsymball.cli import _catalog_for_relations, _grid
from qsymball.fock import (
    Coeff,
    FAMILIES,
    Phase,
    RepSpec,
    character_substitute,
    coherent_check,
    cstar_identity_residual,
    generator_images,
    moment_match,
    relation_residual,
)
from qsymball.hopf import (
    TensorExpr,
    act,
    coaction_eval,
    coassociativity_check,
    pairing,
    pairing_bialgebra_check,
    verify_coaction_hom,
)
from qsymball.ncalg import (
    NcExpr,
    local_confluence_check,
    nc_equal,
    preset,
)
from qsymball.report import RunConfig
from qsymball.scalars import LaurentScalar

Q, N1, N2, N3, GRID, SEED = 0.5, 64, 32, 16, 128, 1

POL = preset("pol-matsym-q")
SU2 = preset("c-su2-q")
UQ = preset("uq-sl2")

_s = LaurentScalar.s_pow
_q = LaurentScalar.q_pow


def _verdict(num, label, ok):
    print(f"criterion {num:2d} ({label}): {'PASS' if ok else 'FAIL'}",
          flush=True)
    assert ok, f"criterion {num} ({label}) failed"


def _xi(*names):
    return NcExpr.word(*(UQ.gen(n) for n in names))


def _uq_words(max_deg):
    words, frontier = [], [()]
    for _ in range(max_deg):
        frontier = [w + (g,) for w in frontier
                    for g in ("E", "F", "K", "Kinv")]
        words += frontier
    return [_xi(*w) for w in words]


def _letters():
    out = []
    for n in ("z11", "z21", "z22"):
        out += [POL.gen(n), POL.gen(n, star=True)]
    return out


def test_criterion_1_relations():
    ok = True
    for family, P, specs, N in _catalog_for_relations(RunConfig()):
        worst = max(relation_residual(P, s, N, Q) for s in specs)
        ok = ok and worst <= 1e-10
    _verdict(1, "catalog relation residuals", ok)


def test_criterion_2_hopf_layer():
    values = (
        pairing(NcExpr.word(SU2.gen("t12")), _xi("E")) == _s(-1)
        and pairing(NcExpr.word(SU2.gen("t21")), _xi("F")) == _s(1)
        and pairing(NcExpr.word(SU2.gen("t11")), _xi("K")) == _q(1)
        and pairing(NcExpr.word(SU2.gen("t22")), _xi("K")) == _q(-1)
    )
    laws = all(coassociativity_check(w) for w in _uq_words(3))
    rng = np.random.default_rng(SEED)
    xis = _uq_words(3)
    tg = [SU2.gen(n) for n in ("t11", "t12", "t21", "t22")]
    bialg = all(
        pairing_bialgebra_check(
            xis[int(rng.integers(len(xis)))],
            NcExpr.word(*(tg[int(rng.integers(4))]
                          for _ in range(int(rng.integers(1, 3))))),
            NcExpr.word(*(tg[int(rng.integers(4))]
                          for _ in range(int(rng.integers(1, 3))))),
        )
        for _ in range(100)
    )
    z = lambda n: NcExpr.word(POL.gen(n))
    plus = _q(1) + _q(-1)
    table = (
        act(_xi("E"), z("z11")).is_zero()
        and nc_equal(act(_xi("E"), z("z21")), z("z11").scale(_s(-1)), POL)
        and nc_equal(act(_xi("E"), z("z22")),
                     z("z21").scale(_s(-1) * plus), POL)
        and nc_equal(act(_xi("F"), z("z11")),
                     z("z21").scale(_s(1) * plus), POL)
        and nc_equal(act(_xi("F"), z("z21")), z("z22").scale(_s(1)), POL)
        and act(_xi("F"), z("z22")).is_zero()
        and nc_equal(act(_xi("K"), z("z11")), z("z11").scale(_q(2)), POL)
        and nc_equal(act(_xi("K"), z("z21")), z("z21"), POL)
        and nc_equal(act(_xi("K"), z("z22")), z("z22").scale(_q(-2)), POL)
    )
    respects = all(
        nc_equal(act(_xi(n), lhs), act(_xi(n), rhs), POL)
        for lhs, rhs in POL.relations for n in ("E", "F", "K")
    )
    _verdict(2, "Hopf pairing/laws/action", values and laws and bialg
             and table and respects)


def test_criterion_3_coaction():
    hom = verify_coaction_hom() == []
    dual = all(
        nc_equal(coaction_eval(NcExpr.word(POL.gen(g)), xi),
                 act(xi, NcExpr.word(POL.gen(g))), POL)
        for g in ("z11", "z21", "z22") for xi in _uq_words(3)
    )
    _verdict(3, "coaction homomorphism/duality", hom and dual)


def test_criterion_4_wick_equivalence():
    ok = True
    for phi in (0.0, np.pi / 3, np.pi):
        a, b = RepSpec("tau", (phi,)), RepSpec("Fphi-coact", (phi,))
        ok = ok and max(coherent_check(a, N2, Q).values()) <= 1e-12
        ok = ok and max(coherent_check(b, N2, Q).values()) <= 1e-12
        ok = ok and moment_match(a, b, 4, N2, Q) <= 1e-10
    _verdict(4, "coherent vectors and moments", ok)


def test_criterion_5_character_chain_and_domination():
    phi = Phase.sym("phi")
    fock_t, tau_t = generator_images("fock"), generator_images("tau")
    omega_t, nu_t = generator_images("omega"), generator_images("nu")
    coact_t = generator_images("Fphi-coact")
    theta_t = generator_images("theta")
    nu2_t = generator_images("nu", (Coeff.phase(Phase.sym("phi2")),))
    chains = all(
        character_substitute(fock_t[g], 2, phi) == tau_t[g]
        and character_substitute(tau_t[g], 1, phi) == omega_t[g]
        and character_substitute(coact_t[g], 1, Phase.one()) == nu_t[g]
        and character_substitute(nu2_t[g], 0, Phase.sym("phi1"))
        == theta_t[g]
        for g in ("z11", "z21", "z22")
    )
    series = all(
        max(cstar_identity_residual(n, N1, 40, Q).values()) <= 1e-12
        for n in (2, 4)
    )
    rng = np.random.default_rng(SEED)
    letters = _letters()
    samples = [
        NcExpr.word(*(letters[int(rng.integers(6))]
                      for _ in range(int(rng.integers(1, 4)))))
        for _ in range(50)
    ]
    excess = norm_domination(samples, N1, N2, N3, Q)
    _verdict(5, "character chain + norm domination",
             chains and series and max(excess) <= 1e-8)


def test_criterion_6_boundary_ideal():
    letters = _letters()
    words = [NcExpr.word(a) for a in letters]
    words += [NcExpr.word(a, b) for a in letters for b in letters]
    ann = True
    for family in ANNIHILATING:
        arity = FAMILIES[family][2]
        spec = RepSpec(family, tuple(0.4 * (k + 1) for k in range(arity)))
        N = _truncation_for(spec, N1, N2, N3)
        res = annihilation_residual(spec, N, Q, words=words)
        ann = ann and max(res.values()) <= 1e-10
    wit = all(
        vacuum_witness(
            RepSpec(f, (0.0,) * FAMILIES[f][2]),
            _truncation_for(RepSpec(f, (0.0,) * FAMILIES[f][2]),
                            N1, N2, N3), Q,
        ) >= Q**4 / 2
        for f in NON_ANNIHILATING
    )
    dil = max(dilation_report(N3, Q, m=4).values()) <= 1e-12
    rng = np.random.default_rng(SEED)
    ineq = True
    for n, count in ((1, 12), (2, 8)):
        for _ in range(count):
            entries = [
                [NcExpr.word(*(letters[2 * int(rng.integers(3))]
                               for _ in range(int(rng.integers(1, 4)))))
                 for _ in range(n)]
                for _ in range(n)
            ]
            lhs, mid, rhs = holo_matrix_inequalities(
                entries, N1, N2, N3, Q, grid=16
            )
            ineq = ineq and lhs <= mid + 1e-6 and mid <= rhs + 1e-6
    _verdict(6, "ideal classification/dilation/inequalities",
             ann and wit and dil and ineq)


def test_criterion_7_maximum_modulus():
    slack = 10.0 / GRID**2
    ok = all(
        2 - slack <= shilov_norm(theta, GRID, N1, qv) <= 2 + 1e-8
        for qv in (0.3, 0.5, 0.7)
        for theta in (0.0, np.pi / 2, np.pi, 3 * np.pi / 2)
    )
    _verdict(7, "maximum modulus = 2", ok)


def test_criterion_8_phase_collapse():
    symbolic = all(phase_collapse_check().values())
    rng = np.random.default_rng(SEED)
    numeric = all(
        phase_collapse_residual(
            float(rng.uniform(0, 2 * np.pi)),
            float(rng.uniform(0, 2 * np.pi)), N2, Q,
        ) <= 1e-10
        for _ in range(16)
    )
    _verdict(8, "two-phase character identity", symbolic and numeric)


def test_criterion_9_regular_functions():
    ok = True
    for phi in _grid(8):
        du = det_unitarity_check(phi, N1, Q)
        ok = ok and max(du["det*det"], du["detdet*"],
                        du["scalar-residual"]) <= 1e-10
        ok = ok and max(regular_involution_check(phi, N1, Q).values()) \
            <= 1e-10
    _verdict(9, "determinant unitarity and involutions", ok)


def test_criterion_10_robustness_and_mutations():
    confluent = all(
        local_confluence_check(preset(n), max_deg=3) == []
        for n in ("pol-matsym-q", "c-su2-q", "uq-sl2", "pol-c-q")
    )
    # mutation 1: drop the z21* z21 rewrite rule; the relation check
    # must flag the presentation
    key = (POL.gen("z21", star=True), POL.gen("z21"))
    mutant = dataclasses.replace(
        POL, name="pol-matsym-q-mutant",
        rules={k: v for k, v in POL.rules.items() if k != key},
    )
    rule_detected = any(
        not nc_equal(lhs, rhs, mutant) for lhs, rhs in POL.relations
    )
    # mutation 2: drop one summand from the coaction of z21; the
    # homomorphism check must report failures
    table = dict(hopf._COACTION_GENS)
    base = table[(2, 1)]
    drop = next(iter(sorted(base.terms, key=repr)))
    table[(2, 1)] = TensorExpr(
        POL, SU2, {k: c for k, c in base.terms.items() if k != drop}
    )
    coaction_detected = verify_coaction_hom(table=table) != []
    _verdict(10, "confluence + mutation detection",
             confluent and rule_detected and coaction_detected)
