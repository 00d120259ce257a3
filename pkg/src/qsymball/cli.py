"""Verification harness.

Each suite turns one verified statement (a presentation, a Hopf law, a
representation identity, a boundary property) into named checks with a
measured value and a threshold.  Runs are deterministic given the seed;
word sampling draws uniform degrees 1-3 with uniformly chosen (possibly
starred) generator letters.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import boundary, fock, hopf
from .boundary import (
    ANNIHILATING,
    NON_ANNIHILATING,
    annihilation_residual,
    det_q,
    det_unitarity_check,
    dilation_report,
    holo_matrix_inequalities,
    phase_collapse_check,
    phase_collapse_residual,
    norm_domination,
    regular_involution_check,
    shilov_norm,
    vacuum_witness,
)
from .fock import (
    Coeff,
    Phase,
    RepSpec,
    character_substitute,
    coherent_check,
    cstar_identity_residual,
    generator_images,
    moment_match,
    relation_residual,
)
from .ncalg import NcExpr, local_confluence_check, nc_equal, nc_star, preset
from .report import SUITES, CheckEntry, Report, RunConfig
from .scalars import LaurentScalar

_POL = preset("pol-matsym-q")
_SU2 = preset("c-su2-q")
_UQ = preset("uq-sl2")
_PRESETS = ("pol-matsym-q", "c-su2-q", "uq-sl2", "pol-c-q")

_s = LaurentScalar.s_pow
_q = LaurentScalar.q_pow


def _grid(k):
    return [float(p) for p in np.arange(k) * (2 * np.pi / k)]


def _letters():
    out = []
    for name in ("z11", "z21", "z22"):
        out.append(_POL.gen(name))
        out.append(_POL.gen(name, star=True))
    return out


def _sample_word(rng, letters, max_deg=3, star=True):
    pool = letters if star else letters[::2]
    d = int(rng.integers(1, max_deg + 1))
    return NcExpr.word(*(pool[int(rng.integers(len(pool)))] for _ in range(d)))


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _catalog_for_relations(cfg):
    """(label, presentation, [RepSpec, ...], truncation) per family, on
    an 8-point phase grid (paired diagonally for two-phase families)."""
    g8 = _grid(8)
    pairs = list(zip(g8, g8[3:] + g8[:3]))
    per_family = {
        "fock": [RepSpec("fock", ())],
        "tau": [RepSpec("tau", (p,)) for p in g8],
        "omega": [RepSpec("omega", (p,)) for p in g8],
        "nu": [RepSpec("nu", (p,)) for p in g8],
        "Fphi-coact": [RepSpec("Fphi-coact", (p,)) for p in g8],
        "theta": [RepSpec("theta", ab) for ab in pairs],
        "chi-coact": [RepSpec("chi-coact", ab) for ab in pairs],
        "pi0": [RepSpec("pi0", (p,)) for p in g8],
        "rho-fock": [RepSpec("rho-fock", ())],
        "rho-phase": [RepSpec("rho-phase", (p,)) for p in g8],
    }
    out = []
    for family, specs in per_family.items():
        P = preset(specs[0].algebra)
        N = boundary._truncation_for(specs[0], cfg.n1, cfg.n2, cfg.n3)
        out.append((family, P, specs, N))
    return out


def suite_relations(report, cfg, rng):
    for name in _PRESETS:
        P = preset(name)
        bad = sum(
            0 if nc_equal(lhs, rhs, P) else 1 for lhs, rhs in P.relations
        )
        report.add(f"relations/normal-form/{name}", "defining-relations",
                   bad, 0, preset=name)
    for family, P, specs, N in _catalog_for_relations(cfg):
        worst = max(relation_residual(P, s, N, cfg.q) for s in specs)
        report.add(f"relations/operators/{family}", "catalog-representation",
                   worst, 1e-10, N=N, phases=len(specs))


_PAIRING_VALUES = (
    ("t12", "E", _s(-1)),
    ("t21", "F", _s(1)),
    ("t11", "K", _q(1)),
    ("t22", "K", _q(-1)),
)


def _uq_words(max_deg):
    letters = [_UQ.gen(n) for n in ("E", "F", "K", "Kinv")]
    words = []
    frontier = [()]
    for _ in range(max_deg):
        frontier = [w + (g,) for w in frontier for g in letters]
        words += frontier
    return [NcExpr.word(*w) for w in words]


def suite_hopf(report, cfg, rng):
    bad = 0
    for tname, xiname, want in _PAIRING_VALUES:
        got = hopf.pairing(
            NcExpr.word(_SU2.gen(tname)), NcExpr.word(_UQ.gen(xiname))
        )
        bad += 0 if got == want else 1
    report.add("hopf/pairing-values", "dual-pairing-on-generators", bad, 0)

    words = _uq_words(3)
    report.add("hopf/coassociativity", "coproduct-coassociative",
               sum(not hopf.coassociativity_check(w) for w in words), 0,
               words=len(words))
    report.add("hopf/counit-law", "counit-axiom",
               sum(not hopf.counit_law_check(w) for w in words), 0,
               words=len(words))
    report.add("hopf/antipode-law", "antipode-axiom",
               sum(not hopf.antipode_law_check(w) for w in words), 0,
               words=len(words))

    tgens = [_SU2.gen(n) for n in ("t11", "t12", "t21", "t22")]
    xis = _uq_words(2)
    bad = 0
    trials = 160
    for _ in range(trials):
        xi = xis[int(rng.integers(len(xis)))]
        a = NcExpr.word(*(tgens[int(rng.integers(4))]
                          for _ in range(int(rng.integers(1, 3)))))
        b = NcExpr.word(*(tgens[int(rng.integers(4))]
                          for _ in range(int(rng.integers(1, 3)))))
        bad += 0 if hopf.pairing_bialgebra_check(xi, a, b) else 1
    report.add("hopf/pairing-bialgebra", "pairing-respects-products",
               bad, 0, trials=trials)

    E, F, K = (NcExpr.word(_UQ.gen(n)) for n in ("E", "F", "K"))
    z = lambda n: NcExpr.word(_POL.gen(n))
    expected = (
        (E, "z11", NcExpr.zero()),
        (E, "z21", z("z11").scale(_s(-1))),
        (E, "z22", z("z21").scale(_s(-1) * (_q(1) + _q(-1)))),
        (F, "z11", z("z21").scale(_s(1) * (_q(1) + _q(-1)))),
        (F, "z21", z("z22").scale(_s(1))),
        (F, "z22", NcExpr.zero()),
        (K, "z11", z("z11").scale(_q(2))),
        (K, "z21", z("z21")),
        (K, "z22", z("z22").scale(_q(-2))),
    )
    bad = sum(
        0 if nc_equal(hopf.act(xi, z(n)), want, _POL) else 1
        for xi, n, want in expected
    )
    report.add("hopf/action-table", "module-action-on-generators", bad, 0)

    bad = 0
    for lhs, rhs in _POL.relations:
        for xi in (E, F, K):
            if not nc_equal(hopf.act(xi, lhs), hopf.act(xi, rhs), _POL):
                bad += 1
    report.add("hopf/action-respects-relations", "module-algebra-property",
               bad, 0, relations=len(_POL.relations))


def suite_coaction(report, cfg, rng):
    failures = hopf.verify_coaction_hom()
    report.add("coaction/homomorphism", "coaction-multiplicative",
               len(failures), 0, pairs=144)
    xis = _uq_words(3)
    bad = 0
    for name in ("z11", "z21", "z22"):
        f = NcExpr.word(_POL.gen(name))
        for xi in xis:
            if not nc_equal(
                hopf.coaction_eval(f, xi), hopf.act(xi, f), _POL
            ):
                bad += 1
    report.add("coaction/pairs-to-action", "coaction-dualizes-action",
               bad, 0, words=len(xis) * 3)


def suite_wick(report, cfg, rng):
    for phi in (0.0, np.pi / 3, np.pi):
        for family in ("tau", "Fphi-coact"):
            cc = coherent_check(RepSpec(family, (float(phi),)), cfg.n2, cfg.q)
            report.add(f"wick/coherent/{family}", "adjoints-on-vacuum",
                       max(cc.values()), 1e-12, phi=round(phi, 6))
        mm = moment_match(
            RepSpec("tau", (float(phi),)),
            RepSpec("Fphi-coact", (float(phi),)), 4, cfg.n2, cfg.q,
        )
        report.add("wick/moment-match", "vacuum-moments-agree",
                   mm, 1e-10, phi=round(phi, 6), max_deg=4)


def _chain_mismatches(src_images, leg, phase, dst_images):
    return sum(
        0 if character_substitute(src_images[g], leg, phase) == dst_images[g]
        else 1
        for g in ("z11", "z21", "z22")
    )


def suite_characters(report, cfg, rng):
    phi = Phase.sym("phi")
    chains = (
        ("fock-to-tau",
         generator_images("fock"), 2, phi, generator_images("tau")),
        ("tau-to-omega",
         generator_images("tau"), 1, phi, generator_images("omega")),
        ("coact-to-nu",
         generator_images("Fphi-coact"), 1, Phase.one(),
         generator_images("nu")),
        ("nu-to-theta",
         generator_images("nu", (Coeff.phase(Phase.sym("phi2")),)), 0,
         Phase.sym("phi1"), generator_images("theta")),
    )
    for name, src, leg, ph, dst in chains:
        report.add(f"characters/chain/{name}", "character-substitution",
                   _chain_mismatches(src, leg, ph, dst), 0)
    for n in (2, 4):
        res = cstar_identity_residual(n, cfg.n1, 40, cfg.q)
        report.add(f"characters/shift-series/C{n}", "diagonal-series",
                   max(res.values()), 1e-12, terms=40)


def suite_annihilators(report, cfg, rng):
    letters = _letters()
    words = [NcExpr.word(a) for a in letters]
    words += [NcExpr.word(a, b) for a in letters for b in letters]
    for family in ANNIHILATING:
        arity = fock.FAMILIES[family][2]
        specs = (
            [RepSpec(family, (p,)) for p in _grid(4)] if arity == 1
            else [RepSpec(family, (a, b))
                  for a, b in zip(_grid(4), _grid(4)[1:] + _grid(4)[:1])]
        )
        worst = 0.0
        for spec in specs:
            N = boundary._truncation_for(spec, cfg.n1, cfg.n2, cfg.n3)
            res = annihilation_residual(spec, N, cfg.q, words=words)
            worst = max(worst, max(res.values()))
        report.add(f"annihilators/residual/{family}", "ideal-annihilation",
                   worst, 1e-10, product_words=len(words))
    floor = cfg.q ** 4 / 2
    for family in NON_ANNIHILATING:
        arity = fock.FAMILIES[family][2]
        spec = RepSpec(family, (0.0,) * arity)
        N = boundary._truncation_for(spec, cfg.n1, cfg.n2, cfg.n3)
        wit = vacuum_witness(spec, N, cfg.q)
        report.add(f"annihilators/witness/{family}", "ideal-not-annihilated",
                   wit, floor, passed=wit >= floor)


def suite_shilov_norm(report, cfg, rng):
    slack = 10.0 / cfg.phi_grid ** 2
    for qv in sorted({0.3, 0.7, cfg.q}):
        for k, theta in enumerate(_grid(4)):
            val = shilov_norm(theta, cfg.phi_grid, cfg.n1, qv)
            ok = (2.0 - slack) <= val <= 2.0 + 1e-8
            report.add(f"shilov-norm/q={qv}/theta-{k}", "maximum-modulus-2",
                       abs(val - 2.0), slack, passed=ok,
                       theta=round(theta, 6))


def suite_dilation(report, cfg, rng):
    res = dilation_report(cfg.n3, cfg.q, m=4)
    for key, val in res.items():
        report.add(f"dilation/{key}", "finite-unitary-dilation",
                   val, 1e-12, m=4, N=cfg.n3)


def suite_inequalities(report, cfg, rng):
    letters = _letters()
    samples = [_sample_word(rng, letters) for _ in range(50)]
    excess = norm_domination(samples, cfg.n1, cfg.n2, cfg.n3, cfg.q)
    report.add("inequalities/norm-domination", "fock-norm-dominates",
               max(excess), cfg.tol, samples=len(samples))
    for n, count in ((1, 12), (2, 8)):
        worst = -np.inf
        for _ in range(count):
            entries = [
                [_sample_word(rng, letters, star=False) for _ in range(n)]
                for _ in range(n)
            ]
            lhs, mid, rhs = holo_matrix_inequalities(
                entries, cfg.n1, cfg.n2, cfg.n3, cfg.q, grid=16
            )
            worst = max(worst, lhs - mid, mid - rhs)
        report.add(f"inequalities/matrix-chain/n={n}",
                   "holomorphic-boundary-chain", worst, 1e-6, samples=count)


def suite_regular_functions(report, cfg, rng):
    ok = phase_collapse_check()
    report.add("regular-functions/phase-collapse", "two-phase-character",
               sum(not v for v in ok.values()), 0)
    worst = max(
        phase_collapse_residual(a, b, cfg.n2, cfg.q)
        for a, b in zip(_grid(4), _grid(4)[2:] + _grid(4)[:2])
    )
    report.add("regular-functions/phase-collapse-numeric",
               "two-phase-character", worst, 1e-10)
    unit = scalar = inv = 0.0
    for phi in _grid(8):
        du = det_unitarity_check(phi, cfg.n1, cfg.q)
        unit = max(unit, du["det*det"], du["detdet*"], du["scalar-residual"])
        scalar = max(
            scalar,
            abs(abs(du["scalar"]) ** 2 - cfg.q ** -2),
            abs(du["scalar"] + np.exp(2j * phi) / cfg.q),
        )
        ri = regular_involution_check(phi, cfg.n1, cfg.q)
        inv = max(inv, max(ri.values()))
    report.add("regular-functions/det-unitary", "determinant-unitarity",
               unit, 1e-10, phases=8)
    report.add("regular-functions/det-scalar", "determinant-character-value",
               scalar, 1e-10, phases=8)
    report.add("regular-functions/involutions", "star-via-determinant",
               inv, 1e-10, phases=8)


def suite_confluence(report, cfg, rng):
    for name in _PRESETS:
        violations = local_confluence_check(preset(name), max_deg=3)
        report.add(f"confluence/{name}", "rewriting-confluent",
                   len(violations), 0, max_deg=3)


_RUNNERS = {
    "relations": suite_relations,
    "hopf": suite_hopf,
    "coaction": suite_coaction,
    "wick": suite_wick,
    "characters": suite_characters,
    "annihilators": suite_annihilators,
    "shilov-norm": suite_shilov_norm,
    "dilation": suite_dilation,
    "inequalities": suite_inequalities,
    "regular-functions": suite_regular_functions,
    "confluence": suite_confluence,
}


def run(config: RunConfig) -> Report:
    """Execute the selected suites; internal errors (including rewrite
    iteration caps) surface as failed checks, not exceptions."""
    report = Report(config)
    t0 = time.perf_counter()
    for name in config.suites:
        rng = np.random.default_rng(config.seed)
        try:
            _RUNNERS[name](report, config, rng)
        except Exception as exc:  # noqa: BLE001 - must not crash the run
            report.add(f"{name}/error", "suite-execution",
                       float("inf"), 0, passed=False,
                       error=f"{type(exc).__name__}: {exc}")
    report.wall_time = time.perf_counter() - t0
    return report


def _parser():
    p = argparse.ArgumentParser(
        prog="qsymball",
        description="Run the verification suites for the quantum "
                    "symmetric-ball operator catalog.",
    )
    p.add_argument("--q", type=float, default=0.5,
                   help="deformation parameter in (0, 1)")
    p.add_argument("--n1", type=int, default=64,
                   help="truncation for 0/1-leg representations")
    p.add_argument("--n2", type=int, default=32,
                   help="truncation for 2-leg representations")
    p.add_argument("--n3", type=int, default=16,
                   help="truncation for 3-leg representations")
    p.add_argument("--phi-grid", type=int, default=128,
                   help="phase-grid resolution for norm suprema")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="tolerance for norm-domination excess")
    p.add_argument("--seed", type=int, default=1,
                   help="seed for sampled words")
    p.add_argument("--suite", action="append", choices=SUITES,
                   metavar="NAME",
                   help=f"suite to run (repeatable); default: all of "
                        f"{', '.join(SUITES)}")
    p.add_argument("--format", choices=("text", "structured"),
                   default="text", help="report format")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        config = RunConfig(
            q=args.q, n1=args.n1, n2=args.n2, n3=args.n3,
            phi_grid=args.phi_grid, tol=args.tol, seed=args.seed,
            suites=tuple(args.suite) if args.suite else SUITES,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = run(config)
    print(report.structured() if args.format == "structured"
          else report.text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
