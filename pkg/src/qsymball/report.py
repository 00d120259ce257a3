"""Run configuration and report containers for the verification
harness, with a stable machine-readable serialization."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

SUITES = (
    "relations",
    "hopf",
    "coaction",
    "wick",
    "characters",
    "annihilators",
    "shilov-norm",
    "dilation",
    "inequalities",
    "regular-functions",
    "confluence",
)


@dataclass(frozen=True)
class RunConfig:
    q: float = 0.5
    n1: int = 64
    n2: int = 32
    n3: int = 16
    phi_grid: int = 128
    tol: float = 1e-8
    seed: int = 1
    suites: tuple = SUITES

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise ValueError("q must lie in (0, 1)")
        if self.phi_grid < 4:
            raise ValueError("phase grid must be at least 4")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if min(self.n1, self.n2, self.n3) < 2:
            raise ValueError("truncations must be at least 2")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")


@dataclass(frozen=True)
class CheckEntry:
    name: str              # stable identifier, sorted on for output
    anchor: str            # which verified statement this certifies
    params: tuple          # ((key, value), ...) echo of parameters
    value: float           # measured residual / norm / flag
    tol: float             # comparison threshold (context-dependent)
    passed: bool

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.params)
        return (
            f"{status}  {self.name}  [{self.anchor}]"
            f"  value={self.value:.6g} tol={self.tol:g}"
            + (f"  ({params})" if params else "")
        )


@dataclass
class Report:
    config: RunConfig
    entries: list = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, name, anchor, value, tol, passed=None, **params):
        if passed is None:
            passed = bool(value <= tol)
        self.entries.append(CheckEntry(
            name=name, anchor=anchor,
            params=tuple(sorted((k, repr(v)) for k, v in params.items())),
            value=float(value), tol=float(tol), passed=bool(passed),
        ))

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    def sorted_entries(self):
        return sorted(self.entries, key=lambda e: (e.name, e.params))

    def text(self):
        lines = [e.line() for e in self.sorted_entries()]
        npass = sum(e.passed for e in self.entries)
        lines.append(
            f"{npass}/{len(self.entries)} checks passed"
            f" in {self.wall_time:.1f}s"
            f" (q={self.config.q}, seed={self.config.seed})"
        )
        return "\n".join(lines)

    def structured(self):
        return json.dumps({
            "schema": "qsymball-report/1",
            "config": asdict(self.config),
            "wall_time": self.wall_time,
            "passed": self.passed,
            "checks": [asdict(e) for e in self.sorted_entries()],
        }, indent=2, default=list)

    @staticmethod
    def from_structured(payload):
        data = json.loads(payload)
        cfgd = dict(data["config"])
        cfgd["suites"] = tuple(cfgd["suites"])
        report = Report(RunConfig(**cfgd), wall_time=data["wall_time"])
        for c in data["checks"]:
            report.entries.append(CheckEntry(
                name=c["name"], anchor=c["anchor"],
                params=tuple((k, v) for k, v in c["params"]),
                value=c["value"], tol=c["tol"], passed=c["passed"],
            ))
        return report
