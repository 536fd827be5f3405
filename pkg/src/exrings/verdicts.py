"""Verdict records produced by the theorem checkers.

A verdict is a deterministic summary of one checker run: how many cases
were examined, how many failed, and a few human-readable witnesses or
counterexamples.  Canonical JSON is byte-stable for a fixed (theorem,
ring, degree, samples, seed): the wall-clock field is zeroed there and
reported only in the text rendering, and every case draws its randomness
from its own string-seeded generator so ordering and platform do not leak
into the output.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

MODE_EXHAUSTIVE = "ProvedExhaustive"
MODE_WINDOW = "VerifiedInWindow"
MODE_RANDOM = "Randomized"

_KEPT = 8  # witnesses / counterexamples retained per verdict


def case_rng(seed, theorem, ring, index):
    """Independent generator for one case; string seeding is platform-stable."""
    return random.Random(f"{seed}:{theorem}:{ring}:{index}")


@dataclass(frozen=True)
class RunConfig:
    ring: str
    degree: int = 8
    samples: int = 1000
    seed: int = 42

    def as_dict(self):
        return {
            "ring": self.ring,
            "degree": self.degree,
            "samples": self.samples,
            "seed": self.seed,
        }

    def rng(self, theorem, index):
        return case_rng(self.seed, theorem, self.ring, index)


@dataclass
class Verdict:
    theorem: str
    mode: str
    cases_total: int
    cases_failed: int
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    elapsed_ms: int = 0
    config: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.cases_failed == 0

    def to_dict(self):
        # elapsed_ms is wall time and would break byte-level determinism,
        # so the canonical form pins it to zero
        return {
            "theorem": self.theorem,
            "mode": self.mode,
            "cases_total": self.cases_total,
            "cases_failed": self.cases_failed,
            "witnesses": list(self.witnesses),
            "counterexamples": list(self.counterexamples),
            "elapsed_ms": 0,
            "config": dict(self.config),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def text(self):
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"[{status}] {self.theorem} ({self.mode}) "
            f"cases={self.cases_total} failed={self.cases_failed} "
            f"elapsed={self.elapsed_ms}ms"
        )
        parts = [line]
        for w in self.witnesses:
            parts.append(f"    witness: {w}")
        for c in self.counterexamples:
            parts.append(f"    counterexample: {c}")
        return "\n".join(parts)


class Recorder:
    """Accumulates cases for one checker run and freezes them into a Verdict."""

    def __init__(self, theorem, mode, config):
        self.theorem = theorem
        self.mode = mode
        self.config = config
        self.total = 0
        self.failed = 0
        self.witnesses = []
        self.counterexamples = []

    def ok(self, witness=None):
        self.total += 1
        if witness is not None and len(self.witnesses) < _KEPT:
            self.witnesses.append(str(witness))

    def fail(self, counterexample):
        self.total += 1
        self.failed += 1
        if len(self.counterexamples) < _KEPT:
            self.counterexamples.append(str(counterexample))

    def case(self, passed, witness=None, counterexample=None):
        if passed:
            self.ok(witness)
        else:
            self.fail(counterexample if counterexample is not None else witness)

    def bulk(self, total, failed=0):
        """Fold in exhaustively scanned cases without per-case bookkeeping."""
        self.total += total
        self.failed += failed

    def verdict(self, elapsed_ms=0):
        return Verdict(
            theorem=self.theorem,
            mode=self.mode,
            cases_total=self.total,
            cases_failed=self.failed,
            witnesses=self.witnesses,
            counterexamples=self.counterexamples,
            elapsed_ms=elapsed_ms,
            config=self.config.as_dict(),
        )


def render_report(verdicts, fmt):
    if fmt == "json":
        return json.dumps([v.to_dict() for v in verdicts], sort_keys=True, indent=2)
    return "\n".join(v.text() for v in verdicts)
