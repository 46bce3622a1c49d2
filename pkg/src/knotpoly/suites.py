"""Seeded randomized verification suites behind ``knotpoly verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .braidword import LCG, BraidWord, conjugate, random_braid, stabilize
from .invariants import (
    closed_form_check,
    interpolation_decompose,
    omega_closed,
    omega_open,
    skein_identities,
)
from .oracles import alexander_oracle, jones_oracle
from .polyring import OneVarPoly

SUITES = ("markov", "skein", "interpolation")


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {self.passed}/{self.trials} passed [{status}]"


def _draw(rng: LCG, nmin: int, nmax: int, lenmax: int) -> BraidWord:
    n = nmin + rng.below(max(nmax - nmin, 0) + 1)
    return random_braid(n, rng.below(lenmax + 1), rng)


def _markov_trial(rng: LCG, nmax: int, lenmax: int) -> str | None:
    b = _draw(rng, 1, nmax, lenmax)
    g = random_braid(b.n, rng.below(lenmax + 1), rng)
    sign = 1 if rng.below(2) == 0 else -1
    ref = (omega_closed(b), omega_open(b))
    for label, moved in (("conjugate", conjugate(b, g)), ("stabilize", stabilize(b, sign))):
        if (omega_closed(moved), omega_open(moved)) != ref:
            return f"{label}: {b} -> {moved}"
    return None


_HALF = OneVarPoly({1: 1, -1: -1})  # x^(1/2) - x^(-1/2)


def _skein_trial(rng: LCG, nmax: int, lenmax: int) -> str | None:
    b = _draw(rng, 2, max(nmax, 2), lenmax)
    i = 1 + rng.below(b.n - 1)
    jones_ok, alex_ok = skein_identities(b, i)
    if not jones_ok:
        return f"engine Jones skein at sigma_{i}: {b}"
    if not alex_ok:
        return f"engine Alexander skein at sigma_{i}: {b}"
    plus = BraidWord(b.n, (i,) + b.word)
    minus = BraidWord(b.n, (-i,) + b.word)
    jp, jm, j0 = jones_oracle(plus), jones_oracle(minus), jones_oracle(b)
    if jp.shift(2) - jm.shift(-2) != _HALF * j0:
        return f"oracle Jones skein at sigma_{i}: {b}"
    ap, am, a0 = alexander_oracle(plus), alexander_oracle(minus), alexander_oracle(b)
    if ap - am != -_HALF * a0:
        return f"oracle Alexander skein at sigma_{i}: {b}"
    return None


def _interpolation_trial(rng: LCG, nmax: int, lenmax: int) -> str | None:
    b = _draw(rng, 1, nmax, lenmax)
    split = interpolation_decompose(omega_open(b))
    if not split.residual_ok:
        return f"{b}: {split.detail}"
    if not closed_form_check(b):
        return f"{b}: closed form mismatch"
    return None


_TRIALS: dict[str, Callable[[LCG, int, int], str | None]] = {
    "markov": _markov_trial,
    "skein": _skein_trial,
    "interpolation": _interpolation_trial,
}


def run_suite(name: str, nmax: int, lenmax: int, trials: int, seed: int) -> SuiteResult:
    if name not in _TRIALS:
        raise ValueError(f"unknown suite {name!r}")
    if nmax < 1 or lenmax < 0 or trials < 0:
        raise ValueError("need nmax >= 1, lenmax >= 0, trials >= 0")
    # each suite gets its own stream so results don't depend on which others ran
    rng = LCG(seed * 1000003 + SUITES.index(name))
    result = SuiteResult(name)
    trial = _TRIALS[name]
    for _ in range(trials):
        result.trials += 1
        failure = trial(rng, nmax, lenmax)
        if failure is None:
            result.passed += 1
        else:
            result.failures.append(failure)
    return result
