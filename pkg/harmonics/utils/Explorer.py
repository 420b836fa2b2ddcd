#
#    Copyright (c) 2026 The Schatten Harmonics Authors.
#    All rights reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
#

##
#    @file
#       Randomized sharpness search: seeded restarts of an adaptive
#       Gaussian hill climb on a checker's oriented ratio, plus the probe
#       of the Boas-Koskela type conjecture
#
#           (sum_k ||B_k||_p^r)^{1/r} <= (int ||A_theta||_p^s)^{1/s}
#
#       for s <= p <= r and r/(r-1) <= s <= r. A violated probe is a
#       numerical counterexample candidate, never a proof.
#

from __future__ import annotations

import concurrent.futures
import logging
import math
import time
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from harmonics.Driver import HarmonicsDomainError, HarmonicsUsageError
from harmonics.utils.Fourier import OperatorField, fourier_coefficients
from harmonics.utils.Inequality import CheckSpec, run_check
from harmonics.utils.Operator import schatten_power
from harmonics.utils.Sampling import random_field

logger = logging.getLogger(__name__)

RATIO_TOLERANCE = 1e-7
SEARCH_TARGETS = ("pp", "pq", "qp", "alpha", "boas-koskela")

STEP_GROWTH = 1.5
STEP_SHRINK = 0.5
FAILURES_BEFORE_SHRINK = 12
MIN_STEP = 1e-10


@dataclass(frozen=True)
class SearchConfig:
    """
    A search target and its budget. trials counts ratio evaluations per
    restart; budget is wall-clock seconds over the whole search, None for
    no limit.
    """
    target: str
    group: object
    dim: int
    p: float
    seed: int
    trials: int = 1000
    restarts: int = 4
    perturbation_scale: float = 0.25
    budget: float = None
    r: float = None
    s: float = None
    workers: int = 1

    def __post_init__(self):
        if self.target not in SEARCH_TARGETS:
            raise HarmonicsUsageError("unknown search target %r, expected one of %s" %
                                      (self.target, ", ".join(SEARCH_TARGETS)))
        if self.trials < 1 or self.restarts < 1:
            raise HarmonicsUsageError("trials and restarts must be >= 1")
        if not self.perturbation_scale > 0:
            raise HarmonicsUsageError("perturbation scale must be > 0, got %r" % (self.perturbation_scale,))
        if self.dim < 1:
            raise HarmonicsUsageError("dimension must be >= 1, got %r" % (self.dim,))
        if self.seed is None:
            raise HarmonicsUsageError("a search needs an explicit seed")
        if self.budget is not None and not self.budget > 0:
            raise HarmonicsUsageError("budget must be positive seconds, got %r" % (self.budget,))

    def to_dict(self):
        return {
            "target": self.target, "group": str(self.group), "dim": self.dim, "p": self.p,
            "r": self.r, "s": self.s, "seed": self.seed, "trials": self.trials, "restarts": self.restarts,
            "perturbation_scale": self.perturbation_scale, "budget": self.budget,
        }


@dataclass
class SearchResult:
    best_ratio: float
    witness: OperatorField
    trace: list = dataclass_field(default_factory=list)
    violated: bool = False
    exhausted: bool = False
    restart: int = 0
    iteration: int = 0
    notes: list = dataclass_field(default_factory=list)

    def to_dict(self):
        return {
            "best_ratio": self.best_ratio, "violated": self.violated, "exhausted": self.exhausted,
            "restart": self.restart, "iteration": self.iteration, "trace": [list(t) for t in self.trace],
            "notes": list(self.notes), "input_digest": self.witness.digest(),
        }


def perturb(field, scale, rng):
    """Adds scale times an entrywise standard complex Gaussian."""
    if not scale > 0:
        raise HarmonicsDomainError("perturbation scale must be > 0, got %r" % (scale,))
    shape = field.values.shape
    noise = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    return OperatorField(field.group, field.values + scale * noise)


def _normalized(field):
    total = np.linalg.norm(field.values)
    if total == 0:
        return field
    return OperatorField(field.group, field.values / total)


def check_boas_koskela(p, r, s):
    """Validates (p, r, s) and returns the constraints met with equality."""
    if p is None or not p > 0:
        raise HarmonicsDomainError("p must be > 0, got %r" % (p,))
    if r is None or s is None:
        raise HarmonicsDomainError("the Boas-Koskela probe needs r and s")
    if not r > 1:
        raise HarmonicsDomainError("r must be > 1 so that r/(r-1) is finite, got %r" % (r,))
    floor = r / (r - 1.0)
    if not (s <= p <= r and floor <= s <= r):
        raise HarmonicsDomainError("(p, r, s) = (%g, %g, %g) violates s <= p <= r and r/(r-1) <= s <= r" % (p, r, s))
    endpoints = []
    for label, a, b in (("s=p", s, p), ("p=r", p, r), ("s=r/(r-1)", s, floor), ("s=r", s, r)):
        if math.isclose(a, b, rel_tol=1e-12):
            endpoints.append(label)
    return endpoints


def boas_koskela_ratio(field, p, r, s):
    """(sum_k ||B_k||_p^r)^{1/r} / (int ||A_theta||_p^s)^{1/s}."""
    B = np.array([schatten_power(M, p) for M in fourier_coefficients(field).values])
    A = np.array([schatten_power(M, p) for M in field.values])
    num = np.sum(B ** (r / p)) ** (1.0 / r)
    den = np.mean(A ** (s / p)) ** (1.0 / s)
    if den == 0:
        return 1.0 if num == 0 else math.inf
    return float(num / den)


def evaluate_ratio(cfg, field):
    """The oriented ratio the search maximizes; 1 means tight."""
    if cfg.target == "boas-koskela":
        return boas_koskela_ratio(field, cfg.p, cfg.r, cfg.s)
    return run_check(CheckSpec(cfg.target, cfg.p), field).ratio


def _restart(cfg, index, seed_seq, deadline):
    rng = np.random.default_rng(seed_seq)
    field = _normalized(random_field(rng, cfg.group, cfg.dim))
    best = evaluate_ratio(cfg, field)
    trace = [(0, best)]
    step = cfg.perturbation_scale
    failures = 0
    exhausted = False
    iteration = 0

    for iteration in range(1, cfg.trials):
        if deadline is not None and time.monotonic() > deadline:
            exhausted = True
            break
        candidate = _normalized(perturb(field, step, rng))
        ratio = evaluate_ratio(cfg, candidate)
        if ratio > best:
            field, best = candidate, ratio
            trace.append((iteration, best))
            step = min(step * STEP_GROWTH, cfg.perturbation_scale)
            failures = 0
        else:
            failures += 1
            if failures >= FAILURES_BEFORE_SHRINK:
                step *= STEP_SHRINK
                failures = 0
                if step < MIN_STEP:
                    step = cfg.perturbation_scale

    logger.debug("[%s] Explorer: restart %d best ratio %.12g after %d trials" %
                 (cfg.group, index, best, iteration + 1))
    last = trace[-1][0]
    return SearchResult(best_ratio=best, witness=field, trace=trace, exhausted=exhausted,
                        restart=index, iteration=last)


def _search(cfg, store=None):
    deadline = time.monotonic() + cfg.budget if cfg.budget is not None else None
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)

    def run(index):
        return _restart(cfg, index, children[index], deadline)

    if cfg.workers > 1 and cfg.restarts > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            results = list(executor.map(run, range(cfg.restarts)))
    else:
        results = [run(i) for i in range(cfg.restarts)]

    # max ratio, first restart on ties
    best = results[0]
    for result in results[1:]:
        if result.best_ratio > best.best_ratio:
            best = result
    best.exhausted = any(r.exhausted for r in results)
    best.violated = best.best_ratio > 1.0 + RATIO_TOLERANCE

    if best.exhausted:
        logger.warning("[%s] Explorer: budget of %gs exhausted, returning best so far %.12g" %
                       (cfg.group, cfg.budget, best.best_ratio))
    if best.violated:
        logger.warning("[%s] Explorer: %s ratio %.12g exceeds 1, counterexample candidate" %
                       (cfg.group, cfg.target, best.best_ratio))

    if store is not None:
        store.offer(cfg, best)
    return best


def sharpness_search(cfg, store=None):
    """
    Maximizes a proved checker's oriented ratio. For the theorems the
    ratio stays <= 1 + 1e-7; reaching 1 exhibits sharpness numerically.
    """
    if cfg.target == "boas-koskela":
        raise HarmonicsUsageError("use boas_koskela_probe for the Boas-Koskela target")
    if cfg.p is None:
        raise HarmonicsUsageError("target %s needs p" % (cfg.target))
    run_check(CheckSpec(cfg.target, cfg.p), OperatorField.constant(cfg.group, np.eye(cfg.dim)))
    return _search(cfg, store)


def boas_koskela_probe(cfg, store=None):
    if cfg.target != "boas-koskela":
        raise HarmonicsUsageError("boas_koskela_probe needs the boas-koskela target, got %r" % (cfg.target))
    endpoints = check_boas_koskela(cfg.p, cfg.r, cfg.s)
    result = _search(cfg, store)
    if endpoints:
        result.notes.append("closed endpoints: " + ", ".join(endpoints))
    return result
