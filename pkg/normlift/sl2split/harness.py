#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 The normlift Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# SPDX-License-Identifier: Apache-2.0
#
"""
Counterexample search for the split conjecture on SL2(F_p): every G-transfer system should decompose into a valid
split transfer system that lifts back to it.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from normlift.sl2split.frame import build_frame
from normlift.sl2split.split import decompose, is_split_transfer_system, lift_split
from normlift.transfer.carrier import get_carrier
from normlift.transfer.closure import get_closure_engine
from normlift.transfer.relation import GTransferSystem
from normlift.utils.file_utils import validate_json
from normlift.utils.parallel import parallel_map
from normlift.utils.settings import setting

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleVerdict:
    index: int
    label: str
    seed_atoms: Tuple[int, ...]
    seed_arrows: Tuple[Tuple[int, int], ...]
    num_arrows: int
    valid: bool
    axiom: Optional[str] = None
    roundtrip: Optional[bool] = None
    disagreement: Optional[Tuple[int, int]] = None

    @property
    def passed(self):
        return self.valid and bool(self.roundtrip)

    def certificate(self):
        """ Enough to rebuild the failing system: its seed arrows and the first pair where the checks disagree """
        return {"sample": self.index, "label": self.label, "seed_arrows": [list(a) for a in self.seed_arrows],
                "axiom": self.axiom, "first_disagreement": list(self.disagreement) if self.disagreement else None}

    def to_json(self):
        return {"sample": self.index, "label": self.label, "seed_atoms": list(self.seed_atoms),
                "num_arrows": self.num_arrows, "valid": self.valid, "roundtrip": self.roundtrip,
                "passed": self.passed}


@dataclass
class ConjectureReport:
    p: int
    seed: int
    samples: int
    frame: dict
    verdicts: List[SampleVerdict] = field(default_factory=list)

    @property
    def passed(self):
        return sum(v.passed for v in self.verdicts)

    @property
    def failed(self):
        return len(self.verdicts) - self.passed

    @property
    def counterexamples(self):
        return [v.certificate() for v in self.verdicts if not v.passed]

    def table(self):
        return "p, systems, passed, failed\n{}, {}, {}, {}".format(self.p, len(self.verdicts), self.passed,
                                                                   self.failed)

    def to_json(self):
        data = {"p": self.p, "seed": self.seed, "samples": self.samples, "frame": self.frame,
                "checked": len(self.verdicts), "passed": self.passed, "failed": self.failed,
                "verdicts": [v.to_json() for v in self.verdicts], "counterexamples": self.counterexamples}
        return validate_json(data, "conjecture_report")


def sample_atoms(num_atoms, index, seed, max_orbits):
    """
    Seed atoms of random sample number index: k uniform in 1..max_orbits, then k distinct atoms. The generator is
    seeded with (seed, index), so each sample can be rebuilt on its own.
    """
    rng = np.random.default_rng([seed, index])
    k = min(int(rng.integers(1, max_orbits + 1)), num_atoms)
    return tuple(sorted(int(a) for a in rng.choice(num_atoms, size=k, replace=False)))


def sample_plan(num_atoms, samples, seed, max_orbits, exhaustive_singles=True):
    """ (label, seed atoms): the reflexive and full systems, optionally every single orbit, then random samples """
    plan = [("reflexive", ()), ("full", tuple(range(num_atoms)))]
    if exhaustive_singles:
        plan.extend(("single:{}".format(a), (a,)) for a in range(num_atoms))
    if num_atoms:
        plan.extend(("random:{}".format(i), sample_atoms(num_atoms, i, seed, max_orbits)) for i in range(samples))
    return plan


def _check_sample(frame, item):
    index, label, atoms = item
    L = frame.lattice
    carrier = get_carrier(L)
    selected = np.zeros(carrier.num_atoms, dtype=bool)
    selected[list(atoms)] = True
    Rg = GTransferSystem(L, carrier.pairs_from_atoms(get_closure_engine(L).close(selected)))
    arrows = tuple(tuple(int(x) for x in carrier.atom_reps[a]) for a in atoms)

    triple = decompose(frame, Rg)
    result = is_split_transfer_system(frame, triple)
    if not result:
        verdict = SampleVerdict(index, label, tuple(atoms), arrows, Rg.num_arrows, False, result.axiom,
                                disagreement=result.witness[:2] if result.witness else None)
    else:
        lifted = lift_split(frame, triple, validate=False)
        diff = lifted.pairs != Rg.pairs
        first = tuple(int(x) for x in np.argwhere(diff)[0]) if diff.any() else None
        verdict = SampleVerdict(index, label, tuple(atoms), arrows, Rg.num_arrows, True, roundtrip=first is None,
                                disagreement=first)
    logger.debug("Sample %d (%s): %d arrows, passed: %s", index, label, Rg.num_arrows, verdict.passed)
    return verdict


def conjecture_check(p, samples=None, seed=None, max_orbits=None, exhaustive_singles=True, extended=False,
                     threads=1, progress=False):
    """
    Checks the split conjecture on G-transfer systems of SL2(F_p) generated by orbits of arrows. Every system must
    decompose into a valid split transfer system whose lift is the system itself. Failures are reported with a
    certificate rather than raised.

    :param p: Prime accepted by build_frame
    :param samples: Number of random samples (harness.samples by default)
    :param seed: Random seed (harness.seed by default)
    :param max_orbits: Largest number of seed orbits per random sample (harness.max_orbits by default)
    :param exhaustive_singles: Also check the closure of every single orbit
    :param extended: Admit the extended primes
    :param threads: Worker processes for the samples
    :param progress: Show progress bars
    :return: ConjectureReport
    :raises BadPrime: if p is not supported
    """
    samples = setting("harness", "samples") if samples is None else samples
    seed = setting("harness", "seed") if seed is None else seed
    max_orbits = setting("harness", "max_orbits") if max_orbits is None else max_orbits
    if samples < 0 or max_orbits < 1:
        raise ValueError("samples must be >= 0 and max_orbits >= 1, got {} and {}".format(samples, max_orbits))

    frame = build_frame(p, extended=extended, progress=progress)
    carrier = get_carrier(frame.lattice)
    plan = sample_plan(carrier.num_atoms, samples, seed, max_orbits, exhaustive_singles)
    items = [(k, label, atoms) for k, (label, atoms) in enumerate(plan)]
    verdicts = parallel_map(_check_sample, items, context=frame, threads=threads, progress=progress,
                            desc="SL2({}) samples".format(p), chunksize=4)

    report = ConjectureReport(p=frame.p, seed=seed, samples=samples, frame=frame.to_json(), verdicts=verdicts)
    logger.info("Split conjecture for SL2(%d): %d of %d systems pass", p, report.passed, len(verdicts))
    if report.failed:
        logger.warning("Found %d counterexamples to the split conjecture for SL2(%d)", report.failed, p)
    return report
