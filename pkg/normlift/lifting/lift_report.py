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

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from normlift.lattice.class_poset import quotient_poset
from normlift.lifting.galois import lift_witness
from normlift.transfer.enumeration import enumerate_cat_transfer_systems
from normlift.transfer.relation import Relation
from normlift.utils.file_utils import validate_json
from normlift.utils.parallel import parallel_map
from normlift.utils.types import EnumerationStrategy

logger = logging.getLogger(__name__)


@dataclass
class LiftReport:
    """
    Liftability of every categorical transfer system on Sub(G)/G. verdicts follow the canonical enumeration order;
    witnesses maps the position of each non-liftable system to its least failing class arrow.
    """
    poset_size: int
    total_cat: int
    liftable: int
    verdicts: List[bool] = field(default_factory=list)
    witnesses: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    systems: List[Relation] = field(default_factory=list, repr=False)

    def table(self):
        """ Fixed format summary: header line plus one row """
        return "poset_size, total, liftable\n{}, {}, {}".format(self.poset_size, self.total_cat, self.liftable)

    def to_json(self):
        data = {
            "poset_size": self.poset_size,
            "total": self.total_cat,
            "liftable": self.liftable,
            "systems": [{"arrows": [list(a) for a in system.arrows()],
                         "liftable": verdict,
                         "witness": list(self.witnesses[k]) if k in self.witnesses else None}
                        for k, (system, verdict) in enumerate(zip(self.systems, self.verdicts))],
        }
        return validate_json(data, "lift_report")


def _lift_verdict(context, position):
    lattice, class_poset, matrices = context
    return lift_witness(lattice, class_poset, Relation(class_poset, matrices[position]))


def lift_report(lattice, strategy=EnumerationStrategy.NEXT_CLOSURE, threads=1, progress=False):
    """
    Enumerates the categorical transfer systems on quotient_poset(lattice) and decides which of them are liftable

    :param lattice: SubgroupLattice of a lossless group
    :param strategy: Enumeration strategy for the class poset
    :param threads: Worker processes for the liftability checks
    :param progress: Show progress bars
    :return: LiftReport
    :raises TooLarge: if the class poset is too large to enumerate
    """
    class_poset = quotient_poset(lattice)
    systems = enumerate_cat_transfer_systems(class_poset, strategy=strategy, threads=threads, progress=progress)
    context = (lattice, class_poset, [system.pairs for system in systems])
    witnesses = parallel_map(_lift_verdict, range(len(systems)), context=context, threads=threads,
                             progress=progress, desc="Lifting", chunksize=8)

    verdicts = [w is None for w in witnesses]
    report = LiftReport(poset_size=class_poset.size, total_cat=len(systems), liftable=sum(verdicts),
                        verdicts=verdicts,
                        witnesses={k: w for k, w in enumerate(witnesses) if w is not None},
                        systems=systems)
    logger.info("Lift report for %s: %d of %d categorical transfer systems are liftable", lattice.group,
                report.liftable, report.total_cat)
    return report
