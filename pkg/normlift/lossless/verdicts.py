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
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from normlift.groups.group_utils import subgroup_as_group
from normlift.groups.isomorphism import element_order_profile, is_isomorphic
from normlift.utils.errors import TooLarge
from normlift.utils.file_utils import validate_json
from normlift.utils.parallel import parallel_map
from normlift.utils.settings import limit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LosslessVerdict:
    """
    lossless, or a witness (H, K, g): K and gKg^-1 both lie in H but no element of N_G(H) conjugates K to gKg^-1
    """
    lossless: bool
    witness: Optional[Tuple[int, int, int]] = None

    def __bool__(self):
        return self.lossless

    def to_json(self, lattice):
        data = {"group": str(lattice.group.spec) if lattice.group.spec is not None else None,
                "lossless": self.lossless, "witness": None}
        if self.witness is not None:
            H, K, g = self.witness
            data["witness"] = {"H": H, "K": K, "g": g, "gK": lattice.conjugate(K, g),
                               "H_order": lattice.order(H), "K_order": lattice.order(K),
                               "g_label": lattice.group.label(g)}
        return validate_json(data, "lossless_verdict")


def _lossless_witness(lattice, H):
    """ Least (K, g) violating losslessness inside H, or None """
    conj = lattice.conj_action
    normalizer = lattice.subgroup(lattice.normalizer_of[H])
    for K in lattice.down_set(H):
        images = conj[:, K]
        inside = lattice.leq[images, H]
        reachable = np.isin(images, conj[normalizer, K])
        bad = inside & ~reachable
        if bad.any():
            return int(K), int(np.argmax(bad))
    return None


def is_lossless(G, lattice, threads=1, progress=False):
    """
    Decides whether any two G-conjugate subgroups K, gKg^-1 of a common subgroup H are already conjugate by an
    element of N_G(H). Only class representatives H are checked, since the condition is invariant under conjugation;
    representatives are the least members of their classes, so the witness is lexicographically least.

    :return: LosslessVerdict
    """
    reps = lattice.class_reps.tolist()
    results = parallel_map(_lossless_witness, reps, context=lattice, threads=threads, progress=progress,
                           desc="Lossless check", chunksize=4)
    for H, found in zip(reps, results):
        if found is not None:
            K, g = found
            logger.info("%s is lossy: subgroup %d of %d and its conjugate by %d are not N(H)-conjugate", G, K, H, g)
            return LosslessVerdict(False, (int(H), K, g))
    return LosslessVerdict(True)


def verify_lossless_witness(lattice, witness):
    """ Re-validates a witness: both K and gK lie in H and no normalizer element maps K to gK """
    H, K, g = witness
    gK = lattice.conjugate(K, g)
    if not (lattice.leq[K, H] and lattice.leq[gK, H]):
        return False
    normalizer = lattice.subgroup(lattice.normalizer_of[H])
    return not bool((lattice.conj_action[normalizer, K] == gK).any())


def universally_lossless_witness(G, lattice):
    """
    A pair of non-conjugate isomorphic subgroups (class representatives), or None. Candidates are bucketed by order
    and element order profile before the isomorphism test.

    :raises TooLarge: if a candidate pair exceeds the isomorphism bound
    """
    buckets = {}
    for rep in lattice.class_reps:
        sub = subgroup_as_group(G, lattice.subgroup(rep))
        buckets.setdefault((sub.order, element_order_profile(sub)), []).append((int(rep), sub))

    bound = limit("isomorphism_order")
    for (order, _), members in sorted(buckets.items()):
        if len(members) < 2:
            continue
        if order > bound:
            raise TooLarge("Subgroups of order {} exceed the isomorphism bound of {}".format(order, bound))
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if is_isomorphic(members[a][1], members[b][1]):
                    return members[a][0], members[b][0]
    return None


def is_universally_lossless(G, lattice):
    """ True iff any two isomorphic subgroups of G are conjugate """
    return universally_lossless_witness(G, lattice) is None


def is_pronormal(G, lattice, K):
    """ For every g, K and gKg^-1 are conjugate inside the subgroup they generate """
    conj = lattice.conj_action
    for image in np.unique(conj[:, K]):
        joined = lattice.join(K, image)
        if not (conj[lattice.subgroup(joined), K] == image).any():
            return False
    return True


def all_pronormal(G, lattice):
    return all(is_pronormal(G, lattice, rep) for rep in lattice.class_reps)
