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
Independent, deliberately simple subgroup enumerations used to cross-check enumerate_subgroups.
"""

import numpy as np

from normlift.groups.group_utils import generated_mask
from normlift.lattice.subgroup_lattice import canonical_order, cyclic_subgroup_masks, mask_key
from normlift.utils.errors import TooLarge
from normlift.utils.settings import limit

NAIVE_JOIN_ORDER = 60


def brute_force_subgroups(G):
    """
    Every subset containing the identity that is closed under multiplication, as membership rows in canonical order.
    Runs over all 2^(|G|-1) subsets.
    """
    bound = limit("brute_force_order")
    if G.order > bound:
        raise TooLarge("Brute force subgroup search is limited to order {}, got {}".format(bound, G.order))

    n = G.order
    codes = np.arange(2 ** (n - 1), dtype=np.int64)
    subsets = np.ones((codes.size, n), dtype=bool)
    subsets[:, 1:] = ((codes[:, None] >> np.arange(n - 1)[None, :]) & 1).astype(bool)

    closed = np.ones(codes.size, dtype=bool)
    for a in range(1, n):
        for b in range(1, n):
            closed &= ~(subsets[:, a] & subsets[:, b] & ~subsets[:, G.mul[a, b]])
    found = subsets[closed]
    return found[canonical_order(found)]


def naive_join_subgroups(G):
    """
    Pairwise join fixpoint over all subgroups, starting from the cyclic ones and without any use of conjugacy
    """
    if G.order > NAIVE_JOIN_ORDER:
        raise TooLarge("The naive join oracle is limited to order {}, got {}".format(NAIVE_JOIN_ORDER, G.order))

    masks, _ = cyclic_subgroup_masks(G)
    found = {mask_key(m): m for m in masks}
    frontier = list(found.values())
    while frontier:
        current = list(found.values())
        fresh = []
        for a in frontier:
            for b in current:
                joined = generated_mask(G, np.flatnonzero(b), start=a)
                key = mask_key(joined)
                if key not in found:
                    found[key] = joined
                    fresh.append(joined)
        frontier = fresh
    result = np.array(list(found.values()))
    return result[canonical_order(result)]
