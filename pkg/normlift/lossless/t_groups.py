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

import numpy as np

from normlift.groups.group_utils import normal_closure


def subnormal_chain(G, lattice, K):
    """
    H_0 = G, H_(i+1) = normal closure of K in H_i, as lattice indices until the chain stabilizes
    """
    chain = [lattice.top]
    subgroup = lattice.subgroup(K)
    while True:
        closure = lattice.index_of(normal_closure(G, subgroup, lattice.subgroup(chain[-1])))
        if closure == chain[-1]:
            return chain
        chain.append(closure)


def is_subnormal(G, lattice, K):
    return subnormal_chain(G, lattice, K)[-1] == K


def _is_normal_in(lattice, K, H):
    return bool((lattice.conj_action[lattice.subgroup(H), K] == K).all())


def is_t_group(G, lattice):
    """ Every subnormal subgroup is normal; subnormality is decided by iterated normal closures """
    for K in lattice.class_reps:
        if not lattice.is_normal_index(K) and is_subnormal(G, lattice, K):
            return False
    return True


def is_t_group_two_step(G, lattice):
    """ K normal in H and H normal in G imply K normal in G """
    for H in lattice.normal_subgroups():
        for K in lattice.down_set(H):
            if _is_normal_in(lattice, K, H) and not lattice.is_normal_index(K):
                return False
    return True


def subnormal_subgroups(G, lattice):
    return np.array([K for K in range(lattice.size) if is_subnormal(G, lattice, K)], dtype=np.int64)
