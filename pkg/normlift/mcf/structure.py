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

import numpy as np

from normlift.lattice.class_poset import quotient_poset
from normlift.posets.constructions import divisor_lattice, product
from normlift.utils.errors import NotMcf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class McfStructure:
    """ Cyclic Frobenius kernel N and cyclic complement T of a metacyclic Frobenius group, as lattice indices """
    kernel: int
    complement: int
    n: int
    t: int

    def to_json(self):
        return {"kernel": self.kernel, "complement": self.complement, "n": self.n, "t": self.t}


def _is_cyclic_index(G, lattice, i):
    return int(G.element_orders[lattice.subgroup(i)].max()) == lattice.order(i)


def _acts_fixed_point_freely(G, kernel_elements, complement_elements):
    """ Every non-identity element of the complement fixes only the identity of the kernel """
    for t in complement_elements[1:]:
        fixed = G.conjugation[t, kernel_elements] == kernel_elements
        if fixed[1:].any():
            return False
    return True


def mcf_structure(G, lattice):
    """
    Finds a cyclic normal subgroup N (1 < |N| < |G|) with a cyclic complement T acting fixed point freely, scanning
    in lattice index order.

    :return: McfStructure, or None when G is not a metacyclic Frobenius group
    """
    cyclic = [i for i in range(lattice.size) if _is_cyclic_index(G, lattice, i)]
    for N in cyclic:
        n = lattice.order(N)
        if n == 1 or n == G.order or not lattice.is_normal_index(N):
            continue
        t = G.order // n
        kernel_elements = lattice.subgroup(N)
        for T in cyclic:
            if lattice.order(T) != t or lattice.meet(N, T) != lattice.trivial:
                continue
            if _acts_fixed_point_freely(G, kernel_elements, lattice.subgroup(T)):
                logger.info("%s is metacyclic Frobenius with kernel order %d and complement order %d", G, n, t)
                return McfStructure(kernel=int(N), complement=int(T), n=n, t=t)
    return None


def base(lattice, st, K):
    """ The base K ∩ N of a subgroup """
    return lattice.meet(K, st.kernel)


def grid_coordinates(lattice, st):
    """ (|N_K|, [K : N_K]) for the representative K of every class """
    coordinates = []
    for K in lattice.class_reps:
        base_order = lattice.order(base(lattice, st, K))
        coordinates.append((base_order, lattice.order(K) // base_order))
    return coordinates


def grid_poset(st):
    """ D_N x D_T: divisors of n times divisors of t """
    return product(divisor_lattice(st.n), divisor_lattice(st.t))


def grid_iso(lattice, st):
    """
    The order isomorphism Sub(G)/G -> D_N x D_T, [K] -> (|N_K|, [K : N_K]).

    :return: list mapping each class index to its index in grid_poset(st)
    :raises NotMcf: if st is missing or the map is not an order isomorphism
    """
    if st is None:
        raise NotMcf("{} is not a metacyclic Frobenius group".format(lattice.group))

    grid = grid_poset(st)
    position = {label: k for k, label in enumerate(grid.labels)}
    mapping = []
    for first, second in grid_coordinates(lattice, st):
        label = "({},{})".format(first, second)
        if label not in position:
            raise NotMcf("Class coordinate {} is not in the divisor grid".format(label))
        mapping.append(position[label])

    if len(set(mapping)) != grid.size or len(mapping) != grid.size:
        raise NotMcf("The class to grid map is not a bijection")
    class_poset = quotient_poset(lattice)
    idx = np.array(mapping)
    if not (grid.leq[np.ix_(idx, idx)] == class_poset.leq).all():
        raise NotMcf("The class to grid map is not an order isomorphism")
    return mapping
