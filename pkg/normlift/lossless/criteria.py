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

from dataclasses import asdict, dataclass
from math import gcd

from sympy import factorint, isprime

from normlift.groups.group_utils import center, derived_subgroup, is_solvable, quotient_group
from normlift.lossless.t_groups import is_t_group

# Criteria that are known to imply losslessness
SUFFICIENT = ("abelian", "solvable_t_group", "cyclic_normal_prime_index", "derived_prime_order",
              "elementary_p2_by_cyclic", "p_group_small")


@dataclass(frozen=True)
class CriteriaReport:
    """ Structural properties of a group; the fields listed in SUFFICIENT each imply losslessness """
    abelian: bool
    solvable: bool
    t_group: bool
    solvable_t_group: bool
    cyclic_normal_prime_index: bool
    derived_prime_order: bool
    elementary_p2_by_cyclic: bool
    p_group_small: bool
    extraspecial: bool

    def holds(self):
        """ Names of the sufficient criteria that hold """
        return [name for name in SUFFICIENT if getattr(self, name)]

    @property
    def implies_lossless(self):
        return bool(self.holds())

    def to_json(self):
        data = asdict(self)
        data["holds"] = self.holds()
        return data


def _prime_power(order):
    """ (p, k) if order = p^k with k >= 1, else None """
    factors = factorint(order)
    if len(factors) != 1:
        return None
    return next(iter(factors.items()))


def has_cyclic_normal_prime_index(G, lattice):
    for N in lattice.normal_subgroups():
        index = G.order // lattice.order(N)
        if isprime(index) and G.element_orders[lattice.subgroup(N)].max() == lattice.order(N):
            return True
    return False


def has_elementary_p2_by_cyclic(G, lattice):
    """ G = (C_p)^2 x| C_m with gcd(m, p) = 1: a normal non-cyclic subgroup of order p^2 with a cyclic complement """
    cyclic_orders = {lattice.order(i) for i in range(lattice.size)
                     if G.element_orders[lattice.subgroup(i)].max() == lattice.order(i)}
    for N in lattice.normal_subgroups():
        power = _prime_power(lattice.order(N))
        if power is None or power[1] != 2:
            continue
        p = power[0]
        m = G.order // lattice.order(N)
        if gcd(m, p) == 1 and G.element_orders[lattice.subgroup(N)].max() == p and m in cyclic_orders:
            return True
    return False


def is_extraspecial(G):
    """ A p-group whose center has order p and whose quotient by the center is elementary abelian """
    power = _prime_power(G.order)
    if power is None or G.is_abelian:
        return False
    p = power[0]
    Z = center(G)
    if Z.size != p:
        return False
    quotient = quotient_group(G, Z)
    return quotient.is_abelian and bool((quotient.element_orders[1:] == p).all())


def lossless_criteria(G, lattice):
    """
    Evaluates the structural sufficient conditions for losslessness

    :return: CriteriaReport
    """
    power = _prime_power(G.order)
    solvable = is_solvable(G)
    t_group = is_t_group(G, lattice)
    derived_order = derived_subgroup(G).size
    return CriteriaReport(
        abelian=G.is_abelian,
        solvable=solvable,
        t_group=t_group,
        solvable_t_group=solvable and t_group,
        cyclic_normal_prime_index=has_cyclic_normal_prime_index(G, lattice),
        derived_prime_order=isprime(derived_order),
        elementary_p2_by_cyclic=has_elementary_p2_by_cyclic(G, lattice),
        p_group_small=G.order == 1 or (power is not None and power[1] <= 3),
        extraspecial=is_extraspecial(G),
    )
