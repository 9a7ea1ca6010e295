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
from sympy import primefactors

from normlift.groups.group_utils import coset_ids
from normlift.posets.finite_poset import FinitePoset
from normlift.utils.errors import NotNormal


def _is_pi_number(value, primes):
    return all(q in primes for q in primefactors(value))


def hall_subgroups(lattice, primes):
    """
    Hall pi-subgroups: subgroups whose order only involves the given primes and whose index involves none of them
    """
    primes = set(int(p) for p in primes)
    group_order = lattice.group.order
    return [i for i in range(lattice.size)
            if _is_pi_number(lattice.order(i), primes)
            and not set(primefactors(group_order // lattice.order(i))) & primes]


class IntervalPoset(FinitePoset):
    """
    The interval [N, G] of Sub(G) for a normal subgroup N. members[k] is the lattice index of element k; action[g, k]
    is the element obtained by conjugating with g, which only depends on the coset gN.
    """

    def __init__(self, lattice, normal_index):
        members = lattice.up_set(normal_index)
        labels = [str(lattice.order(i)) for i in members]
        super().__init__(lattice.leq[np.ix_(members, members)], labels=labels, validate=False)
        position = np.full(lattice.size, -1, dtype=np.int64)
        position[members] = np.arange(members.size)
        self._members = members
        self._action = position[lattice.conj_action[:, members]]
        self._action.setflags(write=False)
        self._coset_reps, _ = coset_ids(lattice.group, lattice.subgroup(normal_index))

    @property
    def members(self):
        return self._members

    @property
    def action(self):
        return self._action

    @property
    def quotient_action(self):
        """ The action restricted to one representative per coset of N, i.e. the G/N action """
        return self._action[self._coset_reps]


def interval_poset(lattice, normal_index):
    """
    The interval [N, G] with its induced conjugation action; it is order isomorphic to Sub(G/N)
    """
    if not lattice.is_normal_index(normal_index):
        raise NotNormal("Subgroup {} is not normal in {}".format(normal_index, lattice.group))
    return IntervalPoset(lattice, normal_index)
