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

from string import ascii_lowercase

import numpy as np

from normlift.posets.finite_poset import FinitePoset
from normlift.utils.dot_utils import hasse_dot


def class_labels(orders):
    """ Order of the class, with a letter suffix when several classes share an order """
    labels = []
    seen = {}
    totals = {}
    for o in orders:
        totals[o] = totals.get(o, 0) + 1
    for o in orders:
        k = seen.get(o, 0)
        seen[o] = k + 1
        if totals[o] == 1:
            labels.append(str(o))
        elif k < len(ascii_lowercase):
            labels.append("{}{}".format(o, ascii_lowercase[k]))
        else:
            labels.append("{}_{}".format(o, k))
    return labels


class ClassPoset(FinitePoset):
    """
    Sub(G)/G: conjugacy classes of subgroups with [K] <= [H] iff some conjugate of K lies in H. Class c is the class
    of the lattice with the same number, so pi is the lattice's class_of map.
    """

    def __init__(self, lattice):
        reps = lattice.class_reps
        indicator = np.zeros((lattice.size, lattice.num_classes), dtype=np.float32)
        indicator[np.arange(lattice.size), lattice.class_of] = 1.0
        leq = (indicator.T @ lattice.leq[:, reps].astype(np.float32)) > 0
        orders = [int(lattice.orders[r]) for r in reps]
        super().__init__(leq, labels=class_labels(orders), validate=False)
        self._lattice = lattice
        self._orders = np.array(orders, dtype=np.int64)

    @property
    def lattice(self):
        return self._lattice

    @property
    def pi(self):
        return self._lattice.class_of

    @property
    def reps(self):
        return self._lattice.class_reps

    @property
    def class_sizes(self):
        return self._lattice.class_sizes

    @property
    def orders(self):
        return self._orders

    @property
    def classes(self):
        """ (representative subgroup index, class size, order) per class """
        return [(int(r), int(s), int(o)) for r, s, o in zip(self.reps, self.class_sizes, self._orders)]

    def members(self, c):
        return self._lattice.class_members(c)

    def class_json(self):
        return [{"class": c, "label": self.label(c), "representative": r, "size": s, "order": o}
                for c, (r, s, o) in enumerate(self.classes)]

    def to_dot(self, extra_edges=None):
        return hasse_dot(self.labels, self.hasse_edges(), extra_edges=extra_edges)


def quotient_poset(lattice):
    """ The quotient poset Sub(G)/G of a subgroup lattice, built once per lattice """
    poset = getattr(lattice, "_class_poset", None)
    if poset is None:
        poset = ClassPoset(lattice)
        lattice._class_poset = poset
    return poset
