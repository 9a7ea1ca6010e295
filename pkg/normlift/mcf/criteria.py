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

from sympy import factorint

from normlift.lattice.class_poset import quotient_poset
from normlift.mcf.structure import base, grid_coordinates
from normlift.utils.errors import CarrierMismatch, NotMcf


def _check(lattice, st, Rc):
    if st is None:
        raise NotMcf("{} is not a metacyclic Frobenius group".format(lattice.group))
    if Rc.source is not quotient_poset(lattice):
        raise CarrierMismatch("The categorical transfer system does not live on Sub(G)/G of this lattice")


def first_violation(lattice, st, Rc, source_form=False):
    """
    The least class arrow [K] -> [H] of Rc whose bases differ but whose required arrow is missing. The required
    arrow is [N_K] -> [H], or [N_K] -> [K] with source_form.

    :return: (K class, H class, N_K class) or None
    """
    _check(lattice, st, Rc)
    class_of = lattice.class_of
    for a, b in Rc.arrows():
        K = lattice.class_reps[a]
        H = lattice.class_reps[b]
        base_K = base(lattice, st, K)
        if lattice.order(base_K) == lattice.order(base(lattice, st, H)):
            continue
        c = int(class_of[base_K])
        target = a if source_form else b
        if not Rc.pairs[c, target]:
            return a, b, c
    return None


def mcf_liftable(lattice, st, Rc, source_form=False):
    """
    Liftability for metacyclic Frobenius groups: whenever [K] -> [H] with N_K != N_H, also [N_K] -> [H]
    (or [N_K] -> [K] with source_form)
    """
    return first_violation(lattice, st, Rc, source_form) is None


def ladder_coordinates(lattice, st):
    """ Grid position (i, j) of every class of D_(p^k): |N_K| = p^i and j = 1 iff K is not inside N """
    if st is None or st.t != 2:
        raise NotMcf("The ladder only applies to dihedral groups of odd prime power degree")
    coordinates = []
    for base_order, rest in grid_coordinates(lattice, st):
        coordinates.append((sum(factorint(base_order).values()), 0 if rest == 1 else 1))
    return coordinates


def ladder_rule_liftable(lattice, st, Rc):
    """ On the ladder of D_(p^k): (i,1) -> (i',1) with i < i' implies (i,0) -> (i,1) """
    _check(lattice, st, Rc)
    coordinates = ladder_coordinates(lattice, st)
    position = {c: k for k, c in enumerate(coordinates)}
    for a, b in Rc.arrows():
        (i, j), (i2, j2) = coordinates[a], coordinates[b]
        if j == 1 and j2 == 1 and i < i2 and not Rc.pairs[position[(i, 0)], position[(i, 1)]]:
            return False
    return True
