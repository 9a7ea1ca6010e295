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
from collections import Counter

import numpy as np

from normlift.utils.errors import TooLarge
from normlift.utils.settings import limit

logger = logging.getLogger(__name__)


def conjugacy_class_sizes(G):
    """ Size of the conjugacy class of every element """
    classes = np.sort(G.conjugation, axis=0)
    return np.array([np.unique(classes[:, x]).size for x in range(G.order)], dtype=np.int64)


def element_invariants(G):
    """ Per element isomorphism invariant: (element order, conjugacy class size) """
    return list(zip(G.element_orders.tolist(), conjugacy_class_sizes(G).tolist()))


def element_order_profile(G):
    """ Sorted (element order, count) pairs; isomorphic groups have equal profiles """
    return tuple(sorted(Counter(G.element_orders.tolist()).items()))


def _check_bound(*groups):
    bound = limit("isomorphism_order")
    for group in groups:
        if group.order > bound:
            raise TooLarge("Isomorphism testing is limited to order {}, got {}".format(bound, group.order))


def _extend(G, H, gens, images):
    """
    Extends gens -> images to the subgroup generated by gens. Returns the partial map (-1 outside the subgroup) or None
    when it is not a well defined injective homomorphism.
    """
    phi = np.full(G.order, -1, dtype=np.int64)
    phi[0] = 0
    queue = [0]
    for x in queue:
        for g, img in zip(gens, images):
            y = G.mul[x, g]
            value = H.mul[phi[x], img]
            if phi[y] < 0:
                phi[y] = value
                queue.append(y)
            elif phi[y] != value:
                return None
    if np.unique(phi[phi >= 0]).size != len(queue):
        return None
    return phi


def find_isomorphism(G, H):
    """
    Searches for an isomorphism G -> H by backtracking over images of a generating set of G. Candidate images must
    match the element invariants of the generator, and every prefix must extend to an injective homomorphism.

    :return: numpy array phi with phi[x] the image of x, or None when G and H are not isomorphic
    :raises TooLarge: if either group exceeds the isomorphism bound
    """
    _check_bound(G, H)
    if G.order != H.order or element_order_profile(G) != element_order_profile(H):
        return None
    if G.is_abelian != H.is_abelian:
        return None

    g_invariants = element_invariants(G)
    h_invariants = element_invariants(H)
    if Counter(g_invariants) != Counter(h_invariants):
        return None

    gens = list(G.generators)
    candidates = [[y for y in range(H.order) if h_invariants[y] == g_invariants[g]] for g in gens]

    def search(images, covered):
        depth = len(images)
        if depth == len(gens):
            return _extend(G, H, gens, images)
        for y in candidates[depth]:
            if covered[y]:
                continue
            phi = _extend(G, H, gens[:depth + 1], images + [y])
            if phi is None:
                continue
            found = search(images + [y], np.isin(np.arange(H.order), phi[phi >= 0]))
            if found is not None:
                return found
        return None

    covered = np.zeros(H.order, dtype=bool)
    covered[0] = True
    phi = search([], covered)
    logger.debug("Isomorphism search %s vs %s: %s", G, H, "found" if phi is not None else "none")
    return phi


def is_isomorphic(G, H):
    return find_isomorphism(G, H) is not None
