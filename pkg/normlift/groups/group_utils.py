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

from normlift.groups.group import Group
from normlift.utils.errors import NotASubgroup, NotNormal


def as_element_set(G, elements):
    """
    Normalizes an iterable of element indices to a sorted array without duplicates

    :param G: Group the indices refer to
    :param elements: Iterable of element indices, a boolean membership mask, or a numpy array
    :return: Sorted numpy array of element indices
    """
    arr = np.asarray(elements)
    if arr.dtype == bool:
        if arr.shape != (G.order,):
            raise ValueError("A membership mask must have length {}".format(G.order))
        return np.flatnonzero(arr)
    arr = np.unique(arr.astype(np.int64).ravel())
    if arr.size and (arr[0] < 0 or arr[-1] >= G.order):
        raise ValueError("Element indices must lie in 0..{}".format(G.order - 1))
    return arr


def membership_mask(G, elements):
    mask = np.zeros(G.order, dtype=bool)
    mask[as_element_set(G, elements)] = True
    return mask


def subgroup_generators(G, elements):
    """
    A small generating set of a subgroup, chosen greedily by decreasing element order

    :param G: Group
    :param elements: Element indices of a subgroup of G
    :return: Tuple of element indices
    """
    S = as_element_set(G, elements)
    candidates = S[np.argsort(-G.element_orders[S], kind="stable")]
    gens = []
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    for x in candidates:
        if mask[S].all():
            break
        if not mask[x]:
            gens.append(int(x))
            mask = generated_mask(G, gens)
    return tuple(gens)


def generated_mask(G, gens, start=None, start_gens=None):
    """
    Membership mask of the subgroup generated by gens, optionally together with an existing subgroup.

    :param G: Group
    :param gens: Element indices
    :param start: Optional membership mask of a subgroup; the result is the join of it with <gens>
    :param start_gens: Optional generating set of start, computed when omitted
    :return: Boolean membership mask
    """
    gens = as_element_set(G, gens)
    if start is None:
        mask = np.zeros(G.order, dtype=bool)
        mask[0] = True
    else:
        mask = np.array(start, dtype=bool, copy=True)
        if mask[gens].all():
            return mask
        if start_gens is None:
            start_gens = subgroup_generators(G, np.flatnonzero(mask))
        # right multipliers must generate the join, not just <gens>
        gens = np.union1d(gens, np.asarray(start_gens, dtype=np.int64))

    if gens.size == 0:
        return mask

    frontier = np.flatnonzero(mask)
    while frontier.size:
        products = G.mul[frontier][:, gens].ravel()
        fresh = np.unique(products[~mask[products]])
        mask[fresh] = True
        frontier = fresh
    return mask


def generated_subgroup(G, gens):
    """ Smallest subgroup of G containing gens """
    return np.flatnonzero(generated_mask(G, gens))


def is_subgroup(G, elements):
    S = as_element_set(G, elements)
    if S.size == 0 or S[0] != 0:
        return False
    mask = membership_mask(G, S)
    return bool(mask[G.mul[S][:, S]].all())


def require_subgroup(G, elements, name="S"):
    S = as_element_set(G, elements)
    if not is_subgroup(G, S):
        raise NotASubgroup("{} is not a subgroup of {}".format(name, G))
    return S


def conjugate_set(G, elements, g):
    """ The set g S g^-1 """
    S = as_element_set(G, elements)
    return np.unique(G.conjugation[g, S])


def normalizer(G, elements):
    S = require_subgroup(G, elements)
    mask = membership_mask(G, S)
    return np.flatnonzero(mask[G.conjugation[:, S]].all(axis=1))


def centralizer(G, elements):
    S = as_element_set(G, elements)
    return np.flatnonzero((G.conjugation[:, S] == S[None, :]).all(axis=1))


def center(G):
    return centralizer(G, G.elements)


def is_normal(G, elements):
    S = require_subgroup(G, elements)
    mask = membership_mask(G, S)
    return bool(mask[G.conjugation[:, S]].all())


def commutators(G, left, right):
    """ All commutators [a, b] = a b a^-1 b^-1 with a in left and b in right """
    A = as_element_set(G, left)
    B = as_element_set(G, right)
    ab = G.mul[A[:, None], B[None, :]]
    ab_inv = G.mul[G.inv[A][:, None], G.inv[B][None, :]]
    return np.unique(G.mul[ab, ab_inv])


def derived_subgroup(G, elements=None):
    """ Commutator subgroup of G, or of the subgroup given by elements """
    S = G.elements if elements is None else require_subgroup(G, elements)
    return generated_subgroup(G, commutators(G, S, S))


def derived_series(G):
    series = [G.elements]
    while True:
        nxt = derived_subgroup(G, series[-1])
        if nxt.size == series[-1].size:
            return series
        series.append(nxt)


def is_solvable(G):
    return derived_series(G)[-1].size == 1


def normal_closure(G, K, H):
    """ Smallest subgroup of H containing K that is normalized by H """
    H = require_subgroup(G, H, "H")
    K = require_subgroup(G, K, "K")
    if not membership_mask(G, H)[K].all():
        raise NotASubgroup("K is not contained in H")
    images = np.unique(G.conjugation[H][:, K])
    return generated_subgroup(G, images)


def is_cyclic_set(G, elements):
    S = as_element_set(G, elements)
    return bool((G.element_orders[S] == S.size).any())


def is_cyclic(G):
    return is_cyclic_set(G, G.elements)


def exponent(G):
    return int(np.lcm.reduce(G.element_orders))


def subgroup_as_group(G, elements):
    """
    The subgroup S as a standalone Group. Elements keep their relative order, so the identity stays at index 0.
    """
    S = require_subgroup(G, elements)
    position = np.full(G.order, -1, dtype=np.int64)
    position[S] = np.arange(S.size)
    table = position[G.mul[S][:, S]]
    labels = [G.label(x) for x in S] if G.labels is not None else None
    return Group(table, labels=labels, validate=False)


def coset_ids(G, N):
    """
    Left cosets of N. Returns (reps, ids): reps[c] is the least element of coset c (cosets are numbered in increasing
    order of it) and ids[x] is the coset containing x.
    """
    N = as_element_set(G, N)
    least = G.mul[:, N].min(axis=1)
    reps, ids = np.unique(least, return_inverse=True)
    return reps, ids.reshape(-1)


def quotient_group(G, N):
    """
    The quotient G/N with cosets numbered by their least element, so the coset N itself is the identity
    """
    N = require_subgroup(G, N, "N")
    if not is_normal(G, N):
        raise NotNormal("N is not a normal subgroup of {}".format(G))

    reps, ids = coset_ids(G, N)
    table = ids[G.mul[reps][:, reps]]
    labels = ["{}N".format(G.label(r)) for r in reps]
    return Group(table, labels=labels, validate=False)
