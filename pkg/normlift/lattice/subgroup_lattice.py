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
from functools import cached_property

import numpy as np

from normlift.groups.group import check_group_order
from normlift.groups.group_utils import as_element_set, generated_mask, subgroup_generators
from normlift.posets.finite_poset import FinitePoset
from normlift.utils.dot_utils import hasse_dot
from normlift.utils.errors import NotASubgroup, TooLarge
from normlift.utils.file_utils import validate_json
from normlift.utils.parallel import progress_bar
from normlift.utils.settings import limit

logger = logging.getLogger(__name__)

# Largest number of float32 cells in one containment matmul block
_CHUNK_CELLS = 1 << 24


def mask_key(mask):
    """ Canonical byte key of a membership mask (element 0 is the most significant bit) """
    return np.packbits(mask, bitorder="big").tobytes()


def _row_keys(masks):
    packed = np.packbits(masks, axis=1, bitorder="big")
    return [row.tobytes() for row in packed]


def canonical_order(masks):
    """ Permutation sorting subgroup masks by (order, membership bit-string) """
    orders = masks.sum(axis=1)
    keys = _row_keys(masks)
    return sorted(range(masks.shape[0]), key=lambda i: (int(orders[i]), keys[i]))


def _containment(masks):
    """ leq[i, j] iff subgroup i is contained in subgroup j """
    m, n = masks.shape
    M = masks.astype(np.float32)
    sizes = masks.sum(axis=1)
    leq = np.empty((m, m), dtype=bool)
    rows = max(1, _CHUNK_CELLS // max(1, m, n))
    for start in range(0, m, rows):
        block = M[start:start + rows] @ M.T
        leq[start:start + rows] = block == sizes[start:start + rows, None]
    return leq


class SubgroupLattice:
    """
    All subgroups of a group, in canonical order (by order, then membership bit-string), together with the
    containment order, the conjugation action and the conjugacy classes. Index 0 is the trivial subgroup and the last
    index is the whole group.

    Classes are numbered in increasing order of their least member, which is also the class representative.
    """

    def __init__(self, group, masks):
        masks = np.array(masks, dtype=bool)
        perm = canonical_order(masks)
        masks = masks[perm]
        masks.setflags(write=False)
        self._group = group
        self._members = masks
        keys = _row_keys(masks)
        self._index = {key: i for i, key in enumerate(keys)}
        if len(self._index) != len(keys):
            raise ValueError("Duplicate subgroups in lattice")

        self._orders = masks.sum(axis=1).astype(np.int64)
        self._orders.setflags(write=False)
        self._leq = _containment(masks)
        self._leq.setflags(write=False)
        self._conj_action = self._build_conjugation_action()
        self._conj_action.setflags(write=False)
        self._build_classes()
        self._normalizer_of = self._build_normalizers()
        self._normalizer_of.setflags(write=False)
        logger.info("Lattice of %s: %d subgroups in %d classes", group, self.size, self.num_classes)

    def _lookup_rows(self, rows):
        keys = _row_keys(rows)
        try:
            return np.array([self._index[k] for k in keys], dtype=np.int32)
        except KeyError:
            raise ValueError("A conjugate subgroup is missing from the lattice")

    def _build_conjugation_action(self):
        G = self._group
        n, m = G.order, self.size
        table = np.full((n, m), -1, dtype=np.int32)
        g_index = np.arange(n)[:, None]
        for rep in range(m):
            if table[0, rep] >= 0:
                continue
            elements = np.flatnonzero(self._members[rep])
            conjugates = np.zeros((n, n), dtype=bool)
            conjugates[g_index, G.conjugation[:, elements]] = True
            orbit = self._lookup_rows(conjugates)

            # g * (h R h^-1) = (gh) R (gh)^-1, with h the first element mapping R to each orbit member
            members, transversal = np.unique(orbit, return_index=True)
            for j, h in zip(members, transversal):
                table[:, j] = orbit[G.mul[:, h]]
        return table

    def _build_classes(self):
        m = self.size
        class_of = np.full(m, -1, dtype=np.int64)
        reps = []
        for i in range(m):
            if class_of[i] < 0:
                class_of[np.unique(self._conj_action[:, i])] = len(reps)
                reps.append(i)
        self._class_of = class_of
        self._class_of.setflags(write=False)
        self._class_reps = np.array(reps, dtype=np.int64)
        self._class_reps.setflags(write=False)

    def _build_normalizers(self):
        stabilizers = (self._conj_action == np.arange(self.size)[None, :]).T
        return self._lookup_rows(stabilizers).astype(np.int64)

    @property
    def group(self):
        return self._group

    @property
    def size(self):
        return self._members.shape[0]

    def __len__(self):
        return self.size

    def __repr__(self):
        return "SubgroupLattice({}, subgroups={}, classes={})".format(self._group, self.size, self.num_classes)

    @property
    def members(self):
        """ Boolean matrix with members[i, x] iff element x lies in subgroup i """
        return self._members

    @property
    def orders(self):
        return self._orders

    @property
    def leq(self):
        return self._leq

    @property
    def conj_action(self):
        """ conj_action[g, i] is the index of g H_i g^-1 """
        return self._conj_action

    @property
    def class_of(self):
        return self._class_of

    @property
    def class_reps(self):
        return self._class_reps

    @property
    def num_classes(self):
        return int(self._class_reps.size)

    @property
    def normalizer_of(self):
        return self._normalizer_of

    @property
    def trivial(self):
        return 0

    @property
    def top(self):
        return self.size - 1

    @cached_property
    def class_sizes(self):
        return np.bincount(self._class_of, minlength=self.num_classes)

    def class_members(self, c):
        return np.flatnonzero(self._class_of == c)

    def subgroup(self, i):
        """ Sorted element indices of subgroup i """
        return np.flatnonzero(self._members[i])

    @property
    def subgroups(self):
        return [self.subgroup(i) for i in range(self.size)]

    def order(self, i):
        return int(self._orders[i])

    def index_of(self, elements):
        """ Index of the subgroup with the given elements (or membership mask) """
        mask = np.zeros(self._group.order, dtype=bool)
        mask[as_element_set(self._group, elements)] = True
        index = self._index.get(mask_key(mask))
        if index is None:
            raise NotASubgroup("The given elements do not form a subgroup of {}".format(self._group))
        return index

    def conjugate(self, i, g):
        return int(self._conj_action[g, i])

    def are_conjugate(self, i, j):
        return bool(self._class_of[i] == self._class_of[j])

    def down_set(self, i):
        return np.flatnonzero(self._leq[:, i])

    def up_set(self, i):
        return np.flatnonzero(self._leq[i, :])

    def meet(self, i, j):
        """ Index of H_i ∩ H_j """
        return self._index[mask_key(self._members[i] & self._members[j])]

    def meets(self, i, others):
        """ Indices of H_i ∩ H_j for every j in others """
        others = np.asarray(others, dtype=np.int64)
        return self._lookup_rows(self._members[i][None, :] & self._members[others])

    def join(self, i, j):
        """ Index of the subgroup generated by H_i and H_j """
        gens = subgroup_generators(self._group, self.subgroup(j))
        mask = generated_mask(self._group, gens, start=self._members[i])
        return self._index[mask_key(mask)]

    @cached_property
    def cover(self):
        """ cover[i, j] iff H_j covers H_i """
        strict = self._leq & ~np.eye(self.size, dtype=bool)
        step = strict.astype(np.float32)
        cover = strict & ~((step @ step) > 0)
        cover.setflags(write=False)
        return cover

    def hasse_edges(self):
        return [(int(i), int(j)) for i, j in np.argwhere(self.cover)]

    def maximal_subgroups(self, i=None):
        """ Indices of the maximal proper subgroups of H_i (default: of the whole group) """
        i = self.top if i is None else i
        return np.flatnonzero(self.cover[:, i])

    def is_normal_index(self, i):
        return bool((self._conj_action[:, i] == i).all())

    def normal_subgroups(self):
        return np.flatnonzero((self._conj_action == np.arange(self.size)[None, :]).all(axis=0))

    def as_poset(self):
        """ Sub(G) as a FinitePoset with subgroup orders as labels """
        return FinitePoset(self._leq, labels=[str(o) for o in self._orders], validate=False)

    def to_json(self):
        spec = self._group.spec
        data = {
            "group": str(spec) if spec is not None else None,
            "subgroups": [{"index": i, "order": self.order(i), "elements": self.subgroup(i).tolist(),
                           "class": int(self._class_of[i]), "normalizer": int(self._normalizer_of[i])}
                          for i in range(self.size)],
            "leq": [[int(i), int(j)] for i, j in np.argwhere(self._leq) if i != j],
        }
        return validate_json(data, "lattice")

    @classmethod
    def from_json(cls, data, group):
        """ Rebuilds a lattice export against the group it was computed for """
        validate_json(data, "lattice")
        masks = np.zeros((len(data["subgroups"]), group.order), dtype=bool)
        for row, entry in enumerate(data["subgroups"]):
            masks[row, as_element_set(group, entry["elements"])] = True
        return cls(group, masks)

    def to_dot(self):
        labels = ["{}: {}".format(i, self.order(i)) for i in range(self.size)]
        return hasse_dot(labels, self.hasse_edges(), groups=self._class_of.tolist())


def cyclic_subgroup_masks(G):
    """ Distinct cyclic subgroups as membership rows, together with a generator of each """
    n = G.order
    masks = np.zeros((n, n), dtype=bool)
    rows = np.arange(n)
    current = np.zeros(n, dtype=np.int64)
    for _ in range(int(G.element_orders.max())):
        current = G.mul[current, rows]
        masks[rows, current] = True
    _, first = np.unique(np.packbits(masks, axis=1, bitorder="big"), axis=0, return_index=True)
    first = np.sort(first)
    return masks[first], first


class _SubgroupStore:
    def __init__(self, G):
        self.G = G
        self.cap = limit("max_subgroups")
        self.keys = set()
        self.masks = []

    def __contains__(self, mask):
        return mask_key(mask) in self.keys

    def add_orbit(self, mask):
        """ Adds every conjugate of the subgroup """
        G = self.G
        elements = np.flatnonzero(mask)
        conjugates = np.zeros((G.order, G.order), dtype=bool)
        conjugates[np.arange(G.order)[:, None], G.conjugation[:, elements]] = True
        for row in np.unique(np.packbits(conjugates, axis=1, bitorder="big"), axis=0):
            key = row.tobytes()
            if key not in self.keys:
                self.keys.add(key)
                self.masks.append(np.unpackbits(row, count=G.order, bitorder="big").astype(bool))
        if len(self.masks) > self.cap:
            raise TooLarge("{} has more than {} subgroups".format(G, self.cap))


def enumerate_subgroups(G, progress=False):
    """
    Computes Sub(G). Starts from the cyclic subgroups and closes under joins with cyclic subgroups. Only one
    representative per conjugacy class is joined, since the join of a conjugate is the conjugate of a join; every
    new subgroup enters together with its whole conjugacy class.

    :param G: Group
    :param progress: Show a progress bar over the processed classes
    :return: SubgroupLattice
    :raises TooLarge: if G exceeds the group order bound or has more subgroups than the configured cap
    """
    check_group_order(G.order)
    cyclic, generators = cyclic_subgroup_masks(G)
    store = _SubgroupStore(G)

    worklist = []
    for mask in cyclic:
        if mask not in store:
            store.add_orbit(mask)
            worklist.append(mask)

    bar = progress_bar(None, progress, desc="Subgroup classes")
    position = 0
    while position < len(worklist):
        rep = worklist[position]
        position += 1
        rep_gens = subgroup_generators(G, np.flatnonzero(rep))
        for mask, gen in zip(cyclic, generators):
            if rep[gen]:
                continue
            joined = generated_mask(G, [gen], start=rep, start_gens=rep_gens)
            if joined not in store:
                store.add_orbit(joined)
                worklist.append(joined)
        bar.update(1)
        logger.debug("Processed %d of %d subgroup classes, %d subgroups so far", position, len(worklist),
                     len(store.masks))
    bar.close()

    return SubgroupLattice(G, np.array(store.masks))
