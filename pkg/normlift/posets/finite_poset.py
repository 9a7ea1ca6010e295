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

from functools import cached_property

import networkx as nx
import numpy as np

from normlift.utils.dot_utils import hasse_dot
from normlift.utils.errors import InvalidSpec
from normlift.utils.file_utils import validate_json


class FinitePoset:
    """
    Immutable finite partial order on 0..size-1.

    Conventions:
        - leq[i, j] is True iff i <= j
        - cover[i, j] is True iff j covers i (i < j with nothing in between)
    """

    def __init__(self, leq, labels=None, validate=True):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1] or leq.shape[0] == 0:
            raise InvalidSpec("leq must be a non-empty square matrix, got shape {}".format(leq.shape))
        if validate:
            self.check_partial_order(leq)
        leq.setflags(write=False)
        self._leq = leq
        if labels is not None and len(labels) != leq.shape[0]:
            raise InvalidSpec("Expected {} labels, got {}".format(leq.shape[0], len(labels)))
        self._labels = [str(label) for label in labels] if labels is not None else None

    @staticmethod
    def check_partial_order(leq):
        n = leq.shape[0]
        if not leq[np.diag_indices(n)].all():
            raise InvalidSpec("The relation is not reflexive")
        both = leq & leq.T
        both[np.diag_indices(n)] = False
        if both.any():
            i, j = np.argwhere(both)[0]
            raise InvalidSpec("The relation is not antisymmetric: {} <= {} <= {}".format(i, j, i))
        step = leq.astype(np.int32)
        composed = (step @ step) > 0
        if (composed & ~leq).any():
            i, j = np.argwhere(composed & ~leq)[0]
            raise InvalidSpec("The relation is not transitive: {} <= {} is implied but missing".format(i, j))

    @property
    def size(self):
        return self._leq.shape[0]

    @property
    def leq(self):
        return self._leq

    @property
    def labels(self):
        if self._labels is None:
            return [str(i) for i in range(self.size)]
        return list(self._labels)

    def label(self, i):
        return self.labels[i]

    def __len__(self):
        return self.size

    def __repr__(self):
        return "FinitePoset(size={})".format(self.size)

    def __eq__(self, other):
        """ Equality of the labelled order, not isomorphism """
        return isinstance(other, FinitePoset) and self.size == other.size and bool((self.leq == other.leq).all())

    def __hash__(self):
        return hash(np.packbits(self._leq).tobytes())

    def less_equal(self, i, j):
        return bool(self._leq[i, j])

    def down_set(self, i):
        return np.flatnonzero(self._leq[:, i])

    def up_set(self, i):
        return np.flatnonzero(self._leq[i, :])

    @cached_property
    def cover(self):
        strict = self._leq.copy()
        strict[np.diag_indices(self.size)] = False
        step = strict.astype(np.int32)
        cover = strict & ~((step @ step) > 0)
        cover.setflags(write=False)
        return cover

    def hasse_edges(self):
        """ Covering pairs (i, j) in lexicographic order """
        return [(int(i), int(j)) for i, j in np.argwhere(self.cover)]

    def comparable_pairs(self):
        """ Non-reflexive pairs i < j in lexicographic order """
        strict = self._leq.copy()
        strict[np.diag_indices(self.size)] = False
        return [(int(i), int(j)) for i, j in np.argwhere(strict)]

    @cached_property
    def bottom(self):
        """ The least element, or None """
        hits = np.flatnonzero(self._leq.all(axis=1))
        return int(hits[0]) if hits.size else None

    @cached_property
    def top(self):
        """ The greatest element, or None """
        hits = np.flatnonzero(self._leq.all(axis=0))
        return int(hits[0]) if hits.size else None

    @cached_property
    def levels(self):
        """ Length of the longest chain below each element """
        level = np.zeros(self.size, dtype=np.int64)
        for j in np.argsort(self._leq.sum(axis=0), kind="stable"):
            below = np.flatnonzero(self.cover[:, j])
            if below.size:
                level[j] = level[below].max() + 1
        level.setflags(write=False)
        return level

    @property
    def height(self):
        return int(self.levels.max())

    def subposet(self, elements, labels=None):
        """ Induced order on the given elements, renumbered in the given order """
        idx = np.asarray(elements, dtype=np.int64)
        if labels is None and self._labels is not None:
            labels = [self._labels[i] for i in idx]
        return FinitePoset(self._leq[np.ix_(idx, idx)], labels=labels, validate=False)

    def to_networkx(self):
        """ Hasse diagram as a networkx DiGraph; nodes carry 'label' and 'level' """
        graph = nx.DiGraph()
        for i in range(self.size):
            graph.add_node(i, label=self.label(i), level=int(self.levels[i]))
        graph.add_edges_from(self.hasse_edges())
        return graph

    def to_json(self):
        pairs = [[i, j] for i, j in self.comparable_pairs()]
        data = {"size": self.size, "leq": pairs, "labels": self.labels}
        return validate_json(data, "poset")

    @classmethod
    def from_json(cls, data):
        """ Reads {"size": n, "leq": [[i, j], ...], "labels": [...]}; leq lists generating pairs """
        validate_json(data, "poset")
        n = data["size"]
        relation = np.eye(n, dtype=bool)
        for i, j in data["leq"]:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidSpec("Poset pair ({}, {}) is out of range for size {}".format(i, j, n))
            relation[i, j] = True
        return cls(transitive_closure(relation), labels=data.get("labels"))

    def to_dot(self, extra_edges=None):
        return hasse_dot(self.labels, self.hasse_edges(), extra_edges=extra_edges)


def transitive_closure(relation):
    """ Reflexive transitive closure of a boolean relation by repeated squaring """
    closure = np.array(relation, dtype=bool)
    closure[np.diag_indices(closure.shape[0])] = True
    while True:
        step = closure.astype(np.int32)
        nxt = (step @ step) > 0
        if (nxt == closure).all():
            return closure
        closure = nxt
