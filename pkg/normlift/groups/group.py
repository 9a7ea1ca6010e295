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

from normlift.utils.errors import InvalidSpec, TooLarge
from normlift.utils.settings import limit, setting

logger = logging.getLogger(__name__)

# Upper bound on temporary array cells when checking associativity in chunks
_CHUNK_CELLS = 1 << 24


def check_group_order(order, what="group"):
    """
    Raises TooLarge when the order exceeds the configured bound (NORMLIFT_MAX_GROUP_ORDER overrides it)
    """
    bound = limit("max_group_order")
    if order > bound:
        raise TooLarge("The {} has order {}, which exceeds the configured bound of {}".format(what, order, bound))


class Group:
    """
    A finite group stored as a Cayley table over the element indices 0..order-1. Index 0 is the identity.

    Instances are immutable after construction; the table and all derived arrays are read-only numpy arrays, so a
    group can be shared freely between worker processes.
    """

    def __init__(self, mul, spec=None, labels=None, validate=True):
        """
        :param mul: Square array with mul[a, b] the index of the product a*b
        :param spec: The GroupSpec the table was built from, if any
        :param labels: Optional list of human readable element names
        :param validate: Check the group axioms (skipped for tables that are groups by construction)
        """
        table = np.ascontiguousarray(mul, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidSpec("A multiplication table must be a non-empty square array, got shape {}".format(
                table.shape))

        self._order = int(table.shape[0])
        check_group_order(self._order)

        if validate:
            _check_latin_square(table)

        self._mul = table
        self._mul.setflags(write=False)
        self._inv = np.argmax(table == 0, axis=1).astype(np.int32)
        self._inv.setflags(write=False)
        self._spec = spec

        if labels is not None and len(labels) != self._order:
            raise InvalidSpec("Expected {} element labels, got {}".format(self._order, len(labels)))
        self._labels = list(labels) if labels is not None else None

        if validate:
            _check_associativity(table)

    @property
    def order(self):
        return self._order

    @property
    def mul(self):
        return self._mul

    @property
    def inv(self):
        return self._inv

    @property
    def identity(self):
        return 0

    @property
    def spec(self):
        return self._spec

    @property
    def labels(self):
        return self._labels

    @property
    def elements(self):
        return np.arange(self._order)

    def __len__(self):
        return self._order

    def __repr__(self):
        name = str(self._spec) if self._spec is not None else "table"
        return "Group({}, order={})".format(name, self._order)

    def multiply(self, a, b):
        return int(self._mul[a, b])

    def inverse(self, x):
        return int(self._inv[x])

    def power(self, x, k):
        result = 0
        base = int(x) if k >= 0 else int(self._inv[x])
        for _ in range(abs(k)):
            result = int(self._mul[result, base])
        return result

    def label(self, x):
        if self._labels is None:
            return str(int(x))
        return self._labels[x]

    @cached_property
    def element_orders(self):
        """ Array with the order of every element """
        orders = np.zeros(self._order, dtype=np.int64)
        current = self.elements.copy()
        k = 1
        while True:
            hit = (current == 0) & (orders == 0)
            orders[hit] = k
            if (orders > 0).all():
                break
            current = self._mul[current, self.elements]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def conjugation(self):
        """ Array C with C[g, x] = g x g^-1 """
        table = self._mul[self._mul, self._inv[:, None]]
        table.setflags(write=False)
        return table

    @cached_property
    def generators(self):
        """ A small generating set, chosen greedily by decreasing element order """
        from normlift.groups.group_utils import subgroup_generators

        return subgroup_generators(self, np.arange(self._order))

    @cached_property
    def is_abelian(self):
        return bool((self._mul == self._mul.T).all())


def _check_latin_square(table):
    n = table.shape[0]
    expected = np.arange(n)
    if (table < 0).any() or (table >= n).any():
        raise InvalidSpec("Multiplication table entries must lie in 0..{}".format(n - 1))
    if not (table[0] == expected).all() or not (table[:, 0] == expected).all():
        raise InvalidSpec("Element 0 must be a two-sided identity")
    if not (np.sort(table, axis=1) == expected).all() or not (np.sort(table, axis=0) == expected[:, None]).all():
        raise InvalidSpec("Multiplication table is not a Latin square, so inverses are not unique")


def _check_associativity(table):
    n = table.shape[0]
    if n <= setting("associativity", "exhaustive_order"):
        rows = max(1, _CHUNK_CELLS // (n * n))
        for start in range(0, n, rows):
            block = table[start:start + rows]
            left = table[block]          # (ab)c
            right = block[:, table]      # a(bc)
            if not (left == right).all():
                i, b, c = np.argwhere(left != right)[0]
                raise InvalidSpec("Multiplication is not associative on ({}, {}, {})".format(start + i, b, c))
        return

    sample_size = setting("associativity", "sample_size")
    rng = np.random.default_rng(setting("associativity", "seed"))
    a, b, c = rng.integers(0, n, size=(3, sample_size))
    bad = table[table[a, b], c] != table[a, table[b, c]]
    if bad.any():
        i = int(np.argmax(bad))
        raise InvalidSpec("Multiplication is not associative on ({}, {}, {})".format(a[i], b[i], c[i]))
    logger.warning("Associativity of the order %d table was checked on %d sampled triples", n, sample_size)
