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

from normlift.transfer.carrier import get_carrier
from normlift.utils.dot_utils import hasse_dot
from normlift.utils.errors import CarrierMismatch, InvalidArrow
from normlift.utils.file_utils import validate_json
from normlift.utils.types import CarrierType


def arrow_matrix(carrier, arrows):
    """
    Reflexive relation matrix with the given arrows. Raises InvalidArrow for pairs that are out of range or not
    comparable in the carrier order.
    """
    pairs = np.eye(carrier.size, dtype=bool)
    for arrow in arrows:
        i, j = (int(x) for x in arrow)
        if not (0 <= i < carrier.size and 0 <= j < carrier.size):
            raise InvalidArrow("Arrow {} -> {} is out of range for a carrier of size {}".format(i, j, carrier.size))
        if not carrier.leq[i, j]:
            raise InvalidArrow("Arrow {} -> {} does not respect the order: {} is not below {}".format(i, j, i, j))
        pairs[i, j] = True
    return pairs


class Relation:
    """
    A reflexive relation refining the order of a carrier (a SubgroupLattice or a FinitePoset), stored as a boolean
    matrix over carrier indices.
    """

    def __init__(self, source, pairs):
        self._carrier = get_carrier(source)
        pairs = np.array(pairs, dtype=bool)
        if pairs.shape != (self._carrier.size, self._carrier.size):
            raise CarrierMismatch("Expected a {0}x{0} relation, got shape {1}".format(self._carrier.size, pairs.shape))
        if (pairs & ~self._carrier.leq).any():
            i, j = np.argwhere(pairs & ~self._carrier.leq)[0]
            raise InvalidArrow("Arrow {} -> {} does not respect the order".format(i, j))
        pairs[np.diag_indices(self._carrier.size)] = True
        pairs.setflags(write=False)
        self._pairs = pairs
        self._key = np.packbits(pairs).tobytes()

    @classmethod
    def from_arrows(cls, source, arrows):
        return cls(source, arrow_matrix(get_carrier(source), arrows))

    @classmethod
    def reflexive(cls, source):
        return cls(source, np.eye(get_carrier(source).size, dtype=bool))

    @classmethod
    def full(cls, source):
        return cls(source, get_carrier(source).leq)

    @property
    def carrier(self):
        return self._carrier

    @property
    def source(self):
        return self._carrier.source

    @property
    def pairs(self):
        return self._pairs

    @property
    def key(self):
        """ Canonical form: the relation matrix flattened in carrier index order """
        return self._key

    def __contains__(self, arrow):
        i, j = arrow
        return bool(self._pairs[i, j])

    def __eq__(self, other):
        return isinstance(other, Relation) and other._carrier is self._carrier and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __le__(self, other):
        """ Containment of relations on the same carrier """
        self._same_carrier(other)
        return bool((self._pairs <= other._pairs).all())

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        """ Lexicographic order of canonical forms, used for stable output """
        return self._key < other._key

    def __repr__(self):
        return "{}({} arrows on {} elements)".format(type(self).__name__, self.num_arrows, self._carrier.size)

    def _same_carrier(self, other):
        if other._carrier is not self._carrier:
            raise CarrierMismatch("The relations live on different carriers")

    def arrows(self):
        """ Non-reflexive pairs in lexicographic order """
        strict = self._pairs & self._carrier.strict
        return [(int(i), int(j)) for i, j in np.argwhere(strict)]

    @property
    def num_arrows(self):
        return int((self._pairs & self._carrier.strict).sum())

    def union(self, other):
        self._same_carrier(other)
        return Relation(self.source, self._pairs | other._pairs)

    def is_reflexive_only(self):
        return self.num_arrows == 0

    def to_json(self):
        data = {"carrier": str(self._carrier.carrier_type), "arrows": [[i, j] for i, j in self.arrows()]}
        spec = self._carrier.group_spec()
        if spec is not None:
            data["group"] = spec
        return validate_json(data, "transfer_system")

    def to_dot(self):
        labels = self._carrier.labels
        hasse = self.source.hasse_edges()
        return hasse_dot(labels, hasse, extra_edges=self.arrows())


class GTransferSystem(Relation):
    """ A relation on Sub(G) satisfying the G-transfer system axioms """


class CatTransferSystem(Relation):
    """ A relation on a poset satisfying the categorical transfer system axioms """


def relation_from_json(data, source):
    """
    Reads {"carrier": "subgroups"|"poset", "group": spec, "arrows": [[i, j], ...]} against a lattice or poset. The
    relation is returned as is; use the validators to check the transfer system axioms.
    """
    validate_json(data, "transfer_system")
    carrier = get_carrier(source)
    carrier_type = CarrierType.from_str(data["carrier"])
    if carrier_type != carrier.carrier_type:
        raise CarrierMismatch("The document describes a {} relation, but the carrier is a {}".format(
            carrier_type, carrier.carrier_type))
    return Relation.from_arrows(source, data["arrows"])
