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

import numpy as np

from normlift.transfer.carrier import get_carrier
from normlift.transfer.relation import CatTransferSystem, GTransferSystem, Relation, arrow_matrix
from normlift.utils.errors import CarrierMismatch
from normlift.utils.types import CarrierType

logger = logging.getLogger(__name__)


class ClosureEngine:
    """
    Least transfer system containing a set of atoms, computed as a worklist fixpoint of the restriction and
    transitivity rules. Each rule only has to be applied to the representative arrow of an atom, because atoms are
    conjugation orbits. Per atom rule data is computed on first use and cached.
    """

    def __init__(self, carrier):
        self._carrier = carrier
        self._restriction = {}
        self._outgoing = {}
        self._incoming = {}

    @property
    def carrier(self):
        return self._carrier

    def restriction_atoms(self, a):
        if a not in self._restriction:
            i, j = self._carrier.atom_reps[a]
            forced = self._carrier.restriction_pairs(i, j)
            ids = self._carrier.atom_id[forced[:, 0], forced[:, 1]]
            self._restriction[a] = np.unique(ids[ids >= 0])
        return self._restriction[a]

    def outgoing(self, a):
        """ (b, c): composing the representative of a with an arrow of atom b[k] gives an arrow of atom c[k] """
        if a not in self._outgoing:
            i, j = self._carrier.atom_reps[a]
            above = np.flatnonzero(self._carrier.strict[j])
            self._outgoing[a] = (self._carrier.atom_id[j, above], self._carrier.atom_id[i, above])
        return self._outgoing[a]

    def incoming(self, a):
        """ (b, c): composing an arrow of atom b[k] with the representative of a gives an arrow of atom c[k] """
        if a not in self._incoming:
            i, j = self._carrier.atom_reps[a]
            below = np.flatnonzero(self._carrier.strict[:, i])
            self._incoming[a] = (self._carrier.atom_id[below, i], self._carrier.atom_id[below, j])
        return self._incoming[a]

    def close(self, selected):
        """
        :param selected: Boolean mask over atoms
        :return: Boolean mask of the atoms of the generated transfer system
        """
        closed = np.array(selected, dtype=bool, copy=True)
        worklist = list(np.flatnonzero(closed))
        while worklist:
            a = worklist.pop()
            for forced in (self.restriction_atoms(a),
                           self.outgoing(a)[1][closed[self.outgoing(a)[0]]],
                           self.incoming(a)[1][closed[self.incoming(a)[0]]]):
                fresh = forced[~closed[forced]]
                if fresh.size:
                    fresh = np.unique(fresh)
                    closed[fresh] = True
                    worklist.extend(fresh.tolist())
        return closed


def get_closure_engine(source):
    carrier = get_carrier(source)
    engine = getattr(carrier, "_closure_engine", None)
    if engine is None:
        engine = ClosureEngine(carrier)
        carrier._closure_engine = engine
    return engine


def _seed_pairs(carrier, seed):
    if isinstance(seed, Relation):
        carrier.check_source(seed.source)
        return seed.pairs
    if isinstance(seed, np.ndarray) and seed.dtype == bool:
        return arrow_matrix(carrier, np.argwhere(seed))
    return arrow_matrix(carrier, seed)


def close_relation(source, seed):
    """ Least transfer system on the carrier of source containing seed (arrows, a matrix or a Relation) """
    engine = get_closure_engine(source)
    carrier = engine.carrier
    pairs = _seed_pairs(carrier, seed)
    closed = engine.close(carrier.atoms_from_pairs(pairs))
    cls = GTransferSystem if carrier.carrier_type == CarrierType.SUBGROUPS else CatTransferSystem
    result = cls(source, carrier.pairs_from_atoms(closed))
    logger.debug("Closure of %d seed arrows has %d arrows", int((pairs & carrier.strict).sum()), result.num_arrows)
    return result


def g_closure(lattice, seed=()):
    """
    The least G-transfer system on Sub(G) containing the seed arrows

    :param lattice: SubgroupLattice
    :param seed: Iterable of (K, H) subgroup index pairs with K <= H, a boolean matrix or a Relation
    :return: GTransferSystem
    :raises InvalidArrow: if a seed pair is not a containment
    """
    if get_carrier(lattice).carrier_type != CarrierType.SUBGROUPS:
        raise CarrierMismatch("g_closure needs a SubgroupLattice")
    return close_relation(lattice, seed)


def cat_closure(poset, seed=()):
    """
    The least categorical transfer system on a poset containing the seed arrows

    :param poset: FinitePoset
    :param seed: Iterable of (x, y) pairs with x <= y, a boolean matrix or a Relation
    :return: CatTransferSystem
    :raises InvalidArrow: if a seed pair does not respect the order
    """
    if get_carrier(poset).carrier_type != CarrierType.POSET:
        raise CarrierMismatch("cat_closure needs a FinitePoset")
    return close_relation(poset, seed)
