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

import abc
import logging
from functools import cached_property

import numpy as np

from normlift.lattice.subgroup_lattice import SubgroupLattice
from normlift.posets.constructions import maximal_lower_bounds
from normlift.posets.finite_poset import FinitePoset
from normlift.utils.errors import CarrierMismatch
from normlift.utils.types import CarrierType

logger = logging.getLogger(__name__)


class BaseCarrier(abc.ABC):
    """
    Abstract base class for the ordered sets a transfer system lives on.

    Non-reflexive comparable pairs are grouped into atoms: the smallest sets of arrows a transfer system can contain
    independently of each other. On a subgroup lattice an atom is the conjugation orbit of an arrow; on a poset it is
    a single arrow. atom_id[i, j] is the atom of the arrow i -> j, or -1 when i = j or i is not below j.
    """

    def __init__(self, source, leq):
        self._source = source
        self._leq = leq
        self._strict = leq & ~np.eye(leq.shape[0], dtype=bool)
        self._strict.setflags(write=False)

    @property
    @abc.abstractmethod
    def carrier_type(self):
        pass

    @abc.abstractmethod
    def _compute_atoms(self):
        """ Returns (atom_id matrix, list of atoms as (k, 2) pair arrays in lexicographic order) """
        pass

    @abc.abstractmethod
    def restriction_pairs(self, i, j):
        """ Arrows forced by the restriction axiom from the arrow i -> j, as a (k, 2) array """
        pass

    @property
    def source(self):
        return self._source

    @property
    def size(self):
        return self._leq.shape[0]

    @property
    def leq(self):
        return self._leq

    @property
    def strict(self):
        return self._strict

    @property
    def labels(self):
        return self._source.labels if isinstance(self._source, FinitePoset) else [
            str(o) for o in self._source.orders]

    @cached_property
    def _atoms(self):
        atom_id, atoms = self._compute_atoms()
        atom_id.setflags(write=False)
        logger.debug("%s carrier with %d elements has %d atoms", self.carrier_type, self.size, len(atoms))
        return atom_id, atoms

    @property
    def atom_id(self):
        return self._atoms[0]

    @property
    def atoms(self):
        return self._atoms[1]

    @property
    def num_atoms(self):
        return len(self._atoms[1])

    @cached_property
    def atom_reps(self):
        """ (num_atoms, 2) array with the least arrow of every atom """
        if not self.atoms:
            return np.zeros((0, 2), dtype=np.int64)
        return np.array([atom[0] for atom in self.atoms], dtype=np.int64)

    def pairs_from_atoms(self, selected):
        """ Reflexive relation matrix containing exactly the selected atoms """
        extended = np.append(np.asarray(selected, dtype=bool), False)
        pairs = extended[self.atom_id]
        pairs[np.diag_indices(self.size)] = True
        return pairs

    def atoms_from_pairs(self, pairs):
        """ Atoms with at least one arrow in the relation """
        selected = np.zeros(self.num_atoms, dtype=bool)
        hit = self.atom_id[pairs & self._strict]
        selected[hit] = True
        return selected

    def group_spec(self):
        return None

    def check_source(self, source):
        if source is not self._source:
            raise CarrierMismatch("The relation lives on {}, not on {}".format(self._source, source))


class SubgroupCarrier(BaseCarrier):
    """ Sub(G) with conjugation orbits of arrows as atoms """

    def __init__(self, lattice):
        super().__init__(lattice, lattice.leq)

    @property
    def carrier_type(self):
        return CarrierType.SUBGROUPS

    @property
    def lattice(self):
        return self._source

    def _compute_atoms(self):
        conj = self._source.conj_action
        atom_id = np.full((self.size, self.size), -1, dtype=np.int64)
        atoms = []
        for i, j in np.argwhere(self._strict):
            if atom_id[i, j] >= 0:
                continue
            orbit = np.unique(np.stack([conj[:, i], conj[:, j]], axis=1), axis=0)
            atom_id[orbit[:, 0], orbit[:, 1]] = len(atoms)
            atoms.append(orbit)
        return atom_id, atoms

    def restriction_pairs(self, i, j):
        below = self._source.down_set(j)
        return np.stack([self._source.meets(i, below), below], axis=1)

    def group_spec(self):
        spec = self._source.group.spec
        return str(spec) if spec is not None else None


class PosetCarrier(BaseCarrier):
    """ A finite poset with single arrows as atoms; restriction uses maximal lower bounds """

    def __init__(self, poset):
        super().__init__(poset, poset.leq)

    @property
    def carrier_type(self):
        return CarrierType.POSET

    @property
    def poset(self):
        return self._source

    def _compute_atoms(self):
        atom_id = np.full((self.size, self.size), -1, dtype=np.int64)
        pairs = np.argwhere(self._strict)
        atom_id[pairs[:, 0], pairs[:, 1]] = np.arange(len(pairs))
        return atom_id, [pair[None, :] for pair in pairs]

    def restriction_pairs(self, i, j):
        forced = []
        for z in self._source.down_set(j):
            for w in maximal_lower_bounds(self._source, i, z):
                forced.append((w, z))
        return np.array(forced, dtype=np.int64).reshape(-1, 2)

    def group_spec(self):
        lattice = getattr(self._source, "lattice", None)
        if lattice is not None and lattice.group.spec is not None:
            return str(lattice.group.spec)
        return None


def get_carrier(source):
    """
    Returns the carrier of a SubgroupLattice or FinitePoset, creating it once per object
    """
    carrier = getattr(source, "_transfer_carrier", None)
    if carrier is None:
        if isinstance(source, SubgroupLattice):
            carrier = SubgroupCarrier(source)
        elif isinstance(source, FinitePoset):
            carrier = PosetCarrier(source)
        else:
            raise CarrierMismatch("Transfer systems live on a SubgroupLattice or a FinitePoset, not on {}".format(
                type(source).__name__))
        source._transfer_carrier = carrier
    return carrier
