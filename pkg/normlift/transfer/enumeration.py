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

import itertools
import logging

import numpy as np

from normlift.transfer.carrier import get_carrier
from normlift.transfer.closure import get_closure_engine
from normlift.transfer.relation import CatTransferSystem, GTransferSystem
from normlift.transfer.validators import is_cat_transfer_system, is_g_transfer_system
from normlift.utils.errors import CarrierMismatch, TooLarge
from normlift.utils.parallel import parallel_map, progress_bar
from normlift.utils.settings import limit
from normlift.utils.types import CarrierType, EnumerationStrategy

logger = logging.getLogger(__name__)

# Subsets handed to one worker at a time by the subsets strategy
_SUBSET_BLOCK = 1 << 12


def _check_atoms(carrier, bound_name, what):
    bound = limit(bound_name)
    if carrier.num_atoms > bound:
        raise TooLarge("{} is limited to {} atoms, the carrier has {}".format(what, bound, carrier.num_atoms))


def _next_closure(engine, progress):
    """
    Closed atom sets in lectic order: each step finds the largest atom i outside the current set A whose closure
    with A ∩ {0..i-1} adds nothing below i.
    """
    m = engine.carrier.num_atoms
    current = engine.close(np.zeros(m, dtype=bool))
    found = [current]
    bar = progress_bar(None, progress, desc="Transfer systems")
    bar.update(1)
    while True:
        step = None
        for i in range(m - 1, -1, -1):
            if current[i]:
                continue
            seed = current.copy()
            seed[i:] = False
            seed[i] = True
            candidate = engine.close(seed)
            if (candidate[:i] == current[:i]).all():
                step = candidate
                break
        if step is None:
            break
        current = step
        found.append(current)
        bar.update(1)
    bar.close()
    return found


def _close_subset_block(engine, block):
    start, stop = block
    m = engine.carrier.num_atoms
    weights = np.arange(m)
    closed = {}
    for code in range(start, stop):
        seed = ((code >> weights) & 1).astype(bool)
        result = engine.close(seed)
        closed[np.packbits(result).tobytes()] = result
    return list(closed.values())


def _subsets(engine, threads, progress):
    m = engine.carrier.num_atoms
    total = 2 ** m
    blocks = [(s, min(s + _SUBSET_BLOCK, total)) for s in range(0, total, _SUBSET_BLOCK)]
    results = parallel_map(_close_subset_block, blocks, context=engine, threads=threads, progress=progress,
                           desc="Atom subsets")
    unique = {}
    for block in results:
        for atoms in block:
            unique.setdefault(np.packbits(atoms).tobytes(), atoms)
    return list(unique.values())


def _naive(source, carrier, progress):
    pairs = [tuple(p) for p in np.argwhere(carrier.strict)]
    bound = limit("naive_filter_pairs")
    if len(pairs) > bound:
        raise TooLarge("The naive filter is limited to {} comparable pairs, the carrier has {}".format(
            bound, len(pairs)))
    validator = is_g_transfer_system if carrier.carrier_type == CarrierType.SUBGROUPS else is_cat_transfer_system
    found = []
    subsets = itertools.chain.from_iterable(itertools.combinations(pairs, k) for k in range(len(pairs) + 1))
    for subset in progress_bar(subsets, progress, desc="Relations", total=2 ** len(pairs)):
        relation = np.eye(carrier.size, dtype=bool)
        for i, j in subset:
            relation[i, j] = True
        if validator(source, relation):
            found.append(carrier.atoms_from_pairs(relation))
    return found


def enumerate_transfer_systems(source, strategy=EnumerationStrategy.NEXT_CLOSURE, threads=1, progress=False):
    """
    All transfer systems on a SubgroupLattice (G-transfer systems) or a FinitePoset (categorical transfer systems),
    sorted by canonical form.

    :param source: SubgroupLattice or FinitePoset
    :param strategy: EnumerationStrategy or its name; next_closure (default), subsets or naive
    :param threads: Worker processes for the subsets strategy
    :param progress: Show a progress bar
    :return: list of GTransferSystem or CatTransferSystem
    :raises TooLarge: if the carrier is beyond the bound of the chosen strategy
    """
    if not isinstance(strategy, EnumerationStrategy):
        strategy = EnumerationStrategy.from_str(strategy)

    engine = get_closure_engine(source)
    carrier = engine.carrier
    if strategy == EnumerationStrategy.NEXT_CLOSURE:
        _check_atoms(carrier, "closure_atoms", "Closure enumeration")
        atom_sets = _next_closure(engine, progress)
    elif strategy == EnumerationStrategy.SUBSETS:
        _check_atoms(carrier, "subset_atoms", "Subset enumeration")
        atom_sets = _subsets(engine, threads, progress)
    else:
        atom_sets = _naive(source, carrier, progress)

    cls = GTransferSystem if carrier.carrier_type == CarrierType.SUBGROUPS else CatTransferSystem
    systems = sorted(cls(source, carrier.pairs_from_atoms(atoms)) for atoms in atom_sets)
    logger.info("Found %d %s transfer systems with the %s strategy", len(systems), carrier.carrier_type, strategy)
    return systems


def enumerate_g_transfer_systems(lattice, strategy=EnumerationStrategy.NEXT_CLOSURE, threads=1, progress=False):
    """ All G-transfer systems on Sub(G) """
    if get_carrier(lattice).carrier_type != CarrierType.SUBGROUPS:
        raise CarrierMismatch("enumerate_g_transfer_systems needs a SubgroupLattice")
    return enumerate_transfer_systems(lattice, strategy, threads, progress)


def enumerate_cat_transfer_systems(poset, strategy=EnumerationStrategy.NEXT_CLOSURE, threads=1, progress=False):
    """ All categorical transfer systems on a poset """
    if get_carrier(poset).carrier_type != CarrierType.POSET:
        raise CarrierMismatch("enumerate_cat_transfer_systems needs a FinitePoset")
    return enumerate_transfer_systems(poset, strategy, threads, progress)
