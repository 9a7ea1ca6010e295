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

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from normlift.posets.constructions import is_lattice, meet
from normlift.transfer.carrier import get_carrier
from normlift.utils.errors import CarrierMismatch
from normlift.utils.types import CarrierType


@dataclass(frozen=True)
class ValidationResult:
    """
    Outcome of an axiom check. Falsy when an axiom fails; axiom names the first failing axiom and witness holds the
    indices that violate it.
    """
    ok: bool
    axiom: Optional[str] = None
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "axiom": self.axiom, "witness": list(self.witness) if self.witness else None}


def _first(mask):
    return tuple(int(x) for x in np.argwhere(mask)[0])


def _check_order_axioms(carrier, pairs):
    """ Refinement, reflexivity and transitivity, shared by both kinds of transfer system """
    if (pairs & ~carrier.leq).any():
        return ValidationResult(False, "refinement", _first(pairs & ~carrier.leq))
    diagonal = pairs[np.diag_indices(carrier.size)]
    if not diagonal.all():
        i = int(np.flatnonzero(~diagonal)[0])
        return ValidationResult(False, "reflexivity", (i, i))
    step = pairs.astype(np.int32)
    missing = ((step @ step) > 0) & ~pairs
    if missing.any():
        i, j = _first(missing)
        k = int(np.flatnonzero(pairs[i] & pairs[:, j])[0])
        return ValidationResult(False, "transitivity", (i, k, j))
    return None


def _check_restriction(carrier, pairs, arrows):
    for i, j in arrows:
        forced = carrier.restriction_pairs(i, j)
        missing = ~pairs[forced[:, 0], forced[:, 1]]
        if missing.any():
            w, z = forced[np.argmax(missing)]
            return ValidationResult(False, "restriction", (int(i), int(j), int(w), int(z)))
    return None


def _relation_pairs(source, R, carrier_type):
    carrier = get_carrier(source)
    if carrier.carrier_type != carrier_type:
        raise CarrierMismatch("Expected a {} carrier, got {}".format(carrier_type, carrier.carrier_type))
    if hasattr(R, "carrier"):
        carrier.check_source(R.source)
        return carrier, np.asarray(R.pairs, dtype=bool)
    return carrier, np.asarray(R, dtype=bool)


def is_g_transfer_system(lattice, R):
    """
    Checks the G-transfer system axioms on Sub(G): refinement of inclusion, reflexivity, transitivity, closure under
    conjugation and closure under restriction ((K ∩ L) -> L whenever K -> H and L <= H).

    :param lattice: SubgroupLattice
    :param R: Relation on the lattice, or a boolean matrix
    :return: ValidationResult; conjugation witnesses are (K, H, g), restriction witnesses (K, H, K ∩ L, L)
    """
    carrier, pairs = _relation_pairs(lattice, R, CarrierType.SUBGROUPS)
    failure = _check_order_axioms(carrier, pairs)
    if failure is not None:
        return failure

    conj = lattice.conj_action
    for g in lattice.group.generators:
        image = pairs[np.ix_(conj[g], conj[g])]
        if (pairs & ~image).any():
            i, j = _first(pairs & ~image)
            return ValidationResult(False, "conjugation", (i, j, int(g)))

    # Closed under conjugation, so one arrow per orbit suffices
    present = carrier.atoms_from_pairs(pairs)
    failure = _check_restriction(carrier, pairs, carrier.atom_reps[present])
    return failure if failure is not None else ValidationResult(True)


def is_cat_transfer_system(poset, R):
    """
    Checks the categorical transfer system axioms on a poset: a partial order refining <= such that x -> y and z <= y
    imply w -> z for every maximal lower bound w of x and z.

    :param poset: FinitePoset
    :param R: Relation on the poset, or a boolean matrix
    :return: ValidationResult; restriction witnesses are (x, y, w, z)
    """
    carrier, pairs = _relation_pairs(poset, R, CarrierType.POSET)
    failure = _check_order_axioms(carrier, pairs)
    if failure is not None:
        return failure
    arrows = np.argwhere(pairs & carrier.strict)
    failure = _check_restriction(carrier, pairs, arrows)
    return failure if failure is not None else ValidationResult(True)


def validate_relation(R):
    """ Dispatches to the validator matching the relation's carrier """
    if R.carrier.carrier_type == CarrierType.SUBGROUPS:
        return is_g_transfer_system(R.source, R)
    return is_cat_transfer_system(R.source, R)


def satisfies_meet_rule(poset, R):
    """ The unique meet form of restriction on a lattice: x -> y and z <= y imply (x ∧ z) -> z """
    carrier, pairs = _relation_pairs(poset, R, CarrierType.POSET)
    if _check_order_axioms(carrier, pairs) is not None:
        return False
    for x, y in np.argwhere(pairs & carrier.strict):
        for z in poset.down_set(y):
            if not pairs[meet(poset, x, z), z]:
                return False
    return True


def mlb_rule_agrees_with_meet(poset, R):
    """
    On a lattice, the maximal lower bound rule and the unique meet rule must give the same verdict
    """
    if not is_lattice(poset):
        raise CarrierMismatch("The meet rule is only defined on lattices")
    return bool(is_cat_transfer_system(poset, R)) == satisfies_meet_rule(poset, R)
