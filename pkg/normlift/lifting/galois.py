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
"""
The Galois connection between G-transfer systems on Sub(G) and categorical transfer systems on Sub(G)/G: the
preimage and generated system along the quotient map pi, and the pushforward of a G-transfer system to classes.
"""

import logging

import numpy as np

from normlift.lattice.class_poset import quotient_poset
from normlift.transfer.carrier import get_carrier
from normlift.transfer.closure import g_closure
from normlift.transfer.relation import Relation
from normlift.utils.errors import CarrierMismatch
from normlift.utils.parallel import progress_bar

logger = logging.getLogger(__name__)


def _check_class_poset(lattice, class_poset):
    if getattr(class_poset, "lattice", None) is not lattice:
        raise CarrierMismatch("The class poset was not computed from this lattice")


def _check_relation(relation, source):
    if relation.source is not source:
        raise CarrierMismatch("The relation lives on {}, not on {}".format(relation.source, source))


def _class_indicator(lattice):
    indicator = np.zeros((lattice.size, lattice.num_classes), dtype=np.float32)
    indicator[np.arange(lattice.size), lattice.class_of] = 1.0
    return indicator


def pi_preimage(lattice, class_poset, Rc):
    """
    K -> H is in the preimage iff K <= H and [K] -> [H] is in Rc

    :raises CarrierMismatch: if Rc does not live on the class poset of the lattice
    """
    _check_class_poset(lattice, class_poset)
    _check_relation(Rc, class_poset)
    pi = lattice.class_of
    return Relation(lattice, lattice.leq & Rc.pairs[np.ix_(pi, pi)])


def pi_pushforward(lattice, Rg):
    """
    [K] -> [H] is in the pushforward iff some K' in [K] and H' in [H] have K' -> H' in Rg. The result lives on
    quotient_poset(lattice).
    """
    _check_relation(Rg, lattice)
    indicator = _class_indicator(lattice)
    counts = indicator.T @ Rg.pairs.astype(np.float32) @ indicator
    return Relation(quotient_poset(lattice), counts > 0)


def pi_star(lattice, class_poset, Rc):
    """ The G-transfer system generated by the preimage of Rc """
    return g_closure(lattice, pi_preimage(lattice, class_poset, Rc))


def lift_witness(lattice, class_poset, Rc):
    """
    The lexicographically least class arrow in pi_*(pi^*(Rc)) but not in Rc, or None when Rc is liftable
    """
    roundtrip = pi_pushforward(lattice, pi_star(lattice, class_poset, Rc))
    extra = roundtrip.pairs & ~Rc.pairs
    if not extra.any():
        return None
    return tuple(int(x) for x in np.argwhere(extra)[0])


def is_liftable(lattice, class_poset, Rc):
    """ Rc is liftable iff it equals pi_*(pi^*(Rc)); only meaningful for lossless groups """
    return lift_witness(lattice, class_poset, Rc) is None


def is_liftable_via_meets(lattice, class_poset, Rc):
    """
    Liftability through intersections: for every [K] -> [H] in Rc, every H in its class and all K, K' <= H in the
    class [K], the arrow [K ∩ K'] -> [H] must be in Rc.
    """
    _check_class_poset(lattice, class_poset)
    _check_relation(Rc, class_poset)
    pi = lattice.class_of
    for a, b in Rc.arrows():
        in_class = pi == a
        for H in class_poset.members(b):
            below = np.flatnonzero(in_class & lattice.leq[:, H])
            for K in below:
                meet_classes = pi[lattice.meets(K, below)]
                if not Rc.pairs[meet_classes, b].all():
                    return False
    return True


def check_adjunction(lattice, Rg, Rc):
    """ pi^*(Rc) <= Rg iff Rc <= pi_*(Rg) """
    class_poset = quotient_poset(lattice)
    left = pi_star(lattice, class_poset, Rc) <= Rg
    right = Rc <= pi_pushforward(lattice, Rg)
    return left == right


def check_unit(lattice, Rg):
    """ Rg = pi^{-1}(pi_*(Rg)) = pi^*(pi_*(Rg)), which holds for every G-transfer system of a lossless group """
    class_poset = quotient_poset(lattice)
    pushed = pi_pushforward(lattice, Rg)
    return Rg == pi_preimage(lattice, class_poset, pushed) and Rg == pi_star(lattice, class_poset, pushed)


def lossy_unit_witness(lattice, progress=False):
    """
    Searches the closures of single arrow orbits, in atom order, for a G-transfer system Rg with
    Rg != pi^*(pi_*(Rg)).

    :return: (seed arrow, Rg) or None
    """
    carrier = get_carrier(lattice)
    class_poset = quotient_poset(lattice)
    for K, H in progress_bar(carrier.atom_reps, progress, desc="Single orbit closures"):
        Rg = g_closure(lattice, [(K, H)])
        if pi_star(lattice, class_poset, pi_pushforward(lattice, Rg)) != Rg:
            logger.info("Unit fails for the closure of %d -> %d", K, H)
            return (int(K), int(H)), Rg
    return None
