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
Split transfer systems on SL2(F_p): a triple (R_D, R_I, R_U) of categorical transfer systems on D_G, I_G and U_G.
A G-transfer system decomposes into a triple, and a valid triple lifts back to a relation on Sub(G).
"""

import logging
from dataclasses import dataclass

import numpy as np

from normlift.lifting.galois import pi_pushforward
from normlift.transfer.relation import CatTransferSystem, Relation
from normlift.transfer.validators import ValidationResult, is_cat_transfer_system
from normlift.utils.errors import CarrierMismatch, InvalidTriple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitTransferSystem:
    R_D: Relation
    R_I: Relation
    R_U: Relation

    def to_json(self):
        return {name: [[i, j] for i, j in getattr(self, name).arrows()] for name in ("R_D", "R_I", "R_U")}


def _first(mask):
    return tuple(int(x) for x in np.argwhere(mask)[0])


def decompose(frame, Rg):
    """
    Splits a relation on Sub(G) into a triple:

    - R_D: the pushforward along the H_eps conjugation quotient of Rg restricted to Sub(H_eps) together with G, so
      arrows K -> G with K <= H_eps reach the top vertex of D_G
    - R_I: R_D restricted to I_G
    - R_U: the pushforward to Sub(G)/G restricted to U_G

    :param frame: Sl2Frame
    :param Rg: Relation on frame.lattice
    :return: SplitTransferSystem
    """
    L = frame.lattice
    if Rg.source is not L:
        raise CarrierMismatch("The relation does not live on the subgroup lattice of SL2({})".format(frame.p))

    domain = np.append(frame.inside_h_eps, L.top)
    indicator = np.zeros((domain.size, frame.D.size), dtype=np.float32)
    indicator[np.arange(domain.size - 1), frame.d_class_of[frame.inside_h_eps]] = 1.0
    indicator[-1, frame.d_top] = 1.0
    restricted = Rg.pairs[np.ix_(domain, domain)].astype(np.float32)
    r_d = (indicator.T @ restricted @ indicator) > 0

    r_i = r_d[np.ix_(frame.phi_D, frame.phi_D)]
    r_u = pi_pushforward(L, Rg).pairs[np.ix_(frame.psi_U, frame.psi_U)]
    return SplitTransferSystem(CatTransferSystem(frame.D, r_d), CatTransferSystem(frame.I, r_i),
                               CatTransferSystem(frame.U, r_u))


def is_split_transfer_system(frame, triple):
    """
    Checks that every component is a categorical transfer system, C4 saturation (one arrow [C4] -> [G] in R_D forces
    all of them), and compatibility: phi_D and phi_U carry R_I onto the parts of R_D and R_U between their images.

    :return: ValidationResult; component failures are reported as "R_D:<axiom>" and so on
    """
    for name, poset in (("R_D", frame.D), ("R_I", frame.I), ("R_U", frame.U)):
        result = is_cat_transfer_system(poset, getattr(triple, name))
        if not result:
            return ValidationResult(False, "{}:{}".format(name, result.axiom), result.witness)

    r_d, r_i, r_u = triple.R_D.pairs, triple.R_I.pairs, triple.R_U.pairs
    c4 = frame.c4_vertices
    hits = r_d[c4, frame.d_top]
    if hits.any() and not hits.all():
        return ValidationResult(False, "c4_saturation", (int(c4[np.argmax(hits)]), int(c4[np.argmax(~hits)])))

    src, dst = np.nonzero(r_i)
    for name, phi, target in (("phi_D", frame.phi_D, r_d), ("phi_U", frame.phi_U, r_u)):
        image = np.zeros_like(target)
        image[phi[src], phi[dst]] = True
        between = np.zeros_like(target)
        between[np.ix_(phi, phi)] = True
        mismatch = image != (target & between)
        if mismatch.any():
            return ValidationResult(False, "{}_compatibility".format(name), _first(mismatch))
    return ValidationResult(True)


def _not_into_eps(frame, X):
    return InvalidTriple("Subgroup {} of SL2({}) is neither inside a universally lossless maximal subgroup nor "
                         "conjugate into H_eps".format(X, frame.p))


def lift_split(frame, triple, validate=True):
    """
    The relation on Sub(G) lifted from a triple. For K <= H:

    - H = G and K inside a universally lossless maximal subgroup: K -> G iff [K] -> [G] in R_U
    - H = G otherwise: K -> G iff [gK] -> [G] in R_D, with gK inside H_eps
    - H < G inside a universally lossless maximal subgroup: K -> H iff [K] -> [H] in R_U
    - otherwise: K -> H iff [gK] -> [gH] in R_D, with gH inside H_eps

    Conjugating elements are frame.into_eps.

    :raises InvalidTriple: if validate is set and the triple is not a split transfer system
    """
    if validate:
        result = is_split_transfer_system(frame, triple)
        if not result:
            raise InvalidTriple("Not a split transfer system: {} fails at {}".format(result.axiom, result.witness))

    L = frame.lattice
    r_d, r_u = triple.R_D.pairs, triple.R_U.pairs
    conj = L.conj_action
    d_of = frame.d_class_of
    into = frame.into_eps
    u_of = frame.u_position[L.class_of]
    ul = frame.ul_below[L.class_of]
    top, d_top = L.top, frame.d_top

    pairs = np.eye(L.size, dtype=bool)
    for H in range(L.size):
        Ks = L.down_set(H)
        Ks = Ks[Ks != H]
        if Ks.size == 0:
            continue
        if H == top:
            via_u = Ks[ul[Ks]]
            pairs[via_u, H] = r_u[u_of[via_u], u_of[H]]
            via_d = Ks[~ul[Ks]]
            g = into[via_d]
            if (g < 0).any():
                raise _not_into_eps(frame, int(via_d[np.argmax(g < 0)]))
            pairs[via_d, H] = r_d[d_of[conj[g, via_d]], d_top]
        elif ul[H]:
            pairs[Ks, H] = r_u[u_of[Ks], u_of[H]]
        else:
            g = into[H]
            if g < 0:
                raise _not_into_eps(frame, H)
            pairs[Ks, H] = r_d[d_of[conj[g, Ks]], d_of[conj[g, H]]]
    return Relation(L, pairs)
