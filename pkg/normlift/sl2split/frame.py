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
The frame of SL2(F_p) for p = ±3 mod 8: the dicyclic subgroup H_eps, the maximal subgroup classes and the three
posets D_G, U_G and I_G together with the maps between them.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import isprime

from normlift.groups.group_factory import build_group
from normlift.groups.group_utils import center, is_cyclic_set, subgroup_as_group
from normlift.groups.isomorphism import is_isomorphic
from normlift.lattice.class_poset import class_labels, quotient_poset
from normlift.lattice.subgroup_lattice import enumerate_subgroups
from normlift.lossless.verdicts import is_universally_lossless
from normlift.posets.finite_poset import FinitePoset
from normlift.utils.errors import BadPrime, NormliftError
from normlift.utils.settings import setting
from normlift.utils.types import MaximalKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaximalClass:
    class_index: int
    representative: int
    order: int
    kind: MaximalKind
    universally_lossless: bool

    def to_json(self):
        return {"class": self.class_index, "representative": self.representative, "order": self.order,
                "kind": str(self.kind), "universally_lossless": self.universally_lossless}


def check_prime(p, extended=False):
    """
    Raises BadPrime unless p is a prime congruent to 3 or 5 mod 8 that the frame supports. Primes above sl2.max_prime
    are only accepted with extended=True, and then only the ones listed in sl2.extended_primes.
    """
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise BadPrime("{} is not a prime".format(p))
    if p % 8 not in (3, 5):
        raise BadPrime("p must be 3 or 5 mod 8, but {} is {} mod 8".format(p, p % 8))
    if p in setting("sl2", "excluded_primes"):
        raise BadPrime("p = {} is excluded from the split construction".format(p))
    if p > setting("sl2", "max_prime"):
        extended_primes = setting("sl2", "extended_primes")
        if not extended:
            raise BadPrime("p = {} is above the default bound of {} (use the extended mode for {})".format(
                p, setting("sl2", "max_prime"), extended_primes))
        if p not in extended_primes:
            raise BadPrime("p = {} is not one of the extended primes {}".format(p, extended_primes))


class Sl2Frame:
    """
    Everything the split construction needs about G = SL2(F_p):

    - eps = ±1 with p + eps = 4 mod 8, and H_eps, the normalizer of a cyclic torus of order p + eps
    - the maximal subgroup classes, each classified and tested for universal losslessness
    - D_G: Sub(H_eps)/H_eps with an added top vertex standing for [G]
    - U_G: the classes [H] of Sub(G)/G with H = G or H inside a universally lossless maximal subgroup
    - I_G: the vertices of D_G that psi_D sends into U_G

    Maps are index arrays: psi_D[d] and psi_U[u] are classes of Sub(G)/G, phi_D[i] a vertex of D_G and phi_U[i] a
    vertex of U_G.
    """

    def __init__(self, p, lattice):
        self._p = int(p)
        self._eps = 1 if (self._p + 1) % 8 == 4 else -1
        self._lattice = lattice
        self._poset = quotient_poset(lattice)
        self._center = lattice.index_of(center(lattice.group))
        self._torus, self._h_eps = self._find_h_eps()
        self._maximal = self._classify_maximal_classes()
        self._build_d()
        self._build_u()
        self._build_i()
        self._build_into_eps()

    def _find_h_eps(self):
        L = self._lattice
        q = self._p + self._eps
        tori = [i for i in range(L.size) if L.order(i) == q and is_cyclic_set(L.group, L.subgroup(i))]
        if not tori:
            raise NormliftError("SL2({}) has no cyclic subgroup of order {}".format(self._p, q))
        torus = tori[0]
        return torus, int(L.normalizer_of[torus])

    def maximal_kind(self, order, has_index_two_cyclic):
        p = self._p
        if order == p * (p - 1):
            return MaximalKind.BOREL
        if order in (2 * (p + 1), 2 * (p - 1)) and has_index_two_cyclic:
            return MaximalKind.TORUS_NORMALIZER
        if order in (24, 120):
            return MaximalKind.BINARY_POLYHEDRAL
        return MaximalKind.OTHER

    def _classify_maximal_classes(self):
        L, Cp = self._lattice, self._poset
        top_class = int(L.class_of[L.top])
        result = []
        for c in np.flatnonzero(Cp.cover[:, top_class]):
            rep = int(Cp.reps[c])
            sub = subgroup_as_group(L.group, L.subgroup(rep))
            kind = self.maximal_kind(sub.order, bool((sub.element_orders == sub.order // 2).any()))
            ul = is_universally_lossless(sub, enumerate_subgroups(sub))
            result.append(MaximalClass(int(c), rep, sub.order, kind, ul))
            logger.debug("SL2(%d) maximal class %d: order %d, %s, universally lossless: %s",
                         self._p, c, sub.order, kind, ul)
        return result

    def _build_d(self):
        L = self._lattice
        inside = np.flatnonzero(L.leq[:, self._h_eps])
        action = L.conj_action[np.ix_(L.subgroup(self._h_eps), inside)]
        d_class_of = np.full(L.size, -1, dtype=np.int64)
        reps = []
        for col, i in enumerate(inside):
            if d_class_of[i] < 0:
                d_class_of[np.unique(action[:, col])] = len(reps)
                reps.append(int(i))
        nd = len(reps)

        indicator = np.zeros((inside.size, nd), dtype=np.float32)
        indicator[np.arange(inside.size), d_class_of[inside]] = 1.0
        leq = np.ones((nd + 1, nd + 1), dtype=bool)
        leq[:nd, :nd] = (indicator.T @ L.leq[np.ix_(inside, reps)].astype(np.float32)) > 0
        leq[nd, :nd] = False

        orders = [L.order(r) for r in reps] + [L.group.order]
        self._inside = inside
        self._d_class_of = d_class_of
        self._d_reps = np.array(reps, dtype=np.int64)
        self._D = FinitePoset(leq, labels=class_labels(orders), validate=False)
        self._psi_D = np.append(L.class_of[reps], L.class_of[L.top]).astype(np.int64)

    def _build_u(self):
        Cp = self._poset
        ul_classes = [m.class_index for m in self._maximal if m.universally_lossless]
        self._ul_below = Cp.leq[:, ul_classes].any(axis=1) if ul_classes else np.zeros(Cp.size, dtype=bool)
        top_class = int(self._lattice.class_of[self._lattice.top])
        nodes = np.flatnonzero(self._ul_below | (np.arange(Cp.size) == top_class))
        self._psi_U = nodes
        self._u_position = np.full(Cp.size, -1, dtype=np.int64)
        self._u_position[nodes] = np.arange(nodes.size)
        self._U = Cp.subposet(nodes)
        if nodes.size == Cp.size:
            logger.warning("The frame of SL2(%d) is degenerate: U_G covers every class", self._p)

    def _build_i(self):
        nodes = np.flatnonzero(self._u_position[self._psi_D] >= 0)
        self._phi_D = nodes
        self._phi_U = self._u_position[self._psi_D[nodes]]
        self._I = self._D.subposet(nodes)

    def _build_into_eps(self):
        """ into_eps[X] is the least g with g X g^-1 inside H_eps, or -1 """
        L = self._lattice
        hits = L.leq[:, self._h_eps][L.conj_action]
        self._into_eps = np.where(hits.any(axis=0), hits.argmax(axis=0), -1).astype(np.int64)

    @property
    def p(self):
        return self._p

    @property
    def eps(self):
        return self._eps

    @property
    def group(self):
        return self._lattice.group

    @property
    def lattice(self):
        return self._lattice

    @property
    def class_poset(self):
        return self._poset

    @property
    def h_eps(self):
        """ Subgroup index of H_eps """
        return self._h_eps

    @property
    def torus(self):
        return self._torus

    @property
    def center(self):
        return self._center

    @property
    def maximal_classes(self):
        return list(self._maximal)

    @property
    def D(self):
        return self._D

    @property
    def U(self):
        return self._U

    @property
    def I(self):  # noqa: E743
        return self._I

    @property
    def d_top(self):
        return self._D.size - 1

    @property
    def psi_D(self):
        return self._psi_D

    @property
    def psi_U(self):
        return self._psi_U

    @property
    def phi_D(self):
        return self._phi_D

    @property
    def phi_U(self):
        return self._phi_U

    @property
    def inside_h_eps(self):
        """ Subgroup indices of Sub(H_eps) """
        return self._inside

    @property
    def d_class_of(self):
        """ D_G vertex of every subgroup of H_eps, -1 for the other subgroups """
        return self._d_class_of

    @property
    def d_reps(self):
        return self._d_reps

    @property
    def u_position(self):
        """ U_G vertex of every class of Sub(G)/G, -1 outside U_G """
        return self._u_position

    @property
    def ul_below(self):
        """ Classes lying below some universally lossless maximal class """
        return self._ul_below

    @property
    def into_eps(self):
        return self._into_eps

    @property
    def c4_vertices(self):
        """ Vertices of D_G below the top whose subgroups have order 4 """
        return np.array([d for d, r in enumerate(self._d_reps) if self._lattice.order(r) == 4], dtype=np.int64)

    def expected_universally_lossless(self, maximal):
        if maximal.kind in (MaximalKind.BOREL, MaximalKind.BINARY_POLYHEDRAL):
            return True
        if maximal.kind == MaximalKind.TORUS_NORMALIZER:
            return maximal.order == 2 * (self._p - self._eps)
        return None

    def center_is_torus_intersection(self):
        """
        Whether H_eps meets some conjugate of the other torus normalizer exactly in the center. None for p = 3,
        where that normalizer is all of G.
        """
        others = [m for m in self._maximal
                  if m.kind == MaximalKind.TORUS_NORMALIZER and m.order == 2 * (self._p - self._eps)]
        if not others:
            return None
        L = self._lattice
        members = np.concatenate([L.class_members(m.class_index) for m in others])
        return bool((L.meets(self._h_eps, members) == self._center).any())

    def check_invariants(self):
        """ Name -> bool for every structural fact the split construction relies on """
        L = self._lattice
        q = self._p + self._eps
        h_group = subgroup_as_group(L.group, L.subgroup(self._h_eps))
        torus_normalizers = [m.representative for m in self._maximal if m.kind == MaximalKind.TORUS_NORMALIZER]
        checks = {
            "h_eps_order": L.order(self._h_eps) == 2 * q,
            "h_eps_dicyclic": is_isomorphic(h_group, build_group("Dic{}".format(q // 2))),
            "center_order_two": L.order(self._center) == 2,
            "center_in_torus_normalizers": bool(L.leq[self._center, torus_normalizers + [self._h_eps]].all()),
            "maximal_classification": all(self.expected_universally_lossless(m) == m.universally_lossless
                                          for m in self._maximal),
            "phi_U_well_defined": bool((self._phi_U >= 0).all()),
        }
        intersection = self.center_is_torus_intersection()
        if intersection is not None:
            checks["center_is_torus_intersection"] = intersection
        return checks

    def to_json(self):
        L = self._lattice
        return {
            "p": self._p,
            "eps": self._eps,
            "h_eps": {"index": self._h_eps, "order": L.order(self._h_eps)},
            "maximal": [m.to_json() for m in self._maximal],
            "D": self._D.labels,
            "I": self._I.labels,
            "U": self._U.labels,
        }

    def __repr__(self):
        return "Sl2Frame(p={}, eps={}, |D_G|={}, |I_G|={}, |U_G|={})".format(
            self._p, self._eps, self._D.size, self._I.size, self._U.size)


@lru_cache(maxsize=4)
def build_frame(p, extended=False, progress=False):
    """
    Builds and verifies the frame of SL2(F_p).

    Args:
        p (int): prime congruent to 3 or 5 mod 8
        extended (bool): admit the primes of sl2.extended_primes
        progress (bool): show a progress bar while the subgroup lattice is computed

    Returns:
        Sl2Frame

    Raises:
        BadPrime: if p is not supported
        TooLarge: if SL2(F_p) exceeds the group order bound

    Example:
        >>> frame = build_frame(13)
        >>> frame.eps, frame.lattice.order(frame.h_eps)
        (-1, 24)
    """
    check_prime(p, extended)
    G = build_group("SL2({})".format(p))
    lattice = enumerate_subgroups(G, progress=progress)
    frame = Sl2Frame(p, lattice)

    failed = [name for name, ok in frame.check_invariants().items() if not ok]
    if failed:
        raise NormliftError("The frame of SL2({}) violates: {}".format(p, ", ".join(failed)))
    logger.info("Built %s", frame)
    return frame
