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
Cayley table builders for the supported group families. Every builder returns (table, labels) and documents its
canonical element order; index 0 is always the identity.
"""

import itertools
import logging

import numpy as np
from sympy import primitive_root
from sympy.combinatorics import Permutation

from normlift.groups.group import check_group_order
from normlift.utils.errors import InvalidSpec

logger = logging.getLogger(__name__)

# Largest number of product cells materialized at once
_CHUNK_CELLS = 1 << 22


def _power_label(symbol, exponent):
    if exponent == 0:
        return ""
    return symbol if exponent == 1 else "{}^{}".format(symbol, exponent)


def _join_labels(*parts):
    text = "".join(p for p in parts if p)
    return text if text else "e"


def trivial_table():
    return np.zeros((1, 1), dtype=np.int64), ["e"]


def cyclic_table(n):
    """ Cyclic group of order n: element i is a^i """
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return table, [_join_labels(_power_label("a", i)) for i in range(n)]


def unit_semidirect_table(n, k, m):
    """
    Z/n x| C_m with the generator b acting by multiplication with k. Element a^x b^t has index x + n*t and
    (x, t)(y, u) = (x + k^t y, t + u).
    """
    idx = np.arange(n * m)
    x, t = idx % n, idx // n
    k_powers = np.array([pow(int(k), int(e), int(n)) for e in range(m)], dtype=np.int64)
    first = (x[:, None] + k_powers[t][:, None] * x[None, :]) % n
    second = (t[:, None] + t[None, :]) % m
    labels = [_join_labels(_power_label("a", int(xx)), _power_label("b", int(tt))) for xx, tt in zip(x, t)]
    return first + n * second, labels


def dihedral_table(n):
    """ D_n of order 2n as Z/n x| C_2 acting by inversion """
    return unit_semidirect_table(n, n - 1, 2)


def semidihedral_table(n):
    """ SD_n of order 2^n as Z/2^(n-1) x| C_2 acting by 2^(n-2) - 1 """
    return unit_semidirect_table(2 ** (n - 1), 2 ** (n - 2) - 1, 2)


def modular_maximal_cyclic_table(n):
    """ MM_n of order 2^n as Z/2^(n-1) x| C_2 acting by 2^(n-2) + 1 """
    return unit_semidirect_table(2 ** (n - 1), 2 ** (n - 2) + 1, 2)


def agl1_table(p):
    """ AGL_1(F_p) as Z/p x| (Z/p)^x, generated by translations and multiplication by the least primitive root """
    return unit_semidirect_table(p, int(primitive_root(p)), p - 1)


def dicyclic_table(n):
    """
    Dicyclic group <a, x | a^2n = 1, x^2 = a^n, x^-1 a x = a^-1> of order 4n. Element a^i x^j has index i + 2n*j.
    """
    idx = np.arange(4 * n)
    i, j = idx % (2 * n), idx // (2 * n)
    sign = 1 - 2 * j[:, None]
    first = i[:, None] + sign * i[None, :]
    second = j[:, None] + j[None, :]
    first = first + n * (second == 2)
    first %= 2 * n
    second %= 2
    labels = [_join_labels(_power_label("a", int(ii)), _power_label("x", int(jj))) for ii, jj in zip(i, j)]
    return first + 2 * n * second, labels


def quaternion8_table():
    return dicyclic_table(2)


def _cycle_label(images):
    cycles = Permutation(list(images)).cyclic_form
    if not cycles:
        return "()"
    return "".join("({})".format(" ".join(str(x) for x in cycle)) for cycle in cycles)


def _row_indices(elements, rows):
    """ Positions of each row of rows within the lexicographically sorted, duplicate free array elements """
    stacked = np.concatenate([elements, rows])
    unique, inverse = np.unique(stacked, axis=0, return_inverse=True)
    if unique.shape[0] != elements.shape[0]:
        raise InvalidSpec("The permutations are not closed under composition")
    return inverse.reshape(-1)[elements.shape[0]:]


def permutation_table(perms):
    """
    Cayley table of a list of permutations, each given by its image tuple. The elements are sorted lexicographically,
    so the identity comes first. Composition is (s*t)(x) = s(t(x)).
    """
    elements = np.unique(np.asarray(perms, dtype=np.int64), axis=0)
    order, degree = elements.shape
    rows = max(1, _CHUNK_CELLS // max(1, order * degree))
    table = np.empty((order, order), dtype=np.int64)
    for start in range(0, order, rows):
        block = elements[start:start + rows]
        composed = block[np.arange(block.shape[0])[:, None, None], elements[None, :, :]]
        table[start:start + rows] = _row_indices(elements, composed.reshape(-1, degree)).reshape(block.shape[0], order)
    return table, [_cycle_label(p) for p in elements]


def symmetric_table(n):
    return permutation_table(list(itertools.permutations(range(n))))


def alternating_table(n):
    return permutation_table([p for p in itertools.permutations(range(n)) if Permutation(list(p)).is_even])


def perm_gens_table(degree, generators):
    """ Closure of the generators under composition, then permutation_table """
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for x in frontier:
            for g in generators:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        check_group_order(len(seen), "permutation group")
        frontier = fresh
    logger.debug("Permutation generators of degree %d generate %d elements", degree, len(seen))
    return permutation_table(sorted(seen))


def sl2_table(p):
    """
    SL_2(F_p) with the identity first and the remaining matrices [[a, b], [c, d]] in lexicographic order of (a, b, c, d)
    """
    entries = np.array(list(itertools.product(range(p), repeat=4)), dtype=np.int64)
    a, b, c, d = entries.T
    matrices = entries[(a * d - b * c) % p == 1]
    identity = np.array([1, 0, 0, 1])
    is_identity = (matrices == identity).all(axis=1)
    matrices = np.concatenate([matrices[is_identity], matrices[~is_identity]])

    order = matrices.shape[0]
    lookup = np.full(p ** 4, -1, dtype=np.int64)
    lookup[((matrices[:, 0] * p + matrices[:, 1]) * p + matrices[:, 2]) * p + matrices[:, 3]] = np.arange(order)

    table = np.empty((order, order), dtype=np.int64)
    rows = max(1, _CHUNK_CELLS // order)
    a, b, c, d = (matrices[:, i] for i in range(4))
    for start in range(0, order, rows):
        s = slice(start, start + rows)
        na = (a[s, None] * a[None, :] + b[s, None] * c[None, :]) % p
        nb = (a[s, None] * b[None, :] + b[s, None] * d[None, :]) % p
        nc = (c[s, None] * a[None, :] + d[s, None] * c[None, :]) % p
        nd = (c[s, None] * b[None, :] + d[s, None] * d[None, :]) % p
        table[s] = lookup[((na * p + nb) * p + nc) * p + nd]
    labels = ["[[{},{}],[{},{}]]".format(*row) for row in matrices]
    return table, labels


def vec_semidirect_table(p, d, m, matrix):
    """
    (Z/p)^d x| C_m with the generator acting by the matrix A. Element (v, t) has index code(v) + p^d * t where
    code(v) = sum v[i] p^(d-1-i), and (v, t)(w, u) = (v + A^t w, t + u).
    """
    size = p ** d
    codes = np.arange(size)
    weights = p ** np.arange(d - 1, -1, -1)
    vectors = (codes[:, None] // weights[None, :]) % p

    add = (vectors[:, None, :] + vectors[None, :, :]) % p
    add_table = add @ weights

    A = np.array(matrix, dtype=np.int64) % p
    act = np.empty((m, size), dtype=np.int64)
    power = np.eye(d, dtype=np.int64)
    for t in range(m):
        act[t] = ((vectors @ power.T) % p) @ weights
        power = (power @ A) % p

    idx = np.arange(size * m)
    v, t = idx % size, idx // size
    table = add_table[v[:, None], act[t[:, None], v[None, :]]] + size * ((t[:, None] + t[None, :]) % m)
    labels = [_join_labels("" if vv == 0 else "v" + "".join(str(x) for x in vectors[vv]), _power_label("b", int(tt)))
              for vv, tt in zip(v, t)]
    return table, labels


def product_table(left, right):
    """ Direct product of two built groups; element (g, h) has index g * |right| + h """
    n2 = right.order
    table = (left.mul[:, None, :, None] * n2 + right.mul[None, :, None, :]).reshape(left.order * n2, left.order * n2)
    labels = ["({},{})".format(left.label(g), right.label(h)) for g in range(left.order) for h in range(n2)]
    return table, labels
