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

import os

import numpy as np
from sympy import divisors

from normlift import NORMLIFT_BASE_DIR
from normlift.posets.finite_poset import FinitePoset
from normlift.utils.errors import InvalidSpec
from normlift.utils.file_utils import read_json_file

POSET_DIR = os.path.join(NORMLIFT_BASE_DIR, "configs", "posets")


def chain(n):
    """ The totally ordered set [n] = {0 < 1 < ... < n} with n + 1 elements """
    if n < 0:
        raise InvalidSpec("chain(n) needs n >= 0, got {}".format(n))
    idx = np.arange(n + 1)
    return FinitePoset(idx[:, None] <= idx[None, :], labels=[str(i) for i in idx], validate=False)


def product(P, Q):
    """ Componentwise order on P x Q; (p, q) has index p * |Q| + q """
    leq = (P.leq[:, None, :, None] & Q.leq[None, :, None, :]).reshape(P.size * Q.size, P.size * Q.size)
    labels = ["({},{})".format(p, q) for p in P.labels for q in Q.labels]
    return FinitePoset(leq, labels=labels, validate=False)


def divisor_lattice(n):
    """ Divisors of n ordered by divisibility, in increasing numeric order """
    if n < 1:
        raise InvalidSpec("divisor_lattice(n) needs n >= 1, got {}".format(n))
    values = np.array(divisors(n), dtype=np.int64)
    return FinitePoset(values[None, :] % values[:, None] == 0, labels=[str(v) for v in values], validate=False)


def list_named_posets():
    return sorted(os.path.splitext(f)[0] for f in os.listdir(POSET_DIR) if f.endswith(".json"))


def named_poset(name):
    """
    Loads one of the shipped poset fixtures: 'square' ([1]x[1]), 'ladder' ([2]x[1]), 'cube' ([1]^3) or 'notasub'
    (a five element lattice that is not the subgroup lattice of any group).
    """
    path = os.path.join(POSET_DIR, "{}.json".format(name))
    if not os.path.isfile(path):
        raise InvalidSpec("Unknown poset: {} (Select from: {})".format(name, list_named_posets()))
    return FinitePoset.from_json(read_json_file(path))


def maximal_lower_bounds(P, x, y):
    """ Maximal elements of x↓ ∩ y↓, in increasing index order """
    common = P.leq[:, x] & P.leq[:, y]
    candidates = np.flatnonzero(common)
    strictly_below = P.leq[np.ix_(candidates, candidates)] & ~np.eye(candidates.size, dtype=bool)
    return candidates[~strictly_below.any(axis=1)]


def meet(P, x, y):
    """ The greatest lower bound of x and y, or None if it does not exist """
    bounds = maximal_lower_bounds(P, x, y)
    return int(bounds[0]) if bounds.size == 1 else None


def is_lattice(P):
    if P.bottom is None or P.top is None:
        return False
    return all(meet(P, x, y) is not None for x in range(P.size) for y in range(x + 1, P.size))
