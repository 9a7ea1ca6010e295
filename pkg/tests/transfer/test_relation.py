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
import pytest

from normlift.posets.constructions import named_poset
from normlift.posets.finite_poset import FinitePoset
from normlift.transfer.closure import cat_closure, close_relation, g_closure
from normlift.transfer.enumeration import enumerate_cat_transfer_systems
from normlift.transfer.relation import Relation, relation_from_json
from normlift.transfer.validators import is_cat_transfer_system, is_g_transfer_system, \
    mlb_rule_agrees_with_meet, satisfies_meet_rule, validate_relation
from normlift.utils.errors import CarrierMismatch, InvalidArrow

# Square [1] x [1]: 0 = (0,0), 1 = (0,1), 2 = (1,0), 3 = (1,1)
SQUARE = named_poset("square")


def _c2_and_c3(lattice):
    involutions = [i for i in range(lattice.size) if lattice.order(i) == 2]
    c3 = [i for i in range(lattice.size) if lattice.order(i) == 3][0]
    return involutions, c3


@pytest.mark.common
def test_relation_basics():
    R = Relation.from_arrows(SQUARE, [(0, 1), (0, 3)])
    assert R.arrows() == [(0, 1), (0, 3)]
    assert R.num_arrows == 2
    assert (0, 1) in R and (1, 0) not in R and (2, 2) in R
    assert Relation.reflexive(SQUARE).is_reflexive_only()
    assert Relation.reflexive(SQUARE) <= R <= Relation.full(SQUARE)
    assert R.union(Relation.from_arrows(SQUARE, [(2, 3)])).num_arrows == 3
    assert R == Relation.from_arrows(SQUARE, [(0, 3), (0, 1)])
    assert Relation.full(SQUARE).num_arrows == 5


@pytest.mark.common
@pytest.mark.parametrize('arrows', [[(1, 2)], [(3, 0)], [(0, 4)], [(-1, 0)]])
def test_relation_rejects_invalid_arrows(arrows):
    with pytest.raises(InvalidArrow):
        Relation.from_arrows(SQUARE, arrows)


@pytest.mark.common
def test_relations_on_different_carriers():
    other = named_poset("square")
    with pytest.raises(CarrierMismatch):
        Relation.reflexive(SQUARE) <= Relation.reflexive(other)
    with pytest.raises(CarrierMismatch):
        is_cat_transfer_system(other, Relation.reflexive(SQUARE))
    with pytest.raises(CarrierMismatch):
        Relation(SQUARE, np.eye(3, dtype=bool))


@pytest.mark.common
@pytest.mark.parametrize('pairs,axiom,witness',
                         [[[(1, 2)], "refinement", (1, 2)],
                          [[(0, 1), (1, 3)], "transitivity", (0, 1, 3)],
                          [[(0, 3)], "restriction", (0, 3, 0, 1)]])
def test_cat_validator_failures(pairs, axiom, witness):
    """
    Each broken relation reports the first failing axiom together with a witness
    """
    matrix = np.eye(SQUARE.size, dtype=bool)
    for i, j in pairs:
        matrix[i, j] = True
    result = is_cat_transfer_system(SQUARE, matrix)
    assert not result
    assert result.axiom == axiom
    assert result.witness == witness
    assert result.to_json()["axiom"] == axiom


@pytest.mark.common
def test_cat_validator_reflexivity():
    matrix = np.eye(SQUARE.size, dtype=bool)
    matrix[2, 2] = False
    result = is_cat_transfer_system(SQUARE, matrix)
    assert result.axiom == "reflexivity"
    assert result.witness == (2, 2)


@pytest.mark.common
def test_cat_closure():
    """
    Restricting 0 -> 3 along 1 <= 3 and 2 <= 3 forces both lower arrows
    """
    R = cat_closure(SQUARE, [(0, 3)])
    assert R.arrows() == [(0, 1), (0, 2), (0, 3)]
    assert is_cat_transfer_system(SQUARE, R)
    assert cat_closure(SQUARE).is_reflexive_only()
    assert cat_closure(SQUARE, R) == R
    assert close_relation(SQUARE, R.pairs) == R


@pytest.mark.common
def test_closure_is_least():
    """
    Every transfer system containing the seed contains its closure
    """
    seed = [(1, 3)]
    closed = cat_closure(SQUARE, seed)
    for R in enumerate_cat_transfer_systems(SQUARE):
        if (1, 3) in R:
            assert closed <= R


@pytest.mark.common
def test_g_validator(s3_lattice):
    L = s3_lattice
    involutions, c3 = _c2_and_c3(L)
    matrix = np.eye(L.size, dtype=bool)
    matrix[0, involutions[0]] = True
    result = is_g_transfer_system(L, matrix)
    assert result.axiom == "conjugation"
    assert result.witness[:2] == (0, involutions[0])

    matrix[0, involutions] = True
    assert is_g_transfer_system(L, matrix)

    matrix = np.eye(L.size, dtype=bool)
    matrix[c3, L.top] = True
    result = is_g_transfer_system(L, matrix)
    assert result.axiom == "restriction"
    assert result.witness[0] == c3 and result.witness[3] in involutions
    matrix[0, involutions] = True
    assert is_g_transfer_system(L, matrix)

    matrix = np.eye(L.size, dtype=bool)
    matrix[involutions, L.top] = True
    result = is_g_transfer_system(L, matrix)
    assert result.axiom == "restriction"


@pytest.mark.common
def test_g_closure(s3_lattice):
    """
    C2 -> S3 generates every arrow except C3 -> S3
    """
    L = s3_lattice
    involutions, c3 = _c2_and_c3(L)
    R = g_closure(L, [(involutions[0], L.top)])
    assert R.num_arrows == 8
    assert (c3, L.top) not in R
    assert all((0, j) in R for j in range(1, L.size))
    assert validate_relation(R)
    assert g_closure(L, [(c3, L.top)]).arrows() == sorted([(0, i) for i in involutions] + [(c3, L.top)])

    with pytest.raises(CarrierMismatch):
        g_closure(SQUARE, [(0, 1)])
    with pytest.raises(InvalidArrow):
        g_closure(L, [(c3, involutions[0])])


@pytest.mark.common
def test_meet_rule_on_lattices():
    """
    On a lattice the maximal lower bound form of restriction agrees with the meet form for every relation
    """
    P = named_poset("notasub")
    for R in enumerate_cat_transfer_systems(P):
        assert satisfies_meet_rule(P, R)
        assert mlb_rule_agrees_with_meet(P, R)
    broken = np.eye(SQUARE.size, dtype=bool)
    broken[0, 3] = True
    assert not satisfies_meet_rule(SQUARE, broken)
    assert mlb_rule_agrees_with_meet(SQUARE, broken)

    bowtie = FinitePoset.from_json({"size": 4, "leq": [[0, 2], [0, 3], [1, 2], [1, 3]]})
    with pytest.raises(CarrierMismatch):
        mlb_rule_agrees_with_meet(bowtie, np.eye(4, dtype=bool))


@pytest.mark.common
def test_relation_json(s3_lattice, s3_classes):
    L = s3_lattice
    involutions, _ = _c2_and_c3(L)
    R = g_closure(L, [(0, involutions[0])])
    data = R.to_json()
    assert data["carrier"] == "subgroups"
    assert data["group"] == "S3"
    assert relation_from_json(data, L) == R

    C = cat_closure(s3_classes, [(0, 1)])
    data = C.to_json()
    assert data["carrier"] == "poset"
    assert data["group"] == "S3"
    assert relation_from_json(data, s3_classes) == C

    with pytest.raises(CarrierMismatch):
        relation_from_json(data, L)


@pytest.mark.common
def test_relation_dot():
    dot = cat_closure(SQUARE, [(0, 3)]).to_dot()
    assert "red" in dot and "gray" in dot
