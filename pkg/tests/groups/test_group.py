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

from normlift.groups.group import Group
from normlift.groups.group_factory import build_group, get_group_catalog, list_families
from normlift.groups.group_spec import GroupSpec
from normlift.groups.group_utils import center, derived_subgroup, exponent, generated_mask, generated_subgroup, \
    is_cyclic, is_normal, is_solvable, is_subgroup, quotient_group, subgroup_as_group, subgroup_generators
from normlift.lattice.oracles import brute_force_subgroups
from normlift.utils.errors import InvalidSpec, NotNormal, TooLarge
from normlift.utils.types import GroupFamily

# Latin square with a two-sided identity that is not a group table, since 1 * 1 = 0 rules out C5
NON_ASSOCIATIVE_LOOP = [[0, 1, 2, 3, 4],
                        [1, 0, 3, 4, 2],
                        [2, 4, 0, 1, 3],
                        [3, 2, 4, 0, 1],
                        [4, 3, 1, 2, 0]]


@pytest.mark.common
@pytest.mark.parametrize('spec,order,abelian',
                         [['Trivial', 1, True],
                          ['C12', 12, True],
                          ['D9', 18, False],
                          ['Dic3', 12, False],
                          ['SD4', 16, False],
                          ['MM4', 16, False],
                          ['Q8', 8, False],
                          ['S4', 24, False],
                          ['A5', 60, False],
                          ['SL2(3)', 24, False],
                          ['AGL1(5)', 20, False],
                          ['prod(C2,C2)', 4, True],
                          ['sd(27,8,6)', 162, False],
                          ['vsd(3,3,3,[[1,1,1],[0,1,1],[0,0,1]])', 81, False],
                          ['perm({"degree": 4, "generators": [[1, 2, 3, 0], [3, 2, 1, 0]]})', 8, False]])
def test_build_group(spec, order, abelian):
    """
    Builds one group of every family and checks the order, the identity at index 0 and commutativity
    """
    G = build_group(spec)
    assert G.order == order
    assert G.identity == 0
    assert (G.mul[0] == np.arange(order)).all()
    assert (G.mul[np.arange(order), G.inv] == 0).all()
    assert G.is_abelian == abelian


@pytest.mark.common
def test_build_group_accepts_group_spec():
    G = build_group(GroupSpec(GroupFamily.DIHEDRAL, (9,)))
    assert G.order == 18
    assert str(G.spec) == "D9"
    assert "D9" in repr(G)


@pytest.mark.common
def test_group_element_helpers():
    """
    Exercises power, inverse, element orders and the conjugation table on Q8
    """
    G = build_group("Q8")
    orders = G.element_orders
    assert sorted(orders.tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]
    for x in range(G.order):
        assert G.power(x, int(orders[x])) == 0
        assert G.multiply(x, G.inverse(x)) == 0
        assert G.power(x, -1) == G.inverse(x)
    g, x = 2, 4
    assert G.conjugation[g, x] == G.multiply(G.multiply(g, x), G.inverse(g))
    assert len(generated_subgroup(G, G.generators)) == G.order


@pytest.mark.common
@pytest.mark.parametrize('spec', ['S3', 'D4', 'D5', 'A4'])
def test_generated_mask_from_subgroup(spec):
    """
    Extending a subgroup by one element gives the subgroup generated by both, never a bare product set
    """
    G = build_group(spec)
    for start in brute_force_subgroups(G):
        elements = np.flatnonzero(start)
        assert set(generated_subgroup(G, subgroup_generators(G, elements)).tolist()) == set(elements.tolist())
        for x in range(G.order):
            joined = generated_mask(G, [x], start=start)
            assert is_subgroup(G, np.flatnonzero(joined))
            assert (np.flatnonzero(joined) == generated_subgroup(G, np.append(elements, x))).all()


@pytest.mark.common
def test_s3_rotation_and_reflection_generate_s3():
    G = build_group("S3")
    rotations = np.flatnonzero(G.element_orders != 2)
    reflection = int(np.flatnonzero(G.element_orders == 2)[0])
    start = np.zeros(G.order, dtype=bool)
    start[rotations] = True
    assert generated_mask(G, [reflection], start=start).all()


@pytest.mark.common
def test_group_rejects_bad_tables():
    """
    Non-Latin tables, a misplaced identity and a non-associative loop are all rejected
    """
    with pytest.raises(InvalidSpec):
        Group([[0, 1], [1, 1]])
    with pytest.raises(InvalidSpec):
        Group([[1, 0], [0, 1]])
    with pytest.raises(InvalidSpec):
        Group([[0, 1, 2]])
    with pytest.raises(InvalidSpec):
        Group(NON_ASSOCIATIVE_LOOP)
    with pytest.raises(InvalidSpec):
        Group([[0, 1], [1, 0]], labels=["e"])


@pytest.mark.common
def test_max_group_order_override(monkeypatch):
    """
    NORMLIFT_MAX_GROUP_ORDER lowers the bound for every group built afterwards
    """
    monkeypatch.setenv("NORMLIFT_MAX_GROUP_ORDER", "10")
    with pytest.raises(TooLarge):
        build_group("C11")
    with pytest.raises(TooLarge):
        build_group("perm({\"degree\": 4, \"generators\": [[1, 2, 3, 0], [1, 0, 2, 3]]})")
    monkeypatch.setenv("NORMLIFT_MAX_GROUP_ORDER", "ten")
    with pytest.raises(InvalidSpec):
        build_group("C3")


@pytest.mark.common
@pytest.mark.parametrize('spec,center_order,derived_order,exponent_value',
                         [['S3', 1, 3, 6],
                          ['Q8', 2, 2, 4],
                          ['D9', 1, 9, 18],
                          ['A4', 1, 4, 6],
                          ['SL2(3)', 2, 8, 12],
                          ['prod(C2,A4)', 2, 4, 6]])
def test_group_utils(spec, center_order, derived_order, exponent_value):
    """
    Checks center, derived subgroup and exponent against known values
    """
    G = build_group(spec)
    assert len(center(G)) == center_order
    assert len(derived_subgroup(G)) == derived_order
    assert exponent(G) == exponent_value
    assert is_normal(G, center(G))
    assert is_solvable(G)


@pytest.mark.common
def test_quotient_group():
    """
    Q8 modulo its center is the Klein four group; S3 has no normal subgroup of order 2
    """
    G = build_group("Q8")
    Q = quotient_group(G, center(G))
    assert Q.order == 4
    assert Q.is_abelian
    assert not is_cyclic(Q)

    S3 = build_group("S3")
    involution = int(np.flatnonzero(S3.element_orders == 2)[0])
    with pytest.raises(NotNormal):
        quotient_group(S3, [0, involution])


@pytest.mark.common
def test_subgroup_as_group():
    G = build_group("S4")
    A4 = derived_subgroup(G)
    H = subgroup_as_group(G, A4)
    assert H.order == 12
    assert len(derived_subgroup(H)) == 4
    assert not is_solvable(build_group("A5"))


@pytest.mark.common
def test_list_families():
    families = dict(list_families())
    assert len(families) == len(GroupFamily)
    assert "sl2" in families
    assert families["dihedral"] == "D<n>, n > 2"


@pytest.mark.common
def test_group_catalog():
    """
    The order 16 catalog has 14 entries, all of order 16, including the permutation fixture
    """
    catalog = get_group_catalog("order16")
    assert len(catalog) == 14
    for name, spec in catalog:
        assert build_group(spec).order == 16, name

    with pytest.raises(InvalidSpec):
        get_group_catalog("order17")
