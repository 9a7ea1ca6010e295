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

from normlift.groups.group_factory import build_group
from normlift.groups.group_utils import is_cyclic_set, subgroup_as_group
from normlift.lattice.class_poset import quotient_poset
from normlift.lattice.subgroup_lattice import enumerate_subgroups
from normlift.lifting.galois import is_liftable, is_liftable_via_meets
from normlift.lossless.verdicts import is_lossless
from normlift.mcf.criteria import first_violation, ladder_coordinates, ladder_rule_liftable, mcf_liftable
from normlift.mcf.structure import base, grid_iso, grid_poset, mcf_structure
from normlift.transfer.closure import cat_closure
from normlift.transfer.enumeration import enumerate_cat_transfer_systems
from normlift.utils.errors import NotMcf


@pytest.mark.common
@pytest.mark.parametrize('spec,n,t',
                         [['S3', 3, 2],
                          ['D9', 9, 2],
                          ['D5', 5, 2],
                          ['D7', 7, 2],
                          ['AGL1(5)', 5, 4],
                          ['sd(7,2,3)', 7, 3],
                          ['AGL1(7)', 7, 6]])
def test_mcf_structure(spec, n, t):
    """
    Finds the cyclic Frobenius kernel and complement, and checks the order isomorphism onto the divisor grid
    """
    G = build_group(spec)
    L = enumerate_subgroups(G)
    st = mcf_structure(G, L)
    assert st is not None
    assert (st.n, st.t) == (n, t)
    assert L.is_normal_index(st.kernel)
    assert L.order(st.complement) == t
    mapping = grid_iso(L, st)
    assert sorted(mapping) == list(range(grid_poset(st).size))
    assert st.to_json() == {"kernel": st.kernel, "complement": st.complement, "n": n, "t": t}


@pytest.mark.common
@pytest.mark.parametrize('spec', ['C12', 'Q8', 'Dic3', 'A4', 'D4', 'prod(C2,S3)'])
def test_not_mcf(spec):
    G = build_group(spec)
    L = enumerate_subgroups(G)
    assert mcf_structure(G, L) is None
    with pytest.raises(NotMcf):
        grid_iso(L, None)


@pytest.mark.common
@pytest.mark.parametrize('spec', ['D9', 'AGL1(5)', 'AGL1(7)', 'D5', 'D7'])
def test_mcf_laws(spec):
    """
    Exhaustive over Sub(G): two conjugates of K outside its normalizer meet in the base, K is normal iff it lies in
    the kernel or contains it, subgroups of equal order are conjugate, subgroups with a nontrivial base outside the
    kernel are mcF with that base as kernel (the rest are cyclic), the grid map is an order isomorphism and G is
    lossless
    """
    G = build_group(spec)
    L = enumerate_subgroups(G)
    st = mcf_structure(G, L)
    assert st is not None
    N = st.kernel

    for K in range(L.size):
        N_K = base(L, st, K)
        outside = np.flatnonzero(L.conj_action[:, K] != K)
        for g in outside:
            assert L.meet(K, L.conjugate(K, g)) == N_K

        assert L.is_normal_index(K) == (L.leq[K, N] or N_K == N)

        same_order = np.flatnonzero(L.orders == L.order(K))
        assert (L.class_of[same_order] == L.class_of[K]).all()

        if N_K != L.trivial and not L.leq[K, N]:
            H = subgroup_as_group(G, L.subgroup(K))
            sub_st = mcf_structure(H, enumerate_subgroups(H))
            assert sub_st is not None
            assert sub_st.n == L.order(N_K)
        else:
            assert is_cyclic_set(G, L.subgroup(K))

    grid_iso(L, st)
    assert is_lossless(G, L).lossless


def _criteria_agree(L):
    st = mcf_structure(L.group, L)
    Cp = quotient_poset(L)
    for Rc in enumerate_cat_transfer_systems(Cp):
        expected = is_liftable(L, Cp, Rc)
        assert mcf_liftable(L, st, Rc) == expected
        assert mcf_liftable(L, st, Rc, source_form=True) == expected
        assert is_liftable_via_meets(L, Cp, Rc) == expected


@pytest.mark.common
def test_mcf_criterion_s3(s3_lattice):
    _criteria_agree(s3_lattice)


@pytest.mark.integration
@pytest.mark.parametrize('name', ['D9', 'AGL1(5)', 'AGL1(7)'])
def test_mcf_criterion(name, d9_lattice, agl15_lattice):
    if name == "AGL1(7)":
        L = enumerate_subgroups(build_group("AGL1(7)"))
    else:
        L = {"D9": d9_lattice, "AGL1(5)": agl15_lattice}[name]
    _criteria_agree(L)


@pytest.mark.common
def test_first_violation_s3(s3_lattice, s3_classes):
    """
    [C2] -> [S3] without [1] -> [S3] violates the criterion, with base class [1]
    """
    st = mcf_structure(s3_lattice.group, s3_lattice)
    Rc = cat_closure(s3_classes, [(1, 3)])
    assert first_violation(s3_lattice, st, Rc) == (1, 3, 0)
    assert first_violation(s3_lattice, st, Rc, source_form=True) == (1, 3, 0)
    fixed = cat_closure(s3_classes, [(1, 3), (0, 3)])
    assert first_violation(s3_lattice, st, fixed) is None

    with pytest.raises(NotMcf):
        mcf_liftable(s3_lattice, None, Rc)


@pytest.mark.common
def test_ladder_rule_d9(d9_lattice, d9_classes):
    """
    On the D9 ladder the grid rule agrees with the general criterion
    """
    st = mcf_structure(d9_lattice.group, d9_lattice)
    assert ladder_coordinates(d9_lattice, st) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    for Rc in enumerate_cat_transfer_systems(d9_classes):
        assert ladder_rule_liftable(d9_lattice, st, Rc) == mcf_liftable(d9_lattice, st, Rc)


@pytest.mark.common
def test_ladder_needs_dihedral(agl15_lattice):
    st = mcf_structure(agl15_lattice.group, agl15_lattice)
    with pytest.raises(NotMcf):
        ladder_coordinates(agl15_lattice, st)
