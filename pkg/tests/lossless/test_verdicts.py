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

import pytest

from normlift.groups.group_factory import build_group, get_group_catalog
from normlift.groups.group_utils import quotient_group
from normlift.lattice.subgroup_lattice import enumerate_subgroups
from normlift.lossless.criteria import SUFFICIENT, lossless_criteria
from normlift.lossless.verdicts import all_pronormal, is_lossless, is_pronormal, is_universally_lossless, \
    universally_lossless_witness, verify_lossless_witness


def _verdict(spec, threads=1):
    G = build_group(spec)
    L = enumerate_subgroups(G)
    return L, is_lossless(G, L, threads=threads)


@pytest.mark.common
@pytest.mark.parametrize('spec,expected',
                         [['C12', True],
                          ['prod(C2,C2)', True],
                          ['S3', True],
                          ['D4', True],
                          ['D9', True],
                          ['D12', True],
                          ['Dic3', True],
                          ['Q8', True],
                          ['SD4', True],
                          ['MM4', True],
                          ['A4', True],
                          ['S4', True],
                          ['SL2(3)', True],
                          ['AGL1(5)', True],
                          ['vsd(3,2,3,[[1,1],[0,1]])', True],
                          ['prod(C2,A4)', False]])
def test_is_lossless(spec, expected):
    L, verdict = _verdict(spec)
    assert bool(verdict) == expected
    if not expected:
        assert verify_lossless_witness(L, verdict.witness)
    else:
        assert verdict.witness is None


@pytest.mark.common
def test_c2xa4_witness(c2xa4_lattice):
    """
    The witness lives in a Klein four subgroup whose normalizer is abelian
    """
    verdict = is_lossless(c2xa4_lattice.group, c2xa4_lattice, threads=2)
    assert not verdict
    H, K, g = verdict.witness
    assert c2xa4_lattice.order(H) == 4
    assert c2xa4_lattice.order(K) == 2
    assert c2xa4_lattice.conjugate(K, g) != K

    data = verdict.to_json(c2xa4_lattice)
    assert data["group"] == "prod(C2,A4)"
    assert data["lossless"] is False
    assert data["witness"]["H_order"] == 4
    assert data["witness"]["gK"] == c2xa4_lattice.conjugate(K, g)
    assert is_lossless(c2xa4_lattice.group, c2xa4_lattice).witness == verdict.witness


@pytest.mark.common
def test_verify_rejects_bad_witness(s3_lattice):
    assert not verify_lossless_witness(s3_lattice, (s3_lattice.top, 1, 0))
    assert not verify_lossless_witness(s3_lattice, (1, 1, 0))


@pytest.mark.integration
@pytest.mark.parametrize('spec', ['vsd(3,3,3,[[1,1,1],[0,1,1],[0,0,1]])', 'sd(27,8,6)', 'SL2(7)'])
def test_lossy_corpus(spec):
    L, verdict = _verdict(spec, threads=2)
    assert not verdict
    assert verify_lossless_witness(L, verdict.witness)


@pytest.mark.integration
def test_order16_groups_are_lossless():
    for name, spec in get_group_catalog("order16"):
        G = build_group(spec)
        assert is_lossless(G, enumerate_subgroups(G)), name


@pytest.mark.common
@pytest.mark.parametrize('spec,expected',
                         [['S3', True],
                          ['SL2(3)', True],
                          ['Q8', True],
                          ['D4', False],
                          ['prod(C2,C2)', False]])
def test_universally_lossless(spec, expected):
    G = build_group(spec)
    L = enumerate_subgroups(G)
    assert is_universally_lossless(G, L) == expected
    witness = universally_lossless_witness(G, L)
    if witness is not None:
        a, b = witness
        assert L.order(a) == L.order(b)
        assert not L.are_conjugate(a, b)


@pytest.mark.integration
def test_sl2_5_universally_lossless():
    G = build_group("SL2(5)")
    assert is_universally_lossless(G, enumerate_subgroups(G))


@pytest.mark.common
@pytest.mark.parametrize('spec,expected', [['S3', True], ['A4', True], ['Q8', True], ['D4', False]])
def test_all_pronormal(spec, expected):
    """
    Pronormality of every subgroup implies losslessness; in a p-group it means every subgroup is normal
    """
    G = build_group(spec)
    L = enumerate_subgroups(G)
    assert all_pronormal(G, L) == expected
    if expected:
        assert is_lossless(G, L)
    assert is_pronormal(G, L, L.top)


CORPUS = ["D{}".format(n) for n in range(3, 13)] + ["Dic{}".format(n) for n in range(2, 8)] \
    + ["SD4", "SD5", "MM4", "MM5", "SL2(2)"]


@pytest.mark.common
@pytest.mark.parametrize('spec', CORPUS + [pytest.param('SL2(5)', marks=pytest.mark.integration)])
def test_lossless_corpus(spec):
    L, verdict = _verdict(spec, threads=2)
    assert verdict, spec
    assert verdict.witness is None


@pytest.mark.common
@pytest.mark.parametrize('spec', ['D4', 'D6', 'Dic3', 'Q8', 'SD4', 'SL2(3)', 'AGL1(5)'])
def test_quotients_stay_lossless(spec):
    G = build_group(spec)
    L = enumerate_subgroups(G)
    assert is_lossless(G, L)
    for N in L.normal_subgroups():
        if N == L.top:
            continue
        Q = quotient_group(G, L.subgroup(N))
        assert Q.order * L.order(N) == G.order
        assert is_lossless(Q, enumerate_subgroups(Q)), (spec, L.order(N))


@pytest.mark.common
@pytest.mark.parametrize('spec', CORPUS + ['C12', 'prod(C3,C9)', 'Q8', 'A4', 'S4', 'SL2(3)', 'AGL1(5)',
                                           'vsd(3,2,3,[[1,1],[0,1]])', 'prod(C2,A4)'])
def test_sufficient_criteria_are_sound(spec):
    G = build_group(spec)
    L = enumerate_subgroups(G)
    report = lossless_criteria(G, L)
    assert set(report.holds()) <= set(SUFFICIENT)
    if report.implies_lossless:
        assert is_lossless(G, L), (spec, report.holds())
