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

from normlift.sl2split.frame import build_frame
from normlift.sl2split.split import SplitTransferSystem, decompose, is_split_transfer_system, lift_split
from normlift.transfer.closure import cat_closure, g_closure
from normlift.transfer.relation import CatTransferSystem, Relation
from normlift.utils.errors import CarrierMismatch, InvalidTriple


@pytest.fixture(scope="module")
def frame3():
    return build_frame(3)


@pytest.mark.common
@pytest.mark.parametrize('build', [Relation.reflexive, Relation.full])
def test_decompose_and_lift_extremes(frame3, build):
    """
    The reflexive and the full transfer system split into reflexive (full) components and lift back to themselves
    """
    Rg = build(frame3.lattice)
    triple = decompose(frame3, Rg)
    assert triple.R_D.source is frame3.D
    assert triple.R_I.source is frame3.I
    assert triple.R_U.source is frame3.U
    for name, poset in (("R_D", frame3.D), ("R_I", frame3.I), ("R_U", frame3.U)):
        assert getattr(triple, name) == build(poset)

    assert is_split_transfer_system(frame3, triple)
    assert lift_split(frame3, triple) == Rg
    assert set(triple.to_json()) == {"R_D", "R_I", "R_U"}


@pytest.mark.common
def test_decompose_single_arrow(frame3):
    """
    1 -> C4 restricts to 1 -> C2; C4 lies outside U_G so only the restricted arrow reaches R_U
    """
    L = frame3.lattice
    c4 = [i for i in range(L.size) if L.order(i) == 4][0]
    c2 = [i for i in range(L.size) if L.order(i) == 2][0]
    Rg = g_closure(L, [(L.trivial, c4)])
    triple = decompose(frame3, Rg)

    d_trivial = frame3.d_class_of[L.trivial]
    assert d_trivial >= 0
    assert all(triple.R_D.pairs[d_trivial, d] for d in frame3.c4_vertices)
    assert not triple.R_D.pairs[d_trivial, frame3.d_top]

    u = frame3.u_position[L.class_of]
    assert u[c4] == -1
    assert triple.R_U.arrows() == [(int(u[L.trivial]), int(u[c2]))]
    assert is_split_transfer_system(frame3, triple)


@pytest.mark.common
def test_c4_saturation(frame3):
    c4 = frame3.c4_vertices
    r_d = cat_closure(frame3.D, [(int(c4[0]), frame3.d_top)])
    triple = SplitTransferSystem(r_d, CatTransferSystem.reflexive(frame3.I), CatTransferSystem.reflexive(frame3.U))
    result = is_split_transfer_system(frame3, triple)
    assert not result
    assert result.axiom == "c4_saturation"
    assert result.witness == (int(c4[0]), int(c4[1]))

    with pytest.raises(InvalidTriple) as e:
        lift_split(frame3, triple)
    assert "c4_saturation" in str(e.value)


@pytest.mark.common
def test_component_failure(frame3):
    c4 = frame3.c4_vertices
    r_d = Relation.from_arrows(frame3.D, [(int(c4[0]), frame3.d_top)])
    triple = SplitTransferSystem(r_d, Relation.reflexive(frame3.I), Relation.reflexive(frame3.U))
    result = is_split_transfer_system(frame3, triple)
    assert not result
    assert result.axiom == "R_D:restriction"


@pytest.mark.common
def test_compatibility_failure(frame3):
    """ An arrow of R_I that is missing from R_D breaks compatibility along phi_D """
    I_top = frame3.I.size - 1
    r_i = cat_closure(frame3.I, [(0, I_top)])
    triple = SplitTransferSystem(Relation.reflexive(frame3.D), r_i, Relation.reflexive(frame3.U))
    result = is_split_transfer_system(frame3, triple)
    assert not result
    assert result.axiom == "phi_D_compatibility"


@pytest.mark.common
def test_decompose_wrong_lattice(frame3, s3_lattice):
    with pytest.raises(CarrierMismatch):
        decompose(frame3, Relation.reflexive(s3_lattice))


@pytest.mark.integration
def test_borel_arrow_sl2_13():
    """
    C13 -> Borel lives in U_G; restricting it to the split torus inside H_eps forces 1 -> C12 in R_D
    """
    frame = build_frame(13)
    L = frame.lattice
    c13 = [i for i in range(L.size) if L.order(i) == 13][0]
    borel = [i for i in L.up_set(c13) if L.order(i) == 156][0]
    Rg = g_closure(L, [(c13, borel)])
    triple = decompose(frame, Rg)

    u = frame.u_position[L.class_of]
    assert triple.R_U.pairs[u[c13], u[borel]]
    assert triple.R_D.pairs[frame.d_class_of[L.trivial], frame.d_class_of[frame.torus]]
    assert not triple.R_D.pairs[frame.d_class_of[L.trivial], frame.d_top]
    assert lift_split(frame, triple, validate=False).pairs[c13, borel]
