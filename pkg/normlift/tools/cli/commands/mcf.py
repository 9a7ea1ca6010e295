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

import click
import sys

from normlift.utils.file_utils import emit_text, to_json_string


def _mcf_lattice(spec):
    from normlift.groups.group_factory import build_group
    from normlift.lattice.subgroup_lattice import enumerate_subgroups
    from normlift.mcf.structure import mcf_structure
    from normlift.utils.errors import NotMcf

    G = build_group(spec)
    L = enumerate_subgroups(G)
    st = mcf_structure(G, L)
    if st is None:
        raise NotMcf("{} is not a metacyclic Frobenius group".format(spec))
    return L, st


@click.command()
@click.argument("spec", type=str)
@click.option("--output", "-o",
              required=False,
              type=click.Path(dir_okay=False),
              help="Write the result to a file instead of stdout.")
def mcf(spec, output):
    """
    Finds the kernel and complement of a metacyclic Frobenius group and its grid of subgroup classes
    """
    try:
        from normlift.mcf.structure import grid_coordinates, grid_iso

        L, st = _mcf_lattice(spec)
        data = st.to_json()
        data["group"] = spec
        data["grid"] = [list(c) for c in grid_coordinates(L, st)]
        data["grid_index"] = grid_iso(L, st)
        emit_text(to_json_string(data), output)
    except Exception as e:
        sys.exit("Error while analysing {} as a metacyclic Frobenius group: {}".format(spec, str(e)))


@click.command("mcf-lift")
@click.argument("spec", type=str)
@click.option("--input", "-i", "input_file",
              required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Transfer system JSON on Sub(G)/G (carrier 'poset', arrows between class indices).")
@click.option("--source-form", "--source_form",
              flag_value=True,
              default=False,
              help="Require [N_K] -> [K] instead of [N_K] -> [H].")
def mcf_lift(spec, input_file, source_form):
    """
    Decides with the metacyclic Frobenius criterion whether a categorical transfer system on Sub(G)/G lifts
    """
    try:
        from normlift.lattice.class_poset import quotient_poset
        from normlift.mcf.criteria import first_violation
        from normlift.transfer.relation import relation_from_json
        from normlift.transfer.validators import is_cat_transfer_system
        from normlift.utils.errors import InvalidArrow
        from normlift.utils.file_utils import read_json_file

        L, st = _mcf_lattice(spec)
        class_poset = quotient_poset(L)
        Rc = relation_from_json(read_json_file(input_file), class_poset)
        result = is_cat_transfer_system(class_poset, Rc)
        if not result:
            raise InvalidArrow("The input is not a categorical transfer system: {} fails at {}".format(
                result.axiom, result.witness))
        violation = first_violation(L, st, Rc, source_form=source_form)
        data = {"group": spec, "liftable": violation is None,
                "violation": None if violation is None else dict(zip(("K", "H", "N_K"), violation))}
        print(to_json_string(data))
    except Exception as e:
        sys.exit("Error while checking liftability on {}: {}".format(spec, str(e)))
