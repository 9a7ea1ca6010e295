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


@click.command()
@click.argument("spec", type=str)
@click.option("--arrows", "-a", "arrows_file",
              required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Transfer system JSON with the seed arrows. Carrier 'subgroups' closes on Sub(G), carrier 'poset' "
                   "closes on Sub(G)/G.")
@click.option("--dot",
              flag_value=True,
              default=False,
              help="Print the closure as DOT, with its arrows in red over the gray Hasse diagram.")
@click.option("--output", "-o",
              required=False,
              type=click.Path(dir_okay=False),
              help="Write the result to a file instead of stdout.")
def closure(spec, arrows_file, dot, output):
    """
    Computes the least transfer system containing the given arrows
    """
    try:
        from normlift.groups.group_factory import build_group
        from normlift.lattice.class_poset import quotient_poset
        from normlift.lattice.subgroup_lattice import enumerate_subgroups
        from normlift.transfer.closure import close_relation
        from normlift.transfer.relation import relation_from_json
        from normlift.utils.file_utils import read_json_file
        from normlift.utils.types import CarrierType

        data = read_json_file(arrows_file)
        L = enumerate_subgroups(build_group(spec))
        source = L if CarrierType.from_str(data.get("carrier", "")) == CarrierType.SUBGROUPS else quotient_poset(L)
        R = close_relation(source, relation_from_json(data, source))
        emit_text(R.to_dot() if dot else to_json_string(R.to_json()), output)
    except Exception as e:
        sys.exit("Error while computing the closure on {}: {}".format(spec, str(e)))
