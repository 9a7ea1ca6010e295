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
@click.option("--dot", "output_format",
              flag_value="dot",
              help="Print the Hasse diagram of Sub(G)/G in DOT format.")
@click.option("--json", "output_format",
              flag_value="json",
              help="Print the classes as a JSON document.")
@click.option("--output", "-o",
              required=False,
              type=click.Path(dir_okay=False),
              help="Write the result to a file instead of stdout.")
def classes(spec, output_format, output):
    """
    Lists the conjugacy classes of subgroups of SPEC, which form the poset Sub(G)/G
    """
    try:
        from normlift.groups.group_factory import build_group
        from normlift.lattice.class_poset import quotient_poset
        from normlift.lattice.subgroup_lattice import enumerate_subgroups

        class_poset = quotient_poset(enumerate_subgroups(build_group(spec)))
        if output_format == "dot":
            text = class_poset.to_dot()
        elif output_format == "json":
            text = to_json_string({"group": spec, "classes": class_poset.class_json(),
                                   "leq": [list(pair) for pair in class_poset.comparable_pairs()]})
        else:
            rows = ["{} classes".format(class_poset.size), "class, label, representative, size, order"]
            rows += ["{class}, {label}, {representative}, {size}, {order}".format(**row)
                     for row in class_poset.class_json()]
            text = "\n".join(rows)
        emit_text(text, output)
    except Exception as e:
        sys.exit("Error while computing the subgroup classes of {}: {}".format(spec, str(e)))
