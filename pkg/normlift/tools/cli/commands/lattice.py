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
              help="Print the Hasse diagram in DOT format, colored by conjugacy class.")
@click.option("--json", "output_format",
              flag_value="json",
              help="Print the lattice as a JSON document.")
@click.option("--output", "-o",
              required=False,
              type=click.Path(dir_okay=False),
              help="Write the result to a file instead of stdout.")
@click.option("--progress",
              flag_value=True,
              default=False,
              help="Show a progress bar while the subgroups are computed.")
def lattice(spec, output_format, output, progress):
    """
    Computes the subgroup lattice of the group given by SPEC, e.g. D9 or prod(C2,A4)
    """
    try:
        from normlift.groups.group_factory import build_group
        from normlift.lattice.subgroup_lattice import enumerate_subgroups

        L = enumerate_subgroups(build_group(spec), progress=progress)
        if output_format == "dot":
            text = L.to_dot()
        elif output_format == "json":
            text = to_json_string(L.to_json())
        else:
            text = "{} subgroups in {} conjugacy classes".format(L.size, L.num_classes)
        emit_text(text, output)
    except Exception as e:
        sys.exit("Error while computing the subgroup lattice of {}: {}".format(spec, str(e)))
