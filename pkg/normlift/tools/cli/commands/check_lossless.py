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


@click.command("check-lossless")
@click.argument("spec", type=str)
@click.option("--criteria",
              flag_value=True,
              default=False,
              help="Also report the sufficient criteria for losslessness that hold.")
@click.option("--threads",
              required=False,
              type=click.IntRange(min=1),
              default=None,
              help="Worker processes for the class checks. [default: all available CPUs]")
@click.option("--output", "-o",
              required=False,
              type=click.Path(dir_okay=False),
              help="Write the verdict to a file instead of stdout.")
def check_lossless(spec, criteria, threads, output):
    """
    Decides whether the group given by SPEC is lossless and prints the verdict as JSON. Exits with status 1 for a
    lossy group.
    """
    try:
        from normlift.groups.group_factory import build_group
        from normlift.lattice.subgroup_lattice import enumerate_subgroups
        from normlift.lossless.verdicts import is_lossless

        G = build_group(spec)
        L = enumerate_subgroups(G)
        verdict = is_lossless(G, L, threads=threads)
        data = verdict.to_json(L)
        if criteria:
            from normlift.lossless.criteria import lossless_criteria

            data["criteria"] = lossless_criteria(G, L).to_json()
        emit_text(to_json_string(data), output)
    except Exception as e:
        sys.exit("Error while checking losslessness of {}: {}".format(spec, str(e)))

    if not verdict:
        sys.exit(1)
