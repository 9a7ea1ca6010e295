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
from normlift.utils.types import EnumerationStrategy


@click.command("lift-report")
@click.argument("spec", type=str)
@click.option("--json", "as_json",
              flag_value=True,
              default=False,
              help="Print the per-system verdicts as JSON instead of the summary table.")
@click.option("--strategy",
              required=False,
              type=click.Choice([str(e) for e in EnumerationStrategy]),
              default=str(EnumerationStrategy.NEXT_CLOSURE),
              show_default=True,
              help="Enumeration strategy for the categorical transfer systems on Sub(G)/G.")
@click.option("--threads",
              required=False,
              type=click.IntRange(min=1),
              default=None,
              help="Worker processes for the liftability checks. [default: all available CPUs]")
@click.option("--progress",
              flag_value=True,
              default=False,
              help="Show progress bars.")
@click.option("--output", "-o",
              required=False,
              type=click.Path(dir_okay=False),
              help="Write the report to a file instead of stdout.")
def lift_report(spec, as_json, strategy, threads, progress, output):
    """
    Counts the categorical transfer systems on Sub(G)/G and how many of them lift to G-transfer systems
    """
    try:
        from normlift.groups.group_factory import build_group
        from normlift.lattice.subgroup_lattice import enumerate_subgroups
        from normlift.lifting.lift_report import lift_report as build_report

        L = enumerate_subgroups(build_group(spec), progress=progress)
        report = build_report(L, strategy=strategy, threads=threads, progress=progress)
        emit_text(to_json_string(report.to_json()) if as_json else report.table(), output)
    except Exception as e:
        sys.exit("Error while building the lift report for {}: {}".format(spec, str(e)))
