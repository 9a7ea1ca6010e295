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

from normlift.tools.cli.commands.check_lossless import check_lossless
from normlift.tools.cli.commands.classes import classes
from normlift.tools.cli.commands.closure import closure
from normlift.tools.cli.commands.count_ts import count_ts
from normlift.tools.cli.commands.lattice import lattice
from normlift.tools.cli.commands.lift_report import lift_report
from normlift.tools.cli.commands.list import list_group
from normlift.tools.cli.commands.mcf import mcf, mcf_lift
from normlift.tools.cli.commands.reproduce_paper import reproduce_paper
from normlift.tools.cli.commands.sl2_conjecture import sl2_conjecture


@click.group('cli')
@click.option("--verbose", "-v",
              count=True,
              help="Log progress to stderr; repeat for debug output.")
def cli_group(verbose):
    from normlift.utils.logging_utils import configure_logging

    configure_logging(verbose)


# Add top level commands
cli_group.add_command(list_group)
cli_group.add_command(lattice)
cli_group.add_command(classes)
cli_group.add_command(count_ts)
cli_group.add_command(check_lossless)
cli_group.add_command(lift_report)
cli_group.add_command(mcf)
cli_group.add_command(mcf_lift)
cli_group.add_command(closure)
cli_group.add_command(reproduce_paper)
cli_group.add_command(sl2_conjecture)

if __name__ == '__main__':
    cli_group()
