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
import os
import sys

from normlift.utils.types import EnumerationStrategy


def load_poset(poset):
    """ A poset JSON file, or the name of a shipped poset """
    from normlift.posets.constructions import named_poset
    from normlift.posets.finite_poset import FinitePoset
    from normlift.utils.file_utils import read_json_file

    if os.path.isfile(poset):
        return FinitePoset.from_json(read_json_file(poset))
    return named_poset(poset)


@click.command("count-ts")
@click.option("--poset",
              required=False,
              type=str,
              help="Poset JSON file, or the name of a shipped poset (see 'normlift list posets').")
@click.option("--group",
              required=False,
              type=str,
              help="Group spec, e.g. D9. Counts on Sub(G), or on Sub(G)/G with --categorical.")
@click.option("--categorical", "kind",
              flag_value="categorical",
              help="Count categorical transfer systems (the default for --poset).")
@click.option("--equivariant", "kind",
              flag_value="equivariant",
              help="Count G-transfer systems on Sub(G) (the default for --group).")
@click.option("--strategy",
              required=False,
              type=click.Choice([str(e) for e in EnumerationStrategy]),
              default=str(EnumerationStrategy.NEXT_CLOSURE),
              show_default=True,
              help="Enumeration strategy.")
@click.option("--threads",
              required=False,
              type=click.IntRange(min=1),
              default=None,
              help="Worker processes for the subsets strategy. [default: all available CPUs]")
@click.option("--progress",
              flag_value=True,
              default=False,
              help="Show progress bars.")
def count_ts(poset, group, kind, strategy, threads, progress):
    """
    Counts the transfer systems on a poset or on the subgroup lattice of a group
    """
    if (poset is None) == (group is None):
        sys.exit("Error while counting transfer systems: exactly one of --poset and --group is required")
    if poset is not None and kind == "equivariant":
        sys.exit("Error while counting transfer systems: --equivariant needs --group")

    try:
        from normlift.transfer.enumeration import enumerate_transfer_systems

        if poset is not None:
            source = load_poset(poset)
        else:
            from normlift.groups.group_factory import build_group
            from normlift.lattice.class_poset import quotient_poset
            from normlift.lattice.subgroup_lattice import enumerate_subgroups

            source = enumerate_subgroups(build_group(group), progress=progress)
            if kind == "categorical":
                source = quotient_poset(source)

        systems = enumerate_transfer_systems(source, strategy=strategy, threads=threads, progress=progress)
        print(len(systems))
    except Exception as e:
        sys.exit("Error while counting transfer systems: {}".format(str(e)))
