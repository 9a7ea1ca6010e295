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

import logging
import os
from functools import lru_cache
from pydoc import locate

from normlift import NORMLIFT_BASE_DIR
from normlift.groups.group import Group, check_group_order
from normlift.groups.group_spec import GroupSpec, parse_group_spec
from normlift.utils.errors import InvalidSpec
from normlift.utils.file_utils import read_json_file
from normlift.utils.types import GroupFamily

logger = logging.getLogger(__name__)

GROUP_CATALOG_DIR = os.path.join(NORMLIFT_BASE_DIR, "configs", "groups")

family_map = {
    GroupFamily.TRIVIAL: {"module": "normlift.groups.families", "function": "trivial_table",
                          "syntax": "Trivial | 1 | C1"},
    GroupFamily.CYCLIC: {"module": "normlift.groups.families", "function": "cyclic_table",
                         "syntax": "C<n>"},
    GroupFamily.DIHEDRAL: {"module": "normlift.groups.families", "function": "dihedral_table",
                           "syntax": "D<n>, n > 2"},
    GroupFamily.DICYCLIC: {"module": "normlift.groups.families", "function": "dicyclic_table",
                           "syntax": "Dic<n>, n >= 2"},
    GroupFamily.SEMIDIHEDRAL: {"module": "normlift.groups.families", "function": "semidihedral_table",
                               "syntax": "SD<n>, n >= 4"},
    GroupFamily.MODULAR_MAXIMAL_CYCLIC: {"module": "normlift.groups.families",
                                         "function": "modular_maximal_cyclic_table",
                                         "syntax": "MM<n>, n >= 4"},
    GroupFamily.QUATERNION8: {"module": "normlift.groups.families", "function": "quaternion8_table",
                              "syntax": "Q8"},
    GroupFamily.SYMMETRIC: {"module": "normlift.groups.families", "function": "symmetric_table",
                            "syntax": "S<n>, n <= 6"},
    GroupFamily.ALTERNATING: {"module": "normlift.groups.families", "function": "alternating_table",
                              "syntax": "A<n>, n <= 6"},
    GroupFamily.SL2: {"module": "normlift.groups.families", "function": "sl2_table",
                      "syntax": "SL2(<p>)"},
    GroupFamily.AGL1: {"module": "normlift.groups.families", "function": "agl1_table",
                       "syntax": "AGL1(<p>)"},
    GroupFamily.PRODUCT: {"module": "normlift.groups.families", "function": "product_table",
                          "syntax": "prod(<spec>,<spec>)"},
    GroupFamily.UNIT_SEMIDIRECT: {"module": "normlift.groups.families", "function": "unit_semidirect_table",
                                  "syntax": "sd(<n>,<k>,<m>), k^m = 1 mod n"},
    GroupFamily.VEC_SEMIDIRECT: {"module": "normlift.groups.families", "function": "vec_semidirect_table",
                                 "syntax": "vsd(<p>,<d>,<m>,[[...],...]), A^m = I mod p"},
    GroupFamily.PERM_GENS: {"module": "normlift.groups.families", "function": "perm_gens_table",
                            "syntax": "perm(<file.json>) | perm({\"degree\": n, \"generators\": [...]})"},
}


def list_families():
    """ Returns (family name, syntax) pairs for every supported group family """
    return [(str(family), entry["syntax"]) for family, entry in family_map.items()]


def build_group(spec):
    """
    A factory method for constructing groups from a GroupSpec or its text form.

        Args:
            spec (str or GroupSpec): group descriptor, e.g. "D9" or GroupSpec(GroupFamily.DIHEDRAL, (9,))

        Returns:
            Group whose element 0 is the identity

        Raises:
            InvalidSpec: if the descriptor is malformed or violates a parameter constraint
            TooLarge: if the group order exceeds the configured bound

        Examples:
            >>> from normlift.groups.group_factory import build_group
            >>> build_group("SL2(13)").order
            2184
    """
    if not isinstance(spec, GroupSpec):
        spec = parse_group_spec(spec)

    expected = spec.expected_order()
    if expected is not None:
        check_group_order(expected, "group {}".format(spec))

    return _build_group(spec)


@lru_cache(maxsize=64)
def _build_group(spec):
    entry = family_map[spec.family]
    builder = locate("{}.{}".format(entry["module"], entry["function"]))
    args = [build_group(p) if isinstance(p, GroupSpec) else p for p in spec.params]
    table, labels = builder(*args)

    group = Group(table, spec=spec, labels=labels)
    expected = spec.expected_order()
    if expected is not None and group.order != expected:
        raise InvalidSpec("Group {} was built with order {}, expected {}".format(spec, group.order, expected))
    logger.info("Built group %s of order %d", spec, group.order)
    return group


def get_group_catalog(name):
    """
    Loads a shipped group catalog, e.g. "order16", as a list of (name, GroupSpec) pairs. Entries may refer to
    permutation fixtures next to the catalog file.
    """
    catalog_file = os.path.join(GROUP_CATALOG_DIR, "{}.json".format(name))
    if not os.path.isfile(catalog_file):
        options = sorted(os.path.splitext(f)[0] for f in os.listdir(GROUP_CATALOG_DIR)
                         if f.endswith(".json") and not f.startswith("perm_"))
        raise InvalidSpec("Unknown group catalog: {} (Select from: {})".format(name, options))

    data = read_json_file(catalog_file, "group_catalog")
    catalog = []
    for entry in data["groups"]:
        text = entry["spec"]
        if text.startswith("perm(") and not text.startswith("perm({"):
            fixture = text[len("perm("):-1]
            text = "perm({})".format(os.path.join(GROUP_CATALOG_DIR, fixture))
        catalog.append((entry["name"], parse_group_spec(text)))
    return catalog
