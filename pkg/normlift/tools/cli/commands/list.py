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


@click.group("list")
def list_group():
    """ Lists the available group families or named posets """
    pass


@list_group.command("families", help="List the supported group families and their spec syntax")
def list_families():
    from normlift.groups.group_factory import list_families as families

    for name, syntax in families():
        print("{}: {}".format(name, syntax))


@list_group.command("posets", help="List the named posets that ship with normlift")
def list_posets():
    from normlift.posets.constructions import list_named_posets

    try:
        print("\n".join(list_named_posets()))
    except Exception as e:
        sys.exit("Error while listing the named posets: {}".format(str(e)))
