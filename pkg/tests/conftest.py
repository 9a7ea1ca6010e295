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

import pytest
from unittest.mock import MagicMock

from normlift.groups.group_factory import build_group
from normlift.lattice.class_poset import quotient_poset
from normlift.lattice.subgroup_lattice import enumerate_subgroups
from normlift.utils.settings import limit


@pytest.fixture
def patch(monkeypatch):
    """
    Replaces a module attribute for the duration of one test, e.g.
    patch('normlift.utils.logging_utils.setting', MagicMock(return_value="WARNING")).
    Without the second arg the replacement is a plain MagicMock().
    """

    def wrapper(path, mock=None):
        if not path.startswith("normlift."):
            raise ValueError("patch expects a full normlift.* path, got {}".format(path))
        m = mock if mock is not None else MagicMock()
        monkeypatch.setattr(path, m)
        return m

    return wrapper


@pytest.fixture
def override_limits(monkeypatch):
    """
    override_limits('normlift.lattice.subgroup_lattice', max_subgroups=3) makes limit() inside that module return
    the given bounds; every other bound keeps its configured value
    """

    def wrapper(module, **bounds):
        monkeypatch.setattr("{}.limit".format(module), lambda name: bounds[name] if name in bounds else limit(name))

    return wrapper


def lattice_of(spec):
    """ Sub(G) for a group spec string """
    return enumerate_subgroups(build_group(spec))


@pytest.fixture(scope="session")
def s3_lattice():
    return lattice_of("S3")


@pytest.fixture(scope="session")
def d9_lattice():
    return lattice_of("D9")


@pytest.fixture(scope="session")
def agl15_lattice():
    return lattice_of("AGL1(5)")


@pytest.fixture(scope="session")
def c2xa4_lattice():
    return lattice_of("prod(C2,A4)")


@pytest.fixture(scope="session")
def sl2_3_lattice():
    return lattice_of("SL2(3)")


@pytest.fixture(scope="session")
def s3_classes(s3_lattice):
    return quotient_poset(s3_lattice)


@pytest.fixture(scope="session")
def d9_classes(d9_lattice):
    return quotient_poset(d9_lattice)
