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

import copy
import os
from functools import lru_cache

from normlift import NORMLIFT_BASE_DIR
from normlift.utils.errors import InvalidSpec
from normlift.utils.file_utils import read_yaml_file

SETTINGS_FILE = os.path.join(NORMLIFT_BASE_DIR, "configs", "settings.yaml")
MAX_GROUP_ORDER_ENV = "NORMLIFT_MAX_GROUP_ORDER"


@lru_cache(maxsize=None)
def _load_settings():
    return read_yaml_file(SETTINGS_FILE)


def _max_group_order_override():
    """ The NORMLIFT_MAX_GROUP_ORDER value, or None when the variable is unset """
    override = os.environ.get(MAX_GROUP_ORDER_ENV)
    if override is None:
        return None
    try:
        value = int(override)
    except ValueError:
        raise InvalidSpec("{} must be an integer, but was '{}'".format(MAX_GROUP_ORDER_ENV, override))
    if value < 1:
        raise InvalidSpec("{} must be positive, but was {}".format(MAX_GROUP_ORDER_ENV, value))
    return value


def get_settings():
    """
    Returns a copy of the packaged settings with environment overrides applied.

    :return: Dictionary of settings sections
    """
    settings = copy.deepcopy(_load_settings())
    override = _max_group_order_override()
    if override is not None:
        settings["limits"]["max_group_order"] = override
    return settings


def setting(section, key):
    """ Returns a single value from the settings file, e.g. setting("harness", "seed") """
    settings = _load_settings()
    if section not in settings or key not in settings[section]:
        raise KeyError("Unknown setting: {}.{}".format(section, key))
    if (section, key) == ("limits", "max_group_order"):
        override = _max_group_order_override()
        if override is not None:
            return override
    value = settings[section][key]
    # containers are copied, the cached settings stay untouched
    return copy.deepcopy(value) if isinstance(value, (dict, list)) else value


def limit(name):
    """ Returns one of the configured size bounds from the 'limits' section """
    return setting("limits", name)
