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

from normlift.utils.settings import setting


def configure_logging(verbosity=0):
    """
    Configures the root logger for command line use. The level comes from the settings file and is lowered to INFO
    for one -v and DEBUG for two. Log records go to stderr so that stdout only carries command results.
    """
    level = logging.getLevelName(str(setting("logging", "level")).upper())
    if not isinstance(level, int):
        level = logging.WARNING

    if verbosity == 1:
        level = min(level, logging.INFO)
    elif verbosity >= 2:
        level = logging.DEBUG

    logging.basicConfig(level=level, format=setting("logging", "format"), force=True)
    return level
