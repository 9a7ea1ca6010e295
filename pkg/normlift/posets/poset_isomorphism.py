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

from networkx.algorithms.isomorphism import DiGraphMatcher

from normlift.utils.errors import TooLarge
from normlift.utils.settings import limit

logger = logging.getLogger(__name__)


def _level_match(a, b):
    return a["level"] == b["level"]


def find_poset_isomorphism(P, Q):
    """
    Searches for an order isomorphism P -> Q. Two finite posets are isomorphic iff their Hasse diagrams are, so the
    search runs networkx's VF2 matcher on the covering graphs with node levels as an extra invariant.

    :return: list f with f[i] the image of element i of P, or None
    :raises TooLarge: if either poset exceeds the configured size bound
    """
    bound = limit("poset_isomorphism_size")
    if P.size > bound or Q.size > bound:
        raise TooLarge("Poset isomorphism is limited to {} elements, got {} and {}".format(bound, P.size, Q.size))
    if P.size != Q.size or int(P.leq.sum()) != int(Q.leq.sum()):
        return None

    matcher = DiGraphMatcher(P.to_networkx(), Q.to_networkx(), node_match=_level_match)
    if not matcher.is_isomorphic():
        return None
    mapping = [matcher.mapping[i] for i in range(P.size)]
    logger.debug("Poset isomorphism found: %s", mapping)
    return mapping


def is_isomorphic_poset(P, Q):
    return find_poset_isomorphism(P, Q) is not None
