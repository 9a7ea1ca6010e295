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

DEFAULT_PALETTE = ["lightblue", "lightgoldenrod", "palegreen", "lightpink", "lightsalmon", "thistle", "khaki",
                   "lightcyan", "wheat", "plum", "honeydew", "mistyrose"]


def hasse_dot(labels, hasse_edges, extra_edges=None, groups=None):
    """
    Renders a Hasse diagram (drawn bottom to top) in DOT format.

    :param labels: One label per node
    :param hasse_edges: Covering pairs (i, j), drawn gray
    :param extra_edges: Optional relation arrows (i, j), drawn red
    :param groups: Optional per node group id; nodes of one group share a fill color
    :return: DOT source string
    """
    from pydotplus import graph_from_edges
    from pydotplus.graphviz import Edge, Node

    g = graph_from_edges([], directed=True)
    g.set_rankdir("BT")
    for i, label in enumerate(labels):
        style = {}
        if groups is not None:
            style = {"style": "filled", "fillcolor": DEFAULT_PALETTE[groups[i] % len(DEFAULT_PALETTE)]}
        g.add_node(Node(i, label='"{}"'.format(label), **style))
    for i, j in hasse_edges:
        g.add_edge(Edge(i, j, color="gray"))
    for i, j in extra_edges or []:
        g.add_edge(Edge(i, j, color="red", constraint="false"))
    return g.to_string()
