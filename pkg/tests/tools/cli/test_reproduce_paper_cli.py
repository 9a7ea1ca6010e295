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

from click.testing import CliRunner
from unittest.mock import patch

from normlift.tools.cli.commands.reproduce_paper import CHAIN_COUNTS, LOSSLESS_CORPUS, paper_rows, reproduce_paper


def _fail():
    raise ValueError("boom")


@pytest.mark.common
@patch("normlift.tools.cli.commands.reproduce_paper.paper_rows")
def test_reproduce_paper_all_rows_pass(mock_rows):
    mock_rows.return_value = [("count", lambda: 10, 10), ("verdict", lambda: True, True),
                              ("ratio", lambda: "68/56", "68/56")]
    runner = CliRunner()
    result = runner.invoke(reproduce_paper, ["--skip-slow", "--threads", "3"])

    mock_rows.assert_called_once_with(True, 3)
    assert result.exit_code == 0
    assert result.output.splitlines() == ["count: 10 (expected 10) OK", "verdict: true (expected true) OK",
                                          "ratio: 68/56 (expected 68/56) OK"]


@pytest.mark.common
@patch("normlift.tools.cli.commands.reproduce_paper.paper_rows")
def test_reproduce_paper_failing_rows(mock_rows):
    """
    A wrong value or an exception marks the row FAIL, later rows still run and the exit status is 1
    """
    mock_rows.return_value = [("wrong", lambda: 9, 10), ("raises", _fail, True), ("fine", lambda: 1, 1)]
    runner = CliRunner()
    result = runner.invoke(reproduce_paper, [])

    mock_rows.assert_called_once_with(False, None)
    assert result.exit_code == 1
    assert result.output.splitlines() == ["wrong: 9 (expected 10) FAIL", "raises: error (boom) (expected true) FAIL",
                                          "fine: 1 (expected 1) OK"]


@pytest.mark.common
def test_paper_rows():
    rows = paper_rows()
    names = [name for name, _, _ in rows]
    assert len(names) == len(set(names))
    assert "AGL1(7) direct G-enumeration" in names
    assert "AGL1(7) direct G-enumeration" not in [name for name, _, _ in paper_rows(skip_slow=True)]
    assert len(rows) == 2 + len(CHAIN_COUNTS) + 4 + 4 + len(LOSSLESS_CORPUS) + 1 + 2
    assert dict((name, expected) for name, _, expected in rows)["prod(C2,A4) lossless"] is False


@pytest.mark.common
def test_paper_rows_small_counts():
    """
    Evaluates the categorical counts on chains and the square, which are quick
    """
    for name, compute, expected in paper_rows(threads=1):
        if name.startswith("[") and "x[1]x[1]" not in name:
            assert compute() == expected, name


@pytest.mark.integration
def test_paper_rows_lift_counts():
    for name, compute, expected in paper_rows(threads=2):
        if name in ("S3 cat/liftable", "D9 cat/liftable", "AGL1(5) cat/liftable", "D9 direct G-enumeration"):
            assert compute() == expected, name
