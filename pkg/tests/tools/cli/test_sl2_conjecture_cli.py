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

import json
import os
import pytest
import shutil
import tempfile

from click.testing import CliRunner
from unittest.mock import MagicMock, patch

from normlift.tools.cli.commands.sl2_conjecture import sl2_conjecture


@pytest.mark.common
@patch("normlift.sl2split.harness.conjecture_check")
def test_sl2_conjecture_arguments(mock_check):
    """
    Tests that the options reach the harness and that counterexample certificates are printed. The harness is mocked.
    """
    report = MagicMock()
    report.table.return_value = "p, systems, passed, failed\n13, 7, 6, 1"
    report.to_json.return_value = {"p": 13, "failed": 1}
    report.counterexamples = [{"sample": 4, "label": "random:2"}]
    mock_check.return_value = report

    runner = CliRunner()
    result = runner.invoke(sl2_conjecture, ["--samples", "5", "--seed", "3", "--no-exhaustive-singles",
                                            "--threads", "2"])

    mock_check.assert_called_once_with(13, samples=5, seed=3, exhaustive_singles=False, extended=False, threads=2,
                                       progress=False)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[:2] == ["p, systems, passed, failed", "13, 7, 6, 1"]
    assert lines[2].startswith("Counterexample: {")
    assert '"label": "random:2"' in result.output


@pytest.mark.common
def test_sl2_conjecture_sl2_3():
    """
    Runs the harness on SL2(3) and writes the JSON report to a file
    """
    runner = CliRunner()
    tmp_dir = tempfile.mkdtemp()
    output_file = os.path.join(tmp_dir, "report.json")

    try:
        result = runner.invoke(sl2_conjecture, ["--p", "3", "--samples", "2", "--threads", "1", "-o", output_file])
        assert result.exit_code == 0
        assert result.output.startswith("p, systems, passed, failed\n3, ")

        with open(output_file) as f:
            data = json.load(f)
        assert data["p"] == 3
        assert data["samples"] == 2
        assert data["checked"] == data["passed"] + data["failed"]
    finally:
        if os.path.exists(tmp_dir):
            shutil.rmtree(tmp_dir)


@pytest.mark.common
@pytest.mark.parametrize('p', ['7', '11', '9'])
def test_sl2_conjecture_bad_prime(p):
    runner = CliRunner()
    result = runner.invoke(sl2_conjecture, ["--p", p, "--samples", "1"])
    assert result.exit_code == 1
    assert "Error while checking the split conjecture for SL2({})".format(p) in result.output
