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

from normlift.utils.file_utils import emit_text, to_json_string


@click.command("sl2-conjecture")
@click.option("--p", "p",
              required=False,
              type=int,
              default=13,
              show_default=True,
              help="Prime congruent to 3 or 5 mod 8.")
@click.option("--samples",
              required=False,
              type=click.IntRange(min=0),
              default=None,
              help="Number of random orbit samples. [default: harness.samples from the settings]")
@click.option("--seed",
              required=False,
              type=int,
              default=None,
              help="Random seed. [default: harness.seed from the settings]")
@click.option("--exhaustive-singles/--no-exhaustive-singles",
              default=True,
              show_default=True,
              help="Also check the closure of every single arrow orbit.")
@click.option("--extended",
              flag_value=True,
              default=False,
              help="Admit the extended primes (19, 29). These may need NORMLIFT_MAX_GROUP_ORDER raised.")
@click.option("--threads",
              required=False,
              type=click.IntRange(min=1),
              default=None,
              help="Worker processes for the samples. [default: all available CPUs]")
@click.option("--progress",
              flag_value=True,
              default=False,
              help="Show progress bars.")
@click.option("--json", "as_json",
              flag_value=True,
              default=False,
              help="Print the full JSON report instead of the summary table.")
@click.option("--output", "-o",
              required=False,
              type=click.Path(dir_okay=False),
              help="Write the JSON report to a file.")
def sl2_conjecture(p, samples, seed, exhaustive_singles, extended, threads, progress, as_json, output):
    """
    Searches for counterexamples to the split transfer system conjecture for SL2(F_p). Counterexamples are
    reported with their certificates; they are findings, so the exit status stays 0.
    """
    try:
        from normlift.sl2split.harness import conjecture_check

        report = conjecture_check(p, samples=samples, seed=seed, exhaustive_singles=exhaustive_singles,
                                  extended=extended, threads=threads, progress=progress)
    except Exception as e:
        sys.exit("Error while checking the split conjecture for SL2({}): {}".format(p, str(e)))

    data = report.to_json()
    if output:
        emit_text(to_json_string(data), output)
    print(to_json_string(data) if as_json else report.table())
    for certificate in report.counterexamples:
        print("Counterexample: {}".format(to_json_string(certificate)))
