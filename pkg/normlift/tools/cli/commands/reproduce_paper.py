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

LOSSLESS_CORPUS = (
    [("C12", True), ("prod(C2,C2)", True), ("prod(C3,C9)", True)]
    + [("D{}".format(n), True) for n in range(3, 13)]
    + [("Dic{}".format(n), True) for n in range(2, 8)]
    + [("SD4", True), ("SD5", True), ("MM4", True), ("MM5", True)]
    + [("Q8", True), ("D4", True), ("vsd(3,2,3,[[1,1],[0,1]])", True)]
    + [("SL2(2)", True), ("SL2(3)", True), ("SL2(5)", True)]
    + [("prod(C2,A4)", False), ("vsd(3,3,3,[[1,1,1],[0,1,1],[0,0,1]])", False), ("sd(27,8,6)", False),
       ("SL2(7)", False)]
)

UNIVERSALLY_LOSSLESS = ("SL2(3)", "SL2(5)")

LIFT_COUNTS = (("S3", 10, 9), ("D9", 68, 56), ("AGL1(5)", 68, 59), ("AGL1(7)", 450, 400))

CHAIN_COUNTS = ((1, 2), (2, 5), (3, 14), (4, 42))


def _lattice(spec):
    from normlift.groups.group_factory import build_group
    from normlift.lattice.subgroup_lattice import enumerate_subgroups

    G = build_group(spec)
    return G, enumerate_subgroups(G)


def _count(source, threads):
    from normlift.transfer.enumeration import enumerate_transfer_systems

    return len(enumerate_transfer_systems(source, threads=threads))


def _lift_counts(spec, threads):
    from normlift.lifting.lift_report import lift_report

    report = lift_report(_lattice(spec)[1], threads=threads)
    return "{}/{}".format(report.total_cat, report.liftable)


def _lossless(spec, threads):
    from normlift.lossless.verdicts import is_lossless, verify_lossless_witness

    G, L = _lattice(spec)
    verdict = is_lossless(G, L, threads=threads)
    if not verdict and not verify_lossless_witness(L, verdict.witness):
        raise ValueError("the lossy witness does not validate")
    return bool(verdict)


def _universally_lossless(spec):
    from normlift.lossless.verdicts import is_universally_lossless

    return is_universally_lossless(*_lattice(spec))


def _order16(threads):
    from normlift.groups.group_factory import build_group, get_group_catalog
    from normlift.lattice.subgroup_lattice import enumerate_subgroups
    from normlift.lossless.verdicts import is_lossless

    verdicts = []
    for _, spec in get_group_catalog("order16"):
        G = build_group(spec)
        verdicts.append(bool(is_lossless(G, enumerate_subgroups(G), threads=threads)))
    return "{}/{}".format(sum(verdicts), len(verdicts))


def paper_rows(skip_slow=False, threads=None):
    """ (row name, thunk, expected value) for every check of the verification table """
    from normlift.posets.constructions import chain, named_poset

    rows = [("[1]x[1] cat", lambda: _count(named_poset("square"), threads), 10),
            ("[1]x[1]x[1] cat", lambda: _count(named_poset("cube"), threads), 450)]
    rows += [("[{}] cat".format(n), lambda n=n: _count(chain(n), threads), expected) for n, expected in CHAIN_COUNTS]
    rows += [("{} cat/liftable".format(spec), lambda spec=spec: _lift_counts(spec, threads),
              "{}/{}".format(total, liftable)) for spec, total, liftable in LIFT_COUNTS]
    rows += [("{} direct G-enumeration".format(spec), lambda spec=spec: _count(_lattice(spec)[1], threads), liftable)
             for spec, _, liftable in LIFT_COUNTS if not (skip_slow and spec == "AGL1(7)")]
    rows += [("{} lossless".format(spec), lambda spec=spec: _lossless(spec, threads), expected)
             for spec, expected in LOSSLESS_CORPUS]
    rows.append(("order 16 lossless", lambda: _order16(threads), "14/14"))
    rows += [("{} universally lossless".format(spec), lambda spec=spec: _universally_lossless(spec), True)
             for spec in UNIVERSALLY_LOSSLESS]
    return rows


def _format(value):
    return str(value).lower() if isinstance(value, bool) else str(value)


@click.command("reproduce-paper")
@click.option("--skip-slow", "--skip_slow",
              flag_value=True,
              default=False,
              help="Skip the direct enumeration of the AGL1(7)-transfer systems.")
@click.option("--threads",
              required=False,
              type=click.IntRange(min=1),
              default=None,
              help="Worker processes for enumerations and lossless checks. [default: all available CPUs]")
def reproduce_paper(skip_slow, threads):
    """
    Recomputes the verification table of transfer system counts and lossless verdicts. Every row is marked OK or
    FAIL; the exit status is 1 if any row fails.
    """
    failed = 0
    for name, compute, expected in paper_rows(skip_slow, threads):
        try:
            value = _format(compute())
        except Exception as e:
            value = "error ({})".format(str(e))
        status = "OK" if value == _format(expected) else "FAIL"
        failed += status == "FAIL"
        print("{}: {} (expected {}) {}".format(name, value, _format(expected), status), flush=True)

    if failed:
        sys.exit(1)
