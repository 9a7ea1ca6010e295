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
import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from tqdm import tqdm

logger = logging.getLogger(__name__)

BAR_FORMAT = "{l_bar}{bar:50}{r_bar}{bar:-50b}"

# Set once per worker process by the pool initializer
_worker_context = None


def available_threads():
    """ Number of CPUs this process may run on """
    if hasattr(os, "sched_getaffinity"):
        return max(1, len(os.sched_getaffinity(0)))
    return max(1, os.cpu_count() or 1)


def progress_bar(iterable, progress=False, desc=None, total=None):
    """ Wraps an iterable in a tqdm bar that is only drawn when progress is requested """
    return tqdm(iterable, desc=desc, total=total, disable=not progress, bar_format=BAR_FORMAT)


def _init_worker(context):
    global _worker_context
    _worker_context = context


def _call_in_worker(func, item):
    return func(_worker_context, item)


def parallel_map(func, items, context=None, threads=1, progress=False, desc=None, chunksize=1):
    """
    Applies func(context, item) to every item and returns the results in input order.

    The context is shipped to each worker once through the pool initializer instead of once per item. With
    threads <= 1 (or a single item) everything runs in the calling process.

    :param func: Module level function taking (context, item)
    :param items: Iterable of work items
    :param context: Shared read-only state, e.g. a lattice carrier
    :param threads: Number of worker processes; None means all available CPUs
    :param progress: Draw a tqdm progress bar
    :param desc: Progress bar label
    :param chunksize: Items handed to a worker at a time
    :return: List of results
    """
    items = list(items)
    if threads is None:
        threads = available_threads()

    if threads <= 1 or len(items) <= 1:
        return [func(context, item) for item in progress_bar(items, progress, desc)]

    if "fork" in multiprocessing.get_all_start_methods():
        mp_context = multiprocessing.get_context("fork")
    else:
        mp_context = multiprocessing.get_context()

    workers = min(threads, len(items))
    logger.debug("Running %d items on %d worker processes", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers, mp_context=mp_context,
                             initializer=_init_worker, initargs=(context,)) as executor:
        results = executor.map(partial(_call_in_worker, func), items, chunksize=chunksize)
        return list(progress_bar(results, progress, desc, total=len(items)))
