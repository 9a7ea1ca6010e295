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

from pathlib import Path
from setuptools import setup, find_packages

# read the contents of your README file
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()


def get_requirements(name=None):
    """ Gets the requirements listed in requirements.txt, or in <name>_requirements.txt for an extra """
    file_name = "{}_requirements.txt".format(name) if name else "requirements.txt"
    with open(this_directory / file_name) as f:
        return [r for r in f.read().splitlines() if r and not r.startswith("#")]


COMMON_PACKAGES = get_requirements()

EXTRA_PACKAGES = {
    "dot": get_requirements("dot")
}

setup(name="normlift",
      description="Subgroup lattices, transfer systems and the lifting of categorical transfer systems",
      version="0.1.0",
      license='Apache 2.0',
      author='The normlift Authors',
      long_description=long_description,
      long_description_content_type='text/markdown',
      packages=find_packages(exclude=["tests", "tests.*"]),
      install_requires=COMMON_PACKAGES,
      extras_require=EXTRA_PACKAGES,
      python_requires=">=3.8",
      entry_points={
        "console_scripts": [
            "normlift = normlift.tools.cli.main:cli_group"
            ]
        },
      include_package_data=True
      )
