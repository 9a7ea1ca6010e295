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

from enum import Enum, auto


class GroupFamily(Enum):
    TRIVIAL = auto()
    CYCLIC = auto()
    DIHEDRAL = auto()
    DICYCLIC = auto()
    SEMIDIHEDRAL = auto()
    MODULAR_MAXIMAL_CYCLIC = auto()
    QUATERNION8 = auto()
    SYMMETRIC = auto()
    ALTERNATING = auto()
    SL2 = auto()
    AGL1 = auto()
    PRODUCT = auto()
    UNIT_SEMIDIRECT = auto()
    VEC_SEMIDIRECT = auto()
    PERM_GENS = auto()

    def __str__(self):
        return self.name.lower()

    @staticmethod
    def from_str(family_str):
        family_str = family_str.lower().replace("-", "_").replace(" ", "_")

        aliases = {
            "c": GroupFamily.CYCLIC,
            "d": GroupFamily.DIHEDRAL,
            "dic": GroupFamily.DICYCLIC,
            "sd": GroupFamily.SEMIDIHEDRAL,
            "mm": GroupFamily.MODULAR_MAXIMAL_CYCLIC,
            "q8": GroupFamily.QUATERNION8,
            "s": GroupFamily.SYMMETRIC,
            "a": GroupFamily.ALTERNATING,
            "prod": GroupFamily.PRODUCT,
            "perm": GroupFamily.PERM_GENS,
            "vsd": GroupFamily.VEC_SEMIDIRECT,
        }
        for e in GroupFamily:
            if family_str == e.name.lower():
                return e
        if family_str in aliases:
            return aliases[family_str]

        options = [e.name for e in GroupFamily]
        raise ValueError("Unsupported group family: {} (Select from: {})".format(family_str, options))


class CarrierType(Enum):
    SUBGROUPS = auto()
    POSET = auto()

    def __str__(self):
        return self.name.lower()

    @staticmethod
    def from_str(carrier_str):
        if carrier_str.lower() in ["subgroups", "subgroup", "lattice"]:
            return CarrierType.SUBGROUPS
        elif carrier_str.lower() == "poset":
            return CarrierType.POSET
        else:
            options = [e.name for e in CarrierType]
            raise ValueError("Unsupported carrier: {} (Select from: {})".format(carrier_str, options))


class EnumerationStrategy(Enum):
    NEXT_CLOSURE = auto()
    SUBSETS = auto()
    NAIVE = auto()

    def __str__(self):
        return self.name.lower()

    @staticmethod
    def from_str(strategy_str):
        strategy_str = strategy_str.lower().replace("-", "_")

        if strategy_str in ["next_closure", "nextclosure", "lectic"]:
            return EnumerationStrategy.NEXT_CLOSURE
        elif strategy_str in ["subsets", "subset_closure"]:
            return EnumerationStrategy.SUBSETS
        elif strategy_str in ["naive", "filter"]:
            return EnumerationStrategy.NAIVE
        else:
            options = [e.name for e in EnumerationStrategy]
            raise ValueError("Unsupported enumeration strategy: {} (Select from: {})".format(
                strategy_str, options))


class MaximalKind(Enum):
    TORUS_NORMALIZER = auto()
    BOREL = auto()
    BINARY_POLYHEDRAL = auto()
    OTHER = auto()

    def __str__(self):
        return self.name.lower()

    @staticmethod
    def from_str(kind_str):
        kind_str = kind_str.lower().replace("-", "_").replace(" ", "_")

        for e in MaximalKind:
            if kind_str == e.name.lower():
                return e

        options = [e.name for e in MaximalKind]
        raise ValueError("Unsupported maximal subgroup kind: {} (Select from: {})".format(kind_str, options))
