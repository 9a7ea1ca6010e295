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


class NormliftError(ValueError):
    """ Base class for the domain errors raised by normlift """
    pass


class InvalidSpec(NormliftError):
    """ A malformed group spec or input file, or a setting outside its allowed range """
    pass


class TooLarge(NormliftError):
    """ An input exceeds one of the configured size bounds """
    pass


class NotASubgroup(NormliftError):
    """ An element set that was expected to be a subgroup is not closed under multiplication """
    pass


class NotNormal(NormliftError):
    """ A subgroup that was expected to be normal is not """
    pass


class InvalidArrow(NormliftError):
    """ A seed arrow (i, j) does not respect the order of its carrier """
    pass


class CarrierMismatch(NormliftError):
    """ A relation was passed together with a carrier it was not built on """
    pass


class NotMcf(NormliftError):
    """ The group is not a metacyclic Frobenius group """
    pass


class BadPrime(NormliftError):
    """ The prime is outside the range handled by the SL2 split construction """
    pass


class InvalidTriple(NormliftError):
    """ A triple of categorical transfer systems is not a split transfer system """
    pass
