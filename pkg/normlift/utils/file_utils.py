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
from functools import lru_cache

import jsonschema
import yaml

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "schemas")


def _read_document(file_path, loader, kind, schema_name=None):
    if not os.path.isfile(file_path):
        raise FileNotFoundError("The {} file {} does not exist".format(kind, file_path))
    with open(file_path, "r") as f:
        data = loader(f)
    if schema_name:
        validate_json(data, schema_name)
    return data


def read_json_file(json_file_path, schema_name=None):
    """
    Reads a json document, optionally checking it against one of the packaged schemas

    :param json_file_path: Path to the json file
    :param schema_name: Optional schema name, e.g. 'poset'
    :return: Parsed document
    :raises FileNotFoundError: if there is no such file
    :raises jsonschema.ValidationError: if the document does not conform to the schema
    """
    return _read_document(json_file_path, json.load, "json", schema_name)


def read_yaml_file(yaml_file_path):
    """ Parses a yaml file with yaml.safe_load """
    return _read_document(yaml_file_path, yaml.safe_load, "yaml")


def to_json_string(data):
    """ Serializes a document with a fixed key order and layout so repeated runs are byte-identical """
    return json.dumps(data, indent=2, sort_keys=True, separators=(",", ": "))


def write_text_file(file_path, text):
    """
    Writes text to a file, creating the parent directory if needed
    """
    ensure_parent_directory(file_path)

    with open(file_path, "w") as f:
        f.write(text)
        if not text.endswith("\n"):
            f.write("\n")


def write_json_file(file_path, data, schema_name=None):
    """
    Writes a json document, optionally validating it against one of the packaged schemas first
    """
    if schema_name:
        validate_json(data, schema_name)
    write_text_file(file_path, to_json_string(data))


@lru_cache(maxsize=None)
def load_schema(schema_name):
    """
    Loads one of the json schemas shipped in normlift/schemas

    :param schema_name: Schema name without the '.schema.json' suffix, e.g. 'poset'
    :return: Dictionary
    """
    return read_json_file(os.path.join(SCHEMA_DIR, "{}.schema.json".format(schema_name)))


def validate_json(data, schema_name):
    """
    Validates a document against a packaged schema. Raises jsonschema.ValidationError when it does not conform.
    """
    jsonschema.validate(instance=data, schema=load_schema(schema_name))
    return data


def ensure_parent_directory(file_path):
    """ Creates the directory an output file goes into. Raises FileExistsError when a file is in the way. """
    parent = os.path.dirname(file_path)
    if not parent or os.path.isdir(parent):
        return
    if os.path.exists(parent):
        raise FileExistsError("Cannot write {} because {} is a file".format(file_path, parent))
    os.makedirs(parent)


def emit_text(text, output_file=None):
    """
    Prints a command result to stdout, or writes it to output_file when one is given
    """
    if output_file:
        write_text_file(output_file, text)
    else:
        print(text)
