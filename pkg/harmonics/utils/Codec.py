#
#    Copyright (c) 2026 The Schatten Harmonics Authors.
#    All rights reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
#

##
#    @file
#       Wire formats: matrices as JSON arrays of [re, im] pairs, operator
#       fields as {group, dim, values}, reports as JSON lines, and the CSV
#       forms of report summaries and character tables.
#

from __future__ import annotations

import csv
import json
import math

import numpy as np

from harmonics.Driver import HarmonicsUsageError
from harmonics.Utils import formatComplex, formatReal
from harmonics.utils.Fourier import OperatorField
from harmonics.utils.Group import parse_group

SUMMARY_COLUMNS = ("name", "p", "group", "dim", "margin", "holds")


def matrix_to_json(M):
    M = np.asarray(M, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in M]


def matrix_from_json(obj):
    try:
        M = np.array(obj, dtype=float)
    except (TypeError, ValueError) as e:
        raise HarmonicsUsageError("matrix is not an array of [re, im] pairs: %s" % (e))
    if M.ndim != 3 or M.shape[2] != 2:
        raise HarmonicsUsageError("matrix must be rows of [re, im] pairs, got shape %s" % (M.shape,))
    return M[:, :, 0] + 1j * M[:, :, 1]


def field_to_dict(field):
    return {
        "group": str(field.group),
        "dim": field.dim,
        "values": [matrix_to_json(A) for A in field.values],
    }


def field_from_dict(obj, cap=None):
    """Builds an OperatorField from its JSON form; malformed input is a usage error."""
    if not isinstance(obj, dict):
        raise HarmonicsUsageError("a field must be a JSON object with group, dim and values")
    for key in ("group", "dim", "values"):
        if key not in obj:
            raise HarmonicsUsageError("field is missing %r" % (key))

    group = parse_group(obj["group"], cap)
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise HarmonicsUsageError("field dim must be a positive integer, got %r" % (dim,))
    values = obj["values"]
    if not isinstance(values, list) or len(values) != group.order:
        raise HarmonicsUsageError("field over %s needs %d matrices" % (group, group.order))

    matrices = [matrix_from_json(v) for v in values]
    for M in matrices:
        if M.shape != (dim, dim):
            raise HarmonicsUsageError("field matrices must be %dx%d, got %s" % (dim, dim, M.shape))
    return OperatorField(group, np.array(matrices))


def dumps_field(field):
    return json.dumps(field_to_dict(field), sort_keys=True)


def loads_field(text, cap=None):
    try:
        obj = json.loads(text)
    except ValueError as e:
        raise HarmonicsUsageError("field is not valid JSON: %s" % (e))
    return field_from_dict(obj, cap)


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def report_to_json(report):
    """One report per line; non-finite floats are written as strings."""
    return json.dumps(_jsonable(report.to_dict()), sort_keys=True)


def summary_row(report):
    params = report.params
    p = params.get("p")
    return [report.name, "" if p is None else formatReal(p), params.get("group", ""),
            params.get("dim", ""), repr(report.margin), "true" if report.holds else "false"]


def write_summary_csv(reports, stream, header=True):
    writer = csv.writer(stream, lineterminator="\n")
    if header:
        writer.writerow(SUMMARY_COLUMNS)
    for report in reports:
        writer.writerow(summary_row(report))


def write_table_csv(table, stream):
    """A complex table, rows as characters, entries formatted exactly where possible."""
    writer = csv.writer(stream, lineterminator="\n")
    for row in np.asarray(table):
        writer.writerow([formatComplex(complex(z)) for z in row])


def read_table_csv(stream):
    rows = [row for row in csv.reader(stream) if row]
    return np.array([[complex(x.replace(" ", "")) for x in row] for row in rows])
