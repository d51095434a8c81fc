# Copyright 2026 The crsolve Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Convex recoloring: exact solver, LP relaxations and gap experiments.

Instances are plain dicts in the same JSON layout the command line tool
reads, or a path to such a file.
"""

import csv
import io
import json
import os
from fractions import Fraction

from . import _core
from ._core import CrsolveError

__all__ = [
    "CrsolveError",
    "generate_cr",
    "oracle_opt",
    "relaxation_value",
    "run_experiment",
    "solve",
    "summarize",
]


def _text(instance):
    if isinstance(instance, (str, os.PathLike)):
        with open(instance) as f:
            return f.read()
    return json.dumps(instance)


def solve(instance, level="lp1", mode="separated"):
    report = json.loads(_core.solve(_text(instance), level, mode))
    report["opt_value"] = Fraction(report["opt_value"])
    return report


def relaxation_value(instance, level="lp1", mode="separated"):
    return _core.relaxation_value(_text(instance), level, mode)


def oracle_opt(instance):
    return Fraction(_core.oracle_opt(_text(instance)))


def generate_cr(n, alpha, seed):
    return json.loads(_core.generate_cr(n, alpha, seed))


def run_experiment(problem="cr", n=(10, 12, 14), alpha=(1, 2, 3), per_cell=20, seed=1,
                   lp1plus=False, threads=1):
    """Returns the gap records as a list of dicts (CSV column -> string)."""
    text = _core.run_experiment(problem, list(n), list(alpha), per_cell, seed, lp1plus, threads)
    return list(csv.DictReader(io.StringIO(text)))


def summarize(records):
    if isinstance(records, (str, os.PathLike)):
        with open(records) as f:
            return _core.summarize(f.read())
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=list(records[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return _core.summarize(out.getvalue())
