# Copyright 2026 The wittext Authors
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


"""Exact extension of sl(2) weight modules to Witt and Virasoro actions."""

from ._wittext import (
    WittextError,
    certify_counterexample,
    counterexample,
    criterion,
    criterion_count,
    dense,
    extend,
    finite,
    glue,
    lowest,
    member,
    relation_dim,
    sl2_report,
    verify,
    verma,
)

__version__ = "0.1.0"

__all__ = [
    "WittextError",
    "certify_counterexample",
    "counterexample",
    "criterion",
    "criterion_count",
    "dense",
    "extend",
    "finite",
    "glue",
    "lowest",
    "member",
    "relation_dim",
    "sl2_report",
    "verify",
    "verma",
]
