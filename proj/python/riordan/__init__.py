# Copyright 2026 The riordan-kit Authors
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

"""Exact Riordan arrays, one-pth subarrays and Bell polynomial tools.

Every coefficient crosses the boundary as a ``fractions.Fraction``.
"""

from ._riordan import (
    RiordanArray,
    RiordanError,
    SyntaxError,
    array_names,
    bell_polynomial,
    compose,
    partitions,
    pow_rational,
    power_case_beta,
    render,
    revert,
    run_suite,
    series,
    suite_names,
)


def array(source, order=24):
    """Catalog array by name, or a ``"(G, F)"`` expression pair."""
    return RiordanArray.from_source(source, order)


__all__ = [
    "RiordanArray",
    "RiordanError",
    "SyntaxError",
    "array",
    "array_names",
    "bell_polynomial",
    "compose",
    "partitions",
    "pow_rational",
    "power_case_beta",
    "render",
    "revert",
    "run_suite",
    "series",
    "suite_names",
]
