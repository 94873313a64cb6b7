# Copyright 2026 The trisum Authors
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
"""Exact solver for sums of triangular numbers.

Integers cross the boundary as Python ints and rationals as
fractions.Fraction, both without loss of precision.
"""

from trisum._trisum import (
    DegenerateParameters,
    DegenerateSpecialization,
    DomainError,
    QuarticDegenerate,
    UnmappablePoint,
    closed_form_eval,
    parametric_linear_solve,
    family_eval,
    generate_solutions,
    inv_tri,
    run_cli,
    run_identity_suite,
    solve_index,
    solve_system1,
    solve_system3,
    specialize_curve,
    tri,
    tri_rational,
)

__all__ = [
    "DegenerateParameters",
    "DegenerateSpecialization",
    "DomainError",
    "QuarticDegenerate",
    "UnmappablePoint",
    "closed_form_eval",
    "parametric_linear_solve",
    "family_eval",
    "generate_solutions",
    "inv_tri",
    "run_cli",
    "run_identity_suite",
    "solve_index",
    "solve_system1",
    "solve_system3",
    "specialize_curve",
    "tri",
    "tri_rational",
]
