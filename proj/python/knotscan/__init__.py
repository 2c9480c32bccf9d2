# Copyright 2026 the knotscan authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact amphicheirality obstructions from Conway polynomials."""

from ._core import (
    ConwayPolynomial,
    InvalidFormError,
    IoError,
    ParseError,
    alexander_to_conway,
    alexander_triple_square_test,
    analyze_embedded,
    analyze_file,
    closed_form_b,
    conway_to_alexander,
    determinant,
    exp_z,
    hk_factorization,
    log_z,
    mod2_criterion,
    pc_parity_criterion,
    pc_sequence,
    selftest_json,
    sum_of_two_squares,
    triple_product,
    triple_square_test,
    v3_from_jones,
    __version__,
)

__all__ = [
    "ConwayPolynomial",
    "InvalidFormError",
    "IoError",
    "ParseError",
    "alexander_to_conway",
    "alexander_triple_square_test",
    "analyze_embedded",
    "analyze_file",
    "closed_form_b",
    "conway_to_alexander",
    "determinant",
    "exp_z",
    "hk_factorization",
    "log_z",
    "mod2_criterion",
    "pc_parity_criterion",
    "pc_sequence",
    "selftest_json",
    "sum_of_two_squares",
    "triple_product",
    "triple_square_test",
    "v3_from_jones",
    "__version__",
]
