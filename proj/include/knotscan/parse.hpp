/*
   Copyright 2026 the knotscan authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KNOTSCAN_PARSE_HPP
#define KNOTSCAN_PARSE_HPP

#include <string>
#include <string_view>

#include "knotscan/alexander.hpp"
#include "knotscan/errors.hpp"
#include "knotscan/invariants.hpp"
#include "knotscan/laurent.hpp"
#include "knotscan/polynomial.hpp"
#include "knotscan/rings.hpp"

namespace knotscan {

/// Parses a polynomial expression over the given variable ('z' or 't').
///
/// Grammar (whitespace between tokens is ignored):
///   polynomial = [sign] term { sign term }
///   term       = integer [variable-part] | variable-part
///   var-part   = variable [ "^" ["-"] digits ]
/// Terms combine additively and duplicate exponents are summed. Negative
/// exponents are accepted for t only. Syntax errors carry the offending
/// position (parse_error).
LaurentPolynomial<BigInt> parse_polynomial(std::string_view text, char variable);

/// Parses and validates a Conway polynomial in z (even exponents only,
/// constant term 1). Form violations raise invalid_form_error.
ConwayPolynomial parse_conway(std::string_view text);

/// Parses and validates an Alexander polynomial in t (symmetric, A(1)=1).
AlexanderPolynomial parse_alexander(std::string_view text);

/// Canonical rendering, lowest exponent first, e.g. "1 - z^2 + 2z^4".
/// Printing then re-parsing yields an identical value.
std::string to_string(const LaurentPolynomial<BigInt>& p, char variable);
std::string to_string(const Polynomial<BigInt>& p, char variable);
std::string to_string(const Polynomial<Z4>& p, char variable);
std::string to_string(const LaurentPolynomial<Z4>& p, char variable);
std::string to_string(const ConwayPolynomial& c);
std::string to_string(const AlexanderPolynomial& a);

}  // namespace knotscan

#endif
