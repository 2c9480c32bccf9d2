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

#ifndef KNOTSCAN_FACTORIZATION_HPP
#define KNOTSCAN_FACTORIZATION_HPP

#include <vector>

#include "knotscan/polynomial.hpp"
#include "knotscan/rings.hpp"

namespace knotscan {

/// Complete factorization over Z: sign * product(factors) equals the
/// input exactly. Factors are irreducible in Z[x] (prime constants
/// included when the content is nontrivial), each normalized to a
/// positive constant term where one exists (positive leading coefficient
/// otherwise), and listed in canonical order: by degree, then by the
/// coefficient tuple read from the constant term up, with multiplicity.
struct IntegerFactorization {
    int sign = 1;
    std::vector<Polynomial<BigInt>> factors;
};

/// Canonical factor ordering used by IntegerFactorization.
bool factor_less(const Polynomial<BigInt>& a, const Polynomial<BigInt>& b);

/// Factors a nonzero integer polynomial: content extraction, squarefree
/// split, factorization modulo a good small prime (distinct-degree then
/// equal-degree splitting), Hensel lifting past the Mignotte coefficient
/// bound, and subset recombination with trial division.
IntegerFactorization factor_integer_poly(const Polynomial<BigInt>& p);

/// GCD in Z[x] (primitive, positive leading coefficient), by a primitive
/// pseudo-remainder sequence. gcd(0, 0) = 0.
Polynomial<BigInt> int_poly_gcd(const Polynomial<BigInt>& a, const Polynomial<BigInt>& b);

/// Content (gcd of coefficients, nonnegative) and primitive part with
/// positive leading coefficient.
BigInt content(const Polynomial<BigInt>& p);
Polynomial<BigInt> primitive_part(const Polynomial<BigInt>& p);

}  // namespace knotscan

#endif
