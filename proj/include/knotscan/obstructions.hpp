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

#ifndef KNOTSCAN_OBSTRUCTIONS_HPP
#define KNOTSCAN_OBSTRUCTIONS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "knotscan/factorization.hpp"
#include "knotscan/formal_log.hpp"
#include "knotscan/invariants.hpp"
#include "knotscan/polynomial.hpp"
#include "knotscan/rings.hpp"

namespace knotscan {

/// Outcome of the Z4 squareness decision. When square, witness^2 equals
/// the tested polynomial over Z4 (re-verified before returning). When
/// not, first_failure_exponent is the smallest exponent at which the
/// forced candidate root fails: the smallest odd exponent in the mod-2
/// support, or the first coefficient where the lifted root's square
/// deviates mod 4.
struct SquareVerdict {
    bool square = false;
    Polynomial<Z4> witness;
    std::size_t first_failure_exponent = 0;
};

/// One pc parity diagnostic: pc_{index} mod 2 with index = 4i.
struct PcParity {
    std::size_t index = 0;
    int parity = 0;
};

/// Verdict for the triple product C(z)C(iz)C(z^2) plus explanatory pc
/// parity diagnostics. When the verdict is SQUARE every listed parity
/// must be even; parity_consistent records that cross-check.
struct TripleSquareResult {
    Polynomial<BigInt> triple;  // exact integer product, in z
    SquareVerdict verdict;
    std::vector<PcParity> pc_parities;  // pc_{4i} mod 2 for 4i <= deg_z(triple)/2
    bool parity_consistent = true;
};

/// Outcome of the mirror factorization search. When factored,
/// phi(z) * phi(-z) equals C exactly and phi(0) = 1; strongly_positive is
/// set when additionally C(z) = psi(z^2)^2 for an integer psi. When not
/// factored, reason names the factor without a mirror partner.
struct HKVerdict {
    bool factored = false;
    Polynomial<BigInt> phi;
    bool strongly_positive = false;
    std::string reason;
    Polynomial<BigInt> blocking_factor;  // the unpaired factor, when not factored
};

/// The exact integer product C(z) C(iz) C(z^2), reported in z. With f the
/// coefficient sequence of C in x = z^2 this is f(x) f(-x) f(x^2) with
/// exponents doubled; C(iz) is realized as f(-x) since (iz)^2 = -z^2.
Polynomial<BigInt> triple_product(const ConwayPolynomial& c);

/// Decides whether P mod 4 is the square of a polynomial over Z4.
/// Requires constant term = 1 mod 4. Exact and finite: a unit square mod
/// 4 is determined by its root mod 2, so the unique candidate root is
/// extracted from P mod 2 (all exponents must be even), lifted with 0/1
/// coefficients, and accepted iff its square reproduces P mod 4.
SquareVerdict z4_square_test(const Polynomial<BigInt>& p);

/// Full squareness obstruction for a Conway polynomial: runs
/// z4_square_test on the triple product, checks the witness lies in
/// Z4[z^2], and attaches pc_{4i} parity diagnostics.
TripleSquareResult triple_square_test(const ConwayPolynomial& c);

/// Searches the irreducible factor multiset of C(z) for a mirror pairing
/// C(z) = phi(z) phi(-z). Each factor must pair with its own mirror, so
/// factors are stripped in canonical order with the mirror partner
/// looked up in the remainder; per pair the lexicographically larger
/// representative goes into phi.
HKVerdict hk_factorization(const ConwayPolynomial& c);

/// prod (1+(-x)^i)^{a_i} as an exact polynomial; every entry must be
/// nonnegative (a negative entry would make this a series).
Polynomial<BigInt> polynomial_from_exponents(const ExponentSequence& a);

}  // namespace knotscan

#endif
