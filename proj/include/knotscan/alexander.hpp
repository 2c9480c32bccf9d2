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

#ifndef KNOTSCAN_ALEXANDER_HPP
#define KNOTSCAN_ALEXANDER_HPP

#include <optional>
#include <vector>

#include "knotscan/invariants.hpp"
#include "knotscan/laurent.hpp"
#include "knotscan/obstructions.hpp"
#include "knotscan/rings.hpp"

namespace knotscan {

/// Alexander polynomial in the knot normalization A(t) = A(1/t), A(1)=1,
/// stored in symmetrized form: a_0 plus a_i * (t^i + t^{-i}) for i >= 1,
/// so the symmetry invariant is structural and only A(1)=1 needs
/// checking.
class AlexanderPolynomial {
   public:
    AlexanderPolynomial() : a_{BigInt(1)} {}  // the unknot, A = 1

    /// symmetric_coeffs[0] is a_0, symmetric_coeffs[i] multiplies
    /// t^i + t^{-i}. Throws invalid_form_error when A(1) != 1.
    explicit AlexanderPolynomial(std::vector<BigInt> symmetric_coeffs);

    /// From a raw Laurent polynomial; rejects asymmetric input and
    /// A(1) != 1 with invalid_form_error.
    static AlexanderPolynomial from_laurent(const LaurentPolynomial<BigInt>& p);

    LaurentPolynomial<BigInt> to_laurent() const;

    const std::vector<BigInt>& symmetric_coefficients() const { return a_; }

    /// Highest power of t (0 for constants).
    std::size_t breadth() const { return a_.size() - 1; }

    friend bool operator==(const AlexanderPolynomial& a, const AlexanderPolynomial& b) {
        return a.a_ == b.a_;
    }
    friend bool operator!=(const AlexanderPolynomial& a, const AlexanderPolynomial& b) {
        return !(a == b);
    }

   private:
    std::vector<BigInt> a_;
};

/// Exact substitution z^2 = t - 2 + 1/t. The output satisfies both
/// normalization invariants by construction (checked).
AlexanderPolynomial conway_to_alexander(const ConwayPolynomial& c);

/// Exact inverse substitution: t^i + t^{-i} is rewritten as an integer
/// polynomial in u = t + 1/t, then u = z^2 + 2. Round-tripping through
/// conway_to_alexander is the identity (checked).
ConwayPolynomial alexander_to_conway(const AlexanderPolynomial& a);

/// The mod-4 substitution z^2 -> t + 1/t + 2 applied to a Conway-side
/// polynomial over Z4 (even z support required), as a ring map. For
/// quadratic and quartic terms this is the shorthand z^{2n} -> t^n +
/// t^{-n} + 2; in general it is the reduction of the exact substitution,
/// with which it always agrees mod 4.
LaurentPolynomial<Z4> mod4_substitution(const Polynomial<Z4>& conway_mod4);

struct AlexanderTripleSquareResult {
    TripleSquareResult base;
    std::optional<LaurentPolynomial<Z4>> laurent_witness;  // witness mapped to Z4[t, 1/t]
};

/// Squareness of A(t)A(-t)A(t^2) over Z4[t, 1/t], decided on the Conway
/// side (the two statements are equivalent under the substitution above;
/// one decision procedure, one source of truth). The mapped Laurent
/// witness is attached on success.
AlexanderTripleSquareResult alexander_triple_square_test(const AlexanderPolynomial& a);

}  // namespace knotscan

#endif
