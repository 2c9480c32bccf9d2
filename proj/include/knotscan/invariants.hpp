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

#ifndef KNOTSCAN_INVARIANTS_HPP
#define KNOTSCAN_INVARIANTS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "knotscan/errors.hpp"
#include "knotscan/formal_log.hpp"
#include "knotscan/laurent.hpp"
#include "knotscan/polynomial.hpp"
#include "knotscan/rings.hpp"

namespace knotscan {

/// Conway polynomial of a knot: an element of 1 + z^2 Z[z^2], stored by
/// its even coefficients (c_[i] is the coefficient of z^{2i}, c_[0] = 1).
/// Multiplication corresponds to connected sum.
class ConwayPolynomial {
   public:
    ConwayPolynomial() : c_{BigInt(1)} {}  // unknot

    /// even_coeffs[i] is the coefficient of z^{2i}; even_coeffs[0] must
    /// be 1. Throws invalid_form_error otherwise.
    explicit ConwayPolynomial(std::vector<BigInt> even_coeffs);

    /// From a polynomial in z: must have only even exponents and
    /// constant term 1.
    static ConwayPolynomial from_poly_z(const Polynomial<BigInt>& p);

    /// From the polynomial in x = z^2 (coefficient of x^i is c_{2i}).
    static ConwayPolynomial from_poly_x(const Polynomial<BigInt>& p);

    std::size_t degree_x() const { return c_.size() - 1; }
    std::size_t degree_z() const { return 2 * (c_.size() - 1); }

    /// Coefficient of z^{2i}.
    BigInt coeff_x(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    const std::vector<BigInt>& coefficients_x() const { return c_; }

    Polynomial<BigInt> as_poly_x() const { return Polynomial<BigInt>(c_); }
    Polynomial<BigInt> as_poly_z() const;

    /// Connected sum.
    friend ConwayPolynomial operator*(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        return from_poly_x(a.as_poly_x() * b.as_poly_x());
    }

    friend bool operator==(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const ConwayPolynomial& a, const ConwayPolynomial& b) {
        return !(a == b);
    }

   private:
    std::vector<BigInt> c_;
};

/// Jones polynomial, validated against the knot normalization J(1) = 1.
class JonesPolynomial {
   public:
    explicit JonesPolynomial(LaurentPolynomial<BigInt> p);

    const LaurentPolynomial<BigInt>& laurent() const { return p_; }

   private:
    LaurentPolynomial<BigInt> p_;
};

/// The primitive invariants of C: log_z applied to C's coefficient
/// sequence in the variable x = z^2. Entry i of the result is pc_{2i};
/// these are additive under connected sum.
ExponentSequence pc_sequence(const ConwayPolynomial& c, std::size_t horizon);

/// The k-th displayed mod-2 obstruction (k = 1, 2, 3 for degrees 4, 8,
/// 12), evaluated verbatim with exact integer arithmetic and reduced mod
/// 2. The half and quarter terms are integral for every input; the exact
/// divisions throw std::logic_error if that ever failed.
int mod2_criterion(const ConwayPolynomial& c, int k);

/// pc_{4i} mod 2. Vanishes on amphicheiral knots.
int pc_parity_criterion(const ConwayPolynomial& c, std::size_t i);

/// Knot determinant: C evaluated at z^2 = -4.
BigInt determinant(const ConwayPolynomial& c);

/// Outcome of the two-squares decision for |n|: a witness pair with
/// a^2 + b^2 = |n|, or the smallest blocking prime (p = 3 mod 4 with odd
/// multiplicity).
struct TwoSquares {
    bool representable = false;
    BigInt a;
    BigInt b;
    BigInt blocking_prime;
};

/// Decides by factorization whether |n| is a sum of two squares, and
/// constructs a witness by bounded search when it is.
TwoSquares sum_of_two_squares(const BigInt& n);

/// v_3 = -J''(1)/12 - J'''(1)/36, via exact Laurent differentiation.
/// The result is asserted integral; a non-integral value signals an
/// invalid Jones input.
BigInt v3_from_jones(const JonesPolynomial& j);

}  // namespace knotscan

#endif
