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

#include "knotscan/alexander.hpp"

#include <stdexcept>
#include <utility>

namespace knotscan {

AlexanderPolynomial::AlexanderPolynomial(std::vector<BigInt> symmetric_coeffs)
    : a_(std::move(symmetric_coeffs)) {
    if (a_.empty()) a_.push_back(BigInt(0));
    while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
    BigInt at_one = a_[0];
    for (std::size_t i = 1; i < a_.size(); ++i) at_one += 2 * a_[i];
    if (at_one != 1) {
        throw invalid_form_error("Alexander polynomial must satisfy A(1) = 1, got A(1) = " +
                                 at_one.get_str());
    }
}

AlexanderPolynomial AlexanderPolynomial::from_laurent(const LaurentPolynomial<BigInt>& p) {
    if (!p.is_symmetric()) {
        throw invalid_form_error("Alexander polynomial must be symmetric, A(t) = A(1/t)");
    }
    std::vector<BigInt> a;
    if (!p.is_zero()) {
        long top = std::max(std::abs(p.min_exponent()), std::abs(p.max_exponent()));
        a.reserve(static_cast<std::size_t>(top) + 1);
        for (long e = 0; e <= top; ++e) a.push_back(p.coeff(e));
    }
    return AlexanderPolynomial(std::move(a));
}

LaurentPolynomial<BigInt> AlexanderPolynomial::to_laurent() const {
    long top = static_cast<long>(a_.size()) - 1;
    std::vector<BigInt> c(2 * static_cast<std::size_t>(top) + 1, BigInt(0));
    c[static_cast<std::size_t>(top)] = a_[0];
    for (long i = 1; i <= top; ++i) {
        c[static_cast<std::size_t>(top + i)] = a_[static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(top - i)] = a_[static_cast<std::size_t>(i)];
    }
    return LaurentPolynomial<BigInt>(-top, std::move(c));
}

AlexanderPolynomial conway_to_alexander(const ConwayPolynomial& c) {
    // z^2 = t - 2 + 1/t, accumulated power by power.
    const LaurentPolynomial<BigInt> base(-1, {BigInt(1), BigInt(-2), BigInt(1)});
    LaurentPolynomial<BigInt> acc = LaurentPolynomial<BigInt>::constant(BigInt(1));
    LaurentPolynomial<BigInt> total;
    for (std::size_t i = 0; i <= c.degree_x(); ++i) {
        if (i > 0) acc = acc * base;
        total = total + c.coeff_x(i) * acc;
    }
    AlexanderPolynomial result = AlexanderPolynomial::from_laurent(total);
    if (result.to_laurent().evaluate_at_one() != 1) {
        throw std::logic_error("conway_to_alexander: normalization lost");
    }
    return result;
}

ConwayPolynomial alexander_to_conway(const AlexanderPolynomial& a) {
    const auto& coeffs = a.symmetric_coefficients();
    const std::size_t top = coeffs.size() - 1;

    // p_i(u) with t^i + t^{-i} = p_i(t + 1/t): p_0 = 2, p_1 = u,
    // p_{i+1} = u p_i - p_{i-1}.
    Polynomial<BigInt> in_u = Polynomial<BigInt>::constant(coeffs[0]);
    Polynomial<BigInt> prev = Polynomial<BigInt>::constant(BigInt(2));
    Polynomial<BigInt> cur = Polynomial<BigInt>::monomial(BigInt(1), 1);
    const Polynomial<BigInt> u = cur;
    for (std::size_t i = 1; i <= top; ++i) {
        in_u = in_u + coeffs[i] * cur;
        Polynomial<BigInt> next = u * cur - prev;
        prev = cur;
        cur = next;
    }

    // u = z^2 + 2, evaluated by Horner over Z[z].
    const Polynomial<BigInt> z2_plus_2(std::vector<BigInt>{BigInt(2), BigInt(0), BigInt(1)});
    Polynomial<BigInt> in_z;
    for (long i = in_u.degree(); i >= 0; --i) {
        in_z = in_z * z2_plus_2 +
               Polynomial<BigInt>::constant(in_u.coeff(static_cast<std::size_t>(i)));
    }

    ConwayPolynomial result = ConwayPolynomial::from_poly_z(in_z);
    if (conway_to_alexander(result) != a) {
        throw std::logic_error("alexander_to_conway: round trip failed");
    }
    return result;
}

LaurentPolynomial<Z4> mod4_substitution(const Polynomial<Z4>& conway_mod4) {
    for (long e = 1; e <= conway_mod4.degree(); e += 2) {
        if (conway_mod4.coeff(static_cast<std::size_t>(e)) != Z4(0)) {
            throw std::invalid_argument("mod4_substitution: input must lie in Z4[z^2]");
        }
    }
    // z^2 -> t + 1/t + 2, applied as a ring map (power by power). For
    // n <= 2 this reproduces the monomial shorthand t^n + t^-n + 2; for
    // higher n only the ring map stays congruent to the exact
    // substitution, since t - 2 + 1/t = t + 2 + 1/t mod 4.
    const LaurentPolynomial<Z4> base(-1, {Z4(1), Z4(2), Z4(1)});
    LaurentPolynomial<Z4> power = LaurentPolynomial<Z4>::constant(Z4(1));
    LaurentPolynomial<Z4> total;
    for (long e = 0; e <= conway_mod4.degree(); e += 2) {
        if (e > 0) power = power * base;
        Z4 v = conway_mod4.coeff(static_cast<std::size_t>(e));
        if (v != Z4(0)) total = total + v * power;
    }
    return total;
}

AlexanderTripleSquareResult alexander_triple_square_test(const AlexanderPolynomial& a) {
    AlexanderTripleSquareResult result;
    ConwayPolynomial c = alexander_to_conway(a);
    result.base = triple_square_test(c);
    if (result.base.verdict.square) {
        result.laurent_witness = mod4_substitution(result.base.verdict.witness);
    }
    return result;
}

}  // namespace knotscan
