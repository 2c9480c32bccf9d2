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

#include "knotscan/invariants.hpp"

#include <stdexcept>

#include "knotscan/series.hpp"

namespace knotscan {

ConwayPolynomial::ConwayPolynomial(std::vector<BigInt> even_coeffs) : c_(std::move(even_coeffs)) {
    if (c_.empty() || c_[0] != 1) {
        throw invalid_form_error("Conway polynomial must have constant term 1");
    }
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

ConwayPolynomial ConwayPolynomial::from_poly_z(const Polynomial<BigInt>& p) {
    std::vector<BigInt> c;
    for (long e = 0; e <= p.degree(); ++e) {
        BigInt v = p.coeff(static_cast<std::size_t>(e));
        if (e % 2 == 1) {
            if (v != 0) {
                throw invalid_form_error("Conway polynomial has odd power z^" + std::to_string(e));
            }
            continue;
        }
        c.push_back(v);
    }
    if (c.empty()) c.push_back(BigInt(0));
    return ConwayPolynomial(std::move(c));
}

ConwayPolynomial ConwayPolynomial::from_poly_x(const Polynomial<BigInt>& p) {
    std::vector<BigInt> c(p.coefficients());
    if (c.empty()) c.push_back(BigInt(0));
    return ConwayPolynomial(std::move(c));
}

Polynomial<BigInt> ConwayPolynomial::as_poly_z() const {
    return substitute_square(Polynomial<BigInt>(c_));
}

JonesPolynomial::JonesPolynomial(LaurentPolynomial<BigInt> p) : p_(std::move(p)) {
    if (p_.evaluate_at_one() != 1) {
        throw invalid_form_error("Jones polynomial must satisfy J(1) = 1");
    }
}

ExponentSequence pc_sequence(const ConwayPolynomial& c, std::size_t horizon) {
    auto f = TruncatedSeries<BigInt>::from_polynomial(c.as_poly_x(), horizon);
    return log_z(f);
}

int mod2_criterion(const ConwayPolynomial& c, int k) {
    const BigInt c2 = c.coeff_x(1);
    const BigInt c4 = c.coeff_x(2);
    const BigInt c6 = c.coeff_x(3);
    const BigInt c8 = c.coeff_x(4);
    const BigInt c10 = c.coeff_x(5);
    const BigInt c12 = c.coeff_x(6);

    BigInt value;
    switch (k) {
        case 1:
            value = c4 + exact_div(c2 * c2 + c2, BigInt(2));
            break;
        case 2:
            value = c8 + c2 * (c6 + c4) + exact_div(c4 * c4 - c4, BigInt(2)) +
                    exact_div(c2 * c2 * c2 * c2 + c2 * c2 + 2 * c2, BigInt(4));
            break;
        case 3: {
            BigInt u = c2 * c4;
            value = c12 + c2 * (c10 + c4 + c6 + c8) + c4 * c8 +
                    exact_div(c6 * c6 + c6, BigInt(2)) + exact_div(u - 3 * u * u, BigInt(2));
            break;
        }
        default:
            throw std::invalid_argument("mod2_criterion: k must be 1, 2 or 3");
    }
    return static_cast<int>(mod_ui(value, 2));
}

int pc_parity_criterion(const ConwayPolynomial& c, std::size_t i) {
    if (i < 1) throw std::invalid_argument("pc_parity_criterion: i must be >= 1");
    auto pc = pc_sequence(c, 2 * i);
    return static_cast<int>(mod_ui(pc.at(2 * i), 2));
}

BigInt determinant(const ConwayPolynomial& c) {
    return c.as_poly_x().evaluate(BigInt(-4));
}

TwoSquares sum_of_two_squares(const BigInt& n) {
    TwoSquares result;
    BigInt m = abs(n);
    if (m == 0) {
        result.representable = true;
        result.a = 0;
        result.b = 0;
        return result;
    }

    for (const auto& [p, e] : factor_integer(m)) {
        if (mod_ui(p, 4) == 3 && e % 2 == 1) {
            result.representable = false;
            result.blocking_prime = p;
            return result;
        }
    }

    // Representable; find the witness with the smallest a.
    for (BigInt a = 0; a * a * 2 <= m; ++a) {
        BigInt rest = m - a * a;
        if (is_perfect_square(rest)) {
            result.representable = true;
            result.a = a;
            result.b = isqrt(rest);
            return result;
        }
    }
    throw std::logic_error("sum_of_two_squares: witness search failed for " + m.get_str());
}

BigInt v3_from_jones(const JonesPolynomial& j) {
    const auto& p = j.laurent();
    BigInt d2(0);
    BigInt d3(0);
    if (!p.is_zero()) {
        for (long e = p.min_exponent(); e <= p.max_exponent(); ++e) {
            BigInt coeff = p.coeff(e);
            if (coeff == 0) continue;
            BigInt k(e);
            d2 += coeff * k * (k - 1);
            d3 += coeff * k * (k - 1) * (k - 2);
        }
    }
    Rational v = make_rational(-d2, BigInt(12)) + make_rational(-d3, BigInt(36));
    if (!is_integral(v)) {
        throw invalid_form_error("v3 evaluated to the non-integer " + v.get_str() +
                                 "; input is not a knot Jones polynomial");
    }
    return v.get_num();
}

}  // namespace knotscan
