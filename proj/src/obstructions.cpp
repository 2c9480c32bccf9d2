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

#include "knotscan/obstructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotscan/series.hpp"

namespace knotscan {

Polynomial<BigInt> triple_product(const ConwayPolynomial& c) {
    Polynomial<BigInt> f = c.as_poly_x();
    Polynomial<BigInt> t = f * substitute_neg(f) * substitute_square(f);
    return substitute_square(t);  // back to the z variable
}

SquareVerdict z4_square_test(const Polynomial<BigInt>& p) {
    if (mod_ui(p.coeff(0), 4) != 1) {
        throw std::invalid_argument("z4_square_test: constant term must be 1 mod 4");
    }
    const Polynomial<Z4> p4 = reduce_mod4(p);
    const Polynomial<Z2> p2 = reduce_mod2(p4);

    SquareVerdict verdict;

    // A square mod 2 is a polynomial in x^2, so odd support obstructs.
    for (long e = 1; e <= p2.degree(); e += 2) {
        if (p2.coeff(static_cast<std::size_t>(e)) != Z2(0)) {
            verdict.square = false;
            verdict.first_failure_exponent = static_cast<std::size_t>(e);
            return verdict;
        }
    }

    // The root mod 2 is forced; lift it with 0/1 coefficients. Since
    // (H + 2E)^2 = H^2 mod 4, this single candidate decides squareness.
    std::vector<Z4> root(p2.degree() >= 0 ? static_cast<std::size_t>(p2.degree() / 2) + 1 : 1,
                         Z4(0));
    for (long e = 0; e <= p2.degree(); e += 2) {
        if (p2.coeff(static_cast<std::size_t>(e)) != Z2(0)) {
            root[static_cast<std::size_t>(e / 2)] = Z4(1);
        }
    }
    Polynomial<Z4> candidate(std::move(root));
    Polynomial<Z4> squared = candidate * candidate;

    long top = std::max(squared.degree(), p4.degree());
    for (long e = 0; e <= top; ++e) {
        if (squared.coeff(static_cast<std::size_t>(e)) != p4.coeff(static_cast<std::size_t>(e))) {
            verdict.square = false;
            verdict.first_failure_exponent = static_cast<std::size_t>(e);
            return verdict;
        }
    }

    verdict.square = true;
    verdict.witness = candidate;
    if (!(verdict.witness * verdict.witness == p4)) {
        throw std::logic_error("z4_square_test: witness failed re-verification");
    }
    return verdict;
}

TripleSquareResult triple_square_test(const ConwayPolynomial& c) {
    TripleSquareResult result;
    result.triple = triple_product(c);
    result.verdict = z4_square_test(result.triple);

    if (result.verdict.square) {
        for (long e = 1; e <= result.verdict.witness.degree(); e += 2) {
            if (result.verdict.witness.coeff(static_cast<std::size_t>(e)) != Z4(0)) {
                throw std::logic_error("triple_square_test: witness has odd z support");
            }
        }
    }

    const long deg_z = result.triple.degree();
    const std::size_t window = deg_z >= 0 ? static_cast<std::size_t>(deg_z) / 2 : 0;
    if (window >= 4) {
        ExponentSequence pc = pc_sequence(c, window / 2);
        for (std::size_t index = 4; index <= window; index += 4) {
            int parity = static_cast<int>(mod_ui(pc.at(index / 2), 2));
            result.pc_parities.push_back(PcParity{index, parity});
            if (result.verdict.square && parity != 0) result.parity_consistent = false;
        }
    }
    return result;
}

HKVerdict hk_factorization(const ConwayPolynomial& c) {
    const Polynomial<BigInt> target = c.as_poly_z();
    IntegerFactorization fac = factor_integer_poly(target);

    // C(0) = 1 forces sign +1 and constant term 1 on every factor.
    if (fac.sign != 1) throw std::logic_error("hk_factorization: unexpected factorization sign");
    for (const auto& f : fac.factors) {
        if (f.coeff(0) != 1) {
            throw std::logic_error("hk_factorization: factor with constant term != 1");
        }
    }

    HKVerdict verdict;
    std::vector<Polynomial<BigInt>> remaining = fac.factors;  // canonically sorted
    std::vector<Polynomial<BigInt>> chosen;
    while (!remaining.empty()) {
        Polynomial<BigInt> alpha = remaining.front();
        remaining.erase(remaining.begin());
        Polynomial<BigInt> mirror = substitute_neg(alpha);
        auto it = std::find(remaining.begin(), remaining.end(), mirror);
        if (it == remaining.end()) {
            verdict.factored = false;
            verdict.reason = "factor has no mirror partner";
            verdict.blocking_factor = alpha;
            return verdict;
        }
        remaining.erase(it);
        chosen.push_back(factor_less(alpha, mirror) ? mirror : alpha);
    }

    Polynomial<BigInt> phi = Polynomial<BigInt>::constant(BigInt(1));
    for (const auto& f : chosen) phi = phi * f;
    if (phi.coeff(0) != 1 || phi * substitute_neg(phi) != target) {
        throw std::logic_error("hk_factorization: phi failed re-verification");
    }
    verdict.factored = true;
    verdict.phi = phi;

    // Strongly positive form C(z) = psi(z^2)^2: integer series sqrt of C
    // in x = z^2 must terminate in a polynomial whose square is exact.
    const Polynomial<BigInt> fx = c.as_poly_x();
    const std::size_t n = static_cast<std::size_t>(fx.degree());
    auto sqrt_attempt = series_sqrt_integer(TruncatedSeries<BigInt>::from_polynomial(fx, n));
    if (sqrt_attempt.ok()) {
        Polynomial<BigInt> psi(sqrt_attempt.root->coefficients());
        if (psi * psi == fx) verdict.strongly_positive = true;
    }
    return verdict;
}

Polynomial<BigInt> polynomial_from_exponents(const ExponentSequence& a) {
    Polynomial<BigInt> acc = Polynomial<BigInt>::constant(BigInt(1));
    for (std::size_t i = 1; i <= a.horizon(); ++i) {
        const BigInt& e = a.at(i);
        if (e < 0) {
            throw std::invalid_argument(
                "polynomial_from_exponents: negative entry would give a series, not a polynomial");
        }
        if (e == 0) continue;
        if (!e.fits_ulong_p()) {
            throw std::invalid_argument("polynomial_from_exponents: entry too large");
        }
        std::vector<BigInt> base(i + 1, BigInt(0));
        base[0] = 1;
        base[i] = (i % 2 == 0) ? 1 : -1;
        acc = acc * pow(Polynomial<BigInt>(std::move(base)), e.get_ui());
    }
    return acc;
}

}  // namespace knotscan
