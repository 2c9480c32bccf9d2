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

#ifndef KNOTSCAN_LAURENT_HPP
#define KNOTSCAN_LAURENT_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotscan/polynomial.hpp"
#include "knotscan/rings.hpp"

namespace knotscan {

/// Dense Laurent polynomial over R: coefficients indexed by exponents
/// lo..hi where lo may be negative. Normalized so both boundary
/// coefficients are nonzero; zero is the empty vector. Immutable value
/// type like Polynomial.
template <typename R>
class LaurentPolynomial {
   public:
    LaurentPolynomial() = default;  // zero

    LaurentPolynomial(long lo, std::vector<R> coeffs) : lo_(lo), c_(std::move(coeffs)) {
        normalize();
    }

    static LaurentPolynomial constant(R value) {
        return LaurentPolynomial(0, std::vector<R>{std::move(value)});
    }

    static LaurentPolynomial monomial(R value, long exponent) {
        return LaurentPolynomial(exponent, std::vector<R>{std::move(value)});
    }

    static LaurentPolynomial from_polynomial(const Polynomial<R>& p) {
        return LaurentPolynomial(0, p.coefficients());
    }

    bool is_zero() const { return c_.empty(); }

    long min_exponent() const {
        if (c_.empty()) throw std::invalid_argument("min_exponent of zero Laurent polynomial");
        return lo_;
    }

    long max_exponent() const {
        if (c_.empty()) throw std::invalid_argument("max_exponent of zero Laurent polynomial");
        return lo_ + static_cast<long>(c_.size()) - 1;
    }

    R coeff(long e) const {
        if (c_.empty() || e < lo_ || e > max_exponent()) return R(0);
        return c_[static_cast<std::size_t>(e - lo_)];
    }

    bool is_symmetric() const {
        if (c_.empty()) return true;
        long hi = max_exponent();
        long bound = std::max(std::abs(lo_), std::abs(hi));
        for (long e = 1; e <= bound; ++e) {
            if (!(coeff(e) == coeff(-e))) return false;
        }
        return true;
    }

    R evaluate_at_one() const {
        R acc(0);
        for (const auto& v : c_) acc += v;
        return acc;
    }

    R evaluate_at_minus_one() const {
        R acc(0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long e = lo_ + static_cast<long>(i);
            if (((e % 2) + 2) % 2 == 0) {
                acc += c_[i];
            } else {
                acc -= c_[i];
            }
        }
        return acc;
    }

    LaurentPolynomial operator-() const {
        std::vector<R> c(c_);
        for (auto& v : c) v = -v;
        return LaurentPolynomial(lo_, std::move(c));
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.lo_, b.lo_);
        long hi = std::max(a.max_exponent(), b.max_exponent());
        std::vector<R> c(static_cast<std::size_t>(hi - lo + 1), R(0));
        for (long e = lo; e <= hi; ++e) {
            c[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
        }
        return LaurentPolynomial(lo, std::move(c));
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a + (-b);
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPolynomial();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == R(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return LaurentPolynomial(a.lo_ + b.lo_, std::move(c));
    }

    friend LaurentPolynomial operator*(const R& s, const LaurentPolynomial& p) {
        std::vector<R> c(p.c_);
        for (auto& v : c) v = s * v;
        return LaurentPolynomial(p.lo_, std::move(c));
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return !(a == b);
    }

   private:
    long lo_ = 0;
    std::vector<R> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
        std::size_t skip = 0;
        while (skip < c_.size() && c_[skip] == R(0)) ++skip;
        if (skip > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
            lo_ += static_cast<long>(skip);
        }
        if (c_.empty()) lo_ = 0;
    }
};

/// t -> -t: coefficients at odd exponents (positive or negative) flip sign.
template <typename R>
LaurentPolynomial<R> substitute_neg(const LaurentPolynomial<R>& p) {
    if (p.is_zero()) return p;
    long lo = p.min_exponent();
    long hi = p.max_exponent();
    std::vector<R> c(static_cast<std::size_t>(hi - lo + 1), R(0));
    for (long e = lo; e <= hi; ++e) {
        R v = p.coeff(e);
        if (((e % 2) + 2) % 2 == 1) v = -v;
        c[static_cast<std::size_t>(e - lo)] = v;
    }
    return LaurentPolynomial<R>(lo, std::move(c));
}

inline LaurentPolynomial<Z4> reduce_mod4(const LaurentPolynomial<BigInt>& p) {
    if (p.is_zero()) return LaurentPolynomial<Z4>();
    long lo = p.min_exponent();
    long hi = p.max_exponent();
    std::vector<Z4> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) c.emplace_back(p.coeff(e));
    return LaurentPolynomial<Z4>(lo, std::move(c));
}

}  // namespace knotscan

#endif
