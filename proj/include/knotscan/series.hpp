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

#ifndef KNOTSCAN_SERIES_HPP
#define KNOTSCAN_SERIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotscan/polynomial.hpp"
#include "knotscan/rings.hpp"

namespace knotscan {

/// Truncated formal power series over R: coefficients are known exactly
/// for exponents 0..order() and unknown (not zero) beyond. Every
/// operation records the weakest guaranteed order of its output, and
/// reading past the order throws.
template <typename R>
class TruncatedSeries {
   public:
    /// coeffs may be shorter than order+1; missing entries are zero.
    TruncatedSeries(std::size_t order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.size() > order + 1) {
            throw std::invalid_argument("TruncatedSeries: more coefficients than the order admits");
        }
        c_.resize(order + 1, R(0));
    }

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order, {}); }

    static TruncatedSeries one(std::size_t order) { return TruncatedSeries(order, {R(1)}); }

    /// A polynomial is known exactly, so any order may be requested.
    static TruncatedSeries from_polynomial(const Polynomial<R>& p, std::size_t order) {
        std::vector<R> c(p.coefficients());
        if (c.size() > order + 1) c.resize(order + 1);
        return TruncatedSeries(order, std::move(c));
    }

    std::size_t order() const { return c_.size() - 1; }

    /// Coefficient of x^i; throws when i exceeds the guaranteed order.
    const R& coeff(std::size_t i) const {
        if (i >= c_.size()) {
            throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
        }
        return c_[i];
    }

    const std::vector<R>& coefficients() const { return c_; }

    /// Exact equality: same order and same coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    TruncatedSeries operator-() const {
        std::vector<R> c(c_);
        for (auto& v : c) v = -v;
        return TruncatedSeries(order(), std::move(c));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<R> c(n + 1, R(0));
        for (std::size_t i = 0; i <= n; ++i) c[i] = a.c_[i] + b.c_[i];
        return TruncatedSeries(n, std::move(c));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<R> c(n + 1, R(0));
        for (std::size_t i = 0; i <= n; ++i) c[i] = a.c_[i] - b.c_[i];
        return TruncatedSeries(n, std::move(c));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<R> c(n + 1, R(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.c_[i] == R(0)) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return TruncatedSeries(n, std::move(c));
    }

   private:
    std::vector<R> c_;  // size order+1 exactly
};

/// Truncate to a smaller (or equal) order.
template <typename R>
TruncatedSeries<R> truncate(const TruncatedSeries<R>& s, std::size_t order) {
    if (order > s.order()) {
        throw std::invalid_argument("truncate: requested order exceeds known order");
    }
    std::vector<R> c(s.coefficients().begin(),
                     s.coefficients().begin() + static_cast<std::ptrdiff_t>(order + 1));
    return TruncatedSeries<R>(order, std::move(c));
}

/// Multiplicative inverse of a series with constant term 1.
template <typename R>
TruncatedSeries<R> invert_unit(const TruncatedSeries<R>& s) {
    if (!(s.coeff(0) == R(1))) {
        throw std::invalid_argument("invert_unit: constant term must be 1");
    }
    std::size_t n = s.order();
    std::vector<R> v(n + 1, R(0));
    v[0] = R(1);
    for (std::size_t i = 1; i <= n; ++i) {
        R acc(0);
        for (std::size_t k = 1; k <= i; ++k) acc += s.coeff(k) * v[i - k];
        v[i] = -acc;
    }
    return TruncatedSeries<R>(n, std::move(v));
}

/// Integer power of a unit series; negative exponents go through
/// invert_unit. The exponent may exceed any machine word (logarithm
/// coefficients grow geometrically), so binary powering walks the bits
/// of a BigInt.
template <typename R>
TruncatedSeries<R> pow_trunc(const TruncatedSeries<R>& base, const BigInt& e) {
    TruncatedSeries<R> b = e < 0 ? invert_unit(base) : base;
    const BigInt k = abs(e);
    TruncatedSeries<R> acc = TruncatedSeries<R>::one(base.order());
    const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return acc;
    for (std::size_t bit = bits; bit-- > 0;) {
        acc = acc * acc;
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = acc * b;
    }
    return acc;
}

template <typename R>
TruncatedSeries<R> substitute_neg(const TruncatedSeries<R>& s) {
    std::vector<R> c(s.coefficients());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return TruncatedSeries<R>(s.order(), std::move(c));
}

/// x -> x^2 on a series. The output order stays at the input order: the
/// tail beyond it is unknown, so no stronger promise is recorded here.
/// Use the Polynomial overload when the input is known exactly.
template <typename R>
TruncatedSeries<R> substitute_square(const TruncatedSeries<R>& s) {
    std::size_t n = s.order();
    std::vector<R> c(n + 1, R(0));
    for (std::size_t i = 0; 2 * i <= n; ++i) c[2 * i] = s.coeff(i);
    return TruncatedSeries<R>(n, std::move(c));
}

inline TruncatedSeries<Rational> to_rational(const TruncatedSeries<BigInt>& s) {
    std::vector<Rational> c;
    c.reserve(s.coefficients().size());
    for (const auto& v : s.coefficients()) c.emplace_back(v);
    return TruncatedSeries<Rational>(s.order(), std::move(c));
}

/// Square root of a series with constant term 1, over the rationals.
/// Uses the recurrence 2 g_n = f_n - sum_{0<k<n} g_k g_{n-k}.
inline TruncatedSeries<Rational> series_sqrt_rational(const TruncatedSeries<Rational>& f) {
    if (!(f.coeff(0) == Rational(1))) {
        throw std::invalid_argument("series_sqrt_rational: constant term must be 1");
    }
    std::size_t n = f.order();
    std::vector<Rational> g(n + 1, Rational(0));
    g[0] = Rational(1);
    for (std::size_t i = 1; i <= n; ++i) {
        Rational rhs = f.coeff(i);
        for (std::size_t k = 1; k < i; ++k) rhs -= g[k] * g[i - k];
        g[i] = rhs / Rational(2);
    }
    return TruncatedSeries<Rational>(n, std::move(g));
}

/// Result of the integer square root attempt: either the root (constant
/// term normalized to +1) or the first exponent at which the recurrence
/// right-hand side turns odd, certifying no integer root exists.
struct IntegerSqrtOutcome {
    std::optional<TruncatedSeries<BigInt>> root;
    std::optional<std::size_t> not_integer_at;

    bool ok() const { return root.has_value(); }
};

/// Integer square root of a series with constant term 1, by the parity
/// form of the sqrt recurrence. Failure is a value carrying the witness
/// exponent, not an error.
inline IntegerSqrtOutcome series_sqrt_integer(const TruncatedSeries<BigInt>& f) {
    if (f.coeff(0) != 1) {
        throw std::invalid_argument("series_sqrt_integer: constant term must be 1");
    }
    std::size_t n = f.order();
    std::vector<BigInt> g(n + 1, BigInt(0));
    g[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        BigInt rhs = f.coeff(i);
        for (std::size_t k = 1; k < i; ++k) rhs -= g[k] * g[i - k];
        if (is_odd(rhs)) {
            return IntegerSqrtOutcome{std::nullopt, i};
        }
        g[i] = exact_div(rhs, BigInt(2));
    }
    return IntegerSqrtOutcome{TruncatedSeries<BigInt>(n, std::move(g)), std::nullopt};
}

}  // namespace knotscan

#endif
