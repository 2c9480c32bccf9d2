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

#ifndef KNOTSCAN_POLYNOMIAL_HPP
#define KNOTSCAN_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotscan/rings.hpp"

namespace knotscan {

/// Dense univariate polynomial over a ring R (one of BigInt, Rational,
/// Z2, Z4). Coefficients are indexed by exponent; the representation is
/// normalized so the trailing (leading) coefficient is nonzero unless the
/// polynomial is zero, which is the empty vector. Values are immutable
/// after construction; every operation returns a new value.
///
/// Everything in scope has degree at most a few dozen, so all arithmetic
/// is schoolbook.
template <typename R>
class Polynomial {
   public:
    Polynomial() = default;  // the zero polynomial

    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(R value) { return Polynomial(std::vector<R>{std::move(value)}); }

    static Polynomial monomial(R value, std::size_t exponent) {
        std::vector<R> c(exponent + 1, R(0));
        c[exponent] = std::move(value);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == R(1); }

    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the degree).
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }

    const std::vector<R>& coefficients() const { return c_; }

    R leading() const {
        if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }

    R evaluate(const R& x) const {
        if (c_.empty()) return R(0);
        R acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            acc = acc * x + c_[i];
        }
        return acc;
    }

    Polynomial operator-() const {
        std::vector<R> c(c_);
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == R(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const R& s, const Polynomial& p) {
        std::vector<R> c(p.c_);
        for (auto& v : c) v = s * v;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

   private:
    std::vector<R> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }
};

template <typename R>
Polynomial<R> pow(const Polynomial<R>& base, unsigned long e) {
    Polynomial<R> acc = Polynomial<R>::constant(R(1));
    Polynomial<R> b = base;
    while (e > 0) {
        if (e & 1u) acc = acc * b;
        e >>= 1u;
        if (e > 0) b = b * b;
    }
    return acc;
}

template <typename R>
Polynomial<R> derivative(const Polynomial<R>& p) {
    if (p.degree() <= 0) return Polynomial<R>();
    std::vector<R> c(static_cast<std::size_t>(p.degree()), R(0));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(p.degree()); ++i) {
        c[i - 1] = R(static_cast<int>(i)) * p.coeff(i);
    }
    return Polynomial<R>(std::move(c));
}

/// x -> -x: the coefficient at exponent i picks up the sign (-1)^i.
template <typename R>
Polynomial<R> substitute_neg(const Polynomial<R>& p) {
    std::vector<R> c(p.coefficients());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return Polynomial<R>(std::move(c));
}

/// x -> x^2: exponent i moves to exponent 2i. Exact for polynomials.
template <typename R>
Polynomial<R> substitute_square(const Polynomial<R>& p) {
    if (p.is_zero()) return Polynomial<R>();
    std::vector<R> c(2 * static_cast<std::size_t>(p.degree()) + 1, R(0));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
        c[2 * i] = p.coeff(i);
    }
    return Polynomial<R>(std::move(c));
}

namespace detail {
inline std::optional<BigInt> coeff_try_divide(const BigInt& a, const BigInt& d) {
    if (d == 0 || !divides(d, a)) return std::nullopt;
    return exact_div(a, d);
}
inline std::optional<Rational> coeff_try_divide(const Rational& a, const Rational& d) {
    if (d == 0) return std::nullopt;
    return Rational(a / d);
}
}  // namespace detail

/// Exact division: returns a/b when b divides a in R[x], and nullopt
/// otherwise (nonzero remainder, or a coefficient quotient that does not
/// exist in R). Division by zero is nullopt as well.
template <typename R>
std::optional<Polynomial<R>> try_divide_exact(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Polynomial<R>();
    if (a.degree() < b.degree()) return std::nullopt;

    std::vector<R> rem(a.coefficients());
    const std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
    std::vector<R> quot(dq + 1, R(0));
    const R lead = b.leading();

    for (std::size_t k = dq + 1; k-- > 0;) {
        const R& top = rem[k + static_cast<std::size_t>(b.degree())];
        if (top == R(0)) continue;
        auto q = detail::coeff_try_divide(top, lead);
        if (!q) return std::nullopt;
        quot[k] = *q;
        for (std::size_t j = 0; j <= static_cast<std::size_t>(b.degree()); ++j) {
            rem[k + j] -= quot[k] * b.coeff(j);
        }
    }
    for (const auto& r : rem) {
        if (!(r == R(0))) return std::nullopt;
    }
    return Polynomial<R>(std::move(quot));
}

inline Polynomial<Z2> reduce_mod2(const Polynomial<BigInt>& p) {
    std::vector<Z2> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return Polynomial<Z2>(std::move(c));
}

inline Polynomial<Z4> reduce_mod4(const Polynomial<BigInt>& p) {
    std::vector<Z4> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return Polynomial<Z4>(std::move(c));
}

inline Polynomial<Z2> reduce_mod2(const Polynomial<Z4>& p) {
    std::vector<Z2> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v.value());
    return Polynomial<Z2>(std::move(c));
}

inline Polynomial<Rational> to_rational(const Polynomial<BigInt>& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return Polynomial<Rational>(std::move(c));
}

}  // namespace knotscan

#endif
