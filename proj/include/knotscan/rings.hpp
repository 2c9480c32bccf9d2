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

#ifndef KNOTSCAN_RINGS_HPP
#define KNOTSCAN_RINGS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotscan {

/// Arbitrary-precision signed integer. All arithmetic in the library is
/// exact; there is no overflow for any input in scope.
using BigInt = mpz_class;

/// Exact rational number, kept in lowest terms with positive denominator.
using Rational = mpq_class;

inline bool divides(const BigInt& d, const BigInt& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact integer quotient a/d. Throws std::logic_error when d does not
/// divide a; callers use it where divisibility is a proven invariant.
inline BigInt exact_div(const BigInt& a, const BigInt& d) {
    if (d == 0 || !divides(d, a)) {
        throw std::logic_error("exact_div: " + d.get_str() + " does not divide " + a.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline bool is_odd(const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
inline bool is_even(const BigInt& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Least nonnegative residue of n modulo small m.
inline unsigned long mod_ui(const BigInt& n, unsigned long m) {
    return mpz_fdiv_ui(n.get_mpz_t(), m);
}

/// Prime factorization of |n| by trial division, as (prime, exponent)
/// pairs in increasing prime order. Intended for the small integers this
/// library meets (knot determinants, polynomial contents).
inline std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
    std::vector<std::pair<BigInt, unsigned>> out;
    BigInt m = abs(n);
    if (m <= 1) return out;
    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (divides(p, m)) {
            m = exact_div(m, p);
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(BigInt(2));
    for (BigInt d = 3; d * d <= m; d += 2) strip(d);
    if (m > 1) out.emplace_back(m, 1u);
    return out;
}

/// The ring Z/2. Constructible from any int or BigInt (reduced).
struct Z2 {
    std::uint8_t v = 0;

    Z2() = default;
    Z2(int n) : v(static_cast<std::uint8_t>(((n % 2) + 2) % 2)) {}
    explicit Z2(const BigInt& n) : v(static_cast<std::uint8_t>(mod_ui(n, 2))) {}

    int value() const { return v; }

    friend Z2 operator+(Z2 a, Z2 b) { return Z2((a.v + b.v) % 2); }
    friend Z2 operator-(Z2 a, Z2 b) { return Z2((a.v + 2 - b.v) % 2); }
    friend Z2 operator*(Z2 a, Z2 b) { return Z2((a.v * b.v) % 2); }
    Z2 operator-() const { return *this; }
    Z2& operator+=(Z2 o) { v = (v + o.v) % 2; return *this; }
    Z2& operator-=(Z2 o) { v = (v + 2 - o.v) % 2; return *this; }
    Z2& operator*=(Z2 o) { v = (v * o.v) % 2; return *this; }
    friend bool operator==(Z2 a, Z2 b) { return a.v == b.v; }
    friend bool operator!=(Z2 a, Z2 b) { return a.v != b.v; }
};

/// The ring Z/4. Constructible from any int or BigInt (reduced).
struct Z4 {
    std::uint8_t v = 0;

    Z4() = default;
    Z4(int n) : v(static_cast<std::uint8_t>(((n % 4) + 4) % 4)) {}
    explicit Z4(const BigInt& n) : v(static_cast<std::uint8_t>(mod_ui(n, 4))) {}

    int value() const { return v; }

    friend Z4 operator+(Z4 a, Z4 b) { return Z4((a.v + b.v) % 4); }
    friend Z4 operator-(Z4 a, Z4 b) { return Z4((a.v + 4 - b.v) % 4); }
    friend Z4 operator*(Z4 a, Z4 b) { return Z4((a.v * b.v) % 4); }
    Z4 operator-() const { return Z4((4 - v) % 4); }
    Z4& operator+=(Z4 o) { v = (v + o.v) % 4; return *this; }
    Z4& operator-=(Z4 o) { v = (v + 4 - o.v) % 4; return *this; }
    Z4& operator*=(Z4 o) { v = (v * o.v) % 4; return *this; }
    friend bool operator==(Z4 a, Z4 b) { return a.v == b.v; }
    friend bool operator!=(Z4 a, Z4 b) { return a.v != b.v; }
};

inline std::string coeff_to_string(const BigInt& n) { return n.get_str(); }
inline std::string coeff_to_string(const Rational& q) { return q.get_str(); }
inline std::string coeff_to_string(Z2 a) { return std::to_string(a.value()); }
inline std::string coeff_to_string(Z4 a) { return std::to_string(a.value()); }

}  // namespace knotscan

#endif
