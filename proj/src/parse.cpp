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

#include "knotscan/parse.hpp"

#include <cctype>
#include <map>

namespace knotscan {

namespace {

constexpr long kMaxExponent = 4096;  // dense storage; reject absurd exponents early

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        return text[pos++];
    }
    BigInt digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected digits", pos);
        // Base 10 explicitly: the default constructor auto-detects octal
        // from leading zeros.
        return BigInt(std::string(text.substr(start, pos - start)), 10);
    }
};

}  // namespace

LaurentPolynomial<BigInt> parse_polynomial(std::string_view text, char variable) {
    if (variable != 'z' && variable != 't') {
        throw std::invalid_argument("parse_polynomial: variable must be 'z' or 't'");
    }
    Scanner s{text};
    std::map<long, BigInt> terms;

    if (s.done()) throw parse_error("empty polynomial expression", s.pos);

    bool first = true;
    while (!s.done()) {
        int sign = 1;
        char c = s.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            s.take();
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms", s.pos);
        }
        first = false;

        s.skip_ws();
        bool have_coeff = false;
        BigInt coeff(1);
        if (s.pos < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[s.pos]))) {
            coeff = s.digits();
            have_coeff = true;
        }

        long exponent = 0;
        char v = s.peek();
        if (v == variable) {
            s.take();
            exponent = 1;
            if (s.peek() == '^') {
                s.take();
                bool neg = false;
                if (s.peek() == '-') {
                    neg = true;
                    s.take();
                }
                std::size_t at = s.pos;
                BigInt e = s.digits();
                if (e > kMaxExponent) throw parse_error("exponent too large", at);
                exponent = static_cast<long>(e.get_si());
                if (neg) {
                    if (variable != 't') {
                        throw parse_error("negative exponents are only allowed for t", at);
                    }
                    exponent = -exponent;
                }
            }
        } else if (!have_coeff) {
            throw parse_error(std::string("expected a coefficient or '") + variable + "'", s.pos);
        } else if (v != '\0' && std::isalpha(static_cast<unsigned char>(v))) {
            throw parse_error(std::string("unexpected variable '") + v + "', expected '" +
                                  variable + "'",
                              s.pos);
        }

        terms[exponent] += sign * coeff;
    }

    long lo = terms.begin()->first;
    long hi = terms.rbegin()->first;
    std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
    return LaurentPolynomial<BigInt>(lo, std::move(c));
}

ConwayPolynomial parse_conway(std::string_view text) {
    LaurentPolynomial<BigInt> p = parse_polynomial(text, 'z');
    if (!p.is_zero() && p.min_exponent() < 0) {
        throw invalid_form_error("Conway polynomial cannot have negative exponents");
    }
    std::vector<BigInt> coeffs;
    if (!p.is_zero()) {
        for (long e = 0; e <= p.max_exponent(); ++e) coeffs.push_back(p.coeff(e));
    }
    return ConwayPolynomial::from_poly_z(Polynomial<BigInt>(std::move(coeffs)));
}

AlexanderPolynomial parse_alexander(std::string_view text) {
    return AlexanderPolynomial::from_laurent(parse_polynomial(text, 't'));
}

namespace {

/// Shared canonical printer over (exponent, coefficient-string, is_one,
/// is_negative) tuples supplied lowest exponent first.
struct Term {
    long exponent;
    std::string magnitude;  // absolute value, decimal
    bool negative;
    bool unit;  // |coefficient| == 1
};

std::string render(const std::vector<Term>& terms, char variable) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        if (i == 0) {
            if (t.negative) out += "-";
        } else {
            out += t.negative ? " - " : " + ";
        }
        if (!t.unit || t.exponent == 0) out += t.magnitude;
        if (t.exponent != 0) {
            out += variable;
            if (t.exponent != 1) {
                out += "^";
                out += std::to_string(t.exponent);
            }
        }
    }
    return out;
}

Term make_term(long e, const BigInt& v) {
    BigInt mag = abs(v);
    return Term{e, mag.get_str(), v < 0, mag == 1};
}

}  // namespace

std::string to_string(const LaurentPolynomial<BigInt>& p, char variable) {
    std::vector<Term> terms;
    if (!p.is_zero()) {
        for (long e = p.min_exponent(); e <= p.max_exponent(); ++e) {
            BigInt v = p.coeff(e);
            if (v != 0) terms.push_back(make_term(e, v));
        }
    }
    return render(terms, variable);
}

std::string to_string(const Polynomial<BigInt>& p, char variable) {
    std::vector<Term> terms;
    for (long e = 0; e <= p.degree(); ++e) {
        BigInt v = p.coeff(static_cast<std::size_t>(e));
        if (v != 0) terms.push_back(make_term(e, v));
    }
    return render(terms, variable);
}

std::string to_string(const Polynomial<Z4>& p, char variable) {
    std::vector<Term> terms;
    for (long e = 0; e <= p.degree(); ++e) {
        int v = p.coeff(static_cast<std::size_t>(e)).value();
        if (v != 0) terms.push_back(Term{e, std::to_string(v), false, v == 1});
    }
    return render(terms, variable);
}

std::string to_string(const LaurentPolynomial<Z4>& p, char variable) {
    std::vector<Term> terms;
    if (!p.is_zero()) {
        for (long e = p.min_exponent(); e <= p.max_exponent(); ++e) {
            int v = p.coeff(e).value();
            if (v != 0) terms.push_back(Term{e, std::to_string(v), false, v == 1});
        }
    }
    return render(terms, variable);
}

std::string to_string(const ConwayPolynomial& c) { return to_string(c.as_poly_z(), 'z'); }

std::string to_string(const AlexanderPolynomial& a) { return to_string(a.to_laurent(), 't'); }

}  // namespace knotscan
