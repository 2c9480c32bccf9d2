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

#include <doctest.h>

#include "knotscan/formal_log.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace knotscan;
namespace tu = knotscan::testutil;

namespace {

ExponentSequence single(std::size_t index, long value, std::size_t horizon) {
    return ExponentSequence::from_support({{index, BigInt(value)}}, horizon);
}

}  // namespace

TEST_SUITE("formal_log") {

TEST_CASE("exp_z single factors") {
    auto a1 = exp_z(single(1, 1, 4), 4);
    CHECK(a1.coeff(0) == 1);
    CHECK(a1.coeff(1) == -1);
    CHECK(a1.coeff(2) == 0);

    auto a2 = exp_z(single(2, 1, 4), 4);
    CHECK(a2.coeff(2) == 1);
    CHECK(a2.coeff(1) == 0);
    CHECK(a2.coeff(4) == 0);
}

TEST_CASE("exp_z geometric inverse") {
    auto s = exp_z(single(1, -1, 4), 4);
    for (std::size_t i = 0; i <= 4; ++i) CHECK(s.coeff(i) == 1);
    // Multiplying back by (1 - x) recovers 1 through the order.
    auto back = s * exp_z(single(1, 1, 4), 4);
    CHECK(back == TruncatedSeries<BigInt>::one(4));
}

TEST_CASE("exp_z horizon shorter than order is an error") {
    CHECK_THROWS_AS(exp_z(ExponentSequence::zero(2), 4), std::invalid_argument);
}

TEST_CASE("log_z of 1+x: powers of two") {
    std::vector<BigInt> c(65, BigInt(0));
    c[0] = 1;
    c[1] = 1;
    auto seq = log_z(TruncatedSeries<BigInt>(64, std::move(c)));
    REQUIRE(seq.horizon() == 64);
    for (std::size_t i = 1; i <= 64; ++i) {
        bool pow2 = (i & (i - 1)) == 0;
        CHECK(seq.at(i) == (pow2 ? BigInt(-1) : BigInt(0)));
    }
}

TEST_CASE("log_z trivial examples") {
    auto one_minus = log_z(TruncatedSeries<BigInt>(8, {BigInt(1), BigInt(-1)}));
    CHECK(one_minus.at(1) == 1);
    for (std::size_t i = 2; i <= 8; ++i) CHECK(one_minus.at(i) == 0);

    auto quad = log_z(TruncatedSeries<BigInt>(8, {BigInt(1), BigInt(0), BigInt(1)}));
    CHECK(quad.at(2) == 1);
    for (std::size_t i : {std::size_t{1}, std::size_t{3}, std::size_t{4}}) CHECK(quad.at(i) == 0);

    CHECK_THROWS_AS(log_z(TruncatedSeries<BigInt>(4, {BigInt(2)})), std::invalid_argument);
}

TEST_CASE("closed_form_b examples") {
    auto b = closed_form_b({BigInt(1), BigInt(0), BigInt(0), BigInt(0)});
    CHECK(b[0] == -1);
    CHECK(b[1] == -1);
    CHECK(b[2] == 0);
    CHECK(b[3] == -1);

    auto z = closed_form_b({BigInt(0), BigInt(0), BigInt(0), BigInt(0)});
    for (const auto& v : z) CHECK(v == 0);

    auto k947 = closed_form_b({BigInt(-1), BigInt(2), BigInt(1), BigInt(0)});
    CHECK(k947[1] == 2);  // pc_4 of 9_47
}

TEST_CASE("exp_z is a homomorphism") {
    for (int iter = 0; iter < 200; ++iter) {
        auto a = tu::random_sequence(24, -3, 3, 8);
        auto b = tu::random_sequence(24, -3, 3, 8);
        CHECK(exp_z(a + b, 24) == exp_z(a, 24) * exp_z(b, 24));
    }
}

TEST_CASE("log_z and exp_z are mutually inverse") {
    for (int iter = 0; iter < 250; ++iter) {
        auto a = tu::random_sequence(24, -3, 3, 8);
        CHECK(log_z(exp_z(a, 24)) == a);
    }
    for (int iter = 0; iter < 250; ++iter) {
        // Random unit series; log_z internally asserts exp_z(log_z(f)) == f.
        std::vector<BigInt> c(25, BigInt(0));
        c[0] = 1;
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = tu::rand_int(-3, 3);
        TruncatedSeries<BigInt> f(24, c);
        auto seq = log_z(f);
        CHECK(exp_z(seq, 24) == f);
    }
}

TEST_CASE("exp_z is triangular: entries beyond the order do not matter") {
    for (int iter = 0; iter < 50; ++iter) {
        auto a = tu::random_sequence(12, -2, 2, 6);
        std::vector<BigInt> extended = a.entries();
        for (int extra = 0; extra < 6; ++extra) extended.push_back(BigInt(tu::rand_int(-2, 2)));
        CHECK(exp_z(ExponentSequence(extended), 12) == exp_z(a, 12));
    }
}

TEST_CASE("closed forms agree with log_z on all 625 small tuples") {
    for (long a1 = -2; a1 <= 2; ++a1) {
        for (long a2 = -2; a2 <= 2; ++a2) {
            for (long a3 = -2; a3 <= 2; ++a3) {
                for (long a4 = -2; a4 <= 2; ++a4) {
                    std::array<BigInt, 4> a{BigInt(a1), BigInt(a2), BigInt(a3), BigInt(a4)};
                    auto b = closed_form_b(a);
                    // The series 1 + a1 x + a2 x^2 + a3 x^3 + a4 x^4.
                    TruncatedSeries<BigInt> f(4, {BigInt(1), a[0], a[1], a[2], a[3]});
                    auto seq = log_z(f);
                    for (std::size_t i = 1; i <= 4; ++i) CHECK(seq.at(i) == b[i - 1]);
                }
            }
        }
    }
}

TEST_CASE("exp_z matches the brute-force product") {
    for (int iter = 0; iter < 100; ++iter) {
        auto a = tu::random_sequence(16, -3, 3, 6);
        auto brute = oracles::brute_exp_z(a, 16);
        auto fast = exp_z(a, 16);
        for (std::size_t i = 0; i <= 16; ++i) CHECK(fast.coeff(i) == brute[i]);
    }
}

TEST_CASE("brute_exp_z spec examples") {
    CHECK(oracles::brute_exp_z(single(1, 1, 4), 4)[1] == -1);
    auto inv = oracles::brute_exp_z(single(1, -1, 3), 3);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(inv[i] == 1);
    CHECK_THROWS_AS(oracles::brute_exp_z(ExponentSequence::zero(64), 64), std::invalid_argument);
}

TEST_CASE("exponent sequence access rules") {
    auto a = single(2, 5, 4);
    CHECK(a.at(2) == 5);
    CHECK(a.at(4) == 0);
    CHECK_THROWS_AS((void)a.at(0), std::invalid_argument);
    CHECK_THROWS_AS((void)a.at(5), std::out_of_range);
    CHECK(a.truncated(2).horizon() == 2);
    CHECK_THROWS_AS(a.truncated(9), std::invalid_argument);
    CHECK_THROWS_AS(ExponentSequence::from_support({{7, BigInt(1)}}, 4), std::invalid_argument);
}

}  // TEST_SUITE
