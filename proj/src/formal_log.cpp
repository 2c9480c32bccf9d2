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

#include "knotscan/formal_log.hpp"

#include <stdexcept>

namespace knotscan {

namespace {

/// 1 + (-x)^i as a truncated series.
TruncatedSeries<BigInt> unit_factor(std::size_t i, std::size_t order) {
    std::vector<BigInt> c(order + 1, BigInt(0));
    c[0] = 1;
    if (i <= order) c[i] = (i % 2 == 0) ? 1 : -1;
    return TruncatedSeries<BigInt>(order, std::move(c));
}

}  // namespace

ExponentSequence ExponentSequence::from_support(const std::map<std::size_t, BigInt>& support,
                                                std::size_t horizon) {
    std::vector<BigInt> a(horizon, BigInt(0));
    for (const auto& [i, v] : support) {
        if (i < 1 || i > horizon) {
            throw std::invalid_argument("ExponentSequence: support index outside 1..horizon");
        }
        a[i - 1] = v;
    }
    return ExponentSequence(std::move(a));
}

const BigInt& ExponentSequence::at(std::size_t i) const {
    if (i < 1) throw std::invalid_argument("ExponentSequence: indices start at 1");
    if (i > a_.size()) {
        throw std::out_of_range("ExponentSequence: index beyond horizon (entry unknown)");
    }
    return a_[i - 1];
}

ExponentSequence ExponentSequence::truncated(std::size_t new_horizon) const {
    if (new_horizon > a_.size()) {
        throw std::invalid_argument("ExponentSequence: cannot extend horizon by truncation");
    }
    return ExponentSequence(std::vector<BigInt>(a_.begin(),
                                                a_.begin() + static_cast<long>(new_horizon)));
}

ExponentSequence operator+(const ExponentSequence& a, const ExponentSequence& b) {
    std::size_t h = std::min(a.horizon(), b.horizon());
    std::vector<BigInt> c(h);
    for (std::size_t i = 0; i < h; ++i) c[i] = a.a_[i] + b.a_[i];
    return ExponentSequence(std::move(c));
}

TruncatedSeries<BigInt> exp_z(const ExponentSequence& a, std::size_t order) {
    if (a.horizon() < order) {
        throw std::invalid_argument("exp_z: sequence horizon shorter than requested order");
    }
    TruncatedSeries<BigInt> acc = TruncatedSeries<BigInt>::one(order);
    for (std::size_t i = 1; i <= order; ++i) {
        const BigInt& e = a.at(i);
        if (e == 0) continue;
        acc = acc * pow_trunc(unit_factor(i, order), e);
    }
    return acc;
}

ExponentSequence log_z(const TruncatedSeries<BigInt>& f) {
    if (f.coeff(0) != 1) {
        throw std::invalid_argument("log_z: constant term must be 1");
    }
    const std::size_t n = f.order();
    std::vector<BigInt> a(n, BigInt(0));
    TruncatedSeries<BigInt> partial = TruncatedSeries<BigInt>::one(n);
    for (std::size_t i = 1; i <= n; ++i) {
        // The factor (1+(-x)^i)^{a_i} contributes a_i * (-1)^i at x^i and
        // nothing below, so a_i is read off the current residual there.
        BigInt diff = f.coeff(i) - partial.coeff(i);
        a[i - 1] = (i % 2 == 0) ? diff : -diff;
        if (a[i - 1] != 0) {
            partial = partial * pow_trunc(unit_factor(i, n), a[i - 1]);
        }
    }
    if (partial != f) {
        throw std::logic_error("log_z: peeling failed to reproduce the input series");
    }
    return ExponentSequence(std::move(a));
}

std::array<BigInt, 4> closed_form_b(const std::array<BigInt, 4>& a) {
    const BigInt& a1 = a[0];
    const BigInt& a2 = a[1];
    const BigInt& a3 = a[2];
    const BigInt& a4 = a[3];

    BigInt b1 = -a1;
    BigInt b2 = a2 - exact_div(a1 + a1 * a1, BigInt(2));
    BigInt b3 = -a3 + a1 * a2 + exact_div(a1 - a1 * a1 * a1, BigInt(3));
    BigInt a1sq = a1 * a1;
    BigInt b4 = a4 - a1 * a3 + exact_div(a2 - a2 * a2, BigInt(2)) + a1sq * a2 -
                exact_div(2 * a1 + a1sq + a1sq * a1sq, BigInt(4));
    return {b1, b2, b3, b4};
}

}  // namespace knotscan
