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

#ifndef KNOTSCAN_FORMAL_LOG_HPP
#define KNOTSCAN_FORMAL_LOG_HPP

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "knotscan/rings.hpp"
#include "knotscan/series.hpp"

namespace knotscan {

/// Integer exponent sequence (a_i)_{i>=1} with an explicit horizon:
/// entries at indices beyond the horizon are unknown, not zero. This is
/// both the input of exp_z (exponents of the product factors) and the
/// output of log_z, where genuinely infinite supports are the norm.
class ExponentSequence {
   public:
    ExponentSequence() = default;  // horizon 0: nothing known

    /// entries[k] is a_{k+1}; the horizon is entries.size().
    explicit ExponentSequence(std::vector<BigInt> entries) : a_(std::move(entries)) {}

    static ExponentSequence zero(std::size_t horizon) {
        return ExponentSequence(std::vector<BigInt>(horizon, BigInt(0)));
    }

    /// Sparse construction: unspecified indices inside the horizon are 0.
    static ExponentSequence from_support(const std::map<std::size_t, BigInt>& support,
                                         std::size_t horizon);

    std::size_t horizon() const { return a_.size(); }

    /// a_i for 1 <= i <= horizon(); anything else throws.
    const BigInt& at(std::size_t i) const;

    const std::vector<BigInt>& entries() const { return a_; }

    ExponentSequence truncated(std::size_t new_horizon) const;

    /// Pointwise sum, defined through the weaker horizon.
    friend ExponentSequence operator+(const ExponentSequence& a, const ExponentSequence& b);

    friend bool operator==(const ExponentSequence& a, const ExponentSequence& b) {
        return a.a_ == b.a_;
    }
    friend bool operator!=(const ExponentSequence& a, const ExponentSequence& b) {
        return !(a == b);
    }

   private:
    std::vector<BigInt> a_;
};

/// Expands prod_{i>=1} (1+(-x)^i)^{a_i} to the requested order. Only
/// factors with i <= order contribute; negative exponents are expanded
/// through unit-series inversion. The sequence must be known at least up
/// to index `order`.
///
/// This map turns sequence addition into series multiplication, and
/// exp_z(x) = 1 - x under the sign convention used throughout. Consumers
/// wanting the opposite sign negate.
TruncatedSeries<BigInt> exp_z(const ExponentSequence& a, std::size_t order);

/// Inverse of exp_z, computed by triangular peeling: the factor for index
/// i is the unique one fixing the coefficient of x^i without touching
/// lower ones. Requires constant term 1. The result reproduces f through
/// its order (checked internally).
ExponentSequence log_z(const TruncatedSeries<BigInt>& f);

/// Closed forms for the first four coefficients of log_z(1 + sum a_i x^i),
/// kept as an oracle independent of the peeling path. Integer-valued for
/// all integer inputs; the internal exact divisions enforce that.
std::array<BigInt, 4> closed_form_b(const std::array<BigInt, 4>& a);

}  // namespace knotscan

#endif
