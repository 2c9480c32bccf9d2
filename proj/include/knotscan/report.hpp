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

#ifndef KNOTSCAN_REPORT_HPP
#define KNOTSCAN_REPORT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotscan/invariants.hpp"
#include "knotscan/obstructions.hpp"
#include "knotscan/table.hpp"

namespace knotscan {

/// Default pc horizon for reports: parities of pc_2 .. pc_32.
inline constexpr std::size_t kDefaultHorizon = 16;

/// Per-knot verdict bundle. "obstructed" means at least one of the
/// amphicheirality tests failed: the triple-product square test, the
/// determinant two-squares test, a mod-2 criterion, or an odd pc_{4i}
/// parity. A failed mirror factorization only rules out strong
/// amphicheirality and is flagged separately. Every witness is
/// re-verified by direct arithmetic before the report is emitted.
struct ObstructionReport {
    std::string name;
    std::string source;
    std::optional<long> crossings;
    ConwayPolynomial conway;

    TripleSquareResult triple;
    BigInt det;
    TwoSquares two_squares;
    HKVerdict hk;
    std::array<int, 3> criteria{};     // mod-2 criteria, degrees 4/8/12
    // The degree-12 display is known to deviate from pc_12 parity on some
    // inputs; pc_12 is authoritative and a mismatch is surfaced here
    // instead of being trusted as an obstruction.
    bool criterion_deg12_matches_pc12 = true;
    std::vector<int> pc_parity;        // pc_{2i} mod 2 for i = 1..horizon

    bool obstructed = false;
    std::vector<std::string> failing_tests;
    bool strong_amphicheirality_excluded = false;

    std::optional<std::string> error;  // per-record internal failure
};

ObstructionReport analyze_record(const KnotRecord& record, std::size_t horizon);

/// Runs the full battery on each record, independently and in input
/// order (identical input yields byte-identical JSON output).
std::vector<ObstructionReport> analyze(const std::vector<KnotRecord>& records,
                                       std::size_t horizon);

/// JSON rendering. Big integers are emitted as decimal strings so values
/// never lose precision; key order is fixed. The document layout is
/// described in the README and frozen by golden-file tests.
nlohmann::ordered_json report_to_json(const ObstructionReport& report);
nlohmann::ordered_json reports_document(const std::vector<ObstructionReport>& reports,
                                        std::size_t horizon);
std::string render_document(const nlohmann::ordered_json& doc);

std::string render_text(const ObstructionReport& report);

}  // namespace knotscan

#endif
