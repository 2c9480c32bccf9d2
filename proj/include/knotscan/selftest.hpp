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

#ifndef KNOTSCAN_SELFTEST_HPP
#define KNOTSCAN_SELFTEST_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace knotscan {

struct SelftestCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // what was computed, for the log
};

struct SelftestResult {
    std::vector<SelftestCheck> checks;
    nlohmann::ordered_json embedded_report;
    bool all_pass = true;
};

/// Runs the fixed regression vectors plus the full battery on the
/// embedded three-knot sample. Deterministic output, usable as a golden.
SelftestResult run_selftest();

nlohmann::ordered_json selftest_to_json(const SelftestResult& result);

}  // namespace knotscan

#endif
