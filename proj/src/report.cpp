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

#include "knotscan/report.hpp"

#include <sstream>
#include <stdexcept>

#include "knotscan/parse.hpp"

namespace knotscan {

namespace {

void verify_witnesses(const ObstructionReport& r) {
    if (r.triple.verdict.square) {
        if (!(r.triple.verdict.witness * r.triple.verdict.witness == reduce_mod4(r.triple.triple))) {
            throw std::logic_error("report: square witness failed re-verification");
        }
    }
    if (r.two_squares.representable) {
        if (r.two_squares.a * r.two_squares.a + r.two_squares.b * r.two_squares.b != abs(r.det)) {
            throw std::logic_error("report: two-squares witness failed re-verification");
        }
    }
    if (r.hk.factored) {
        if (r.hk.phi * substitute_neg(r.hk.phi) != r.conway.as_poly_z()) {
            throw std::logic_error("report: phi witness failed re-verification");
        }
    }
}

}  // namespace

ObstructionReport analyze_record(const KnotRecord& record, std::size_t horizon) {
    ObstructionReport r;
    r.name = record.name;
    r.source = record.source;
    r.crossings = record.crossings;
    r.conway = record.conway;

    try {
        r.triple = triple_square_test(record.conway);
        r.det = determinant(record.conway);
        r.two_squares = sum_of_two_squares(r.det);
        r.hk = hk_factorization(record.conway);
        for (int k = 1; k <= 3; ++k) {
            r.criteria[static_cast<std::size_t>(k - 1)] = mod2_criterion(record.conway, k);
        }
        ExponentSequence pc = pc_sequence(record.conway, horizon);
        for (std::size_t i = 1; i <= horizon; ++i) {
            r.pc_parity.push_back(static_cast<int>(mod_ui(pc.at(i), 2)));
        }

        if (!r.triple.verdict.square) r.failing_tests.push_back("triple_square");
        if (!r.two_squares.representable) r.failing_tests.push_back("determinant_two_squares");
        // Degrees 4 and 8 are provably the pc_4/pc_8 parities. The
        // degree-12 display is only trusted when it agrees with pc_12.
        const int pc12 = pc_parity_criterion(record.conway, 3);
        r.criterion_deg12_matches_pc12 = (r.criteria[2] == pc12);
        if (r.criteria[0] != 0) r.failing_tests.push_back("criterion_deg4");
        if (r.criteria[1] != 0) r.failing_tests.push_back("criterion_deg8");
        if (r.criteria[2] != 0 && pc12 != 0) r.failing_tests.push_back("criterion_deg12");
        for (std::size_t i = 2; i <= horizon; i += 2) {
            if (r.pc_parity[i - 1] != 0) {
                r.failing_tests.push_back("pc_parity_" + std::to_string(2 * i));
            }
        }
        r.obstructed = !r.failing_tests.empty();
        r.strong_amphicheirality_excluded = !r.hk.factored;

        verify_witnesses(r);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

std::vector<ObstructionReport> analyze(const std::vector<KnotRecord>& records,
                                       std::size_t horizon) {
    std::vector<ObstructionReport> out;
    out.reserve(records.size());
    for (const auto& rec : records) out.push_back(analyze_record(rec, horizon));
    return out;
}

nlohmann::ordered_json report_to_json(const ObstructionReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["source"] = r.source;
    if (r.crossings) {
        j["crossings"] = *r.crossings;
    } else {
        j["crossings"] = nullptr;
    }
    j["conway"] = to_string(r.conway);

    if (r.error) {
        j["error"] = *r.error;
        return j;
    }

    nlohmann::ordered_json triple;
    triple["product_mod4"] = to_string(reduce_mod4(r.triple.triple), 'z');
    triple["square"] = r.triple.verdict.square;
    if (r.triple.verdict.square) {
        triple["witness"] = to_string(r.triple.verdict.witness, 'z');
        triple["first_failure_exponent"] = nullptr;
    } else {
        triple["witness"] = nullptr;
        triple["first_failure_exponent"] = r.triple.verdict.first_failure_exponent;
    }
    nlohmann::ordered_json parities = nlohmann::ordered_json::array();
    for (const auto& p : r.triple.pc_parities) {
        parities.push_back({{"index", p.index}, {"parity", p.parity}});
    }
    triple["pc_parities"] = parities;
    triple["parity_consistent"] = r.triple.parity_consistent;
    j["triple_square"] = triple;

    nlohmann::ordered_json det;
    det["value"] = r.det.get_str();
    det["absolute"] = BigInt(abs(r.det)).get_str();
    det["sum_of_two_squares"] = r.two_squares.representable;
    if (r.two_squares.representable) {
        det["witness"] = {r.two_squares.a.get_str(), r.two_squares.b.get_str()};
        det["blocking_prime"] = nullptr;
    } else {
        det["witness"] = nullptr;
        det["blocking_prime"] = r.two_squares.blocking_prime.get_str();
    }
    j["determinant"] = det;

    nlohmann::ordered_json hk;
    hk["factored"] = r.hk.factored;
    if (r.hk.factored) {
        hk["phi"] = to_string(r.hk.phi, 'z');
        hk["strongly_positive"] = r.hk.strongly_positive;
        hk["reason"] = nullptr;
    } else {
        hk["phi"] = nullptr;
        hk["strongly_positive"] = false;
        hk["reason"] = r.hk.reason + ": " + to_string(r.hk.blocking_factor, 'z');
    }
    j["hartley_kawauchi"] = hk;

    j["criteria_mod2"] = {{"degree_4", r.criteria[0]},
                          {"degree_8", r.criteria[1]},
                          {"degree_12", r.criteria[2]},
                          {"degree_12_matches_pc_12", r.criterion_deg12_matches_pc12}};
    j["pc_parity"] = r.pc_parity;
    j["obstructed"] = r.obstructed;
    j["failing_tests"] = r.failing_tests;
    j["strong_amphicheirality_excluded"] = r.strong_amphicheirality_excluded;
    return j;
}

nlohmann::ordered_json reports_document(const std::vector<ObstructionReport>& reports,
                                        std::size_t horizon) {
    nlohmann::ordered_json doc;
    doc["tool"] = "knotscan";
    doc["schema"] = "knotscan-report/1";
    doc["horizon"] = horizon;
    nlohmann::ordered_json knots = nlohmann::ordered_json::array();
    for (const auto& r : reports) knots.push_back(report_to_json(r));
    doc["knots"] = knots;
    return doc;
}

std::string render_document(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_text(const ObstructionReport& r) {
    std::ostringstream out;
    out << "knot " << r.name << ": conway = " << to_string(r.conway) << "\n";
    if (r.error) {
        out << "  error: " << *r.error << "\n";
        return out.str();
    }

    out << "  triple product mod 4: " << to_string(reduce_mod4(r.triple.triple), 'z') << "\n";
    if (r.triple.verdict.square) {
        out << "  triple-product square test (Z4): SQUARE, witness "
            << to_string(r.triple.verdict.witness, 'z') << "\n";
    } else {
        out << "  triple-product square test (Z4): NOT SQUARE, first failure at z^"
            << r.triple.verdict.first_failure_exponent << "\n";
    }
    out << "  determinant: " << r.det.get_str();
    if (r.two_squares.representable) {
        out << " -> |" << BigInt(abs(r.det)).get_str() << "| = " << r.two_squares.a.get_str() << "^2 + "
            << r.two_squares.b.get_str() << "^2\n";
    } else {
        out << " -> not a sum of two squares (blocking prime "
            << r.two_squares.blocking_prime.get_str() << ")\n";
    }
    if (r.hk.factored) {
        out << "  mirror factorization: phi = " << to_string(r.hk.phi, 'z')
            << (r.hk.strongly_positive ? " (strongly positive form)" : "") << "\n";
    } else {
        out << "  mirror factorization: none (" << r.hk.reason << ": "
            << to_string(r.hk.blocking_factor, 'z')
            << "); not compatible with strong amphicheirality\n";
    }
    out << "  mod-2 criteria: deg4=" << r.criteria[0] << " deg8=" << r.criteria[1]
        << " deg12=" << r.criteria[2];
    if (!r.criterion_deg12_matches_pc12) {
        out << " (deg12 display disagrees with pc_12 parity; pc_12 is authoritative)";
    }
    out << "\n";
    out << "  odd pc_(4i) parities:";
    bool any = false;
    for (std::size_t i = 2; i <= r.pc_parity.size(); i += 2) {
        if (r.pc_parity[i - 1] != 0) {
            out << " pc_" << 2 * i;
            any = true;
        }
    }
    if (!any) out << " none";
    out << "\n";
    if (r.obstructed) {
        out << "  verdict: OBSTRUCTED (";
        for (std::size_t i = 0; i < r.failing_tests.size(); ++i) {
            if (i) out << ", ";
            out << r.failing_tests[i];
        }
        out << ")\n";
    } else {
        out << "  verdict: no obstruction\n";
    }
    return out.str();
}

}  // namespace knotscan
