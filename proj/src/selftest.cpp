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

#include "knotscan/selftest.hpp"

#include <sstream>

#include "knotscan/alexander.hpp"
#include "knotscan/obstructions.hpp"
#include "knotscan/parse.hpp"
#include "knotscan/report.hpp"
#include "knotscan/series.hpp"

namespace knotscan {

namespace {

void check(SelftestResult& result, const std::string& name, bool pass,
           const std::string& detail) {
    result.checks.push_back(SelftestCheck{name, pass, detail});
    if (!pass) result.all_pass = false;
}

}  // namespace

SelftestResult run_selftest() {
    SelftestResult result;

    const ConwayPolynomial k947 = parse_conway("1 - z^2 + 2z^4 + z^6");
    const ConwayPolynomial fig8 = parse_conway("1 - z^2");
    const ConwayPolynomial k83 = parse_conway("1 - 4z^2");
    const ConwayPolynomial synthetic76 = parse_conway("1 - 76z^2");

    {
        std::string got = to_string(reduce_mod4(triple_product(k947)), 'z');
        check(result, "9_47 triple product mod 4", got == "1 + 2z^4 + z^8 + 3z^24", got);
    }
    {
        auto sqrt = series_sqrt_rational(
            to_rational(TruncatedSeries<BigInt>::from_polynomial(triple_product(k947), 28)));
        const char* expected[] = {"1", "1", "2", "-2", "8", "-2", "-33/2", "73/2"};
        bool pass = true;
        std::ostringstream got;
        for (std::size_t i = 0; i <= 7; ++i) {
            Rational v = sqrt.coeff(4 * i);
            if (i) got << ", ";
            got << v.get_str();
            if (v.get_str() != expected[i]) pass = false;
        }
        for (std::size_t e = 0; e <= 28; ++e) {
            if (e % 4 != 0 && sqrt.coeff(e) != 0) pass = false;
        }
        check(result, "9_47 rational sqrt coefficients z^0..z^28", pass, got.str());
    }
    {
        auto ts = triple_square_test(k947);
        bool pass = !ts.verdict.square && ts.pc_parities.size() == 3 &&
                    ts.pc_parities[0].parity == 0 && ts.pc_parities[1].parity == 0 &&
                    ts.pc_parities[2].parity == 1 && ts.pc_parities[2].index == 12;
        check(result, "9_47 triple square test NOT SQUARE with odd pc_12", pass,
              std::string(ts.verdict.square ? "SQUARE" : "NOT SQUARE"));
    }
    {
        BigInt det = determinant(k947);
        TwoSquares ts = sum_of_two_squares(det);
        bool pass = det == -27 && !ts.representable && ts.blocking_prime == 3;
        check(result, "9_47 determinant -27 blocked by prime 3", pass, det.get_str());
    }
    {
        int k3 = mod2_criterion(k947, 3);
        check(result, "9_47 degree-12 criterion fails", k3 == 1, std::to_string(k3));
    }
    {
        auto seq = log_z(TruncatedSeries<BigInt>::from_polynomial(
            Polynomial<BigInt>(std::vector<BigInt>{BigInt(1), BigInt(1)}), 64));
        bool pass = true;
        for (std::size_t i = 1; i <= 64; ++i) {
            bool power_of_two = (i & (i - 1)) == 0;
            if (seq.at(i) != (power_of_two ? BigInt(-1) : BigInt(0))) pass = false;
        }
        check(result, "log_z(1+x) is -1 exactly at powers of two through 64", pass, "");
    }
    {
        auto b = closed_form_b({BigInt(1), BigInt(0), BigInt(0), BigInt(0)});
        bool pass = b[0] == -1 && b[1] == -1 && b[2] == 0 && b[3] == -1;
        std::ostringstream got;
        got << b[0].get_str() << ", " << b[1].get_str() << ", " << b[2].get_str() << ", "
            << b[3].get_str();
        check(result, "closed-form b(1,0,0,0) = (-1,-1,0,-1)", pass, got.str());
    }
    {
        BigInt det = determinant(synthetic76);
        TwoSquares ts = sum_of_two_squares(det);
        auto sq = triple_square_test(synthetic76);
        auto hk = hk_factorization(synthetic76);
        bool pass = det == 305 && ts.representable && ts.a == 4 && ts.b == 17 &&
                    sq.verdict.square && !hk.factored;
        check(result, "1 - 76z^2: determinant 305 = 4^2+17^2, square test passes, no mirror "
                      "factorization",
              pass, det.get_str());
    }
    {
        auto hk8 = hk_factorization(fig8);
        auto hk83 = hk_factorization(k83);
        bool pass = hk8.factored && to_string(hk8.phi, 'z') == "1 + z" && hk83.factored &&
                    to_string(hk83.phi, 'z') == "1 + 2z";
        check(result, "mirror factorizations: phi(4_1) = 1 + z, phi(8_3) = 1 + 2z", pass,
              (hk8.factored ? to_string(hk8.phi, 'z') : "-") + "; " +
                  (hk83.factored ? to_string(hk83.phi, 'z') : "-"));
    }
    {
        BigInt v_unknot = v3_from_jones(JonesPolynomial(LaurentPolynomial<BigInt>::constant(BigInt(1))));
        BigInt v_trefoil = v3_from_jones(JonesPolynomial(parse_polynomial("-t^4 + t^3 + t", 't')));
        BigInt v_fig8 =
            v3_from_jones(JonesPolynomial(parse_polynomial("t^-2 - t^-1 + 1 - t + t^2", 't')));
        bool pass = v_unknot == 0 && v_trefoil == 1 && v_fig8 == 0;
        std::ostringstream got;
        got << v_unknot.get_str() << ", " << v_trefoil.get_str() << ", " << v_fig8.get_str();
        check(result, "v3 vectors: unknot 0, right trefoil 1, figure-eight 0", pass, got.str());
    }
    {
        // The 4_1 and 8_3 Conway forms re-derive from their published
        // symmetric Alexander polynomials.
        bool pass = alexander_to_conway(parse_alexander("-t^-1 + 3 - t")) == fig8 &&
                    alexander_to_conway(parse_alexander("-4t^-1 + 9 - 4t")) == k83;
        check(result, "embedded Conway forms match their Alexander polynomials", pass, "");
    }

    auto reports = analyze(embedded_sample(), kDefaultHorizon);
    {
        bool pass = reports.size() == 3 && !reports[0].obstructed && !reports[1].obstructed &&
                    reports[2].obstructed;
        check(result, "embedded sample verdicts: 4_1 clean, 8_3 clean, 9_47 obstructed", pass, "");
    }
    result.embedded_report = reports_document(reports, kDefaultHorizon);
    return result;
}

nlohmann::ordered_json selftest_to_json(const SelftestResult& result) {
    nlohmann::ordered_json doc;
    doc["tool"] = "knotscan";
    doc["schema"] = "knotscan-selftest/1";
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : result.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        checks.push_back(j);
    }
    doc["checks"] = checks;
    doc["embedded_report"] = result.embedded_report;
    doc["all_pass"] = result.all_pass;
    return doc;
}

}  // namespace knotscan
