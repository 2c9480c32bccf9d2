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

// Acceptance suite: one numbered criterion per check, each printed as a
// pass/fail line with its runtime and enforced against its time budget.
// Run with --cli <knotscan binary> --source <repo root> so criterion 12
// can exercise the command line tool against the committed goldens.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "knotscan/alexander.hpp"
#include "knotscan/obstructions.hpp"
#include "knotscan/parse.hpp"
#include "knotscan/report.hpp"
#include "knotscan/series.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace knotscan;
namespace tu = knotscan::testutil;

namespace {

int g_failures = 0;
std::vector<std::string> g_findings;

void report(int number, const std::string& name, bool pass, double seconds, double budget,
            const std::string& detail = "") {
    bool in_budget = seconds <= budget;
    if (!pass || !in_budget) ++g_failures;
    std::printf("[%s] criterion %02d: %s (%.3fs, budget %.0fs)%s%s\n",
                pass && in_budget ? "PASS" : "FAIL", number, name.c_str(), seconds, budget,
                detail.empty() ? "" : " -- ", detail.c_str());
}

template <typename F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------

void criterion_1() {
    bool pass = true;
    std::string detail;
    double secs = timed([&] {
        auto c = parse_conway("1 - z^2 + 2z^4 + z^6");
        auto triple = triple_product(c);
        if (to_string(reduce_mod4(triple), 'z') != "1 + 2z^4 + z^8 + 3z^24") {
            pass = false;
            detail = "triple product mod 4 mismatch";
        }
        // The triple product is reported in z; take the sqrt there and read
        // the coefficients of z^0, z^4, ..., z^28.
        auto sqrt = series_sqrt_rational(
            to_rational(TruncatedSeries<BigInt>::from_polynomial(triple, 28)));
        const char* expected[] = {"1", "1", "2", "-2", "8", "-2", "-33/2", "73/2"};
        for (std::size_t i = 0; i <= 7; ++i) {
            if (sqrt.coeff(4 * i).get_str() != expected[i]) {
                pass = false;
                detail = "sqrt coefficient mismatch at z^" + std::to_string(4 * i);
            }
        }
        if (triple_square_test(c).verdict.square) {
            pass = false;
            detail = "expected NOT SQUARE";
        }
    });
    report(1, "9_47 pipeline (triple product, sqrt vector, square test)", pass, secs, 1.0, detail);
}

void criterion_2() {
    bool pass = true;
    double secs = timed([&] {
        std::vector<BigInt> c(65, BigInt(0));
        c[0] = 1;
        c[1] = 1;
        auto seq = log_z(TruncatedSeries<BigInt>(64, std::move(c)));
        for (std::size_t i = 1; i <= 64; ++i) {
            bool pow2 = (i & (i - 1)) == 0;
            if (seq.at(i) != (pow2 ? BigInt(-1) : BigInt(0))) pass = false;
        }
    });
    report(2, "log_z(1+x) support is exactly the powers of two through 64", pass, secs, 1.0);
}

void criterion_3() {
    bool pass = true;
    double secs = timed([&] {
        for (int iter = 0; iter < 500; ++iter) {
            auto a = tu::random_sequence(24, -3, 3, 8);
            if (!(log_z(exp_z(a, 24)) == a)) pass = false;
        }
        for (int iter = 0; iter < 500; ++iter) {
            std::vector<BigInt> c(25, BigInt(0));
            c[0] = 1;
            for (std::size_t i = 1; i < c.size(); ++i) c[i] = tu::rand_int(-3, 3);
            TruncatedSeries<BigInt> f(24, c);
            if (!(exp_z(log_z(f), 24) == f)) pass = false;
        }
        for (int iter = 0; iter < 200; ++iter) {
            auto a = tu::random_sequence(24, -3, 3, 8);
            auto b = tu::random_sequence(24, -3, 3, 8);
            if (!(exp_z(a + b, 24) == exp_z(a, 24) * exp_z(b, 24))) pass = false;
        }
    });
    report(3, "log_z/exp_z round trips (500+500) and homomorphism (200)", pass, secs, 10.0);
}

void criterion_4() {
    bool pass = true;
    double secs = timed([&] {
        for (long a1 = -2; a1 <= 2; ++a1) {
            for (long a2 = -2; a2 <= 2; ++a2) {
                for (long a3 = -2; a3 <= 2; ++a3) {
                    for (long a4 = -2; a4 <= 2; ++a4) {
                        auto b = closed_form_b({BigInt(a1), BigInt(a2), BigInt(a3), BigInt(a4)});
                        TruncatedSeries<BigInt> f(
                            4, {BigInt(1), BigInt(a1), BigInt(a2), BigInt(a3), BigInt(a4)});
                        auto seq = log_z(f);
                        for (std::size_t i = 1; i <= 4; ++i) {
                            if (seq.at(i) != b[i - 1]) pass = false;
                        }
                    }
                }
            }
        }
    });
    report(4, "closed-form b equals log_z on all 625 tuples in [-2,2]^4", pass, secs, 5.0);
}

void criterion_5() {
    bool pass = true;
    int brute_checked = 0;
    std::string detail;
    double secs = timed([&] {
        for (int code = 0; code < 729; ++code) {
            std::vector<BigInt> entries(6);
            int rest = code;
            for (int i = 0; i < 6; ++i) {
                entries[static_cast<std::size_t>(i)] = rest % 3;
                rest /= 3;
            }
            ExponentSequence a(entries);
            auto f = polynomial_from_exponents(a);
            auto product = f * substitute_neg(f) * substitute_square(f);
            bool expected =
                is_even(a.at(2)) && is_even(a.at(4)) && is_even(a.at(6));
            auto verdict = z4_square_test(product);
            if (verdict.square != expected) {
                pass = false;
                detail = "iff mismatch at code " + std::to_string(code);
            }
            // Brute-force agreement wherever the oracle budget allows.
            if (product.degree() <= 24) {
                auto brute = oracles::brute_square_z4(reduce_mod4(product), 12);
                if (brute.square != verdict.square) {
                    pass = false;
                    detail = "oracle mismatch at code " + std::to_string(code);
                }
                ++brute_checked;
            }
            // Cross-route: integer sqrt fails no later than the z4 test.
            auto sqrt_attempt = series_sqrt_integer(TruncatedSeries<BigInt>::from_polynomial(
                product, 2 * static_cast<std::size_t>(product.degree())));
            if (verdict.square != sqrt_attempt.ok()) {
                pass = false;
                detail = "sqrt route mismatch at code " + std::to_string(code);
            }
            if (!verdict.square && verdict.first_failure_exponent > *sqrt_attempt.not_integer_at) {
                pass = false;
                detail = "z4 test failed later than the sqrt at code " + std::to_string(code);
            }
        }
    });
    report(5, "exponent families, 729 cases: square iff even even-index entries", pass, secs, 60.0,
           "brute-checked " + std::to_string(brute_checked) + " in-budget cases");
}

void criterion_6() {
    bool pass = true;
    int k3_disagreements = 0;
    bool pattern_holds = true;
    double secs = timed([&] {
        for (long c2 = -2; c2 <= 2; ++c2) {
            for (long c4 = -2; c4 <= 2; ++c4) {
                for (long c6 = -2; c6 <= 2; ++c6) {
                    for (long c8 = -2; c8 <= 2; ++c8) {
                        ConwayPolynomial c(
                            {BigInt(1), BigInt(c2), BigInt(c4), BigInt(c6), BigInt(c8)});
                        if (mod2_criterion(c, 1) != pc_parity_criterion(c, 1)) pass = false;
                        if (mod2_criterion(c, 2) != pc_parity_criterion(c, 2)) pass = false;
                        bool disagree = mod2_criterion(c, 3) != pc_parity_criterion(c, 3);
                        if (disagree) ++k3_disagreements;
                        // Observed residual: they differ exactly when
                        // c2 = 2 mod 4, i.e. by (c2^2 - c2^4)/4 mod 2.
                        bool predicted = ((c2 % 4) + 4) % 4 == 2;
                        if (disagree != predicted) pattern_holds = false;
                    }
                }
            }
        }
    });
    if (k3_disagreements > 0) {
        std::ostringstream f;
        f << "FINDING: the degree-12 display disagrees with pc_12 parity on "
          << k3_disagreements << " of 625 cases, exactly those with c2 = 2 mod 4 "
          << "(residual (c2^2-c2^4)/4 mod 2" << (pattern_holds ? "" : " -- PATTERN BROKEN")
          << "); pc_12 parity is the authoritative obstruction";
        g_findings.push_back(f.str());
    }
    std::ostringstream note;
    note << "k=3 vs pc_12 disagreements: " << k3_disagreements
         << " of 625 (reported as a finding, not a failure)";
    report(6, "criteria k=1,2 match pc_4, pc_8 parities on 625 cases", pass, secs, 30.0,
           note.str());
}

void criterion_7() {
    bool pass = true;
    std::string detail;
    double secs = timed([&] {
        auto c76 = parse_conway("1 - 76z^2");
        auto sq = triple_square_test(c76);
        auto det = determinant(c76);
        auto ts = sum_of_two_squares(det);
        auto hk76 = hk_factorization(c76);
        if (!sq.verdict.square) { pass = false; detail = "1-76z^2 square test"; }
        if (det != 305 || !ts.representable || ts.a != 4 || ts.b != 17) {
            pass = false;
            detail = "1-76z^2 determinant witness";
        }
        if (ts.representable && ts.a * ts.a + ts.b * ts.b != abs(det)) {
            pass = false;
            detail = "witness does not re-verify";
        }
        if (hk76.factored) { pass = false; detail = "1-76z^2 should not mirror-factor"; }

        auto fig8 = parse_conway("1 - z^2");
        auto hk8 = hk_factorization(fig8);
        if (!hk8.factored || to_string(hk8.phi, 'z') != "1 + z") {
            pass = false;
            detail = "phi(4_1)";
        }
        if (hk8.factored && hk8.phi * substitute_neg(hk8.phi) != fig8.as_poly_z()) {
            pass = false;
            detail = "phi(4_1) does not re-verify";
        }
        if (!triple_square_test(fig8).verdict.square) { pass = false; detail = "4_1 square test"; }

        auto k83 = parse_conway("1 - 4z^2");
        auto hk83 = hk_factorization(k83);
        if (!hk83.factored || to_string(hk83.phi, 'z') != "1 + 2z") {
            pass = false;
            detail = "phi(8_3)";
        }
        if (hk83.factored && hk83.phi * substitute_neg(hk83.phi) != k83.as_poly_z()) {
            pass = false;
            detail = "phi(8_3) does not re-verify";
        }
    });
    report(7, "mirror-factorization vectors: 1-76z^2, 1-z^2, 1-4z^2", pass, secs, 5.0, detail);
}

void criterion_8() {
    bool pass = true;
    double secs = timed([&] {
        for (int iter = 0; iter < 200; ++iter) {
            auto phi = tu::random_poly(5, -3, 3, /*unit_constant=*/true);
            auto c = ConwayPolynomial::from_poly_z(phi * substitute_neg(phi));
            if (!triple_square_test(c).verdict.square) pass = false;
        }
    });
    report(8, "mirror products phi(z)phi(-z) pass the square test (200 random)", pass, secs, 30.0);
}

void criterion_9() {
    bool pass = true;
    std::string detail;
    double secs = timed([&] {
        for (int iter = 0; iter < 200; ++iter) {
            auto c = tu::random_conway(6, -5, 5);
            if (!(alexander_to_conway(conway_to_alexander(c)) == c)) {
                pass = false;
                detail = "round trip";
            }
            auto exact = reduce_mod4(conway_to_alexander(c).to_laurent());
            auto rule = mod4_substitution(reduce_mod4(c.as_poly_z()));
            if (!(exact == rule)) {
                pass = false;
                detail = "mod-4 coherence";
            }
            if (conway_to_alexander(c).to_laurent().evaluate_at_minus_one() != determinant(c)) {
                pass = false;
                detail = "determinant coherence";
            }
        }
    });
    report(9, "alexander bridge: round trip, mod-4 rule, determinant (200 random)", pass, secs,
           10.0, detail);
}

void criterion_10() {
    bool pass = true;
    std::string detail;
    double secs = timed([&] {
        for (int iter = 0; iter < 500; ++iter) {
            auto p = tu::random_poly(12, -4, 4, /*unit_constant=*/true);
            auto fast = z4_square_test(p);
            auto brute = oracles::brute_square_z4(reduce_mod4(p), 6);
            if (fast.square != brute.square) {
                pass = false;
                detail = "square test vs brute";
            }
        }
        for (long n = 0; n <= 5000; ++n) {
            auto fast = sum_of_two_squares(BigInt(n));
            auto brute = oracles::brute_two_squares(BigInt(n));
            if (fast.representable != brute.representable) {
                pass = false;
                detail = "two squares vs brute at n=" + std::to_string(n);
            }
        }
        for (int iter = 0; iter < 500; ++iter) {
            auto a = tu::random_sequence(16, -3, 3, 6);
            auto brute = oracles::brute_exp_z(a, 16);
            auto fast = exp_z(a, 16);
            for (std::size_t i = 0; i <= 16; ++i) {
                if (fast.coeff(i) != brute[i]) {
                    pass = false;
                    detail = "exp_z vs brute";
                }
            }
        }
    });
    report(10, "oracle suites: z4 square (500), two squares (<=5000), exp_z (500)", pass, secs,
           60.0, detail);
}

void criterion_11() {
    bool pass = true;
    double secs = timed([&] {
        if (v3_from_jones(JonesPolynomial(LaurentPolynomial<BigInt>::constant(BigInt(1)))) != 0) {
            pass = false;
        }
        if (v3_from_jones(JonesPolynomial(parse_polynomial("-t^4 + t^3 + t", 't'))) != 1) {
            pass = false;
        }
        if (v3_from_jones(JonesPolynomial(parse_polynomial("t^-2 - t^-1 + 1 - t + t^2", 't'))) !=
            0) {
            pass = false;
        }
    });
    report(11, "v3 vectors: unknot 0, right trefoil 1, figure-eight 0", pass, secs, 1.0);
}

void criterion_12(const std::string& cli, const std::string& source) {
    bool pass = true;
    std::string detail;
    double secs = timed([&] {
        auto run = [&](const std::string& args, const std::string& outfile) {
            std::string cmd = "\"" + cli + "\" " + args + " > " + outfile + " 2>/dev/null";
            return std::system(cmd.c_str());
        };
        if (run("selftest --out json", "acc_selftest.json") != 0) {
            pass = false;
            detail = "selftest exited nonzero";
        }
        if (run("analyze --embedded --out json", "acc_embedded.json") != 0) {
            pass = false;
            detail = "analyze --embedded exited nonzero";
        }
        if (run("analyze \"" + source + "/data/sample_knots.csv\" --out json",
                "acc_sample.json") != 0) {
            pass = false;
            detail = "analyze sample_knots.csv exited nonzero";
        }
        try {
            if (read_file("acc_selftest.json") !=
                read_file(source + "/tests/data/golden_selftest.json")) {
                pass = false;
                detail = "selftest JSON differs from golden";
            }
            if (read_file("acc_embedded.json") !=
                read_file(source + "/tests/data/golden_analyze_embedded.json")) {
                pass = false;
                detail = "embedded analyze JSON differs from golden";
            }
            if (read_file("acc_sample.json") !=
                read_file(source + "/tests/data/golden_analyze_sample.json")) {
                pass = false;
                detail = "sample analyze JSON differs from golden";
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }

        for (int iter = 0; iter < 1000; ++iter) {
            long lo = tu::rand_int(-8, 0);
            std::vector<BigInt> c(static_cast<std::size_t>(tu::rand_int(1, 10)));
            for (auto& v : c) v = tu::rand_int(-999, 999);
            LaurentPolynomial<BigInt> p(lo, std::move(c));
            if (p.is_zero()) continue;
            if (!(parse_polynomial(to_string(p, 't'), 't') == p)) {
                pass = false;
                detail = "parse/print round trip";
            }
        }
    });
    report(12, "CLI golden files and parse/print fuzz (1000)", pass, secs, 5.0, detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    std::string source;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string key = argv[i];
        if (key == "--cli") cli = argv[i + 1];
        if (key == "--source") source = argv[i + 1];
    }
    if (cli.empty() || source.empty()) {
        std::cerr << "usage: acceptance --cli <knotscan binary> --source <repo root>\n";
        return 2;
    }

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12(cli, source);

    for (const auto& f : g_findings) std::cout << f << "\n";
    if (g_failures == 0) {
        std::cout << "RESULT: all 12 acceptance criteria passed\n";
        return 0;
    }
    std::cout << "RESULT: " << g_failures << " acceptance criteria FAILED\n";
    return 1;
}
