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

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotscan/alexander.hpp"
#include "knotscan/parse.hpp"
#include "knotscan/report.hpp"
#include "knotscan/selftest.hpp"
#include "knotscan/table.hpp"

namespace {

// Exit codes: 0 ok, 1 usage/parse error (including failed selftest),
// 2 invalid polynomial form, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitForm = 2;
constexpr int kExitIo = 3;

void emit_reports(const std::vector<knotscan::ObstructionReport>& reports, std::size_t horizon,
                  const std::string& out_mode) {
    if (out_mode == "json") {
        std::cout << knotscan::render_document(knotscan::reports_document(reports, horizon));
    } else {
        for (const auto& r : reports) std::cout << knotscan::render_text(r);
    }
}

int run_analyze(const std::string& file, const std::string& format, const std::string& out_mode,
                bool strict, std::size_t horizon, bool embedded) {
    knotscan::LoadResult loaded;
    if (embedded) {
        loaded.records = knotscan::embedded_sample();
    } else {
        knotscan::TableFormat fmt =
            format == "json" ? knotscan::TableFormat::json : knotscan::TableFormat::csv;
        loaded = knotscan::load_table(file, fmt, strict);
    }
    for (const auto& err : loaded.errors) {
        std::cerr << "warning: line " << err.line << ": " << err.message << "\n";
    }
    emit_reports(knotscan::analyze(loaded.records, horizon), horizon, out_mode);
    return kExitOk;
}

int run_poly(const std::string& conway_expr, const std::string& alexander_expr,
             const std::string& out_mode, std::size_t horizon) {
    knotscan::KnotRecord record;
    record.name = "input";
    if (!conway_expr.empty()) {
        record.conway = knotscan::parse_conway(conway_expr);
        record.source = "conway";
    } else {
        record.conway = knotscan::alexander_to_conway(knotscan::parse_alexander(alexander_expr));
        record.source = "alexander";
    }
    emit_reports(knotscan::analyze({record}, horizon), horizon, out_mode);
    return kExitOk;
}

int run_selftest_cmd(const std::string& out_mode) {
    knotscan::SelftestResult result = knotscan::run_selftest();
    if (out_mode == "json") {
        std::cout << knotscan::render_document(knotscan::selftest_to_json(result));
    } else {
        for (const auto& c : result.checks) {
            std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) std::cout << " -> " << c.detail;
            std::cout << "\n";
        }
        std::cout << (result.all_pass ? "selftest: all checks passed\n"
                                      : "selftest: FAILURES detected\n");
    }
    return result.all_pass ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knotscan: exact amphicheirality obstructions from Conway polynomials"};
    app.require_subcommand(1);

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Run the obstruction battery on a knot table");
    std::string file;
    std::string format = "csv";
    std::string out_mode = "text";
    bool strict = false;
    bool embedded = false;
    std::size_t horizon = knotscan::kDefaultHorizon;
    analyze_cmd->add_option("file", file, "Knot table file");
    analyze_cmd->add_option("--format", format, "Input format: csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    analyze_cmd->add_option("--out", out_mode, "Output: text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_flag("--strict", strict, "Abort on the first malformed row");
    analyze_cmd->add_flag("--embedded", embedded, "Analyze the embedded three-knot sample");
    analyze_cmd->add_option("--horizon", horizon, "pc parity horizon (default 16)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{128}));

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Analyze a single polynomial expression");
    std::string conway_expr;
    std::string alexander_expr;
    std::string poly_out = "text";
    std::size_t poly_horizon = knotscan::kDefaultHorizon;
    auto* conway_opt = poly_cmd->add_option("--conway", conway_expr, "Conway polynomial in z");
    auto* alexander_opt =
        poly_cmd->add_option("--alexander", alexander_expr, "Alexander polynomial in t");
    conway_opt->excludes(alexander_opt);
    poly_cmd->add_option("--out", poly_out, "Output: text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    poly_cmd->add_option("--horizon", poly_horizon, "pc parity horizon (default 16)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{128}));

    // selftest
    auto* selftest_cmd =
        app.add_subcommand("selftest", "Run embedded sample and regression vectors");
    std::string selftest_out = "text";
    selftest_cmd->add_option("--out", selftest_out, "Output: text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze_cmd->parsed()) {
            if (!embedded && file.empty()) {
                std::cerr << "error: analyze needs a table file (or --embedded)\n";
                return kExitUsage;
            }
            return run_analyze(file, format, out_mode, strict, horizon, embedded);
        }
        if (poly_cmd->parsed()) {
            if (conway_expr.empty() == alexander_expr.empty()) {
                std::cerr << "error: poly needs exactly one of --conway or --alexander\n";
                return kExitUsage;
            }
            return run_poly(conway_expr, alexander_expr, poly_out, poly_horizon);
        }
        if (selftest_cmd->parsed()) {
            return run_selftest_cmd(selftest_out);
        }
    } catch (const knotscan::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const knotscan::invalid_form_error& e) {
        std::cerr << "invalid polynomial: " << e.what() << "\n";
        return kExitForm;
    } catch (const knotscan::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
