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

#include "knotscan/table.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knotscan/alexander.hpp"
#include "knotscan/parse.hpp"

namespace knotscan {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

KnotRecord record_from_conway(std::string name, std::optional<long> crossings,
                              ConwayPolynomial poly) {
    return KnotRecord{std::move(name), crossings, std::move(poly), "conway"};
}

KnotRecord record_from_alexander(std::string name, std::optional<long> crossings,
                                 const AlexanderPolynomial& a) {
    return KnotRecord{std::move(name), crossings, alexander_to_conway(a), "alexander"};
}

LoadResult load_csv(const std::string& content, bool strict) {
    LoadResult result;
    std::istringstream in(content);
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) {
        throw invalid_form_error("CSV table is empty; expected header name,variable,polynomial");
    }
    ++lineno;
    if (trim(line) != "name,variable,polynomial") {
        throw invalid_form_error("CSV table must start with the header name,variable,polynomial");
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            std::size_t c1 = line.find(',');
            std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
            if (c2 == std::string::npos) {
                throw invalid_form_error("expected three comma-separated fields");
            }
            std::string name = trim(line.substr(0, c1));
            std::string variable = trim(line.substr(c1 + 1, c2 - c1 - 1));
            std::string poly = line.substr(c2 + 1);
            if (name.empty()) throw invalid_form_error("empty knot name");
            if (variable == "z") {
                result.records.push_back(record_from_conway(name, std::nullopt, parse_conway(poly)));
            } else if (variable == "t") {
                result.records.push_back(
                    record_from_alexander(name, std::nullopt, parse_alexander(poly)));
            } else {
                throw invalid_form_error("variable must be z or t, got '" + variable + "'");
            }
        } catch (const std::exception& e) {
            if (strict) throw;
            result.errors.push_back(RowError{lineno, e.what()});
        }
    }
    return result;
}

LoadResult load_json(const std::string& content, bool strict) {
    LoadResult result;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!doc.is_array()) {
        throw invalid_form_error("JSON table must be an array of knot objects");
    }
    std::size_t index = 0;
    for (const auto& item : doc) {
        ++index;
        try {
            if (!item.is_object()) throw invalid_form_error("table entry is not an object");
            if (!item.contains("name") || !item["name"].is_string()) {
                throw invalid_form_error("table entry is missing a string name");
            }
            std::string name = item["name"].get<std::string>();
            std::optional<long> crossings;
            if (item.contains("crossings")) crossings = item["crossings"].get<long>();
            const bool has_conway = item.contains("conway");
            const bool has_alexander = item.contains("alexander");
            if (has_conway == has_alexander) {
                throw invalid_form_error("table entry needs exactly one of conway/alexander");
            }
            if (has_conway) {
                result.records.push_back(record_from_conway(
                    name, crossings, parse_conway(item["conway"].get<std::string>())));
            } else {
                result.records.push_back(record_from_alexander(
                    name, crossings, parse_alexander(item["alexander"].get<std::string>())));
            }
        } catch (const std::exception& e) {
            if (strict) throw;
            result.errors.push_back(RowError{index, e.what()});
        }
    }
    return result;
}

}  // namespace

LoadResult load_table_text(const std::string& content, TableFormat format, bool strict) {
    return format == TableFormat::csv ? load_csv(content, strict) : load_json(content, strict);
}

LoadResult load_table(const std::string& path, TableFormat format, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("failed reading table file: " + path);
    return load_table_text(buf.str(), format, strict);
}

std::vector<KnotRecord> embedded_sample() {
    return {
        record_from_conway("4_1", 4, parse_conway("1 - z^2")),
        record_from_conway("8_3", 8, parse_conway("1 - 4z^2")),
        record_from_conway("9_47", 9, parse_conway("1 - z^2 + 2z^4 + z^6")),
    };
}

}  // namespace knotscan
