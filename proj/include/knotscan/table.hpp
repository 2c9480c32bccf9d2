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

#ifndef KNOTSCAN_TABLE_HPP
#define KNOTSCAN_TABLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotscan/errors.hpp"
#include "knotscan/invariants.hpp"

namespace knotscan {

enum class TableFormat { csv, json };

/// One ingested knot: Alexander-side inputs are converted to Conway form
/// at load time, with the origin kept in `source`.
struct KnotRecord {
    std::string name;
    std::optional<long> crossings;
    ConwayPolynomial conway;
    std::string source;  // "conway" or "alexander"
};

struct RowError {
    std::size_t line = 0;  // 1-based: CSV line number, or JSON array index
    std::string message;
};

struct LoadResult {
    std::vector<KnotRecord> records;
    std::vector<RowError> errors;
};

/// Parses table content. CSV needs the exact header
/// "name,variable,polynomial" with variable z (Conway) or t (Alexander);
/// JSON is an array of {name, crossings?, conway? | alexander?} objects.
/// Malformed rows are reported with line numbers and skipped; in strict
/// mode the first one aborts with its underlying error instead.
LoadResult load_table_text(const std::string& content, TableFormat format, bool strict);

/// Reads and parses a table file. Unreadable files raise io_error.
LoadResult load_table(const std::string& path, TableFormat format, bool strict);

/// The compiled-in three-knot sample.
std::vector<KnotRecord> embedded_sample();

}  // namespace knotscan

#endif
