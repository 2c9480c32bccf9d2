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

#ifndef KNOTSCAN_ERRORS_HPP
#define KNOTSCAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotscan {

/// Polynomial expression syntax error, with the 0-based offset of the
/// offending character. Maps to CLI exit code 1.
struct parse_error : std::runtime_error {
    std::size_t position;

    parse_error(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Structurally valid expression that violates a polynomial form
/// constraint (odd power of z, constant term of a Conway polynomial,
/// Alexander symmetry or A(1)=1). Maps to CLI exit code 2.
struct invalid_form_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File system failure. Maps to CLI exit code 3.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace knotscan

#endif
