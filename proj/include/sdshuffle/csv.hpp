//
// Copyright 2026 The sdshuffle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Numeric CSV in the RFC 4180 dialect: comma separated, optional double
// quotes with "" escapes, LF or CRLF line ends, mandatory header row.
// Values are written in shortest round-trip form, so write then read is
// exact.

#ifndef SDSHUFFLE_CSV_HPP_
#define SDSHUFFLE_CSV_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sdshuffle/core.hpp"

namespace sdshuffle {

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// Throws ParseError (with 1-based line and column) on a malformed or
// non-numeric cell, InvalidInput on fewer than two data rows.
DataMatrix read_csv(std::istream& in, std::string_view source = "<stream>");
DataMatrix read_csv_file(const std::filesystem::path& path);

void write_csv(std::ostream& out, const DataMatrix& data);
// Throws IoError when the file cannot be written.
void write_csv_file(const std::filesystem::path& path, const DataMatrix& data);

}  // namespace sdshuffle

#endif  // SDSHUFFLE_CSV_HPP_
