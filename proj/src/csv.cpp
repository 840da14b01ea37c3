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

#include "sdshuffle/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <vector>

#include "sdshuffle/error.hpp"

namespace sdshuffle {
namespace {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// Splits the whole input into records. Quoted fields may span lines.
class RecordReader {
 public:
  RecordReader(std::istream& in, std::string_view source) : in_(in), source_(source) {}

  bool next(Record& record) {
    record.fields.clear();
    int c = in_.get();
    while (c == '\r' || c == '\n') {  // blank lines
      if (c == '\n') ++line_;
      c = in_.get();
    }
    if (c == EOF) return false;
    record.line = line_;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (;; c = in_.get()) {
      if (quoted) {
        if (c == EOF) fail(record.line, record.fields.size() + 1, "unterminated quoted field");
        if (c == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(static_cast<char>(c));
        }
        continue;
      }
      if (c == '"' && field.empty() && !was_quoted) {
        quoted = was_quoted = true;
      } else if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (c == '\n' || c == '\r' || c == EOF) {
        if (c == '\r' && in_.peek() == '\n') in_.get();
        if (c != EOF) ++line_;
        record.fields.push_back(std::move(field));
        return true;
      } else if (was_quoted) {
        fail(record.line, record.fields.size() + 1, "text after closing quote");
      } else {
        field.push_back(static_cast<char>(c));
      }
    }
  }

  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) const {
    std::ostringstream msg;
    msg << source_ << ":" << line << ": column " << column << ": " << what;
    throw ParseError(msg.str());
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 1;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view text, double& value) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(value);
}

bool needs_quotes(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos || s != trim(s);
}

void write_field(std::ostream& out, std::string_view s) {
  if (!needs_quotes(s)) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

DataMatrix read_csv(std::istream& in, std::string_view source) {
  RecordReader reader(in, source);
  Record header;
  if (!reader.next(header)) reader.fail(1, 1, "missing header row");
  std::vector<std::string> names;
  for (auto& f : header.fields) names.emplace_back(trim(f));
  const std::size_t p = names.size();

  std::vector<double> cells;  // row-major
  Record record;
  std::size_t rows = 0;
  while (reader.next(record)) {
    if (record.fields.size() != p) {
      reader.fail(record.line, std::min(record.fields.size(), p) + 1,
                  "expected " + std::to_string(p) + " fields, found " +
                      std::to_string(record.fields.size()));
    }
    for (std::size_t j = 0; j < p; ++j) {
      double v = 0.0;
      if (!parse_number(record.fields[j], v)) {
        reader.fail(record.line, j + 1,
                    "not a finite number: \"" + record.fields[j] + "\" (" + names[j] + ")");
      }
      cells.push_back(v);
    }
    ++rows;
  }
  if (rows < 2) {
    throw InvalidInput(std::string(source) + ": need at least two data rows, found " +
                       std::to_string(rows));
  }
  Eigen::MatrixXd values(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(p));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cells[i * p + j];
    }
  }
  return DataMatrix(std::move(values), std::move(names));
}

DataMatrix read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return read_csv(in, path.string());
}

void write_csv(std::ostream& out, const DataMatrix& data) {
  const auto& names = data.column_names();
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (j) out << ',';
    write_field(out, names[j]);
  }
  out << '\n';
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) {
      if (j) out << ',';
      out << format_double(data(i, j));
    }
    out << '\n';
  }
}

void write_csv_file(const std::filesystem::path& path, const DataMatrix& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_csv(out, data);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace sdshuffle
