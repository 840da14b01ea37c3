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

// JSON report documents. Keys keep insertion order and no wall-clock data is
// written, so a rerun with the same resolved config is byte-identical.

#ifndef SDSHUFFLE_TOOLS_REPORT_HPP_
#define SDSHUFFLE_TOOLS_REPORT_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sdshuffle/error.hpp"
#include "sdshuffle/metrics.hpp"
#include "sdshuffle/scoring.hpp"

namespace sdshuffle::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "sdshuffle.report";
inline constexpr int kReportVersion = 1;

// Header shared by every report: schema, version, tool version, command.
Json report_header(const std::string& command);

Json to_json(const MetricBundle& m);
Json to_json(const ScoreBundle& s);
Json to_json(const TuningResult& result);
Json to_json(const Diagnostics& diagnostics);

MetricBundle metric_bundle_from_json(const Json& j);

// Pretty-printed with a trailing newline. Throws IoError.
void write_json_file(const std::filesystem::path& path, const Json& doc);
std::string dump(const Json& doc);

}  // namespace sdshuffle::cli

#endif  // SDSHUFFLE_TOOLS_REPORT_HPP_
