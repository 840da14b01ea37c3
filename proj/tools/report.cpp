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

#include "report.hpp"

#include <fstream>

#include "sdshuffle/baselines.hpp"
#include "version.hpp"

namespace sdshuffle::cli {

Json report_header(const std::string& command) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["version"] = kReportVersion;
  doc["tool"] = {{"name", "sdshuffle"}, {"version", kToolVersion}};
  doc["command"] = command;
  return doc;
}

Json to_json(const MetricBundle& m) {
  return Json{{"dbrl", m.dbrl},   {"rid", m.rid},     {"sdid", m.sdid},
              {"ps", m.ps_scaled}, {"pil", m.pil},     {"mae", m.mae},
              {"mse", m.mse},     {"brmae", m.brmae}, {"brmse", m.brmse}};
}

MetricBundle metric_bundle_from_json(const Json& j) {
  MetricBundle m;
  m.dbrl = j.at("dbrl").get<double>();
  m.rid = j.at("rid").get<double>();
  m.sdid = j.at("sdid").get<double>();
  m.ps_scaled = j.at("ps").get<double>();
  m.pil = j.at("pil").get<double>();
  m.mae = j.at("mae").get<double>();
  m.mse = j.at("mse").get<double>();
  m.brmae = j.at("brmae").get<double>();
  m.brmse = j.at("brmse").get<double>();
  return m;
}

Json to_json(const ScoreBundle& s) {
  return Json{{"avg_il", s.avg_il}, {"avg_dr", s.avg_dr}, {"overall", s.overall}};
}

Json to_json(const TuningResult& result) {
  Json out;
  out["method"] = std::string(to_string(result.method));
  out["threshold"] = result.threshold;
  out["feasible"] = !result.infeasible();
  if (result.selected) {
    const auto& pt = result.grid[*result.selected];
    out["selected"] = {{"index", *result.selected},
                       {"param", pt.param},
                       {"median", to_json(pt.median)},
                       {"scores", to_json(pt.scores)}};
  } else {
    out["selected"] = nullptr;
  }
  // Plot-ready columns, one entry per grid point.
  Json curves;
  curves["param"] = Json::array();
  curves["avg_il"] = Json::array();
  curves["avg_dr"] = Json::array();
  curves["overall"] = Json::array();
  curves["dbrl"] = Json::array();
  curves["feasible"] = Json::array();
  Json points = Json::array();
  for (const auto& pt : result.grid) {
    curves["param"].push_back(pt.param);
    curves["avg_il"].push_back(pt.scores.avg_il);
    curves["avg_dr"].push_back(pt.scores.avg_dr);
    curves["overall"].push_back(pt.scores.overall);
    curves["dbrl"].push_back(pt.median.dbrl);
    curves["feasible"].push_back(pt.feasible);
    Json runs = Json::array();
    for (const auto& r : pt.runs) runs.push_back(to_json(r));
    points.push_back({{"param", pt.param},
                      {"replications", pt.replications},
                      {"median", to_json(pt.median)},
                      {"scores", to_json(pt.scores)},
                      {"feasible", pt.feasible},
                      {"runs", std::move(runs)}});
  }
  out["curves"] = std::move(curves);
  out["grid"] = std::move(points);
  return out;
}

Json to_json(const Diagnostics& diagnostics) {
  Json out = Json::array();
  for (const auto& w : diagnostics.warnings) out.push_back(w);
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << dump(doc);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace sdshuffle::cli
