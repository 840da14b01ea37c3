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

// Python bindings. Matrices cross as 2-D float64 numpy arrays (rows are
// records); metric bundles come back as dicts.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdshuffle/baselines.hpp"
#include "sdshuffle/metrics.hpp"
#include "sdshuffle/scoring.hpp"
#include "sdshuffle/shuffle.hpp"
#include "sdshuffle/simulate.hpp"

namespace py = pybind11;
using namespace sdshuffle;

namespace {

DataMatrix to_data(const Eigen::MatrixXd& values) { return DataMatrix(values); }

py::dict to_dict(const MetricBundle& m) {
  py::dict d;
  d["dbrl"] = m.dbrl;
  d["rid"] = m.rid;
  d["sdid"] = m.sdid;
  d["ps"] = m.ps_scaled;
  d["pil"] = m.pil;
  d["mae"] = m.mae;
  d["mse"] = m.mse;
  d["brmae"] = m.brmae;
  d["brmse"] = m.brmse;
  return d;
}

py::dict to_dict(const ScoreBundle& s) {
  py::dict d;
  d["avg_il"] = s.avg_il;
  d["avg_dr"] = s.avg_dr;
  d["overall"] = s.overall;
  return d;
}

MetricBundle from_dict(const py::dict& d) {
  MetricBundle m;
  m.dbrl = d["dbrl"].cast<double>();
  m.rid = d["rid"].cast<double>();
  m.sdid = d["sdid"].cast<double>();
  m.ps_scaled = d["ps"].cast<double>();
  m.pil = d["pil"].cast<double>();
  m.brmae = d["brmae"].cast<double>();
  m.brmse = d["brmse"].cast<double>();
  return m;
}

ShuffleVariant parse_variant(const std::string& v) {
  if (v == "f" || v == "full") return ShuffleVariant::Full;
  if (v == "s" || v == "simplified") return ShuffleVariant::Simplified;
  throw InvalidParameter("variant must be 'f' or 's'");
}

}  // namespace

PYBIND11_MODULE(_sdshuffle, m) {
  m.doc() = "Joint-probability-preserving shuffling and disclosure metrics";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);

  m.def(
      "categorize",
      [](const Eigen::MatrixXd& x, int n_classes) {
        const auto cats = categorize_data(x, n_classes);
        Eigen::MatrixXi out(x.rows(), x.cols());
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
          for (Eigen::Index i = 0; i < x.rows(); ++i) {
            out(i, j) = cats(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          }
        }
        return out;
      },
      py::arg("x"), py::arg("n_classes"), "Equal-width class labels 1..n_classes per column.");

  m.def(
      "sjppds",
      [](const Eigen::MatrixXd& x, int n_classes, const std::string& variant,
         std::uint64_t seed) {
        return sjppds(to_data(x), n_classes, parse_variant(variant), Seed{seed}).values();
      },
      py::arg("x"), py::arg("n_classes"), py::arg("variant") = "s", py::arg("seed") = 0);

  m.def(
      "mask",
      [](const Eigen::MatrixXd& x, const std::string& method, double param, std::uint64_t seed) {
        return apply_mask(to_data(x), MaskSpec{parse_mask_method(method), param, Seed{seed}})
            .values();
      },
      py::arg("x"), py::arg("method"), py::arg("param"), py::arg("seed") = 0);

  m.def(
      "evaluate",
      [](const Eigen::MatrixXd& original, const Eigen::MatrixXd& masked, bool sorted,
         std::uint64_t seed) {
        return to_dict(evaluate_metrics(to_data(original), to_data(masked), {sorted, Seed{seed}}));
      },
      py::arg("original"), py::arg("masked"), py::arg("sorted") = false, py::arg("seed") = 0);

  m.def(
      "scores", [](const py::dict& metrics) { return to_dict(compute_scores(from_dict(metrics))); },
      py::arg("metrics"));

  m.def(
      "averaged_sorted",
      [](const std::string& metric, const Eigen::MatrixXd& original, const Eigen::MatrixXd& masked,
         std::uint64_t seed) {
        return averaged_sorted(parse_metric_id(metric), to_data(original), to_data(masked),
                               Seed{seed});
      },
      py::arg("metric"), py::arg("original"), py::arg("masked"), py::arg("seed") = 0);

  m.def(
      "tune",
      [](const Eigen::MatrixXd& x, const std::string& method, std::vector<double> grid,
         double threshold, int replications, std::uint64_t seed) {
        const MaskMethod mm = parse_mask_method(method);
        if (grid.empty()) grid = default_grid(mm);
        TuningOptions options;
        options.threshold = threshold;
        options.replications = replications;
        options.seed = Seed{seed};
        const auto result = select_best_parameter(to_data(x), mm, grid, options);
        py::list points;
        for (const auto& pt : result.grid) {
          py::dict d;
          d["param"] = pt.param;
          d["median"] = to_dict(pt.median);
          d["scores"] = to_dict(pt.scores);
          d["feasible"] = pt.feasible;
          points.append(d);
        }
        py::dict out;
        out["grid"] = points;
        out["selected"] = result.selected ? py::cast(result.grid[*result.selected].param)
                                          : py::none();
        return out;
      },
      py::arg("x"), py::arg("method"), py::arg("grid") = std::vector<double>{},
      py::arg("threshold") = kDefaultDbrlThreshold, py::arg("replications") = 1,
      py::arg("seed") = 0);

  m.def(
      "simulate",
      [](const std::string& family, std::size_t n, std::size_t p, std::optional<double> rho,
         std::optional<double> lambda, std::uint64_t seed) {
        SimSpec spec;
        spec.family = parse_sim_family(family);
        spec.n = n;
        spec.p = p;
        spec.rho = rho;
        spec.lambda = lambda;
        spec.seed = Seed{seed};
        return simulate(spec).data.values();
      },
      py::arg("family"), py::arg("n"), py::arg("p"), py::arg("rho") = py::none(),
      py::arg("lambda_") = py::none(), py::arg("seed") = 0);
}
