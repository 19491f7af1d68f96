// Copyright 2026 The dks Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dks/bench.hpp"
#include "dks/csv.hpp"
#include "dks/dual.hpp"
#include "dks/exact.hpp"
#include "dks/grid.hpp"
#include "dks/instability.hpp"
#include "dks/two_sample.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 internal error, 2 validation error, 3 test reject.
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 1;
constexpr int kExitReject = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DKS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw std::invalid_argument("DKS_SEED is not an unsigned integer");
  }
  return dks::kDefaultSeed;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << j.dump(2) << "\n";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

struct DistanceOpts {
  std::string p_path, q_path, out_path;
  int dim = 2;
  double eps = 0.0;
  bool exact = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int cmd_distance(const DistanceOpts& o) {
  const std::uint64_t seed = o.seed_set ? o.seed : default_seed();
  const dks::PointSet P = dks::load_csv(o.p_path, o.dim);
  const dks::PointSet Q = dks::load_csv(o.q_path, o.dim);

  json j;
  j["command"] = "distance";
  j["p"] = o.p_path;
  j["q"] = o.q_path;
  j["dim"] = o.dim;
  j["n_p"] = P.size();
  j["n_q"] = Q.size();
  j["seed"] = seed;

  const auto t0 = std::chrono::steady_clock::now();
  if (o.exact) {
    const dks::DksResult r = dks::exact_dks(P, Q);
    j["mode"] = "exact";
    j["value"] = r.value;
    j["witness"] = r.witness.z;
  } else if (o.dim <= 2) {
    const dks::GridDksResult r = dks::grid_dks(P, Q, o.eps);
    j["mode"] = "grid";
    j["eps"] = o.eps;
    j["value"] = r.estimate;
    j["witness"] = r.witness.z;
  } else {
    const dks::PipelineResult r = dks::approx_dks_pipeline(P, Q, o.eps, seed);
    j["mode"] = "pipeline";
    j["eps"] = o.eps;
    j["value"] = r.estimate;
    j["witness"] = r.witness;
    j["sample_p"] = r.sample_p;
    j["sample_q"] = r.sample_q;
  }
  j["runtime_ms"] = ms_since(t0);
  j["version"] = kVersion;
  emit(j, o.out_path);
  return 0;
}

struct TestOpts {
  std::string x_path, y_path, out_path;
  int dim = 2;
  double delta = 0.05;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int cmd_test(const TestOpts& o) {
  const std::uint64_t seed = o.seed_set ? o.seed : default_seed();
  const dks::PointSet X = dks::load_csv(o.x_path, o.dim);
  const dks::PointSet Y = dks::load_csv(o.y_path, o.dim);
  const dks::TestReport rep = dks::two_sample_test(X, Y, o.delta, seed);

  if (!rep.threshold.condition_ok)
    std::cerr << "warning: n too small for the threshold derivation's "
                 "validity condition; the stated level may not hold\n";

  json j;
  j["command"] = "test";
  j["x"] = o.x_path;
  j["y"] = o.y_path;
  j["dim"] = rep.d;
  j["n"] = rep.n;
  j["delta"] = rep.delta;
  j["seed"] = seed;
  j["statistic"] = rep.statistic;
  j["threshold"] = {
      {"eps", rep.threshold.eps},
      {"formula", rep.threshold.formula == dks::ThresholdFormula::kLogFormula
                      ? "log"
                      : "absolute_2205d"},
      {"log_candidate", rep.threshold.log_candidate},
      {"abs_candidate", rep.threshold.abs_candidate},
      {"condition_ok", rep.threshold.condition_ok},
  };
  j["reject"] = rep.reject;
  j["estimator"] =
      rep.estimator == dks::EstimatorKind::kGrid ? "grid" : "pipeline";
  j["seeds"] = rep.seeds;
  j["runtime_ms"] = rep.runtime_ms;
  j["version"] = kVersion;
  emit(j, o.out_path);
  return rep.reject ? kExitReject : 0;
}

struct BenchOpts {
  std::string preset = "uniform2d";
  std::size_t n_min = 1024, n_max = 16384, baseline_max = 16384;
  int repeats = 20;
  std::string out_csv, out_svg, out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int cmd_bench(const BenchOpts& o) {
  if (o.preset != "uniform2d")
    throw std::invalid_argument("unknown bench preset: " + o.preset);
  dks::BenchConfig cfg;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  cfg.repeats = o.repeats;
  cfg.baseline_n_max = o.baseline_max;
  cfg.seed = o.seed_set ? o.seed : default_seed();

  const std::vector<dks::BenchRow> rows = dks::run_uniform2d_bench(cfg);
  if (!o.out_csv.empty()) dks::write_bench_csv(o.out_csv, rows);
  if (!o.out_svg.empty()) dks::write_bench_svg(o.out_svg, rows);

  json j;
  j["command"] = "bench";
  j["preset"] = o.preset;
  j["n_min"] = cfg.n_min;
  j["n_max"] = cfg.n_max;
  j["repeats"] = cfg.repeats;
  j["baseline_n_max"] = cfg.baseline_n_max;
  j["seed"] = cfg.seed;
  json jr = json::array();
  for (const auto& r : rows)
    jr.push_back({{"n", r.n},
                  {"method", r.method},
                  {"mean_runtime_ms", r.mean_runtime_ms},
                  {"mean_observed_error", r.mean_observed_error},
                  {"repeats", r.repeats}});
  j["rows"] = jr;
  if (!o.out_csv.empty()) j["out_csv"] = o.out_csv;
  if (!o.out_svg.empty()) j["out_svg"] = o.out_svg;
  j["version"] = kVersion;
  emit(j, o.out_path);
  return 0;
}

struct InstabilityOpts {
  std::string case_name = "diagonal";
  double alpha = 0.5;
  std::size_t n = 400;
  int dim = 3;
  bool with_dagger = false;
  double eta = 1e-3;
  double jitter = -1.0;  // default: 1e-6 of the diagonal span
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int cmd_instability(const InstabilityOpts& o) {
  const std::uint64_t seed = o.seed_set ? o.seed : default_seed();

  std::optional<dks::InstabilityCase> c;
  json j;
  j["command"] = "instability";
  j["case"] = o.case_name;
  j["n"] = o.n;
  j["alpha"] = o.alpha;
  j["with_dagger"] = o.with_dagger;
  j["seed"] = seed;
  if (o.case_name == "diagonal") {
    const double span = static_cast<double>(o.n) * 2.0 + 32.0;
    const double jitter = o.jitter >= 0.0 ? o.jitter : 1e-6 * span;
    c = dks::gen_diagonal_case(o.n, o.alpha, o.with_dagger, jitter, seed);
    j["jitter"] = jitter;
  } else if (o.case_name == "simplex") {
    c = dks::gen_simplex_case(o.dim, o.n, o.alpha, o.eta, o.with_dagger, seed);
    j["dim"] = o.dim;
    j["eta"] = o.eta;
  } else {
    throw std::invalid_argument("unknown instability case: " + o.case_name);
  }

  j["n_p"] = c->P.size();
  j["n_q"] = c->Q.size();
  j["mdks_single"] = dks::mdks(c->P, c->Q, dks::QuadrantMode::kSingle);
  j["mdks_all"] = dks::mdks(c->P, c->Q, dks::QuadrantMode::kAll);
  j["exact_dks"] = dks::exact_dks(c->P, c->Q).value;
  j["version"] = kVersion;
  emit(j, o.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dks: multidimensional Kolmogorov-Smirnov distance and tests"};
  app.require_subcommand(1);

  DistanceOpts d;
  auto* cd = app.add_subcommand("distance", "compute dKS(P,Q)");
  cd->add_option("--p", d.p_path, "CSV file for P")->required();
  cd->add_option("--q", d.q_path, "CSV file for Q")->required();
  cd->add_option("--dim", d.dim, "dimension d")->required();
  auto* eps_opt = cd->add_option("--eps", d.eps, "approximation accuracy");
  auto* exact_flag = cd->add_flag("--exact", d.exact, "exact computation");
  eps_opt->excludes(exact_flag);
  auto* ds = cd->add_option("--seed", d.seed, "RNG seed");
  cd->add_option("--out", d.out_path, "write JSON here instead of stdout");

  TestOpts t;
  auto* ct = app.add_subcommand("test", "two-sample hypothesis test");
  ct->add_option("--x", t.x_path, "CSV file for X")->required();
  ct->add_option("--y", t.y_path, "CSV file for Y")->required();
  ct->add_option("--dim", t.dim, "dimension d")->required();
  ct->add_option("--delta", t.delta, "test level in (0,1)")->required();
  auto* ts = ct->add_option("--seed", t.seed, "RNG seed");
  ct->add_option("--out", t.out_path, "write JSON here instead of stdout");

  BenchOpts b;
  auto* cb = app.add_subcommand("bench", "runtime/error benchmark");
  cb->add_option("--preset", b.preset, "benchmark preset (uniform2d)");
  cb->add_option("--n-min", b.n_min, "smallest n");
  cb->add_option("--n-max", b.n_max, "largest n (doubling schedule)");
  cb->add_option("--repeats", b.repeats, "repeats per n");
  cb->add_option("--baseline-max", b.baseline_max,
                 "largest n for the quadratic baseline");
  cb->add_option("--out-csv", b.out_csv, "CSV output path");
  cb->add_option("--out-svg", b.out_svg, "SVG plot output path");
  auto* bs = cb->add_option("--seed", b.seed, "RNG seed");
  cb->add_option("--out", b.out_path, "write JSON here instead of stdout");

  InstabilityOpts i;
  auto* ci = app.add_subcommand("instability", "mdKS instability cases");
  ci->add_option("--case", i.case_name, "diagonal or simplex")->required();
  ci->add_option("--alpha", i.alpha, "block mass fraction")->required();
  ci->add_option("--n", i.n, "points per side")->required();
  ci->add_option("--dim", i.dim, "dimension (simplex case)");
  ci->add_flag("--with-dagger", i.with_dagger, "include the extra point");
  ci->add_option("--eta", i.eta, "simplex offset");
  ci->add_option("--jitter", i.jitter, "diagonal jitter");
  auto* is = ci->add_option("--seed", i.seed, "RNG seed");
  ci->add_option("--out", i.out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (cd->parsed()) {
      d.seed_set = ds->count() > 0;
      if (!d.exact && eps_opt->count() == 0)
        throw std::invalid_argument("distance: pass --eps or --exact");
      return cmd_distance(d);
    }
    if (ct->parsed()) {
      t.seed_set = ts->count() > 0;
      return cmd_test(t);
    }
    if (cb->parsed()) {
      b.seed_set = bs->count() > 0;
      return cmd_bench(b);
    }
    if (ci->parsed()) {
      i.seed_set = is->count() > 0;
      return cmd_instability(i);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
