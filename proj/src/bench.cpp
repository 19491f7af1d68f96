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

#include "dks/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "dks/exact.hpp"
#include "dks/grid.hpp"
#include "dks/rng.hpp"

namespace dks {
namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

PointSet sample_uniform_cube(std::size_t n, int dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coords(n * static_cast<std::size_t>(dim));
  for (double& c : coords) c = rng.unit();
  return PointSet(dim, std::move(coords));
}

std::vector<BenchRow> run_uniform2d_bench(const BenchConfig& cfg) {
  if (cfg.repeats < 1)
    throw std::invalid_argument("bench: repeats must be >= 1");
  if (cfg.n_min < 4 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("bench: bad n range");

  std::vector<BenchRow> rows;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; n *= 2) {
    const double eps = 1.0 / std::sqrt(static_cast<double>(n));
    const bool with_baseline = n <= cfg.baseline_n_max;

    double grid_ms = 0.0, grid_err = 0.0;
    double base_ms = 0.0, base_err = 0.0;
    for (int rep = 0; rep < cfg.repeats; ++rep) {
      const std::uint64_t s = derive_seed(cfg.seed, (n << 8) | rep);
      const PointSet P = sample_uniform_cube(n, 2, derive_seed(s, 1));
      const PointSet Q = sample_uniform_cube(n, 2, derive_seed(s, 2));

      auto t0 = std::chrono::steady_clock::now();
      const GridDksResult g = grid_dks(P, Q, eps);
      grid_ms += ms_since(t0);
      grid_err += g.estimate;  // true distance is 0

      if (with_baseline) {
        t0 = std::chrono::steady_clock::now();
        const DksResult e = exact_dks(P, Q);
        base_ms += ms_since(t0);
        base_err += e.value;
      }
    }

    const double r = static_cast<double>(cfg.repeats);
    rows.push_back({n, "grid", grid_ms / r, grid_err / r, cfg.repeats});
    if (with_baseline)
      rows.push_back({n, "baseline", base_ms / r, base_err / r, cfg.repeats});
  }
  return rows;
}

void write_bench_csv(const std::string& path,
                     const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("bench: cannot open " + path);
  out << "n,method,mean_runtime_ms,mean_observed_error,repeats\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%s,%.6f,%.17g,%d\n", r.n,
                  r.method.c_str(), r.mean_runtime_ms, r.mean_observed_error,
                  r.repeats);
    out << buf;
  }
  if (!out) throw std::runtime_error("bench: write failed for " + path);
}

namespace {

struct Series {
  std::string method;
  std::vector<std::pair<double, double>> pts;  // (n, value), value > 0
};

void draw_panel(std::ostream& out, double x0, const char* title,
                const std::vector<Series>& series) {
  const double w = 440, h = 360, pad = 50;
  double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
  for (const auto& s : series)
    for (auto [x, y] : s.pts) {
      if (y <= 0) continue;
      lx_min = std::min(lx_min, std::log10(x));
      lx_max = std::max(lx_max, std::log10(x));
      ly_min = std::min(ly_min, std::log10(y));
      ly_max = std::max(ly_max, std::log10(y));
    }
  if (lx_min > lx_max) return;
  if (ly_max - ly_min < 1e-9) {
    ly_min -= 0.5;
    ly_max += 0.5;
  }
  auto sx = [&](double lx) {
    return x0 + pad + (lx - lx_min) / (lx_max - lx_min) * (w - 2 * pad);
  };
  auto sy = [&](double ly) {
    return pad + (ly_max - ly) / (ly_max - ly_min) * (h - 2 * pad);
  };

  out << "<rect x='" << x0 + pad << "' y='" << pad << "' width='"
      << w - 2 * pad << "' height='" << h - 2 * pad
      << "' fill='none' stroke='#888'/>\n";
  out << "<text x='" << x0 + w / 2 << "' y='24' text-anchor='middle' "
      << "font-size='15' font-family='sans-serif'>" << title << "</text>\n";

  const char* colors[] = {"#1f77b4", "#d62728"};
  int ci = 0;
  for (const auto& s : series) {
    std::string path;
    bool first = true;
    for (auto [x, y] : s.pts) {
      if (y <= 0) continue;
      path += (first ? "M" : "L");
      path += std::to_string(sx(std::log10(x))) + " " +
              std::to_string(sy(std::log10(y))) + " ";
      first = false;
    }
    const char* col = colors[ci % 2];
    out << "<path d='" << path << "' fill='none' stroke='" << col
        << "' stroke-width='2'/>\n";
    for (auto [x, y] : s.pts) {
      if (y <= 0) continue;
      out << "<circle cx='" << sx(std::log10(x)) << "' cy='"
          << sy(std::log10(y)) << "' r='3' fill='" << col << "'/>\n";
    }
    out << "<text x='" << x0 + pad + 8 << "' y='" << pad + 18 + 16 * ci
        << "' font-size='12' font-family='sans-serif' fill='" << col << "'>"
        << s.method << "</text>\n";
    ++ci;
  }

  // tick labels at integer powers of ten
  for (int e = static_cast<int>(std::ceil(lx_min));
       e <= static_cast<int>(std::floor(lx_max)); ++e)
    out << "<text x='" << sx(e) << "' y='" << h - pad + 18
        << "' text-anchor='middle' font-size='11' "
        << "font-family='sans-serif'>1e" << e << "</text>\n";
  for (int e = static_cast<int>(std::ceil(ly_min));
       e <= static_cast<int>(std::floor(ly_max)); ++e)
    out << "<text x='" << x0 + pad - 6 << "' y='" << sy(e) + 4
        << "' text-anchor='end' font-size='11' "
        << "font-family='sans-serif'>1e" << e << "</text>\n";
  out << "<text x='" << x0 + w / 2 << "' y='" << h - 8
      << "' text-anchor='middle' font-size='12' font-family='sans-serif'>"
      << "n</text>\n";
}

}  // namespace

void write_bench_svg(const std::string& path,
                     const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("bench: cannot open " + path);

  std::vector<Series> runtime(2), error(2);
  runtime[0].method = error[0].method = "grid";
  runtime[1].method = error[1].method = "baseline";
  for (const auto& r : rows) {
    const int i = r.method == "grid" ? 0 : 1;
    runtime[i].pts.emplace_back(static_cast<double>(r.n), r.mean_runtime_ms);
    error[i].pts.emplace_back(static_cast<double>(r.n),
                              r.mean_observed_error);
  }

  out << "<svg xmlns='http://www.w3.org/2000/svg' width='920' height='380' "
      << "viewBox='0 0 920 380'>\n<rect width='920' height='380' "
      << "fill='white'/>\n";
  draw_panel(out, 0, "runtime (ms) vs n", runtime);
  draw_panel(out, 460, "observed error vs n", error);
  out << "</svg>\n";
  if (!out) throw std::runtime_error("bench: write failed for " + path);
}

}  // namespace dks
