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

#ifndef DKS_BENCH_HPP_
#define DKS_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dks/point_set.hpp"

namespace dks {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct BenchRow {
  std::size_t n = 0;
  std::string method;  // "grid" or "baseline"
  double mean_runtime_ms = 0.0;
  double mean_observed_error = 0.0;
  int repeats = 0;
};

struct BenchConfig {
  std::size_t n_min = 1024;
  std::size_t n_max = 16384;
  int repeats = 20;
  // The baseline is the O(n^2) exact sweep; it is skipped above this size.
  std::size_t baseline_n_max = 16384;
  std::uint64_t seed = kDefaultSeed;
};

// The d=2 replication preset: both samples fresh from Unif([0,1]^2) per
// repeat, so the true distance is 0 and the observed error is the computed
// value itself. Runs grid_dks with eps = 1/sqrt(n) and the exact_dks baseline
// on a doubling schedule; every timing is a single-threaded run, and point
// generation/sorting is not timed.
std::vector<BenchRow> run_uniform2d_bench(const BenchConfig& cfg);

void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows);

// Two log-log panels (runtime and observed error vs n), one polyline per
// method. Best-effort companion to the CSV.
void write_bench_svg(const std::string& path, const std::vector<BenchRow>& rows);

// Uniform sample on [0,1]^d, deterministic in the seed.
PointSet sample_uniform_cube(std::size_t n, int dim, std::uint64_t seed);

}  // namespace dks

#endif  // DKS_BENCH_HPP_
