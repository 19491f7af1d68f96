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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <stdexcept>

#include <doctest.h>
#include <json.hpp>

#include "dks/csv.hpp"
#include "dks/rng.hpp"
#include "test_util.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string("cd ") + DKS_TEST_DATA_DIR + " && " + DKS_CLI_PATH + " " +
      args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

json strip_runtime(json j) {
  j.erase("runtime_ms");
  return j;
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/dks_test_") + name;
}

}  // namespace

TEST_CASE("csv load/save round trip is bit exact") {
  dks::Rng rng(33);
  const dks::PointSet ps = dks::test::random_points(64, 3, rng, -17.0, 123.0);
  const std::string path = tmp_path("roundtrip.csv");
  dks::save_csv(path, ps);
  const dks::PointSet back = dks::load_csv(path, 3);
  CHECK(back.coords() == ps.coords());
  std::remove(path.c_str());
}

TEST_CASE("csv parsing rules") {
  const std::string path = tmp_path("parse.csv");
  {
    std::ofstream f(path);
    f << "x,y\r\n1.0,2.0\r\n3.5,4.5\n";
  }
  const dks::PointSet ps = dks::load_csv(path, 2);
  CHECK(ps.size() == 2);
  CHECK(ps.coord(1, 0) == 3.5);

  {
    std::ofstream f(path);
    f << "1.0\n";
  }
  CHECK_THROWS_WITH_AS(dks::load_csv(path, 2),
                       doctest::Contains("line 1"), std::runtime_error);

  {
    std::ofstream f(path);
    f << "1.0,2.0\nnan,3.0\n";
  }
  CHECK_THROWS_AS(dks::load_csv(path, 2), std::runtime_error);

  CHECK_THROWS_AS(dks::load_csv("/nonexistent/no.csv", 2), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("distance command matches the golden report") {
  const RunResult r =
      run_cli("distance --p p2.csv --q q2.csv --dim 2 --exact");
  CHECK(r.exit_code == 0);
  const json got = strip_runtime(json::parse(r.out));

  std::ifstream gf(std::string(DKS_TEST_DATA_DIR) + "/golden_distance.json");
  REQUIRE(gf.good());
  const json want = strip_runtime(json::parse(gf));
  CHECK(got.dump(2) == want.dump(2));
  CHECK(got["value"] == 0.5);
}

TEST_CASE("distance approximate modes run") {
  const RunResult grid =
      run_cli("distance --p p2.csv --q q2.csv --dim 2 --eps 0.25");
  CHECK(grid.exit_code == 0);
  CHECK(json::parse(grid.out)["mode"] == "grid");
  CHECK(json::parse(grid.out)["value"] == 0.5);
}

TEST_CASE("identical seed and config give byte-identical reports") {
  const std::string a =
      run_cli("distance --p p2.csv --q q2.csv --dim 2 --eps 0.25 --seed 9").out;
  const std::string b =
      run_cli("distance --p p2.csv --q q2.csv --dim 2 --eps 0.25 --seed 9").out;
  CHECK(strip_runtime(json::parse(a)).dump() ==
        strip_runtime(json::parse(b)).dump());
}

TEST_CASE("test command exit codes") {
  // X = Y: never rejects, exit 0.
  const RunResult same =
      run_cli("test --x p2.csv --y p2.csv --dim 2 --delta 0.4");
  CHECK(same.exit_code == 0);
  CHECK(json::parse(same.out)["reject"] == false);

  // Disjoint supports at a workable n: rejects with exit 3.
  const std::string xp = tmp_path("x.csv"), yp = tmp_path("y.csv");
  dks::Rng rng(55);
  dks::save_csv(xp, dks::test::random_points(400, 2, rng, 0.0, 1.0));
  dks::save_csv(yp, dks::test::random_points(400, 2, rng, 3.0, 4.0));
  const RunResult shifted = run_cli("test --x " + xp + " --y " + yp +
                                    " --dim 2 --delta 0.05 --seed 3");
  CHECK(shifted.exit_code == 3);
  const json j = json::parse(shifted.out);
  CHECK(j["reject"] == true);
  CHECK(j["statistic"].get<double>() >=
        j["threshold"]["eps"].get<double>());
  std::remove(xp.c_str());
  std::remove(yp.c_str());

  // Validation failure: exit 2.
  CHECK(run_cli("test --x missing.csv --y p2.csv --dim 2 --delta 0.05")
            .exit_code == 2);
  CHECK(run_cli("distance --p p2.csv --q q2.csv --dim 2").exit_code == 2);
}

TEST_CASE("instability command emits the comparison fields") {
  const RunResult r = run_cli(
      "instability --case diagonal --alpha 0.5 --n 80 --with-dagger --seed 2");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.contains("mdks_single"));
  CHECK(j.contains("mdks_all"));
  CHECK(j.contains("exact_dks"));
  CHECK(j["n_p"] == 81);
}

TEST_CASE("bench command writes csv and svg") {
  const std::string csv = tmp_path("bench.csv"), svg = tmp_path("bench.svg");
  const RunResult r = run_cli(
      "bench --preset uniform2d --n-min 256 --n-max 512 --repeats 2 "
      "--out-csv " + csv + " --out-svg " + svg + " --seed 4");
  CHECK(r.exit_code == 0);
  std::ifstream cf(csv);
  std::string header;
  std::getline(cf, header);
  CHECK(header == "n,method,mean_runtime_ms,mean_observed_error,repeats");
  std::string line;
  int rows = 0;
  while (std::getline(cf, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);  // 2 sizes x 2 methods
  std::ifstream sf(svg);
  std::stringstream ss;
  ss << sf.rdbuf();
  CHECK(ss.str().find("<svg") != std::string::npos);
  std::remove(csv.c_str());
  std::remove(svg.c_str());
}
