// Copyright 2026 The crkit Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "crkit/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = crkit::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("crkit_unit_" + name);
  std::ofstream(p) << text;
  return p.string();
}

const char* kC7 = "p cgraph 7 7\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 0\n";
const char* kC3C4 = "p cgraph 7 7\ne 0 1\ne 1 2\ne 2 0\ne 3 4\ne 4 5\ne 5 6\ne 6 3\n";
const char* kK3 = "p cgraph 3 3\ne 0 1\ne 1 2\ne 0 2\n";

}  // namespace

TEST_CASE("cli exit codes") {
  const std::string c7 = write_temp("c7.cg", kC7);
  const std::string c3c4 = write_temp("c3c4.cg", kC3C4);
  const std::string k3 = write_temp("k3.cg", kK3);
  const std::string bad = write_temp("bad.cg", "p cgraph 2 1\ne 0 0\n");

  CHECK(run({"refine", c7}).code == crkit::cli::kPositive);
  CHECK(run({"amenable", k3}).code == crkit::cli::kPositive);
  CHECK(run({"amenable", c7, "--witness"}).code == crkit::cli::kNegative);
  CHECK(run({"iso", c3c4, c7}).code == crkit::cli::kNegative);
  CHECK(run({"iso", c7, c7}).code == crkit::cli::kPositive);
  CHECK(run({"fractiso", c3c4, c7}).code == crkit::cli::kPositive);
  CHECK(run({"compact", c3c4, "--trials", "200"}).code == crkit::cli::kNegative);
  CHECK(run({"compact", k3}).code == crkit::cli::kPositive);

  const Run parse = run({"refine", bad});
  CHECK(parse.code == crkit::cli::kUsage);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(run({"refine", "/nonexistent/graph.cg"}).code == crkit::cli::kUsage);
  CHECK(run({}).code == crkit::cli::kUsage);
  CHECK(run({"frobnicate"}).code == crkit::cli::kUsage);
  CHECK(run({"--help"}).code == crkit::cli::kPositive);
}

TEST_CASE("cli json report") {
  const std::string c7 = write_temp("c7.cg", kC7);
  const Run r = run({"amenable", c7, "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "amenable");
  CHECK(j["exit_code"] == 1);
  CHECK(j.contains("input_digest"));
  CHECK(j.contains("verdicts"));
  CHECK(j.contains("timings"));
  CHECK(j.contains("seed"));
  CHECK(j.contains("tool_version"));
  // Same input, same digest.
  CHECK(nlohmann::json::parse(run({"refine", c7, "--json"}).out)["input_digest"] ==
        j["input_digest"]);
}

TEST_CASE("cli budget") {
  const Run r = run({"sweep", "7", "--budget-ms", "1"});
  CHECK(r.code == crkit::cli::kBudget);
}

TEST_CASE("cli reduce writes a graph") {
  const std::string circ = write_temp("and.circ", "g 0 const1\ng 1 const1\ng 2 and 0 1\nout 2\n");
  const std::string out = (fs::temp_directory_path() / "crkit_unit_and.cg").string();
  CHECK(run({"reduce", circ, "--variant", "Gpp", "-o", out}).code == crkit::cli::kPositive);
  CHECK(fs::exists(out));
  CHECK(run({"refine", out}).code == crkit::cli::kPositive);
}
