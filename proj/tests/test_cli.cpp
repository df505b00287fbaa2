// Copyright 2026 The bosonic-mac Authors
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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bosonic-mac");
  std::ostringstream out, err;
  const int code = bmac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("rates subcommand") {
  const Result r = run({"rates", "--eta1", "0.2", "--eta2", "0.9", "--nt", "4", "--na", "4", "--nb", "8"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("rates").at("r_max_a").get<double>() == doctest::Approx(0.90672886520145756));
  CHECK(j.at("rates").at("branch_a") == "branch1");
  CHECK(j.contains("outer_bound_a"));
  CHECK(j.contains("heterodyne_sum"));
}

TEST_CASE("zero budgets are valid") {
  const Result r = run({"rates", "--na", "0", "--nb", "0"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("rates").at("r_max_ab").get<double>() == 0.0);
}

TEST_CASE("validation failures exit 2 and name the field") {
  const Result r = run({"rates", "--na", "-1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("na") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"rates", "--eta1", "2"}).code == 2);
  CHECK(run({"rates", "--format", "xml"}).code == 2);
  CHECK(run({"rates", "--pa", "0.5", "--ra", "0.1"}).code == 2);
  CHECK(run({"rates", "--na", "1", "--ra", "3"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("surface output is deterministic and has the documented shape") {
  const std::vector<std::string> args{"surface", "--eta1", "0.2", "--nt", "4", "--na", "4", "--nb", "8",
                                      "--grid", "2", "--format", "csv"};
  const Result a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 17);
  const Result rates = run({"rates", "--eta1", "0.2", "--nt", "4", "--na", "4", "--nb", "8"});
  const double coherent = json::parse(rates.out).at("rates").at("r_max_a").get<double>();
  const Result js = run({"surface", "--eta1", "0.2", "--nt", "4", "--na", "4", "--nb", "8", "--grid", "2"});
  CHECK(json::parse(js.out).at("cells").at(0).at("r_max_a").get<double>() == coherent);
}

TEST_CASE("region subcommand") {
  const Result r = run({"region", "--eta1", "0.25", "--nt", "1", "--na", "1", "--nb", "1000", "--encodings",
                        "0:0,0:3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("pentagons").size() == 2);
  CHECK(j.at("receivers").contains("construction"));
  CHECK(run({"region", "--encodings", ""}).code == 2);
  CHECK(run({"region", "--encodings", "0:x"}).code == 2);
  CHECK(run({"region", "--encodings", "0:40"}).code == 2);
}

TEST_CASE("asymptotics exit codes follow the verdicts") {
  CHECK(run({"asymptotics", "--lemma", "2", "--case", "3", "--kappa", "1"}).code == 0);
  CHECK(run({"asymptotics", "--lemma", "hom-half"}).code == 0);
  const Result l1 = run({"asymptotics", "--lemma", "1"});
  CHECK(l1.code == 4);
  const json j = json::parse(l1.out);
  CHECK(j.at("probes").at(0).at("verdict") == "diverged");
  CHECK(j.at("passed") == false);
  CHECK(run({"asymptotics", "--lemma", "receiver-gap", "--nt", "0"}).code == 0);
  CHECK(run({"asymptotics", "--lemma", "7"}).code == 2);
  CHECK(run({"asymptotics", "--lemma", "2", "--case", "3", "--eta1", "1"}).code == 2);
}

TEST_CASE("optimize subcommand") {
  const Result r = run({"optimize", "--eta1", "0.2", "--nt", "4", "--na", "4", "--nb", "8", "--objective", "sum"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("p_a").get<double>() == 0.0);
  CHECK(j.at("p_b").get<double>() == 0.0);
  const Result scan = run({"optimize", "--eta1", "0.2", "--nt", "4", "--ns", "12", "--split-points", "11",
                           "--grid", "5"});
  REQUIRE(scan.code == 0);
  CHECK(json::parse(scan.out).at("alice").at("s").get<double>() == 1.0);
}

TEST_CASE("verify subcommand") {
  const Result ok = run({"verify", "--nt", "0", "--draws", "10", "--samples", "20000"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("passed") == true);
  const Result again = run({"verify", "--nt", "0", "--draws", "10", "--samples", "20000"});
  CHECK(again.out == ok.out);
  const Result tampered = run({"verify", "--nt", "0", "--draws", "10", "--samples", "20000", "--tolerance", "0"});
  CHECK(tampered.code == 4);
  CHECK(tampered.err.find("covariance-oracle") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags override it") {
  const auto path = temp_path("bosonic_mac_cli_test.cfg");
  {
    std::ofstream f(path);
    f << "eta1=0.2\neta2=0.9\nnt=4\nna=4\nnb=8\n";
  }
  const Result from_file = run({"rates", "--config", path.string()});
  REQUIRE(from_file.code == 0);
  CHECK(json::parse(from_file.out).at("params").at("eta1").get<double>() == 0.2);
  const Result overridden = run({"rates", "--config", path.string(), "--eta1", "0.3"});
  CHECK(json::parse(overridden.out).at("params").at("eta1").get<double>() == 0.3);
  CHECK(json::parse(overridden.out).at("params").at("nt").get<double>() == 4.0);
  std::filesystem::remove(path);
  CHECK(run({"rates", "--config", path.string()}).code == 3);
}

TEST_CASE("--out writes the file and reports I/O failures") {
  const auto path = temp_path("bosonic_mac_cli_rates.json");
  const Result r = run({"rates", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(json::parse(slurp(path)) == json::parse(run({"rates"}).out));
  std::filesystem::remove(path);
  const Result bad = run({"rates", "--out", "/nonexistent-dir/x.json"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("/nonexistent-dir/x.json") != std::string::npos);
}
