// Copyright 2026 The hyperspec Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperspec/canon.hpp"
#include "hyperspec/cli.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/json_io.hpp"

using namespace hyperspec;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "hyperspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen") {
  const auto r = run({"gen", "--family", "u_star", "--n", "8", "--k", "3"});
  CHECK(r.code == kExitOk);
  CHECK(parse_hypergraph(r.out) == u_star(8, 3));
  const auto rst = run({"gen", "--family", "f_rst", "--n", "10", "--k", "3", "--R", "1,1", "--S", "1"});
  CHECK(rst.code == kExitOk);
  CHECK(parse_hypergraph(rst.out) == f_rst(3, {1, 1}, {1}, {}));
  CHECK(run({"gen", "--family", "u_star", "--n", "7", "--k", "3"}).code == kExitUsage);
  CHECK(run({"gen", "--family", "nope", "--n", "8", "--k", "3"}).code == kExitUsage);
}

TEST_CASE("spectrum") {
  const auto r = run({"spectrum", "--input", "-"}, to_json(two_cycle(3)));
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("rho").get<double>() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(j.at("x").size() == 4);
  CHECK(j.at("residual").get<double>() < 1e-10);
  CHECK(j.contains("iterations"));
  // 17 significant digits
  CHECK(r.out.find("1.6180339887498949") != std::string::npos);

  const auto g = run({"spectrum", "--graph", R"({"n":3,"edges":[[0,1,2]]})", "--checks"});
  CHECK(g.code == kExitOk);
  CHECK(json::parse(g.out).at("pendant_violations").empty());

  CHECK(run({"spectrum", "--graph", "{not json"}).code == kExitUsage);
  CHECK(run({"spectrum", "--graph", R"({"n":6,"edges":[[0,1,2],[3,4,5]]})"}).code == kExitUsage);
}

TEST_CASE("swap") {
  const std::string spec =
      R"({"graph":{"n":8,"edges":[[0,1,2],[0,1,3],[0,4,5],[0,6,7]]},"e":[0,1,2],"f":[0,4,5],"U1":[2],"V1":[4]})";
  const auto r = run({"swap", "--spec", spec, "--seed", "9"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("seed") == 9);
  CHECK(std::abs(j.at("random_vector_delta").at("difference").get<double>()) < 1e-12);
  CHECK(std::abs(j.at("principal_vector_delta").at("difference").get<double>()) < 1e-12);
  CHECK(j.at("lemma").contains("verdict"));
  CHECK(run({"swap", "--spec", spec, "--seed", "9"}).out == r.out);

  const std::string bad = R"({"graph":{"n":4,"edges":[[0,1,2],[0,1,3]]},"e":0,"f":1,"U1":[0],"V1":[0]})";
  CHECK(run({"swap", "--spec", bad}).code == kExitUsage);
}

TEST_CASE("relocate") {
  const std::string spec =
      R"({"graph":{"n":8,"edges":[[0,1,2],[0,1,3],[0,4,5],[1,6,7]]},"moves":[{"edge":[1,6,7],"from":[1],"to":[0]}]})";
  const auto r = run({"relocate", "--spec", spec});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("lemma").at("verdict") == "holds");
  CHECK(are_isomorphic(hypergraph_from_json(j.at("graph")), u_star(8, 3)));
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--n", "8", "--k", "3"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("class_count") == 10);
  CHECK(j.at("top1") == canonical_form(u_star(8, 3)).hex());
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(run({"enumerate", "--n", "8", "--k", "3", "--jobs", "3"}).out == r.out);

  const std::string path = "hyperspec_cli_test.csv";
  CHECK(run({"enumerate", "--n", "6", "--k", "3", "--out", path}).code == kExitOk);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "canonical_key,rho,residual,family_tag");
  int rows = 0;
  for (std::string line; std::getline(f, line);) ++rows;
  CHECK(rows == 3);
  f.close();
  std::remove(path.c_str());

  CHECK(run({"enumerate", "--n", "14", "--k", "3"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto t1 = run({"verify", "--theorem", "1", "--n", "6", "--k", "3"});
  CHECK(t1.code == kExitOk);
  CHECK(json::parse(t1.out).at("pass") == true);
  CHECK(run({"verify", "--theorem", "2", "--n", "6", "--k", "3"}).code == kExitUsage);
  CHECK(run({"verify", "--theorem", "ordering", "--n", "10", "--k", "3"}).code == kExitOk);
  CHECK(run({"verify", "--theorem", "3", "--n", "6", "--k", "3"}).code == kExitUsage);
}

TEST_CASE("rank") {
  const auto r = run({"rank", "--n", "8", "--k", "3", "--format", "csv"});
  CHECK(r.code == kExitOk);
  std::istringstream s(r.out);
  std::string header, first, second;
  std::getline(s, header);
  std::getline(s, first);
  std::getline(s, second);
  CHECK(first.find("u_star") != std::string::npos);
  CHECK(second.ends_with(",f"));
}

TEST_CASE("usage and help") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"gen", "--n", "8"}).code == kExitUsage);
  for (const char* cmd : {"gen", "spectrum", "swap", "relocate", "enumerate", "verify", "rank"}) {
    const auto r = run({cmd, "--help"});
    CHECK(r.code == kExitOk);
    CHECK_FALSE(r.out.empty());
  }
  CHECK(run({"swap", "--help"}).out.find("U1") != std::string::npos);
  CHECK(run({"verify", "--help"}).out.find("U*") != std::string::npos);
}
