// Copyright 2026 The Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include "cli.hpp"

using tutte::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTriangle = "V 3\n0 1\n1 2\n0 2\n";

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("every two-variable method prints T", "[cli]") {
  for (const std::string method : {"whitney", "delcon", "forest", "dfs", "bernardi"}) {
    const Outcome r = invoke({"tutte", "-", "--method", method}, kTriangle);
    INFO(method);
    CHECK(r.code == tutte::cli::kExitOk);
    CHECK(r.out == "x^2 + x + y\n");
  }
  CHECK(invoke({"tutte", "-"}, kTriangle).out == "x^2 + x + y\n");
}

TEST_CASE("four-variable methods report the shifted identity", "[cli]") {
  for (const std::string method : {"gt", "decision", "orientation"}) {
    const Outcome r = invoke({"tutte", "-", "--method", method}, kTriangle);
    INFO(method);
    CHECK(r.code == tutte::cli::kExitOk);
    CHECK(r.out.find("T(G; x+w, y+z): OK") != std::string::npos);
  }
  const Outcome ori = invoke({"tutte", "-", "--method", "orientation", "--flip", "0,2"}, kTriangle);
  CHECK(ori.out.find("T(G; u, v) = u^2 + u + v: OK") != std::string::npos);
  CHECK(invoke({"tutte", "-", "--method", "decision", "--seed", "9"}, kTriangle).code == tutte::cli::kExitOk);
}

TEST_CASE("JSON output", "[cli]") {
  const Outcome r = invoke({"tutte", "-", "--json"}, kTriangle);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["polynomial"]["text"] == "x^2 + x + y");
  CHECK(j["polynomial"]["variables"] == nlohmann::json::array({"x", "y"}));

  const auto c = nlohmann::json::parse(invoke({"complexes", "-"}, kTriangle).out);
  CHECK(c["independence"]["h_polynomial"] == "x^2 + x + 1");
  CHECK(c["nbc"]["h_polynomial"] == "x^2 + x");
  CHECK(c["nbc"]["h_equals_T_x_0"] == true);

  const auto loop = nlohmann::json::parse(invoke({"complexes", "-"}, "V 1\n0 0\n").out);
  CHECK(loop["nbc"].is_null());
}

TEST_CASE("structural subcommands", "[cli]") {
  const Outcome crapo = invoke({"crapo", "-"}, kTriangle);
  CHECK(crapo.out.find("{e1,e2}: [{e1,e2}, {e0,e1,e2}]") != std::string::npos);
  CHECK(crapo.out.find("3 intervals, total size 8 of 8\nPARTITION OK\n") != std::string::npos);

  const Outcome bi = invoke({"bipartition", "-"}, kTriangle);
  CHECK(bi.out == "{e0,e1} -> {}\n{e0,e2} -> {}\n{e1,e2} -> {e0,e1,e2}\n");

  CHECK(invoke({"convolution", "-"}, kTriangle).out.find("CONVOLUTION OK") != std::string::npos);

  const Outcome orders = invoke({"orders", "-"}, kTriangle);
  CHECK(orders.out.find("\"0\" -> \"{e0,e1}\";") != std::string::npos);
  CHECK(orders.out.find("\"{e1,e2}\" -> \"1\";") != std::string::npos);
  CHECK(orders.out.find("NOT") == std::string::npos);
}

TEST_CASE("rotation and vertex order options", "[cli]") {
  const std::string rotation = temp_file("tutte_cli_rotation.txt", "0: (2,0) (0,0)\n1: (1,0) (0,1)\n2: (2,1) (1,1)\nroot 1 2\n");
  const Outcome r = invoke({"tutte", "-", "--method", "bernardi", "--rotation", rotation}, kTriangle);
  CHECK(r.code == 0);
  CHECK(r.out == "x^2 + x + y\n");
  CHECK(invoke({"tutte", "-", "--method", "dfs", "--vertex-order", "2,0,1"}, kTriangle).out == "x^2 + x + y\n");
  CHECK(invoke({"tutte", "-", "--method", "dfs", "--vertex-order", "0,0,1"}, kTriangle).code ==
        tutte::cli::kExitInputError);
}

TEST_CASE("verify-all", "[cli]") {
  const Outcome r = invoke({"verify-all", "-"}, kTriangle);
  CHECK(r.code == tutte::cli::kExitOk);
  CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);

  const Outcome loop = invoke({"verify-all", "-"}, "V 2\n0 1\n1 1\n");
  CHECK(loop.code == tutte::cli::kExitOk);
  CHECK(loop.out.find("embedding activities: SKIPPED") != std::string::npos);

  const auto j = nlohmann::json::parse(invoke({"verify-all", "-", "--json"}, kTriangle).out);
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == 14);
}

TEST_CASE("corpus streaming", "[cli]") {
  const Outcome r = invoke({"corpus", "--max-vertices", "2", "--max-edges", "1", "--connected"});
  CHECK(r.code == 0);
  CHECK(r.out == "V 1\n\nV 1\n0 0\n\nV 2\n0 1\n\n");
}

TEST_CASE("input errors exit with code 2", "[cli]") {
  CHECK(invoke({"tutte", "/nonexistent/graph.txt"}).code == tutte::cli::kExitInputError);
  CHECK(invoke({"tutte", "-"}, "V 2\n0 7\n").code == tutte::cli::kExitInputError);
  CHECK(invoke({"tutte", "-", "--method", "nope"}, kTriangle).code == tutte::cli::kExitInputError);
  CHECK(invoke({"tutte", "-", "--method", "bernardi"}, "V 1\n0 0\n").code == tutte::cli::kExitInputError);
  CHECK(invoke({}).code == tutte::cli::kExitInputError);
  const Outcome bad = invoke({"crapo", "-"}, "V 2\n0 1\nfoo\n");
  CHECK(bad.code == tutte::cli::kExitInputError);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(invoke({"--help"}).code == tutte::cli::kExitOk);
}
