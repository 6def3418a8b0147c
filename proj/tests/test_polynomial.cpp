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

#include <catch2/catch_amalgamated.hpp>

#include "tutte/errors.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/tutte_core.hpp"

using namespace tutte;

namespace {

MultiPoly xy(std::string_view text) { return MultiPoly::parse(text, kXY); }

}  // namespace

TEST_CASE("zero coefficients are never stored", "[polynomial]") {
  MultiPoly p = xy("x + y") - xy("x");
  CHECK(p.terms().size() == 1);
  CHECK(p == xy("y"));
  CHECK((xy("x") - xy("x")).is_zero());
  CHECK(MultiPoly(kXY).to_string() == "0");
}

TEST_CASE("graded lexicographic display", "[polynomial]") {
  CHECK(xy("y + x + x^2").to_string() == "x^2 + x + y");
  CHECK(xy("2*x*y - 3 + y^3").to_string() == "y^3 + 2*x*y - 3");
  CHECK(xy("-x").to_string() == "-x");
  CHECK(xy("1/2*x + 1/3").to_string() == "1/2*x + 1/3");
}

TEST_CASE("arithmetic", "[polynomial]") {
  const MultiPoly a = xy("x + 1");
  CHECK(a * a == xy("x^2 + 2*x + 1"));
  CHECK(a.pow(0) == xy("1"));
  CHECK(a.pow(3) == xy("x^3 + 3*x^2 + 3*x + 1"));
  CHECK((a - a).is_zero());
  CHECK(xy("x*y").coefficient({1, 1}) == 1);
  CHECK(xy("x*y").coefficient({1, 0}) == 0);
  CHECK_THROWS_AS(a + MultiPoly::variable(kUV, "u"), InputError);
  CHECK_THROWS_AS(MultiPoly::variable(kXY, "q"), InputError);
}

TEST_CASE("ring axioms on sample polynomials", "[polynomial][property]") {
  const std::vector<MultiPoly> samples = {xy("0"), xy("1"), xy("x - y"), xy("1/2*x^2 + y"), xy("-3*x*y + 7"),
                                          xy("y^4 - 2/5")};
  for (const MultiPoly& a : samples) {
    for (const MultiPoly& b : samples) {
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      for (const MultiPoly& c : samples) {
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("evaluation and substitution", "[polynomial]") {
  const MultiPoly p = xy("x^2 + x + y");
  CHECK(p.evaluate({{"x", 2}, {"y", 0}}) == 6);
  CHECK(p.evaluate({{"x", Rational(1, 2)}, {"y", 1}}) == Rational(7, 4));
  CHECK_THROWS_AS(p.evaluate({{"x", 1}}), InputError);

  const MultiPoly shifted = p.substitute({{"x", MultiPoly::parse("x + w", kXWYZ)},
                                          {"y", MultiPoly::parse("y + z", kXWYZ)}},
                                         kXWYZ);
  CHECK(shifted == MultiPoly::parse("x^2 + 2*x*w + w^2 + x + w + y + z", kXWYZ));
  CHECK(shifted.substitute({{"w", MultiPoly::constant(kXWYZ, 0)}, {"z", MultiPoly::constant(kXWYZ, 0)}}, kXWYZ) ==
        MultiPoly::parse("x^2 + x + y", kXWYZ));
  CHECK_THROWS_AS(p.substitute({}, kUV), InputError);
}

TEST_CASE("evaluation commutes with arithmetic", "[polynomial][property]") {
  const MultiPoly a = xy("x^3 - 2*x*y + 1/3");
  const MultiPoly b = xy("y^2 + 5*x");
  for (int x = -2; x <= 2; ++x) {
    for (int y = -2; y <= 2; ++y) {
      const std::map<std::string, Rational> at = {{"x", x}, {"y", y}};
      REQUIRE((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
      REQUIRE((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
    }
  }
}

TEST_CASE("parsing and JSON round trips", "[polynomial]") {
  const MultiPoly p = xy("3*x^2*y - 1/4*y + 12345678901234567890");
  CHECK(MultiPoly::parse(p.to_string(), kXY) == p);
  CHECK(MultiPoly::from_json(p.to_json(), kXY) == p);
  CHECK(xy("x*x") == xy("x^2"));
  CHECK_THROWS_AS(xy(""), InputError);
  CHECK_THROWS_AS(xy("x +"), InputError);
  CHECK_THROWS_AS(xy("x^"), InputError);
  CHECK_THROWS_AS(xy("z"), InputError);
  CHECK_THROWS_AS(MultiPoly::from_json(nlohmann::json::object(), kXY), InputError);

  const auto json = xy("2*x + 1").to_json();
  CHECK(json[0]["exponents"] == nlohmann::json::array({1, 0}));
  CHECK(json[0]["coeff"] == 2);
}
