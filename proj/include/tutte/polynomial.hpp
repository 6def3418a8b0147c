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

#ifndef TUTTE_POLYNOMIAL_HPP
#define TUTTE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace tutte {

using Rational = boost::multiprecision::cpp_rational;
using Exponents = std::vector<unsigned>;

// Graded lexicographic, largest monomial first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/**
 * Exact multivariate polynomial with rational coefficients over an ordered
 * list of named variables. Zero coefficients are never stored.
 *
 * Binary arithmetic requires both operands to share the same variable list;
 * substitute() is the way to move between variable universes.
 */
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exponents,
                            const Rational& c = 1);

  const std::vector<std::string>& variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& exponents) const;
  bool has_nonnegative_integer_coefficients() const;

  void add_term(const Exponents& exponents, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out *= b;
    return out;
  }
  MultiPoly pow(unsigned k) const;

  // Coefficient-wise equality; variable lists must match too.
  bool operator==(const MultiPoly& other) const = default;

  // Every variable must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  // Replaces variables by polynomials over `target` variables. Variables that
  // are not replaced must also appear in `target` and are carried over.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& replacements,
                       const std::vector<std::string>& target) const;

  // Canonical text, e.g. "x^2 + x + y", "1/2*u*v - 3". Zero prints as "0".
  std::string to_string() const;
  static MultiPoly parse(std::string_view text, std::vector<std::string> variables);

  // [{"exponents": [...], "coeff": 1 | "p/q"}, ...] in canonical order.
  nlohmann::json to_json() const;
  static MultiPoly from_json(const nlohmann::json& terms, std::vector<std::string> variables);

 private:
  void require_same_variables(const MultiPoly& other) const;
  int variable_index(std::string_view name) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

std::string to_string(const Rational& r);

}  // namespace tutte

#endif  // TUTTE_POLYNOMIAL_HPP
