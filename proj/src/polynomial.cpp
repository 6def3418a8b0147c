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

#include "tutte/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tutte/errors.hpp"

namespace tutte {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0U);
  unsigned db = std::accumulate(b.begin(), b.end(), 0U);
  if (da != db) return da > db;
  return a > b;
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  Exponents zero(variables.size(), 0);
  return monomial(std::move(variables), std::move(zero), c);
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.variables_.size(), 0);
  e[p.variable_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exponents, const Rational& c) {
  MultiPoly p(std::move(variables));
  if (exponents.size() != p.variables_.size()) throw InputError("monomial: exponent count mismatch");
  p.add_term(exponents, c);
  return p;
}

int MultiPoly::variable_index(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw InputError("unknown variable '" + std::string(name) + "'");
  return static_cast<int>(it - variables_.begin());
}

Rational MultiPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::has_nonnegative_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
    return term.second > 0 && boost::multiprecision::denominator(term.second) == 1;
  });
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void MultiPoly::require_same_variables(const MultiPoly& other) const {
  if (variables_ != other.variables_) throw InputError("polynomials use different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  require_same_variables(other);
  MultiPoly product(variables_);
  Exponents sum(variables_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      product.add_term(sum, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(variables_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> values;
  values.reserve(variables_.size());
  for (const std::string& name : variables_) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw InputError("evaluate: no value for variable '" + name + "'");
    values.push_back(it->second);
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= values[i];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& replacements,
                                const std::vector<std::string>& target) const {
  std::vector<MultiPoly> images;
  images.reserve(variables_.size());
  for (const std::string& name : variables_) {
    auto it = replacements.find(name);
    if (it != replacements.end()) {
      if (it->second.variables() != target) throw InputError("substitute: replacement for '" + name + "' has the wrong variables");
      images.push_back(it->second);
    } else {
      images.push_back(variable(target, name));
    }
  }
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= images[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variables_[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    Rational magnitude = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (monomial.empty()) {
      out += tutte::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += tutte::to_string(magnitude) + "*" + monomial;
    }
    first = false;
  }
  return out;
}

namespace {

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw InputError("malformed coefficient '" + text + "'");
  }
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> variables) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw InputError("empty polynomial text");

  MultiPoly out(std::move(variables));
  std::size_t pos = 0;
  while (pos < compact.size()) {
    Rational sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      if (compact[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw InputError("expected '+' or '-' in polynomial text");
    }
    std::size_t end = compact.find_first_of("+-", pos);
    std::string term = compact.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty()) throw InputError("empty term in polynomial text");
    pos = end == std::string::npos ? compact.size() : end;

    Rational coeff = sign;
    Exponents e(out.variables_.size(), 0);
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      std::string factor = term.substr(start, star == std::string::npos ? std::string::npos : star - start);
      if (factor.empty()) throw InputError("empty factor in polynomial text");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coeff *= parse_rational(factor);
      } else {
        std::size_t caret = factor.find('^');
        unsigned power = 1;
        if (caret != std::string::npos) {
          std::string digits = factor.substr(caret + 1);
          if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            throw InputError("malformed exponent in '" + factor + "'");
          }
          power = static_cast<unsigned>(std::stoul(digits));
        }
        e[out.variable_index(factor.substr(0, caret))] += power;
      }
      if (star == std::string::npos) break;
      start = star + 1;
    }
    out.add_term(e, coeff);
  }
  return out;
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json coeff;
    if (boost::multiprecision::denominator(c) == 1 && boost::multiprecision::abs(c) < Rational(1LL << 53)) {
      coeff = boost::multiprecision::numerator(c).convert_to<long long>();
    } else {
      coeff = tutte::to_string(c);
    }
    terms.push_back({{"exponents", e}, {"coeff", coeff}});
  }
  return terms;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& terms, std::vector<std::string> variables) {
  MultiPoly out(std::move(variables));
  if (!terms.is_array()) throw InputError("polynomial JSON must be an array of terms");
  for (const auto& term : terms) {
    auto e = term.at("exponents").get<Exponents>();
    if (e.size() != out.variables_.size()) throw InputError("polynomial JSON: exponent count mismatch");
    const auto& coeff = term.at("coeff");
    Rational c = coeff.is_string() ? parse_rational(coeff.get<std::string>()) : Rational(coeff.get<long long>());
    out.add_term(e, c);
  }
  return out;
}

}  // namespace tutte
