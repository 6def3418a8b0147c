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

#ifndef TUTTE_EDGE_SET_HPP
#define TUTTE_EDGE_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace tutte {

inline constexpr int kMaxEdges = 64;

/// A set of edge indices backed by one machine word. Index i is edge e_i.
class EdgeSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}
  constexpr EdgeSet(std::initializer_list<int> edges) {
    for (int e : edges) insert(e);
  }

  static constexpr EdgeSet full(int m) {
    return EdgeSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }
  static constexpr EdgeSet single(int e) { return EdgeSet(std::uint64_t{1} << e); }
  // {e : e < bound}
  static constexpr EdgeSet below(int bound) { return full(bound); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(EdgeSet other) const { return (bits_ & other.bits_) != 0; }
  // Smallest element; -1 when empty.
  constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr EdgeSet with(int e) const { return EdgeSet(bits_ | (std::uint64_t{1} << e)); }
  constexpr EdgeSet without(int e) const { return EdgeSet(bits_ & ~(std::uint64_t{1} << e)); }
  // Complement relative to the ground set {0..m-1}.
  constexpr EdgeSet complement(int m) const { return EdgeSet(~bits_ & full(m).bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet operator-(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }
  constexpr EdgeSet& operator|=(EdgeSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr EdgeSet& operator&=(EdgeSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr EdgeSet& operator-=(EdgeSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const EdgeSet&) const = default;

  std::vector<int> to_vector() const { return {begin(), end()}; }

  // "{e0,e2}" style, ascending.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ",";
      out += "e" + std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace tutte

#endif  // TUTTE_EDGE_SET_HPP
