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
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "umat/errors.hpp"

namespace umat {

using Element = std::size_t;

// A subset of {0, ..., universe-1}. Iteration is in ascending index order.
// Binary operations require both operands to share the same universe.
class ElemSet {
  using Bits = boost::dynamic_bitset<std::uint64_t>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    const_iterator(const Bits* bits, Element pos) : bits_(bits), pos_(pos) {}

    Element operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const Bits* bits_ = nullptr;
    Element pos_ = Bits::npos;
  };

  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : bits_(universe) {}
  ElemSet(std::size_t universe, std::initializer_list<Element> members)
      : bits_(universe) {
    for (Element e : members) insert(e);
  }
  ElemSet(std::size_t universe, const std::vector<Element>& members)
      : bits_(universe) {
    for (Element e : members) insert(e);
  }

  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Element e) const { return e < bits_.size() && bits_.test(e); }

  void insert(Element e) {
    check(e);
    bits_.set(e);
  }
  void erase(Element e) {
    check(e);
    bits_.reset(e);
  }

  ElemSet with(Element e) const {
    ElemSet s = *this;
    s.insert(e);
    return s;
  }
  ElemSet without(Element e) const {
    ElemSet s = *this;
    s.erase(e);
    return s;
  }

  bool is_subset_of(const ElemSet& other) const {
    same_universe(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const ElemSet& other) const {
    same_universe(other);
    return bits_.intersects(other.bits_);
  }

  ElemSet& operator|=(const ElemSet& o) {
    same_universe(o);
    bits_ |= o.bits_;
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    same_universe(o);
    bits_ &= o.bits_;
    return *this;
  }
  ElemSet& operator-=(const ElemSet& o) {
    same_universe(o);
    bits_ -= o.bits_;
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.bits_ == b.bits_;
  }
  // Lexicographic on ascending member lists; gives std::set a stable order.
  friend std::strong_ordering operator<=>(const ElemSet& a, const ElemSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return ma <=> mb;
  }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  std::vector<Element> members() const { return {begin(), end()}; }

  // Smallest member; universe() when empty.
  Element first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? universe() : p;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (Element e : *this) {
      if (sep) s += ',';
      s += std::to_string(e);
      sep = true;
    }
    return s + "}";
  }

 private:
  void check(Element e) const {
    if (e >= bits_.size()) {
      throw InputError("element index " + std::to_string(e) +
                       " out of range for ground set of size " +
                       std::to_string(bits_.size()));
    }
  }
  void same_universe(const ElemSet& o) const {
    if (o.universe() != universe()) {
      throw ContractViolation("element sets over different universes");
    }
  }

  Bits bits_;
};

}  // namespace umat
