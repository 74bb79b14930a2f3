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

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <span>
#include <string>
#include <string_view>

#include "umat/errors.hpp"

namespace umat {

// Exact rational in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational halve(const Rational& r) { return r / 2; }

inline Rational midpoint(const Rational& a, const Rational& b) {
  return halve(a + b);
}

// "p/q" or "p"; integers serialize without a denominator.
inline std::string to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1) {
    s += '/';
    s += boost::multiprecision::denominator(r).str();
  }
  return s;
}

namespace detail {

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

// Accepts an optional leading '-', decimal digits, and an optional
// "/positive-digits" suffix. Throws InputError on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!detail::is_digits(num_digits) || !detail::is_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  Integer q(std::string{den});
  if (q == 0) {
    throw InputError("zero denominator in rational '" + std::string(text) + "'");
  }
  return Rational(Integer(std::string{num}), q);
}

inline Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace umat
