// Copyright 2026 The qmw Authors
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

#include "qmw/rational.hpp"

namespace qmw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Canonical decimal form; cpp_int would read a leading zero as octal.
std::string canonical_int_token(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return (neg ? "-" : "") + std::string(s);
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_integer_token(text)) return std::nullopt;
      Int v{canonical_int_token(text)};
      return Rat(v);
    }
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = trim(text.substr(slash + 1));
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    Int n{canonical_int_token(num)};
    Int d{canonical_int_token(den)};
    if (d == 0) return std::nullopt;
    return Rat(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string rat_to_string(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string int_to_string(const Int& v) { return v.str(); }

std::optional<Rat> snap_to_rational(double value, const Int& denominator,
                                    double tol) {
  if (!std::isfinite(value)) return std::nullopt;
  double scaled = value * denominator.convert_to<double>();
  double rounded = std::nearbyint(scaled);
  if (std::abs(scaled - rounded) >= tol) return std::nullopt;
  // Round-trippable: |rounded| stays far below 2^53 for every size cap in
  // this library (denominators are at most 2^(2n) with n <= 12).
  Int num(static_cast<long long>(rounded));
  return Rat(num, denominator);
}

std::optional<std::vector<Rat>> parse_rational_list(std::string_view text) {
  std::vector<Rat> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view tok = comma == std::string_view::npos
                               ? text.substr(start)
                               : text.substr(start, comma - start);
    auto r = parse_rational(tok);
    if (!r) return std::nullopt;
    out.push_back(*r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace qmw
