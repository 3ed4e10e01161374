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

#ifndef QMW_RATIONAL_HPP
#define QMW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmw {

// All exact arithmetic in the library runs on arbitrary-precision integers
// and rationals. Krawtchouk coefficients exceed 64 bits past n ~ 30 and
// simplex pivoting grows numerators without bound, so fixed-width types are
// not an option anywhere on the exact paths.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is always an integer binomial prefix
  }
  return r;
}

// Parses "p/q" or a plain integer, with optional sign. Returns nullopt on
// malformed input or zero denominator.
std::optional<Rat> parse_rational(std::string_view text);

// Prints integers as "p" and non-integers as "p/q" (canonical lowest terms).
std::string rat_to_string(const Rat& r);

std::string int_to_string(const Int& v);

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// Nearest rational with the given denominator, accepted only when the
// scaled value sits within `tol` of an integer. Guards the dense-path
// float-to-exact conversion against silently wrong output.
std::optional<Rat> snap_to_rational(double value, const Int& denominator,
                                    double tol = 1e-6);

// Comma-separated list of rationals ("1,0,0,0,15,0" or "1/2,3/4").
std::optional<std::vector<Rat>> parse_rational_list(std::string_view text);

}  // namespace qmw

#endif  // QMW_RATIONAL_HPP
