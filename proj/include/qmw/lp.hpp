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

#ifndef QMW_LP_HPP
#define QMW_LP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmw/rational.hpp"

namespace qmw {

enum class Relation { kEq, kGe, kLe };

struct LPRow {
  std::vector<Rat> coeffs;
  Relation rel = Relation::kEq;
  Rat rhs;
  std::string label;  // for human-readable certificates
};

// Feasibility / optimization over exact rationals. Variables carry a lower
// bound (default 0) and an optional upper bound. Floating point never
// touches a solve: the point of this solver is that Infeasible outcomes are
// proofs, not numerics.
struct RationalLP {
  int num_vars = 0;
  std::vector<LPRow> rows;
  std::optional<std::vector<Rat>> objective;
  bool maximize = false;
  std::vector<Rat> lower_bounds;                 // empty = all zero
  std::vector<std::optional<Rat>> upper_bounds;  // empty = none

  Rat lower_bound(int j) const {
    return lower_bounds.empty() ? Rat(0) : lower_bounds[j];
  }
};

enum class LPStatus { kFeasible, kInfeasible, kUnbounded };

struct LPOutcome {
  LPStatus status = LPStatus::kInfeasible;
  std::optional<std::vector<Rat>> witness;  // feasible point
  // Farkas multipliers, one per row followed by one per finite upper bound
  // (in variable order). Sign-consistent with the relations and combining
  // the rows into 0 >= positive; verify_farkas re-checks this exactly.
  std::optional<std::vector<Rat>> farkas;
  std::optional<Rat> optimum;
  std::vector<std::pair<int, int>> pivot_log;  // (entering, leaving) columns
};

// Exact two-phase simplex with Bland's rule. Deterministic: identical input
// gives an identical pivot sequence and identical certificates.
LPOutcome solve(const RationalLP& lp);

// Same, dumping the internal tableau and each pivot to `trace`.
LPOutcome solve_traced(const RationalLP& lp, std::ostream& trace);

struct VariableRange {
  std::optional<Rat> min;  // nullopt = unbounded below
  std::optional<Rat> max;  // nullopt = unbounded above
};

// Exact min and max of one coordinate over the feasible region (two
// optimizing solves). Throws std::invalid_argument if the LP is infeasible.
VariableRange variable_range(const RationalLP& lp, int var_index);

// Exact substitution check of a candidate point against every row and bound.
bool verify_witness(const RationalLP& lp, const std::vector<Rat>& point);

// Exact re-multiplication check of an infeasibility certificate: signs
// consistent with relations, combined coefficient vector <= 0, and
// sum(y_i b_i) - (sum(y_i a_i)) . l > 0.
bool verify_farkas(const RationalLP& lp, const std::vector<Rat>& multipliers);

}  // namespace qmw

#endif  // QMW_LP_HPP
