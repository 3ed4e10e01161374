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

#include "qmw/lp.hpp"

#include <ostream>
#include <stdexcept>

namespace qmw {

namespace {

// Dense exact-simplex tableau. Columns: the shifted structural variables
// y_j = x_j - l_j, then one slack per inequality row, then one artificial
// per row that needs one for the phase-1 basis. Row order: user rows first,
// then upper-bound rows y_j <= u_j - l_j.
class Tableau {
 public:
  Tableau(const RationalLP& lp, std::ostream* trace)
      : lp_(lp), trace_(trace) {
    build();
  }

  // Returns false when phase 1 ends with a positive artificial sum.
  bool phase1();

  // Minimizes `cost` (over shifted structural variables). Returns false on
  // unboundedness.
  bool phase2(const std::vector<Rat>& cost);

  std::vector<Rat> witness() const;            // in user coordinates
  std::vector<Rat> farkas_multipliers() const; // user rows + bound rows
  Rat shifted_objective_value() const { return zval_; }
  const std::vector<std::pair<int, int>>& pivot_log() const { return log_; }

 private:
  void build();
  void pivot(int row, int col);
  void reset_costs(const std::vector<Rat>& cost);
  bool run_simplex(bool allow_artificial_entering);
  void drive_artificials_out();
  void dump(const char* tag);

  const RationalLP& lp_;
  std::ostream* trace_;

  int num_rows_ = 0;     // user rows + upper-bound rows
  int num_y_ = 0;        // structural columns
  int num_cols_ = 0;     // structural + slack + artificial
  int first_artificial_ = 0;
  std::vector<std::vector<Rat>> t_;  // num_rows_ x num_cols_
  std::vector<Rat> b_;
  std::vector<int> basis_;
  std::vector<int> sign_;            // +1/-1 row normalization factors
  std::vector<Relation> rel_;        // normalized relation per internal row
  std::vector<int> slack_col_;       // -1 if none
  std::vector<int> art_col_;         // -1 if none
  std::vector<Rat> red_;             // reduced costs
  Rat zval_;                         // current objective value
  std::vector<Rat> cost_;            // active cost vector over all columns
  std::vector<std::pair<int, int>> log_;
};

void Tableau::build() {
  num_y_ = lp_.num_vars;
  std::vector<LPRow> rows = lp_.rows;
  for (int j = 0; j < num_y_; ++j) {
    if (!lp_.upper_bounds.empty() && lp_.upper_bounds[j]) {
      // Stated in original x units; the generic shift below moves it to y.
      LPRow r;
      r.coeffs.assign(num_y_, Rat(0));
      r.coeffs[j] = 1;
      r.rel = Relation::kLe;
      r.rhs = *lp_.upper_bounds[j];
      r.label = "upper bound x" + std::to_string(j);
      rows.push_back(std::move(r));
    }
  }
  num_rows_ = static_cast<int>(rows.size());

  int num_slacks = 0;
  for (const auto& r : rows)
    if (r.rel != Relation::kEq) ++num_slacks;

  // Shift rhs by the lower bounds, normalize rhs >= 0, lay out slack
  // columns, then give every row without a usable unit slack an artificial.
  t_.assign(num_rows_, std::vector<Rat>(num_y_ + num_slacks, Rat(0)));
  b_.assign(num_rows_, Rat(0));
  sign_.assign(num_rows_, 1);
  rel_.resize(num_rows_);
  slack_col_.assign(num_rows_, -1);
  art_col_.assign(num_rows_, -1);
  basis_.assign(num_rows_, -1);

  int next_slack = num_y_;
  for (int i = 0; i < num_rows_; ++i) {
    const LPRow& r = rows[i];
    if (static_cast<int>(r.coeffs.size()) != num_y_)
      throw std::invalid_argument("LP row " + std::to_string(i) +
                                  " has wrong coefficient count");
    Rat rhs = r.rhs;
    for (int j = 0; j < num_y_; ++j) rhs -= r.coeffs[j] * lp_.lower_bound(j);
    Relation rel = r.rel;
    int s = 1;
    if (rhs < 0) {
      s = -1;
      rhs = -rhs;
      if (rel == Relation::kGe)
        rel = Relation::kLe;
      else if (rel == Relation::kLe)
        rel = Relation::kGe;
    }
    sign_[i] = s;
    rel_[i] = rel;
    b_[i] = rhs;
    for (int j = 0; j < num_y_; ++j) t_[i][j] = s * r.coeffs[j];
    if (rel != Relation::kEq) {
      int col = next_slack++;
      slack_col_[i] = col;
      t_[i][col] = rel == Relation::kLe ? 1 : -1;
    }
  }

  // Artificials: LE rows start with their slack basic; everything else
  // needs one.
  first_artificial_ = num_y_ + num_slacks;
  int num_art = 0;
  for (int i = 0; i < num_rows_; ++i)
    if (rel_[i] != Relation::kLe) ++num_art;
  num_cols_ = first_artificial_ + num_art;
  for (auto& row : t_) row.resize(num_cols_, Rat(0));
  int next_art = first_artificial_;
  for (int i = 0; i < num_rows_; ++i) {
    if (rel_[i] == Relation::kLe) {
      basis_[i] = slack_col_[i];
    } else {
      int col = next_art++;
      art_col_[i] = col;
      t_[i][col] = 1;
      basis_[i] = col;
    }
  }
}

void Tableau::reset_costs(const std::vector<Rat>& cost) {
  cost_ = cost;
  cost_.resize(num_cols_, Rat(0));
  red_ = cost_;
  zval_ = 0;
  for (int i = 0; i < num_rows_; ++i) {
    const Rat& cb = cost_[basis_[i]];
    if (cb == 0) continue;
    for (int j = 0; j < num_cols_; ++j) red_[j] -= cb * t_[i][j];
    zval_ += cb * b_[i];
  }
}

void Tableau::pivot(int row, int col) {
  log_.emplace_back(col, basis_[row]);
  const Rat p = t_[row][col];
  for (int j = 0; j < num_cols_; ++j) t_[row][j] /= p;
  b_[row] /= p;
  for (int i = 0; i < num_rows_; ++i) {
    if (i == row) continue;
    const Rat f = t_[i][col];
    if (f == 0) continue;
    for (int j = 0; j < num_cols_; ++j) t_[i][j] -= f * t_[row][j];
    b_[i] -= f * b_[row];
  }
  const Rat rc = red_[col];
  if (rc != 0) {
    for (int j = 0; j < num_cols_; ++j) red_[j] -= rc * t_[row][j];
    zval_ += rc * b_[row];
  }
  basis_[row] = col;
  if (trace_)
    *trace_ << "pivot: col " << col << " enters, row " << row
            << " leaves (z=" << rat_to_string(zval_) << ")\n";
}

bool Tableau::run_simplex(bool allow_artificial_entering) {
  const int limit = allow_artificial_entering ? num_cols_ : first_artificial_;
  for (;;) {
    // Bland: lowest-index column with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < limit; ++j) {
      if (red_[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;  // optimal

    // Ratio test; ties broken by the lowest basic-variable index.
    int leave = -1;
    Rat best;
    for (int i = 0; i < num_rows_; ++i) {
      if (t_[i][enter] <= 0) continue;
      Rat ratio = b_[i] / t_[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis_[i] < basis_[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded
    pivot(leave, enter);
  }
}

bool Tableau::phase1() {
  std::vector<Rat> cost(num_cols_, Rat(0));
  for (int j = first_artificial_; j < num_cols_; ++j) cost[j] = 1;
  reset_costs(cost);
  dump("phase 1 start");
  run_simplex(true);  // artificial sum is bounded below by 0
  if (zval_ > 0) return false;
  drive_artificials_out();
  return true;
}

void Tableau::drive_artificials_out() {
  for (int i = 0; i < num_rows_; ++i) {
    if (basis_[i] < first_artificial_) continue;
    // Basic artificial sits at zero; swap in any structural or slack column
    // with a nonzero entry. A row with none is redundant and stays parked.
    for (int j = 0; j < first_artificial_; ++j) {
      if (t_[i][j] != 0) {
        pivot(i, j);
        break;
      }
    }
  }
}

bool Tableau::phase2(const std::vector<Rat>& cost) {
  reset_costs(cost);
  dump("phase 2 start");
  return run_simplex(false);
}

std::vector<Rat> Tableau::witness() const {
  std::vector<Rat> x(num_y_);
  for (int j = 0; j < num_y_; ++j) x[j] = lp_.lower_bound(j);
  for (int i = 0; i < num_rows_; ++i)
    if (basis_[i] < num_y_) x[basis_[i]] += b_[i];
  return x;
}

std::vector<Rat> Tableau::farkas_multipliers() const {
  // Duals fall out of the phase-1 reduced costs: for a row with an
  // artificial, y_i = 1 - red[art_i]; otherwise the row started with a unit
  // slack and y_i = -red[slack_i]. Undo the rhs sign normalization so the
  // multipliers apply to the rows as given.
  std::vector<Rat> y(num_rows_);
  for (int i = 0; i < num_rows_; ++i) {
    Rat yi = art_col_[i] >= 0 ? Rat(1) - red_[art_col_[i]]
                              : -red_[slack_col_[i]];
    y[i] = Rat(sign_[i]) * yi;
  }
  return y;
}

void Tableau::dump(const char* tag) {
  if (!trace_) return;
  *trace_ << "-- " << tag << ": " << num_rows_ << " rows, " << num_cols_
          << " cols (structural " << num_y_ << ", artificial from "
          << first_artificial_ << ")\n";
  for (int i = 0; i < num_rows_; ++i) {
    *trace_ << "  [" << i << "]";
    for (int j = 0; j < num_cols_; ++j)
      *trace_ << " " << rat_to_string(t_[i][j]);
    *trace_ << " | " << rat_to_string(b_[i]) << "\n";
  }
}

void validate(const RationalLP& lp) {
  if (lp.num_vars < 1)
    throw std::invalid_argument("LP must have at least one variable");
  for (const auto& r : lp.rows)
    if (static_cast<int>(r.coeffs.size()) != lp.num_vars)
      throw std::invalid_argument("LP row coefficient count != num_vars");
  if (!lp.lower_bounds.empty() &&
      static_cast<int>(lp.lower_bounds.size()) != lp.num_vars)
    throw std::invalid_argument("LP lower_bounds size mismatch");
  if (!lp.upper_bounds.empty() &&
      static_cast<int>(lp.upper_bounds.size()) != lp.num_vars)
    throw std::invalid_argument("LP upper_bounds size mismatch");
  if (lp.objective &&
      static_cast<int>(lp.objective->size()) != lp.num_vars)
    throw std::invalid_argument("LP objective size mismatch");
}

LPOutcome solve_impl(const RationalLP& lp, std::ostream* trace) {
  validate(lp);
  Tableau tab(lp, trace);
  LPOutcome out;
  if (!tab.phase1()) {
    out.status = LPStatus::kInfeasible;
    out.farkas = tab.farkas_multipliers();
    out.pivot_log = tab.pivot_log();
    return out;
  }
  if (lp.objective) {
    std::vector<Rat> cost(lp.num_vars);
    for (int j = 0; j < lp.num_vars; ++j)
      cost[j] = lp.maximize ? -(*lp.objective)[j] : (*lp.objective)[j];
    if (!tab.phase2(cost)) {
      out.status = LPStatus::kUnbounded;
      out.witness = tab.witness();
      out.pivot_log = tab.pivot_log();
      return out;
    }
    // Undo the shift and the minimization sign.
    Rat value = tab.shifted_objective_value();
    for (int j = 0; j < lp.num_vars; ++j)
      value += cost[j] * lp.lower_bound(j);
    out.optimum = lp.maximize ? -value : value;
  }
  out.status = LPStatus::kFeasible;
  out.witness = tab.witness();
  out.pivot_log = tab.pivot_log();
  return out;
}

}  // namespace

LPOutcome solve(const RationalLP& lp) { return solve_impl(lp, nullptr); }

LPOutcome solve_traced(const RationalLP& lp, std::ostream& trace) {
  return solve_impl(lp, &trace);
}

VariableRange variable_range(const RationalLP& lp, int var_index) {
  validate(lp);
  if (var_index < 0 || var_index >= lp.num_vars)
    throw std::invalid_argument("variable_range: index out of range");
  RationalLP probe = lp;
  probe.objective = std::vector<Rat>(lp.num_vars, Rat(0));
  (*probe.objective)[var_index] = 1;

  VariableRange range;
  probe.maximize = false;
  LPOutcome lo = solve(probe);
  if (lo.status == LPStatus::kInfeasible)
    throw std::invalid_argument("variable_range: LP is infeasible");
  if (lo.status == LPStatus::kFeasible) range.min = *lo.optimum;
  probe.maximize = true;
  LPOutcome hi = solve(probe);
  if (hi.status == LPStatus::kFeasible) range.max = *hi.optimum;
  return range;
}

bool verify_witness(const RationalLP& lp, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != lp.num_vars) return false;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (point[j] < lp.lower_bound(j)) return false;
    if (!lp.upper_bounds.empty() && lp.upper_bounds[j] &&
        point[j] > *lp.upper_bounds[j])
      return false;
  }
  for (const auto& r : lp.rows) {
    Rat lhs = 0;
    for (int j = 0; j < lp.num_vars; ++j) lhs += r.coeffs[j] * point[j];
    switch (r.rel) {
      case Relation::kEq:
        if (lhs != r.rhs) return false;
        break;
      case Relation::kGe:
        if (lhs < r.rhs) return false;
        break;
      case Relation::kLe:
        if (lhs > r.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_farkas(const RationalLP& lp, const std::vector<Rat>& multipliers) {
  // Rebuild the row list the solver certified: user rows, then a <= row per
  // finite upper bound.
  std::vector<LPRow> rows = lp.rows;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.upper_bounds.empty() && lp.upper_bounds[j]) {
      LPRow r;
      r.coeffs.assign(lp.num_vars, Rat(0));
      r.coeffs[j] = 1;
      r.rel = Relation::kLe;
      r.rhs = *lp.upper_bounds[j];
      rows.push_back(std::move(r));
    }
  }
  if (multipliers.size() != rows.size()) return false;

  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel == Relation::kGe && multipliers[i] < 0) return false;
    if (rows[i].rel == Relation::kLe && multipliers[i] > 0) return false;
  }
  std::vector<Rat> combined(lp.num_vars, Rat(0));
  Rat rhs_combo = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (multipliers[i] == 0) continue;
    for (int j = 0; j < lp.num_vars; ++j)
      combined[j] += multipliers[i] * rows[i].coeffs[j];
    rhs_combo += multipliers[i] * rows[i].rhs;
  }
  // With every combined coefficient <= 0 and x >= l, the left side tops out
  // at combined . l, so rhs_combo > combined . l is the contradiction.
  Rat reach = 0;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (combined[j] > 0) return false;
    reach += combined[j] * lp.lower_bound(j);
  }
  return rhs_combo > reach;
}

}  // namespace qmw
