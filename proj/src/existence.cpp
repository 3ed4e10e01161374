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

#include "qmw/existence.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "qmw/transform.hpp"

namespace qmw {

namespace {

void validate_query(const ExistenceQuery& q) {
  if (q.n < 1 || q.n > 64)
    throw std::invalid_argument("existence: n out of range 1..64");
  if (q.k < 0 || q.k > q.n)
    throw std::invalid_argument("existence: need 0 <= k <= n");
  if (q.t < 0 || 2 * q.t > q.n)
    throw std::invalid_argument("existence: need 0 <= 2t <= n");
}

WeightEnumerator enumerator_from_point(const std::vector<Rat>& a_tail, int n,
                                       int k) {
  WeightEnumerator w;
  w.n = n;
  w.k = k;
  w.kind = WeightEnumerator::Kind::kA;
  w.coeffs.reserve(n + 1);
  w.coeffs.emplace_back(1);
  for (const Rat& v : a_tail) w.coeffs.push_back(v);
  return w;
}

}  // namespace

RationalLP build_system(const ExistenceQuery& q) {
  validate_query(q);
  const int n = q.n;
  // kappa[d][d'] with B_d = sum_{d'} kappa[d][d'] A_{d'}; rows get scaled by
  // the common denominator 2^{2n-k} so the tableau starts integral.
  const auto kappa = transform_matrix(n, q.k);
  const Int scale = int_pow(2, 2 * n - q.k);

  RationalLP lp;
  lp.num_vars = n;  // A_1..A_n

  auto b_row_coeffs = [&](int d) {
    std::vector<Rat> c(n);
    for (int dp = 1; dp <= n; ++dp) c[dp - 1] = kappa[d][dp] * scale;
    return c;
  };

  {
    LPRow r;
    r.coeffs = b_row_coeffs(0);
    r.rel = Relation::kEq;
    r.rhs = (Rat(1) - kappa[0][0]) * scale;
    r.label = "B_0 = 1";
    lp.rows.push_back(std::move(r));
  }
  for (int d = 1; d <= n; ++d) {
    LPRow r;
    r.coeffs = b_row_coeffs(d);
    r.coeffs[d - 1] -= scale;  // ... - A_d
    r.rhs = -kappa[d][0] * scale;
    if (d <= 2 * q.t) {
      r.rel = Relation::kEq;
      r.label = "B_" + std::to_string(d) + " = A_" + std::to_string(d);
    } else {
      r.rel = Relation::kGe;
      r.label = "B_" + std::to_string(d) + " >= A_" + std::to_string(d);
    }
    lp.rows.push_back(std::move(r));
  }
  for (int d = 0; d <= n; ++d) {
    LPRow r;
    r.coeffs = b_row_coeffs(d);
    r.rel = Relation::kGe;
    r.rhs = -kappa[d][0] * scale;
    r.label = "B_" + std::to_string(d) + " >= 0";
    lp.rows.push_back(std::move(r));
  }
  if (q.mode == ExistenceMode::kNondegenerate) {
    for (int d = 1; d <= 2 * q.t; ++d) {
      LPRow r;
      r.coeffs.assign(n, Rat(0));
      r.coeffs[d - 1] = 1;
      r.rel = Relation::kEq;
      r.rhs = 0;
      r.label = "A_" + std::to_string(d) + " = 0";
      lp.rows.push_back(std::move(r));
    }
  } else if (q.mode == ExistenceMode::kDegenerate) {
    LPRow r;
    r.coeffs.assign(n, Rat(0));
    for (int d = 1; d <= 2 * q.t; ++d) r.coeffs[d - 1] = 1;
    r.rel = Relation::kGe;
    r.rhs = 1;
    r.label = "sum_{d<=2t} A_d >= 1";
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

ExistenceVerdict decide(const ExistenceQuery& q) {
  validate_query(q);
  RationalLP lp = build_system(q);
  LPOutcome out = solve(lp);

  ExistenceVerdict verdict;
  if (q.mode == ExistenceMode::kDegenerate) {
    // Supremum of the degenerate mass over the unconstrained-mode system.
    ExistenceQuery general = q;
    general.mode = ExistenceMode::kGeneral;
    RationalLP glp = build_system(general);
    glp.objective = std::vector<Rat>(glp.num_vars, Rat(0));
    for (int d = 1; d <= 2 * q.t; ++d) (*glp.objective)[d - 1] = 1;
    glp.maximize = true;
    LPOutcome sup = solve(glp);
    if (sup.status == LPStatus::kUnbounded)
      verdict.degenerate_mass_unbounded = true;
    else if (sup.status == LPStatus::kFeasible)
      verdict.degenerate_mass_sup = *sup.optimum;
  }

  if (out.status == LPStatus::kInfeasible) {
    if (!verify_farkas(lp, *out.farkas))
      throw std::runtime_error("decide: Farkas certificate failed re-verification");
    verdict.status = ExistenceStatus::kInfeasible;
    verdict.certificate = out.farkas;
    return verdict;
  }
  if (!verify_witness(lp, *out.witness))
    throw std::runtime_error("decide: witness failed re-verification");

  // Coordinate ranges decide uniqueness: the feasible region sits inside the
  // box of per-variable ranges, so an all-degenerate box is a single point.
  bool unique = true;
  std::vector<Rat> point(q.n);
  for (int j = 0; j < q.n && unique; ++j) {
    VariableRange r = variable_range(lp, j);
    if (!r.min || !r.max || *r.min != *r.max) {
      unique = false;
      break;
    }
    point[j] = *r.min;
  }

  const std::vector<Rat>& a_tail = unique ? point : *out.witness;
  verdict.status = unique ? ExistenceStatus::kUniqueFeasible
                          : ExistenceStatus::kFeasible;
  WeightEnumerator a = enumerator_from_point(a_tail, q.n, q.k);
  verdict.witness_b = macwilliams_transform(a, q.n, q.k);
  verdict.witness_a = std::move(a);
  return verdict;
}

std::vector<ScanRow> scan(int n_max, int k, int t, unsigned num_threads) {
  if (n_max > 30) throw std::invalid_argument("scan: n_max capped at 30");
  const int lo = std::max({1, k, 2 * t});
  if (lo > n_max) return {};
  if (num_threads == 0) {
    num_threads = std::thread::hardware_concurrency();
    if (num_threads == 0) num_threads = 1;
  }

  std::vector<ScanRow> rows(n_max - lo + 1);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int idx = next.fetch_add(1);
      if (idx >= static_cast<int>(rows.size())) return;
      const int n = lo + idx;
      ExistenceQuery q{n, k, t, ExistenceMode::kGeneral};
      rows[idx].n = n;
      rows[idx].general = decide(q).status;
      q.mode = ExistenceMode::kNondegenerate;
      rows[idx].nondegenerate = decide(q).status;
    }
  };
  std::vector<std::thread> pool;
  unsigned launch =
      std::min<unsigned>(num_threads, static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < launch; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return rows;
}

const char* to_string(ExistenceStatus s) {
  switch (s) {
    case ExistenceStatus::kFeasible: return "FEASIBLE";
    case ExistenceStatus::kInfeasible: return "INFEASIBLE";
    case ExistenceStatus::kUniqueFeasible: return "UNIQUE_FEASIBLE";
  }
  return "?";
}

const char* to_string(ExistenceMode m) {
  switch (m) {
    case ExistenceMode::kGeneral: return "general";
    case ExistenceMode::kDegenerate: return "degenerate";
    case ExistenceMode::kNondegenerate: return "nondegenerate";
  }
  return "?";
}

std::optional<ExistenceMode> parse_mode(const std::string& name) {
  if (name == "general") return ExistenceMode::kGeneral;
  if (name == "degenerate") return ExistenceMode::kDegenerate;
  if (name == "nondegenerate") return ExistenceMode::kNondegenerate;
  return std::nullopt;
}

}  // namespace qmw
