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

#include "qmw/enumerator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "qmw/kernels.hpp"
#include "parallel.hpp"

namespace qmw {

namespace {

constexpr int kDensePathCap = 9;     // 4^n strings, kernel-evaluated
constexpr int kKlCap = 10;           // bounded by the basis_states cap
constexpr uint64_t kChunk = 4096;    // fixed: keeps float sums thread-count invariant

struct Buckets {
  std::vector<double> a, b;
};

Buckets merge_buckets(Buckets acc, const Buckets& part) {
  for (size_t i = 0; i < acc.a.size(); ++i) {
    acc.a[i] += part.a[i];
    acc.b[i] += part.b[i];
  }
  return acc;
}

// Kernel basis of {v : M v = 0} over GF(2), rows/vectors packed in uint64.
std::vector<uint64_t> gf2_kernel_basis(std::vector<uint64_t> rows, int cols) {
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    uint64_t bit = uint64_t{1} << col;
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<uint64_t> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    uint64_t v = uint64_t{1} << f;
    for (int r = 0; r < rank; ++r)
      if (rows[r] & (uint64_t{1} << f)) v |= uint64_t{1} << pivot_col[r];
    basis.push_back(v);
  }
  return basis;
}

// Weight histogram of the GF(2) span of `basis`, vectors packed (x | z<<n).
std::vector<uint64_t> span_weight_histogram(const std::vector<uint64_t>& basis,
                                            int n) {
  std::vector<uint64_t> hist(n + 1, 0);
  const uint32_t xmask = n == 32 ? ~0u : (1u << n) - 1u;
  uint64_t cur = 0;
  hist[0] += 1;  // empty combination = identity
  const uint64_t total = uint64_t{1} << basis.size();
  for (uint64_t m = 1; m < total; ++m) {
    cur ^= basis[std::countr_zero(m)];  // Gray-code walk
    uint32_t x = static_cast<uint32_t>(cur) & xmask;
    uint32_t z = static_cast<uint32_t>(cur >> n) & xmask;
    hist[std::popcount(x | z)] += 1;
  }
  return hist;
}

WeightEnumerator from_counts(const std::vector<uint64_t>& hist, int n, int k,
                             WeightEnumerator::Kind kind) {
  WeightEnumerator w;
  w.n = n;
  w.k = k;
  w.kind = kind;
  w.coeffs.reserve(n + 1);
  for (int d = 0; d <= n; ++d) w.coeffs.emplace_back(Int(hist[d]));
  return w;
}

}  // namespace

Rat WeightEnumerator::sum() const {
  Rat s = 0;
  for (const Rat& c : coeffs) s += c;
  return s;
}

std::string WeightEnumerator::str() const {
  std::string out = "(";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += exact ? rat_to_string(coeffs[i]) : std::to_string(float_coeffs[i]);
  }
  out += ")";
  return out;
}

std::pair<WeightEnumerator, WeightEnumerator> enumerate_stabilizer(
    const StabilizerCode& code) {
  const int n = code.num_qubits();
  const int k = code.num_logical();
  if (n - k > 20)
    throw std::invalid_argument("enumerate_stabilizer: 2^(n-k) group too large");
  if (n + k > 22)
    throw std::invalid_argument("enumerate_stabilizer: 2^(n+k) normalizer too large");

  // A: walk the stabilizer group itself.
  std::vector<uint64_t> gen_bits;
  for (const auto& g : code.generators())
    gen_bits.push_back(static_cast<uint64_t>(g.x_bits()) |
                       (static_cast<uint64_t>(g.z_bits()) << n));
  auto a_hist = span_weight_histogram(gen_bits, n);

  // B: walk the normalizer, i.e. the kernel of the symplectic form against
  // the generators. sympl(v, g) = v.x . g.z + v.z . g.x, so constraint row
  // for g is (g.z | g.x << n).
  std::vector<uint64_t> constraint_rows;
  for (const auto& g : code.generators())
    constraint_rows.push_back(static_cast<uint64_t>(g.z_bits()) |
                              (static_cast<uint64_t>(g.x_bits()) << n));
  auto kernel = gf2_kernel_basis(std::move(constraint_rows), 2 * n);
  if (static_cast<int>(kernel.size()) != n + k)
    throw std::runtime_error("enumerate_stabilizer: normalizer dimension mismatch");
  auto b_hist = span_weight_histogram(kernel, n);

  return {from_counts(a_hist, n, k, WeightEnumerator::Kind::kA),
          from_counts(b_hist, n, k, WeightEnumerator::Kind::kB)};
}

std::pair<WeightEnumerator, WeightEnumerator> enumerate_dense(
    const DenseCode& code) {
  const int n = code.num_qubits();
  const int k = code.num_logical();
  if (n > kDensePathCap)
    throw std::invalid_argument("enumerate_dense: n=" + std::to_string(n) +
                                " exceeds the brute-force cap of " +
                                std::to_string(kDensePathCap));
  const auto& basis = code.basis();
  const size_t nb = basis.size();
  const uint32_t nmask = (1u << n) - 1u;
  const uint64_t total = uint64_t{1} << (2 * n);

  auto chunk_fn = [&](uint64_t begin, uint64_t end) {
    Buckets part{std::vector<double>(n + 1, 0.0),
                 std::vector<double>(n + 1, 0.0)};
    for (uint64_t m = begin; m < end; ++m) {
      const uint32_t x = static_cast<uint32_t>(m) & nmask;
      const uint32_t z = static_cast<uint32_t>(m >> n) & nmask;
      const int d = std::popcount(x | z);
      Complex diag_sum = 0;
      double abs2_sum = 0;
      for (size_t i = 0; i < nb; ++i) {
        for (size_t j = 0; j < nb; ++j) {
          Complex mij = kern::pauli_bra_ket(basis[i], basis[j], x, z, 0);
          abs2_sum += std::norm(mij);
          if (i == j) diag_sum += mij;
        }
      }
      part.a[d] += std::norm(diag_sum);
      part.b[d] += abs2_sum;
    }
    return part;
  };
  Buckets zero{std::vector<double>(n + 1, 0.0), std::vector<double>(n + 1, 0.0)};
  Buckets sums = detail::run_chunked(total, kChunk, chunk_fn, zero, merge_buckets);

  const double a_scale = std::ldexp(1.0, -2 * k);  // 2^{-2k}
  const double b_scale = std::ldexp(1.0, -k);
  const Int snap_den = int_pow(2, 2 * k);
  const Int loose_den = int_pow(2, 2 * n);

  auto build = [&](const std::vector<double>& raw, double scale,
                   WeightEnumerator::Kind kind) {
    WeightEnumerator w;
    w.n = n;
    w.k = k;
    w.kind = kind;
    bool all_exact = true;
    std::vector<double> values(n + 1);
    for (int d = 0; d <= n; ++d) {
      values[d] = raw[d] * scale;
      auto snapped = snap_to_rational(values[d], snap_den);
      if (snapped) {
        w.coeffs.push_back(*snapped);
      } else {
        all_exact = false;
        auto loose = snap_to_rational(values[d], loose_den, 0.51);
        w.coeffs.push_back(loose ? *loose : Rat(0));
      }
    }
    w.exact = all_exact;
    if (!all_exact) w.float_coeffs = std::move(values);
    return w;
  };

  auto a = build(sums.a, a_scale, WeightEnumerator::Kind::kA);
  auto b = build(sums.b, b_scale, WeightEnumerator::Kind::kB);
  if (a.exact && a.coeffs[0] != 1)
    throw std::runtime_error("enumerate_dense: A_0 != 1 for an orthonormal basis");
  if (b.exact && b.coeffs[0] != 1)
    throw std::runtime_error("enumerate_dense: B_0 != 1 for an orthonormal basis");
  return {std::move(a), std::move(b)};
}

std::pair<WeightEnumerator, WeightEnumerator> enumerate_code(
    const QuantumCode& code, EnumeratorPath path) {
  switch (path) {
    case EnumeratorPath::kAuto:
      return code.is_stabilizer() ? enumerate_stabilizer(code.stabilizer())
                                  : enumerate_dense(code.dense());
    case EnumeratorPath::kStabilizer:
      if (!code.is_stabilizer())
        throw std::invalid_argument(
            "stabilizer enumeration path requires a stabilizer code");
      return enumerate_stabilizer(code.stabilizer());
    case EnumeratorPath::kDense:
      return enumerate_dense(dense_form(code));
  }
  throw std::logic_error("unreachable");
}

KLReport verify_kl(const QuantumCode& code, int t) {
  const int n = code.num_qubits();
  if (t < 0 || 2 * t > n)
    throw std::invalid_argument("verify_kl: need 0 <= 2t <= n, got t=" +
                                std::to_string(t));
  if (n > kKlCap)
    throw std::invalid_argument("verify_kl: n exceeds the dense cap of " +
                                std::to_string(kKlCap));
  const DenseCode dense = dense_form(code);
  const auto& basis = dense.basis();
  const size_t nb = basis.size();
  constexpr double kTol = 1e-9;

  KLReport report;
  bool any_nonzero_diagonal = false;
  for (int d = 1; d <= 2 * t; ++d) {
    for (const PauliOperator& e : DistanceSet(n, d)) {
      const uint32_t x = e.x_bits(), z = e.z_bits();
      Complex first_diag = 0;
      for (size_t i = 0; i < nb; ++i) {
        for (size_t j = i; j < nb; ++j) {
          Complex mij = kern::pauli_bra_ket(basis[i], basis[j], x, z, 0);
          if (i == j) {
            if (i == 0) {
              first_diag = mij;
            } else if (std::abs(mij - first_diag) > kTol) {
              report.first_violation = {e, KLCondition::kDiagonalMismatch};
              return report;
            }
          } else if (std::abs(mij) > kTol) {
            report.first_violation = {e, KLCondition::kOffDiagonalNonzero};
            return report;
          }
        }
      }
      if (std::abs(first_diag) > kTol) any_nonzero_diagonal = true;
    }
  }
  report.corrects = true;
  report.degenerate = any_nonzero_diagonal;
  return report;
}

DegeneracyReport degeneracy_from_enumerators(const WeightEnumerator& a,
                                             const WeightEnumerator& b,
                                             int t) {
  if (a.n != b.n)
    throw std::invalid_argument("degeneracy_from_enumerators: mismatched n");
  if (t < 0 || 2 * t > a.n)
    throw std::invalid_argument("degeneracy_from_enumerators: bad t");
  DegeneracyReport r;
  r.consistent_with_correction = true;
  for (int d = 1; d <= 2 * t; ++d) {
    if (a.coeffs[d] != b.coeffs[d]) {
      r.consistent_with_correction = false;
      return r;
    }
  }
  for (int d = 1; d <= 2 * t; ++d)
    if (a.coeffs[d] > 0) r.degenerate = true;
  return r;
}

std::string enumerator_to_json(const WeightEnumerator& w) {
  nlohmann::json j;
  j["n"] = w.n;
  j["k"] = w.k;
  j["kind"] = w.kind == WeightEnumerator::Kind::kA ? "A" : "B";
  if (w.exact) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : w.coeffs) coeffs.push_back(rat_to_string(c));
    j["coeffs"] = coeffs;
  } else {
    j["exact"] = false;
    j["float_coeffs"] = w.float_coeffs;
  }
  return j.dump();
}

WeightEnumerator enumerator_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  WeightEnumerator w;
  w.n = j.at("n").get<int>();
  w.k = j.at("k").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind != "A" && kind != "B")
    throw std::invalid_argument("enumerator kind must be A or B");
  w.kind = kind == "A" ? WeightEnumerator::Kind::kA : WeightEnumerator::Kind::kB;
  if (j.contains("exact") && !j.at("exact").get<bool>()) {
    w.exact = false;
    w.float_coeffs = j.at("float_coeffs").get<std::vector<double>>();
    w.coeffs.assign(w.float_coeffs.size(), Rat(0));
    return w;
  }
  for (const auto& c : j.at("coeffs")) {
    auto r = parse_rational(c.get<std::string>());
    if (!r) throw std::invalid_argument("bad coefficient in enumerator JSON");
    w.coeffs.push_back(*r);
  }
  if (static_cast<int>(w.coeffs.size()) != w.n + 1)
    throw std::invalid_argument("enumerator JSON: coeffs length != n+1");
  return w;
}

}  // namespace qmw
