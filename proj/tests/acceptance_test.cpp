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

// End-to-end acceptance suite. Runs every headline result at its stated
// tolerance and budget, printing one PASS/FAIL line per criterion. The CLI
// binary path is taken from the last command-line argument so the
// command-level results are checked through the real executable as well as
// the library.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qmw/code.hpp"
#include "qmw/enumerator.hpp"
#include "qmw/existence.hpp"
#include "qmw/fidelity.hpp"
#include "qmw/pauli.hpp"
#include "qmw/transform.hpp"

using namespace qmw;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;
int g_failures = 0;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

void criterion(int id, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
              std::to_string(budget_seconds) + "s";
  }
  std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool feasible_family(ExistenceStatus s) {
  return s == ExistenceStatus::kFeasible ||
         s == ExistenceStatus::kUniqueFeasible;
}

std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

void run_scan30() {
  criterion(10, "scan reaches n=30 for k=1, t in {1,2}", 1800,
            [&](std::string& detail) {
              for (int t : {1, 2}) {
                auto r = run_cli("scan --max-n 30 --k 1 --t " +
                                 std::to_string(t));
                if (r.exit_code != 0) {
                  detail = "scan t=" + std::to_string(t) + " exited " +
                           std::to_string(r.exit_code);
                  return false;
                }
                if (r.output.find("\n  30") == std::string::npos) {
                  detail = "scan t=" + std::to_string(t) + " missing n=30 row";
                  return false;
                }
              }
              return true;
            });
}

}  // namespace

int main(int argc, char** argv) {
  bool scan30_only = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--scan30")
      scan30_only = true;
    else
      g_cli_path = arg;
  }
  if (g_cli_path.empty()) {
    std::cerr << "usage: acceptance [--scan30] <path-to-qmw-cli>\n";
    return 64;
  }

  if (scan30_only) {
    run_scan30();
    return g_failures == 0 ? 0 : 1;
  }

  criterion(1, "five-qubit enumerator exact on both paths", 1, [](std::string& detail) {
    const auto want_a = rats({1, 0, 0, 0, 15, 0});
    const auto want_b = rats({1, 0, 0, 30, 15, 18});
    auto code = builtin_code("five_qubit");
    auto [as, bs] = enumerate_stabilizer(code.stabilizer());
    auto [ad, bd] = enumerate_dense(basis_states(code.stabilizer()));
    if (as.coeffs != want_a || ad.coeffs != want_a) {
      detail = "A mismatch";
      return false;
    }
    if (bs.coeffs != want_b || bd.coeffs != want_b || !ad.exact || !bd.exact) {
      detail = "B mismatch";
      return false;
    }
    auto cli = run_cli("enumerate five_qubit --path both");
    if (cli.exit_code != 0 ||
        cli.output.find("A = (1, 0, 0, 0, 15, 0)") == std::string::npos ||
        cli.output.find("B = (1, 0, 0, 30, 15, 18)") == std::string::npos ||
        cli.output.find("paths agree: yes") == std::string::npos) {
      detail = "CLI output mismatch";
      return false;
    }
    return true;
  });

  criterion(2, "(5,1,t=1) unique solution; degenerate variant infeasible", 5,
            [](std::string& detail) {
              auto v = decide({5, 1, 1, ExistenceMode::kGeneral});
              if (v.status != ExistenceStatus::kUniqueFeasible) {
                detail = "not unique";
                return false;
              }
              if (v.witness_a->coeffs != rats({1, 0, 0, 0, 15, 0}) ||
                  v.witness_b->coeffs != rats({1, 0, 0, 30, 15, 18})) {
                detail = "wrong point";
                return false;
              }
              RationalLP lp = build_system({5, 1, 1, ExistenceMode::kGeneral});
              for (int j = 0; j < 5; ++j) {
                auto r = variable_range(lp, j);
                if (!r.min || !r.max || *r.min != *r.max) {
                  detail = "coordinate range not degenerate";
                  return false;
                }
              }
              auto cli = run_cli("exists --n 5 --k 1 --t 1 --mode degenerate");
              if (cli.exit_code != 3 ||
                  cli.output.find("INFEASIBLE") == std::string::npos) {
                detail = "degenerate CLI expected exit 3 + INFEASIBLE";
                return false;
              }
              return true;
            });

  criterion(3, "(9,1,t=2) infeasible with exact Farkas certificate", 5,
            [](std::string& detail) {
              auto v = decide({9, 1, 2, ExistenceMode::kGeneral});
              if (v.status != ExistenceStatus::kInfeasible || !v.certificate) {
                detail = "expected infeasible + certificate";
                return false;
              }
              if (!verify_farkas(build_system({9, 1, 2, ExistenceMode::kGeneral}),
                                 *v.certificate)) {
                detail = "certificate failed re-verification";
                return false;
              }
              auto cli = run_cli("exists --n 9 --k 1 --t 2");
              if (cli.exit_code != 3 ||
                  cli.output.find("INFEASIBLE") == std::string::npos) {
                detail = "CLI expected exit 3 + INFEASIBLE";
                return false;
              }
              return true;
            });

  criterion(4, "(10,1,t=2) feasible with exactly verified witness", 5,
            [](std::string& detail) {
              auto v = decide({10, 1, 2, ExistenceMode::kGeneral});
              if (!feasible_family(v.status) || !v.witness_a) {
                detail = "expected a feasible verdict";
                return false;
              }
              RationalLP lp = build_system({10, 1, 2, ExistenceMode::kGeneral});
              std::vector<Rat> tail(v.witness_a->coeffs.begin() + 1,
                                    v.witness_a->coeffs.end());
              if (!verify_witness(lp, tail)) {
                detail = "witness failed substitution";
                return false;
              }
              auto cli = run_cli("exists --n 10 --k 1 --t 2");
              if (cli.exit_code != 0) {
                detail = "CLI expected exit 0";
                return false;
              }
              return true;
            });

  criterion(5, "alpha table matches the 2-qubit coefficients and brute force",
            0, [](std::string& detail) {
              auto t2 = krawtchouk_table(2);
              const long want[3][3] = {{1, 1, 1}, {6, 2, -2}, {9, -3, 1}};
              for (int d = 0; d <= 2; ++d)
                for (int dp = 0; dp <= 2; ++dp)
                  if (t2.alpha[d][dp] != Int(4 * want[d][dp])) {
                    detail = "n=2 table mismatch";
                    return false;
                  }
              for (int n = 1; n <= 4; ++n) {
                auto t = krawtchouk_table(n);
                for (int d = 0; d <= n; ++d)
                  for (int dp = 0; dp <= n; ++dp)
                    if (alpha_bruteforce(n, d, dp) != t.alpha[d][dp]) {
                      detail = "brute-force mismatch at n=" + std::to_string(n);
                      return false;
                    }
              }
              return true;
            });

  criterion(6, "(5,1,t=1) system reproduces the six displayed B-lines", 0,
            [](std::string& detail) {
              const long table[6][6] = {{1, 1, 1, 1, 1, 1},
                                        {15, 11, 7, 3, -1, -5},
                                        {90, 42, 10, -6, -6, 10},
                                        {270, 54, -18, -10, 14, -10},
                                        {405, -27, -27, 21, -11, 5},
                                        {243, -81, 27, -9, 3, -1}};
              auto kappa = transform_matrix(5, 1);
              for (int d = 0; d <= 5; ++d)
                for (int dp = 0; dp <= 5; ++dp)
                  if (kappa[d][dp] != Rat(table[d][dp], 16)) {
                    detail = "kappa mismatch";
                    return false;
                  }
              RationalLP lp = build_system({5, 1, 1, ExistenceMode::kGeneral});
              const Rat scale = Rat(int_pow(2, 9));
              for (int d = 0; d <= 5; ++d) {
                const LPRow& r = lp.rows[d == 0 ? 0 : d];
                for (int dp = 1; dp <= 5; ++dp) {
                  Rat want = Rat(table[d][dp], 16) * scale;
                  if (d >= 1 && dp == d) want -= scale;
                  if (r.coeffs[dp - 1] != want) {
                    detail = "row " + std::to_string(d) + " mismatch";
                    return false;
                  }
                }
                bool want_eq = d <= 2;
                if ((r.rel == Relation::kEq) != want_eq) {
                  detail = "relation mismatch at d=" + std::to_string(d);
                  return false;
                }
              }
              return true;
            });

  criterion(7, "property suites: round trip, sum rules, Hadamard, cross-path",
            0, [](std::string& detail) {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20), nn(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
      int n = nn(rng);
      int k = trial % (n + 1);
      WeightEnumerator a;
      a.n = n;
      a.k = k;
      a.coeffs.clear();
      for (int d = 0; d <= n; ++d) a.coeffs.emplace_back(num(rng), den(rng));
      auto back = inverse_transform(macwilliams_transform(a, n, k), n, k);
      if (back.coeffs != a.coeffs) {
        detail = "round trip failed";
        return false;
      }
    }
    for (const char* name : {"five_qubit", "steane_7", "shor_9", "bell",
                             "trivial_1", "trivial_2", "trivial_3"}) {
      auto code = builtin_code(name);
      const int n = code.num_qubits(), k = code.num_logical();
      auto [a, b] = enumerate_stabilizer(code.stabilizer());
      if (a.sum() != Rat(int_pow(2, n - k)) || b.sum() != Rat(int_pow(2, n + k))) {
        detail = std::string("sum rule failed for ") + name;
        return false;
      }
      for (int d = 0; d <= n; ++d)
        if (a.coeffs[d] < 0 || b.coeffs[d] < a.coeffs[d]) {
          detail = std::string("B >= A >= 0 failed for ") + name;
          return false;
        }
      auto [ad, bd] = enumerate_dense(basis_states(code.stabilizer()));
      if (!ad.exact || ad.coeffs != a.coeffs || bd.coeffs != b.coeffs) {
        detail = std::string("cross-path failed for ") + name;
        return false;
      }
    }
    for (int n = 1; n <= 3; ++n) {
      const double dim = std::pow(2.0, n);
      std::vector<PauliOperator> ops;
      std::vector<CMat> mats;
      for (uint64_t m = 0; m < (uint64_t{1} << (2 * n)); ++m) {
        uint32_t x = static_cast<uint32_t>(m) & ((1u << n) - 1u);
        uint32_t z = static_cast<uint32_t>(m >> n);
        ops.push_back(PauliOperator::from_bits(n, x, z, 0));
        mats.push_back(dense_matrix(ops.back()));
      }
      for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = 0; j < ops.size(); ++j) {
          CMat ab = matmul(mats[i], mats[j]);
          Complex tr = matmul(ab, ab).trace();
          double want = commutes(ops[i], ops[j]) ? dim : -dim;
          if (std::abs(tr - Complex{want, 0}) > 1e-10) {
            detail = "Hadamard sign failed";
            return false;
          }
        }
    }
    return true;
  });

  criterion(8, "Knill-Laflamme: five_qubit non-degenerate, shor_9 degenerate",
            0, [](std::string& detail) {
              auto five = builtin_code("five_qubit");
              auto shor = builtin_code("shor_9");
              auto r5 = verify_kl(five, 1);
              auto r9 = verify_kl(shor, 1);
              if (!r5.corrects || r5.degenerate) {
                detail = "five_qubit expected corrects, non-degenerate";
                return false;
              }
              if (!r9.corrects || !r9.degenerate) {
                detail = "shor_9 expected corrects, degenerate";
                return false;
              }
              for (auto* code : {&five, &shor}) {
                auto [a, b] = enumerate_stabilizer(code->stabilizer());
                auto de = degeneracy_from_enumerators(a, b, 1);
                auto kl = verify_kl(*code, 1);
                if (!de.consistent_with_correction ||
                    de.degenerate != kl.degenerate) {
                  detail = "enumerator/KL disagreement";
                  return false;
                }
              }
              auto cli = run_cli("verify-kl shor_9 --t 1");
              if (cli.exit_code != 0 ||
                  cli.output.find("degenerate: yes") == std::string::npos) {
                detail = "CLI verify-kl mismatch";
                return false;
              }
              return true;
            });

  criterion(9, "fidelity polynomials match direct channel simulation", 60,
            [](std::string& detail) {
              for (const char* name : {"five_qubit", "shor_9"}) {
                auto code = builtin_code(name);
                auto [a, b] = enumerate_stabilizer(code.stabilizer());
                const std::array<std::pair<double, Rat>, 3> ps = {
                    {{1.0, Rat(1)}, {0.99, Rat(99, 100)}, {0.9, Rat(9, 10)}}};
                for (const auto& [pd, pr] : ps) {
                  double fe = simulate_entanglement_fidelity(code, pd);
                  double fep = rat_to_double(entanglement_fidelity_poly(a, pr));
                  if (std::abs(fe - fep) > 1e-9) {
                    detail = std::string(name) + " entanglement fidelity off at p=" +
                             std::to_string(pd);
                    return false;
                  }
                  double fa = simulate_average_fidelity(code, pd);
                  double fap = rat_to_double(
                      average_fidelity_poly(b, code.num_logical(), pr));
                  if (std::abs(fa - fap) > 1e-9) {
                    detail = std::string(name) + " average fidelity off at p=" +
                             std::to_string(pd);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(10, "scan --max-n 11 --k 1 --t 2 reproduces 9/10/11", 60,
            [](std::string& detail) {
              auto rows = scan(11, 1, 2);
              for (const auto& r : rows) {
                if (r.n == 9 && r.general != ExistenceStatus::kInfeasible) {
                  detail = "n=9 not infeasible";
                  return false;
                }
                if ((r.n == 10 || r.n == 11) && !feasible_family(r.general)) {
                  detail = "n=" + std::to_string(r.n) + " not feasible";
                  return false;
                }
              }
              auto cli = run_cli("scan --max-n 11 --k 1 --t 2");
              if (cli.exit_code != 0 ||
                  cli.output.find("9        INFEASIBLE") == std::string::npos) {
                detail = "CLI scan output mismatch";
                return false;
              }
              return true;
            });

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
