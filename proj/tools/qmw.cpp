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

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmw/code.hpp"
#include "qmw/enumerator.hpp"
#include "qmw/existence.hpp"
#include "qmw/fidelity.hpp"
#include "qmw/kernels.hpp"
#include "qmw/transform.hpp"

namespace {

using nlohmann::json;
using namespace qmw;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitKlFailed = 4;

std::string format_double12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json enumerator_json(const WeightEnumerator& w) {
  return json::parse(enumerator_to_json(w));
}

// "0.99" -> 99/100 exactly; also accepts "p/q" and integers.
Rat parse_probability(const std::string& text) {
  if (auto r = parse_rational(text)) return *r;
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (auto num = parse_rational(digits); num && frac_len <= 30)
      return *num / int_pow(10, static_cast<unsigned>(frac_len));
  }
  throw std::invalid_argument("--p: cannot parse probability '" + text + "'");
}

std::string describe_code(const QuantumCode& code) {
  std::ostringstream os;
  os << (code.name().empty() ? "<anonymous>" : code.name()) << " ("
     << (code.is_stabilizer() ? "stabilizer" : "dense")
     << ", n=" << code.num_qubits() << ", k=" << code.num_logical() << ")";
  return os.str();
}

void print_enumerator_line(const char* tag, const WeightEnumerator& w) {
  std::cout << tag << " = " << w.str();
  if (!w.exact) std::cout << "   [not exact]";
  std::cout << "\n";
}

int cmd_enumerate(const std::string& code_arg, const std::string& path,
                  bool as_json) {
  QuantumCode code = resolve_code(code_arg);
  std::vector<std::pair<std::string, std::pair<WeightEnumerator, WeightEnumerator>>>
      results;
  if (path == "both") {
    results.emplace_back("stabilizer",
                         enumerate_code(code, EnumeratorPath::kStabilizer));
    results.emplace_back("dense", enumerate_code(code, EnumeratorPath::kDense));
  } else {
    EnumeratorPath p = path == "stabilizer" ? EnumeratorPath::kStabilizer
                       : path == "dense"    ? EnumeratorPath::kDense
                                            : EnumeratorPath::kAuto;
    std::string label = path == "auto"
                            ? (code.is_stabilizer() ? "stabilizer" : "dense")
                            : path;
    results.emplace_back(label, enumerate_code(code, p));
  }

  if (as_json) {
    json out;
    out["code"] = code.name();
    out["n"] = code.num_qubits();
    out["k"] = code.num_logical();
    out["results"] = json::array();
    for (const auto& [label, ab] : results)
      out["results"].push_back({{"path", label},
                                {"A", enumerator_json(ab.first)},
                                {"B", enumerator_json(ab.second)}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "code: " << describe_code(code) << "\n";
  for (const auto& [label, ab] : results) {
    std::cout << "path: " << label << "\n";
    print_enumerator_line("A", ab.first);
    print_enumerator_line("B", ab.second);
  }
  if (results.size() == 2) {
    bool agree = results[0].second.first.coeffs == results[1].second.first.coeffs &&
                 results[0].second.second.coeffs == results[1].second.second.coeffs;
    std::cout << "paths agree: " << (agree ? "yes" : "NO") << "\n";
    if (!agree) return 1;
  }
  return kExitOk;
}

int cmd_transform(int n, int k, const std::string& coeff_list, bool inverse,
                  bool as_json) {
  auto coeffs = parse_rational_list(coeff_list);
  if (!coeffs)
    throw std::invalid_argument("--a: cannot parse coefficient list");
  if (static_cast<int>(coeffs->size()) != n + 1)
    throw std::invalid_argument("--a: expected " + std::to_string(n + 1) +
                                " coefficients for n=" + std::to_string(n));
  WeightEnumerator in;
  in.n = n;
  in.k = k;
  in.kind = inverse ? WeightEnumerator::Kind::kB : WeightEnumerator::Kind::kA;
  in.coeffs = *coeffs;
  WeightEnumerator out = inverse ? inverse_transform(in, n, k)
                                 : macwilliams_transform(in, n, k);
  if (as_json) {
    json j;
    j["input"] = enumerator_json(in);
    j["output"] = enumerator_json(out);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (inverse ? "A" : "B") << " = " << out.str() << "\n";
  }
  return kExitOk;
}

int cmd_krawtchouk(int n, bool as_json) {
  KrawtchoukTable t = krawtchouk_table(n);
  if (as_json) {
    json rows = json::array();
    for (const auto& row : t.alpha) {
      json r = json::array();
      for (const Int& v : row) r.push_back(int_to_string(v));
      rows.push_back(r);
    }
    std::cout << json{{"n", n}, {"alpha", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  // Aligned columns of alpha[d][d'].
  size_t width = 0;
  for (const auto& row : t.alpha)
    for (const Int& v : row) width = std::max(width, int_to_string(v).size());
  std::cout << "alpha[d][d'] for n=" << n << " (row d, column d'):\n";
  for (int d = 0; d <= n; ++d) {
    for (int dp = 0; dp <= n; ++dp)
      std::cout << std::setw(static_cast<int>(width) + 2)
                << int_to_string(t.alpha[d][dp]);
    std::cout << "\n";
  }
  return kExitOk;
}

json certificate_json(const RationalLP& lp, const std::vector<Rat>& mult) {
  json rows = json::array();
  for (size_t i = 0; i < lp.rows.size() && i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    rows.push_back({{"row", lp.rows[i].label},
                    {"multiplier", rat_to_string(mult[i])}});
  }
  json all = json::array();
  for (const Rat& m : mult) all.push_back(rat_to_string(m));
  return json{{"multipliers", all}, {"active_rows", rows}};
}

int cmd_exists(int n, int k, int t, const std::string& mode_name, bool as_json) {
  auto mode = parse_mode(mode_name);
  if (!mode)
    throw std::invalid_argument("--mode: expected general, degenerate or "
                                "nondegenerate, got '" + mode_name + "'");
  ExistenceQuery q{n, k, t, *mode};
  ExistenceVerdict v = decide(q);
  RationalLP lp = build_system(q);

  if (as_json) {
    json j;
    j["query"] = {{"n", n}, {"k", k}, {"t", t}, {"mode", mode_name}};
    j["status"] = to_string(v.status);
    if (v.witness_a) j["witness_A"] = enumerator_json(*v.witness_a);
    if (v.witness_b) j["witness_B"] = enumerator_json(*v.witness_b);
    if (v.certificate) j["farkas"] = certificate_json(lp, *v.certificate);
    if (v.degenerate_mass_sup)
      j["degenerate_mass_sup"] = rat_to_string(*v.degenerate_mass_sup);
    if (v.degenerate_mass_unbounded) j["degenerate_mass_sup"] = "unbounded";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "query: n=" << n << " k=" << k << " t=" << t
              << " mode=" << mode_name << "\n";
    std::cout << "status: " << to_string(v.status) << "\n";
    if (v.witness_a) {
      print_enumerator_line("A", *v.witness_a);
      print_enumerator_line("B", *v.witness_b);
    }
    if (v.certificate) {
      std::cout << "Farkas certificate (verified exact); nonzero multipliers:\n";
      for (size_t i = 0; i < lp.rows.size(); ++i)
        if ((*v.certificate)[i] != 0)
          std::cout << "  " << lp.rows[i].label << " : "
                    << rat_to_string((*v.certificate)[i]) << "\n";
    }
    if (v.degenerate_mass_sup)
      std::cout << "sup of sum_{1<=d<=2t} A_d over the general system: "
                << rat_to_string(*v.degenerate_mass_sup) << "\n";
    if (v.degenerate_mass_unbounded)
      std::cout << "sup of sum_{1<=d<=2t} A_d over the general system: unbounded\n";
  }
  return v.status == ExistenceStatus::kInfeasible ? kExitInfeasible : kExitOk;
}

int cmd_scan(int max_n, int k, int t, bool as_json) {
  auto rows = scan(max_n, k, t);
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"n", r.n},
                   {"general", to_string(r.general)},
                   {"nondegenerate", to_string(r.nondegenerate)}});
    std::cout << json{{"k", k}, {"t", t}, {"rows", j}}.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "scan k=" << k << " t=" << t << "\n";
  std::cout << std::setw(4) << "n" << std::setw(18) << "general"
            << std::setw(18) << "nondegenerate" << "\n";
  for (const auto& r : rows)
    std::cout << std::setw(4) << r.n << std::setw(18) << to_string(r.general)
              << std::setw(18) << to_string(r.nondegenerate) << "\n";
  return kExitOk;
}

int cmd_fidelity(const std::string& code_arg, const std::string& p_text,
                 bool simulate, bool as_json) {
  QuantumCode code = resolve_code(code_arg);
  Rat p = parse_probability(p_text);
  if (p < 0 || p > 1)
    throw std::invalid_argument("--p: probability must lie in [0, 1]");
  auto [a, b] = enumerate_code(code, EnumeratorPath::kAuto);
  Rat fe = entanglement_fidelity_poly(a, p);
  Rat fa = average_fidelity_poly(b, code.num_logical(), p);
  double fe_d = rat_to_double(fe), fa_d = rat_to_double(fa);

  double fe_sim = 0, fa_sim = 0, fdiag_sim = 0;
  if (simulate) {
    double pd = rat_to_double(p);
    fe_sim = simulate_entanglement_fidelity(code, pd);
    fa_sim = simulate_average_fidelity(code, pd);
    fdiag_sim = simulate_basis_average_fidelity(code, pd);
  }

  if (as_json) {
    json j;
    j["code"] = code.name();
    j["p"] = rat_to_string(p);
    j["entanglement_fidelity"] = {{"exact", rat_to_string(fe)},
                                  {"value", fe_d}};
    j["average_fidelity"] = {{"exact", rat_to_string(fa)},
                             {"value", fa_d},
                             {"normalization", "p^n B((1-p)/3p) / 2^k"}};
    if (simulate) {
      j["simulated"] = {{"entanglement_fidelity", fe_sim},
                        {"average_fidelity", fa_sim},
                        {"basis_diagonal_average", fdiag_sim},
                        {"entanglement_diff", fe_sim - fe_d},
                        {"average_diff", fa_sim - fa_d}};
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "code: " << describe_code(code) << ", p = " << rat_to_string(p)
            << "\n";
  std::cout << "entanglement fidelity p^n A((1-p)/3p):      "
            << format_double12(fe_d) << "  (= " << rat_to_string(fe) << ")\n";
  std::cout << "average fidelity p^n B((1-p)/3p) / 2^k:     "
            << format_double12(fa_d) << "  (= " << rat_to_string(fa) << ")\n";
  if (simulate) {
    std::cout << "simulated entanglement fidelity:            "
              << format_double12(fe_sim) << "  | diff "
              << format_double12(fe_sim - fe_d) << "\n";
    std::cout << "simulated average fidelity (ensemble):      "
              << format_double12(fa_sim) << "  | diff "
              << format_double12(fa_sim - fa_d) << "\n";
    std::cout << "simulated basis-diagonal average:           "
              << format_double12(fdiag_sim) << "\n";
  }
  return kExitOk;
}

int cmd_verify_kl(const std::string& code_arg, int t, bool as_json) {
  QuantumCode code = resolve_code(code_arg);
  KLReport r = verify_kl(code, t);
  if (as_json) {
    json j;
    j["code"] = code.name();
    j["t"] = t;
    j["corrects"] = r.corrects;
    j["degenerate"] = r.degenerate;
    if (r.first_violation)
      j["first_violation"] = {
          {"operator", r.first_violation->first.str()},
          {"condition", r.first_violation->second == KLCondition::kDiagonalMismatch
                            ? "diagonal_mismatch"
                            : "offdiagonal_nonzero"}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "code: " << describe_code(code) << ", t=" << t << "\n";
    std::cout << "corrects " << t << " error(s): " << (r.corrects ? "yes" : "no")
              << "\n";
    if (r.corrects)
      std::cout << "degenerate: " << (r.degenerate ? "yes" : "no") << "\n";
    if (r.first_violation)
      std::cout << "first violation: " << r.first_violation->first.str()
                << (r.first_violation->second == KLCondition::kDiagonalMismatch
                        ? "  (diagonal values differ)"
                        : "  (off-diagonal element nonzero)")
                << "\n";
  }
  return r.corrects ? kExitOk : kExitKlFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum weight enumerators, MacWilliams transforms, and "
               "exact-LP code existence bounds"};
  app.require_subcommand(1);

  std::string code_arg, path = "auto", coeff_list, mode_name = "general";
  std::string p_text;
  int n = 0, k = 0, t = 0, max_n = 0;
  bool as_json = false, inverse = false, simulate = false;

  auto* c_enum = app.add_subcommand("enumerate", "weight enumerators of a code");
  c_enum->add_option("code", code_arg, "builtin name or code file")->required();
  c_enum->add_option("--path", path, "auto|stabilizer|dense|both")
      ->check(CLI::IsMember({"auto", "stabilizer", "dense", "both"}));
  c_enum->add_flag("--json", as_json);

  auto* c_tr = app.add_subcommand("transform", "apply the MacWilliams transform");
  c_tr->add_option("--n", n)->required();
  c_tr->add_option("--k", k)->required();
  c_tr->add_option("--a", coeff_list, "comma-separated exact coefficients")
      ->required();
  c_tr->add_flag("--inverse", inverse, "treat the input as B and recover A");
  c_tr->add_flag("--json", as_json);

  auto* c_kraw = app.add_subcommand("krawtchouk", "print the alpha table");
  c_kraw->add_option("--n", n)->required()->check(CLI::Range(0, 64));
  c_kraw->add_flag("--json", as_json);

  auto* c_ex = app.add_subcommand("exists", "decide (n,k,t) code existence");
  c_ex->add_option("--n", n)->required();
  c_ex->add_option("--k", k)->required();
  c_ex->add_option("--t", t)->required();
  c_ex->add_option("--mode", mode_name, "general|degenerate|nondegenerate");
  c_ex->add_flag("--json", as_json);

  auto* c_scan = app.add_subcommand("scan", "existence table over n");
  c_scan->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 30));
  c_scan->add_option("--k", k)->required();
  c_scan->add_option("--t", t)->required();
  c_scan->add_flag("--json", as_json);

  auto* c_fid = app.add_subcommand("fidelity", "depolarizing-channel fidelities");
  c_fid->add_option("code", code_arg)->required();
  c_fid->add_option("--p", p_text, "per-qubit identity probability")->required();
  c_fid->add_flag("--simulate", simulate, "cross-check against direct simulation");
  c_fid->add_flag("--json", as_json);

  auto* c_kl = app.add_subcommand("verify-kl", "Knill-Laflamme conditions");
  c_kl->add_option("code", code_arg)->required();
  c_kl->add_option("--t", t)->required();
  c_kl->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_enum->parsed()) return cmd_enumerate(code_arg, path, as_json);
    if (c_tr->parsed()) return cmd_transform(n, k, coeff_list, inverse, as_json);
    if (c_kraw->parsed()) return cmd_krawtchouk(n, as_json);
    if (c_ex->parsed()) return cmd_exists(n, k, t, mode_name, as_json);
    if (c_scan->parsed()) return cmd_scan(max_n, k, t, as_json);
    if (c_fid->parsed()) return cmd_fidelity(code_arg, p_text, simulate, as_json);
    if (c_kl->parsed()) return cmd_verify_kl(code_arg, t, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
