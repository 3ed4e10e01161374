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

#include "qmw/code.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qmw/kernels.hpp"

namespace qmw {

namespace {

constexpr int kDenseCap = 10;  // 2^n x 2^n matrices stay within 16 MiB

// Generators as 2n-bit GF(2) rows (x | z << n); returns the rank.
int symplectic_rank(int n, const std::vector<PauliOperator>& gens) {
  std::vector<uint64_t> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens)
    rows.push_back(static_cast<uint64_t>(g.x_bits()) |
                   (static_cast<uint64_t>(g.z_bits()) << n));
  int rank = 0;
  for (int col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); ++col) {
    uint64_t bit = uint64_t{1} << col;
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

void check_dense_cap(int n, const char* what) {
  if (n > kDenseCap)
    throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) +
                                " exceeds the dense cap of " +
                                std::to_string(kDenseCap));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // trim a shorter representation when it round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

std::string format_amplitude(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  std::string out;
  if (c.real() != 0.0) {
    out = format_double(c.real());
    out += c.imag() < 0 ? "-" : "+";
    out += format_double(std::abs(c.imag()));
  } else {
    out = format_double(c.imag());
  }
  out += 'i';
  return out;
}

bool parse_decimal(std::string_view s, double& out) {
  if (s.empty()) return false;
  std::string tmp(s);
  char* end = nullptr;
  out = std::strtod(tmp.c_str(), &end);
  return end == tmp.c_str() + tmp.size();
}

// "p/q", "a", "a+bi", "a-bi", "bi", "i", "-i". Sets `exact` when the token
// was a rational (which the format restricts to real values).
bool parse_amplitude(std::string_view tok, Complex& out,
                     std::optional<Rat>& exact) {
  exact.reset();
  if (tok.empty()) return false;
  if (tok.find('i') == std::string_view::npos) {
    if (tok.find('/') != std::string_view::npos ||
        tok.find_first_of(".eE") == std::string_view::npos) {
      auto r = parse_rational(tok);
      if (!r) return false;
      exact = *r;
      out = Complex(rat_to_double(*r), 0.0);
      return true;
    }
    double re;
    if (!parse_decimal(tok, re)) return false;
    out = Complex(re, 0.0);
    return true;
  }
  if (tok.back() != 'i') return false;
  std::string_view body = tok.substr(0, tok.size() - 1);
  // split at the last top-level +/- (not part of an exponent)
  size_t split = std::string_view::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0, im;
  std::string_view imag_part = body;
  if (split != std::string_view::npos) {
    if (!parse_decimal(body.substr(0, split), re)) return false;
    imag_part = body.substr(split);
  }
  if (imag_part.empty() || imag_part == "+")
    im = 1.0;
  else if (imag_part == "-")
    im = -1.0;
  else if (!parse_decimal(imag_part, im))
    return false;
  out = Complex(re, im);
  return true;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.pop_back();
  size_t start = s.find_first_not_of(" \t");
  return start == std::string::npos ? "" : s.substr(start);
}

}  // namespace

StabilizerCode::StabilizerCode(int n, std::vector<PauliOperator> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("StabilizerCode: bad qubit count " +
                                std::to_string(n));
  for (const auto& g : generators_) {
    if (g.num_qubits() != n)
      throw std::invalid_argument("StabilizerCode: generator '" + g.str() +
                                  "' acts on " + std::to_string(g.num_qubits()) +
                                  " qubits, expected " + std::to_string(n));
    if (!g.is_hermitian())
      throw std::invalid_argument("StabilizerCode: generator '" + g.str() +
                                  "' is not Hermitian (phase must be +1 or -1)");
  }
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (!commutes(generators_[i], generators_[j]))
        throw std::invalid_argument("StabilizerCode: generators '" +
                                    generators_[i].str() + "' and '" +
                                    generators_[j].str() + "' anticommute");
  if (symplectic_rank(n_, generators_) !=
      static_cast<int>(generators_.size()))
    throw std::invalid_argument(
        "StabilizerCode: generators are dependent over GF(2)");
}

DenseCode::DenseCode(int n, std::vector<CVec> basis)
    : n_(n), basis_(std::move(basis)) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("DenseCode: bad qubit count");
  if (basis_.empty() || !std::has_single_bit(basis_.size()))
    throw std::invalid_argument("DenseCode: basis size must be a power of two");
  k_ = std::countr_zero(basis_.size());
  if (k_ > n_)
    throw std::invalid_argument("DenseCode: 2^k exceeds 2^n");
  const size_t dim = size_t{1} << n_;
  for (const auto& v : basis_)
    if (v.size() != dim)
      throw std::invalid_argument("DenseCode: vector length != 2^n");
  for (size_t i = 0; i < basis_.size(); ++i) {
    for (size_t j = i; j < basis_.size(); ++j) {
      Complex g = inner(basis_[i], basis_[j]);
      Complex want = i == j ? Complex{1, 0} : Complex{0, 0};
      if (std::abs(g - want) > 1e-10)
        throw std::invalid_argument(
            "DenseCode: basis is not orthonormal (Gram deviation " +
            std::to_string(std::abs(g - want)) + " at " + std::to_string(i) +
            "," + std::to_string(j) + ")");
    }
  }
}

void DenseCode::set_exact_amplitudes(std::vector<std::vector<Rat>> amps) {
  exact_ = std::move(amps);
}

QuantumCode::QuantumCode(StabilizerCode code, std::string name)
    : rep_(std::move(code)), name_(std::move(name)) {}

QuantumCode::QuantumCode(DenseCode code, std::string name)
    : rep_(std::move(code)), name_(std::move(name)) {}

int QuantumCode::num_qubits() const {
  return is_stabilizer() ? stabilizer().num_qubits() : dense().num_qubits();
}

int QuantumCode::num_logical() const {
  return is_stabilizer() ? stabilizer().num_logical() : dense().num_logical();
}

namespace {

StabilizerCode from_strings(int n, std::initializer_list<const char*> gens) {
  std::vector<PauliOperator> ops;
  for (const char* s : gens) ops.push_back(PauliOperator::parse(s));
  return StabilizerCode(n, std::move(ops));
}

}  // namespace

QuantumCode builtin_code(const std::string& name) {
  if (name == "five_qubit")
    return QuantumCode(
        from_strings(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}), name);
  if (name == "steane_7")
    return QuantumCode(from_strings(7, {"XIXIXIX", "IXXIIXX", "IIIXXXX",
                                        "ZIZIZIZ", "IZZIIZZ", "IIIZZZZ"}),
                       name);
  if (name == "shor_9")
    return QuantumCode(
        from_strings(9, {"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
                         "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"}),
        name);
  if (name == "bell")
    return QuantumCode(from_strings(2, {"XX", "ZZ"}), name);
  if (name.starts_with("trivial_")) {
    int n = 0;
    try {
      n = std::stoi(name.substr(8));
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1 && n <= kMaxQubits)
      return QuantumCode(StabilizerCode(n, {}), name);
  }
  std::string msg = "unknown code '" + name + "'; available:";
  for (const auto& b : builtin_code_names()) msg += " " + b;
  throw std::invalid_argument(msg);
}

std::vector<std::string> builtin_code_names() {
  return {"five_qubit", "steane_7", "shor_9", "bell", "trivial_<n>"};
}

QuantumCode resolve_code(const std::string& name_or_path) {
  try {
    return builtin_code(name_or_path);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream in(name_or_path);
  if (!in) {
    std::string msg = "'" + name_or_path +
                      "' is neither a builtin code nor a readable file; "
                      "builtins:";
    for (const auto& b : builtin_code_names()) msg += " " + b;
    throw std::invalid_argument(msg);
  }
  return parse_code_file(in, name_or_path);
}

QuantumCode parse_code_file(std::istream& in, const std::string& name) {
  std::string line;
  std::string header;
  while (std::getline(in, line)) {
    header = strip_comment(line);
    if (!header.empty()) break;
  }
  if (header.empty()) throw std::invalid_argument("code file: empty input");

  std::istringstream hs(header);
  std::string kind;
  hs >> kind;
  auto read_kv = [&hs](const char* key) {
    std::string tok;
    if (!(hs >> tok) || tok.rfind(std::string(key) + "=", 0) != 0)
      throw std::invalid_argument(std::string("code file: expected ") + key +
                                  "=<int> in header");
    return std::stoi(tok.substr(std::string(key).size() + 1));
  };

  if (kind == "stabilizer") {
    int n = read_kv("n");
    std::vector<PauliOperator> gens;
    while (std::getline(in, line)) {
      std::string s = strip_comment(line);
      if (s.empty()) continue;
      gens.push_back(PauliOperator::parse(s));
    }
    return QuantumCode(StabilizerCode(n, std::move(gens)), name);
  }
  if (kind == "dense") {
    int n = read_kv("n");
    int k = read_kv("k");
    if (n < 1 || n > kMaxQubits || k < 0 || k > n)
      throw std::invalid_argument("code file: bad n/k");
    const size_t dim = size_t{1} << n;
    const size_t count = size_t{1} << k;
    std::vector<CVec> basis;
    std::vector<std::vector<Rat>> exact;
    bool all_exact = true;
    while (std::getline(in, line)) {
      std::string s = strip_comment(line);
      if (s.empty()) continue;
      std::istringstream ls(s);
      CVec v;
      std::vector<Rat> ev;
      std::string tok;
      while (ls >> tok) {
        Complex c;
        std::optional<Rat> r;
        if (!parse_amplitude(tok, c, r))
          throw std::invalid_argument("code file: bad amplitude '" + tok + "'");
        v.push_back(c);
        if (r)
          ev.push_back(*r);
        else
          all_exact = false;
      }
      if (v.size() != dim)
        throw std::invalid_argument("code file: row has " +
                                    std::to_string(v.size()) +
                                    " amplitudes, expected " +
                                    std::to_string(dim));
      basis.push_back(std::move(v));
      exact.push_back(std::move(ev));
    }
    if (basis.size() != count)
      throw std::invalid_argument("code file: got " +
                                  std::to_string(basis.size()) +
                                  " basis rows, expected " +
                                  std::to_string(count));
    DenseCode dc(n, std::move(basis));
    if (all_exact) dc.set_exact_amplitudes(std::move(exact));
    return QuantumCode(std::move(dc), name);
  }
  throw std::invalid_argument("code file: unknown header kind '" + kind + "'");
}

QuantumCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file '" + path + "'");
  return parse_code_file(in, path);
}

void print_code_file(std::ostream& out, const QuantumCode& code) {
  if (code.is_stabilizer()) {
    const auto& sc = code.stabilizer();
    out << "stabilizer n=" << sc.num_qubits() << "\n";
    for (const auto& g : sc.generators()) out << g.str() << "\n";
    return;
  }
  const auto& dc = code.dense();
  out << "dense n=" << dc.num_qubits() << " k=" << dc.num_logical() << "\n";
  const auto& exact = dc.exact_amplitudes();
  for (size_t i = 0; i < dc.basis().size(); ++i) {
    for (size_t j = 0; j < dc.basis()[i].size(); ++j) {
      if (j) out << " ";
      if (exact)
        out << rat_to_string((*exact)[i][j]);
      else
        out << format_amplitude(dc.basis()[i][j]);
    }
    out << "\n";
  }
}

CMat projector(const QuantumCode& code) {
  const int n = code.num_qubits();
  check_dense_cap(n, "projector");
  const size_t dim = size_t{1} << n;
  if (code.is_stabilizer()) {
    CMat m = CMat::identity(dim);
    CVec scratch(dim);
    for (const auto& g : code.stabilizer().generators()) {
      // m <- (m + g m) / 2, row by row: (g m)[r] = coef(r) * m[r ^ x] where
      // coef comes from the single nonzero entry per row of a Pauli matrix.
      const uint32_t x = g.x_bits(), z = g.z_bits();
      CMat gm(dim, dim);
      for (size_t r = 0; r < dim; ++r) {
        const size_t src = r ^ x;
        Complex coef =
            (std::popcount(static_cast<uint32_t>(src) & z) & 1) ? -1.0 : 1.0;
        switch ((g.phase() + std::popcount(x & z)) & 3) {
          case 1: coef *= Complex{0, 1}; break;
          case 2: coef *= -1.0; break;
          case 3: coef *= Complex{0, -1}; break;
          default: break;
        }
        const Complex* srow = m.row_ptr(src);
        Complex* drow = gm.row_ptr(r);
        for (size_t c = 0; c < dim; ++c) drow[c] = coef * srow[c];
      }
      for (size_t r = 0; r < dim; ++r) {
        Complex* mr = m.row_ptr(r);
        const Complex* gr = gm.row_ptr(r);
        for (size_t c = 0; c < dim; ++c) mr[c] = 0.5 * (mr[c] + gr[c]);
      }
    }
    return m;
  }
  const auto& basis = code.dense().basis();
  CMat m(dim, dim);
  for (const auto& v : basis)
    for (size_t r = 0; r < dim; ++r) {
      if (v[r] == Complex{0, 0}) continue;
      Complex* row = m.row_ptr(r);
      for (size_t c = 0; c < dim; ++c) row[c] += v[r] * std::conj(v[c]);
    }
  return m;
}

DenseCode basis_states(const StabilizerCode& code) {
  const int n = code.num_qubits();
  check_dense_cap(n, "basis_states");
  const int k = code.num_logical();
  const size_t dim = size_t{1} << n;
  const size_t want = size_t{1} << k;

  QuantumCode qc(code);
  CMat p = projector(qc);

  // Pivoted modified Gram-Schmidt over projector columns.
  std::vector<CVec> cols(dim, CVec(dim));
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) cols[c][r] = p(r, c);

  std::vector<CVec> chosen;
  for (size_t it = 0; it < want; ++it) {
    size_t best = 0;
    double best_norm = -1.0;
    for (size_t j = 0; j < dim; ++j) {
      double nj = 0;
      for (const Complex& c : cols[j]) nj += std::norm(c);
      if (nj > best_norm + 1e-12) {
        best_norm = nj;
        best = j;
      }
    }
    if (best_norm < 1e-7)
      throw std::runtime_error("basis_states: projector rank below 2^k");
    CVec v = cols[best];
    double nv = std::sqrt(best_norm);
    for (Complex& c : v) c /= nv;
    for (size_t j = 0; j < dim; ++j) {
      Complex o = inner(v, cols[j]);
      if (o == Complex{0, 0}) continue;
      for (size_t r = 0; r < dim; ++r) cols[j][r] -= o * v[r];
    }
    chosen.push_back(std::move(v));
  }

  for (const auto& v : chosen) {
    CVec pv(dim);
    for (size_t r = 0; r < dim; ++r) {
      Complex s = 0;
      const Complex* row = p.row_ptr(r);
      for (size_t c = 0; c < dim; ++c) s += row[c] * v[c];
      pv[r] = s;
    }
    double err = 0;
    for (size_t r = 0; r < dim; ++r) err += std::norm(pv[r] - v[r]);
    if (std::sqrt(err) > 1e-10)
      throw std::runtime_error("basis_states: vector escapes the code space");
  }
  return DenseCode(n, std::move(chosen));
}

DenseCode dense_form(const QuantumCode& code) {
  if (code.is_stabilizer()) return basis_states(code.stabilizer());
  return code.dense();
}

}  // namespace qmw
