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

#ifndef QMW_CODE_HPP
#define QMW_CODE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmw/dense.hpp"
#include "qmw/pauli.hpp"
#include "qmw/rational.hpp"

namespace qmw {

// A stabilizer code held as its generator list. k is always derived as
// n minus the GF(2) symplectic rank of the generators, never declared.
class StabilizerCode {
 public:
  // Validates: Hermitian generators (phase 0 or 2), pairwise commuting,
  // independent over GF(2). Independence plus Hermitian phases already rules
  // -I out of the generated group. Throws std::invalid_argument.
  StabilizerCode(int n, std::vector<PauliOperator> generators);

  int num_qubits() const { return n_; }
  int num_logical() const { return n_ - static_cast<int>(generators_.size()); }
  const std::vector<PauliOperator>& generators() const { return generators_; }

 private:
  int n_;
  std::vector<PauliOperator> generators_;
};

// A code given by explicit orthonormal basis vectors of the code subspace.
// Amplitudes are doubles; when a code file carries exact rational
// amplitudes they are kept alongside so printing reproduces the input.
class DenseCode {
 public:
  // Validates orthonormality to 1e-10 and that sizes are powers of two.
  DenseCode(int n, std::vector<CVec> basis);

  int num_qubits() const { return n_; }
  int num_logical() const { return k_; }
  const std::vector<CVec>& basis() const { return basis_; }

  const std::optional<std::vector<std::vector<Rat>>>& exact_amplitudes() const {
    return exact_;
  }
  void set_exact_amplitudes(std::vector<std::vector<Rat>> amps);

 private:
  int n_;
  int k_;
  std::vector<CVec> basis_;
  std::optional<std::vector<std::vector<Rat>>> exact_;
};

class QuantumCode {
 public:
  QuantumCode(StabilizerCode code, std::string name = "");
  QuantumCode(DenseCode code, std::string name = "");

  bool is_stabilizer() const {
    return std::holds_alternative<StabilizerCode>(rep_);
  }
  const StabilizerCode& stabilizer() const {
    return std::get<StabilizerCode>(rep_);
  }
  const DenseCode& dense() const { return std::get<DenseCode>(rep_); }

  int num_qubits() const;
  int num_logical() const;
  const std::string& name() const { return name_; }

 private:
  std::variant<StabilizerCode, DenseCode> rep_;
  std::string name_;
};

// Reference codes: "five_qubit", "steane_7", "shor_9", "bell", and
// "trivial_<n>" (no generators, k = n). Throws std::invalid_argument for an
// unknown name, listing the available ones.
QuantumCode builtin_code(const std::string& name);
std::vector<std::string> builtin_code_names();

// Resolves a CLI argument: builtin name first, then a file path.
QuantumCode resolve_code(const std::string& name_or_path);

// Line-oriented text format:
//   stabilizer n=<n>      followed by one Pauli string per line
//   dense n=<n> k=<k>     followed by 2^k lines of 2^n amplitudes,
//                         each "a", "a+bi", "a-bi", "bi" or "p/q"
// '#' starts a comment.
QuantumCode parse_code_file(std::istream& in, const std::string& name = "");
QuantumCode load_code_file(const std::string& path);
void print_code_file(std::ostream& out, const QuantumCode& code);

// P_c as a dense matrix; Hermitian idempotent with trace 2^k. n <= 10.
CMat projector(const QuantumCode& code);

// 2^k orthonormal vectors spanning range(projector). n <= 10.
DenseCode basis_states(const StabilizerCode& code);

// The dense view of any code (identity on dense codes).
DenseCode dense_form(const QuantumCode& code);

}  // namespace qmw

#endif  // QMW_CODE_HPP
