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

#ifndef QMW_DENSE_HPP
#define QMW_DENSE_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qmw {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Small dense complex matrix, row-major. Only what the oracles and the
// projector machinery need; dimensions stay at or below 2^10.
class CMat {
 public:
  CMat() : rows_(0), cols_(0) {}
  CMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMat identity(size_t dim) {
    CMat m(dim, dim);
    for (size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Complex& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Complex* row_ptr(size_t i) { return data_.data() + i * cols_; }
  const Complex* row_ptr(size_t i) const { return data_.data() + i * cols_; }

  bool operator==(const CMat&) const = default;

  Complex trace() const {
    Complex t = 0;
    for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  CMat adjoint() const {
    CMat m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

 private:
  size_t rows_, cols_;
  CVec data_;
};

CMat matmul(const CMat& a, const CMat& b);

// max_ij |a_ij - b_ij|
double max_abs_diff(const CMat& a, const CMat& b);

// <a|b> = sum_i conj(a_i) b_i
Complex inner(const CVec& a, const CVec& b);

double norm2(const CVec& v);

}  // namespace qmw

#endif  // QMW_DENSE_HPP
