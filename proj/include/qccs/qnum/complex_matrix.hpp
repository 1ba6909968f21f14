// Copyright 2026 The qccs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCCS_QNUM_COMPLEX_MATRIX_HPP
#define QCCS_QNUM_COMPLEX_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qccs/qnum/types.hpp"

namespace qccs::qnum {

/// Dense row-major complex matrix. All entries must stay finite; the
/// factory functions and arithmetic below preserve that invariant.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  /// Rows given as nested initializer lists, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  std::size_t size() const { return data_.size(); }

  cplx& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  cplx& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return at(i, j);
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix dagger() const;
  cplx trace() const;
  double max_abs() const;
  double frobenius() const;
  bool all_finite() const;
  bool is_zero(double tol = 0.0) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  std::string to_string(int precision = 6) const;

 private:
  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

/// Kronecker product; row (i_a, i_b) maps to i_a * rows(b) + i_b.
ComplexMatrix mat_tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// max_ij |a_ij - a*_ji|.
double hermiticity_defect(const ComplexMatrix& a);

/// Column vector |k> in dimension dim.
ComplexMatrix basis_ket(std::size_t dim, std::size_t k);

/// |v><v| for a column vector v.
ComplexMatrix outer(const ComplexMatrix& v);

/// FNV-1a over entries rounded to a fixed grid (default 1e-9).
std::uint64_t fingerprint(const ComplexMatrix& a, double grid = 1e-9);

}  // namespace qccs::qnum

#endif
