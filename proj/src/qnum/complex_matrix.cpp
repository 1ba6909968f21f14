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

#include "qccs/qnum/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qccs/qnum/kernels.hpp"

namespace qccs::qnum {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
  if (!all_finite()) {
    throw std::invalid_argument("matrix has non-finite entries");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m.at(j, i) = std::conj(at(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t{0.0, 0.0};
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const cplx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

bool ComplexMatrix::is_zero(double tol) const { return max_abs() <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch in +");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch in -");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix shape mismatch in *");
  }
  ComplexMatrix c(a.rows_, b.cols_);
  kern::active().gemm(a.data(), b.data(), c.data(), a.rows_, a.cols_,
                      b.cols_);
  return c;
}

std::string ComplexMatrix::to_string(int precision) const {
  std::ostringstream os;
  os.precision(precision);
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      const cplx& v = at(i, j);
      os << v.real();
      if (v.imag() >= 0) os << "+";
      os << v.imag() << "i";
      if (j + 1 < cols_) os << ", ";
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

ComplexMatrix mat_tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a.at(ia, ja);
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        cplx* dst = &c.at(ia * b.rows() + ib, ja * b.cols());
        const cplx* src = &b.at(ib, 0);
        kern::active().axpy(f, src, dst, b.cols());
      }
    }
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch in max_abs_diff");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_abs_diff(a, b) <= tol;
}

double hermiticity_defect(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      m = std::max(m, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
  return m;
}

ComplexMatrix basis_ket(std::size_t dim, std::size_t k) {
  if (k >= dim) throw std::invalid_argument("basis index out of range");
  ComplexMatrix v(dim, 1);
  v.at(k, 0) = 1.0;
  return v;
}

ComplexMatrix outer(const ComplexMatrix& v) {
  ComplexMatrix m(v.rows(), v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.rows(); ++j)
      m.at(i, j) = v.at(i, 0) * std::conj(v.at(j, 0));
  return m;
}

std::uint64_t fingerprint(const ComplexMatrix& a, double grid) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::int64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::int64_t>(a.rows()));
  mix(static_cast<std::int64_t>(a.cols()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    mix(std::llround(a.data()[i].real() / grid));
    mix(std::llround(a.data()[i].imag() / grid));
  }
  return h;
}

}  // namespace qccs::qnum
