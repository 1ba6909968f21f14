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

#include "qccs/qnum/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qccs::qnum {

namespace {

// One rotation zeroing A[p][q]. A is updated in place, V accumulates the
// unitary so that V^dag A_in V = A_out. The complex off-diagonal phase is
// absorbed into the rotation (diag(1, conj(phi)) factor), leaving the
// classic real Jacobi 2x2 update.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a.at(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const cplx phi = apq / b;
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // Columns p and q of A: A <- A * J with J[p][p]=c, J[q][p]=-s*conj(phi),
  // J[p][q]=s*phi, J[q][q]=c (identity elsewhere).
  for (std::size_t i = 0; i < n; ++i) {
    const cplx aip = a.at(i, p);
    const cplx aiq = a.at(i, q);
    a.at(i, p) = c * aip - s * std::conj(phi) * aiq;
    a.at(i, q) = s * aip + c * std::conj(phi) * aiq;
  }
  // Rows p and q: A <- J^dag * A.
  for (std::size_t j = 0; j < n; ++j) {
    const cplx apj = a.at(p, j);
    const cplx aqj = a.at(q, j);
    a.at(p, j) = c * apj - s * phi * aqj;
    a.at(q, j) = s * apj + c * phi * aqj;
  }
  // Clamp the pivot pair; the 2x2 update is exact there.
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
  a.at(p, p) = {a.at(p, p).real(), 0.0};
  a.at(q, q) = {a.at(q, q).real(), 0.0};

  for (std::size_t i = 0; i < n; ++i) {
    const cplx vip = v.at(i, p);
    const cplx viq = v.at(i, q);
    v.at(i, p) = c * vip - s * std::conj(phi) * viq;
    v.at(i, q) = s * vip + c * std::conj(phi) * viq;
  }
}

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a.at(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& a_in) {
  if (!a_in.square()) {
    throw std::invalid_argument("hermitian_eig expects a square matrix");
  }
  const std::size_t n = a_in.rows();
  ComplexMatrix a = a_in;
  ComplexMatrix v = ComplexMatrix::identity(n);
  if (n > 1) {
    const double scale = std::max(1.0, a.frobenius());
    const double stop = 1e-14 * scale;
    for (int sweep = 0; sweep < 64; ++sweep) {
      if (offdiag_norm(a) <= stop) break;
      const double thresh =
          (sweep < 3) ? 0.1 * offdiag_norm(a) / (n * n) : 0.0;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (std::abs(a.at(p, q)) > thresh) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a.at(x, x).real() < a.at(y, y).real();
  });

  EigResult r;
  r.values.resize(n);
  r.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    r.values[k] = a.at(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) r.vectors.at(i, k) = v.at(i, order[k]);
  }
  return r;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  return hermitian_eig(a).values;
}

double min_eigenvalue(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a).front();
}

double abs_eigenvalue_sum(const ComplexMatrix& a) {
  double s = 0.0;
  for (double v : hermitian_eigenvalues(a)) s += std::abs(v);
  return s;
}

}  // namespace qccs::qnum
