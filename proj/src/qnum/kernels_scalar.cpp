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

#include <algorithm>

#include "qccs/qnum/kernels.hpp"

namespace qccs::qnum::kern {

namespace {

void gemm_acc_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                     std::size_t k, std::size_t n) {
  // i-k-j loop order keeps the inner loop streaming over rows of B and C.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cplx aij = a[i * k + l];
      if (aij == cplx{0.0, 0.0}) continue;
      const cplx* brow = b + l * n;
      cplx* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aij * brow[j];
    }
  }
}

void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                 std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{0.0, 0.0});
  gemm_acc_scalar(a, b, c, m, k, n);
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{"scalar", gemm_scalar, gemm_acc_scalar, axpy_scalar,
                         dotc_scalar};
  return k;
}

}  // namespace qccs::qnum::kern
