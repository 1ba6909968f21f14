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

#ifndef QCCS_QNUM_KERNELS_HPP
#define QCCS_QNUM_KERNELS_HPP

#include <cstddef>

#include "qccs/qnum/types.hpp"

namespace qccs::qnum::kern {

// Low-level dense complex kernels. All matrices are row-major,
// contiguous, double-precision complex. The scalar lane is the
// reference semantics; SIMD lanes must match it to ~1 ulp-scale
// accumulation differences (checked by the equivalence tests).
struct Kernels {
  const char* name;

  // C = A(m x k) * B(k x n)
  void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);

  // C += A(m x k) * B(k x n)
  void (*gemm_acc)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                   std::size_t k, std::size_t n);

  // y += alpha * x
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);

  // sum_i conj(x_i) * y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
};

/// Portable reference lane.
const Kernels& scalar();

/// AVX2 lane, or nullptr when the CPU (or build) does not support it.
const Kernels* avx2();

/// Lane selected at startup: AVX2 when available unless QCCS_NO_SIMD is
/// set in the environment, else scalar.
const Kernels& active();

}  // namespace qccs::qnum::kern

#endif
