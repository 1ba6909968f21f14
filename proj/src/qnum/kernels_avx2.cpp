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

// AVX2/FMA lane. This translation unit is compiled with -mavx2 -mfma;
// callers must gate on runtime CPU support before invoking anything here.

#include <immintrin.h>

#include <algorithm>

#include "qccs/qnum/kernels.hpp"

namespace qccs::qnum::kern::detail {

namespace {

// y[0..n) += alpha * x[0..n), two complex doubles per vector.
inline void axpy_body(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d va_re = _mm256_set1_pd(alpha.real());
  const __m256d va_im = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vx_swap = _mm256_permute_pd(vx, 0b0101);
    const __m256d prod =
        _mm256_fmaddsub_pd(va_re, vx, _mm256_mul_pd(va_im, vx_swap));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  axpy_body(alpha, x, y, n);
}

void gemm_acc_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                   std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cplx aij = a[i * k + l];
      if (aij == cplx{0.0, 0.0}) continue;
      axpy_body(aij, b + l * n, c + i * n, n);
    }
  }
}

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{0.0, 0.0});
  gemm_acc_avx2(a, b, c, m, k, n);
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  // re += xr*yr + xi*yi ; im += xr*yi - xi*yr, lane-accumulated.
  __m256d t1_acc = _mm256_setzero_pd();
  __m256d t2_acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    const __m256d vy_swap = _mm256_permute_pd(vy, 0b0101);
    t1_acc = _mm256_fmadd_pd(vx, vy, t1_acc);
    t2_acc = _mm256_fmadd_pd(vx, vy_swap, t2_acc);
  }
  alignas(32) double t1[4], t2[4];
  _mm256_store_pd(t1, t1_acc);
  _mm256_store_pd(t2, t2_acc);
  double re = (t1[0] + t1[2]) + (t1[1] + t1[3]);
  double im = (t2[0] + t2[2]) - (t2[1] + t2[3]);
  for (; i < n; ++i) {
    const cplx p = std::conj(x[i]) * y[i];
    re += p.real();
    im += p.imag();
  }
  return {re, im};
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{"avx2", gemm_avx2, gemm_acc_avx2, axpy_avx2,
                         dotc_avx2};
  return &k;
}

}  // namespace qccs::qnum::kern::detail
