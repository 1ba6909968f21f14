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

#include <cstdlib>

#include "qccs/qnum/kernels.hpp"

namespace qccs::qnum::kern {

#ifdef QCCS_HAVE_AVX2_TU
namespace detail {
const Kernels* avx2_kernels();
}
#endif

const Kernels* avx2() {
#ifdef QCCS_HAVE_AVX2_TU
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return detail::avx2_kernels();
  }
#endif
  return nullptr;
}

const Kernels& active() {
  static const Kernels* selected = [] {
    if (std::getenv("QCCS_NO_SIMD") != nullptr) return &scalar();
    if (const Kernels* simd = avx2()) return simd;
    return &scalar();
  }();
  return *selected;
}

}  // namespace qccs::qnum::kern
