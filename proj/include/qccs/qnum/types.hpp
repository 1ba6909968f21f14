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

#ifndef QCCS_QNUM_TYPES_HPP
#define QCCS_QNUM_TYPES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

namespace qccs::qnum {

using cplx = std::complex<double>;

/// Validation tolerance for Hermiticity / positivity / trace checks.
inline constexpr double kTolHermitian = 1e-9;

/// Default tolerance for channel (Choi-matrix) equality.
inline constexpr double kTolChannel = 1e-7;

/// Default cap on the total dimension of a register.
inline constexpr std::size_t kDefaultDimCap = std::size_t(1) << 12;

}  // namespace qccs::qnum

#endif
