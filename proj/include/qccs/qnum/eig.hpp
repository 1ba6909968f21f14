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

#ifndef QCCS_QNUM_EIG_HPP
#define QCCS_QNUM_EIG_HPP

#include <vector>

#include "qccs/qnum/complex_matrix.hpp"

namespace qccs::qnum {

struct EigResult {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic complex Jacobi for Hermitian matrices. Only the lower/upper
/// symmetrized part is read; the input is assumed Hermitian up to the
/// usual validation tolerance.
EigResult hermitian_eig(const ComplexMatrix& a);

/// Eigenvalues only (ascending).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

double min_eigenvalue(const ComplexMatrix& a);

/// sum_i |lambda_i(a)| == trace norm of a Hermitian matrix.
double abs_eigenvalue_sum(const ComplexMatrix& a);

}  // namespace qccs::qnum

#endif
