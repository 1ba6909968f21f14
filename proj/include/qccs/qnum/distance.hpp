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

#ifndef QCCS_QNUM_DISTANCE_HPP
#define QCCS_QNUM_DISTANCE_HPP

#include <cstdint>

#include "qccs/qnum/qstate.hpp"
#include "qccs/qnum/superop.hpp"

namespace qccs::qnum {

/// D(rho, sigma) = (1/2) tr |rho - sigma|; registers must agree.
double trace_distance(const QState& r, const QState& s);

/// Same on raw operators.
double trace_distance(const ComplexMatrix& r, const ComplexMatrix& s);

struct DiamondOptions {
  std::size_t starts = 20;       // multi-start budget
  std::size_t iterations = 60;   // ascent steps per start
  std::size_t ancilla_dim = 0;   // 0: same as the channel dimension
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  std::size_t threads = 1;
  double convergence = 1e-12;
};

/// Certified lower bound on the diamond distance between two channels
/// of equal dimension: the best value of
///   D((E (x) I)(psi psi^dag), (F (x) I)(psi psi^dag))
/// found by seeded multi-start alternating ascent over pure states with
/// an ancilla. Deterministic for a fixed seed; monotone in `starts`.
double diamond_distance(const SuperOp& e, const SuperOp& f,
                        const DiamondOptions& opts = {});

}  // namespace qccs::qnum

#endif
