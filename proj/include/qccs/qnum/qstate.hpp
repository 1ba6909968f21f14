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

#ifndef QCCS_QNUM_QSTATE_HPP
#define QCCS_QNUM_QSTATE_HPP

#include <map>
#include <string>
#include <vector>

#include "qccs/qnum/complex_matrix.hpp"
#include "qccs/qnum/register.hpp"

namespace qccs::qnum {

enum class TraceKind { density, partial };

/// A (partial) density operator over a register, stored in the
/// register's canonical variable order.
class QState {
 public:
  QState() = default;

  /// Validating constructor: checks Hermiticity, positivity and the
  /// trace condition of the given kind within tol.
  QState(Register reg, ComplexMatrix mat, TraceKind kind,
         double tol = kTolHermitian);

  /// Trusted constructor for values produced by operations that
  /// preserve the invariants by construction.
  static QState trusted(Register reg, ComplexMatrix mat, TraceKind kind);

  const Register& reg() const { return reg_; }
  const ComplexMatrix& matrix() const { return mat_; }
  TraceKind kind() const { return kind_; }
  double trace_real() const { return mat_.trace().real(); }

  /// Throws std::invalid_argument when an invariant fails.
  void validate(double tol = kTolHermitian) const;

  std::uint64_t fingerprint(double grid = 1e-9) const;

 private:
  Register reg_;
  ComplexMatrix mat_;
  TraceKind kind_ = TraceKind::density;
};

/// Trace out everything but `keep` (subset of the register).
QState partial_trace(const QState& s, const std::vector<std::string>& keep);

/// Rename register variables along an injective, type-preserving map.
/// Variables absent from the map keep their names. The matrix is the
/// exact permutation of the original (renaming round-trips bit-equal).
QState rename_state(const QState& s,
                    const std::map<std::string, std::string>& f);

/// Product state on the disjoint union of the registers.
QState state_tensor(const QState& a, const QState& b);

/// Pure product state: one ket per register variable.
QState product_pure_state(const Register& reg,
                          const std::map<std::string, ComplexMatrix>& kets);

}  // namespace qccs::qnum

#endif
