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

#ifndef QCCS_QNUM_SUPEROP_HPP
#define QCCS_QNUM_SUPEROP_HPP

#include <memory>
#include <string>
#include <vector>

#include "qccs/qnum/complex_matrix.hpp"
#include "qccs/qnum/qstate.hpp"
#include "qccs/qnum/register.hpp"

namespace qccs::qnum {

/// A quantum operation in Kraus form over an ordered list of typed
/// slots: completely positive and trace-nonincreasing, checked at
/// construction (sum_i E_i^dag E_i below the identity in Loewner order).
class SuperOp {
 public:
  SuperOp(std::vector<VarType> slots, std::vector<ComplexMatrix> kraus,
          std::string label, double tol = kTolHermitian);

  const std::vector<VarType>& slots() const { return slots_; }
  std::size_t arity() const { return slots_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::string& label() const { return label_; }
  bool trace_preserving() const { return trace_preserving_; }

  /// J(E) = sum_{k,l} |k><l| (x) E(|k><l|); channels agree iff their
  /// Choi matrices do.
  const ComplexMatrix& choi() const { return choi_; }

  /// Plain application on a dim() x dim() operator.
  ComplexMatrix apply_matrix(const ComplexMatrix& rho) const;

 private:
  std::vector<VarType> slots_;
  std::size_t dim_;
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
  bool trace_preserving_;
  ComplexMatrix choi_;
};

using SuperOpPtr = std::shared_ptr<const SuperOp>;

/// Kraus list recovered from a Choi matrix (eigendecomposition;
/// eigenvalues below tol are dropped).
std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi,
                                           std::size_t dim,
                                           double tol = 1e-12);

/// f after e, both on the same slot list. The Kraus list of the result
/// is re-extracted from its Choi matrix when the raw product list would
/// exceed dim^2 elements.
SuperOpPtr superop_compose(const SuperOpPtr& f, const SuperOpPtr& e);

bool superop_equal(const SuperOp& e, const SuperOp& f,
                   double tol = kTolChannel);

/// Measurement operators of the computational basis: {|k><k|}.
std::vector<ComplexMatrix> computational_measurement_ops(std::size_t dim);

enum class MeasureMode { total, branch };

/// mode total: all operators, completeness required; mode branch: the
/// single operator `branch` (generally trace-decreasing).
SuperOpPtr measurement_superop(const std::vector<ComplexMatrix>& ops,
                               std::vector<VarType> slots, MeasureMode mode,
                               std::size_t branch = 0,
                               const std::string& label = "M",
                               double tol = kTolHermitian);

/// Unitary channel {U}.
SuperOpPtr unitary_superop(std::vector<VarType> slots, ComplexMatrix u,
                           std::string label);

/// Built-in gates: I (any dimension), H, X, Y, Z, S, T (qubit), CNOT
/// (two qubits). Throws for unknown names.
SuperOpPtr named_gate(const std::string& name, std::size_t dim = 2);
bool is_builtin_gate(const std::string& name);

/// System-environment model tr_E[P U (rho (x) |e0><e0|) U^dag P] as a
/// derived Kraus constructor; U and P act on system (x) environment.
SuperOpPtr system_env_superop(std::vector<VarType> sys_slots,
                              const ComplexMatrix& u, const ComplexMatrix& p,
                              std::size_t env_dim, std::string label);

/// Qubit amplitude damping with decay probability gamma.
SuperOpPtr amplitude_damping(double gamma);

/// diag(1, e^{i theta}) as a unitary qubit channel.
SuperOpPtr phase_rotation(double theta);

/// Re-express the channel on a larger variable set: `args` names the
/// variables bound to e's slots, `target` is the full variable list
/// (canonical order) of the extended channel; unnamed target variables
/// get the identity. Slot names of the result are the target variables.
SuperOpPtr extend_superop(const SuperOpPtr& e, const std::vector<Var>& args,
                          const std::vector<Var>& target);

/// Cylindric application E_X(rho): `binding` names the register
/// variables bound to e's slots, in slot order; must be injective with
/// matching dimensions. The result keeps the register of s.
QState apply_superop(const SuperOp& e, const std::vector<std::string>& binding,
                     const QState& s);

}  // namespace qccs::qnum

#endif
