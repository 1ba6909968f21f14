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

#ifndef QCCS_SOS_ACTION_HPP
#define QCCS_SOS_ACTION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qccs/qnum/superop.hpp"

namespace qccs::sos {

using qnum::Var;

enum class AKind { Tau, Op, In, Out };

/// A transition label. Op actions carry the variable set X in canonical
/// (sorted) order together with the channel re-expressed on that order,
/// so that two Op actions are comparable by X plus Choi matrix.
struct Action {
  AKind kind = AKind::Tau;
  std::string chan;  // In / Out
  Var var;           // In / Out
  std::vector<Var> xs;      // Op: sorted X
  qnum::SuperOpPtr op;      // Op: canonical payload on xs
  std::string label;        // display form

  static Action tau();
  static Action in(std::string chan, Var v);
  static Action out(std::string chan, Var v);
  /// args bound to raw's slots in slot order; the label keeps the
  /// slot-order rendering (e.g. "CNOT[z,x]").
  static Action op_action(const qnum::SuperOpPtr& raw,
                          const std::string& op_name,
                          const std::vector<Var>& args);

  bool is_input() const { return kind == AKind::In; }

  /// Key for grouping/deduplication; Op payload keyed by rounded Choi.
  std::string key(double grid = 1e-9) const;
};

/// Same action: identical kind/channel/variable; Op actions need equal
/// X and Choi distance within tol.
bool action_equal(const Action& a, const Action& b, double tol);

/// fv(c!x) = {x}, fv(E[X]) = X, fv(tau) = fv(c?x) = {}.
std::set<std::string> fv_action(const Action& a);

/// bv(c?x) = x, undefined otherwise.
std::optional<std::string> bv_action(const Action& a);

/// cn defined only for communications.
std::optional<std::string> cn_action(const Action& a);

}  // namespace qccs::sos

#endif
