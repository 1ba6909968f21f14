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

#ifndef QCCS_SOS_SEMANTICS_HPP
#define QCCS_SOS_SEMANTICS_HPP

#include <memory>
#include <vector>

#include "qccs/ast/process.hpp"
#include "qccs/ast/subst.hpp"
#include "qccs/qnum/qstate.hpp"
#include "qccs/sos/action.hpp"

namespace qccs::sos {

using StatePtr = std::shared_ptr<const qnum::QState>;

/// A pair of a process and the environment state. States are shared:
/// only Op transitions produce new ones.
struct Configuration {
  ast::ProcPtr proc;
  StatePtr state;

  Configuration() = default;
  Configuration(ast::ProcPtr p, StatePtr s)
      : proc(std::move(p)), state(std::move(s)) {}
  Configuration(ast::ProcPtr p, qnum::QState s)
      : proc(std::move(p)),
        state(std::make_shared<const qnum::QState>(std::move(s))) {}

  /// Canonical identity: alpha-canonical process rendering plus the
  /// state matrix rounded to the dedup grid.
  std::string key(double grid = 1e-9) const;
};

struct Transition {
  Action action;
  Configuration target;
};

/// Input-target selection. Targets for a binder of type T are the
/// non-reserved register variables of T (each filtered by the input
/// rule's side condition at the binder), plus the first reserved fresh
/// variable of T present in the register.
struct FreshPolicy {
  std::size_t fresh_per_type = 1;

  std::vector<Var> input_targets(const qnum::Register& reg,
                                 const qnum::VarType& type) const;
};

/// Registers extended with `fresh_per_type` reserved variables for each
/// type occurring among the given variables.
qnum::Register seed_register(const std::vector<Var>& declared,
                             std::size_t fresh_per_type,
                             std::size_t dim_cap = qnum::kDefaultDimCap);

/// All transitions of a configuration per the transition rules;
/// deterministic order. Throws on undefined constants.
std::vector<Transition> enabled(const Configuration& c, const ast::Env& env,
                                const FreshPolicy& policy);

/// Continuations P' with <P, rho> --c?y--> <P', rho> for the specific
/// target y (used by the Comm rule and the bisimulation game).
std::vector<ast::ProcPtr> input_continuations(const ast::ProcPtr& p,
                                              const std::string& chan,
                                              const Var& y,
                                              const ast::Env& env);

}  // namespace qccs::sos

#endif
