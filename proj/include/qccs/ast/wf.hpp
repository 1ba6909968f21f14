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

#ifndef QCCS_AST_WF_HPP
#define QCCS_AST_WF_HPP

#include "qccs/ast/process.hpp"

namespace qccs::ast {

/// Result of a well-formedness check. On failure, `offender` is the
/// first violating subterm in leftmost-innermost order.
struct WfReport {
  bool ok = true;
  std::string message;
  ProcPtr offender;

  explicit operator bool() const { return ok; }
};

/// Checks the formation rules: x not free under its own output prefix,
/// disjoint free variables of parallel components, distinct and
/// type-correct operation arguments, and constant arity / typing.
WfReport well_formed(const ProcPtr& p, const Env& env);

/// Checks every definition body: distinct params, fv(body) within the
/// params, and body well-formedness.
WfReport validate_env(const Env& env);

}  // namespace qccs::ast

#endif
