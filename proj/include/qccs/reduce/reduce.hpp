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

#ifndef QCCS_REDUCE_REDUCE_HPP
#define QCCS_REDUCE_REDUCE_HPP

#include <vector>

#include "qccs/ast/process.hpp"
#include "qccs/sos/action.hpp"

namespace qccs::reduce {

/// Merge a maximal run of quantum operations into one operation on the
/// union variable set: E = (E_n (x) I) o ... o (E_1 (x) I). Inputs are
/// given in application order (E_1 first).
std::pair<qnum::SuperOpPtr, std::vector<ast::Var>> compose_run(
    const std::vector<std::pair<qnum::SuperOpPtr, std::vector<ast::Var>>>&
        run);

/// Operation reduction on action strings: every maximal run of adjacent
/// Op actions collapses to its composition; other actions are kept.
std::vector<sos::Action> reduce_string(const std::vector<sos::Action>& t);

/// The unique normal form: adjacent operation prefixes merged
/// everywhere, congruence-closed; constants stay folded. Idempotent.
ast::ProcPtr normal_form(const ast::ProcPtr& p, const ast::Env& env);

}  // namespace qccs::reduce

#endif
