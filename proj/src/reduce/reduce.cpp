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

#include "qccs/reduce/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace qccs::reduce {

using ast::ProcPtr;
using ast::Var;
using qnum::SuperOpPtr;

std::pair<SuperOpPtr, std::vector<Var>> compose_run(
    const std::vector<std::pair<SuperOpPtr, std::vector<Var>>>& run) {
  if (run.empty()) {
    throw std::invalid_argument("empty operation run");
  }
  // X = union of the X_i, canonical order.
  std::vector<Var> xs;
  for (const auto& [op, args] : run) {
    for (const Var& v : args) {
      bool seen = false;
      for (const Var& u : xs) seen = seen || u.name == v.name;
      if (!seen) xs.push_back(v);
    }
  }
  std::sort(xs.begin(), xs.end());

  SuperOpPtr acc;
  for (const auto& [op, args] : run) {
    SuperOpPtr ext = qnum::extend_superop(op, args, xs);
    acc = acc ? qnum::superop_compose(ext, acc) : ext;
  }
  return {acc, xs};
}

std::vector<sos::Action> reduce_string(const std::vector<sos::Action>& t) {
  std::vector<sos::Action> out;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i].kind != sos::AKind::Op) {
      out.push_back(t[i]);
      ++i;
      continue;
    }
    std::vector<std::pair<SuperOpPtr, std::vector<Var>>> run;
    std::string label;
    while (i < t.size() && t[i].kind == sos::AKind::Op) {
      run.emplace_back(t[i].op, t[i].xs);
      label = label.empty() ? t[i].label : label + ";" + t[i].label;
      ++i;
    }
    if (run.size() == 1) {
      out.push_back(t[i - 1]);
      continue;
    }
    auto [op, xs] = compose_run(run);
    out.push_back(sos::Action::op_action(op, op->label(), xs));
  }
  return out;
}

namespace {

ProcPtr nf(const ProcPtr& p, const ast::Env& env) {
  using ast::PKind;
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Constant:
      return p;
    case PKind::Tau:
      return ast::make_tau(nf(p->a, env));
    case PKind::Op: {
      // Collect the maximal adjacent run of Op prefixes.
      std::vector<std::pair<SuperOpPtr, std::vector<Var>>> run;
      ProcPtr cur = p;
      while (cur->kind == PKind::Op) {
        run.emplace_back(cur->op, cur->op_args);
        cur = cur->a;
      }
      ProcPtr body = nf(cur, env);
      if (run.size() == 1) {
        return ast::make_op(p->op, p->op_name, p->op_args, std::move(body));
      }
      auto [op, xs] = compose_run(run);
      return ast::make_op(op, op->label(), xs, std::move(body));
    }
    case PKind::Input:
      return ast::make_input(p->chan, p->comm_var, nf(p->a, env));
    case PKind::Output:
      return ast::make_output(p->chan, p->comm_var, nf(p->a, env));
    case PKind::Sum:
      return ast::make_sum(nf(p->a, env), nf(p->b, env));
    case PKind::Par:
      return ast::make_par(nf(p->a, env), nf(p->b, env));
    case PKind::Restrict:
      return ast::make_restrict(nf(p->a, env), p->hide);
  }
  return p;
}

}  // namespace

ProcPtr normal_form(const ProcPtr& p, const ast::Env& env) {
  return nf(p, env);
}

}  // namespace qccs::reduce
