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

#include "qccs/ast/wf.hpp"

#include <algorithm>

namespace qccs::ast {

namespace {

WfReport fail(const ProcPtr& p, std::string msg) {
  WfReport r;
  r.ok = false;
  r.message = std::move(msg);
  r.offender = p;
  return r;
}

WfReport check(const ProcPtr& p, const Env& env) {
  // children first: leftmost-innermost reporting
  if (p->a) {
    if (WfReport r = check(p->a, env); !r.ok) return r;
  }
  if (p->b) {
    if (WfReport r = check(p->b, env); !r.ok) return r;
  }

  switch (p->kind) {
    case PKind::Nil:
    case PKind::Tau:
    case PKind::Input:
    case PKind::Sum:
    case PKind::Restrict:
      break;

    case PKind::Constant: {
      if (!env.has(p->const_name)) {
        return fail(p, "undefined process constant '" + p->const_name + "'");
      }
      const ConstDef& def = env.lookup(p->const_name);
      if (def.params.size() != p->args.size()) {
        return fail(p, "constant '" + p->const_name + "' expects " +
                           std::to_string(def.params.size()) +
                           " argument(s), got " +
                           std::to_string(p->args.size()));
      }
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        if (p->args[i].type != def.params[i].type) {
          return fail(p, "argument '" + p->args[i].name + "' of '" +
                             p->const_name + "' has type " +
                             p->args[i].type.name + ", expected " +
                             def.params[i].type.name);
        }
        for (std::size_t j = i + 1; j < p->args.size(); ++j) {
          if (p->args[i].name == p->args[j].name) {
            return fail(p, "constant arguments must be pairwise distinct ('" +
                               p->args[i].name + "' repeats)");
          }
        }
      }
      break;
    }

    case PKind::Op: {
      if (p->op_args.size() != p->op->arity()) {
        return fail(p, "operation '" + p->op_name + "' expects " +
                           std::to_string(p->op->arity()) +
                           " variable(s), got " +
                           std::to_string(p->op_args.size()));
      }
      for (std::size_t i = 0; i < p->op_args.size(); ++i) {
        if (p->op_args[i].type.dim != p->op->slots()[i].dim) {
          return fail(p, "variable '" + p->op_args[i].name +
                             "' does not fit slot " + std::to_string(i) +
                             " of operation '" + p->op_name + "'");
        }
        for (std::size_t j = i + 1; j < p->op_args.size(); ++j) {
          if (p->op_args[i].name == p->op_args[j].name) {
            return fail(p, "operation arguments must be pairwise distinct ('" +
                               p->op_args[i].name + "' repeats)");
          }
        }
      }
      break;
    }

    case PKind::Output:
      if (p->a->fv().count(p->comm_var.name)) {
        return fail(p, "output-bound variable '" + p->comm_var.name +
                           "' occurs free in the continuation (no-cloning)");
      }
      break;

    case PKind::Par: {
      std::vector<std::string> shared;
      std::set_intersection(p->a->fv().begin(), p->a->fv().end(),
                            p->b->fv().begin(), p->b->fv().end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        return fail(p, "parallel components share free variable '" +
                           shared.front() + "' (no-cloning)");
      }
      break;
    }
  }
  return WfReport{};
}

}  // namespace

WfReport well_formed(const ProcPtr& p, const Env& env) {
  return check(p, env);
}

WfReport validate_env(const Env& env) {
  for (const auto& [name, def] : env.all()) {
    for (std::size_t i = 0; i < def.params.size(); ++i)
      for (std::size_t j = i + 1; j < def.params.size(); ++j)
        if (def.params[i].name == def.params[j].name) {
          return fail(def.body, "parameters of '" + name +
                                    "' must be pairwise distinct");
        }
    std::set<std::string> params;
    for (const Var& v : def.params) params.insert(v.name);
    for (const std::string& v : def.body->fv()) {
      if (!params.count(v)) {
        return fail(def.body, "definition of '" + name +
                                  "' has free variable '" + v +
                                  "' outside its parameters");
      }
    }
    if (WfReport r = check(def.body, env); !r.ok) return r;
  }
  return WfReport{};
}

}  // namespace qccs::ast
