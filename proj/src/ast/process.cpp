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

#include "qccs/ast/process.hpp"

#include <stdexcept>

namespace qccs::ast {

std::shared_ptr<Process> blank(PKind k) {
  auto p = std::shared_ptr<Process>(new Process());
  p->kind = k;
  return p;
}

ProcPtr finish(std::shared_ptr<Process> p) {
  auto& fvs = p->fv_;
  switch (p->kind) {
    case PKind::Constant:
      for (const Var& v : p->args) fvs.insert(v.name);
      break;
    case PKind::Nil:
      break;
    case PKind::Tau:
      fvs = p->a->fv();
      break;
    case PKind::Op:
      fvs = p->a->fv();
      for (const Var& v : p->op_args) fvs.insert(v.name);
      break;
    case PKind::Input:
      fvs = p->a->fv();
      fvs.erase(p->comm_var.name);
      break;
    case PKind::Output:
      fvs = p->a->fv();
      fvs.insert(p->comm_var.name);
      break;
    case PKind::Sum:
    case PKind::Par:
      fvs = p->a->fv();
      fvs.insert(p->b->fv().begin(), p->b->fv().end());
      break;
    case PKind::Restrict:
      fvs = p->a->fv();
      break;
  }
  return p;
}

ProcPtr make_nil() {
  static const ProcPtr nil = finish(blank(PKind::Nil));
  return nil;
}

ProcPtr make_constant(std::string name, std::vector<Var> args) {
  auto p = blank(PKind::Constant);
  p->const_name = std::move(name);
  p->args = std::move(args);
  return finish(std::move(p));
}

ProcPtr make_tau(ProcPtr body) {
  auto p = blank(PKind::Tau);
  p->a = std::move(body);
  return finish(std::move(p));
}

ProcPtr make_op(qnum::SuperOpPtr op, std::string op_name,
                std::vector<Var> op_args, ProcPtr body) {
  auto p = blank(PKind::Op);
  p->op = std::move(op);
  p->op_name = std::move(op_name);
  p->op_args = std::move(op_args);
  p->a = std::move(body);
  return finish(std::move(p));
}

ProcPtr make_input(std::string chan, Var x, ProcPtr body) {
  auto p = blank(PKind::Input);
  p->chan = std::move(chan);
  p->comm_var = std::move(x);
  p->a = std::move(body);
  return finish(std::move(p));
}

ProcPtr make_output(std::string chan, Var x, ProcPtr body) {
  auto p = blank(PKind::Output);
  p->chan = std::move(chan);
  p->comm_var = std::move(x);
  p->a = std::move(body);
  return finish(std::move(p));
}

ProcPtr make_sum(ProcPtr l, ProcPtr r) {
  auto p = blank(PKind::Sum);
  p->a = std::move(l);
  p->b = std::move(r);
  return finish(std::move(p));
}

ProcPtr make_par(ProcPtr l, ProcPtr r) {
  auto p = blank(PKind::Par);
  p->a = std::move(l);
  p->b = std::move(r);
  return finish(std::move(p));
}

ProcPtr make_restrict(ProcPtr body, std::set<std::string> chans) {
  auto p = blank(PKind::Restrict);
  p->a = std::move(body);
  p->hide = std::move(chans);
  return finish(std::move(p));
}

const std::set<std::string>& fv(const ProcPtr& p) { return p->fv(); }

void Env::define(ConstDef def) {
  const std::string name = def.name;
  if (!defs_.emplace(name, std::move(def)).second) {
    throw std::invalid_argument("duplicate constant definition '" + name +
                                "'");
  }
}

bool Env::has(const std::string& name) const { return defs_.count(name) > 0; }

const ConstDef& Env::lookup(const std::string& name) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) {
    throw std::invalid_argument("undefined process constant '" + name + "'");
  }
  return it->second;
}

std::set<std::string> fv_checked(const ProcPtr& p, const Env& env) {
  // The free variables come from the node caches; the walk only checks
  // that referenced constants exist.
  switch (p->kind) {
    case PKind::Constant:
      env.lookup(p->const_name);
      break;
    case PKind::Nil:
      break;
    default:
      fv_checked(p->a, env);
      if (p->b) fv_checked(p->b, env);
      break;
  }
  return p->fv();
}

namespace {

void free_channels_rec(const ProcPtr& p, const Env& env,
                       std::set<std::string>& visited_consts,
                       std::set<std::string> hidden,
                       std::set<std::string>& out) {
  switch (p->kind) {
    case PKind::Nil:
      return;
    case PKind::Constant: {
      if (!visited_consts.insert(p->const_name).second) return;
      free_channels_rec(env.lookup(p->const_name).body, env, visited_consts,
                        hidden, out);
      return;
    }
    case PKind::Input:
    case PKind::Output:
      if (!hidden.count(p->chan)) out.insert(p->chan);
      free_channels_rec(p->a, env, visited_consts, hidden, out);
      return;
    case PKind::Restrict: {
      std::set<std::string> h = hidden;
      h.insert(p->hide.begin(), p->hide.end());
      free_channels_rec(p->a, env, visited_consts, std::move(h), out);
      return;
    }
    default:
      free_channels_rec(p->a, env, visited_consts, hidden, out);
      if (p->b) free_channels_rec(p->b, env, visited_consts, hidden, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_channels(const ProcPtr& p, const Env& env) {
  std::set<std::string> out, visited;
  free_channels_rec(p, env, visited, {}, out);
  return out;
}

void collect_vars(const ProcPtr& p, std::map<std::string, VarType>& out) {
  switch (p->kind) {
    case PKind::Nil:
      return;
    case PKind::Constant:
      for (const Var& v : p->args) out.emplace(v.name, v.type);
      return;
    case PKind::Op:
      for (const Var& v : p->op_args) out.emplace(v.name, v.type);
      collect_vars(p->a, out);
      return;
    case PKind::Input:
    case PKind::Output:
      out.emplace(p->comm_var.name, p->comm_var.type);
      collect_vars(p->a, out);
      return;
    default:
      collect_vars(p->a, out);
      if (p->b) collect_vars(p->b, out);
      return;
  }
}

bool is_finite(const ProcPtr& p) {
  switch (p->kind) {
    case PKind::Constant:
      return false;
    case PKind::Nil:
      return true;
    default:
      if (!is_finite(p->a)) return false;
      return !p->b || is_finite(p->b);
  }
}

}  // namespace qccs::ast
