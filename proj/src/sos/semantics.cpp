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

#include "qccs/sos/semantics.hpp"

#include <sstream>
#include <stdexcept>

#include "qccs/parse/pretty.hpp"

namespace qccs::sos {

using ast::PKind;
using ast::ProcPtr;

std::string Configuration::key(double grid) const {
  std::ostringstream os;
  os << parse::canonical_key(proc, grid) << " @" << std::hex
     << state->fingerprint(grid);
  return os.str();
}

std::vector<Var> FreshPolicy::input_targets(const qnum::Register& reg,
                                            const qnum::VarType& type) const {
  std::vector<Var> out;
  const Var* first_fresh = nullptr;
  for (const Var& v : reg.vars()) {
    if (v.type.dim != type.dim || v.type.name != type.name) continue;
    if (ast::is_reserved_name(v.name)) {
      if (!first_fresh) first_fresh = &v;
    } else {
      out.push_back(v);
    }
  }
  if (first_fresh) out.push_back(*first_fresh);
  return out;
}

qnum::Register seed_register(const std::vector<Var>& declared,
                             std::size_t fresh_per_type, std::size_t dim_cap) {
  std::vector<Var> vars = declared;
  std::vector<qnum::VarType> types;
  for (const Var& v : declared) {
    bool seen = false;
    for (const auto& t : types) seen = seen || t == v.type;
    if (!seen) types.push_back(v.type);
  }
  for (const auto& t : types) {
    for (std::size_t k = 0; k < fresh_per_type; ++k) {
      vars.push_back(Var{ast::reserved_name(t.name, k), t});
    }
  }
  return qnum::Register(std::move(vars), dim_cap);
}

namespace {

// Instantiated body of a constant.
ProcPtr unfold(const ProcPtr& p, const ast::Env& env) {
  const ast::ConstDef& def = env.lookup(p->const_name);
  if (def.params.size() != p->args.size()) {
    throw std::invalid_argument("arity mismatch unfolding '" + p->const_name +
                                "'");
  }
  std::vector<std::pair<Var, Var>> pairs;
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    pairs.emplace_back(def.params[i], p->args[i]);
  }
  return ast::subst_apply(def.body, ast::Subst::from_pairs(pairs), env,
                          /*check_defined=*/false);
}

struct Enumerator {
  const ast::Env& env;
  const FreshPolicy& policy;
  const qnum::Register& reg;
  const StatePtr& state;

  // Non-input transitions (Tau / Oper / Output plus the closure rules).
  void noninput(const ProcPtr& p, std::vector<Transition>& out) const {
    switch (p->kind) {
      case PKind::Nil:
        return;
      case PKind::Tau:
        out.push_back({Action::tau(), {p->a, state}});
        return;
      case PKind::Op: {
        std::vector<std::string> binding;
        binding.reserve(p->op_args.size());
        for (const Var& v : p->op_args) binding.push_back(v.name);
        qnum::QState next = qnum::apply_superop(*p->op, binding, *state);
        out.push_back({Action::op_action(p->op, p->op_name, p->op_args),
                       {p->a, std::move(next)}});
        return;
      }
      case PKind::Output:
        out.push_back({Action::out(p->chan, p->comm_var), {p->a, state}});
        return;
      case PKind::Input:
        return;
      case PKind::Sum: {
        noninput(p->a, out);
        noninput(p->b, out);
        return;
      }
      case PKind::Par: {
        // Intl2 (left), Intl2 symmetric (right), then Comm pairs.
        std::vector<Transition> left, right;
        noninput(p->a, left);
        noninput(p->b, right);
        for (Transition& t : left) {
          out.push_back({std::move(t.action),
                         {ast::make_par(t.target.proc, p->b), t.target.state}});
        }
        for (Transition& t : right) {
          out.push_back({std::move(t.action),
                         {ast::make_par(p->a, t.target.proc), t.target.state}});
        }
        comm(p->a, p->b, /*left_receives=*/true, out);
        comm(p->b, p->a, /*left_receives=*/false, out);
        return;
      }
      case PKind::Restrict: {
        std::vector<Transition> inner;
        noninput(p->a, inner);
        for (Transition& t : inner) {
          const auto cn = cn_action(t.action);
          if (cn && p->hide.count(*cn)) continue;
          out.push_back(
              {std::move(t.action),
               {ast::make_restrict(t.target.proc, p->hide), t.target.state}});
        }
        return;
      }
      case PKind::Constant:
        noninput(unfold(p, env), out);
        return;
    }
  }

  // Comm: receiver's input capabilities paired with sender's outputs on
  // the same channel and variable. The receiver side is `recv`; the
  // resulting parallel keeps the original left/right orientation.
  void comm(const ProcPtr& recv, const ProcPtr& send, bool left_receives,
            std::vector<Transition>& out) const {
    std::vector<Transition> sends;
    noninput(send, sends);
    for (const Transition& s : sends) {
      if (s.action.kind != AKind::Out) continue;
      for (const ProcPtr& cont : input_continuations(recv, s.action.chan,
                                                     s.action.var, env)) {
        ProcPtr par = left_receives ? ast::make_par(cont, s.target.proc)
                                    : ast::make_par(s.target.proc, cont);
        out.push_back({Action::tau(), {std::move(par), state}});
      }
    }
  }

  // Input transitions at every policy target.
  void inputs(const ProcPtr& p, std::vector<Transition>& out) const {
    std::set<std::pair<std::string, std::string>> caps;  // (chan, type name)
    std::set<std::string> visited;
    collect_caps(p, caps, visited);
    for (const auto& [chan, type_name] : caps) {
      const qnum::VarType* type = nullptr;
      for (const Var& v : reg.vars()) {
        if (v.type.name == type_name) {
          type = &v.type;
          break;
        }
      }
      if (!type) {
        throw std::invalid_argument(
            "register has no variable of type '" + type_name +
            "' demanded by an input on channel '" + chan + "'");
      }
      for (const Var& y : policy.input_targets(reg, *type)) {
        for (const ProcPtr& cont : input_continuations(p, chan, y, env)) {
          out.push_back({Action::in(chan, y), {cont, state}});
        }
      }
    }
  }

  void collect_caps(const ProcPtr& p,
                    std::set<std::pair<std::string, std::string>>& caps,
                    std::set<std::string>& visited_consts) const {
    switch (p->kind) {
      case PKind::Nil:
        return;
      case PKind::Input:
        caps.emplace(p->chan, p->comm_var.type.name);
        return;  // deeper inputs are not first-step capabilities
      case PKind::Tau:
      case PKind::Op:
      case PKind::Output:
        return;
      case PKind::Sum:
      case PKind::Par:
        collect_caps(p->a, caps, visited_consts);
        collect_caps(p->b, caps, visited_consts);
        return;
      case PKind::Restrict: {
        std::set<std::pair<std::string, std::string>> inner;
        collect_caps(p->a, inner, visited_consts);
        for (const auto& c : inner) {
          if (!p->hide.count(c.first)) caps.insert(c);
        }
        return;
      }
      case PKind::Constant: {
        if (!visited_consts.insert(p->const_name).second) return;
        collect_caps(env.lookup(p->const_name).body, caps, visited_consts);
        return;
      }
    }
  }
};

}  // namespace

std::vector<ast::ProcPtr> input_continuations(const ProcPtr& p,
                                              const std::string& chan,
                                              const Var& y,
                                              const ast::Env& env) {
  std::vector<ProcPtr> out;
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Tau:
    case PKind::Op:
    case PKind::Output:
      return out;
    case PKind::Input: {
      if (p->chan != chan) return out;
      if (p->comm_var.type != y.type) return out;
      if (p->fv().count(y.name)) return out;  // y not free in c?x.P
      out.push_back(ast::subst_apply(p->a, ast::Subst::swap(p->comm_var, y),
                                     env, /*check_defined=*/false));
      return out;
    }
    case PKind::Sum: {
      out = input_continuations(p->a, chan, y, env);
      for (ProcPtr& q : input_continuations(p->b, chan, y, env)) {
        out.push_back(std::move(q));
      }
      return out;
    }
    case PKind::Par: {
      // Intl1 with side condition y not free in the passive component.
      if (!p->b->fv().count(y.name)) {
        for (ProcPtr& q : input_continuations(p->a, chan, y, env)) {
          out.push_back(ast::make_par(std::move(q), p->b));
        }
      }
      if (!p->a->fv().count(y.name)) {
        for (ProcPtr& q : input_continuations(p->b, chan, y, env)) {
          out.push_back(ast::make_par(p->a, std::move(q)));
        }
      }
      return out;
    }
    case PKind::Restrict: {
      if (p->hide.count(chan)) return out;
      for (ProcPtr& q : input_continuations(p->a, chan, y, env)) {
        out.push_back(ast::make_restrict(std::move(q), p->hide));
      }
      return out;
    }
    case PKind::Constant: {
      ast::ConstDef def = env.lookup(p->const_name);
      std::vector<std::pair<Var, Var>> pairs;
      for (std::size_t i = 0; i < def.params.size(); ++i) {
        pairs.emplace_back(def.params[i], p->args[i]);
      }
      ProcPtr body = ast::subst_apply(
          def.body, ast::Subst::from_pairs(pairs), env, false);
      return input_continuations(body, chan, y, env);
    }
  }
  return out;
}

std::vector<Transition> enabled(const Configuration& c, const ast::Env& env,
                                const FreshPolicy& policy) {
  Enumerator en{env, policy, c.state->reg(), c.state};
  std::vector<Transition> out;
  en.noninput(c.proc, out);
  en.inputs(c.proc, out);
  return out;
}

}  // namespace qccs::sos
