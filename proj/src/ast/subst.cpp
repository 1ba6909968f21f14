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

#include "qccs/ast/subst.hpp"

#include <stdexcept>

namespace qccs::ast {

bool is_reserved_name(const std::string& name) {
  return !name.empty() && name[0] == '#';
}

std::string reserved_name(const std::string& type_name, std::size_t k) {
  return "#" + type_name + "_" + std::to_string(k);
}

Var pick_fresh(const VarType& type,
               const std::vector<const std::set<std::string>*>& avoid) {
  for (std::size_t k = 0;; ++k) {
    const std::string name = reserved_name(type.name, k);
    bool clash = false;
    for (const auto* s : avoid) {
      if (s->count(name)) {
        clash = true;
        break;
      }
    }
    if (!clash) return Var{name, type};
  }
}

void Subst::set(const Var& from, const Var& to) {
  if (from.type != to.type) {
    throw std::invalid_argument("substitution must preserve types: " +
                                from.name + " -> " + to.name);
  }
  if (from.name == to.name) return;
  map_[from.name] = to;
  domain_types_[from.name] = from.type;
}

Subst Subst::from_pairs(const std::vector<std::pair<Var, Var>>& pairs) {
  Subst f;
  std::map<std::string, Var> targets;  // target name -> source var
  for (const auto& [x, y] : pairs) {
    if (f.map_.count(x.name) || f.domain_types_.count(x.name)) {
      throw std::invalid_argument("substitution maps '" + x.name + "' twice");
    }
    if (!targets.emplace(y.name, x).second) {
      throw std::invalid_argument(
          "substitution is not one-to-one (two variables map to '" + y.name +
          "')");
    }
    f.set(x, y);
  }
  // Close chains into cycles: any target that is not itself moved maps
  // back to the start of its chain, making f a finite permutation.
  for (const auto& [x, y] : pairs) {
    if (f.map_.count(y.name)) continue;  // y is moved already
    // walk the chain backwards from x to its start
    Var start = x;
    auto it = targets.find(start.name);
    while (it != targets.end()) {
      start = it->second;
      it = targets.find(start.name);
    }
    if (y.name != start.name) f.set(y, start);
  }
  return f;
}

Subst Subst::swap(const Var& x, const Var& y) {
  if (x.name == y.name) return Subst{};
  Subst f;
  f.set(x, y);
  f.set(y, x);
  return f;
}

Var Subst::operator()(const Var& v) const {
  auto it = map_.find(v.name);
  return it == map_.end() ? v : it->second;
}

std::string Subst::map_name(const std::string& name) const {
  auto it = map_.find(name);
  return it == map_.end() ? name : it->second.name;
}

Subst Subst::inverse() const {
  Subst g;
  for (const auto& [from, to] : map_) {
    g.set(to, Var{from, domain_types_.at(from)});
  }
  return g;
}

Subst Subst::fixing(const Var& y) const {
  auto moved = map_.find(y.name);
  if (moved == map_.end()) return *this;  // f already fixes y
  Subst g = *this;
  const Var fy = moved->second;  // f(y)
  // erase y from the domain
  g.map_.erase(y.name);
  g.domain_types_.erase(y.name);
  // f^-1(y): the variable mapping onto y, redirected to f(y)
  for (const auto& [from, to] : map_) {
    if (to.name == y.name) {
      Var from_var{from, domain_types_.at(from)};
      if (fy.name == from) {
        g.map_.erase(from);
        g.domain_types_.erase(from);
      } else {
        g.map_[from] = fy;
      }
      break;
    }
  }
  return g;
}

std::set<std::string> Subst::image(const std::set<std::string>& names) const {
  std::set<std::string> out;
  for (const std::string& n : names) out.insert(map_name(n));
  return out;
}

namespace {

ProcPtr subst_rec(const ProcPtr& p, const Subst& f, const Env& env) {
  if (f.is_identity()) return p;
  switch (p->kind) {
    case PKind::Nil:
      return p;
    case PKind::Constant: {
      std::vector<Var> args;
      args.reserve(p->args.size());
      for (const Var& v : p->args) args.push_back(f(v));
      return make_constant(p->const_name, std::move(args));
    }
    case PKind::Tau:
      return make_tau(subst_rec(p->a, f, env));
    case PKind::Op: {
      // (Ef)[f(X)]: the payload is slot-level, so relabeling is arg
      // renaming; the cylindric machinery realizes f|X . E . f|X^-1.
      std::vector<Var> args;
      args.reserve(p->op_args.size());
      for (const Var& v : p->op_args) args.push_back(f(v));
      return make_op(p->op, p->op_name, std::move(args),
                     subst_rec(p->a, f, env));
    }
    case PKind::Output:
      return make_output(p->chan, f(p->comm_var), subst_rec(p->a, f, env));
    case PKind::Input: {
      const Var x = p->comm_var;
      const std::set<std::string>& fv_body = p->a->fv();
      const std::set<std::string> fv_body_f = f.image(fv_body);
      Var y = x;
      if (fv_body_f.count(x.name)) {
        // Something maps onto x: rename the binder.
        const std::set<std::string>& fv_prefix = p->fv();  // fv(c?x.P')
        y = pick_fresh(x.type, {&fv_prefix, &fv_body_f});
      }
      ProcPtr body = p->a;
      if (y.name != x.name) {
        body = subst_rec(body, Subst::swap(x, y), env);
      }
      return make_input(p->chan, y, subst_rec(body, f.fixing(y), env));
    }
    case PKind::Sum:
      return make_sum(subst_rec(p->a, f, env), subst_rec(p->b, f, env));
    case PKind::Par:
      return make_par(subst_rec(p->a, f, env), subst_rec(p->b, f, env));
    case PKind::Restrict:
      return make_restrict(subst_rec(p->a, f, env), p->hide);
  }
  return p;
}

}  // namespace

ProcPtr subst_apply(const ProcPtr& p, const Subst& f, const Env& env,
                    bool check_defined) {
  ProcPtr out = subst_rec(p, f, env);
  if (check_defined && !f.is_identity()) {
    ProcPtr back = subst_rec(out, f.inverse(), env);
    if (!alpha_eq(back, p)) {
      throw std::invalid_argument(
          "ill-defined substitution (variable conflict): (Pf)f^-1 is not "
          "alpha-equal to P");
    }
  }
  return out;
}

namespace {

// Directed rename of free occurrences; `to` is a fresh canonical name,
// so no capture can happen.
ProcPtr rename_free(const ProcPtr& p, const std::string& from, const Var& to) {
  if (!p->fv().count(from)) return p;
  switch (p->kind) {
    case PKind::Nil:
      return p;
    case PKind::Constant: {
      std::vector<Var> args;
      for (const Var& v : p->args)
        args.push_back(v.name == from ? Var{to.name, v.type} : v);
      return make_constant(p->const_name, std::move(args));
    }
    case PKind::Tau:
      return make_tau(rename_free(p->a, from, to));
    case PKind::Op: {
      std::vector<Var> args;
      for (const Var& v : p->op_args)
        args.push_back(v.name == from ? Var{to.name, v.type} : v);
      return make_op(p->op, p->op_name, std::move(args),
                     rename_free(p->a, from, to));
    }
    case PKind::Output: {
      const Var v = p->comm_var.name == from ? Var{to.name, p->comm_var.type}
                                             : p->comm_var;
      return make_output(p->chan, v, rename_free(p->a, from, to));
    }
    case PKind::Input:
      if (p->comm_var.name == from) return p;  // shadowed
      return make_input(p->chan, p->comm_var, rename_free(p->a, from, to));
    case PKind::Sum:
      return make_sum(rename_free(p->a, from, to),
                      rename_free(p->b, from, to));
    case PKind::Par:
      return make_par(rename_free(p->a, from, to),
                      rename_free(p->b, from, to));
    case PKind::Restrict:
      return make_restrict(rename_free(p->a, from, to), p->hide);
  }
  return p;
}

ProcPtr canon_rec(const ProcPtr& p, std::size_t& counter) {
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Constant:
      return p;
    case PKind::Tau:
      return make_tau(canon_rec(p->a, counter));
    case PKind::Op:
      return make_op(p->op, p->op_name, p->op_args, canon_rec(p->a, counter));
    case PKind::Output:
      return make_output(p->chan, p->comm_var, canon_rec(p->a, counter));
    case PKind::Input: {
      const Var nb{"%" + std::to_string(counter++), p->comm_var.type};
      ProcPtr body = rename_free(p->a, p->comm_var.name, nb);
      return make_input(p->chan, nb, canon_rec(body, counter));
    }
    case PKind::Sum:
      // left-to-right numbering
      {
        ProcPtr l = canon_rec(p->a, counter);
        ProcPtr r = canon_rec(p->b, counter);
        return make_sum(std::move(l), std::move(r));
      }
    case PKind::Par: {
      ProcPtr l = canon_rec(p->a, counter);
      ProcPtr r = canon_rec(p->b, counter);
      return make_par(std::move(l), std::move(r));
    }
    case PKind::Restrict:
      return make_restrict(canon_rec(p->a, counter), p->hide);
  }
  return p;
}

bool ops_equal_exact(const qnum::SuperOpPtr& a, const qnum::SuperOpPtr& b) {
  if (a == b) return true;
  if (a->slots() != b->slots()) return false;
  if (a->kraus().size() != b->kraus().size()) return false;
  for (std::size_t i = 0; i < a->kraus().size(); ++i) {
    if (qnum::max_abs_diff(a->kraus()[i], b->kraus()[i]) != 0.0) return false;
  }
  return true;
}

template <typename OpCmp>
bool term_equal_impl(const ProcPtr& p, const ProcPtr& q, OpCmp&& cmp) {
  if (p == q) return true;
  if (p->kind != q->kind) return false;
  switch (p->kind) {
    case PKind::Nil:
      return true;
    case PKind::Constant:
      return p->const_name == q->const_name && p->args == q->args;
    case PKind::Tau:
      return term_equal_impl(p->a, q->a, cmp);
    case PKind::Op:
      return p->op_args == q->op_args && cmp(p->op, q->op) &&
             term_equal_impl(p->a, q->a, cmp);
    case PKind::Input:
    case PKind::Output:
      return p->chan == q->chan && p->comm_var == q->comm_var &&
             term_equal_impl(p->a, q->a, cmp);
    case PKind::Sum:
    case PKind::Par:
      return term_equal_impl(p->a, q->a, cmp) &&
             term_equal_impl(p->b, q->b, cmp);
    case PKind::Restrict:
      return p->hide == q->hide && term_equal_impl(p->a, q->a, cmp);
  }
  return false;
}

}  // namespace

ProcPtr alpha_canon(const ProcPtr& p) {
  std::size_t counter = 0;
  return canon_rec(p, counter);
}

bool term_equal(const ProcPtr& p, const ProcPtr& q) {
  return term_equal_impl(p, q, ops_equal_exact);
}

bool alpha_eq(const ProcPtr& p, const ProcPtr& q) {
  if (p == q) return true;
  return term_equal(alpha_canon(p), alpha_canon(q));
}

bool alpha_eq_choi(const ProcPtr& p, const ProcPtr& q, double tol) {
  auto cmp = [tol](const qnum::SuperOpPtr& a, const qnum::SuperOpPtr& b) {
    if (a == b) return true;
    if (a->dim() != b->dim()) return false;
    return qnum::max_abs_diff(a->choi(), b->choi()) <= tol;
  };
  return term_equal_impl(alpha_canon(p), alpha_canon(q), cmp);
}

}  // namespace qccs::ast
