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

// Property checks for the transition relation, shared by the unit and
// acceptance suites. Each returns an empty string on success and a
// description of the first violation otherwise.

#ifndef QCCS_TESTS_SOS_PROPERTIES_HPP
#define QCCS_TESTS_SOS_PROPERTIES_HPP

#include <algorithm>
#include <set>
#include <sstream>

#include "qccs/ast/subst.hpp"
#include "qccs/equiv/laws.hpp"
#include "qccs/parse/pretty.hpp"
#include "qccs/sos/semantics.hpp"
#include "test_util.hpp"

namespace qccs::testprops {

using sos::AKind;
using sos::Configuration;
using sos::Transition;

inline sos::StatePtr random_state(const qnum::Register& reg,
                                  std::mt19937_64& rng) {
  return std::make_shared<const qnum::QState>(qnum::QState(
      reg, testutil::random_density(rng, reg.total_dim()),
      qnum::TraceKind::density));
}

// Lemma on environment changes: Op edges transform the state by the
// cylindric extension exactly; all other edges leave it untouched.
inline std::string check_action_lemma(const Configuration& c,
                                      const ast::Env& env,
                                      const sos::FreshPolicy& policy) {
  for (const Transition& t : sos::enabled(c, env, policy)) {
    if (t.action.kind == AKind::Op) {
      std::vector<std::string> binding;
      for (const auto& v : t.action.xs) binding.push_back(v.name);
      qnum::QState want = qnum::apply_superop(*t.action.op, binding, *c.state);
      const double err =
          qnum::max_abs_diff(want.matrix(), t.target.state->matrix());
      if (err > 1e-12) {
        return "op edge state differs from E_X(rho) by " +
               std::to_string(err);
      }
    } else if (t.target.state != c.state) {
      return "non-op edge changed the state object";
    }
  }
  return "";
}

// State independence: the (action, continuation) multiset is the same
// for every environment state.
inline std::string check_state_independence(const ast::ProcPtr& p,
                                            const qnum::Register& reg,
                                            const ast::Env& env,
                                            const sos::FreshPolicy& policy,
                                            std::mt19937_64& rng,
                                            std::size_t states = 5) {
  auto signature = [&](const Configuration& c) {
    std::multiset<std::string> sig;
    for (const Transition& t : sos::enabled(c, env, policy)) {
      sig.insert(t.action.key() + " -> " +
                 parse::canonical_key(t.target.proc));
    }
    return sig;
  };
  Configuration base{p, random_state(reg, rng)};
  const auto want = signature(base);
  for (std::size_t i = 0; i < states; ++i) {
    Configuration other{p, random_state(reg, rng)};
    if (signature(other) != want) {
      return "transition signature depends on the state for " +
             parse::pretty(p);
    }
  }
  return "";
}

// fv(alpha) within fv(P) - fv(P'); fv(P') within fv(P) + bv(alpha).
inline std::string check_var_lemma(const Configuration& c,
                                   const ast::Env& env,
                                   const sos::FreshPolicy& policy) {
  const auto& fvp = c.proc->fv();
  for (const Transition& t : sos::enabled(c, env, policy)) {
    const auto& fvp2 = t.target.proc->fv();
    for (const std::string& v : sos::fv_action(t.action)) {
      if (!fvp.count(v) || fvp2.count(v)) {
        return "fv(alpha) escapes fv(P)-fv(P') at " + t.action.label +
               " from " + parse::pretty(c.proc);
      }
    }
    const auto bv = sos::bv_action(t.action);
    for (const std::string& v : fvp2) {
      if (!fvp.count(v) && !(bv && *bv == v)) {
        return "fv(P') escapes fv(P)+bv(alpha) at " + t.action.label;
      }
    }
  }
  return "";
}

// Input retargeting: an input edge at x implies an input edge at every
// admissible y with an alpha-equal retargeted continuation.
inline std::string check_input_lemma(const Configuration& c,
                                     const ast::Env& env,
                                     const sos::FreshPolicy& policy) {
  std::vector<Transition> ts = sos::enabled(c, env, policy);
  for (const Transition& t : ts) {
    if (t.action.kind != AKind::In) continue;
    const qnum::Var x = t.action.var;
    for (const qnum::Var& y :
         policy.input_targets(c.state->reg(), x.type)) {
      if (c.proc->fv().count(y.name)) continue;
      ast::ProcPtr expect = ast::subst_apply(
          t.target.proc, ast::Subst::swap(x, y), env, false);
      bool found = false;
      for (const Transition& u : ts) {
        if (u.action.kind == AKind::In && u.action.chan == t.action.chan &&
            u.action.var.name == y.name &&
            ast::alpha_eq(u.target.proc, expect)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return "missing retargeted input " + t.action.chan + "?" + y.name +
               " from " + parse::pretty(c.proc);
      }
    }
  }
  return "";
}

// Alpha-equivalent processes have matching transition sets.
inline std::string check_alpha_lemma(const ast::ProcPtr& p1,
                                     const ast::ProcPtr& p2,
                                     const sos::StatePtr& state,
                                     const ast::Env& env,
                                     const sos::FreshPolicy& policy) {
  auto signature = [&](const ast::ProcPtr& p) {
    std::multiset<std::string> sig;
    for (const Transition& t : sos::enabled({p, state}, env, policy)) {
      std::ostringstream os;
      os << t.action.key() << " -> " << parse::canonical_key(t.target.proc)
         << " @" << std::hex << t.target.state->fingerprint();
      sig.insert(os.str());
    }
    return sig;
  };
  if (signature(p1) != signature(p2)) {
    return "alpha-variants disagree: " + parse::pretty(p1) + " vs " +
           parse::pretty(p2);
  }
  return "";
}

// Substitution lemmas: the transitions of Pf at f(rho) are exactly the
// f-images of the transitions of P at rho, for f fixing input binders.
inline std::string check_subst_lemma(const ast::ProcPtr& p,
                                     const ast::Subst& f,
                                     const sos::StatePtr& state,
                                     const ast::Env& env,
                                     const sos::FreshPolicy& policy) {
  std::map<std::string, std::string> rename;
  for (const auto& [from, to] : f.pairs()) rename[from] = to.name;
  auto f_state = std::make_shared<const qnum::QState>(
      qnum::rename_state(*state, rename));
  ast::ProcPtr pf = ast::subst_apply(p, f, env, false);

  auto image_sig = [&](const Transition& t) -> std::string {
    // f(alpha), f(rho'), P'f
    std::ostringstream os;
    switch (t.action.kind) {
      case AKind::Tau:
        os << "tau";
        break;
      case AKind::In:
        os << t.action.chan << "?" << t.action.var.name;
        break;
      case AKind::Out:
        os << t.action.chan << "!" << f.map_name(t.action.var.name);
        break;
      case AKind::Op: {
        std::vector<std::string> xs;
        for (const auto& v : t.action.xs) xs.push_back(f.map_name(v.name));
        std::sort(xs.begin(), xs.end());
        os << "op[";
        for (const auto& n : xs) os << n << ",";
        os << "]";
        break;
      }
    }
    os << " -> "
       << parse::canonical_key(ast::subst_apply(t.target.proc, f, env,
                                                false));
    os << " @" << std::hex
       << qnum::rename_state(*t.target.state, rename).fingerprint();
    return os.str();
  };
  auto plain_sig = [&](const Transition& t) -> std::string {
    std::ostringstream os;
    switch (t.action.kind) {
      case AKind::Tau:
        os << "tau";
        break;
      case AKind::In:
        os << t.action.chan << "?" << t.action.var.name;
        break;
      case AKind::Out:
        os << t.action.chan << "!" << t.action.var.name;
        break;
      case AKind::Op: {
        std::vector<std::string> xs;
        for (const auto& v : t.action.xs) xs.push_back(v.name);
        os << "op[";
        for (const auto& n : xs) os << n << ",";
        os << "]";
        break;
      }
    }
    os << " -> " << parse::canonical_key(t.target.proc);
    os << " @" << std::hex << t.target.state->fingerprint();
    return os.str();
  };

  std::multiset<std::string> images, actuals;
  for (const Transition& t : sos::enabled({p, state}, env, policy)) {
    if (const auto bv = sos::bv_action(t.action);
        bv && f.map_name(*bv) != *bv) {
      continue;  // lemma premise f(bv(alpha)) = bv(alpha)
    }
    images.insert(image_sig(t));
  }
  for (const Transition& t : sos::enabled({pf, f_state}, env, policy)) {
    if (const auto bv = sos::bv_action(t.action);
        bv && f.map_name(*bv) != *bv) {
      continue;
    }
    actuals.insert(plain_sig(t));
  }
  if (images != actuals) {
    return "transitions of Pf are not the f-images for " +
           parse::pretty(p);
  }
  return "";
}

}  // namespace qccs::testprops

#endif
