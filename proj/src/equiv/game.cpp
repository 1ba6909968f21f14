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

#include "qccs/equiv/game.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qccs/ast/subst.hpp"
#include "qccs/ast/wf.hpp"
#include "qccs/parse/pretty.hpp"
#include "qccs/reduce/reduce.hpp"

namespace qccs::equiv {

using ast::ProcPtr;
using ast::Var;
using sos::Action;
using sos::AKind;
using sos::Configuration;
using sos::Transition;

std::string Verdict::to_json() const {
  nlohmann::json j;
  switch (result) {
    case Result::bisimilar:
      j["result"] = "bisimilar";
      break;
    case Result::not_bisimilar:
      j["result"] = "not_bisimilar";
      break;
    case Result::unknown:
      j["result"] = "unknown";
      break;
  }
  j["suite_size"] = suite_size;
  j["bounds_hit"] = bounds_hit;
  if (lambda) j["lambda"] = *lambda;
  if (interval) {
    j["interval"]["lo"] = interval->lo;
    if (interval->hi_infinite) {
      j["interval"]["hi"] = "inf";
    } else {
      j["interval"]["hi"] = interval->hi;
    }
  }
  if (!witness.empty()) {
    j["witness"] = nlohmann::json::array();
    for (const WitnessStep& s : witness) {
      j["witness"].push_back({{"side", s.side}, {"action", s.action}});
    }
  }
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

namespace {

// Process-wide memo of diamond-distance estimates; sound because the
// estimator is deterministic in (channel pair, options).
double cached_diamond(const qnum::SuperOpPtr& e, const qnum::SuperOpPtr& f,
                      const qnum::DiamondOptions& opts) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, std::uint64_t, std::size_t,
                             std::size_t, std::uint64_t>,
                  double>
      cache;
  std::uint64_t a = qnum::fingerprint(e->choi());
  std::uint64_t b = qnum::fingerprint(f->choi());
  if (a > b) std::swap(a, b);  // the distance is symmetric
  const auto key = std::make_tuple(a, b, opts.starts, opts.iterations,
                                   opts.seed);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double d = qnum::diamond_distance(*e, *f, opts);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, d);
  return d;
}

struct MatchRes {
  Result r = Result::bisimilar;
  std::size_t low = SIZE_MAX;  // lowest stack index this result leans on
  std::vector<WitnessStep> wit;
};

class Game {
 public:
  Game(const ast::Env& env, const GameOptions& opts)
      : env_(env), opts_(opts) {}

  bool bounds_hit = false;

  MatchRes run(const Configuration& c1, const Configuration& c2) {
    return match(c1, c2, opts_.max_rounds);
  }

 private:
  const ast::Env& env_;
  const GameOptions& opts_;
  std::map<std::pair<std::string, std::string>, Result> memo_;
  std::map<std::pair<std::string, std::string>, std::size_t> onstack_;
  std::size_t stack_size_ = 0;
  std::map<const ast::Process*, ProcPtr> nf_cache_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> tdist_cache_;

  ProcPtr norm(const ProcPtr& p) {
    if (!opts_.nf_mode) return p;
    auto it = nf_cache_.find(p.get());
    if (it != nf_cache_.end()) return it->second;
    ProcPtr n = reduce::normal_form(p, env_);
    nf_cache_.emplace(p.get(), n);
    return n;
  }

  double tdist(const sos::StatePtr& a, const sos::StatePtr& b) {
    if (a == b) return 0.0;
    auto key = std::make_pair(a->fingerprint(), b->fingerprint());
    if (key.first > key.second) std::swap(key.first, key.second);
    auto it = tdist_cache_.find(key);
    if (it != tdist_cache_.end()) return it->second;
    const double d = qnum::trace_distance(*a, *b);
    tdist_cache_.emplace(key, d);
    return d;
  }

  bool action_match(const Action& a, const Action& b) {
    if (!opts_.lambda_game) return sos::action_equal(a, b, opts_.chan_tol);
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case AKind::Tau:
        return true;
      case AKind::In:
      case AKind::Out:
        return a.chan == b.chan && a.var.name == b.var.name;
      case AKind::Op: {
        if (a.xs.size() != b.xs.size()) return false;
        for (std::size_t i = 0; i < a.xs.size(); ++i) {
          if (a.xs[i] != b.xs[i]) return false;
        }
        return cached_diamond(a.op, b.op, opts_.diamond) <=
               opts_.lambda + opts_.diamond_slack;
      }
    }
    return false;
  }

  MatchRes match(const Configuration& raw1, const Configuration& raw2,
                 std::size_t depth) {
    Configuration c1(norm(raw1.proc), raw1.state);
    Configuration c2(norm(raw2.proc), raw2.state);
    const std::string k1 = c1.key(opts_.state_tol);
    const std::string k2 = c2.key(opts_.state_tol);

    // Reflexive / lambda-closed base cases.
    const std::string p1 = k1.substr(0, k1.rfind('@'));
    const std::string p2 = k2.substr(0, k2.rfind('@'));
    if (p1 == p2) {
      if (k1 == k2) return {};
      if (opts_.lambda_game &&
          tdist(c1.state, c2.state) <= opts_.lambda + 1e-12) {
        return {};
      }
    }

    const auto key = std::make_pair(k1, k2);
    if (auto it = memo_.find(key); it != memo_.end()) {
      MatchRes r;
      r.r = it->second;
      return r;
    }
    if (auto it = onstack_.find(key); it != onstack_.end()) {
      MatchRes r;  // coinductive assumption
      r.low = it->second;
      return r;
    }
    if (depth == 0) {
      bounds_hit = true;
      MatchRes r;
      r.r = Result::unknown;
      return r;
    }

    const std::size_t my_index = stack_size_++;
    onstack_.emplace(key, my_index);

    std::vector<Transition> m1 = sos::enabled(c1, env_, opts_.policy);
    std::vector<Transition> m2 = sos::enabled(c2, env_, opts_.policy);

    MatchRes out;
    MatchRes d1 = direction(c1, c2, m1, m2, depth, "left", "right");
    out.low = std::min(out.low, d1.low);
    if (d1.r == Result::not_bisimilar) {
      out.r = d1.r;
      out.wit = std::move(d1.wit);
    } else {
      MatchRes d2 = direction(c2, c1, m2, m1, depth, "right", "left");
      out.low = std::min(out.low, d2.low);
      if (d2.r == Result::not_bisimilar) {
        out.r = d2.r;
        out.wit = std::move(d2.wit);
      } else if (d1.r == Result::unknown || d2.r == Result::unknown) {
        out.r = Result::unknown;
      }
    }

    onstack_.erase(key);
    --stack_size_;

    if (out.r == Result::not_bisimilar) {
      memo_.emplace(key, out.r);
    } else if (out.r == Result::bisimilar && out.low >= my_index) {
      // Self-contained positive: the visited set is a bisimulation.
      memo_.emplace(key, out.r);
    }
    if (out.low >= my_index) out.low = SIZE_MAX;
    return out;
  }

  // Every move of `a` must be answerable by `b`.
  MatchRes direction(const Configuration& a, const Configuration& b,
                     const std::vector<Transition>& ma,
                     const std::vector<Transition>& mb, std::size_t depth,
                     const char* a_side, const char* b_side) {
    MatchRes out;
    const std::set<std::string>& fva = a.proc->fv();
    const std::set<std::string>& fvb = b.proc->fv();

    std::set<std::string> input_caps_seen;
    std::set<std::string> input_caps_admissible;

    for (const Transition& m : ma) {
      if (m.action.is_input()) {
        const std::string cap = m.action.chan + "/" + m.action.var.type.name;
        input_caps_seen.insert(cap);
        const std::string& x = m.action.var.name;
        if (fva.count(x) || fvb.count(x)) continue;  // not required
        input_caps_admissible.insert(cap);
        MatchRes r = match_input(m, b, mb, depth, a_side, b_side);
        out.low = std::min(out.low, r.low);
        if (r.r == Result::not_bisimilar) {
          out.r = r.r;
          out.wit = std::move(r.wit);
          return out;
        }
        if (r.r == Result::unknown) out.r = Result::unknown;
      } else {
        MatchRes r = match_noninput(m, mb, depth, a_side, b_side);
        out.low = std::min(out.low, r.low);
        if (r.r == Result::not_bisimilar) {
          out.r = r.r;
          out.wit = std::move(r.wit);
          return out;
        }
        if (r.r == Result::unknown) out.r = Result::unknown;
      }
    }
    // An input capability whose every enumerated target collides with
    // the free variables cannot be checked within the finite pool.
    for (const std::string& c : input_caps_seen) {
      if (!input_caps_admissible.count(c)) {
        bounds_hit = true;
        out.r = Result::unknown;
      }
    }
    return out;
  }

  MatchRes match_noninput(const Transition& m,
                          const std::vector<Transition>& mb,
                          std::size_t depth, const char* a_side,
                          const char* b_side) {
    MatchRes best;
    bool any_unknown = false;
    std::vector<WitnessStep> first_fail;
    for (const Transition& cand : mb) {
      if (cand.action.is_input()) continue;
      if (!action_match(m.action, cand.action)) continue;
      MatchRes r = match(m.target, cand.target, depth - 1);
      best.low = std::min(best.low, r.low);
      if (r.r == Result::bisimilar) {
        return best;  // matched
      }
      if (r.r == Result::unknown) {
        any_unknown = true;
      } else if (first_fail.empty()) {
        first_fail.push_back({a_side, m.action.label});
        first_fail.push_back({b_side, cand.action.label});
        for (WitnessStep& s : r.wit) first_fail.push_back(std::move(s));
      }
    }
    if (any_unknown) {
      best.r = Result::unknown;
      return best;
    }
    best.r = Result::not_bisimilar;
    if (first_fail.empty()) {
      best.wit.push_back({a_side, m.action.label});
    } else {
      best.wit = std::move(first_fail);
    }
    return best;
  }

  MatchRes match_input(const Transition& m, const Configuration& b,
                       const std::vector<Transition>& mb, std::size_t depth,
                       const char* a_side, const char* b_side) {
    const Var& x = m.action.var;
    MatchRes best;
    bool any_unknown = false;
    std::vector<WitnessStep> first_fail;
    for (const Transition& cand : mb) {
      if (!cand.action.is_input()) continue;
      if (cand.action.chan != m.action.chan ||
          cand.action.var.name != x.name) {
        continue;
      }
      // for all admissible y: residuals under {y/x} must be related
      bool cand_ok = true;
      bool cand_unknown = false;
      for (const Var& y : quantifier_pool(b, x, m.target.proc,
                                          cand.target.proc)) {
        ProcPtr pa = retarget(m.target.proc, x, y);
        ProcPtr pb = retarget(cand.target.proc, x, y);
        MatchRes r = match({pa, m.target.state}, {pb, cand.target.state},
                           depth - 1);
        best.low = std::min(best.low, r.low);
        if (r.r == Result::not_bisimilar) {
          cand_ok = false;
          if (first_fail.empty()) {
            first_fail.push_back({a_side, m.action.label});
            first_fail.push_back({b_side, cand.action.label});
            for (WitnessStep& s : r.wit) first_fail.push_back(std::move(s));
          }
          break;
        }
        if (r.r == Result::unknown) cand_unknown = true;
      }
      if (cand_ok && !cand_unknown) {
        return best;  // matched
      }
      if (cand_ok && cand_unknown) any_unknown = true;
    }
    if (any_unknown) {
      best.r = Result::unknown;
      return best;
    }
    best.r = Result::not_bisimilar;
    if (first_fail.empty()) {
      best.wit.push_back({a_side, m.action.label});
    } else {
      best.wit = std::move(first_fail);
    }
    return best;
  }

  std::vector<Var> quantifier_pool(const Configuration& conf, const Var& x,
                                   const ProcPtr& pa, const ProcPtr& pb) {
    std::vector<Var> pool;
    for (const Var& v : conf.state->reg().vars()) {
      if (v.type != x.type) continue;
      const bool excluded = (pa->fv().count(v.name) || pb->fv().count(v.name)) &&
                            v.name != x.name;
      if (!excluded) pool.push_back(v);
    }
    return pool;
  }

  ProcPtr retarget(const ProcPtr& p, const Var& x, const Var& y) {
    if (x.name == y.name) return p;
    return ast::subst_apply(p, ast::Subst::swap(x, y), env_,
                            /*check_defined=*/false);
  }
};

void require_compatible(const Configuration& c1, const Configuration& c2) {
  if (c1.state->reg() != c2.state->reg()) {
    throw std::invalid_argument("configurations have different registers");
  }
}

Verdict run_game(const Configuration& c1, const Configuration& c2,
                 const ast::Env& env, const GameOptions& opts) {
  require_compatible(c1, c2);
  Game g(env, opts);
  MatchRes r = g.run(c1, c2);
  Verdict v;
  v.result = r.r;
  v.witness = std::move(r.wit);
  v.bounds_hit = g.bounds_hit;
  if (opts.lambda_game) v.lambda = opts.lambda;
  return v;
}

}  // namespace

Verdict bisim_config(const Configuration& c1, const Configuration& c2,
                     const ast::Env& env, const GameOptions& opts) {
  GameOptions o = opts;
  o.lambda_game = false;
  return run_game(c1, c2, env, o);
}

Verdict lambda_bisim_config(const Configuration& c1, const Configuration& c2,
                            double lambda, const ast::Env& env,
                            const GameOptions& opts) {
  if (lambda < 0) {
    throw std::invalid_argument("lambda must be nonnegative");
  }
  GameOptions o = opts;
  o.lambda_game = true;
  o.lambda = lambda;
  return run_game(c1, c2, env, o);
}

std::vector<qnum::QState> build_state_suite(
    const qnum::Register& reg, const std::vector<qnum::QState>& user_states,
    const GameOptions& opts) {
  std::vector<qnum::QState> suite = user_states;
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> g(0.0, 1.0);

  auto haar_ket = [&](std::size_t d) {
    qnum::ComplexMatrix v(d, 1);
    double n2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double re = g(rng), im = g(rng);
      v.at(i, 0) = {re, im};
      n2 += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < d; ++i) v.at(i, 0) *= inv;
    return v;
  };

  for (std::size_t k = 0; k < opts.suite_products; ++k) {
    std::map<std::string, qnum::ComplexMatrix> kets;
    for (const qnum::Var& v : reg.vars()) {
      kets.emplace(v.name, haar_ket(v.type.dim));
    }
    suite.push_back(qnum::product_pure_state(reg, kets));
  }
  for (std::size_t k = 0; k < opts.suite_entangled; ++k) {
    qnum::ComplexMatrix ket = haar_ket(reg.total_dim());
    suite.push_back(qnum::QState(reg, qnum::outer(ket),
                                 qnum::TraceKind::density));
  }
  return suite;
}

namespace {

Verdict process_check(const ast::ProcPtr& p, const ast::ProcPtr& q,
                      const ast::Env& env, const qnum::Register& reg,
                      const std::vector<qnum::QState>& user_states,
                      const GameOptions& opts) {
  for (const ast::ProcPtr& t : {p, q}) {
    if (ast::WfReport r = ast::well_formed(t, env); !r.ok) {
      throw std::invalid_argument("ill-formed process: " + r.message);
    }
  }
  std::vector<qnum::QState> suite = build_state_suite(reg, user_states, opts);
  if (suite.empty()) {
    throw std::invalid_argument("empty state suite");
  }
  Verdict out;
  out.suite_size = suite.size();
  bool any_unknown = false;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    auto state = std::make_shared<const qnum::QState>(suite[i]);
    Verdict v = run_game({p, state}, {q, state}, env, opts);
    out.bounds_hit = out.bounds_hit || v.bounds_hit;
    if (v.result == Result::not_bisimilar) {
      out.result = Result::not_bisimilar;
      out.witness = std::move(v.witness);
      out.note = "refuted on suite state " + std::to_string(i);
      return out;
    }
    any_unknown = any_unknown || v.result == Result::unknown;
  }
  if (any_unknown) {
    out.result = Result::unknown;
  } else {
    out.result = Result::bisimilar;
    out.note = "positive over the tested state suite";
  }
  if (opts.lambda_game) out.lambda = opts.lambda;
  return out;
}

}  // namespace

Verdict bisim_process(const ast::ProcPtr& p, const ast::ProcPtr& q,
                      const ast::Env& env, const qnum::Register& reg,
                      const std::vector<qnum::QState>& user_states,
                      const GameOptions& opts) {
  GameOptions o = opts;
  o.lambda_game = false;
  return process_check(p, q, env, reg, user_states, o);
}

Verdict lambda_bisim_process(const ast::ProcPtr& p, const ast::ProcPtr& q,
                             double lambda, const ast::Env& env,
                             const qnum::Register& reg,
                             const std::vector<qnum::QState>& user_states,
                             const GameOptions& opts) {
  GameOptions o = opts;
  o.lambda_game = true;
  o.lambda = lambda;
  return process_check(p, q, env, reg, user_states, o);
}

Verdict reduction_bisim(const ast::ProcPtr& p, const ast::ProcPtr& q,
                        const ast::Env& env, const qnum::Register& reg,
                        const std::vector<qnum::QState>& user_states,
                        const GameOptions& opts) {
  GameOptions o = opts;
  o.nf_mode = true;
  o.lambda_game = false;
  Verdict v = process_check(reduce::normal_form(p, env),
                            reduce::normal_form(q, env), env, reg,
                            user_states, o);
  if (v.positive()) {
    v.note = "positive over the tested state suite (normal-form decision; "
             "sound, possibly incomplete for the transitive closure)";
  }
  return v;
}

ast::ProcPtr expansion_rhs(const ast::ProcPtr& p, const ast::ProcPtr& q,
                           const std::set<std::string>& hide,
                           const ast::Env& env, const qnum::Register& reg,
                           const sos::FreshPolicy& policy) {
  for (const ast::ProcPtr& t : {p, q}) {
    if (!ast::is_finite(t)) {
      throw std::invalid_argument(
          "expansion_rhs needs finite processes (no constants)");
    }
  }
  // Transitions are state-independent (only successor states differ),
  // so any valid state works for the enumeration.
  qnum::ComplexMatrix mixed = qnum::ComplexMatrix::identity(reg.total_dim());
  mixed *= qnum::cplx{1.0 / static_cast<double>(reg.total_dim()), 0.0};
  auto state = std::make_shared<const qnum::QState>(
      qnum::QState::trusted(reg, std::move(mixed), qnum::TraceKind::density));

  std::vector<ast::ProcPtr> summands;

  auto interleave = [&](const ast::ProcPtr& active,
                        const ast::ProcPtr& passive, bool active_left) {
    for (const Transition& t : sos::enabled({active, state}, env, policy)) {
      const Action& a = t.action;
      if (auto cn = sos::cn_action(a); cn && hide.count(*cn)) continue;
      if (a.is_input() && passive->fv().count(a.var.name)) continue;
      ast::ProcPtr par = active_left
                             ? ast::make_par(t.target.proc, passive)
                             : ast::make_par(passive, t.target.proc);
      ast::ProcPtr body = ast::make_restrict(std::move(par), hide);
      switch (a.kind) {
        case AKind::Tau:
          summands.push_back(ast::make_tau(std::move(body)));
          break;
        case AKind::Op:
          summands.push_back(
              ast::make_op(a.op, a.label.substr(0, a.label.find('[')),
                           a.xs, std::move(body)));
          break;
        case AKind::In:
          summands.push_back(
              ast::make_input(a.chan, a.var, std::move(body)));
          break;
        case AKind::Out:
          summands.push_back(
              ast::make_output(a.chan, a.var, std::move(body)));
          break;
      }
    }
  };
  interleave(p, q, true);
  interleave(q, p, false);

  // Comm summands: tau.(P' || Q')\L for matching input/output pairs.
  auto comm = [&](const ast::ProcPtr& recv, const ast::ProcPtr& send,
                  bool recv_left) {
    for (const Transition& s : sos::enabled({send, state}, env, policy)) {
      if (s.action.kind != AKind::Out) continue;
      for (const ast::ProcPtr& cont :
           sos::input_continuations(recv, s.action.chan, s.action.var, env)) {
        ast::ProcPtr par = recv_left ? ast::make_par(cont, s.target.proc)
                                     : ast::make_par(s.target.proc, cont);
        summands.push_back(
            ast::make_tau(ast::make_restrict(std::move(par), hide)));
      }
    }
  };
  comm(p, q, true);
  comm(q, p, false);

  if (summands.empty()) return ast::make_nil();
  ast::ProcPtr acc = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) {
    acc = ast::make_sum(std::move(acc), summands[i]);
  }
  return acc;
}

}  // namespace qccs::equiv
