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

#ifndef QCCS_EQUIV_GAME_HPP
#define QCCS_EQUIV_GAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "qccs/qnum/distance.hpp"
#include "qccs/sos/lts.hpp"
#include "qccs/sos/semantics.hpp"

namespace qccs::equiv {

enum class Result { bisimilar, not_bisimilar, unknown };

struct WitnessStep {
  std::string side;    // "left" | "right"
  std::string action;  // display label
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool hi_infinite = false;
};

struct Verdict {
  Result result = Result::unknown;
  std::vector<WitnessStep> witness;  // distinguishing path when negative
  std::size_t suite_size = 0;
  bool bounds_hit = false;
  std::optional<double> lambda;
  std::optional<Interval> interval;
  std::string note;

  std::string to_json() const;
  bool positive() const { return result == Result::bisimilar; }
};

struct GameOptions {
  std::size_t max_rounds = 64;   // game depth bound
  double chan_tol = qnum::kTolChannel;
  double state_tol = 1e-9;       // canonicalization grid
  bool lambda_game = false;      // approximate matching rules
  double lambda = 0.0;
  double diamond_slack = 1e-6;   // accept-side slack for the estimator
  qnum::DiamondOptions diamond{8, 40, 0, 0x9e3779b97f4a7c15ULL, 1, 1e-12};
  sos::FreshPolicy policy;
  // default suite composition (bisim_process and the estimators)
  std::size_t suite_products = 25;
  std::size_t suite_entangled = 10;
  std::uint64_t seed = 0x5eed5eedULL;
  bool nf_mode = false;          // normalize op runs during play
  double bisect_tol = 1e-3;
};

/// Coinductive strong-bisimulation game on two configurations over the
/// same register. Positive results are exact for the explored space;
/// unknown is returned only when a bound truncated an undecided branch.
Verdict bisim_config(const sos::Configuration& c1,
                     const sos::Configuration& c2, const ast::Env& env,
                     const GameOptions& opts);

/// Approximate game: Op moves match within diamond distance lambda and
/// state perturbations within trace distance lambda are absorbed.
Verdict lambda_bisim_config(const sos::Configuration& c1,
                            const sos::Configuration& c2, double lambda,
                            const ast::Env& env, const GameOptions& opts);

/// Default test suite: the user states plus seeded random product and
/// entangled pure states over the register.
std::vector<qnum::QState> build_state_suite(
    const qnum::Register& reg, const std::vector<qnum::QState>& user_states,
    const GameOptions& opts);

/// Semi-decision of process bisimilarity over a state suite: exact
/// refutations, suite-relative confirmations.
Verdict bisim_process(const ast::ProcPtr& p, const ast::ProcPtr& q,
                      const ast::Env& env, const qnum::Register& reg,
                      const std::vector<qnum::QState>& user_states,
                      const GameOptions& opts);

/// Like bisim_process but under the lambda game.
Verdict lambda_bisim_process(const ast::ProcPtr& p, const ast::ProcPtr& q,
                             double lambda, const ast::Env& env,
                             const qnum::Register& reg,
                             const std::vector<qnum::QState>& user_states,
                             const GameOptions& opts);

/// Reduction bisimilarity, decided on normal forms with op-run
/// normalization during play; sound, possibly incomplete for the full
/// transitive closure.
Verdict reduction_bisim(const ast::ProcPtr& p, const ast::ProcPtr& q,
                        const ast::Env& env, const qnum::Register& reg,
                        const std::vector<qnum::QState>& user_states,
                        const GameOptions& opts);

/// The expansion-law right-hand side built from first-step transitions
/// of finite p and q.
ast::ProcPtr expansion_rhs(const ast::ProcPtr& p, const ast::ProcPtr& q,
                           const std::set<std::string>& hide,
                           const ast::Env& env, const qnum::Register& reg,
                           const sos::FreshPolicy& policy);

}  // namespace qccs::equiv

#endif
