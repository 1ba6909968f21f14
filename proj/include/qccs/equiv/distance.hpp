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

#ifndef QCCS_EQUIV_DISTANCE_HPP
#define QCCS_EQUIV_DISTANCE_HPP

#include "qccs/equiv/game.hpp"

namespace qccs::equiv {

struct BisectionPoint {
  double lambda;
  bool accepted;
};

struct DistanceReport {
  Interval interval;
  std::vector<BisectionPoint> trace;  // every lambda probed, in order
  bool bounds_hit = false;
  std::string note;

  std::string to_json() const;
};

/// Interval estimate for the strong bisimulation distance: bisection of
/// the lambda game over [0, 1] across the state suite. hi is the least
/// accepted lambda, lo the greatest refuted one; [1, inf) when even
/// lambda = 1 is refuted. Confirmations are suite-relative and the
/// diamond distances are estimator lower bounds; both caveats are
/// recorded in the note.
DistanceReport dsb_estimate(const ast::ProcPtr& p, const ast::ProcPtr& q,
                            const ast::Env& env, const qnum::Register& reg,
                            const std::vector<qnum::QState>& user_states,
                            const GameOptions& opts);

/// Upper-bound estimate for the reduction variant: dsb on the normal
/// forms (the reduction to normal form itself costs 0).
DistanceReport dsrb_estimate(const ast::ProcPtr& p, const ast::ProcPtr& q,
                             const ast::Env& env, const qnum::Register& reg,
                             const std::vector<qnum::QState>& user_states,
                             const GameOptions& opts);

}  // namespace qccs::equiv

#endif
