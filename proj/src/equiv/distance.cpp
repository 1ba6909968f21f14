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

#include "qccs/equiv/distance.hpp"

#include <json.hpp>

#include "qccs/reduce/reduce.hpp"

namespace qccs::equiv {

std::string DistanceReport::to_json() const {
  nlohmann::json j;
  j["interval"]["lo"] = interval.lo;
  if (interval.hi_infinite) {
    j["interval"]["hi"] = "inf";
  } else {
    j["interval"]["hi"] = interval.hi;
  }
  j["bounds_hit"] = bounds_hit;
  j["trace"] = nlohmann::json::array();
  for (const BisectionPoint& p : trace) {
    j["trace"].push_back({{"lambda", p.lambda}, {"accepted", p.accepted}});
  }
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

namespace {

DistanceReport bisect(const ast::ProcPtr& p, const ast::ProcPtr& q,
                      const ast::Env& env, const qnum::Register& reg,
                      const std::vector<qnum::QState>& user_states,
                      const GameOptions& opts) {
  DistanceReport rep;
  auto accepted = [&](double lambda) {
    Verdict v = lambda_bisim_process(p, q, lambda, env, reg, user_states,
                                     opts);
    rep.bounds_hit = rep.bounds_hit || v.bounds_hit;
    const bool acc = v.positive();
    rep.trace.push_back({lambda, acc});
    return acc;
  };

  if (accepted(0.0)) {
    rep.interval = {0.0, 0.0, false};
    rep.note = "accepted at lambda = 0";
    return rep;
  }
  if (!accepted(1.0)) {
    rep.interval = {1.0, 1.0, true};
    rep.note = "refuted at lambda = 1 (no lambda repairs the mismatch)";
    return rep;
  }
  double lo = 0.0, hi = 1.0;
  while (hi - lo > opts.bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    if (accepted(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  rep.interval = {lo, hi, false};
  rep.note =
      "suite-relative acceptance; diamond distances are lower-bound "
      "estimates";
  return rep;
}

}  // namespace

DistanceReport dsb_estimate(const ast::ProcPtr& p, const ast::ProcPtr& q,
                            const ast::Env& env, const qnum::Register& reg,
                            const std::vector<qnum::QState>& user_states,
                            const GameOptions& opts) {
  return bisect(p, q, env, reg, user_states, opts);
}

DistanceReport dsrb_estimate(const ast::ProcPtr& p, const ast::ProcPtr& q,
                             const ast::Env& env, const qnum::Register& reg,
                             const std::vector<qnum::QState>& user_states,
                             const GameOptions& opts) {
  GameOptions o = opts;
  o.nf_mode = true;
  DistanceReport rep = bisect(reduce::normal_form(p, env),
                              reduce::normal_form(q, env), env, reg,
                              user_states, o);
  rep.note = "upper bound on the reduction-bisimulation distance (normal "
             "forms cost 0); " +
             rep.note;
  return rep;
}

}  // namespace qccs::equiv
