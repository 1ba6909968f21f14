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

// End-to-end acceptance checks. Each numbered criterion prints a single
// PASS/FAIL line; the process exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qccs/corpus/corpus.hpp"
#include "qccs/equiv/distance.hpp"
#include "qccs/equiv/laws.hpp"
#include "qccs/parse/pretty.hpp"
#include "qccs/reduce/reduce.hpp"
#include "sos_properties.hpp"

using namespace qccs;
using ast::ProcPtr;
using ast::Var;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

const qnum::VarType kQubit{"qubit", 2};

Outcome replay(const std::vector<corpus::Check>& checks) {
  Outcome o;
  for (const corpus::Check& c : checks) {
    o.require(c.pass, c.name + ": " + c.detail);
  }
  return o;
}

// --- criteria 1..3: example replays -----------------------------------

Outcome criterion_bell() { return replay(corpus::replay_bell()); }
Outcome criterion_measurement() {
  return replay(corpus::replay_measurement());
}
Outcome criterion_noisy() { return replay(corpus::replay_noisy_channel()); }

// --- criterion 4: monoid laws ------------------------------------------

Outcome criterion_monoid() {
  Outcome o;
  equiv::LawContext ctx = equiv::make_law_context();
  equiv::LawRunOptions opts;
  opts.trials = 100;
  std::vector<equiv::LawOutcome> results = equiv::run_monoid_laws(ctx, opts);
  o.require(results.size() == 9, "expected nine laws");
  for (const equiv::LawOutcome& law : results) {
    std::ostringstream os;
    os << law.law << ": " << law.pass << " pass, " << law.fail << " fail, "
       << law.unknown << " unknown; first failure: " << law.first_failure;
    o.require(law.ok() && law.pass == opts.trials, os.str());
  }
  return o;
}

// --- criterion 5: expansion law ------------------------------------------

Outcome criterion_expansion() {
  Outcome o;
  equiv::LawContext ctx = equiv::make_law_context();
  equiv::LawRunOptions opts;
  opts.trials = 50;
  equiv::LawOutcome law = equiv::run_expansion_law(ctx, opts);
  std::ostringstream os;
  os << law.pass << " pass, " << law.fail << " fail, " << law.unknown
     << " unknown; first failure: " << law.first_failure;
  o.require(law.ok() && law.pass == opts.trials, os.str());
  return o;
}

// --- criterion 6: congruence ------------------------------------------

Outcome criterion_congruence() {
  Outcome o;
  equiv::LawContext ctx = equiv::make_law_context();
  equiv::LawRunOptions opts;
  opts.trials = 50;
  std::vector<equiv::LawOutcome> results =
      equiv::run_congruence_suite(ctx, opts);
  o.require(results.size() == 7, "expected seven constructor closures");
  for (const equiv::LawOutcome& law : results) {
    std::ostringstream os;
    os << law.law << ": " << law.pass << " pass, " << law.fail << " fail, "
       << law.unknown << " unknown; first failure: " << law.first_failure;
    o.require(law.ok(), os.str());
  }
  return o;
}

// --- criterion 7: transition meta-lemmas -------------------------------

Outcome criterion_meta_lemmas() {
  Outcome o;
  equiv::LawContext ctx = equiv::make_law_context();
  ast::Env env;
  sos::FreshPolicy policy;
  equiv::ProcessGen gen(ctx, {});
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 500 && o.pass; ++t) {
    ProcPtr p = gen.gen_top(rng);
    sos::Configuration c{p, testprops::random_state(ctx.reg, rng)};
    if (std::string e = testprops::check_action_lemma(c, env, policy);
        !e.empty()) {
      o.fail("action lemma: " + e);
    }
    if (std::string e = testprops::check_var_lemma(c, env, policy);
        !e.empty()) {
      o.fail("var lemma: " + e);
    }
    if (std::string e = testprops::check_input_lemma(c, env, policy);
        !e.empty()) {
      o.fail("input lemma: " + e);
    }
    if (std::string e = testprops::check_state_independence(
            p, ctx.reg, env, policy, rng, 4);
        !e.empty()) {
      o.fail("state independence: " + e);
    }
    if (std::string e = testprops::check_alpha_lemma(
            p, gen.alpha_variant(p, rng),
            testprops::random_state(ctx.reg, rng), env, policy);
        !e.empty()) {
      o.fail("alpha lemma: " + e);
    }
    ast::Subst f = equiv::random_permutation_subst(ctx.reg, rng);
    if (std::string e = testprops::check_subst_lemma(
            p, f, testprops::random_state(ctx.reg, rng), env, policy);
        !e.empty()) {
      o.fail("substitution lemmas: " + e);
    }
  }
  return o;
}

// --- criterion 8: reduction -------------------------------------------

Outcome criterion_reduction() {
  Outcome o;
  ast::Env env;
  equiv::LawContext ctx = equiv::make_law_context();
  equiv::ProcessGen gen(ctx, {5});
  std::mt19937_64 rng(4321);

  for (int t = 0; t < 500 && o.pass; ++t) {
    ProcPtr p = gen.gen_top(rng);
    ProcPtr n = reduce::normal_form(p, env);
    o.require(ast::alpha_eq_choi(reduce::normal_form(n, env), n, 1e-9),
              "normal form not idempotent for " + parse::pretty(p));
    // one structural contraction commutes with normalization
    std::function<std::size_t(const ProcPtr&)> sites =
        [&](const ProcPtr& q) -> std::size_t {
      std::size_t k = 0;
      if (q->kind == ast::PKind::Op && q->a->kind == ast::PKind::Op) ++k;
      if (q->a) k += sites(q->a);
      if (q->b) k += sites(q->b);
      return k;
    };
    std::function<ProcPtr(const ProcPtr&, std::size_t&)> contract =
        [&](const ProcPtr& q, std::size_t& pos) -> ProcPtr {
      using ast::PKind;
      switch (q->kind) {
        case PKind::Nil:
        case PKind::Constant:
          return q;
        case PKind::Op:
          if (q->a->kind == PKind::Op) {
            if (pos == 0) {
              auto [op, xs] = reduce::compose_run(
                  {{q->op, q->op_args}, {q->a->op, q->a->op_args}});
              return ast::make_op(op, op->label(), xs, q->a->a);
            }
            --pos;
          }
          return ast::make_op(q->op, q->op_name, q->op_args,
                              contract(q->a, pos));
        case PKind::Tau:
          return ast::make_tau(contract(q->a, pos));
        case PKind::Input:
          return ast::make_input(q->chan, q->comm_var, contract(q->a, pos));
        case PKind::Output:
          return ast::make_output(q->chan, q->comm_var, contract(q->a, pos));
        case PKind::Sum:
          return ast::make_sum(contract(q->a, pos), contract(q->b, pos));
        case PKind::Par:
          return ast::make_par(contract(q->a, pos), contract(q->b, pos));
        case PKind::Restrict:
          return ast::make_restrict(contract(q->a, pos), q->hide);
      }
      return q;
    };
    const std::size_t k = sites(p);
    if (k > 0) {
      std::size_t pos = rng() % k;
      ProcPtr p2 = contract(p, pos);
      o.require(ast::alpha_eq_choi(reduce::normal_form(p2, env), n, 1e-7),
                "single-step confluence failed for " + parse::pretty(p));
    }
  }

  // H.H ~* I and T.T ~* S via reduction_bisim
  equiv::GameOptions game;
  game.suite_products = 10;
  game.suite_entangled = 5;
  const Var x = ctx.reg.var("x");
  qnum::SuperOpPtr h = qnum::named_gate("H");
  qnum::SuperOpPtr tg = qnum::named_gate("T");
  ProcPtr hh = ast::make_op(h, "H", {x},
                            ast::make_op(h, "H", {x}, ast::make_nil()));
  ProcPtr id =
      ast::make_op(qnum::named_gate("I"), "I", {x}, ast::make_nil());
  ProcPtr tt = ast::make_op(tg, "T", {x},
                            ast::make_op(tg, "T", {x}, ast::make_nil()));
  ProcPtr s =
      ast::make_op(qnum::named_gate("S"), "S", {x}, ast::make_nil());
  o.require(
      equiv::reduction_bisim(hh, id, env, ctx.reg, {}, game).positive(),
      "H.H not reduction-bisimilar to I");
  o.require(
      equiv::reduction_bisim(tt, s, env, ctx.reg, {}, game).positive(),
      "T.T not reduction-bisimilar to S");
  return o;
}

// --- criterion 9: distances -------------------------------------------

Outcome criterion_distances() {
  Outcome o;
  ast::Env env;
  equiv::LawContext ctx = equiv::make_law_context();
  const Var x = ctx.reg.var("x");
  const Var z = ctx.reg.var("z");

  // trace distance |0><0| vs |+><+|: 1/sqrt(2) within 1e-9
  qnum::Register rx({{"x", kQubit}});
  qnum::QState zero = qnum::product_pure_state(rx, {});
  qnum::ComplexMatrix plus(2, 1);
  plus.at(0, 0) = 1.0 / std::numbers::sqrt2;
  plus.at(1, 0) = 1.0 / std::numbers::sqrt2;
  qnum::QState plus_state(rx, qnum::outer(plus), qnum::TraceKind::density);
  const double td = qnum::trace_distance(zero, plus_state);
  o.require(std::abs(td - 1.0 / std::numbers::sqrt2) <= 1e-9,
            "trace distance of |0> vs |+> is " + std::to_string(td));

  // diamond distance Z vs I in [1 - 1e-6, 1]
  qnum::DiamondOptions dopts;
  const double dz = qnum::diamond_distance(*qnum::named_gate("Z"),
                                           *qnum::named_gate("I"), dopts);
  o.require(dz >= 1.0 - 1e-6 && dz <= 1.0,
            "diamond(Z, I) = " + std::to_string(dz));

  // diamond distance S vs I against the brute-force oracle
  {
    qnum::SuperOpPtr sgate = qnum::named_gate("S");
    qnum::SuperOpPtr id = qnum::named_gate("I");
    auto objective = [&](const qnum::ComplexMatrix& psi) {
      const qnum::ComplexMatrix rho = qnum::outer(psi);
      const qnum::ComplexMatrix eye = qnum::ComplexMatrix::identity(2);
      auto lift = [&](const qnum::SuperOp& ch) {
        qnum::ComplexMatrix out(4, 4);
        for (const qnum::ComplexMatrix& k : ch.kraus()) {
          qnum::ComplexMatrix kl = qnum::mat_tensor(k, eye);
          out += kl * rho * kl.dagger();
        }
        return out;
      };
      return qnum::trace_distance(lift(*sgate), lift(*id));
    };
    double oracle = 0.0;
    std::mt19937_64 rng(99);
    for (int t = 0; t < 4000; ++t) {
      oracle = std::max(oracle, objective(testutil::random_ket(rng, 4)));
    }
    for (int t = 0; t <= 400; ++t) {
      const double theta = t * (std::numbers::pi / 2) / 400;
      qnum::ComplexMatrix psi(4, 1);
      psi.at(0, 0) = std::cos(theta);
      psi.at(3, 0) = std::sin(theta);
      oracle = std::max(oracle, objective(psi));
    }
    const double ds = qnum::diamond_distance(*sgate, *id, dopts);
    std::ostringstream os;
    os << "diamond(S, I) = " << ds << ", oracle = " << oracle;
    o.require(std::abs(ds - oracle) <= 1e-3, os.str());
    o.require(std::abs(ds - 1.0 / std::numbers::sqrt2) <= 1e-3, os.str());
  }

  // dsb non-expansiveness across the constructors, 2e-3 slack,
  // 21 sampled instances; lambda-monotone traces throughout
  equiv::GameOptions game;
  std::vector<equiv::DistanceReport> reports;
  auto dsb = [&](const ProcPtr& p, const ProcPtr& q) {
    reports.push_back(equiv::dsb_estimate(p, q, env, ctx.reg, {}, game));
    return reports.back().interval;
  };
  std::mt19937_64 rng(7ull);
  equiv::ProcessGen tp_gen(ctx, {2, /*tp_only=*/true});
  const qnum::SuperOpPtr h = qnum::named_gate("H");
  for (int i = 0; i < 3 && o.pass; ++i) {
    const double theta = 0.15 + 0.2 * i;
    ProcPtr p = ast::make_op(qnum::phase_rotation(theta), "Rz", {x},
                             ast::make_nil());
    ProcPtr q =
        ast::make_op(qnum::named_gate("I"), "I", {x}, ast::make_nil());
    const equiv::Interval base = dsb(p, q);
    o.require(!base.hi_infinite, "base distance unexpectedly infinite");

    struct Wrapped {
      std::string name;
      ProcPtr wp, wq;
    };
    ProcPtr r = tp_gen.gen(rng, {z}, 2);
    std::vector<Wrapped> ctors{
        {"tau", ast::make_tau(p), ast::make_tau(q)},
        {"output", ast::make_output("c", z, p), ast::make_output("c", z, q)},
        {"input", ast::make_input("c", Var{"u7", kQubit}, p),
         ast::make_input("c", Var{"u7", kQubit}, q)},
        {"op", ast::make_op(h, "H", {z}, p), ast::make_op(h, "H", {z}, q)},
        {"sum", ast::make_sum(p, r), ast::make_sum(q, r)},
        {"par", ast::make_par(p, r), ast::make_par(q, r)},
        {"restrict", ast::make_restrict(p, {"d"}),
         ast::make_restrict(q, {"d"})},
    };
    for (const Wrapped& w : ctors) {
      const equiv::Interval wrapped = dsb(w.wp, w.wq);
      std::ostringstream os;
      os << "non-expansiveness of " << w.name << " at theta = " << theta
         << ": wrapped hi = "
         << (wrapped.hi_infinite ? std::string("inf")
                                 : std::to_string(wrapped.hi))
         << ", base hi = " << base.hi;
      o.require(!wrapped.hi_infinite && wrapped.hi <= base.hi + 2e-3,
                os.str());
    }
  }

  // composition / triangle inequality of the hi estimates
  for (int i = 0; i < 3 && o.pass; ++i) {
    const double t1 = 0.1 + 0.1 * i, t2 = t1 + 0.2, t3 = t2 + 0.25;
    auto rot = [&](double th) {
      return ast::make_op(qnum::phase_rotation(th), "Rz", {x},
                          ast::make_nil());
    };
    const equiv::Interval pq = dsb(rot(t1), rot(t2));
    const equiv::Interval qr = dsb(rot(t2), rot(t3));
    const equiv::Interval pr = dsb(rot(t1), rot(t3));
    std::ostringstream os;
    os << "triangle: d(P,R) = " << pr.hi << " vs " << pq.hi << " + "
       << qr.hi;
    o.require(pr.hi <= pq.hi + qr.hi + 2e-3, os.str());
  }

  // every bisection trace is lambda-monotone
  for (const equiv::DistanceReport& rep : reports) {
    double max_rej = -1.0, min_acc = 2.0;
    for (const equiv::BisectionPoint& b : rep.trace) {
      if (b.accepted) {
        min_acc = std::min(min_acc, b.lambda);
      } else {
        max_rej = std::max(max_rej, b.lambda);
      }
    }
    o.require(max_rej < min_acc, "non-monotone bisection trace");
  }
  return o;
}

// --- criterion 10: contractivity ---------------------------------------

Outcome criterion_contractivity() {
  Outcome o;
  std::mt19937_64 rng(55);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 2 + (t % 2) * 2;  // qubit and two-qubit channels
    qnum::SuperOpPtr e = testutil::random_channel(rng, d, 2);
    qnum::ComplexMatrix rho = testutil::random_density(rng, d);
    qnum::ComplexMatrix sig = testutil::random_density(rng, d);
    const double before = qnum::trace_distance(rho, sig);
    const double after =
        qnum::trace_distance(e->apply_matrix(rho), e->apply_matrix(sig));
    if (after > before + 1e-9) {
      std::ostringstream os;
      os << "violation at trial " << t << ": " << after << " > " << before;
      o.fail(os.str());
      break;
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1. Bell-pair replay", criterion_bell},
      {"2. measurement replay", criterion_measurement},
      {"3. noisy-channel replay (Kraus and system-environment)",
       criterion_noisy},
      {"4. monoid-law suite (9 laws x 100 processes)", criterion_monoid},
      {"5. expansion law (50 instances)", criterion_expansion},
      {"6. congruence closures (7 x 50 pairs)", criterion_congruence},
      {"7. transition meta-lemmas (500 processes/substitutions)",
       criterion_meta_lemmas},
      {"8. reduction normal forms (500 processes, H.H ~* I, T.T ~* S)",
       criterion_reduction},
      {"9. distances (trace, diamond, D_sb bounds)", criterion_distances},
      {"10. contractivity (200 channel/state triples)",
       criterion_contractivity},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::left
              << std::setw(58) << c.name << " [" << std::fixed
              << std::setprecision(1) << secs << "s]";
    if (!o.pass) std::cout << "\n      " << o.detail;
    std::cout << "\n";
  }
  std::cout << (all ? "acceptance: all criteria passed"
                    : "acceptance: FAILURES present")
            << "\n";
  return all ? 0 : 1;
}
