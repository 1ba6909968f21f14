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

#include <doctest.h>

#include <json.hpp>

#include "qccs/corpus/corpus.hpp"
#include "qccs/sos/lts.hpp"
#include "sos_properties.hpp"

using namespace qccs;
using ast::ProcPtr;
using ast::Var;
using sos::AKind;
using sos::Configuration;
using sos::Transition;

namespace {

const qnum::VarType kQubit{"qubit", 2};

struct Fixture {
  ast::Env env;
  equiv::LawContext ctx = equiv::make_law_context();
  sos::FreshPolicy policy;
  std::mt19937_64 rng{20260809};

  sos::StatePtr state() { return testprops::random_state(ctx.reg, rng); }
};

}  // namespace

TEST_CASE("base transition rules") {
  Fixture fx;
  const Var x = fx.ctx.reg.var("x");
  const Var z = fx.ctx.reg.var("z");

  // nil has no transitions
  CHECK(sos::enabled({ast::make_nil(), fx.state()}, fx.env, fx.policy)
            .empty());

  // tau strips the prefix, state untouched
  auto s = fx.state();
  auto ts = sos::enabled({ast::make_tau(ast::make_nil()), s}, fx.env,
                         fx.policy);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].action.kind == AKind::Tau);
  CHECK(ts[0].target.state == s);

  // Oper: H on x over |0> gives |+>
  qnum::QState zero = qnum::product_pure_state(fx.ctx.reg, {});
  auto hs = sos::enabled({ast::make_op(qnum::named_gate("H"), "H", {x},
                                       ast::make_nil()),
                          zero},
                         fx.env, fx.policy);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].action.label == "H[x]");
  qnum::QState plus =
      qnum::apply_superop(*qnum::named_gate("H"), {"x"}, zero);
  CHECK(qnum::max_abs_diff(hs[0].target.state->matrix(), plus.matrix()) ==
        0.0);

  // Output keeps the state
  auto os = sos::enabled(
      {ast::make_output("c", x, ast::make_nil()), s}, fx.env, fx.policy);
  REQUIRE(os.size() == 1);
  CHECK(os[0].action.label == "c!x");
  CHECK(os[0].target.state == s);

  // Input: one edge per policy target: x, y, #qubit_0 (z is free)
  ProcPtr in = ast::make_input(
      "c", fx.ctx.reg.var("y"),
      ast::make_par(ast::make_output("c", fx.ctx.reg.var("y"),
                                     ast::make_nil()),
                    ast::make_output("d", z, ast::make_nil())));
  auto is = sos::enabled({in, s}, fx.env, fx.policy);
  std::set<std::string> targets;
  for (const auto& t : is) {
    CHECK(t.action.kind == AKind::In);
    targets.insert(t.action.var.name);
  }
  CHECK(targets == std::set<std::string>{"x", "y", "#qubit_0"});
}

TEST_CASE("policy input targets") {
  // register {x, y : qubit}: targets of an input are x, y, #qubit_0
  qnum::Register reg = sos::seed_register(
      {{"x", kQubit}, {"y", kQubit}}, 1);
  sos::FreshPolicy policy;
  std::vector<Var> ts = policy.input_targets(reg, kQubit);
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].name == "x");
  CHECK(ts[1].name == "y");
  CHECK(ts[2].name == "#qubit_0");

  // a register without the binder's type surfaces as an error
  ast::Env env;
  auto st = std::make_shared<const qnum::QState>(
      qnum::product_pure_state(reg, {}));
  ProcPtr p = ast::make_input("c", Var{"q", {"qutrit", 3}}, ast::make_nil());
  CHECK_THROWS_AS(sos::enabled({p, st}, env, policy),
                  std::invalid_argument);
}

TEST_CASE("communication under restriction") {
  // <(c?y.P1' || c!x.P2')\{c}, rho>: exactly one tau transition
  Fixture fx;
  const Var x = fx.ctx.reg.var("x");
  const Var y{"u0", kQubit};
  ProcPtr p1 = ast::make_input("c", y,
                               ast::make_output("d", y, ast::make_nil()));
  ProcPtr p2 = ast::make_output("c", x, ast::make_tau(ast::make_nil()));
  ProcPtr p = ast::make_restrict(ast::make_par(p1, p2), {"c"});
  auto s = fx.state();
  auto ts = sos::enabled({p, s}, fx.env, fx.policy);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].action.kind == AKind::Tau);
  CHECK(ts[0].target.state == s);
  // continuation: (d!x.nil || tau.nil)\{c}
  CHECK(parse::pretty(ts[0].target.proc) ==
        "(d!x.nil || tau.nil)\\{c}");

  // undefined constants surface as errors
  CHECK_THROWS_AS(
      sos::enabled({ast::make_constant("NOPE", {}), s}, fx.env, fx.policy),
      std::invalid_argument);
}

TEST_CASE("recursion unfolds through Def") {
  Fixture fx;
  const Var y{"y", kQubit};
  // C() = c?y.H[y].d!y.C()
  ProcPtr body = ast::make_input(
      "c", y,
      ast::make_op(qnum::named_gate("H"), "H", {y},
                   ast::make_output("d", y, ast::make_constant("C", {}))));
  fx.env.define({"C", {}, body});
  auto ts =
      sos::enabled({ast::make_constant("C", {}), fx.state()}, fx.env,
                   fx.policy);
  CHECK(ts.size() == 4);  // x, y, z, #qubit_0 all admissible
  for (const auto& t : ts) CHECK(t.action.kind == AKind::In);
}

TEST_CASE("build_lts replays and bounds") {
  // finite process: depth bounded by the prefix depth, no truncation
  Fixture fx;
  const Var x = fx.ctx.reg.var("x");
  ProcPtr p = ast::make_tau(ast::make_op(qnum::named_gate("H"), "H", {x},
                                         ast::make_nil()));
  sos::Lts lts = sos::build_lts({p, fx.state()}, fx.env, {}, fx.policy);
  CHECK(lts.nodes.size() == 3);
  CHECK(lts.edges.size() == 2);
  CHECK_FALSE(lts.truncated);

  // recursive op application: states keep changing, node budget bites
  ProcPtr body = ast::make_op(qnum::amplitude_damping(0.3), "AD", {x},
                              ast::make_constant("D", {x}));
  fx.env.define({"D", {x}, body});
  qnum::QState plus = qnum::apply_superop(
      *qnum::named_gate("H"), {"x"},
      qnum::product_pure_state(fx.ctx.reg, {}));
  sos::Lts bounded = sos::build_lts({ast::make_constant("D", {x}), plus},
                                    fx.env, {64, 10}, fx.policy);
  CHECK(bounded.truncated);
  CHECK(bounded.nodes.size() <= 10);

  // deterministic output
  sos::Lts again = sos::build_lts({ast::make_constant("D", {x}), plus},
                                  fx.env, {64, 10}, fx.policy);
  CHECK(sos::lts_to_json(bounded) == sos::lts_to_json(again));
  CHECK(sos::lts_to_dot(bounded) == sos::lts_to_dot(again));

  // JSON shape
  auto j = nlohmann::json::parse(sos::lts_to_json(bounded));
  CHECK(j.contains("nodes"));
  CHECK(j.contains("edges"));
  CHECK(j.contains("root"));
  CHECK(j.contains("truncated"));
  CHECK(j["nodes"].is_array());
  CHECK(!j["truncated"].empty());
}

TEST_CASE("corpus replays") {
  for (const corpus::Check& c : corpus::run_all_replays()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("transition meta-properties on random terms") {
  Fixture fx;
  equiv::ProcessGen gen(fx.ctx, {});
  std::size_t checked = 0;
  for (int t = 0; t < 120; ++t) {
    ProcPtr p = gen.gen_top(fx.rng);
    Configuration c{p, fx.state()};
    {
      const std::string err = testprops::check_action_lemma(c, fx.env,
                                                            fx.policy);
      INFO(err);
      CHECK(err.empty());
    }
    {
      const std::string err = testprops::check_var_lemma(c, fx.env,
                                                         fx.policy);
      INFO(err);
      CHECK(err.empty());
    }
    {
      const std::string err = testprops::check_input_lemma(c, fx.env,
                                                           fx.policy);
      INFO(err);
      CHECK(err.empty());
    }
    {
      const std::string err = testprops::check_state_independence(
          p, fx.ctx.reg, fx.env, fx.policy, fx.rng, 4);
      INFO(err);
      CHECK(err.empty());
    }
    {
      const std::string err = testprops::check_alpha_lemma(
          p, gen.alpha_variant(p, fx.rng), fx.state(), fx.env, fx.policy);
      INFO(err);
      CHECK(err.empty());
    }
    {
      ast::Subst f = equiv::random_permutation_subst(fx.ctx.reg, fx.rng);
      const std::string err = testprops::check_subst_lemma(
          p, f, fx.state(), fx.env, fx.policy);
      INFO(err);
      CHECK(err.empty());
    }
    ++checked;
  }
  CHECK(checked == 120);
}
