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

#include "qccs/equiv/laws.hpp"

#include <algorithm>

#include "qccs/ast/subst.hpp"
#include "qccs/parse/pretty.hpp"
#include "qccs/sos/semantics.hpp"

namespace qccs::equiv {

using ast::ProcPtr;
using ast::Var;

LawContext make_law_context() {
  LawContext ctx;
  const qnum::VarType qubit{"qubit", 2};
  std::vector<Var> declared{{"x", qubit}, {"y", qubit}, {"z", qubit}};
  ctx.reg = sos::seed_register(declared, 1);
  ctx.chans = {"c", "d"};
  ctx.unused_chan = "e";
  return ctx;
}

ProcessGen::ProcessGen(const LawContext& ctx, GenOptions opts)
    : ctx_(ctx), opts_(opts) {
  ops1_ = {{"H", qnum::named_gate("H")},
           {"X", qnum::named_gate("X")},
           {"Z", qnum::named_gate("Z")},
           {"T", qnum::named_gate("T")},
           {"AD", qnum::amplitude_damping(0.3)},
           {"M01", qnum::measurement_superop(
                       qnum::computational_measurement_ops(2),
                       {qnum::VarType{"qubit", 2}}, qnum::MeasureMode::total,
                       0, "M01")}};
  if (!opts_.tp_only) {
    ops1_.push_back({"M0", qnum::measurement_superop(
                               qnum::computational_measurement_ops(2),
                               {qnum::VarType{"qubit", 2}},
                               qnum::MeasureMode::branch, 0, "M0")});
  }
  ops2_ = {{"CNOT", qnum::named_gate("CNOT")}};
}

ProcPtr ProcessGen::gen(std::mt19937_64& rng, std::vector<Var> avail,
                        std::size_t depth) const {
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  if (depth == 0) return ast::make_nil();

  // weighted kind choice; structural kinds get rarer near the leaves
  enum { kNil, kTau, kOp1, kOp2, kIn, kOut, kSum, kPar, kRes };
  std::vector<int> kinds{kNil, kTau, kTau, kOp1, kOp1, kOp1, kIn, kIn, kSum,
                         kSum, kRes};
  if (avail.size() >= 2) kinds.push_back(kOp2);
  if (!avail.empty()) {
    kinds.push_back(kOut);
    kinds.push_back(kOut);
    kinds.push_back(kPar);
    kinds.push_back(kPar);
  }
  switch (kinds[pick(kinds.size())]) {
    case kNil:
      return ast::make_nil();
    case kTau:
      return ast::make_tau(gen(rng, avail, depth - 1));
    case kOp1: {
      if (avail.empty()) return ast::make_nil();
      const auto& [name, op] = ops1_[pick(ops1_.size())];
      const Var v = avail[pick(avail.size())];
      return ast::make_op(op, name, {v}, gen(rng, avail, depth - 1));
    }
    case kOp2: {
      std::size_t i = pick(avail.size());
      std::size_t j = pick(avail.size() - 1);
      if (j >= i) ++j;
      const auto& [name, op] = ops2_[pick(ops2_.size())];
      return ast::make_op(op, name, {avail[i], avail[j]},
                          gen(rng, avail, depth - 1));
    }
    case kIn: {
      const std::string chan = ctx_.chans[pick(ctx_.chans.size())];
      const Var binder{"u" + std::to_string(pick(4)), avail.empty()
                                                          ? qnum::VarType{
                                                                "qubit", 2}
                                                          : avail[0].type};
      std::vector<Var> inner = avail;
      bool shadowed = false;
      for (Var& v : inner) shadowed = shadowed || v.name == binder.name;
      if (!shadowed) inner.push_back(binder);
      return ast::make_input(chan, binder, gen(rng, inner, depth - 1));
    }
    case kOut: {
      const std::size_t i = pick(avail.size());
      const Var v = avail[i];
      std::vector<Var> rest = avail;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const std::string chan = ctx_.chans[pick(ctx_.chans.size())];
      return ast::make_output(chan, v, gen(rng, rest, depth - 1));
    }
    case kSum:
      return ast::make_sum(gen(rng, avail, depth - 1),
                           gen(rng, avail, depth - 1));
    case kPar: {
      // split the budget disjointly
      std::vector<Var> left, right;
      for (const Var& v : avail) {
        (pick(2) ? left : right).push_back(v);
      }
      return ast::make_par(gen(rng, left, depth - 1),
                           gen(rng, right, depth - 1));
    }
    case kRes: {
      std::set<std::string> hide{ctx_.chans[pick(ctx_.chans.size())]};
      return ast::make_restrict(gen(rng, avail, depth - 1), hide);
    }
  }
  return ast::make_nil();
}

ProcPtr ProcessGen::gen_top(std::mt19937_64& rng) const {
  std::vector<Var> avail;
  for (const Var& v : ctx_.reg.vars()) {
    if (!ast::is_reserved_name(v.name)) avail.push_back(v);
  }
  return gen(rng, std::move(avail), opts_.max_depth);
}

namespace {

ProcPtr rebind(const ProcPtr& p, std::mt19937_64& rng, std::size_t& counter) {
  using ast::PKind;
  switch (p->kind) {
    case PKind::Nil:
    case PKind::Constant:
      return p;
    case PKind::Tau:
      return ast::make_tau(rebind(p->a, rng, counter));
    case PKind::Op:
      return ast::make_op(p->op, p->op_name, p->op_args,
                          rebind(p->a, rng, counter));
    case PKind::Output:
      return ast::make_output(p->chan, p->comm_var,
                              rebind(p->a, rng, counter));
    case PKind::Input: {
      const Var nb{"w" + std::to_string(counter++), p->comm_var.type};
      ProcPtr body = ast::subst_apply(p->a, ast::Subst::swap(p->comm_var, nb),
                                      ast::Env{}, false);
      return ast::make_input(p->chan, nb, rebind(body, rng, counter));
    }
    case PKind::Sum:
      return ast::make_sum(rebind(p->a, rng, counter),
                           rebind(p->b, rng, counter));
    case PKind::Par:
      return ast::make_par(rebind(p->a, rng, counter),
                           rebind(p->b, rng, counter));
    case PKind::Restrict:
      return ast::make_restrict(rebind(p->a, rng, counter), p->hide);
  }
  return p;
}

}  // namespace

ProcPtr ProcessGen::alpha_variant(const ProcPtr& p,
                                  std::mt19937_64& rng) const {
  std::size_t counter = 17;
  return rebind(p, rng, counter);
}

ast::Subst random_permutation_subst(const qnum::Register& reg,
                                    std::mt19937_64& rng, bool fix_reserved) {
  // permute within each type class
  std::map<std::string, std::vector<Var>> classes;
  for (const Var& v : reg.vars()) {
    if (fix_reserved && ast::is_reserved_name(v.name)) continue;
    classes[v.type.name].push_back(v);
  }
  std::vector<std::pair<Var, Var>> pairs;
  for (auto& [type, vars] : classes) {
    std::vector<Var> to = vars;
    std::shuffle(to.begin(), to.end(), rng);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i].name != to[i].name) pairs.emplace_back(vars[i], to[i]);
    }
  }
  return ast::Subst::from_pairs(pairs);
}

namespace {

struct LawCase {
  ProcPtr p, q;
};

void run_pairs(LawOutcome& out, const LawContext& ctx,
               const LawRunOptions& opts,
               const std::function<LawCase(std::mt19937_64&)>& make) {
  std::mt19937_64 rng(opts.seed ^ std::hash<std::string>{}(out.law));
  for (std::size_t t = 0; t < opts.trials; ++t) {
    LawCase c = make(rng);
    GameOptions g = opts.game;
    g.seed = opts.game.seed + t;
    Verdict v = bisim_process(c.p, c.q, ctx.env, ctx.reg, {}, g);
    if (v.result == Result::bisimilar) {
      ++out.pass;
    } else if (v.result == Result::unknown) {
      ++out.unknown;
    } else {
      ++out.fail;
      if (out.first_failure.empty()) {
        out.first_failure =
            parse::pretty(c.p) + "  vs  " + parse::pretty(c.q);
      }
    }
  }
}

}  // namespace

std::vector<LawOutcome> run_monoid_laws(const LawContext& ctx,
                                        const LawRunOptions& opts) {
  ProcessGen gen(ctx, GenOptions{});
  std::vector<Var> all;
  for (const Var& v : ctx.reg.vars()) {
    if (!ast::is_reserved_name(v.name)) all.push_back(v);
  }
  auto split2 = [&](std::mt19937_64& rng, std::vector<Var>& a,
                    std::vector<Var>& b) {
    for (const Var& v : all) {
      (rng() % 2 ? a : b).push_back(v);
    }
  };

  std::vector<LawOutcome> results;
  auto add = [&](const std::string& name,
                 std::function<LawCase(std::mt19937_64&)> make) {
    LawOutcome out;
    out.law = name;
    run_pairs(out, ctx, opts, make);
    results.push_back(std::move(out));
  };

  add("P+Q ~ Q+P", [&](std::mt19937_64& rng) {
    ProcPtr p = gen.gen(rng, all, 4), q = gen.gen(rng, all, 4);
    return LawCase{ast::make_sum(p, q), ast::make_sum(q, p)};
  });
  add("P+(Q+R) ~ (P+Q)+R", [&](std::mt19937_64& rng) {
    ProcPtr p = gen.gen(rng, all, 3), q = gen.gen(rng, all, 3),
            r = gen.gen(rng, all, 3);
    return LawCase{ast::make_sum(p, ast::make_sum(q, r)),
                   ast::make_sum(ast::make_sum(p, q), r)};
  });
  add("P+P ~ P", [&](std::mt19937_64& rng) {
    ProcPtr p = gen.gen(rng, all, 4);
    return LawCase{ast::make_sum(p, p), p};
  });
  add("P+nil ~ P", [&](std::mt19937_64& rng) {
    ProcPtr p = gen.gen(rng, all, 4);
    return LawCase{ast::make_sum(p, ast::make_nil()), p};
  });
  add("P||Q ~ Q||P", [&](std::mt19937_64& rng) {
    std::vector<Var> a, b;
    split2(rng, a, b);
    ProcPtr p = gen.gen(rng, a, 3), q = gen.gen(rng, b, 3);
    return LawCase{ast::make_par(p, q), ast::make_par(q, p)};
  });
  add("P||(Q||R) ~ (P||Q)||R", [&](std::mt19937_64& rng) {
    std::vector<Var> a, b, c;
    for (const Var& v : all) {
      switch (rng() % 3) {
        case 0: a.push_back(v); break;
        case 1: b.push_back(v); break;
        default: c.push_back(v); break;
      }
    }
    ProcPtr p = gen.gen(rng, a, 3), q = gen.gen(rng, b, 3),
            r = gen.gen(rng, c, 3);
    return LawCase{ast::make_par(p, ast::make_par(q, r)),
                   ast::make_par(ast::make_par(p, q), r)};
  });
  add("P||nil ~ P", [&](std::mt19937_64& rng) {
    ProcPtr p = gen.gen(rng, all, 4);
    return LawCase{ast::make_par(p, ast::make_nil()), p};
  });
  add("P\\L ~ P (cn(P) disjoint L)", [&](std::mt19937_64& rng) {
    ProcPtr p = gen.gen(rng, all, 4);
    return LawCase{ast::make_restrict(p, {ctx.unused_chan}), p};
  });
  add("(P\\K)\\L ~ P\\(K u L)", [&](std::mt19937_64& rng) {
    ProcPtr p = gen.gen(rng, all, 4);
    std::set<std::string> k{ctx.chans[rng() % ctx.chans.size()]};
    std::set<std::string> l{ctx.chans[rng() % ctx.chans.size()]};
    std::set<std::string> kl = k;
    kl.insert(l.begin(), l.end());
    return LawCase{ast::make_restrict(ast::make_restrict(p, k), l),
                   ast::make_restrict(p, kl)};
  });
  return results;
}

LawOutcome run_expansion_law(const LawContext& ctx,
                             const LawRunOptions& opts) {
  ProcessGen gen(ctx, GenOptions{3});
  std::vector<Var> all;
  for (const Var& v : ctx.reg.vars()) {
    if (!ast::is_reserved_name(v.name)) all.push_back(v);
  }
  LawOutcome out;
  out.law = "expansion law";
  run_pairs(out, ctx, opts, [&](std::mt19937_64& rng) {
    std::vector<Var> a, b;
    for (const Var& v : all) {
      (rng() % 2 ? a : b).push_back(v);
    }
    ProcPtr p = gen.gen(rng, a, 3), q = gen.gen(rng, b, 3);
    std::set<std::string> hide;
    for (const std::string& c : ctx.chans) {
      if (rng() % 2) hide.insert(c);
    }
    ProcPtr lhs = ast::make_restrict(ast::make_par(p, q), hide);
    ProcPtr rhs =
        expansion_rhs(p, q, hide, ctx.env, ctx.reg, opts.game.policy);
    return LawCase{lhs, rhs};
  });
  return out;
}

std::vector<LawOutcome> run_congruence_suite(const LawContext& ctx,
                                             const LawRunOptions& opts) {
  ProcessGen gen(ctx, GenOptions{3});
  // Base pairs use x, y only so that z stays free for contexts.
  std::vector<Var> base_vars, ctx_vars;
  for (const Var& v : ctx.reg.vars()) {
    if (ast::is_reserved_name(v.name)) continue;
    if (v.name == "z") {
      ctx_vars.push_back(v);
    } else {
      base_vars.push_back(v);
    }
  }
  const Var z = ctx_vars.front();

  auto base_pair = [&](std::mt19937_64& rng) -> LawCase {
    switch (rng() % 3) {
      case 0: {  // alpha-variant
        ProcPtr p = gen.gen(rng, base_vars, 3);
        return {p, gen.alpha_variant(p, rng)};
      }
      case 1: {  // P+nil ~ P
        ProcPtr p = gen.gen(rng, base_vars, 3);
        return {ast::make_sum(p, ast::make_nil()), p};
      }
      default: {  // P||Q ~ Q||P
        std::vector<Var> a, b;
        for (const Var& v : base_vars) {
          (rng() % 2 ? a : b).push_back(v);
        }
        ProcPtr p = gen.gen(rng, a, 2), q = gen.gen(rng, b, 2);
        return {ast::make_par(p, q), ast::make_par(q, p)};
      }
    }
  };

  struct Ctor {
    std::string name;
    std::function<LawCase(const LawCase&, std::mt19937_64&)> wrap;
  };
  const qnum::SuperOpPtr h = qnum::named_gate("H");
  std::vector<Ctor> ctors{
      {"tau.P ~ tau.Q",
       [](const LawCase& c, std::mt19937_64&) {
         return LawCase{ast::make_tau(c.p), ast::make_tau(c.q)};
       }},
      {"E[X].P ~ E[X].Q",
       [&](const LawCase& c, std::mt19937_64&) {
         return LawCase{ast::make_op(h, "H", {z}, c.p),
                        ast::make_op(h, "H", {z}, c.q)};
       }},
      {"c!x.P ~ c!x.Q",
       [&](const LawCase& c, std::mt19937_64&) -> LawCase {
         if (c.p->fv().count(z.name) || c.q->fv().count(z.name)) {
           return c;  // would break the output side condition; keep base
         }
         return LawCase{ast::make_output("c", z, c.p),
                        ast::make_output("c", z, c.q)};
       }},
      {"c?x.P ~ c?x.Q",
       [](const LawCase& c, std::mt19937_64&) {
         const Var u{"u9", qnum::VarType{"qubit", 2}};
         return LawCase{ast::make_input("c", u, c.p),
                        ast::make_input("c", u, c.q)};
       }},
      {"P+R ~ Q+R",
       [&](const LawCase& c, std::mt19937_64& rng) {
         ProcPtr r = gen.gen(rng, base_vars, 2);
         return LawCase{ast::make_sum(c.p, r), ast::make_sum(c.q, r)};
       }},
      {"P||R ~ Q||R",
       [&](const LawCase& c, std::mt19937_64& rng) {
         ProcPtr r = gen.gen(rng, ctx_vars, 2);
         return LawCase{ast::make_par(c.p, r), ast::make_par(c.q, r)};
       }},
      {"P\\L ~ Q\\L",
       [&](const LawCase& c, std::mt19937_64& rng) {
         std::set<std::string> hide{ctx.chans[rng() % ctx.chans.size()]};
         return LawCase{ast::make_restrict(c.p, hide),
                        ast::make_restrict(c.q, hide)};
       }},
  };

  std::vector<LawOutcome> results;
  for (const Ctor& ctor : ctors) {
    LawOutcome out;
    out.law = ctor.name;
    std::mt19937_64 rng(opts.seed ^ std::hash<std::string>{}(ctor.name));
    for (std::size_t t = 0; t < opts.trials; ++t) {
      LawCase base = base_pair(rng);
      LawCase c = ctor.wrap(base, rng);
      GameOptions g = opts.game;
      g.seed = opts.game.seed + t;
      Verdict v = bisim_process(c.p, c.q, ctx.env, ctx.reg, {}, g);
      if (v.result == Result::bisimilar) {
        ++out.pass;
      } else if (v.result == Result::unknown) {
        ++out.unknown;
      } else {
        ++out.fail;
        if (out.first_failure.empty()) {
          out.first_failure =
              parse::pretty(c.p) + "  vs  " + parse::pretty(c.q);
        }
      }
    }
    results.push_back(std::move(out));
  }
  return results;
}

}  // namespace qccs::equiv
