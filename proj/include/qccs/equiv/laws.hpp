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

#ifndef QCCS_EQUIV_LAWS_HPP
#define QCCS_EQUIV_LAWS_HPP

#include <random>

#include "qccs/equiv/game.hpp"

namespace qccs::equiv {

/// Shared context for the algebraic-law suites: three qubit variables
/// x, y, z plus a seeded fresh variable, channels c and d (e stays
/// unused so vacuous restriction can be exercised).
struct LawContext {
  ast::Env env;
  qnum::Register reg;
  std::vector<std::string> chans;
  std::string unused_chan;
};

LawContext make_law_context();

struct GenOptions {
  std::size_t max_depth = 4;
  bool tp_only = false;  // restrict to trace-preserving operations
};

/// Random well-formed finite processes over a context's register.
class ProcessGen {
 public:
  ProcessGen(const LawContext& ctx, GenOptions opts);

  /// Term over the given variable budget (fv within the budget).
  ast::ProcPtr gen(std::mt19937_64& rng, std::vector<ast::Var> avail,
                   std::size_t depth) const;

  /// Term over all non-reserved register variables.
  ast::ProcPtr gen_top(std::mt19937_64& rng) const;

  /// Alpha-variant: every input binder renamed to a fresh user-style
  /// name.
  ast::ProcPtr alpha_variant(const ast::ProcPtr& p,
                             std::mt19937_64& rng) const;

 private:
  const LawContext& ctx_;
  GenOptions opts_;
  std::vector<std::pair<std::string, qnum::SuperOpPtr>> ops1_;  // 1-qubit
  std::vector<std::pair<std::string, qnum::SuperOpPtr>> ops2_;  // 2-qubit
};

/// Type-preserving random permutation of the register variables.
ast::Subst random_permutation_subst(const qnum::Register& reg,
                                    std::mt19937_64& rng,
                                    bool fix_reserved = true);

struct LawOutcome {
  std::string law;
  std::size_t pass = 0, fail = 0, unknown = 0;
  std::string first_failure;  // pretty-printed failing pair

  bool ok() const { return fail == 0 && unknown == 0; }
};

struct LawRunOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 20260809;
  GameOptions game;
};

/// The nine monoid/static laws checked by bisim_process over the suite.
std::vector<LawOutcome> run_monoid_laws(const LawContext& ctx,
                                        const LawRunOptions& opts);

/// (P || Q) restricted vs. its expansion-law right-hand side.
LawOutcome run_expansion_law(const LawContext& ctx, const LawRunOptions& opts);

/// Seven constructor closures over law-generated bisimilar pairs.
std::vector<LawOutcome> run_congruence_suite(const LawContext& ctx,
                                             const LawRunOptions& opts);

}  // namespace qccs::equiv

#endif
