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

#ifndef QCCS_AST_PROCESS_HPP
#define QCCS_AST_PROCESS_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qccs/qnum/register.hpp"
#include "qccs/qnum/superop.hpp"

namespace qccs::ast {

using qnum::Var;
using qnum::VarType;

enum class PKind { Constant, Nil, Tau, Op, Input, Output, Sum, Par, Restrict };

class Process;
using ProcPtr = std::shared_ptr<const Process>;

/// Immutable process term. Free variables are precomputed per node so
/// the semantics and the bisimulation game can query them cheaply.
class Process {
 public:
  PKind kind;

  // Constant
  std::string const_name;
  std::vector<Var> args;

  // Op prefix: the channel payload plus the variables bound to its
  // slots, in slot order.
  qnum::SuperOpPtr op;
  std::string op_name;
  std::vector<Var> op_args;

  // Input / Output
  std::string chan;
  Var comm_var;

  // Children: `a` is the body of prefixes / restriction and the left
  // operand of Sum / Par; `b` the right operand.
  ProcPtr a, b;

  std::set<std::string> hide;  // restriction channel set

  const std::set<std::string>& fv() const { return fv_; }

  ~Process() = default;

 private:
  std::set<std::string> fv_;
  friend ProcPtr finish(std::shared_ptr<Process> p);
  Process() = default;
  friend std::shared_ptr<Process> blank(PKind k);
};

ProcPtr make_nil();
ProcPtr make_constant(std::string name, std::vector<Var> args);
ProcPtr make_tau(ProcPtr body);
ProcPtr make_op(qnum::SuperOpPtr op, std::string op_name,
                std::vector<Var> op_args, ProcPtr body);
ProcPtr make_input(std::string chan, Var x, ProcPtr body);
ProcPtr make_output(std::string chan, Var x, ProcPtr body);
ProcPtr make_sum(ProcPtr l, ProcPtr r);
ProcPtr make_par(ProcPtr l, ProcPtr r);
ProcPtr make_restrict(ProcPtr body, std::set<std::string> chans);

/// Free quantum variables (the nine-clause definition; constants carry
/// their argument tuple, no unfolding).
const std::set<std::string>& fv(const ProcPtr& p);

struct ConstDef {
  std::string name;
  std::vector<Var> params;  // pairwise distinct
  ProcPtr body;             // fv(body) subset of params
};

/// Process-constant environment.
class Env {
 public:
  void define(ConstDef def);
  bool has(const std::string& name) const;
  const ConstDef& lookup(const std::string& name) const;  // throws
  const std::map<std::string, ConstDef>& all() const { return defs_; }

 private:
  std::map<std::string, ConstDef> defs_;
};

/// Free variables with constant-existence checking (throws on an
/// unknown constant).
std::set<std::string> fv_checked(const ProcPtr& p, const Env& env);

/// Free channel names; restriction binds, constants are unfolded with a
/// visited set so recursion terminates.
std::set<std::string> free_channels(const ProcPtr& p, const Env& env);

/// All variables of the term (free or bound) by name, with their types.
void collect_vars(const ProcPtr& p, std::map<std::string, VarType>& out);

bool is_finite(const ProcPtr& p);  // no process constants

}  // namespace qccs::ast

#endif
