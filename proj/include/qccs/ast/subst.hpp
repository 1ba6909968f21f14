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

#ifndef QCCS_AST_SUBST_HPP
#define QCCS_AST_SUBST_HPP

#include <map>
#include <vector>

#include "qccs/ast/process.hpp"

namespace qccs::ast {

/// Reserved fresh-variable namespace "#<type>_<k>". These names are
/// rejected in user input and drawn in increasing k, which keeps fresh
/// picks deterministic.
bool is_reserved_name(const std::string& name);
std::string reserved_name(const std::string& type_name, std::size_t k);

/// Smallest reserved variable of the type not contained in any of the
/// given sets.
Var pick_fresh(const VarType& type,
               const std::vector<const std::set<std::string>*>& avoid);

/// A substitution of quantum variables: an injective, type-preserving
/// map that is the identity outside a finite set. Construction closes a
/// partial injective assignment into a finite permutation.
class Subst {
 public:
  Subst() = default;

  /// pairs x_i -> y_i; x's pairwise distinct, y's pairwise distinct,
  /// types matching. The cycle closure makes the result a bijection.
  static Subst from_pairs(const std::vector<std::pair<Var, Var>>& pairs);

  /// The transposition x <-> y (the paper's {y/x} on states and the
  /// binder-retargeting substitution of the input rule).
  static Subst swap(const Var& x, const Var& y);

  Var operator()(const Var& v) const;
  std::string map_name(const std::string& name) const;

  Subst inverse() const;
  bool is_identity() const { return map_.empty(); }

  /// The paper's f_y: f_y(y) = y, f_y(f^-1(y)) = f(y), else f.
  Subst fixing(const Var& y) const;

  /// Image of a variable-name set.
  std::set<std::string> image(const std::set<std::string>& names) const;

  const std::map<std::string, Var>& pairs() const { return map_; }

 private:
  std::map<std::string, Var> map_;  // moved names only
  std::map<std::string, VarType> domain_types_;
  void set(const Var& from, const Var& to);
};

/// Pf per the nine defining clauses; clause 5 keeps the binder when no
/// conflict arises and otherwise draws the first admissible reserved
/// variable. With check_defined, (Pf)f^-1 =alpha= P is verified and a
/// std::invalid_argument reports an ill-defined substitution.
ProcPtr subst_apply(const ProcPtr& p, const Subst& f, const Env& env,
                    bool check_defined = true);

/// alpha-canonical form: every input binder renamed to a canonical
/// positional name "%k" (a namespace nothing else can occupy), numbered
/// in pre-order.
ProcPtr alpha_canon(const ProcPtr& p);

/// Structural equality with exact (gauge-sensitive) op payloads.
bool term_equal(const ProcPtr& p, const ProcPtr& q);

/// Equality after canonical bound-variable renaming.
bool alpha_eq(const ProcPtr& p, const ProcPtr& q);

/// Like alpha_eq but comparing op payloads by Choi matrices at `tol`
/// (the comparison used for normal forms).
bool alpha_eq_choi(const ProcPtr& p, const ProcPtr& q, double tol);

}  // namespace qccs::ast

#endif
