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

#ifndef QCCS_PARSE_PARSER_HPP
#define QCCS_PARSE_PARSER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qccs/ast/process.hpp"
#include "qccs/qnum/qstate.hpp"
#include "qccs/sos/semantics.hpp"

namespace qccs::parse {

struct Diagnostic {
  std::size_t line = 0, col = 0;
  std::string message;
  std::string to_string() const;
};

struct CheckDirective {
  std::string kind;       // bisim | rbisim | distance
  std::string dist_kind;  // sb | srb (distance only)
  ast::ProcPtr p, q;
  std::vector<std::string> states;
};

/// A parsed .qccs source: declarations, definitions, named states over
/// the seeded register, and check directives.
struct SourceFile {
  std::map<std::string, qnum::VarType> types;
  std::set<std::string> chans;
  std::vector<ast::Var> declared_vars;
  qnum::Register reg;  // declared vars + seeded fresh variables
  std::map<std::string, qnum::SuperOpPtr> ops;
  ast::Env env;
  std::map<std::string, qnum::QState> states;
  std::vector<CheckDirective> checks;
  std::size_t fresh_per_type = 1;

  /// User-declared op or builtin gate; nullptr when unknown.
  qnum::SuperOpPtr find_op(const std::string& name) const;
  const qnum::QState* find_state(const std::string& name) const;
};

struct ParseResult {
  bool ok = false;
  SourceFile file;
  std::vector<Diagnostic> diagnostics;
};

ParseResult parse_file(const std::string& text, std::size_t fresh_per_type = 1);

/// A standalone process expression resolved against a parsed file. As a
/// convenience a bare identifier naming a nullary constant means its
/// instantiation. Returns nullptr and fills diags on failure.
ast::ProcPtr parse_process(const std::string& text, const SourceFile& ctx,
                           std::vector<Diagnostic>& diags);

/// Shared instances of the builtin gates (I, H, X, Y, Z, S, T, CNOT).
qnum::SuperOpPtr builtin_gate(const std::string& name);

}  // namespace qccs::parse

#endif
