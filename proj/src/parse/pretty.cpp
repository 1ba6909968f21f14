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

#include "qccs/parse/pretty.hpp"

#include <sstream>

#include "qccs/ast/subst.hpp"

namespace qccs::parse {

namespace {

using ast::PKind;
using ast::ProcPtr;

// precedence levels: sum 0 < par 1 < restrict 2 < prefix/atom 3
constexpr int kSum = 0, kPar = 1, kRes = 2, kPrefix = 3;

void join_vars(std::ostringstream& os, const std::vector<ast::Var>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ",";
    os << vs[i].name;
  }
}

struct Printer {
  bool with_fingerprints;
  double grid;

  void print(std::ostringstream& os, const ProcPtr& p, int ctx) const {
    const int lvl = level(p);
    if (lvl < ctx) {
      os << "(";
      print_node(os, p);
      os << ")";
    } else {
      print_node(os, p);
    }
  }

  static int level(const ProcPtr& p) {
    switch (p->kind) {
      case PKind::Sum:
        return kSum;
      case PKind::Par:
        return kPar;
      case PKind::Restrict:
        return kRes;
      default:
        return kPrefix;
    }
  }

  void print_node(std::ostringstream& os, const ProcPtr& p) const {
    switch (p->kind) {
      case PKind::Nil:
        os << "nil";
        return;
      case PKind::Constant:
        os << p->const_name << "(";
        join_vars(os, p->args);
        os << ")";
        return;
      case PKind::Tau:
        os << "tau.";
        print(os, p->a, kPrefix);
        return;
      case PKind::Op:
        os << p->op_name;
        if (with_fingerprints) {
          os << "#" << std::hex << qnum::fingerprint(p->op->choi(), grid)
             << std::dec;
        }
        os << "[";
        join_vars(os, p->op_args);
        os << "].";
        print(os, p->a, kPrefix);
        return;
      case PKind::Input:
        os << p->chan << "?" << p->comm_var.name << ".";
        print(os, p->a, kPrefix);
        return;
      case PKind::Output:
        os << p->chan << "!" << p->comm_var.name << ".";
        print(os, p->a, kPrefix);
        return;
      case PKind::Sum:
        print(os, p->a, kSum);
        os << " + ";
        print(os, p->b, kPar);
        return;
      case PKind::Par:
        print(os, p->a, kPar);
        os << " || ";
        print(os, p->b, kRes);
        return;
      case PKind::Restrict: {
        print(os, p->a, kRes);
        os << "\\{";
        bool first = true;
        for (const std::string& c : p->hide) {
          if (!first) os << ",";
          os << c;
          first = false;
        }
        os << "}";
        return;
      }
    }
  }
};

}  // namespace

std::string pretty(const ast::ProcPtr& p) {
  std::ostringstream os;
  Printer{false, 0.0}.print(os, p, kSum);
  return os.str();
}

std::string canonical_key(const ast::ProcPtr& p, double grid) {
  std::ostringstream os;
  Printer{true, grid}.print(os, ast::alpha_canon(p), kSum);
  return os.str();
}

}  // namespace qccs::parse
