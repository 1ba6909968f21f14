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

#include "qccs/parse/parser.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "qccs/ast/subst.hpp"
#include "qccs/ast/wf.hpp"
#include "qccs/parse/lexer.hpp"

namespace qccs::parse {

using ast::ProcPtr;
using ast::Var;
using qnum::ComplexMatrix;
using qnum::cplx;
using qnum::VarType;

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(col) + ": " + message;
}

qnum::SuperOpPtr builtin_gate(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, qnum::SuperOpPtr> cache;
  if (!qnum::is_builtin_gate(name)) return nullptr;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, qnum::named_gate(name)).first;
  }
  return it->second;
}

qnum::SuperOpPtr SourceFile::find_op(const std::string& name) const {
  auto it = ops.find(name);
  if (it != ops.end()) return it->second;
  return builtin_gate(name);
}

const qnum::QState* SourceFile::find_state(const std::string& name) const {
  auto it = states.find(name);
  return it == states.end() ? nullptr : &it->second;
}

namespace {

// ---------------------------------------------------------------------
// Surface process syntax (names without types, resolved later)

struct SProc;
using SP = std::shared_ptr<const SProc>;

struct SProc {
  enum K { Nil, Tau, Op, In, Out, Sum, Par, Res, Const } k;
  std::string name;                // op / const / channel name
  std::vector<std::string> vars;   // op args / const args
  std::string var;                 // comm variable
  SP a, b;
  std::set<std::string> hide;
  std::size_t line = 0, col = 0;
};

SP snode(SProc::K k, std::size_t line, std::size_t col) {
  auto p = std::make_shared<SProc>();
  const_cast<SProc&>(*p).k = k;
  const_cast<SProc&>(*p).line = line;
  const_cast<SProc&>(*p).col = col;
  return p;
}

struct ParseError {
  Diagnostic diag;
};

// ---------------------------------------------------------------------

class Parser {
 public:
  Parser(std::vector<Token> toks, SourceFile& out,
         std::vector<Diagnostic>& diags)
      : toks_(std::move(toks)), out_(out), diags_(diags) {}

  void run() {
    // First pass: constant signatures (name + params) so bodies may
    // reference constants defined later in the file.
    scan_constant_signatures();
    while (!at(Tok::End)) {
      try {
        statement();
      } catch (const ParseError& e) {
        diags_.push_back(e.diag);
        recover();
      }
    }
    resolve_constants();
    finish_register_and_states();
    resolve_checks();
  }

  // Standalone process expression (for the CLI and directives).
  ProcPtr expression() {
    try {
      SP s = proc();
      expect(Tok::End, "end of expression");
      finish_register_and_states();  // no-op when already finished
      return resolve_proc_or_null(s);
    } catch (const ParseError& e) {
      diags_.push_back(e.diag);
      return nullptr;
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceFile& out_;
  std::vector<Diagnostic>& diags_;
  bool register_built_ = false;

  struct RawConst {
    std::string name;
    std::vector<std::string> params;
    SP body;
    std::size_t line = 0, col = 0;
    std::vector<std::optional<VarType>> param_types;
  };
  std::map<std::string, RawConst> raw_consts_;
  std::vector<std::string> const_order_;
  struct RawState {
    std::string name;
    std::size_t first_tok;  // position of the token after '='
    std::size_t line, col;
  };
  std::vector<RawState> raw_states_;
  struct RawCheck {
    CheckDirective partial;
    SP p, q;
    std::size_t line, col;
  };
  std::vector<RawCheck> raw_checks_;

  // ---- token helpers ----
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_ident(const char* s) const {
    return cur().kind == Tok::Ident && cur().text == s;
  }
  Token take() { return toks_[pos_++]; }
  void expect(Tok k, const std::string& what) {
    if (!at(k)) {
      throw err("expected " + what + ", found '" + cur().text + "'");
    }
    ++pos_;
  }
  std::string expect_ident(const std::string& what) {
    if (!at(Tok::Ident)) {
      throw err("expected " + what + ", found '" + cur().text + "'");
    }
    return take().text;
  }
  ParseError err(const std::string& msg) const {
    return ParseError{{cur().line, cur().col, msg}};
  }
  ParseError err_at(std::size_t line, std::size_t col,
                    const std::string& msg) const {
    return ParseError{{line, col, msg}};
  }
  void recover() {
    while (!at(Tok::End) && !at(Tok::Semi)) ++pos_;
    if (at(Tok::Semi)) ++pos_;
  }

  // ---- pass 1: constant signatures ----
  void scan_constant_signatures() {
    std::size_t save = pos_;
    while (toks_[pos_].kind != Tok::End) {
      // A definition looks like: IDENT '(' idents ')' '=' ...
      if (toks_[pos_].kind == Tok::Ident && !is_keyword(toks_[pos_].text) &&
          toks_[pos_ + 1].kind == Tok::LParen) {
        std::size_t q = pos_ + 2;
        std::vector<std::string> params;
        bool ok = true;
        while (toks_[q].kind == Tok::Ident) {
          params.push_back(toks_[q].text);
          ++q;
          if (toks_[q].kind == Tok::Comma) {
            ++q;
            continue;
          }
          break;
        }
        ok = toks_[q].kind == Tok::RParen &&
             toks_[q + 1].kind == Tok::Assign;
        if (ok) {
          RawConst rc;
          rc.name = toks_[pos_].text;
          rc.params = params;
          rc.line = toks_[pos_].line;
          rc.col = toks_[pos_].col;
          rc.param_types.resize(params.size());
          if (raw_consts_.count(rc.name)) {
            diags_.push_back({rc.line, rc.col,
                              "duplicate constant definition '" + rc.name +
                                  "'"});
          } else {
            const_order_.push_back(rc.name);
            raw_consts_.emplace(rc.name, std::move(rc));
          }
        }
      }
      // skip to the next statement
      while (toks_[pos_].kind != Tok::Semi && toks_[pos_].kind != Tok::End)
        ++pos_;
      if (toks_[pos_].kind == Tok::Semi) ++pos_;
    }
    pos_ = save;
  }

  static bool is_keyword(const std::string& s) {
    return s == "type" || s == "chan" || s == "var" || s == "op" ||
           s == "state" || s == "check" || s == "nil" || s == "tau";
  }

  // ---- statements ----
  void statement() {
    if (at_ident("type")) return type_decl();
    if (at_ident("chan")) return chan_decl();
    if (at_ident("var")) return var_decl();
    if (at_ident("op")) return op_decl();
    if (at_ident("state")) return state_decl();
    if (at_ident("check")) return check_decl();
    if (at(Tok::Ident)) return const_decl();
    throw err("expected a declaration");
  }

  void type_decl() {
    take();  // 'type'
    const Token name = toks_[pos_];
    const std::string id = expect_ident("type name");
    expect(Tok::Assign, "'='");
    if (!at(Tok::Number)) throw err("expected a dimension");
    const double d = take().number;
    expect(Tok::Semi, "';'");
    if (d < 2 || d != std::floor(d)) {
      throw err_at(name.line, name.col,
                   "type dimension must be an integer >= 2");
    }
    if (out_.types.count(id)) {
      throw err_at(name.line, name.col, "duplicate type '" + id + "'");
    }
    out_.types.emplace(id, VarType{id, static_cast<std::size_t>(d)});
  }

  void chan_decl() {
    take();
    const Token name = toks_[pos_];
    const std::string id = expect_ident("channel name");
    expect(Tok::Semi, "';'");
    if (!out_.chans.insert(id).second) {
      throw err_at(name.line, name.col, "duplicate channel '" + id + "'");
    }
  }

  void var_decl() {
    take();
    const Token name = toks_[pos_];
    const std::string id = expect_ident("variable name");
    expect(Tok::Colon, "':'");
    const Token tname = toks_[pos_];
    const std::string ty = expect_ident("type name");
    expect(Tok::Semi, "';'");
    auto it = out_.types.find(ty);
    if (it == out_.types.end()) {
      throw err_at(tname.line, tname.col, "unknown type '" + ty + "'");
    }
    for (const Var& v : out_.declared_vars) {
      if (v.name == id) {
        throw err_at(name.line, name.col, "duplicate variable '" + id + "'");
      }
    }
    out_.declared_vars.push_back(Var{id, it->second});
  }

  std::vector<VarType> slot_decls() {
    expect(Tok::LParen, "'('");
    std::vector<VarType> slots;
    while (true) {
      expect_ident("slot name");
      expect(Tok::Colon, "':'");
      const Token tname = toks_[pos_];
      const std::string ty = expect_ident("type name");
      auto it = out_.types.find(ty);
      if (it == out_.types.end()) {
        throw err_at(tname.line, tname.col, "unknown type '" + ty + "'");
      }
      slots.push_back(it->second);
      if (at(Tok::Comma)) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::RParen, "')'");
    return slots;
  }

  cplx complex_lit() {
    // forms: a | -a | a+bi | a-bi | bi | -bi  (i suffix as ident 'i')
    auto signed_real = [this]() {
      double sign = 1.0;
      while (at(Tok::Minus) || at(Tok::Plus)) {
        if (take().kind == Tok::Minus) sign = -sign;
      }
      if (!at(Tok::Number)) throw err("expected a number");
      return sign * take().number;
    };
    double first = signed_real();
    bool first_imag = false;
    if (at_ident("i")) {
      take();
      first_imag = true;
    }
    if ((at(Tok::Plus) || at(Tok::Minus)) && !first_imag) {
      const double sign = take().kind == Tok::Minus ? -1.0 : 1.0;
      if (!at(Tok::Number)) throw err("expected the imaginary part");
      const double b = take().number;
      if (!at_ident("i")) throw err("expected 'i' after the imaginary part");
      take();
      return {first, sign * b};
    }
    return first_imag ? cplx{0.0, first} : cplx{first, 0.0};
  }

  ComplexMatrix matrix_lit() {
    expect(Tok::LBracket, "'['");
    std::vector<std::vector<cplx>> rows;
    while (true) {
      expect(Tok::LBracket, "'[' starting a row");
      std::vector<cplx> row;
      while (true) {
        row.push_back(complex_lit());
        if (at(Tok::Comma)) {
          take();
          continue;
        }
        break;
      }
      expect(Tok::RBracket, "']' ending a row");
      rows.push_back(std::move(row));
      if (at(Tok::Comma)) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::RBracket, "']' ending the matrix");
    const std::size_t r = rows.size(), c = rows.front().size();
    for (const auto& row : rows) {
      if (row.size() != c) throw err("ragged matrix literal");
    }
    std::vector<cplx> data;
    data.reserve(r * c);
    for (auto& row : rows) data.insert(data.end(), row.begin(), row.end());
    return ComplexMatrix(r, c, std::move(data));
  }

  void op_decl() {
    take();  // 'op'
    const Token name = toks_[pos_];
    const std::string id = expect_ident("operation name");
    if (qnum::is_builtin_gate(id)) {
      throw err_at(name.line, name.col,
                   "'" + id + "' is a builtin gate name");
    }
    if (out_.ops.count(id)) {
      throw err_at(name.line, name.col, "duplicate operation '" + id + "'");
    }
    std::vector<VarType> slots;
    bool have_slots = false;
    if (at_ident("on")) {
      take();
      slots = slot_decls();
      have_slots = true;
    }
    expect(Tok::Assign, "'='");

    qnum::SuperOpPtr op;
    try {
      if (at_ident("kraus")) {
        take();
        if (!have_slots) {
          throw err_at(name.line, name.col,
                       "kraus operation needs an 'on (...)' clause");
        }
        expect(Tok::LBrace, "'{'");
        std::vector<ComplexMatrix> kraus;
        while (!at(Tok::RBrace)) {
          kraus.push_back(matrix_lit());
          if (at(Tok::Semi)) take();
        }
        expect(Tok::RBrace, "'}'");
        op = std::make_shared<qnum::SuperOp>(slots, std::move(kraus), id);
      } else if (at_ident("gate")) {
        take();
        const Token g = toks_[pos_];
        const std::string gname = expect_ident("gate name");
        if (!qnum::is_builtin_gate(gname)) {
          throw err_at(g.line, g.col, "unknown gate '" + gname + "'");
        }
        if (gname == "I" && have_slots) {
          std::size_t d = 1;
          for (const VarType& t : slots) d *= t.dim;
          op = std::make_shared<qnum::SuperOp>(
              slots, std::vector<ComplexMatrix>{ComplexMatrix::identity(d)},
              id);
        } else {
          qnum::SuperOpPtr base = builtin_gate(gname);
          if (have_slots) {
            std::size_t d = 1;
            for (const VarType& t : slots) d *= t.dim;
            if (d != base->dim() || slots.size() != base->arity()) {
              throw err_at(g.line, g.col,
                           "slot list does not match gate '" + gname + "'");
            }
            op = std::make_shared<qnum::SuperOp>(slots, base->kraus(), id);
          } else {
            op = std::make_shared<qnum::SuperOp>(base->slots(), base->kraus(),
                                                 id);
          }
        }
      } else if (at_ident("measure")) {
        take();
        if (!at_ident("computational")) {
          throw err("only 'measure computational' is supported");
        }
        take();
        if (!at_ident("on")) throw err("expected 'on'");
        take();
        slots = slot_decls();
        std::size_t d = 1;
        for (const VarType& t : slots) d *= t.dim;
        op = qnum::measurement_superop(qnum::computational_measurement_ops(d),
                                       slots, qnum::MeasureMode::total, 0, id);
      } else if (at_ident("branch")) {
        take();
        if (!at(Tok::Number)) throw err("expected a branch index");
        const double bidx = take().number;
        if (!at_ident("of")) throw err("expected 'of'");
        take();
        const Token src = toks_[pos_];
        const std::string base_name = expect_ident("operation name");
        auto it = out_.ops.find(base_name);
        if (it == out_.ops.end()) {
          throw err_at(src.line, src.col,
                       "operation '" + base_name +
                           "' must be declared before 'branch ... of' uses "
                           "it");
        }
        op = qnum::measurement_superop(it->second->kraus(),
                                       it->second->slots(),
                                       qnum::MeasureMode::branch,
                                       static_cast<std::size_t>(bidx), id);
      } else {
        throw err("expected 'kraus', 'gate', 'measure' or 'branch'");
      }
    } catch (const std::invalid_argument& e) {
      throw err_at(name.line, name.col, e.what());
    }
    expect(Tok::Semi, "';'");
    out_.ops.emplace(id, std::move(op));
  }

  void state_decl() {
    const Token kw = take();
    const std::string id = expect_ident("state name");
    expect(Tok::Assign, "'='");
    RawState rs{id, pos_, kw.line, kw.col};
    // skip to ';'
    while (!at(Tok::Semi) && !at(Tok::End)) ++pos_;
    expect(Tok::Semi, "';'");
    raw_states_.push_back(rs);
  }

  void check_decl() {
    const Token kw = take();
    RawCheck rc;
    rc.line = kw.line;
    rc.col = kw.col;
    const std::string kind = expect_ident("check kind");
    if (kind != "bisim" && kind != "rbisim" && kind != "distance") {
      throw err("unknown check kind '" + kind + "'");
    }
    rc.partial.kind = kind;
    if (kind == "distance") {
      const std::string dk = expect_ident("distance kind");
      if (dk != "sb" && dk != "srb") {
        throw err("distance kind must be 'sb' or 'srb'");
      }
      rc.partial.dist_kind = dk;
    }
    rc.p = proc();
    rc.q = proc();
    if (at_ident("with")) {
      take();
      if (!at_ident("states")) throw err("expected 'states'");
      take();
      expect(Tok::LBrace, "'{'");
      while (true) {
        rc.partial.states.push_back(expect_ident("state name"));
        if (at(Tok::Comma)) {
          take();
          continue;
        }
        break;
      }
      expect(Tok::RBrace, "'}'");
    }
    expect(Tok::Semi, "';'");
    raw_checks_.push_back(std::move(rc));
  }

  void const_decl() {
    const Token name = toks_[pos_];
    const std::string id = expect_ident("constant name");
    expect(Tok::LParen, "'('");
    std::vector<std::string> params;
    while (at(Tok::Ident)) {
      params.push_back(take().text);
      if (at(Tok::Comma)) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Assign, "'='");
    SP body = proc();
    expect(Tok::Semi, "';'");
    auto it = raw_consts_.find(id);
    if (it == raw_consts_.end()) {
      // pass 1 rejected it as a duplicate
      return;
    }
    it->second.body = std::move(body);
    (void)name;
  }

  // ---- surface process grammar ----
  SP proc() { return sum(); }

  SP sum() {
    SP l = par();
    while (at(Tok::Plus)) {
      const Token t = take();
      SP r = par();
      SP n = snode(SProc::Sum, t.line, t.col);
      const_cast<SProc&>(*n).a = l;
      const_cast<SProc&>(*n).b = r;
      l = n;
    }
    return l;
  }

  SP par() {
    SP l = res();
    while (at(Tok::Parallel)) {
      const Token t = take();
      SP r = res();
      SP n = snode(SProc::Par, t.line, t.col);
      const_cast<SProc&>(*n).a = l;
      const_cast<SProc&>(*n).b = r;
      l = n;
    }
    return l;
  }

  SP res() {
    SP body = prefix();
    while (at(Tok::Backslash)) {
      const Token t = take();
      expect(Tok::LBrace, "'{'");
      std::set<std::string> hide;
      while (true) {
        hide.insert(expect_ident("channel name"));
        if (at(Tok::Comma)) {
          take();
          continue;
        }
        break;
      }
      expect(Tok::RBrace, "'}'");
      SP n = snode(SProc::Res, t.line, t.col);
      const_cast<SProc&>(*n).a = body;
      const_cast<SProc&>(*n).hide = std::move(hide);
      body = n;
    }
    return body;
  }

  SP prefix() {
    const Token t = cur();
    if (at(Tok::LParen)) {
      take();
      SP inner = sum();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at_ident("nil")) {
      take();
      return snode(SProc::Nil, t.line, t.col);
    }
    if (at_ident("tau")) {
      take();
      expect(Tok::Dot, "'.'");
      SP n = snode(SProc::Tau, t.line, t.col);
      const_cast<SProc&>(*n).a = prefix();
      return n;
    }
    if (!at(Tok::Ident)) throw err("expected a process");
    const std::string id = take().text;
    if (at(Tok::LBracket)) {  // op prefix
      take();
      std::vector<std::string> args;
      while (true) {
        args.push_back(expect_ident("variable"));
        if (at(Tok::Comma)) {
          take();
          continue;
        }
        break;
      }
      expect(Tok::RBracket, "']'");
      expect(Tok::Dot, "'.'");
      SP n = snode(SProc::Op, t.line, t.col);
      const_cast<SProc&>(*n).name = id;
      const_cast<SProc&>(*n).vars = std::move(args);
      const_cast<SProc&>(*n).a = prefix();
      return n;
    }
    if (at(Tok::Query) || at(Tok::Bang)) {
      const bool input = take().kind == Tok::Query;
      const std::string v = expect_ident("variable");
      expect(Tok::Dot, "'.'");
      SP n = snode(input ? SProc::In : SProc::Out, t.line, t.col);
      const_cast<SProc&>(*n).name = id;
      const_cast<SProc&>(*n).var = v;
      const_cast<SProc&>(*n).a = prefix();
      return n;
    }
    if (at(Tok::LParen)) {  // constant instantiation
      take();
      std::vector<std::string> args;
      while (at(Tok::Ident)) {
        args.push_back(take().text);
        if (at(Tok::Comma)) {
          take();
          continue;
        }
        break;
      }
      expect(Tok::RParen, "')'");
      SP n = snode(SProc::Const, t.line, t.col);
      const_cast<SProc&>(*n).name = id;
      const_cast<SProc&>(*n).vars = std::move(args);
      return n;
    }
    // bare identifier: allowed as a nullary constant reference
    if (raw_consts_.count(id) ? raw_consts_.at(id).params.empty()
                              : (out_.env.has(id) &&
                                 out_.env.lookup(id).params.empty())) {
      SP n = snode(SProc::Const, t.line, t.col);
      const_cast<SProc&>(*n).name = id;
      return n;
    }
    throw err_at(t.line, t.col,
                 "expected '[', '?', '!' or '(' after '" + id + "'");
  }

  // ---- type inference and resolution ----

  std::optional<VarType> lookup_const_param(const std::string& cname,
                                            std::size_t idx) const {
    auto it = raw_consts_.find(cname);
    if (it != raw_consts_.end()) {
      if (idx < it->second.param_types.size()) {
        return it->second.param_types[idx];
      }
      return std::nullopt;
    }
    if (out_.env.has(cname)) {
      const auto& def = out_.env.lookup(cname);
      if (idx < def.params.size()) return def.params[idx].type;
    }
    return std::nullopt;
  }

  // First type constraint on `name` in `s`, honoring binder shadowing.
  std::optional<VarType> infer_var_type(const SP& s,
                                        const std::string& name) const {
    if (!s) return std::nullopt;
    switch (s->k) {
      case SProc::Nil:
        return std::nullopt;
      case SProc::Op: {
        qnum::SuperOpPtr op = out_.find_op(s->name);
        if (op) {
          for (std::size_t i = 0; i < s->vars.size(); ++i) {
            if (s->vars[i] == name && i < op->slots().size()) {
              return op->slots()[i];
            }
          }
        }
        return infer_var_type(s->a, name);
      }
      case SProc::Const: {
        for (std::size_t i = 0; i < s->vars.size(); ++i) {
          if (s->vars[i] == name) {
            if (auto t = lookup_const_param(s->name, i)) return t;
          }
        }
        return std::nullopt;
      }
      case SProc::In:
        if (s->var == name) return std::nullopt;  // shadowed
        return infer_var_type(s->a, name);
      case SProc::Out:
      case SProc::Tau:
      case SProc::Res:
        return infer_var_type(s->a, name);
      case SProc::Sum:
      case SProc::Par: {
        if (auto t = infer_var_type(s->a, name)) return t;
        return infer_var_type(s->b, name);
      }
    }
    return std::nullopt;
  }

  VarType fallback_type(const SP& at_node, const std::string& what) const {
    if (out_.types.size() == 1) return out_.types.begin()->second;
    throw err_at(at_node->line, at_node->col,
                 "cannot infer the type of " + what +
                     " (annotate by using it in an operation, or declare a "
                     "single type)");
  }

  Var resolve_var(const SP& where, const std::string& name,
                  const std::map<std::string, Var>& scope) const {
    auto it = scope.find(name);
    if (it != scope.end()) return it->second;
    throw err_at(where->line, where->col,
                 "undeclared variable '" + name + "'");
  }

  void check_chan(const SP& s) const {
    if (!out_.chans.count(s->name)) {
      throw err_at(s->line, s->col, "undeclared channel '" + s->name + "'");
    }
  }

  ProcPtr resolve(const SP& s, std::map<std::string, Var> scope) const {
    switch (s->k) {
      case SProc::Nil:
        return ast::make_nil();
      case SProc::Tau:
        return ast::make_tau(resolve(s->a, scope));
      case SProc::Op: {
        qnum::SuperOpPtr op = out_.find_op(s->name);
        if (!op) {
          throw err_at(s->line, s->col,
                       "undeclared operation '" + s->name + "'");
        }
        if (op->arity() != s->vars.size()) {
          throw err_at(s->line, s->col,
                       "operation '" + s->name + "' expects " +
                           std::to_string(op->arity()) + " variable(s)");
        }
        std::vector<Var> args;
        for (std::size_t i = 0; i < s->vars.size(); ++i) {
          Var v = resolve_var(s, s->vars[i], scope);
          if (v.type.dim != op->slots()[i].dim) {
            throw err_at(s->line, s->col,
                         "variable '" + v.name + "' does not fit slot " +
                             std::to_string(i) + " of '" + s->name + "'");
          }
          args.push_back(std::move(v));
        }
        return ast::make_op(op, s->name, std::move(args),
                            resolve(s->a, scope));
      }
      case SProc::In: {
        check_chan(s);
        VarType t;
        if (auto inferred = infer_var_type(s->a, s->var)) {
          t = *inferred;
        } else {
          t = fallback_type(s, "input binder '" + s->var + "'");
        }
        Var binder{s->var, t};
        scope[s->var] = binder;
        return ast::make_input(s->name, binder, resolve(s->a, scope));
      }
      case SProc::Out: {
        check_chan(s);
        return ast::make_output(s->name, resolve_var(s, s->var, scope),
                                resolve(s->a, scope));
      }
      case SProc::Sum:
        return ast::make_sum(resolve(s->a, scope), resolve(s->b, scope));
      case SProc::Par:
        return ast::make_par(resolve(s->a, scope), resolve(s->b, scope));
      case SProc::Res:
        for (const std::string& c : s->hide) {
          if (!out_.chans.count(c)) {
            throw err_at(s->line, s->col, "undeclared channel '" + c + "'");
          }
        }
        return ast::make_restrict(resolve(s->a, scope), s->hide);
      case SProc::Const: {
        const bool known =
            raw_consts_.count(s->name) || out_.env.has(s->name);
        if (!known) {
          throw err_at(s->line, s->col,
                       "undefined process constant '" + s->name + "'");
        }
        std::vector<Var> args;
        for (const std::string& a : s->vars) {
          args.push_back(resolve_var(s, a, scope));
        }
        return ast::make_constant(s->name, std::move(args));
      }
    }
    throw err_at(s->line, s->col, "internal: unhandled surface node");
  }

  std::map<std::string, Var> base_scope() const {
    std::map<std::string, Var> scope;
    for (const Var& v : out_.declared_vars) scope.emplace(v.name, v);
    return scope;
  }

  void resolve_constants() {
    // Iterate parameter-type inference to a fixpoint so definitions can
    // reference each other in any order.
    bool progress = true;
    std::size_t guard = 0;
    while (progress && guard++ < raw_consts_.size() + 2) {
      progress = false;
      for (const std::string& name : const_order_) {
        RawConst& rc = raw_consts_.at(name);
        if (!rc.body) continue;
        for (std::size_t i = 0; i < rc.params.size(); ++i) {
          if (rc.param_types[i]) continue;
          if (auto t = infer_var_type(rc.body, rc.params[i])) {
            rc.param_types[i] = t;
            progress = true;
          }
        }
      }
    }
    for (const std::string& name : const_order_) {
      RawConst& rc = raw_consts_.at(name);
      if (!rc.body) {
        diags_.push_back({rc.line, rc.col,
                          "constant '" + name + "' has no definition body"});
        continue;
      }
      try {
        std::vector<Var> params;
        std::map<std::string, Var> scope = base_scope();
        for (std::size_t i = 0; i < rc.params.size(); ++i) {
          VarType t = rc.param_types[i]
                          ? *rc.param_types[i]
                          : fallback_type(rc.body, "parameter '" +
                                                       rc.params[i] + "'");
          Var pv{rc.params[i], t};
          params.push_back(pv);
          scope[pv.name] = pv;  // params shadow register vars
        }
        ProcPtr body = resolve(rc.body, std::move(scope));
        out_.env.define(ast::ConstDef{name, std::move(params), body});
      } catch (const ParseError& e) {
        diags_.push_back(e.diag);
      } catch (const std::invalid_argument& e) {
        diags_.push_back({rc.line, rc.col, e.what()});
      }
    }
    // Whole-environment checks (fv(body) within params etc.).
    if (ast::WfReport r = ast::validate_env(out_.env); !r.ok) {
      diags_.push_back({0, 0, r.message});
    }
  }

  // ---- states ----
  void finish_register_and_states() {
    if (register_built_) return;
    register_built_ = true;
    try {
      out_.reg = sos::seed_register(out_.declared_vars, out_.fresh_per_type);
    } catch (const std::invalid_argument& e) {
      diags_.push_back({0, 0, e.what()});
      return;
    }
    for (const RawState& rs : raw_states_) {
      const std::size_t save = pos_;
      pos_ = rs.first_tok;
      try {
        qnum::QState st = state_rhs(rs);
        out_.states.emplace(rs.name, std::move(st));
      } catch (const ParseError& e) {
        diags_.push_back(e.diag);
      } catch (const std::invalid_argument& e) {
        diags_.push_back({rs.line, rs.col, e.what()});
      }
      pos_ = save;
    }
  }

  ComplexMatrix ket_lit(const VarType& type) {
    expect(Tok::Pipe, "'|'");
    ComplexMatrix ket;
    if (at(Tok::Number)) {
      const double k = take().number;
      if (k != std::floor(k) || k < 0 ||
          static_cast<std::size_t>(k) >= type.dim) {
        throw err("basis index out of range for type '" + type.name + "'");
      }
      ket = qnum::basis_ket(type.dim, static_cast<std::size_t>(k));
    } else if (at(Tok::Plus) || at(Tok::Minus)) {
      const bool plus = take().kind == Tok::Plus;
      if (type.dim != 2) {
        throw err("'|+>' and '|->' need a two-dimensional type");
      }
      const double r = 1.0 / std::numbers::sqrt2;
      ket = ComplexMatrix(2, 1);
      ket.at(0, 0) = r;
      ket.at(1, 0) = plus ? r : -r;
    } else {
      throw err("expected a ket");
    }
    expect(Tok::Greater, "'>'");
    return ket;
  }

  qnum::QState state_rhs(const RawState& rs) {
    if (at_ident("matrix")) {
      take();
      ComplexMatrix m = matrix_lit();
      return qnum::QState(out_.reg, std::move(m), qnum::TraceKind::density);
    }
    std::map<std::string, ComplexMatrix> kets;
    std::vector<std::pair<std::pair<std::string, std::string>, std::string>>
        bells;
    std::set<std::string> mentioned;
    while (true) {
      if (at(Tok::LParen)) {
        take();
        const std::string u = expect_ident("variable");
        expect(Tok::Comma, "','");
        const std::string v = expect_ident("variable");
        expect(Tok::RParen, "')'");
        expect(Tok::Colon, "':'");
        const std::string bell = expect_ident("bell state name");
        if (bell != "bell00" && bell != "bell01" && bell != "bell10" &&
            bell != "bell11") {
          throw err("unknown bell state '" + bell + "'");
        }
        for (const std::string& n : {u, v}) {
          if (!out_.reg.contains(n)) {
            throw err("unknown register variable '" + n + "'");
          }
          if (out_.reg.var(n).type.dim != 2) {
            throw err("bell states need qubit-typed variables");
          }
          if (!mentioned.insert(n).second) {
            throw err("variable '" + n + "' mentioned twice in state");
          }
        }
        if (u == v) throw err("bell pair needs two distinct variables");
        bells.push_back({{u, v}, bell});
      } else {
        const std::string v = expect_ident("variable");
        if (!out_.reg.contains(v)) {
          throw err("unknown register variable '" + v + "'");
        }
        if (!mentioned.insert(v).second) {
          throw err("variable '" + v + "' mentioned twice in state");
        }
        expect(Tok::Colon, "':'");
        kets.emplace(v, ket_lit(out_.reg.var(v).type));
      }
      if (at(Tok::Comma)) {
        take();
        continue;
      }
      break;
    }
    (void)rs;
    // Bell pairs first, then the product of everything else.
    std::vector<std::string> rest;
    for (const Var& v : out_.reg.vars()) {
      bool in_bell = false;
      for (const auto& b : bells) {
        in_bell = in_bell || b.first.first == v.name || b.first.second == v.name;
      }
      if (!in_bell) rest.push_back(v.name);
    }
    qnum::QState acc =
        qnum::product_pure_state(out_.reg.sub(rest), kets);
    for (const auto& b : bells) {
      const auto& [u, v] = b.first;
      const double r = 1.0 / std::numbers::sqrt2;
      ComplexMatrix ket(4, 1);
      if (b.second == "bell00") {
        ket.at(0, 0) = r;
        ket.at(3, 0) = r;
      } else if (b.second == "bell01") {
        ket.at(1, 0) = r;
        ket.at(2, 0) = r;
      } else if (b.second == "bell10") {
        ket.at(0, 0) = r;
        ket.at(3, 0) = -r;
      } else {
        ket.at(1, 0) = r;
        ket.at(2, 0) = -r;
      }
      // The 4-dim ket above lists the pair (u, v) with u most
      // significant; permute when v sorts before u.
      qnum::Register pair_reg = out_.reg.sub({u, v});
      if (pair_reg.vars().front().name != u) {
        ComplexMatrix p(4, 1);
        p.at(0, 0) = ket.at(0, 0);
        p.at(1, 0) = ket.at(2, 0);
        p.at(2, 0) = ket.at(1, 0);
        p.at(3, 0) = ket.at(3, 0);
        ket = std::move(p);
      }
      qnum::QState pair(pair_reg, qnum::outer(ket), qnum::TraceKind::density);
      acc = qnum::state_tensor(acc, pair);
    }
    return acc;
  }

  // ---- checks ----
  void resolve_checks() {
    for (const RawCheck& rc : raw_checks_) {
      try {
        CheckDirective d = rc.partial;
        d.p = resolve(rc.p, base_scope());
        d.q = resolve(rc.q, base_scope());
        for (const std::string& s : d.states) {
          if (!out_.states.count(s)) {
            throw err_at(rc.line, rc.col, "unknown state '" + s + "'");
          }
        }
        for (const ProcPtr& pr : {d.p, d.q}) {
          if (ast::WfReport r = ast::well_formed(pr, out_.env); !r.ok) {
            throw err_at(rc.line, rc.col, r.message);
          }
        }
        out_.checks.push_back(std::move(d));
      } catch (const ParseError& e) {
        diags_.push_back(e.diag);
      }
    }
  }

  ProcPtr resolve_proc_or_null(const SP& s) {
    try {
      ProcPtr p = resolve(s, base_scope());
      if (ast::WfReport r = ast::well_formed(p, out_.env); !r.ok) {
        diags_.push_back({s->line, s->col, r.message});
        return nullptr;
      }
      return p;
    } catch (const ParseError& e) {
      diags_.push_back(e.diag);
      return nullptr;
    }
  }
};

}  // namespace

ParseResult parse_file(const std::string& text, std::size_t fresh_per_type) {
  ParseResult result;
  result.file.fresh_per_type = fresh_per_type;
  LexResult lr = lex(text);
  if (!lr.error.empty()) {
    result.diagnostics.push_back({lr.error_line, lr.error_col, lr.error});
    return result;
  }
  Parser p(std::move(lr.tokens), result.file, result.diagnostics);
  p.run();

  // Definition bodies must also be well-formed as processes.
  for (const auto& [name, def] : result.file.env.all()) {
    if (ast::WfReport r = ast::well_formed(def.body, result.file.env);
        !r.ok) {
      result.diagnostics.push_back(
          {0, 0, "in definition of '" + name + "': " + r.message});
    }
  }
  result.ok = result.diagnostics.empty();
  return result;
}

ast::ProcPtr parse_process(const std::string& text, const SourceFile& ctx,
                           std::vector<Diagnostic>& diags) {
  LexResult lr = lex(text);
  if (!lr.error.empty()) {
    diags.push_back({lr.error_line, lr.error_col, lr.error});
    return nullptr;
  }
  SourceFile scratch = ctx;
  std::vector<Diagnostic> local;
  Parser p(std::move(lr.tokens), scratch, local);
  ast::ProcPtr out = p.expression();
  diags.insert(diags.end(), local.begin(), local.end());
  return out;
}

}  // namespace qccs::parse
