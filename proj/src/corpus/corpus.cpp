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

#include "qccs/corpus/corpus.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qccs/equiv/game.hpp"
#include "qccs/parse/parser.hpp"
#include "qccs/sos/lts.hpp"

namespace qccs::corpus {

namespace {

const char* kBell = R"(// Bell-pair creation: receive a qubit and entangle it with z.
type qubit = 2;
chan c;
var x : qubit;
var z : qubit;

R1(z) = c?y.CNOT[y,z].nil;
P2(x) = c!x.nil;
R(x,z) = (R1(z) || P2(x))\{c};

state sigma = x:|+>, z:|0>;

check bisim R(x,z) R(x,z) with states {sigma};
)";

const char* kMeasure = R"(// Entangle, then measure the z system in the computational basis.
type qubit = 2;
chan c;
var x : qubit;
var z : qubit;

op M01 = measure computational on (a:qubit);
op M0 = branch 0 of M01;

S1(z) = c?y.CNOT[y,z].M01[z].nil;
P2(x) = c!x.nil;
S(x,z) = (S1(z) || P2(x))\{c};

state sigma = x:|+>, z:|0>;
)";

// sqrt(0.7) and sqrt(0.3): amplitude damping with gamma = 0.3
const char* kNoisy = R"(// Quantum noisy channel (amplitude damping, gamma = 0.3).
type qubit = 2;
chan c1;
chan c2;
var x : qubit;

op E on (a:qubit) = kraus {
  [[1, 0], [0, 0.8366600265340756]];
  [[0, 0.5477225575051661], [0, 0]]
};

C() = c1?y.E[y].c2!y.C();
P(x) = c1!x.nil;
Q() = c2?z.nil;
S(x) = (P(x) || C() || Q())\{c1,c2};

state rho1 = x:|1>;
)";

const char* kNoisyEnv = R"(// The same noisy channel in its system-environment presentation.
type qubit = 2;
chan c1;
chan c2;
var x : qubit;
var e : qubit;

// U on (system, environment): amplitude damping dilation
op EU on (a:qubit, b:qubit) = kraus {
  [[1, 0, 0, 0],
   [0, 0.8366600265340756, 0.5477225575051661, 0],
   [0, -0.5477225575051661, 0.8366600265340756, 0],
   [0, 0, 0, 1]]
};
op EP on (a:qubit, b:qubit) = gate I;
op EtrE on (a:qubit, b:qubit) = kraus {
  [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]];
  [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
};

Cenv(e) = c1?y.EU[y,e].EP[y,e].EtrE[y,e].c2!y.Cenv(e);
P(x) = c1!x.nil;
Q() = c2?z.nil;
S(x,e) = (P(x) || Cenv(e) || Q())\{c1,c2};

state rho1 = x:|1>, e:|0>;
)";

const char* kCopier = R"(// Approximate quantum copier (CNOT copies the computational basis).
type qubit = 2;
chan c;
chan d;
var x : qubit;
var x0 : qubit;

Cp() = c?y.d?z.CNOT[y,z].c!y.c!z.Cp();
Q(x) = c!x.c?u.c?v.nil;
R(x0) = d!x0.nil;
S(x,x0) = (Cp() || Q(x) || R(x0))\{c,d};

state phi = x:|1>, x0:|0>;
)";

const char* kLaws = R"(// Small algebraic-law demonstrations for the CLI.
type qubit = 2;
chan c;
var x : qubit;

Pbase(x) = H[x].c!x.nil;
PplusNil(x) = Pbase(x) + nil;
Ptt(x) = T[x].T[x].nil;
Ps(x) = S[x].nil;

state s0 = x:|0>;

check bisim PplusNil(x) Pbase(x) with states {s0};
check rbisim Ptt(x) Ps(x) with states {s0};
check distance srb Ptt(x) Ps(x) with states {s0};
)";

parse::SourceFile must_parse(const std::string& name) {
  parse::ParseResult r = parse::parse_file(files().at(name));
  if (!r.ok) {
    std::string msg = "corpus file " + name + " failed to parse:";
    for (const auto& d : r.diagnostics) msg += "\n  " + d.to_string();
    throw std::logic_error(msg);
  }
  return std::move(r.file);
}

struct Walk {
  std::vector<std::string> labels;
  sos::Configuration final;
  bool linear = true;
  std::string shape;
};

// Follows the unique path of a linear LTS.
Walk walk_lts(const sos::Lts& lts) {
  Walk w;
  std::size_t cur = lts.root;
  w.final = lts.nodes[cur].config;
  std::map<std::size_t, std::vector<const sos::LtsEdge*>> by_from;
  for (const sos::LtsEdge& e : lts.edges) by_from[e.from].push_back(&e);
  std::set<std::size_t> seen;
  while (true) {
    auto it = by_from.find(cur);
    if (it == by_from.end()) break;
    if (it->second.size() != 1) {
      w.linear = false;
      std::ostringstream os;
      os << it->second.size() << " outgoing edges at node " << cur;
      w.shape = os.str();
      break;
    }
    const sos::LtsEdge* e = it->second.front();
    w.labels.push_back(e->action.label);
    cur = e->to;
    w.final = lts.nodes[cur].config;
    if (!seen.insert(cur).second) break;  // loop guard
  }
  return w;
}

Check expect(const std::string& name, bool cond, const std::string& detail) {
  return Check{name, cond, cond ? "" : detail};
}

Check expect_labels(const std::string& name, const Walk& w,
                    const std::vector<std::string>& want) {
  if (!w.linear) {
    return {name, false, "trace is not linear: " + w.shape};
  }
  if (w.labels != want) {
    std::string got;
    for (const auto& l : w.labels) got += l + " ";
    std::string expected;
    for (const auto& l : want) expected += l + " ";
    return {name, false, "trace [" + got + "] != [" + expected + "]"};
  }
  return {name, true, ""};
}

qnum::ComplexMatrix bell00_projector() {
  const double r = 1.0 / std::numbers::sqrt2;
  qnum::ComplexMatrix ket(4, 1);
  ket.at(0, 0) = r;
  ket.at(3, 0) = r;
  return qnum::outer(ket);
}

}  // namespace

const std::map<std::string, std::string>& files() {
  static const std::map<std::string, std::string> f{
      {"bell.qccs", kBell},         {"measure.qccs", kMeasure},
      {"noisy.qccs", kNoisy},       {"noisy_env.qccs", kNoisyEnv},
      {"copier.qccs", kCopier},     {"laws.qccs", kLaws},
  };
  return f;
}

std::vector<Check> replay_bell() {
  std::vector<Check> out;
  parse::SourceFile f = must_parse("bell.qccs");
  std::vector<parse::Diagnostic> diags;
  ast::ProcPtr r = parse::parse_process("R(x,z)", f, diags);
  const qnum::QState& sigma = *f.find_state("sigma");
  sos::Lts lts = sos::build_lts({r, sigma}, f.env, {}, sos::FreshPolicy{});
  Walk w = walk_lts(lts);
  out.push_back(expect_labels("bell trace tau.CNOT[x,z]", w,
                              {"tau", "CNOT[x,z]"}));
  // canonical order: #qubit_0, x, z
  qnum::ComplexMatrix want = qnum::mat_tensor(
      qnum::outer(qnum::basis_ket(2, 0)), bell00_projector());
  const double err = qnum::max_abs_diff(w.final.state->matrix(), want);
  std::ostringstream os;
  os << "max entry error " << err;
  out.push_back(expect("bell final state |beta00><beta00|", err <= 1e-9,
                       os.str()));
  return out;
}

std::vector<Check> replay_measurement() {
  std::vector<Check> out;
  parse::SourceFile f = must_parse("measure.qccs");
  std::vector<parse::Diagnostic> diags;
  ast::ProcPtr s = parse::parse_process("S(x,z)", f, diags);
  const qnum::QState& sigma = *f.find_state("sigma");
  sos::Lts lts = sos::build_lts({s, sigma}, f.env, {}, sos::FreshPolicy{});
  Walk w = walk_lts(lts);
  out.push_back(expect_labels("measurement trace tau.CNOT[x,z].M01[z]", w,
                              {"tau", "CNOT[x,z]", "M01[z]"}));
  qnum::ComplexMatrix mix(4, 4);
  mix.at(0, 0) = 0.5;  // |00><00|
  mix.at(3, 3) = 0.5;  // |11><11|
  qnum::ComplexMatrix want =
      qnum::mat_tensor(qnum::outer(qnum::basis_ket(2, 0)), mix);
  const double err = qnum::max_abs_diff(w.final.state->matrix(), want);
  std::ostringstream os;
  os << "max entry error " << err;
  out.push_back(
      expect("measurement final (|00><00|+|11><11|)/2", err <= 1e-9,
             os.str()));

  // branch probability per the measurement postulate
  qnum::SuperOpPtr m0 = f.find_op("M0");
  qnum::Register pair({{"x", {"qubit", 2}}, {"z", {"qubit", 2}}});
  qnum::QState bell(pair, bell00_projector(), qnum::TraceKind::density);
  qnum::QState after = qnum::apply_superop(*m0, {"z"}, bell);
  const double p0 = after.trace_real();
  std::ostringstream os2;
  os2 << "trace " << p0;
  out.push_back(expect("branch-0 probability 0.5 on the Bell state",
                       std::abs(p0 - 0.5) <= 1e-12, os2.str()));
  return out;
}

std::vector<Check> replay_noisy_channel() {
  std::vector<Check> out;
  parse::SourceFile f = must_parse("noisy.qccs");
  std::vector<parse::Diagnostic> diags;
  ast::ProcPtr s = parse::parse_process("S(x)", f, diags);
  const qnum::QState& rho1 = *f.find_state("rho1");
  sos::Lts lts = sos::build_lts({s, rho1}, f.env, {}, sos::FreshPolicy{});
  Walk w = walk_lts(lts);
  out.push_back(expect_labels("noisy trace tau.E[x].tau", w,
                              {"tau", "E[x]", "tau"}));

  // E(|1><1|) = (1-gamma)|1><1| + gamma|0><0|, gamma = 0.3
  qnum::ComplexMatrix ex(2, 2);
  ex.at(0, 0) = 0.3;
  ex.at(1, 1) = 0.7;
  qnum::ComplexMatrix want =
      qnum::mat_tensor(qnum::outer(qnum::basis_ket(2, 0)), ex);
  const double err = qnum::max_abs_diff(w.final.state->matrix(), want);
  std::ostringstream os;
  os << "max entry error " << err;
  out.push_back(
      expect("noisy final state E(rho) (x) rho'", err <= 1e-9, os.str()));

  // System-environment variant reproduces the same channel action.
  parse::SourceFile fe = must_parse("noisy_env.qccs");
  ast::ProcPtr se = parse::parse_process("S(x,e)", fe, diags);
  const qnum::QState& rho1e = *fe.find_state("rho1");
  sos::Lts ltse =
      sos::build_lts({se, rho1e}, fe.env, {}, sos::FreshPolicy{});
  Walk we = walk_lts(ltse);
  out.push_back(expect_labels(
      "system-environment trace tau.EU.EP.EtrE.tau", we,
      {"tau", "EU[x,e]", "EP[x,e]", "EtrE[x,e]", "tau"}));
  // x marginal agrees with the Kraus variant within 1e-9
  qnum::QState xe = qnum::partial_trace(*we.final.state, {"x"});
  qnum::QState xk = qnum::partial_trace(*w.final.state, {"x"});
  const double derr = qnum::max_abs_diff(xe.matrix(), xk.matrix());
  std::ostringstream os2;
  os2 << "max entry error " << derr;
  out.push_back(expect("system-environment variant matches Kraus variant",
                       derr <= 1e-9, os2.str()));
  // and the environment ends reset to |e0>
  qnum::QState emarg = qnum::partial_trace(*we.final.state, {"e"});
  const double eerr = qnum::max_abs_diff(
      emarg.matrix(), qnum::outer(qnum::basis_ket(2, 0)));
  out.push_back(expect("environment reset to |e0><e0|", eerr <= 1e-9,
                       "max entry error"));
  return out;
}

std::vector<Check> replay_copier() {
  std::vector<Check> out;
  parse::SourceFile f = must_parse("copier.qccs");
  std::vector<parse::Diagnostic> diags;
  ast::ProcPtr s = parse::parse_process("S(x,x0)", f, diags);
  const qnum::QState& phi = *f.find_state("phi");
  sos::Lts lts = sos::build_lts({s, phi}, f.env, {}, sos::FreshPolicy{});
  Walk w = walk_lts(lts);
  out.push_back(expect_labels(
      "copier trace tau.tau.CNOT[x,x0].tau.tau", w,
      {"tau", "tau", "CNOT[x,x0]", "tau", "tau"}));
  // |1>_x |0>_x0 copies to |1>_x |1>_x0; canonical order #qubit_0,x,x0
  std::map<std::string, qnum::ComplexMatrix> kets;
  kets.emplace("x", qnum::basis_ket(2, 1));
  kets.emplace("x0", qnum::basis_ket(2, 1));
  qnum::QState want = qnum::product_pure_state(w.final.state->reg(), kets);
  const double err =
      qnum::max_abs_diff(w.final.state->matrix(), want.matrix());
  std::ostringstream os;
  os << "max entry error " << err;
  out.push_back(
      expect("copier final state |1>_x |1>_x0", err <= 1e-9, os.str()));
  return out;
}

std::vector<Check> run_all_replays() {
  std::vector<Check> out;
  for (auto* fn : {replay_bell, replay_measurement, replay_noisy_channel,
                   replay_copier}) {
    for (Check& c : fn()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qccs::corpus
