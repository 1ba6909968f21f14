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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qccs/corpus/corpus.hpp"
#include "qccs/equiv/distance.hpp"
#include "qccs/equiv/laws.hpp"
#include "qccs/parse/parser.hpp"
#include "qccs/parse/pretty.hpp"
#include "qccs/reduce/reduce.hpp"
#include "qccs/sos/lts.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct Common {
  std::string file;
  std::size_t fresh = 1;
  std::uint64_t seed = 0x5eed5eedULL;
  std::size_t threads = 1;
};

std::uint64_t env_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("QCCS_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return fallback;
}

int load(const Common& c, qccs::parse::SourceFile& out, bool print_diags) {
  std::ifstream in(c.file);
  if (!in) {
    std::cerr << "qccs: cannot open '" << c.file << "'\n";
    return kExitNoInput;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  qccs::parse::ParseResult r =
      qccs::parse::parse_file(ss.str(), c.fresh);
  if (!r.ok) {
    if (print_diags) {
      for (const auto& d : r.diagnostics) {
        std::cout << c.file << ":" << d.to_string() << "\n";
      }
    }
    return kExitDiagnostics;
  }
  out = std::move(r.file);
  return kExitOk;
}

qccs::ast::ProcPtr need_proc(const qccs::parse::SourceFile& f,
                             const std::string& expr) {
  std::vector<qccs::parse::Diagnostic> diags;
  qccs::ast::ProcPtr p = qccs::parse::parse_process(expr, f, diags);
  if (!p) {
    for (const auto& d : diags) {
      std::cerr << "qccs: in '" << expr << "': " << d.to_string() << "\n";
    }
  }
  return p;
}

std::vector<qccs::qnum::QState> named_states(
    const qccs::parse::SourceFile& f, const std::vector<std::string>& names) {
  std::vector<qccs::qnum::QState> out;
  for (const std::string& n : names) {
    const qccs::qnum::QState* s = f.find_state(n);
    if (!s) {
      throw std::invalid_argument("unknown state '" + n + "'");
    }
    out.push_back(*s);
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int verdict_exit(const qccs::equiv::Verdict& v) {
  switch (v.result) {
    case qccs::equiv::Result::bisimilar:
      return kExitOk;
    case qccs::equiv::Result::not_bisimilar:
      return kExitRefuted;
    case qccs::equiv::Result::unknown:
      return kExitUnknown;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qCCS toolkit: operational semantics, reduction and "
               "bisimilarity for quantum processes"};
  app.require_subcommand(1);

  Common common;
  std::string proc_expr, state_name, format = "dot", out_path;
  std::string p_expr, q_expr, states_csv, kind = "sb", e_name, f_name;
  std::size_t depth = 64, max_nodes = 4096, budget = 20, trials = 25;
  double tol = qccs::qnum::kTolChannel;

  auto add_common = [&](CLI::App* sub, bool needs_file = true) {
    if (needs_file) {
      sub->add_option("file", common.file, "input .qccs file")->required();
    }
    sub->add_option("--fresh", common.fresh,
                    "fresh variables seeded per type");
    sub->add_option("--seed", common.seed, "random seed (QCCS_SEED wins)");
    sub->add_option("--threads", common.threads, "worker threads");
  };

  CLI::App* cmd_parse = app.add_subcommand("parse", "parse and validate");
  add_common(cmd_parse);

  CLI::App* cmd_steps = app.add_subcommand("steps", "list transitions");
  add_common(cmd_steps);
  cmd_steps->add_option("--proc", proc_expr, "process expression")->required();
  cmd_steps->add_option("--state", state_name, "named state")->required();
  cmd_steps->add_option("--depth", depth, "trace depth");

  CLI::App* cmd_lts = app.add_subcommand("lts", "explore and export an LTS");
  add_common(cmd_lts);
  cmd_lts->add_option("--proc", proc_expr, "process expression")->required();
  cmd_lts->add_option("--state", state_name, "named state")->required();
  cmd_lts->add_option("--format", format, "dot|json");
  cmd_lts->add_option("--depth", depth, "BFS depth bound");
  cmd_lts->add_option("--max-nodes", max_nodes, "node budget");
  cmd_lts->add_option("-o,--output", out_path, "output file");

  CLI::App* cmd_nf = app.add_subcommand("nf", "operation-reduction normal form");
  add_common(cmd_nf);
  cmd_nf->add_option("--proc", proc_expr, "process expression")->required();

  CLI::App* cmd_bisim = app.add_subcommand("bisim", "strong bisimilarity");
  add_common(cmd_bisim);
  cmd_bisim->add_option("--p", p_expr, "left process");
  cmd_bisim->add_option("--q", q_expr, "right process");
  cmd_bisim->add_option("--states", states_csv, "comma-separated state names");
  cmd_bisim->add_option("--depth", depth, "game depth bound");
  cmd_bisim->add_option("--tol", tol, "channel equality tolerance");

  CLI::App* cmd_rbisim =
      app.add_subcommand("rbisim", "strong reduction-bisimilarity");
  add_common(cmd_rbisim);
  cmd_rbisim->add_option("--p", p_expr, "left process");
  cmd_rbisim->add_option("--q", q_expr, "right process");
  cmd_rbisim->add_option("--states", states_csv, "comma-separated state names");
  cmd_rbisim->add_option("--depth", depth, "game depth bound");
  cmd_rbisim->add_option("--tol", tol, "channel equality tolerance");

  CLI::App* cmd_dist = app.add_subcommand("distance", "bisimulation distances");
  add_common(cmd_dist);
  cmd_dist->add_option("--kind", kind, "sb|srb|diamond");
  cmd_dist->add_option("--p", p_expr, "left process (sb|srb)");
  cmd_dist->add_option("--q", q_expr, "right process (sb|srb)");
  cmd_dist->add_option("--e", e_name, "left channel (diamond)");
  cmd_dist->add_option("--f", f_name, "right channel (diamond)");
  cmd_dist->add_option("--states", states_csv, "comma-separated state names");
  cmd_dist->add_option("--budget", budget, "diamond multi-start budget");

  CLI::App* cmd_selftest =
      app.add_subcommand("selftest", "run the embedded example corpus");
  add_common(cmd_selftest, false);
  cmd_selftest->add_option("--trials", trials, "trials per law");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  common.seed = env_seed(common.seed);

  try {
    if (cmd_parse->parsed()) {
      qccs::parse::SourceFile f;
      const int rc = load(common, f, true);
      if (rc == kExitOk) std::cout << "ok\n";
      return rc;
    }

    qccs::equiv::GameOptions game;
    game.max_rounds = depth;
    game.chan_tol = tol;
    game.seed = common.seed;
    game.diamond.seed = common.seed;
    game.diamond.threads = common.threads;
    game.diamond.starts = budget;
    game.policy.fresh_per_type = common.fresh;

    if (cmd_steps->parsed()) {
      qccs::parse::SourceFile f;
      if (int rc = load(common, f, true); rc != kExitOk) return rc;
      qccs::ast::ProcPtr p = need_proc(f, proc_expr);
      if (!p) return kExitDiagnostics;
      const qccs::qnum::QState* s = f.find_state(state_name);
      if (!s) {
        std::cerr << "qccs: unknown state '" << state_name << "'\n";
        return kExitUsage;
      }
      qccs::sos::Configuration c{p, *s};
      for (const auto& t :
           qccs::sos::enabled(c, f.env, game.policy)) {
        std::ostringstream fp;
        fp << std::hex << t.target.state->fingerprint();
        std::cout << t.action.label << " :: "
                  << qccs::parse::pretty(t.target.proc) << " :: " << fp.str()
                  << "\n";
      }
      return kExitOk;
    }

    if (cmd_lts->parsed()) {
      qccs::parse::SourceFile f;
      if (int rc = load(common, f, true); rc != kExitOk) return rc;
      qccs::ast::ProcPtr p = need_proc(f, proc_expr);
      if (!p) return kExitDiagnostics;
      const qccs::qnum::QState* s = f.find_state(state_name);
      if (!s) {
        std::cerr << "qccs: unknown state '" << state_name << "'\n";
        return kExitUsage;
      }
      qccs::sos::Lts lts = qccs::sos::build_lts(
          {p, *s}, f.env, {depth, max_nodes}, game.policy);
      std::string text = format == "json" ? qccs::sos::lts_to_json(lts)
                                          : qccs::sos::lts_to_dot(lts);
      if (format != "json" && format != "dot") {
        std::cerr << "qccs: unknown format '" << format << "'\n";
        return kExitUsage;
      }
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
      }
      return kExitOk;
    }

    if (cmd_nf->parsed()) {
      qccs::parse::SourceFile f;
      if (int rc = load(common, f, true); rc != kExitOk) return rc;
      qccs::ast::ProcPtr p = need_proc(f, proc_expr);
      if (!p) return kExitDiagnostics;
      std::cout << qccs::parse::pretty(qccs::reduce::normal_form(p, f.env))
                << "\n";
      return kExitOk;
    }

    if (cmd_bisim->parsed() || cmd_rbisim->parsed()) {
      const bool reduction = cmd_rbisim->parsed();
      qccs::parse::SourceFile f;
      if (int rc = load(common, f, true); rc != kExitOk) return rc;
      qccs::ast::ProcPtr p, q;
      std::vector<qccs::qnum::QState> states;
      if (p_expr.empty() && q_expr.empty()) {
        // fall back to the file's first matching check directive
        const std::string want = reduction ? "rbisim" : "bisim";
        for (const auto& c : f.checks) {
          if (c.kind == want) {
            p = c.p;
            q = c.q;
            states = named_states(f, c.states);
            break;
          }
        }
        if (!p) {
          std::cerr << "qccs: no --p/--q and no '" << want
                    << "' check directive in the file\n";
          return kExitUsage;
        }
      } else {
        p = need_proc(f, p_expr);
        q = need_proc(f, q_expr);
        if (!p || !q) return kExitDiagnostics;
        states = named_states(f, split_csv(states_csv));
      }
      qccs::equiv::Verdict v =
          reduction
              ? qccs::equiv::reduction_bisim(p, q, f.env, f.reg, states, game)
              : qccs::equiv::bisim_process(p, q, f.env, f.reg, states, game);
      std::cout << v.to_json() << "\n";
      return verdict_exit(v);
    }

    if (cmd_dist->parsed()) {
      qccs::parse::SourceFile f;
      if (int rc = load(common, f, true); rc != kExitOk) return rc;
      if (kind == "diamond") {
        qccs::qnum::SuperOpPtr e = f.find_op(e_name);
        qccs::qnum::SuperOpPtr g = f.find_op(f_name);
        if (!e || !g) {
          std::cerr << "qccs: --kind diamond needs declared --e and --f\n";
          return kExitUsage;
        }
        qccs::qnum::DiamondOptions dopts;
        dopts.starts = budget;
        dopts.seed = common.seed;
        dopts.threads = common.threads;
        std::cout << qccs::qnum::diamond_distance(*e, *g, dopts) << "\n";
        return kExitOk;
      }
      if (kind != "sb" && kind != "srb") {
        std::cerr << "qccs: --kind must be sb, srb or diamond\n";
        return kExitUsage;
      }
      qccs::ast::ProcPtr p, q;
      std::vector<qccs::qnum::QState> states;
      if (p_expr.empty() && q_expr.empty()) {
        for (const auto& c : f.checks) {
          if (c.kind == "distance" && c.dist_kind == kind) {
            p = c.p;
            q = c.q;
            states = named_states(f, c.states);
            break;
          }
        }
        if (!p) {
          std::cerr << "qccs: no --p/--q and no matching 'distance' check "
                       "directive\n";
          return kExitUsage;
        }
      } else {
        p = need_proc(f, p_expr);
        q = need_proc(f, q_expr);
        if (!p || !q) return kExitDiagnostics;
        states = named_states(f, split_csv(states_csv));
      }
      qccs::equiv::DistanceReport rep =
          kind == "sb"
              ? qccs::equiv::dsb_estimate(p, q, f.env, f.reg, states, game)
              : qccs::equiv::dsrb_estimate(p, q, f.env, f.reg, states, game);
      std::cout << rep.to_json() << "\n";
      return kExitOk;
    }

    if (cmd_selftest->parsed()) {
      bool all_ok = true;
      for (const qccs::corpus::Check& c : qccs::corpus::run_all_replays()) {
        all_ok = all_ok && c.pass;
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
      }
      qccs::equiv::LawContext ctx = qccs::equiv::make_law_context();
      qccs::equiv::LawRunOptions lopts;
      lopts.trials = trials;
      lopts.seed = common.seed;
      lopts.game.suite_products = 6;
      lopts.game.suite_entangled = 3;
      for (const auto& law : qccs::equiv::run_monoid_laws(ctx, lopts)) {
        all_ok = all_ok && law.ok();
        std::cout << (law.ok() ? "PASS" : "FAIL") << "  law " << law.law
                  << " (" << law.pass << "/" << trials << ")";
        if (!law.ok()) std::cout << "  " << law.first_failure;
        std::cout << "\n";
      }
      qccs::equiv::LawRunOptions eopts = lopts;
      eopts.trials = trials / 2 + 1;
      const auto exp = qccs::equiv::run_expansion_law(ctx, eopts);
      all_ok = all_ok && exp.ok();
      std::cout << (exp.ok() ? "PASS" : "FAIL") << "  " << exp.law << " ("
                << exp.pass << "/" << eopts.trials << ")\n";
      return all_ok ? kExitOk : kExitRefuted;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "qccs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qccs: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
