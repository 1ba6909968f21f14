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

#include "qccs/sos/lts.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qccs/parse/pretty.hpp"

namespace qccs::sos {

Lts build_lts(const Configuration& c0, const ast::Env& env,
              const LtsBounds& bounds, const FreshPolicy& policy) {
  Lts lts;
  std::map<std::string, std::size_t> index;
  std::deque<std::pair<std::size_t, std::size_t>> frontier;  // (node, depth)
  std::set<std::tuple<std::size_t, std::string, std::size_t>> edge_seen;

  auto intern = [&](Configuration c) {
    std::string key = c.key();
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const std::size_t id = lts.nodes.size();
    lts.nodes.push_back({std::move(c), std::move(key), false});
    index.emplace(lts.nodes[id].key, id);
    return id;
  };

  lts.root = intern(c0);
  frontier.emplace_back(lts.root, 0);
  std::set<std::size_t> expanded;

  while (!frontier.empty()) {
    auto [id, depth] = frontier.front();
    frontier.pop_front();
    if (expanded.count(id)) continue;
    if (depth >= bounds.max_depth) {
      lts.nodes[id].truncated = true;
      lts.truncated = true;
      continue;
    }
    expanded.insert(id);
    for (Transition& t : enabled(lts.nodes[id].config, env, policy)) {
      if (lts.nodes.size() >= bounds.max_nodes &&
          index.find(t.target.key()) == index.end()) {
        lts.nodes[id].truncated = true;
        lts.truncated = true;
        continue;
      }
      const std::size_t to = intern(std::move(t.target));
      if (edge_seen.emplace(id, t.action.key(), to).second) {
        lts.edges.push_back({id, std::move(t.action), to});
      }
      if (!expanded.count(to)) frontier.emplace_back(to, depth + 1);
    }
  }
  return lts;
}

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string state_fp(const Configuration& c) {
  std::ostringstream os;
  os << std::hex << c.state->fingerprint();
  return os.str();
}

}  // namespace

std::string lts_to_dot(const Lts& lts) {
  std::ostringstream os;
  os << "digraph lts {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lts.nodes.size(); ++i) {
    const LtsNode& n = lts.nodes[i];
    os << "  n" << i << " [label=\"" << escape_dot(parse::pretty(n.config.proc))
       << "\\n@" << state_fp(n.config) << "\"";
    if (i == lts.root) os << ", penwidth=2";
    if (n.truncated) os << ", style=dashed";
    os << "];\n";
  }
  for (const LtsEdge& e : lts.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\""
       << escape_dot(e.action.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string lts_to_json(const Lts& lts) {
  nlohmann::json j;
  j["root"] = lts.root;
  j["truncated"] = nlohmann::json::array();
  j["nodes"] = nlohmann::json::array();
  j["edges"] = nlohmann::json::array();
  for (std::size_t i = 0; i < lts.nodes.size(); ++i) {
    const LtsNode& n = lts.nodes[i];
    j["nodes"].push_back({{"id", i},
                          {"process", parse::pretty(n.config.proc)},
                          {"state", state_fp(n.config)}});
    if (n.truncated) j["truncated"].push_back(i);
  }
  for (const LtsEdge& e : lts.edges) {
    j["edges"].push_back(
        {{"from", e.from}, {"action", e.action.label}, {"to", e.to}});
  }
  return j.dump(2);
}

}  // namespace qccs::sos
