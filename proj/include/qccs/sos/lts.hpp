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

#ifndef QCCS_SOS_LTS_HPP
#define QCCS_SOS_LTS_HPP

#include <string>
#include <vector>

#include "qccs/sos/semantics.hpp"

namespace qccs::sos {

struct LtsNode {
  Configuration config;
  std::string key;
  bool truncated = false;  // expansion skipped by a bound
};

struct LtsEdge {
  std::size_t from;
  Action action;
  std::size_t to;
};

struct Lts {
  std::vector<LtsNode> nodes;  // BFS discovery order, root first
  std::vector<LtsEdge> edges;
  std::size_t root = 0;
  bool truncated = false;  // any bound hit
};

struct LtsBounds {
  std::size_t max_depth = 64;
  std::size_t max_nodes = 4096;
};

/// BFS closure of `enabled` with canonical-key node dedup. Bound hits
/// set truncation flags instead of failing.
Lts build_lts(const Configuration& c0, const ast::Env& env,
              const LtsBounds& bounds, const FreshPolicy& policy);

std::string lts_to_dot(const Lts& lts);
std::string lts_to_json(const Lts& lts);

}  // namespace qccs::sos

#endif
