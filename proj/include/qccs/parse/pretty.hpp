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

#ifndef QCCS_PARSE_PRETTY_HPP
#define QCCS_PARSE_PRETTY_HPP

#include <string>

#include "qccs/ast/process.hpp"

namespace qccs::parse {

/// Minimal-parentheses rendering; parse(pretty(p)) is alpha-equal to p.
std::string pretty(const ast::ProcPtr& p);

/// Rendering used for canonical keys: like pretty but op payloads are
/// tagged with their Choi fingerprints, making the string a sound
/// identity for memoization and LTS node dedup.
std::string canonical_key(const ast::ProcPtr& p, double grid = 1e-9);

}  // namespace qccs::parse

#endif
