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

#ifndef QCCS_CORPUS_CORPUS_HPP
#define QCCS_CORPUS_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

namespace qccs::corpus {

/// Embedded example sources (the same files are shipped under
/// corpus/).
const std::map<std::string, std::string>& files();

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Bell-pair creation: one tau then CNOT[x,z], ending in the projector
/// onto the Bell state.
std::vector<Check> replay_bell();

/// Computational-basis measurement after entangling: final mixture
/// (|00><00| + |11><11|)/2 and branch-0 trace 1/2.
std::vector<Check> replay_measurement();

/// Amplitude-damping noisy channel: tau . E[x] . tau ending in
/// E(rho) (x) rho', plus the system-environment variant agreeing with
/// the Kraus variant.
std::vector<Check> replay_noisy_channel();

/// Approximate copier: the five-transition trace tau tau U[x,x0] tau
/// tau with basis states copied exactly.
std::vector<Check> replay_copier();

std::vector<Check> run_all_replays();

}  // namespace qccs::corpus

#endif
