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

#include "qccs/sos/action.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qccs::sos {

Action Action::tau() {
  Action a;
  a.kind = AKind::Tau;
  a.label = "tau";
  return a;
}

Action Action::in(std::string chan, Var v) {
  Action a;
  a.kind = AKind::In;
  a.label = chan + "?" + v.name;
  a.chan = std::move(chan);
  a.var = std::move(v);
  return a;
}

Action Action::out(std::string chan, Var v) {
  Action a;
  a.kind = AKind::Out;
  a.label = chan + "!" + v.name;
  a.chan = std::move(chan);
  a.var = std::move(v);
  return a;
}

namespace {

// Canonicalized payloads are memoized per (channel object, binding):
// the bisimulation game re-enumerates the same prefixes many times.
qnum::SuperOpPtr canonical_payload(const qnum::SuperOpPtr& raw,
                                   const std::vector<Var>& args,
                                   const std::vector<Var>& sorted) {
  static std::mutex mu;
  static std::map<std::pair<const qnum::SuperOp*, std::string>,
                  std::pair<qnum::SuperOpPtr, qnum::SuperOpPtr>>
      cache;
  std::string key;
  for (const Var& v : args) {
    key += v.name;
    key += ',';
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({raw.get(), key});
    if (it != cache.end()) return it->second.second;
  }
  qnum::SuperOpPtr canon = qnum::extend_superop(raw, args, sorted);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(raw.get(), key),
                std::make_pair(raw, canon));  // keep raw alive for the key
  return canon;
}

}  // namespace

Action Action::op_action(const qnum::SuperOpPtr& raw,
                         const std::string& op_name,
                         const std::vector<Var>& args) {
  Action a;
  a.kind = AKind::Op;
  std::ostringstream lbl;
  lbl << op_name << "[";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) lbl << ",";
    lbl << args[i].name;
  }
  lbl << "]";
  a.label = lbl.str();
  a.xs = args;
  std::sort(a.xs.begin(), a.xs.end());
  a.op = canonical_payload(raw, args, a.xs);
  return a;
}

std::string Action::key(double grid) const {
  switch (kind) {
    case AKind::Tau:
      return "tau";
    case AKind::In:
      return chan + "?" + var.name;
    case AKind::Out:
      return chan + "!" + var.name;
    case AKind::Op: {
      std::ostringstream os;
      os << "op#" << std::hex << qnum::fingerprint(op->choi(), grid) << "[";
      for (const Var& v : xs) os << v.name << ",";
      os << "]";
      return os.str();
    }
  }
  return {};
}

bool action_equal(const Action& a, const Action& b, double tol) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AKind::Tau:
      return true;
    case AKind::In:
    case AKind::Out:
      return a.chan == b.chan && a.var.name == b.var.name;
    case AKind::Op:
      if (a.xs.size() != b.xs.size()) return false;
      for (std::size_t i = 0; i < a.xs.size(); ++i) {
        if (a.xs[i] != b.xs[i]) return false;
      }
      return qnum::superop_equal(*a.op, *b.op, tol);
  }
  return false;
}

std::set<std::string> fv_action(const Action& a) {
  switch (a.kind) {
    case AKind::Out: {
      return {a.var.name};
    }
    case AKind::Op: {
      std::set<std::string> s;
      for (const Var& v : a.xs) s.insert(v.name);
      return s;
    }
    default:
      return {};
  }
}

std::optional<std::string> bv_action(const Action& a) {
  if (a.kind == AKind::In) return a.var.name;
  return std::nullopt;
}

std::optional<std::string> cn_action(const Action& a) {
  if (a.kind == AKind::In || a.kind == AKind::Out) return a.chan;
  return std::nullopt;
}

}  // namespace qccs::sos
