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

#ifndef QCCS_QNUM_REGISTER_HPP
#define QCCS_QNUM_REGISTER_HPP

#include <string>
#include <vector>

#include "qccs/qnum/types.hpp"

namespace qccs::qnum {

/// A declared variable type: Hilbert-space dimension shared by all
/// variables of the type. Dimension 1 is rejected for declared types.
struct VarType {
  std::string name;
  std::size_t dim = 0;

  friend bool operator==(const VarType& a, const VarType& b) {
    return a.name == b.name && a.dim == b.dim;
  }
  friend bool operator!=(const VarType& a, const VarType& b) {
    return !(a == b);
  }
};

struct Var {
  std::string name;
  VarType type;

  friend bool operator==(const Var& a, const Var& b) {
    return a.name == b.name && a.type == b.type;
  }
  friend bool operator!=(const Var& a, const Var& b) { return !(a == b); }
  friend bool operator<(const Var& a, const Var& b) { return a.name < b.name; }
};

/// An ordered finite set of typed variables. Storage order is canonical:
/// lexicographic by variable name. The tensor factor order of every
/// QState matrix follows this order, first variable most significant.
class Register {
 public:
  Register() = default;
  explicit Register(std::vector<Var> vars,
                    std::size_t dim_cap = kDefaultDimCap);

  const std::vector<Var>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  std::size_t total_dim() const { return total_dim_; }

  bool contains(const std::string& name) const;
  /// Position in canonical order; throws for unknown names.
  std::size_t index_of(const std::string& name) const;
  const Var& var(const std::string& name) const;

  std::vector<std::size_t> dims() const;

  /// Sub-register of the named variables (canonical order preserved).
  Register sub(const std::vector<std::string>& keep) const;

  friend bool operator==(const Register& a, const Register& b) {
    return a.vars_ == b.vars_;
  }
  friend bool operator!=(const Register& a, const Register& b) {
    return !(a == b);
  }

 private:
  std::vector<Var> vars_;
  std::size_t total_dim_ = 1;
};

/// target_to_src[k] = index (in src_dims) of the factor that ends up at
/// position k. Returns the full-index gather map: out[i] = position in
/// the source ordering of composite index i of the target ordering.
std::vector<std::size_t> tensor_index_map(
    const std::vector<std::size_t>& src_dims,
    const std::vector<std::size_t>& target_to_src);

}  // namespace qccs::qnum

#endif
