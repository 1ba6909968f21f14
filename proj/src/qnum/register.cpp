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

#include "qccs/qnum/register.hpp"

#include <algorithm>
#include <stdexcept>

namespace qccs::qnum {

Register::Register(std::vector<Var> vars, std::size_t dim_cap)
    : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const Var& v = vars_[i];
    if (v.type.dim < 2) {
      throw std::invalid_argument("variable '" + v.name +
                                  "' has dimension < 2");
    }
    if (i > 0 && vars_[i - 1].name == v.name) {
      throw std::invalid_argument("duplicate register variable '" + v.name +
                                  "'");
    }
    if (total_dim_ > dim_cap / v.type.dim) {
      throw std::invalid_argument("register dimension exceeds cap");
    }
    total_dim_ *= v.type.dim;
  }
}

bool Register::contains(const std::string& name) const {
  auto it = std::lower_bound(
      vars_.begin(), vars_.end(), name,
      [](const Var& v, const std::string& n) { return v.name < n; });
  return it != vars_.end() && it->name == name;
}

std::size_t Register::index_of(const std::string& name) const {
  auto it = std::lower_bound(
      vars_.begin(), vars_.end(), name,
      [](const Var& v, const std::string& n) { return v.name < n; });
  if (it == vars_.end() || it->name != name) {
    throw std::invalid_argument("unknown register variable '" + name + "'");
  }
  return static_cast<std::size_t>(it - vars_.begin());
}

const Var& Register::var(const std::string& name) const {
  return vars_[index_of(name)];
}

std::vector<std::size_t> Register::dims() const {
  std::vector<std::size_t> d(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) d[i] = vars_[i].type.dim;
  return d;
}

Register Register::sub(const std::vector<std::string>& keep) const {
  std::vector<Var> vs;
  vs.reserve(keep.size());
  for (const std::string& n : keep) vs.push_back(var(n));
  return Register(std::move(vs));
}

std::vector<std::size_t> tensor_index_map(
    const std::vector<std::size_t>& src_dims,
    const std::vector<std::size_t>& target_to_src) {
  const std::size_t n = target_to_src.size();
  if (n != src_dims.size()) {
    throw std::invalid_argument("permutation length mismatch");
  }
  // Strides of each factor in the source ordering.
  std::vector<std::size_t> src_stride(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    src_stride[i - 1] = src_stride[i] * src_dims[i];
  }
  std::size_t total = 1;
  for (std::size_t d : src_dims) total *= d;

  std::vector<std::size_t> map(total);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rem = t;
    std::size_t src = 0;
    // Peel target digits most-significant first.
    std::size_t block = total;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t d = src_dims[target_to_src[k]];
      block /= d;
      const std::size_t digit = rem / block;
      rem %= block;
      src += digit * src_stride[target_to_src[k]];
    }
    map[t] = src;
  }
  return map;
}

}  // namespace qccs::qnum
