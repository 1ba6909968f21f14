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

#include "qccs/qnum/qstate.hpp"

#include <cmath>
#include <stdexcept>

#include "qccs/qnum/eig.hpp"

namespace qccs::qnum {

QState::QState(Register reg, ComplexMatrix mat, TraceKind kind, double tol)
    : reg_(std::move(reg)), mat_(std::move(mat)), kind_(kind) {
  validate(tol);
}

QState QState::trusted(Register reg, ComplexMatrix mat, TraceKind kind) {
  QState s;
  s.reg_ = std::move(reg);
  s.mat_ = std::move(mat);
  s.kind_ = kind;
  return s;
}

void QState::validate(double tol) const {
  if (!mat_.square() || mat_.rows() != reg_.total_dim()) {
    throw std::invalid_argument("state matrix side must match register dim");
  }
  if (!mat_.all_finite()) {
    throw std::invalid_argument("state matrix has non-finite entries");
  }
  if (hermiticity_defect(mat_) > tol) {
    throw std::invalid_argument("state matrix is not Hermitian");
  }
  if (min_eigenvalue(mat_) < -tol) {
    throw std::invalid_argument("state matrix is not positive semidefinite");
  }
  const double tr = trace_real();
  if (kind_ == TraceKind::density) {
    if (std::abs(tr - 1.0) > tol) {
      throw std::invalid_argument("density operator trace must be 1");
    }
  } else if (tr > 1.0 + tol) {
    throw std::invalid_argument("partial density operator trace must be <= 1");
  }
}

std::uint64_t QState::fingerprint(double grid) const {
  return qnum::fingerprint(mat_, grid);
}

QState partial_trace(const QState& s, const std::vector<std::string>& keep) {
  const Register& reg = s.reg();
  Register out_reg = reg.sub(keep);
  if (out_reg.size() == reg.size()) return s;

  std::vector<bool> kept(reg.size(), false);
  for (const std::string& n : keep) kept[reg.index_of(n)] = true;

  const std::vector<std::size_t> dims = reg.dims();
  const std::size_t total = reg.total_dim();

  // For each full index, its kept-part index and traced-part index.
  std::vector<std::size_t> kidx(total), tidx(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rem = i, k = 0, t = 0;
    std::size_t block = total;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      block /= dims[f];
      const std::size_t digit = rem / block;
      rem %= block;
      if (kept[f]) {
        k = k * dims[f] + digit;
      } else {
        t = t * dims[f] + digit;
      }
    }
    kidx[i] = k;
    tidx[i] = t;
  }

  ComplexMatrix out(out_reg.total_dim(), out_reg.total_dim());
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (tidx[i] == tidx[j]) out.at(kidx[i], kidx[j]) += s.matrix().at(i, j);

  return QState::trusted(std::move(out_reg), std::move(out), s.kind());
}

QState rename_state(const QState& s,
                    const std::map<std::string, std::string>& f) {
  const Register& reg = s.reg();
  std::vector<Var> new_vars;
  new_vars.reserve(reg.size());
  for (const Var& v : reg.vars()) {
    auto it = f.find(v.name);
    new_vars.push_back(
        it == f.end() ? v : Var{it->second, v.type});
  }
  // Injectivity on the image is enforced by the Register constructor
  // (duplicate names rejected).
  Register out_reg(new_vars);

  // Position in out_reg of each original factor.
  std::vector<std::size_t> target_to_src(reg.size());
  for (std::size_t k = 0; k < reg.size(); ++k) {
    // out_reg slot k holds the variable whose (renamed) name sorts k-th;
    // find which source factor it came from.
    const std::string& out_name = out_reg.vars()[k].name;
    for (std::size_t i = 0; i < new_vars.size(); ++i) {
      if (new_vars[i].name == out_name) {
        target_to_src[k] = i;
        break;
      }
    }
  }

  const std::vector<std::size_t> map =
      tensor_index_map(reg.dims(), target_to_src);
  ComplexMatrix out(s.matrix().rows(), s.matrix().cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = s.matrix().at(map[i], map[j]);
  return QState::trusted(std::move(out_reg), std::move(out), s.kind());
}

QState state_tensor(const QState& a, const QState& b) {
  std::vector<Var> vars = a.reg().vars();
  vars.insert(vars.end(), b.reg().vars().begin(), b.reg().vars().end());
  Register reg(vars);  // rejects overlaps

  // Concatenated order (a-factors then b-factors) -> canonical order.
  std::vector<std::size_t> concat_dims;
  for (const Var& v : a.reg().vars()) concat_dims.push_back(v.type.dim);
  for (const Var& v : b.reg().vars()) concat_dims.push_back(v.type.dim);
  std::vector<std::size_t> target_to_src(reg.size());
  for (std::size_t k = 0; k < reg.size(); ++k) {
    const std::string& name = reg.vars()[k].name;
    if (a.reg().contains(name)) {
      target_to_src[k] = a.reg().index_of(name);
    } else {
      target_to_src[k] = a.reg().size() + b.reg().index_of(name);
    }
  }

  const ComplexMatrix prod = mat_tensor(a.matrix(), b.matrix());
  const std::vector<std::size_t> map =
      tensor_index_map(concat_dims, target_to_src);
  ComplexMatrix out(prod.rows(), prod.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = prod.at(map[i], map[j]);

  const TraceKind kind = (a.kind() == TraceKind::density &&
                          b.kind() == TraceKind::density)
                             ? TraceKind::density
                             : TraceKind::partial;
  return QState::trusted(std::move(reg), std::move(out), kind);
}

QState product_pure_state(const Register& reg,
                          const std::map<std::string, ComplexMatrix>& kets) {
  ComplexMatrix full(1, 1);
  full.at(0, 0) = 1.0;
  for (const Var& v : reg.vars()) {
    auto it = kets.find(v.name);
    ComplexMatrix ket =
        it == kets.end() ? basis_ket(v.type.dim, 0) : it->second;
    if (ket.rows() != v.type.dim || ket.cols() != 1) {
      throw std::invalid_argument("ket dimension mismatch for '" + v.name +
                                  "'");
    }
    full = mat_tensor(full, ket);
  }
  return QState(reg, outer(full), TraceKind::density);
}

}  // namespace qccs::qnum
