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

#include "qccs/qnum/superop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "qccs/qnum/eig.hpp"
#include "qccs/qnum/kernels.hpp"

namespace qccs::qnum {

namespace {

std::size_t slots_dim(const std::vector<VarType>& slots) {
  std::size_t d = 1;
  for (const VarType& t : slots) d *= t.dim;
  return d;
}

ComplexMatrix choi_of(const std::vector<ComplexMatrix>& kraus,
                      std::size_t d) {
  // J = sum_i v_i v_i^dag with v_i[(k, r)] = K_i[r][k].
  ComplexMatrix j(d * d, d * d);
  for (const ComplexMatrix& k : kraus) {
    ComplexMatrix v(d * d, 1);
    for (std::size_t col = 0; col < d; ++col)
      for (std::size_t row = 0; row < d; ++row)
        v.at(col * d + row, 0) = k.at(row, col);
    j += outer(v);
  }
  return j;
}

}  // namespace

SuperOp::SuperOp(std::vector<VarType> slots, std::vector<ComplexMatrix> kraus,
                 std::string label, double tol)
    : slots_(std::move(slots)),
      dim_(slots_dim(slots_)),
      kraus_(std::move(kraus)),
      label_(std::move(label)) {
  if (kraus_.empty()) {
    throw std::invalid_argument("empty Kraus list");
  }
  ComplexMatrix sum(dim_, dim_);
  for (const ComplexMatrix& k : kraus_) {
    if (!k.square() || k.rows() != dim_) {
      throw std::invalid_argument("Kraus element has wrong dimension");
    }
    if (!k.all_finite()) {
      throw std::invalid_argument("Kraus element has non-finite entries");
    }
    if (k.is_zero(0.0)) {
      throw std::invalid_argument("all-zero Kraus element");
    }
    kern::active().gemm_acc(k.dagger().data(), k.data(), sum.data(), dim_,
                            dim_, dim_);
  }
  trace_preserving_ =
      max_abs_diff(sum, ComplexMatrix::identity(dim_)) <= tol;
  if (!trace_preserving_) {
    // Loewner check: min eigenvalue of I - sum >= -tol.
    if (min_eigenvalue(ComplexMatrix::identity(dim_) - sum) < -tol) {
      throw std::invalid_argument(
          "Kraus list is not trace-nonincreasing (sum E^dag E above I)");
    }
  }
  choi_ = choi_of(kraus_, dim_);
}

ComplexMatrix SuperOp::apply_matrix(const ComplexMatrix& rho) const {
  if (!rho.square() || rho.rows() != dim_) {
    throw std::invalid_argument("operator dimension mismatch");
  }
  ComplexMatrix out(dim_, dim_);
  ComplexMatrix tmp(dim_, dim_);
  for (const ComplexMatrix& k : kraus_) {
    kern::active().gemm(k.data(), rho.data(), tmp.data(), dim_, dim_, dim_);
    kern::active().gemm_acc(tmp.data(), k.dagger().data(), out.data(), dim_,
                            dim_, dim_);
  }
  return out;
}

std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi,
                                           std::size_t dim, double tol) {
  if (choi.rows() != dim * dim) {
    throw std::invalid_argument("Choi matrix has wrong dimension");
  }
  EigResult eig = hermitian_eig(choi);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t idx = 0; idx < eig.values.size(); ++idx) {
    const double lambda = eig.values[idx];
    if (lambda <= tol) continue;
    const double w = std::sqrt(lambda);
    ComplexMatrix k(dim, dim);
    for (std::size_t col = 0; col < dim; ++col)
      for (std::size_t row = 0; row < dim; ++row)
        k.at(row, col) = w * eig.vectors.at(col * dim + row, idx);
    kraus.push_back(std::move(k));
  }
  return kraus;
}

SuperOpPtr superop_compose(const SuperOpPtr& f, const SuperOpPtr& e) {
  if (f->dim() != e->dim()) {
    throw std::invalid_argument("composed channels must share a dimension");
  }
  const std::size_t d = e->dim();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(f->kraus().size() * e->kraus().size());
  for (const ComplexMatrix& kf : f->kraus())
    for (const ComplexMatrix& ke : e->kraus()) {
      ComplexMatrix prod = kf * ke;
      if (!prod.is_zero(0.0)) kraus.push_back(std::move(prod));
    }
  const std::string label = f->label() + "∘" + e->label();
  if (kraus.size() > d * d || kraus.empty()) {
    // Canonical re-extraction keeps composed Kraus lists from growing
    // multiplicatively along long reduction chains.
    kraus = kraus_from_choi(choi_of(kraus, d), d);
  }
  return std::make_shared<SuperOp>(e->slots(), std::move(kraus), label);
}

bool superop_equal(const SuperOp& e, const SuperOp& f, double tol) {
  if (e.dim() != f.dim()) {
    throw std::invalid_argument("channel dimension mismatch");
  }
  return max_abs_diff(e.choi(), f.choi()) <= tol;
}

std::vector<ComplexMatrix> computational_measurement_ops(std::size_t dim) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) ops.push_back(outer(basis_ket(dim, k)));
  return ops;
}

SuperOpPtr measurement_superop(const std::vector<ComplexMatrix>& ops,
                               std::vector<VarType> slots, MeasureMode mode,
                               std::size_t branch, const std::string& label,
                               double tol) {
  const std::size_t d = slots_dim(slots);
  if (mode == MeasureMode::total) {
    ComplexMatrix sum(d, d);
    for (const ComplexMatrix& m : ops) {
      if (m.rows() != d || !m.square()) {
        throw std::invalid_argument("measurement operator dimension mismatch");
      }
      kern::active().gemm_acc(m.dagger().data(), m.data(), sum.data(), d, d,
                              d);
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(d)) > tol) {
      throw std::invalid_argument(
          "measurement operators violate the completeness equation");
    }
    return std::make_shared<SuperOp>(std::move(slots), ops, label);
  }
  if (branch >= ops.size()) {
    throw std::invalid_argument("measurement branch index out of range");
  }
  return std::make_shared<SuperOp>(
      std::move(slots), std::vector<ComplexMatrix>{ops[branch]},
      label + "#" + std::to_string(branch));
}

SuperOpPtr unitary_superop(std::vector<VarType> slots, ComplexMatrix u,
                           std::string label) {
  const std::size_t d = slots_dim(slots);
  if (!u.square() || u.rows() != d) {
    throw std::invalid_argument("unitary dimension mismatch");
  }
  return std::make_shared<SuperOp>(std::move(slots),
                                   std::vector<ComplexMatrix>{std::move(u)},
                                   std::move(label));
}

namespace {

const VarType kQubit{"qubit", 2};

ComplexMatrix gate_matrix(const std::string& name) {
  const double r = 1.0 / std::numbers::sqrt2;
  const cplx i{0.0, 1.0};
  if (name == "H") return {{r, r}, {r, -r}};
  if (name == "X") return {{0, 1}, {1, 0}};
  if (name == "Y") return {{0, -i}, {i, 0}};
  if (name == "Z") return {{1, 0}, {0, -1}};
  if (name == "S") return {{1, 0}, {0, i}};
  if (name == "T") return {{1, 0}, {0, cplx{r, r}}};
  if (name == "CNOT")
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  throw std::invalid_argument("unknown gate '" + name + "'");
}

}  // namespace

bool is_builtin_gate(const std::string& name) {
  static const std::set<std::string> names{"I", "H", "X",    "Y",
                                           "Z", "S", "T",    "CNOT"};
  return names.count(name) > 0;
}

SuperOpPtr named_gate(const std::string& name, std::size_t dim) {
  if (name == "I") {
    VarType slot = dim == 2 ? kQubit : VarType{"d" + std::to_string(dim), dim};
    return unitary_superop({slot}, ComplexMatrix::identity(dim), "I");
  }
  if (name == "CNOT") {
    return unitary_superop({kQubit, kQubit}, gate_matrix(name), name);
  }
  return unitary_superop({kQubit}, gate_matrix(name), name);
}

SuperOpPtr system_env_superop(std::vector<VarType> sys_slots,
                              const ComplexMatrix& u, const ComplexMatrix& p,
                              std::size_t env_dim, std::string label) {
  const std::size_t ds = slots_dim(sys_slots);
  const std::size_t d = ds * env_dim;
  if (u.rows() != d || !u.square() || p.rows() != d || !p.square()) {
    throw std::invalid_argument("system-environment operator dimension");
  }
  const ComplexMatrix pu = p * u;
  // K_k = <e_k| P U |e_0> on the environment factor.
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < env_dim; ++k) {
    ComplexMatrix kk(ds, ds);
    for (std::size_t i = 0; i < ds; ++i)
      for (std::size_t j = 0; j < ds; ++j)
        kk.at(i, j) = pu.at(i * env_dim + k, j * env_dim + 0);
    if (!kk.is_zero(0.0)) kraus.push_back(std::move(kk));
  }
  if (kraus.empty()) {
    throw std::invalid_argument("system-environment model yields zero map");
  }
  return std::make_shared<SuperOp>(std::move(sys_slots), std::move(kraus),
                                   std::move(label));
}

SuperOpPtr amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("damping probability must be in [0, 1]");
  }
  ComplexMatrix k0{{1, 0}, {0, std::sqrt(1.0 - gamma)}};
  ComplexMatrix k1{{0, std::sqrt(gamma)}, {0, 0}};
  std::vector<ComplexMatrix> kraus{std::move(k0)};
  if (gamma > 0.0) kraus.push_back(std::move(k1));
  return std::make_shared<SuperOp>(std::vector<VarType>{kQubit},
                                   std::move(kraus), "AD");
}

SuperOpPtr phase_rotation(double theta) {
  ComplexMatrix u{{1, 0}, {0, std::polar(1.0, theta)}};
  return unitary_superop({kQubit}, std::move(u), "R");
}

SuperOpPtr extend_superop(const SuperOpPtr& e, const std::vector<Var>& args,
                          const std::vector<Var>& target) {
  if (args.size() != e->arity()) {
    throw std::invalid_argument("binding arity mismatch");
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].type.dim != e->slots()[i].dim) {
      throw std::invalid_argument("binding type mismatch for slot " +
                                  std::to_string(i));
    }
  }
  // Position of each target variable; args must all appear in target.
  std::vector<std::size_t> arg_pos(args.size());
  std::vector<bool> is_arg(target.size(), false);
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool found = false;
    for (std::size_t t = 0; t < target.size(); ++t) {
      if (target[t].name == args[i].name) {
        if (is_arg[t]) {
          throw std::invalid_argument("non-injective binding");
        }
        arg_pos[i] = t;
        is_arg[t] = true;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("bound variable '" + args[i].name +
                                  "' missing from target set");
    }
  }

  std::vector<std::size_t> target_dims;
  std::size_t rest_dim = 1;
  for (std::size_t t = 0; t < target.size(); ++t) {
    target_dims.push_back(target[t].type.dim);
    if (!is_arg[t]) rest_dim *= target[t].type.dim;
  }

  // Front ordering: slot factors (in slot order), then the rest.
  // front_to_target[k] = target position of the k-th front factor;
  // we need the inverse map for the gather below.
  std::vector<std::size_t> front_order(arg_pos);
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (!is_arg[t]) front_order.push_back(t);
  }
  std::vector<std::size_t> front_dims(front_order.size());
  for (std::size_t k = 0; k < front_order.size(); ++k) {
    front_dims[k] = target_dims[front_order[k]];
  }
  std::vector<std::size_t> front_pos_of_target(front_order.size());
  for (std::size_t k = 0; k < front_order.size(); ++k) {
    front_pos_of_target[front_order[k]] = k;
  }
  // gather[i_target] = i_front
  const std::vector<std::size_t> gather =
      tensor_index_map(front_dims, front_pos_of_target);

  const ComplexMatrix eye_rest = ComplexMatrix::identity(rest_dim);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(e->kraus().size());
  for (const ComplexMatrix& k : e->kraus()) {
    const ComplexMatrix kf = mat_tensor(k, eye_rest);
    ComplexMatrix kt(kf.rows(), kf.cols());
    for (std::size_t i = 0; i < kf.rows(); ++i)
      for (std::size_t j = 0; j < kf.cols(); ++j)
        kt.at(i, j) = kf.at(gather[i], gather[j]);
    kraus.push_back(std::move(kt));
  }
  std::vector<VarType> slots;
  for (const Var& v : target) slots.push_back(v.type);
  return std::make_shared<SuperOp>(std::move(slots), std::move(kraus),
                                   e->label());
}

QState apply_superop(const SuperOp& e, const std::vector<std::string>& binding,
                     const QState& s) {
  if (binding.size() != e.arity()) {
    throw std::invalid_argument("binding arity mismatch");
  }
  const Register& reg = s.reg();
  std::vector<std::size_t> bound_pos;
  std::vector<bool> is_bound(reg.size(), false);
  for (std::size_t i = 0; i < binding.size(); ++i) {
    const std::size_t pos = reg.index_of(binding[i]);
    if (is_bound[pos]) {
      throw std::invalid_argument("non-injective binding");
    }
    if (reg.vars()[pos].type.dim != e.slots()[i].dim) {
      throw std::invalid_argument("binding dimension mismatch for '" +
                                  binding[i] + "'");
    }
    is_bound[pos] = true;
    bound_pos.push_back(pos);
  }

  const std::vector<std::size_t> dims = reg.dims();
  const std::size_t total = reg.total_dim();
  const std::size_t de = e.dim();
  const std::size_t dr = total / de;

  // Gather map from the front ordering (bound slots first) back to the
  // register ordering and its inverse.
  std::vector<std::size_t> front_order(bound_pos);
  for (std::size_t p = 0; p < reg.size(); ++p) {
    if (!is_bound[p]) front_order.push_back(p);
  }
  bool identity_order = true;
  for (std::size_t k = 0; k < front_order.size(); ++k) {
    if (front_order[k] != k) identity_order = false;
  }

  const ComplexMatrix* rho = &s.matrix();
  ComplexMatrix permuted;
  std::vector<std::size_t> to_front;  // front index -> register index
  if (!identity_order) {
    to_front = tensor_index_map(dims, front_order);
    permuted = ComplexMatrix(total, total);
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t j = 0; j < total; ++j)
        permuted.at(i, j) = s.matrix().at(to_front[i], to_front[j]);
    rho = &permuted;
  }

  // acc = sum_i (K_i (x) I) rho (K_i (x) I)^dag, blockwise: row blocks of
  // dr consecutive rows are contiguous, so both products reduce to axpy.
  const auto& K = kern::active();
  ComplexMatrix acc(total, total);
  ComplexMatrix tmp(total, total);
  for (const ComplexMatrix& k : e.kraus()) {
    // tmp = (K (x) I) rho
    std::fill(tmp.data(), tmp.data() + tmp.size(), cplx{0.0, 0.0});
    for (std::size_t a = 0; a < de; ++a)
      for (std::size_t b = 0; b < de; ++b) {
        const cplx f = k.at(a, b);
        if (f == cplx{0.0, 0.0}) continue;
        K.axpy(f, rho->data() + b * dr * total, tmp.data() + a * dr * total,
               dr * total);
      }
    // acc += tmp (K (x) I)^dag; per row, column blocks of length dr.
    for (std::size_t row = 0; row < total; ++row) {
      const cplx* in = tmp.data() + row * total;
      cplx* out = acc.data() + row * total;
      for (std::size_t b = 0; b < de; ++b)
        for (std::size_t bp = 0; bp < de; ++bp) {
          const cplx f = std::conj(k.at(b, bp));
          if (f == cplx{0.0, 0.0}) continue;
          K.axpy(f, in + bp * dr, out + b * dr, dr);
        }
    }
  }

  ComplexMatrix out;
  if (!identity_order) {
    // Scatter back: register index -> front index.
    std::vector<std::size_t> from_front(total);
    for (std::size_t i = 0; i < total; ++i) from_front[to_front[i]] = i;
    out = ComplexMatrix(total, total);
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t j = 0; j < total; ++j)
        out.at(i, j) = acc.at(from_front[i], from_front[j]);
  } else {
    out = std::move(acc);
  }

  const TraceKind kind =
      (e.trace_preserving() && s.kind() == TraceKind::density)
          ? TraceKind::density
          : TraceKind::partial;
  return QState::trusted(reg, std::move(out), kind);
}

}  // namespace qccs::qnum
