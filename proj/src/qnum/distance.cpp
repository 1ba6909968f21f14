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

#include "qccs/qnum/distance.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <vector>

#include "qccs/qnum/eig.hpp"
#include "qccs/qnum/kernels.hpp"

namespace qccs::qnum {

namespace {

// Lexicographic entry order; canonicalizing the operand order makes
// the distance exactly symmetric despite floating-point rounding.
bool entry_less(const ComplexMatrix& a, const ComplexMatrix& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const cplx &x = a.data()[i], &y = b.data()[i];
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return a.size() < b.size();
}

}  // namespace

double trace_distance(const ComplexMatrix& r, const ComplexMatrix& s) {
  const bool flip = entry_less(s, r);
  const ComplexMatrix& a = flip ? s : r;
  const ComplexMatrix& b = flip ? r : s;
  return 0.5 * abs_eigenvalue_sum(a - b);
}

double trace_distance(const QState& r, const QState& s) {
  if (r.reg() != s.reg()) {
    throw std::invalid_argument("trace_distance: register mismatch");
  }
  return trace_distance(r.matrix(), s.matrix());
}

namespace {

// Kraus elements tensored with the ancilla identity, cached per call.
std::vector<ComplexMatrix> lift(const SuperOp& e, std::size_t da) {
  std::vector<ComplexMatrix> out;
  const ComplexMatrix eye = ComplexMatrix::identity(da);
  out.reserve(e.kraus().size());
  for (const ComplexMatrix& k : e.kraus()) out.push_back(mat_tensor(k, eye));
  return out;
}

ComplexMatrix apply_lifted(const std::vector<ComplexMatrix>& kraus,
                           const ComplexMatrix& rho) {
  const std::size_t d = rho.rows();
  ComplexMatrix out(d, d);
  ComplexMatrix tmp(d, d);
  for (const ComplexMatrix& k : kraus) {
    kern::active().gemm(k.data(), rho.data(), tmp.data(), d, d, d);
    kern::active().gemm_acc(tmp.data(), k.dagger().data(), out.data(), d, d,
                            d);
  }
  return out;
}

// Adjoint action sum_i K_i^dag W K_i.
ComplexMatrix apply_adjoint(const std::vector<ComplexMatrix>& kraus,
                            const ComplexMatrix& w) {
  const std::size_t d = w.rows();
  ComplexMatrix out(d, d);
  ComplexMatrix tmp(d, d);
  for (const ComplexMatrix& k : kraus) {
    const ComplexMatrix kd = k.dagger();
    kern::active().gemm(kd.data(), w.data(), tmp.data(), d, d, d);
    kern::active().gemm_acc(tmp.data(), k.data(), out.data(), d, d, d);
  }
  return out;
}

ComplexMatrix random_ket(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix v(d, 1);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double re = g(rng), im = g(rng);
    v.at(i, 0) = {re, im};
    norm2 += re * re + im * im;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (std::size_t i = 0; i < d; ++i) v.at(i, 0) *= inv;
  return v;
}

// One seeded start: alternating ascent
//   W    <- sign decomposition of (E-F)(psi psi^dag)
//   psi  <- top eigenvector of (E-F)^dag(W)
// Each step is non-decreasing in the objective.
double ascend(const std::vector<ComplexMatrix>& ke,
              const std::vector<ComplexMatrix>& kf, std::uint64_t seed,
              std::size_t iterations, double convergence) {
  const std::size_t d = ke.front().rows();
  std::mt19937_64 rng(seed);
  ComplexMatrix psi = random_ket(rng, d);
  double best = 0.0;
  for (std::size_t it = 0; it < iterations; ++it) {
    const ComplexMatrix rho = outer(psi);
    const ComplexMatrix t = apply_lifted(ke, rho) - apply_lifted(kf, rho);
    EigResult eig = hermitian_eig(t);
    double value = 0.0;
    ComplexMatrix w(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      value += std::abs(eig.values[k]);
      ComplexMatrix col(d, 1);
      for (std::size_t i = 0; i < d; ++i) col.at(i, 0) = eig.vectors.at(i, k);
      ComplexMatrix proj = outer(col);
      proj *= cplx{eig.values[k] >= 0.0 ? 1.0 : -1.0, 0.0};
      w += proj;
    }
    value *= 0.5;
    if (value <= best + convergence) {
      best = std::max(best, value);
      break;
    }
    best = value;
    const ComplexMatrix m = apply_adjoint(ke, w) - apply_adjoint(kf, w);
    EigResult me = hermitian_eig(m);
    for (std::size_t i = 0; i < d; ++i) {
      psi.at(i, 0) = me.vectors.at(i, d - 1);  // top eigenvector
    }
  }
  return best;
}

}  // namespace

double diamond_distance(const SuperOp& e, const SuperOp& f,
                        const DiamondOptions& opts) {
  if (e.dim() != f.dim()) {
    throw std::invalid_argument("diamond_distance: dimension mismatch");
  }
  // Equal channels short-circuit; also keeps D(E, E) exactly 0.
  if (max_abs_diff(e.choi(), f.choi()) == 0.0) return 0.0;

  const std::size_t da = opts.ancilla_dim ? opts.ancilla_dim : e.dim();
  const std::vector<ComplexMatrix> ke = lift(e, da);
  const std::vector<ComplexMatrix> kf = lift(f, da);

  auto run = [&](std::size_t s) {
    // Start-indexed seeding keeps larger budgets supersets of smaller.
    const std::uint64_t seed = opts.seed + 0x9e3779b97f4a7c15ULL * (s + 1);
    return ascend(ke, kf, seed, opts.iterations, opts.convergence);
  };

  double best = 0.0;
  if (opts.threads > 1 && opts.starts > 1) {
    std::vector<std::future<double>> futs;
    futs.reserve(opts.starts);
    for (std::size_t s = 0; s < opts.starts; ++s) {
      futs.push_back(std::async(std::launch::async, run, s));
    }
    for (auto& fut : futs) best = std::max(best, fut.get());
  } else {
    for (std::size_t s = 0; s < opts.starts; ++s) best = std::max(best, run(s));
  }
  return std::min(best, 1.0);
}

}  // namespace qccs::qnum
