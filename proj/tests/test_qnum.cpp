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

#include <doctest.h>

#include <numbers>

#include "qccs/qnum/distance.hpp"
#include "qccs/qnum/eig.hpp"
#include "qccs/qnum/kernels.hpp"
#include "test_util.hpp"

using namespace qccs;
using namespace qccs::testutil;
using qnum::ComplexMatrix;
using qnum::cplx;

namespace {
const double kRoot2Inv = 1.0 / std::numbers::sqrt2;  // 0.7071067811865476

qnum::Register qubit_reg(std::initializer_list<const char*> names) {
  std::vector<qnum::Var> vars;
  for (const char* n : names) vars.push_back({n, {"qubit", 2}});
  return qnum::Register(std::move(vars));
}

qnum::QState ket_state(const qnum::Register& reg,
                       std::map<std::string, ComplexMatrix> kets) {
  return qnum::product_pure_state(reg, kets);
}

ComplexMatrix plus_ket() {
  ComplexMatrix v(2, 1);
  v.at(0, 0) = kRoot2Inv;
  v.at(1, 0) = kRoot2Inv;
  return v;
}

ComplexMatrix bell00() {
  ComplexMatrix v(4, 1);
  v.at(0, 0) = kRoot2Inv;
  v.at(3, 0) = kRoot2Inv;
  return v;
}

// Definition-level oracle for the Choi matrix: assemble
// sum_{k,l} |k><l| (x) E(|k><l|) entry by entry.
ComplexMatrix choi_oracle(const qnum::SuperOp& e) {
  const std::size_t d = e.dim();
  ComplexMatrix j(d * d, d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      ComplexMatrix ekl(d, d);
      ekl.at(k, l) = 1.0;
      ComplexMatrix out = e.apply_matrix(ekl);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t jj = 0; jj < d; ++jj)
          j.at(k * d + i, l * d + jj) += out.at(i, jj);
    }
  return j;
}

}  // namespace

TEST_CASE("kernel lanes agree on random inputs") {
  const auto& sc = qnum::kern::scalar();
  const qnum::kern::Kernels* simd = qnum::kern::avx2();
  if (!simd) {
    MESSAGE("avx2 lane unavailable; scalar-only environment");
    return;
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 23);
    const std::size_t m = dim(rng), k = dim(rng), n = dim(rng);
    ComplexMatrix a = random_matrix(rng, m, k);
    ComplexMatrix b = random_matrix(rng, k, n);
    ComplexMatrix c1(m, n), c2(m, n);
    sc.gemm(a.data(), b.data(), c1.data(), m, k, n);
    simd->gemm(a.data(), b.data(), c2.data(), m, k, n);
    CHECK(qnum::max_abs_diff(c1, c2) < 1e-12);

    ComplexMatrix acc1 = random_matrix(rng, m, n);
    ComplexMatrix acc2 = acc1;
    sc.gemm_acc(a.data(), b.data(), acc1.data(), m, k, n);
    simd->gemm_acc(a.data(), b.data(), acc2.data(), m, k, n);
    CHECK(qnum::max_abs_diff(acc1, acc2) < 1e-12);

    ComplexMatrix x = random_matrix(rng, 1, n);
    ComplexMatrix y1 = random_matrix(rng, 1, n);
    ComplexMatrix y2 = y1;
    const cplx alpha{0.3, -1.2};
    sc.axpy(alpha, x.data(), y1.data(), n);
    simd->axpy(alpha, x.data(), y2.data(), n);
    CHECK(qnum::max_abs_diff(y1, y2) < 1e-12);

    const cplx d1 = sc.dotc(x.data(), y1.data(), n);
    const cplx d2 = simd->dotc(x.data(), y2.data(), n);
    CHECK(std::abs(d1 - d2) < 1e-11);
  }
}

TEST_CASE("mat_tensor follows the index convention") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(qnum::max_abs_diff(qnum::mat_tensor(i2, i2),
                           ComplexMatrix::identity(4)) == 0.0);

  // |0><0| (x) |1><1| -> diag(0,1,0,0): row (0,1) = index 1
  ComplexMatrix p0 = qnum::outer(qnum::basis_ket(2, 0));
  ComplexMatrix p1 = qnum::outer(qnum::basis_ket(2, 1));
  ComplexMatrix t = qnum::mat_tensor(p0, p1);
  ComplexMatrix want(4, 4);
  want.at(1, 1) = 1.0;
  CHECK(qnum::max_abs_diff(t, want) == 0.0);

  // (H (x) H)|00> = |++>
  qnum::SuperOpPtr h = qnum::named_gate("H");
  ComplexMatrix hh = qnum::mat_tensor(h->kraus()[0], h->kraus()[0]);
  ComplexMatrix v = hh * qnum::basis_ket(4, 0);
  ComplexMatrix pp = qnum::mat_tensor(plus_ket(), plus_ket());
  CHECK(qnum::max_abs_diff(v, pp) < 1e-15);
}

TEST_CASE("hermitian eigensolver") {
  // sigma_z: eigenvalues -1, 1
  ComplexMatrix z{{1, 0}, {0, -1}};
  auto ez = qnum::hermitian_eigenvalues(z);
  CHECK(ez[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ez[1] == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    const std::size_t d = dim(rng);
    ComplexMatrix a = random_hermitian(rng, d);
    qnum::EigResult r = qnum::hermitian_eig(a);
    // residual A V = V diag(lambda)
    ComplexMatrix av = a * r.vectors;
    ComplexMatrix vl = r.vectors;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        vl.at(i, j) *= cplx{r.values[j], 0.0};
    CHECK(qnum::max_abs_diff(av, vl) < 1e-10);
    // orthonormal columns
    ComplexMatrix vtv = r.vectors.dagger() * r.vectors;
    CHECK(qnum::max_abs_diff(vtv, ComplexMatrix::identity(d)) < 1e-11);
  }
}

TEST_CASE("partial_trace") {
  qnum::Register xz = qubit_reg({"x", "z"});
  // trace out nothing -> identical state
  qnum::QState s = ket_state(xz, {{"x", plus_ket()}});
  qnum::QState same = qnum::partial_trace(s, {"x", "z"});
  CHECK(qnum::max_abs_diff(s.matrix(), same.matrix()) == 0.0);

  // Bell state: marginal of either qubit is I/2
  qnum::QState bell(xz, qnum::outer(bell00()), qnum::TraceKind::density);
  qnum::QState mx = qnum::partial_trace(bell, {"x"});
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.5, 0.0};
  CHECK(qnum::max_abs_diff(mx.matrix(), half) < 1e-15);

  // product state factorization
  std::mt19937_64 rng(3);
  ComplexMatrix rho_x = random_density(rng, 2);
  ComplexMatrix sig_z = random_density(rng, 2);
  qnum::QState prod = qnum::state_tensor(
      qnum::QState(qubit_reg({"x"}), rho_x, qnum::TraceKind::density),
      qnum::QState(qubit_reg({"z"}), sig_z, qnum::TraceKind::density));
  qnum::QState got = qnum::partial_trace(prod, {"x"});
  CHECK(qnum::max_abs_diff(got.matrix(), rho_x) < 1e-14);

  CHECK_THROWS_AS(qnum::partial_trace(bell, {"nope"}),
                  std::invalid_argument);
}

TEST_CASE("apply_superop") {
  qnum::Register xz = qubit_reg({"x", "z"});
  std::mt19937_64 rng(5);
  ComplexMatrix rho_z = random_density(rng, 2);
  qnum::QState s = qnum::state_tensor(
      ket_state(qubit_reg({"x"}), {}),
      qnum::QState(qubit_reg({"z"}), rho_z, qnum::TraceKind::density));

  // Hadamard on x: |0><0| (x) rho' -> |+><+| (x) rho'
  qnum::SuperOpPtr h = qnum::named_gate("H");
  qnum::QState after = qnum::apply_superop(*h, {"x"}, s);
  ComplexMatrix want = qnum::mat_tensor(qnum::outer(plus_ket()), rho_z);
  CHECK(qnum::max_abs_diff(after.matrix(), want) < 1e-14);

  // identity channel leaves the state unchanged
  qnum::SuperOpPtr id = qnum::named_gate("I");
  qnum::QState same = qnum::apply_superop(*id, {"z"}, s);
  CHECK(qnum::max_abs_diff(same.matrix(), s.matrix()) < 1e-15);

  // CNOT on (x, z) with |+>|0> -> Bell
  qnum::QState pz = ket_state(xz, {{"x", plus_ket()}});
  qnum::SuperOpPtr cnot = qnum::named_gate("CNOT");
  qnum::QState b = qnum::apply_superop(*cnot, {"x", "z"}, pz);
  CHECK(qnum::max_abs_diff(b.matrix(), qnum::outer(bell00())) < 1e-14);

  // CNOT bound in reverse order: z controls x
  qnum::QState oz = ket_state(xz, {{"z", plus_ket()}});
  qnum::QState b2 = qnum::apply_superop(*cnot, {"z", "x"}, oz);
  // |+>_z |0>_x -> Bell across (z, x): entries in canonical order (x,z)
  ComplexMatrix bzx(4, 1);
  bzx.at(0, 0) = kRoot2Inv;  // |00>
  bzx.at(3, 0) = kRoot2Inv;  // |11> (x=1, z=1)
  CHECK(qnum::max_abs_diff(b2.matrix(), qnum::outer(bzx)) < 1e-14);

  CHECK_THROWS_AS(qnum::apply_superop(*cnot, {"x", "x"}, pz),
                  std::invalid_argument);
}

TEST_CASE("superop composition and Choi equality") {
  qnum::SuperOpPtr h = qnum::named_gate("H");
  qnum::SuperOpPtr id = qnum::named_gate("I");
  qnum::SuperOpPtr hh = qnum::superop_compose(h, h);
  CHECK(qnum::superop_equal(*hh, *id, 1e-12));

  // E after identity is Choi-equal to E
  std::mt19937_64 rng(17);
  qnum::SuperOpPtr e = random_channel(rng, 2, 2);
  qnum::SuperOpPtr ei = qnum::superop_compose(e, id);
  CHECK(qnum::superop_equal(*ei, *e, 1e-12));

  // projector idempotence: branch(P0) twice = branch(P0)
  qnum::SuperOpPtr m0 = qnum::measurement_superop(
      qnum::computational_measurement_ops(2), {{"qubit", 2}},
      qnum::MeasureMode::branch, 0, "M0");
  qnum::SuperOpPtr m00 = qnum::superop_compose(m0, m0);
  CHECK(qnum::superop_equal(*m00, *m0, 1e-12));

  // global phase: {H} and {-H} present the same channel
  ComplexMatrix mh = h->kraus()[0];
  mh *= cplx{-1.0, 0.0};
  qnum::SuperOp neg({{"qubit", 2}}, {mh}, "-H");
  CHECK(qnum::superop_equal(neg, *h, 1e-15));
  CHECK_FALSE(qnum::superop_equal(*qnum::named_gate("Z"), *id, 1e-7));
}

TEST_CASE("choi matrix matches the definition") {
  // identity channel on a qubit: 2 |beta00><beta00| (unnormalized)
  qnum::SuperOpPtr id = qnum::named_gate("I");
  ComplexMatrix want = qnum::outer(bell00());
  want *= cplx{2.0, 0.0};
  CHECK(qnum::max_abs_diff(id->choi(), want) < 1e-15);

  // branch(P0): single 1 in the (0,0) block
  qnum::SuperOpPtr m0 = qnum::measurement_superop(
      qnum::computational_measurement_ops(2), {{"qubit", 2}},
      qnum::MeasureMode::branch, 0, "M0");
  ComplexMatrix w0(4, 4);
  w0.at(0, 0) = 1.0;
  CHECK(qnum::max_abs_diff(m0->choi(), w0) < 1e-15);

  // random channels agree with the definition-level oracle
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    qnum::SuperOpPtr e = random_channel(rng, 2, 3);
    CHECK(qnum::max_abs_diff(e->choi(), choi_oracle(*e)) < 1e-12);
  }

  // zero Kraus elements are rejected upstream
  CHECK_THROWS_AS(qnum::SuperOp({{"qubit", 2}}, {ComplexMatrix(2, 2)}, "0"),
                  std::invalid_argument);
}

TEST_CASE("trace distance") {
  qnum::Register x = qubit_reg({"x"});
  qnum::QState zero = ket_state(x, {});
  qnum::QState one = ket_state(x, {{"x", qnum::basis_ket(2, 1)}});
  qnum::QState plus = ket_state(x, {{"x", plus_ket()}});

  CHECK(qnum::trace_distance(zero, zero) == 0.0);
  CHECK(qnum::trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-12));
  // eigenvalues of the difference are +-1/sqrt(2)
  CHECK(std::abs(qnum::trace_distance(zero, plus) - kRoot2Inv) < 1e-9);

  // metric properties on random triples
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    ComplexMatrix a = random_density(rng, 4);
    ComplexMatrix b = random_density(rng, 4);
    ComplexMatrix c = random_density(rng, 4);
    const double ab = qnum::trace_distance(a, b);
    const double ba = qnum::trace_distance(b, a);
    CHECK(ab == ba);  // exact symmetry
    CHECK(qnum::trace_distance(a, c) <= ab + qnum::trace_distance(b, c) + 1e-9);
  }

  qnum::Register other = qubit_reg({"y"});
  qnum::QState sy = ket_state(other, {});
  CHECK_THROWS_AS(qnum::trace_distance(zero, sy), std::invalid_argument);
}

TEST_CASE("contractivity of trace-preserving channels") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    qnum::SuperOpPtr e = random_channel(rng, 2, 2);
    ComplexMatrix rho = random_density(rng, 2);
    ComplexMatrix sig = random_density(rng, 2);
    const double before = qnum::trace_distance(rho, sig);
    const double after =
        qnum::trace_distance(e->apply_matrix(rho), e->apply_matrix(sig));
    CHECK(after <= before + 1e-9);
  }
}

TEST_CASE("trace preservation through apply_superop") {
  std::mt19937_64 rng(37);
  qnum::Register xz = qubit_reg({"x", "z"});
  for (int t = 0; t < 25; ++t) {
    qnum::SuperOpPtr e = random_channel(rng, 2, 2);
    ComplexMatrix rho = random_density(rng, 4);
    qnum::QState s(xz, rho, qnum::TraceKind::density);
    qnum::QState out = qnum::apply_superop(*e, {"z"}, s);
    CHECK(std::abs(out.trace_real() - 1.0) < 1e-9);
    CHECK(out.kind() == qnum::TraceKind::density);

    // no signalling: the untouched marginal is unchanged
    qnum::QState mx_before = qnum::partial_trace(s, {"x"});
    qnum::QState mx_after = qnum::partial_trace(out, {"x"});
    CHECK(qnum::max_abs_diff(mx_before.matrix(), mx_after.matrix()) < 1e-9);
  }
}

TEST_CASE("rename_state") {
  qnum::Register xy = qubit_reg({"x", "y"});
  std::mt19937_64 rng(41);
  ComplexMatrix rho_x = random_density(rng, 2);
  ComplexMatrix sig_y = random_density(rng, 2);
  qnum::QState s = qnum::state_tensor(
      qnum::QState(qubit_reg({"x"}), rho_x, qnum::TraceKind::density),
      qnum::QState(qubit_reg({"y"}), sig_y, qnum::TraceKind::density));

  // identity renaming
  qnum::QState same = qnum::rename_state(s, {});
  CHECK(qnum::max_abs_diff(same.matrix(), s.matrix()) == 0.0);

  // swap x and y: sigma lands on x, rho on y
  qnum::QState swapped = qnum::rename_state(s, {{"x", "y"}, {"y", "x"}});
  ComplexMatrix want = qnum::mat_tensor(sig_y, rho_x);
  CHECK(qnum::max_abs_diff(swapped.matrix(), want) < 1e-15);

  // involution round-trips bit-exactly
  qnum::QState back = qnum::rename_state(swapped, {{"x", "y"}, {"y", "x"}});
  CHECK(qnum::max_abs_diff(back.matrix(), s.matrix()) == 0.0);

  // renaming onto an existing name is rejected
  CHECK_THROWS_AS(qnum::rename_state(s, {{"x", "y"}}),
                  std::invalid_argument);
}

TEST_CASE("measurement superops") {
  qnum::Register x = qubit_reg({"x"});
  qnum::QState plus = ket_state(x, {{"x", plus_ket()}});

  qnum::SuperOpPtr m = qnum::measurement_superop(
      qnum::computational_measurement_ops(2), {{"qubit", 2}},
      qnum::MeasureMode::total, 0, "M01");
  CHECK(m->trace_preserving());
  qnum::QState after = qnum::apply_superop(*m, {"x"}, plus);
  ComplexMatrix want(2, 2);
  want.at(0, 0) = 0.5;
  want.at(1, 1) = 0.5;
  CHECK(qnum::max_abs_diff(after.matrix(), want) < 1e-15);

  // eigenstate is unchanged
  qnum::QState zero = ket_state(x, {});
  qnum::QState z2 = qnum::apply_superop(*m, {"x"}, zero);
  CHECK(qnum::max_abs_diff(z2.matrix(), zero.matrix()) < 1e-15);

  // branch trace = outcome probability
  qnum::SuperOpPtr m0 = qnum::measurement_superop(
      qnum::computational_measurement_ops(2), {{"qubit", 2}},
      qnum::MeasureMode::branch, 0, "M0");
  qnum::QState b = qnum::apply_superop(*m0, {"x"}, plus);
  CHECK(b.kind() == qnum::TraceKind::partial);
  CHECK(std::abs(b.trace_real() - 0.5) < 1e-12);

  // completeness violations are rejected in total mode
  std::vector<ComplexMatrix> bad{qnum::outer(qnum::basis_ket(2, 0))};
  CHECK_THROWS_AS(
      qnum::measurement_superop(bad, {{"qubit", 2}},
                                qnum::MeasureMode::total, 0, "bad"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      qnum::measurement_superop(bad, {{"qubit", 2}},
                                qnum::MeasureMode::branch, 5, "bad"),
      std::invalid_argument);
}

TEST_CASE("named gates") {
  CHECK_THROWS_AS(qnum::named_gate("NOPE"), std::invalid_argument);
  qnum::Register x = qubit_reg({"x"});
  qnum::QState zero = ket_state(x, {});
  qnum::QState h = qnum::apply_superop(*qnum::named_gate("H"), {"x"}, zero);
  CHECK(qnum::max_abs_diff(h.matrix(), qnum::outer(plus_ket())) < 1e-15);

  // CNOT|10> = |11>
  qnum::SuperOpPtr cnot = qnum::named_gate("CNOT");
  ComplexMatrix in = qnum::outer(qnum::basis_ket(4, 2));
  ComplexMatrix out = cnot->apply_matrix(in);
  CHECK(qnum::max_abs_diff(out, qnum::outer(qnum::basis_ket(4, 3))) < 1e-15);

  // T.T = S as matrices
  qnum::SuperOpPtr tt =
      qnum::superop_compose(qnum::named_gate("T"), qnum::named_gate("T"));
  CHECK(qnum::superop_equal(*tt, *qnum::named_gate("S"), 1e-12));
}

TEST_CASE("system-environment constructor matches Kraus form") {
  // amplitude damping dilation, gamma = 0.3
  const double g = 0.3;
  const double c = std::sqrt(1 - g), s = std::sqrt(g);
  ComplexMatrix u{{1, 0, 0, 0},
                  {0, c, s, 0},
                  {0, -s, c, 0},
                  {0, 0, 0, 1}};
  qnum::SuperOpPtr env = qnum::system_env_superop(
      {{"qubit", 2}}, u, ComplexMatrix::identity(4), 2, "AD-env");
  qnum::SuperOpPtr ad = qnum::amplitude_damping(g);
  CHECK(qnum::superop_equal(*env, *ad, 1e-12));
}

TEST_CASE("diamond distance") {
  qnum::SuperOpPtr id = qnum::named_gate("I");
  qnum::SuperOpPtr z = qnum::named_gate("Z");
  qnum::SuperOpPtr s = qnum::named_gate("S");

  CHECK(qnum::diamond_distance(*id, *id) == 0.0);

  qnum::DiamondOptions opts;
  const double dz = qnum::diamond_distance(*z, *id, opts);
  CHECK(dz >= 1.0 - 1e-6);
  CHECK(dz <= 1.0);

  // Brute-force oracle: dense random sweep plus a Schmidt-angle grid
  // over cos t |00> + sin t |11>, evaluated with trace_distance only.
  auto objective = [&](const qnum::SuperOp& e, const qnum::SuperOp& f,
                       const ComplexMatrix& psi) {
    ComplexMatrix rho = qnum::outer(psi);
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    auto lifted_apply = [&](const qnum::SuperOp& ch) {
      ComplexMatrix out(4, 4);
      for (const ComplexMatrix& k : ch.kraus()) {
        ComplexMatrix kl = qnum::mat_tensor(k, eye);
        out += kl * rho * kl.dagger();
      }
      return out;
    };
    return qnum::trace_distance(lifted_apply(e), lifted_apply(f));
  };
  double oracle = 0.0;
  std::mt19937_64 rng(43);
  for (int t = 0; t < 4000; ++t) {
    oracle = std::max(oracle, objective(*s, *id, random_ket(rng, 4)));
  }
  for (int t = 0; t <= 200; ++t) {
    const double theta = t * (std::numbers::pi / 2) / 200;
    ComplexMatrix psi(4, 1);
    psi.at(0, 0) = std::cos(theta);
    psi.at(3, 0) = std::sin(theta);
    oracle = std::max(oracle, objective(*s, *id, psi));
  }
  CHECK(oracle == doctest::Approx(kRoot2Inv).epsilon(1e-4));

  const double ds = qnum::diamond_distance(*s, *id, opts);
  CHECK(std::abs(ds - oracle) < 1e-3);
  CHECK(std::abs(ds - kRoot2Inv) < 1e-3);

  // monotone in the start budget
  qnum::DiamondOptions small = opts;
  small.starts = 2;
  CHECK(qnum::diamond_distance(*s, *id, small) <= ds + 1e-15);

  // lower-bound consistency: never below the ancilla-free value
  std::mt19937_64 rng2(47);
  qnum::SuperOpPtr e = random_channel(rng2, 2, 2, "E");
  qnum::SuperOpPtr f = random_channel(rng2, 2, 2, "F");
  const double dd = qnum::diamond_distance(*e, *f, opts);
  for (int t = 0; t < 50; ++t) {
    ComplexMatrix rho = random_density(rng2, 2);
    const double plain =
        qnum::trace_distance(e->apply_matrix(rho), f->apply_matrix(rho));
    CHECK(dd >= plain - 1e-9);
  }

  // Rz(pi/4) vs identity: sin(pi/8)
  qnum::SuperOpPtr rz = qnum::phase_rotation(std::numbers::pi / 4);
  const double drz = qnum::diamond_distance(*rz, *id, opts);
  CHECK(std::abs(drz - std::sin(std::numbers::pi / 8)) < 1e-3);
}

TEST_CASE("superop_equal is an equivalence on a random pool") {
  std::mt19937_64 rng(53);
  std::vector<qnum::SuperOpPtr> pool;
  for (int t = 0; t < 8; ++t) pool.push_back(random_channel(rng, 2, 2));
  // duplicate presentations of the same channel (Kraus gauge)
  for (int t = 0; t < 4; ++t) {
    const auto& e = pool[t];
    std::vector<ComplexMatrix> k = e->kraus();
    for (auto& m : k) m *= cplx{-1.0, 0.0};
    pool.push_back(std::make_shared<qnum::SuperOp>(e->slots(), k, "dup"));
  }
  for (const auto& a : pool) {
    CHECK(qnum::superop_equal(*a, *a, 1e-7));
    for (const auto& b : pool) {
      CHECK(qnum::superop_equal(*a, *b, 1e-7) ==
            qnum::superop_equal(*b, *a, 1e-7));
      for (const auto& c : pool) {
        if (qnum::superop_equal(*a, *b, 1e-7) &&
            qnum::superop_equal(*b, *c, 1e-7)) {
          CHECK(qnum::superop_equal(*a, *c, 2e-7));
        }
      }
    }
  }
}

TEST_CASE("qstate validation") {
  qnum::Register x = qubit_reg({"x"});
  ComplexMatrix nh{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(qnum::QState(x, nh, qnum::TraceKind::density),
                  std::invalid_argument);
  ComplexMatrix neg{{1, 0}, {0, -0.5}};
  CHECK_THROWS_AS(qnum::QState(x, neg, qnum::TraceKind::density),
                  std::invalid_argument);
  ComplexMatrix twice = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(qnum::QState(x, twice, qnum::TraceKind::density),
                  std::invalid_argument);
  CHECK_THROWS_AS(qnum::QState(x, twice, qnum::TraceKind::partial),
                  std::invalid_argument);
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx{0.25, 0.0};
  CHECK_NOTHROW(qnum::QState(x, half, qnum::TraceKind::partial));
}

TEST_CASE("register invariants") {
  CHECK_THROWS_AS(qnum::Register({{"x", {"bad", 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(qnum::Register({{"x", {"qubit", 2}}, {"x", {"qubit", 2}}}),
                  std::invalid_argument);
  // dimension cap
  std::vector<qnum::Var> many;
  for (int i = 0; i < 13; ++i) {
    many.push_back({"q" + std::to_string(i), {"qubit", 2}});
  }
  CHECK_THROWS_AS((void)qnum::Register(many), std::invalid_argument);
  CHECK_NOTHROW((void)qnum::Register(many, std::size_t(1) << 13));
}
