#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ybq/basis.hpp"
#include "ybq/dynamics.hpp"
#include "ybq/tensor.hpp"

using namespace ybq;

namespace {
constexpr double kPi = std::numbers::pi;
const ComplexMatrix kId9 = ComplexMatrix::Identity(9, 9);

HamiltonianSpec random_spec(std::mt19937_64& rng) {
  return {oracle::unif(rng, 0.1, kPi - 0.1), oracle::unif(rng, 0.3, 3.0),
          oracle::unif(rng, 0.3, 3.0), 1.0};
}
}  // namespace

TEST_CASE("subsystem frequency map and prefactor") {
  const HamiltonianSpec s{0.9, 1.0, 2.0, 1.0};
  CHECK(s.omega(1) == 3.0);
  CHECK(s.omega(2) == 1.0);
  CHECK(s.omega(3) == 2.0);
  CHECK_THROWS_AS(s.omega(4), BadSubsystem);
  CHECK(s.c_factor(1) ==
        doctest::Approx(-4.0 * std::sqrt(2.0) * std::sin(0.9)));
}

TEST_CASE("H vanishes when the R-matrix is constant in t") {
  CHECK(build_H({0.0, 0.8, 1.7, 1.0}, 0.5).norm() < 1e-14);
  CHECK(build_H({kPi, 0.8, 1.7, 1.0}, 0.5).norm() < 1e-13);
}

TEST_CASE("H is Hermitian and matches the finite-difference route") {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 10; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const double t = oracle::unif(rng, 0, 5);
    const ComplexMatrix h = build_H(s, t);
    CHECK((h - h.adjoint()).norm() < 1e-12);
    CHECK((h - build_H_fd(s, t, 1e-5)).norm() < 1e-6);
  }
}

TEST_CASE("finite-difference error scales as dt^2") {
  const HamiltonianSpec s{1.21, 0.8, 1.7, 1.0};
  const double t = 0.53;
  const ComplexMatrix h = build_H(s, t);
  const double e1 = (h - build_H_fd(s, t, 1e-3)).norm();
  const double e2 = (h - build_H_fd(s, t, 5e-4)).norm();
  CHECK(e1 / e2 > 3.0);
  CHECK(e1 / e2 < 5.0);
  // unitarity of R makes even the discrete derivative nearly Hermitian
  const ComplexMatrix fd = build_H_fd(s, t, 1e-5);
  CHECK((fd - fd.adjoint()).norm() < 1e-8);
  CHECK_THROWS_AS(build_H_fd(s, t, 0.0), Error);
}

TEST_CASE("subsystem block at the reference point") {
  const HamiltonianSpec s{kPi / 2.0, 1.0, 2.0, 1.0};
  const SubsystemBlock blk = subsystem_block(build_H(s, 0.0), 1);
  const EigenSystem es = eig_hermitian(ComplexMatrix(blk.h));
  CHECK(es.values[0] == doctest::Approx(-2.8284271247461903).epsilon(1e-10));
  CHECK(std::abs(es.values[1]) < 1e-12);
  CHECK(es.values[2] == doctest::Approx(2.8284271247461903).epsilon(1e-10));
  CHECK(blk.basis[0] == lex_index(1, 0));
  CHECK(blk.basis[2] == lex_index(-1, -1));
}

TEST_CASE("blocks are traceless and leak nothing") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const ComplexMatrix h = build_H(s, oracle::unif(rng, 0, 5));
    for (int k = 1; k <= 3; ++k) {
      const SubsystemBlock blk = subsystem_block(h, k);
      CHECK(std::abs(blk.h.trace()) < 1e-12);
      CHECK(blk.off_block_norm < 1e-12);
    }
  }
  CHECK_THROWS_AS(subsystem_block(ComplexMatrix::Identity(4, 4), 1), BadShape);
  // a matrix with inter-subspace elements must be rejected
  ComplexMatrix leaky = ComplexMatrix::Zero(9, 9);
  leaky(lex_index(1, 0), lex_index(1, 1)) = 1.0;
  leaky(lex_index(1, 1), lex_index(1, 0)) = 1.0;
  CHECK_THROWS_AS(subsystem_block(leaky, 1), BlockLeakage);
}

TEST_CASE("closed-form spectrum against the eigensolver") {
  CHECK(closed_form_spectrum({0.0, 1.0, 2.0, 1.0}, 1)[2] == 0.0);
  const auto ref = closed_form_spectrum({kPi / 2.0, 1.0, 2.0, 1.0}, 1);
  CHECK(ref[0] == doctest::Approx(-2.8284271247461903));
  CHECK(ref[2] == doctest::Approx(2.8284271247461903));

  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 20; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const double t = oracle::unif(rng, 0, 5);
    const ComplexMatrix h = build_H(s, t);
    const ComplexMatrix h2 = build_H(s, t + oracle::unif(rng, 0.1, 3.0));
    for (int k = 1; k <= 3; ++k) {
      auto closed = closed_form_spectrum(s, k);
      std::sort(closed.begin(), closed.end());
      const EigenSystem es =
          eig_hermitian(ComplexMatrix(subsystem_block(h, k).h));
      const EigenSystem es2 =
          eig_hermitian(ComplexMatrix(subsystem_block(h2, k).h));
      for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(es.values[i] - closed[i]) < 1e-10);
        CHECK(std::abs(es.values[i] - es2.values[i]) < 1e-10);
      }
    }
  }
}

TEST_CASE("zero-band eigenstate is the fixed antisymmetric combination") {
  const HamiltonianSpec s{0.83, 1.4, 0.9, 1.0};
  for (double t : {0.0, 0.37, 2.9}) {
    const auto states = closed_form_eigenstates(s, 1, t);
    ComplexVector expect = ComplexVector::Zero(9);
    expect[lex_index(1, 0)] = -1.0 / std::sqrt(2.0);
    expect[lex_index(0, 1)] = 1.0 / std::sqrt(2.0);
    CHECK((states[1] - expect).norm() < 1e-14);
    CHECK((build_H(s, t) * states[1]).norm() < 1e-12);
  }
}

TEST_CASE("closed-form eigenstates solve the eigenproblem for every k") {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 10; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const double t = oracle::unif(rng, 0, 5);
    const ComplexMatrix h = build_H(s, t);
    for (int k = 1; k <= 3; ++k) {
      const auto states = closed_form_eigenstates(s, k, t);
      const auto spectrum = closed_form_spectrum(s, k);
      const std::array<double, 3> energy = {spectrum[2], 0.0, spectrum[0]};
      for (int band = 0; band < 3; ++band) {
        CHECK(std::abs(states[band].norm() - 1.0) < 1e-12);
        CHECK((h * states[band] - energy[band] * states[band]).norm() <
              1e-8);
      }
    }
  }
  CHECK_THROWS_AS(closed_form_eigenstates({0.0, 1.0, 2.0, 1.0}, 1, 0.0),
                  DegenerateSpectrum);
}

TEST_CASE("eigenstate overlap with the numeric eigenvectors is one") {
  const HamiltonianSpec s{kPi / 4.0, 1.0, 2.0, 1.0};
  for (const auto& d : eigenstate_report(s, 1, 0.3))
    CHECK(d.magnitude < 1e-8);
  std::mt19937_64 rng(205);
  for (int trial = 0; trial < 5; ++trial) {
    const HamiltonianSpec spec = random_spec(rng);
    for (int k = 1; k <= 3; ++k)
      for (const auto& d :
           eigenstate_report(spec, k, oracle::unif(rng, 0, 5)))
        CHECK(d.magnitude < 1e-8);
  }
}

TEST_CASE("field components: zeros, duplicates, and the printed eighth") {
  const HamiltonianSpec s{1.21, 0.8, 1.7, 1.0};
  const double t = 0.53;
  for (int k = 1; k <= 3; ++k) {
    const auto b = b_vector(s, k, t);
    CHECK(std::abs(b[1]) < 1e-12);
    CHECK(std::abs(b[2]) < 1e-12);
    CHECK(b[3] == doctest::Approx(b[5]).epsilon(1e-12));
    CHECK(b[4] == doctest::Approx(b[6]).epsilon(1e-12));

    const auto printed = printed_b_vector(s, k, t);
    for (int l = 0; l < 7; ++l)
      CHECK(std::abs(b[l] - printed[l]) < 1e-10);
    // extracted B8 is the I8-coefficient: sqrt(2/3) sin(theta) up to sign
    const double expected8 =
        (k == 1 ? 1.0 : -1.0) * std::sqrt(2.0 / 3.0) * std::sin(s.theta);
    CHECK(b[7] == doctest::Approx(expected8).epsilon(1e-10));
    CHECK(std::abs(b[7] - printed[7]) > 1e-2);  // the genuine mismatch

    const auto report = b_vector_report(s, k, t);
    CHECK(report.size() == 8);
    CHECK(report[7].magnitude > 1e-2);
    CHECK_FALSE(report[7].note.empty());
  }
  CHECK_THROWS_AS(b_vector({0.0, 1.0, 2.0, 1.0}, 1, 0.0),
                  DegenerateSpectrum);
}

TEST_CASE("extracted field components rebuild the subsystem Hamiltonian") {
  std::mt19937_64 rng(206);
  for (int trial = 0; trial < 5; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const double t = oracle::unif(rng, 0, 5);
    const ComplexMatrix h = build_H(s, t);
    for (int k = 1; k <= 3; ++k) {
      const auto b = b_vector(s, k, t);
      const auto gens = su3_realization(k).generators();
      ComplexMatrix rebuilt = ComplexMatrix::Zero(9, 9);
      for (int l = 0; l < 8; ++l)
        rebuilt += s.c_factor(k) * b[l] * gens[l];
      const auto basis = subsystem_basis(k);
      ComplexMatrix h_sub = ComplexMatrix::Zero(9, 9);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          h_sub(basis[i], basis[j]) = h(basis[i], basis[j]);
      CHECK((rebuilt - h_sub).norm() < 1e-10);
    }
  }
}

TEST_CASE("su(2) form of the subsystem Hamiltonians") {
  CHECK(su2_form_residual({0.0, 0.8, 1.7, 1.0}, 1, 0.4) < 1e-14);
  std::mt19937_64 rng(207);
  for (int trial = 0; trial < 10; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const double t = oracle::unif(rng, 0, 5);
    for (int k = 1; k <= 3; ++k)
      CHECK(su2_form_residual(s, k, t) < 1e-10);
  }
  // |B-| = |b|/3 = |2 e^{i th} + e^{-i th}|/3
  const double theta = 1.21;
  const Complex b = 2.0 * std::polar(1.0, theta) + std::polar(1.0, -theta);
  CHECK(std::abs(b) / 3.0 ==
        doctest::Approx(std::sqrt(9.0 - 8.0 * std::pow(std::sin(theta), 2)) /
                        3.0)
            .epsilon(1e-12));
}

TEST_CASE("printed operator expansion agrees with the canonical H") {
  CHECK(operator_expansion_residual({0.0, 0.8, 1.7, 1.0}, 2, 0.4) < 1e-14);
  std::mt19937_64 rng(208);
  for (int trial = 0; trial < 10; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const double t = oracle::unif(rng, 0, 5);
    for (int k = 1; k <= 3; ++k) {
      const double res = operator_expansion_residual(s, k, t);
      CHECK(res < 1e-10);
      // periodicity of the residual
      const double later =
          operator_expansion_residual(s, k, t + periods(s)[k - 1]);
      CHECK(std::abs(res - later) < 1e-10);
    }
  }
}

TEST_CASE("orthogonal change of basis") {
  const ComplexMatrix o = o_matrix();
  CHECK((o * o.transpose() - kId9).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((o.transpose() * o - kId9).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(o.imag().norm() == 0.0);

  // conjugation preserves the Frobenius norm
  std::mt19937_64 rng(209);
  const ComplexMatrix a = oracle::random_hermitian(rng, 9);
  CHECK(std::abs((o * a * o.transpose()).norm() - a.norm()) < 1e-13);
}

TEST_CASE("block diagonalization produces the 2+1 pattern") {
  std::mt19937_64 rng(210);
  for (int trial = 0; trial < 10; ++trial) {
    const HamiltonianSpec s = random_spec(rng);
    const ComplexMatrix ht =
        block_diagonalize(build_H(s, oracle::unif(rng, 0, 5)));
    CHECK(block_pattern_residual(ht) < 1e-12);
    CHECK(std::abs(ht(2, 2)) < 1e-12);
    CHECK(std::abs(ht(5, 5)) < 1e-12);
    CHECK(std::abs(ht(8, 8)) < 1e-12);
  }
  CHECK_THROWS_AS(block_diagonalize(ComplexMatrix::Identity(3, 3)), BadShape);
}

TEST_CASE("Casimirs become doublet projectors in the new basis") {
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix jt = casimir_blocks(k);
    CHECK(jt.trace().real() == doctest::Approx(1.5).epsilon(1e-12));
    ComplexMatrix target = ComplexMatrix::Zero(9, 9);
    target(3 * (k - 1), 3 * (k - 1)) = 0.75;
    target(3 * (k - 1) + 1, 3 * (k - 1) + 1) = 0.75;
    CHECK((jt - target).norm() < 1e-12);
  }
  // slots (3,3) and (4,4) for the second doublet
  const ComplexMatrix j2 = casimir_blocks(2);
  CHECK(std::abs(j2(3, 3) - 0.75) < 1e-12);
  CHECK(std::abs(j2(4, 4) - 0.75) < 1e-12);
}

TEST_CASE("Casimirs commute with the Hamiltonian") {
  const HamiltonianSpec s{0.45, 2.3, 0.6, 1.0};
  const ComplexMatrix h = build_H(s, 2.1);
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix j = su2_realization(k).casimir;
    CHECK((j * h - h * j).norm() < 1e-12);
  }
}

TEST_CASE("subsystem periods") {
  const HamiltonianSpec s{0.9, 1.0, 2.0, 1.0};
  const auto t = periods(s);
  CHECK(t[0] == doctest::Approx(2.0 * kPi / 3.0));
  CHECK(t[1] == doctest::Approx(2.0 * kPi));
  CHECK(t[2] == doctest::Approx(kPi));
  for (int k = 1; k <= 3; ++k) {
    const SubsystemBlock a = subsystem_block(build_H(s, 0.0), k);
    const SubsystemBlock b = subsystem_block(build_H(s, t[k - 1]), k);
    CHECK((a.h - b.h).norm() < 1e-12);
  }
  CHECK_THROWS_AS(periods({0.9, 0.0, 2.0, 1.0}), ZeroFrequency);
  CHECK_THROWS_AS(periods({0.9, 1.0, -1.0, 1.0}), ZeroFrequency);
}

TEST_CASE("hbar must be positive") {
  CHECK_THROWS_AS(build_H({0.9, 1.0, 2.0, 0.0}, 0.1), Error);
  CHECK_THROWS_AS(build_H({0.9, 1.0, 2.0, -1.0}, 0.1), Error);
}
