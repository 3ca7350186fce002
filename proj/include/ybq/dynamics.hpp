#pragma once

#include <array>
#include <string>
#include <vector>

#include "ybq/algebra.hpp"
#include "ybq/types.hpp"

namespace ybq {

/// Drive parameters for the time-dependent family phi_i = omega_i t.
struct HamiltonianSpec {
  double theta = 0.0;
  double omega1 = 1.0;
  double omega2 = 2.0;
  double hbar = 1.0;

  double Omega() const { return omega1 + omega2; }

  /// Subsystem frequency: omega(1) = Omega, omega(2) = omega1,
  /// omega(3) = omega2.
  double omega(int k) const;

  /// Prefactor C(k) = -(4 sqrt2 / 3) hbar omega(k) sin(theta).
  double c_factor(int k) const;
};

/// H(t) = i hbar (dR/dt) R^dag with phi_i = omega_i t, assembled from the
/// analytic entrywise derivative of M. Hermitian, 9x9 lex order, block
/// diagonal over the three invariant subspaces.
ComplexMatrix build_H(const HamiltonianSpec& s, double t);

/// Central-difference version i hbar [R(t+dt) - R(t-dt)]/(2 dt) R^dag(t);
/// independent oracle for build_H, accurate to O(dt^2).
ComplexMatrix build_H_fd(const HamiltonianSpec& s, double t, double dt);

/// 3x3 restriction of a 9x9 Hermitian matrix to subsystem k's basis.
struct SubsystemBlock {
  int k = 0;
  std::array<int, 3> basis{};
  Eigen::Matrix3cd h;
  double off_block_norm = 0.0;
};

/// Throws BlockLeakage if matrix elements outside the three invariant
/// subspaces exceed 1e-10 in norm; otherwise reports them in the result.
SubsystemBlock subsystem_block(const ComplexMatrix& h, int k);

/// ( -E, 0, +E ) with E = (2 sqrt2 / 3) hbar omega(k) sin(theta).
std::array<double, 3> closed_form_spectrum(const HamiltonianSpec& s, int k);

/// The closed-form eigenstates as unit 9-vectors, ordered (+, 0, -):
///   k=1: N+-[f+- (|10>+|01>) + e^{-i Omega t}|-1-1>],
///        (−|10>+|01>)/sqrt2,
///        with N+- = sqrt((3 +- 2 sqrt2 sin th)/6),
///        f+- = (4 sin th -+ 3 sqrt2)/(2 i b);
///   k=2,3 analogously with N+- = sqrt((3 +- 2 sqrt2 sin th)/12) and
///        f+- = (4 sin th -+ 3 sqrt2)/(i conj(b)).
/// Throws DegenerateSpectrum when |sin theta| <= 1e-8.
std::array<ComplexVector, 3> closed_form_eigenstates(const HamiltonianSpec& s,
                                                     int k, double t);

/// Field components recovered from the canonical H by the trace inner
/// product B_l = 2 tr(H I_l^{(k)}) / C(k).
Eigen::Matrix<double, 8, 1> b_vector(const HamiltonianSpec& s, int k,
                                     double t);

/// The B-lists as printed (including the printed eighth component, which
/// quotes the Y-coefficient rather than the I_8-coefficient).
Eigen::Matrix<double, 8, 1> printed_b_vector(const HamiltonianSpec& s, int k,
                                             double t);

/// One informational record of a formula-vs-canonical comparison.
struct Discrepancy {
  std::string item;
  double magnitude = 0.0;
  std::string note;
};

/// Entrywise comparison of the trace-extracted B with the printed lists.
std::vector<Discrepancy> b_vector_report(const HamiltonianSpec& s, int k,
                                         double t);

/// Distance between the canonical subsystem Hamiltonian and its su(2) form
///   C(k) [ (B- S+ + B+ S-)/2 + B3 S3 ]
/// with B-^{(1)} = -(i/3) conj(b) e^{i Omega t}, B3^{(1)} = (2 sqrt2/3) sin th
/// and B-^{(i)} = (i/3) conj(b) e^{-i omega(i) t}, B3^{(i)} = -(2 sqrt2/3)
/// sin th for i = 2, 3.
double su2_form_residual(const HamiltonianSpec& s, int k, double t);

/// Distance between the canonical subsystem Hamiltonian and the printed
/// operator expansion over the su(3) realization, with the overall C(k)
/// multiplying all four terms.
double operator_expansion_residual(const HamiltonianSpec& s, int k, double t);

/// Per-band comparison of the closed-form eigenstates against numeric
/// eigenvectors (phase-free overlap deficit and eigen-residual).
std::vector<Discrepancy> eigenstate_report(const HamiltonianSpec& s, int k,
                                           double t);

/// The constant orthogonal change of basis that splits the 9-dim space into
/// three (2+1)-dim sectors, expressed in lex order.
ComplexMatrix o_matrix();

/// O H O^T; for the canonical H the result is
/// diag{ 2x2, (0), 2x2, (0), 2x2, (0) }.
ComplexMatrix block_diagonalize(const ComplexMatrix& h);

/// Norm of the entries of a 9x9 matrix lying outside the 2+1 block pattern.
double block_pattern_residual(const ComplexMatrix& h_tilde);

/// O J^{(k)} O^T: (3/4) times the projector onto the k-th doublet's slots.
ComplexMatrix casimir_blocks(int k);

/// Loop periods (2pi/Omega, 2pi/omega1, 2pi/omega2).
/// Throws ZeroFrequency if any of omega1, omega2, Omega vanishes.
std::array<double, 3> periods(const HamiltonianSpec& s);

}  // namespace ybq
