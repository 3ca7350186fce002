#include "ybq/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "ybq/basis.hpp"
#include "ybq/tensor.hpp"
#include "ybq/yang_baxter.hpp"

namespace ybq {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kDegenerateSin = 1e-8;

void validate_spec(const HamiltonianSpec& s) {
  if (s.hbar <= 0.0) throw Error("HamiltonianSpec: hbar must be positive");
}

void require_nondegenerate(const HamiltonianSpec& s) {
  if (std::abs(std::sin(s.theta)) <= kDegenerateSin)
    throw DegenerateSpectrum("sin(theta) = " +
                             std::to_string(std::sin(s.theta)) +
                             " leaves the bands degenerate");
}

RParams r_params(const HamiltonianSpec& s, double t) {
  return {s.theta, s.omega1 * t, s.omega2 * t};
}

ComplexVector embed(const std::array<int, 3>& basis,
                    const Eigen::Vector3cd& v) {
  ComplexVector out = ComplexVector::Zero(9);
  for (int i = 0; i < 3; ++i) out[basis[i]] = v[i];
  return out;
}

}  // namespace

double HamiltonianSpec::omega(int k) const {
  switch (k) {
    case 1:
      return Omega();
    case 2:
      return omega1;
    case 3:
      return omega2;
  }
  throw BadSubsystem("omega: k must be 1, 2 or 3, got " + std::to_string(k));
}

double HamiltonianSpec::c_factor(int k) const {
  return -4.0 * std::sqrt(2.0) / 3.0 * hbar * omega(k) * std::sin(theta);
}

ComplexMatrix build_H(const HamiltonianSpec& s, double t) {
  validate_spec(s);
  const WeightPair w = weights(s.theta);
  const HeckeParams h{s.omega1 * t, s.omega2 * t};
  const ComplexMatrix dm = build_M_time_derivative(h, s.omega1, s.omega2);
  const ComplexMatrix r = build_R(r_params(s, t));
  return kI * s.hbar * (w.a / 3.0) * dm * r.adjoint();
}

ComplexMatrix build_H_fd(const HamiltonianSpec& s, double t, double dt) {
  validate_spec(s);
  if (dt <= 0.0) throw Error("build_H_fd: dt must be positive");
  const ComplexMatrix rp = build_R(r_params(s, t + dt));
  const ComplexMatrix rm = build_R(r_params(s, t - dt));
  const ComplexMatrix r = build_R(r_params(s, t));
  return kI * s.hbar * ((rp - rm) / (2.0 * dt)) * r.adjoint();
}

SubsystemBlock subsystem_block(const ComplexMatrix& h, int k) {
  if (h.rows() != 9 || h.cols() != 9)
    throw BadShape("subsystem_block: expected 9x9");
  SubsystemBlock blk;
  blk.k = k;
  blk.basis = subsystem_basis(k);

  ComplexMatrix remainder = h;
  for (int kk = 1; kk <= 3; ++kk) {
    const auto basis = subsystem_basis(kk);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (kk == k) blk.h(i, j) = h(blk.basis[i], blk.basis[j]);
        remainder(basis[i], basis[j]) = 0.0;
      }
  }
  blk.off_block_norm = remainder.norm();
  if (blk.off_block_norm > 1e-10)
    throw BlockLeakage("subsystem_block: off-block norm " +
                       std::to_string(blk.off_block_norm));
  return blk;
}

std::array<double, 3> closed_form_spectrum(const HamiltonianSpec& s, int k) {
  validate_spec(s);
  const double e =
      2.0 * std::sqrt(2.0) / 3.0 * s.hbar * s.omega(k) * std::sin(s.theta);
  return {-e, 0.0, e};
}

std::array<ComplexVector, 3> closed_form_eigenstates(const HamiltonianSpec& s,
                                                     int k, double t) {
  validate_spec(s);
  require_nondegenerate(s);
  const auto basis = subsystem_basis(k);
  const double sn = std::sin(s.theta);
  const double r2 = std::sqrt(2.0);
  const Complex b = weights(s.theta).b;
  const Complex phase = std::polar(1.0, -s.omega(k) * t);

  Eigen::Vector3cd plus, zero, minus;
  if (k == 1) {
    const double np = std::sqrt((3.0 + 2.0 * r2 * sn) / 6.0);
    const double nm = std::sqrt((3.0 - 2.0 * r2 * sn) / 6.0);
    const Complex fp = (4.0 * sn - 3.0 * r2) / (2.0 * kI * b);
    const Complex fm = (4.0 * sn + 3.0 * r2) / (2.0 * kI * b);
    plus << np * fp, np * fp, np * phase;
    minus << nm * fm, nm * fm, nm * phase;
  } else {
    const double np = std::sqrt((3.0 + 2.0 * r2 * sn) / 12.0);
    const double nm = std::sqrt((3.0 - 2.0 * r2 * sn) / 12.0);
    const Complex fp = (4.0 * sn - 3.0 * r2) / (kI * std::conj(b));
    const Complex fm = (4.0 * sn + 3.0 * r2) / (kI * std::conj(b));
    plus << np * fp, np * phase, np * phase;
    minus << nm * fm, nm * phase, nm * phase;
  }
  zero << 0.0, -1.0 / r2, 1.0 / r2;
  if (k == 1) zero << -1.0 / r2, 1.0 / r2, 0.0;

  return {embed(basis, plus), embed(basis, zero), embed(basis, minus)};
}

Eigen::Matrix<double, 8, 1> b_vector(const HamiltonianSpec& s, int k,
                                     double t) {
  validate_spec(s);
  require_nondegenerate(s);
  if (s.omega(k) == 0.0)
    throw ZeroFrequency("b_vector: omega(" + std::to_string(k) + ") is zero");
  const ComplexMatrix h = build_H(s, t);
  const auto gens = su3_realization(k).generators();
  const double c = s.c_factor(k);
  Eigen::Matrix<double, 8, 1> b;
  for (int l = 0; l < 8; ++l)
    b[l] = 2.0 * (h * gens[l]).trace().real() / c;
  return b;
}

Eigen::Matrix<double, 8, 1> printed_b_vector(const HamiltonianSpec& s, int k,
                                             double t) {
  const double sn = std::sin(s.theta), cs = std::cos(s.theta);
  const double r2 = std::sqrt(2.0);
  const double wt = s.omega(k) * t;
  Eigen::Matrix<double, 8, 1> b;
  if (k == 1) {
    b[0] = r2 / 3.0 * sn;
    b[1] = b[2] = 0.0;
    b[3] = -r2 / 6.0 * sn * std::cos(wt) + r2 / 2.0 * cs * std::sin(wt);
    b[4] = r2 / 6.0 * sn * std::sin(wt) + r2 / 2.0 * cs * std::cos(wt);
    b[5] = b[3];
    b[6] = b[4];
    b[7] = r2 / 2.0 * sn;
  } else {
    b[0] = -r2 / 3.0 * sn;
    b[1] = b[2] = 0.0;
    b[3] = r2 / 6.0 * sn * std::cos(wt) + r2 / 2.0 * cs * std::sin(wt);
    b[4] = r2 / 6.0 * sn * std::sin(wt) - r2 / 2.0 * cs * std::cos(wt);
    b[5] = b[3];
    b[6] = b[4];
    b[7] = -r2 / 2.0 * sn;
  }
  return b;
}

std::vector<Discrepancy> b_vector_report(const HamiltonianSpec& s, int k,
                                         double t) {
  const auto extracted = b_vector(s, k, t);
  const auto printed = printed_b_vector(s, k, t);
  std::vector<Discrepancy> out;
  for (int l = 0; l < 8; ++l) {
    Discrepancy d;
    d.item = "B_" + std::to_string(l + 1) + "^(" + std::to_string(k) + ")";
    d.magnitude = std::abs(extracted[l] - printed[l]);
    if (d.magnitude > 1e-10)
      d.note = "extracted " + std::to_string(extracted[l]) + " vs printed " +
               std::to_string(printed[l]);
    out.push_back(std::move(d));
  }
  return out;
}

double su2_form_residual(const HamiltonianSpec& s, int k, double t) {
  validate_spec(s);
  const Su2Realization su2 = su2_realization(k);
  const Complex bconj = std::conj(weights(s.theta).b);
  const double sn = std::sin(s.theta);
  const double r2 = std::sqrt(2.0);

  Complex b_minus;
  double b3;
  if (k == 1) {
    b_minus = -kI / 3.0 * bconj * std::polar(1.0, s.Omega() * t);
    b3 = 2.0 * r2 / 3.0 * sn;
  } else {
    b_minus = kI / 3.0 * bconj * std::polar(1.0, -s.omega(k) * t);
    b3 = -2.0 * r2 / 3.0 * sn;
  }
  const Complex b_plus = std::conj(b_minus);

  const ComplexMatrix form =
      s.c_factor(k) * (0.5 * (b_minus * su2.s_plus + b_plus * su2.s_minus) +
                       b3 * su2.s3);

  const ComplexMatrix h = build_H(s, t);
  const auto basis = subsystem_basis(k);
  ComplexMatrix h_sub = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h_sub(basis[i], basis[j]) = h(basis[i], basis[j]);
  return (form - h_sub).norm();
}

double operator_expansion_residual(const HamiltonianSpec& s, int k, double t) {
  validate_spec(s);
  const Su3Realization r = su3_realization(k);
  const Complex b = weights(s.theta).b;
  const Complex bc = std::conj(b);
  const double sn = std::sin(s.theta);
  const double r2 = std::sqrt(2.0);
  const HeckeParams hp{s.omega1 * t, s.omega2 * t};

  ComplexMatrix x;
  if (k == 1) {
    const Complex Q = hp.Q();
    x = r2 / 6.0 * sn * (r.i_plus + r.i_minus) + r2 / 2.0 * sn * r.y -
        r2 / 12.0 * kI * bc * Q * (r.v_minus + r.u_plus) +
        r2 / 12.0 * kI * b / Q * (r.v_plus + r.u_minus);
  } else {
    const Complex q = (k == 2) ? hp.q1() : hp.q2();
    x = -r2 / 6.0 * sn * (r.i_plus + r.i_minus) - r2 / 2.0 * sn * r.y +
        r2 / 12.0 * kI * bc / q * (r.u_plus + r.v_minus) -
        r2 / 12.0 * kI * b * q * (r.v_plus + r.u_minus);
  }
  const ComplexMatrix form = s.c_factor(k) * x;

  const ComplexMatrix h = build_H(s, t);
  const auto basis = subsystem_basis(k);
  ComplexMatrix h_sub = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h_sub(basis[i], basis[j]) = h(basis[i], basis[j]);
  return (form - h_sub).norm();
}

std::vector<Discrepancy> eigenstate_report(const HamiltonianSpec& s, int k,
                                           double t) {
  const auto states = closed_form_eigenstates(s, k, t);
  const auto spectrum = closed_form_spectrum(s, k);
  const std::array<double, 3> energies = {spectrum[2], 0.0, spectrum[0]};
  static const std::array<const char*, 3> band_names = {"+", "0", "-"};

  const ComplexMatrix h = build_H(s, t);
  const SubsystemBlock blk = subsystem_block(h, k);
  const EigenSystem es = eig_hermitian(ComplexMatrix(blk.h));

  std::vector<Discrepancy> out;
  for (int band = 0; band < 3; ++band) {
    // ascending eigenvalue index of this band
    const double e = energies[band];
    int idx = 1;
    if (e > 0.0) idx = 2;
    if (e < 0.0) idx = 0;
    const ComplexVector numeric = embed(blk.basis, es.vectors.col(idx));

    Discrepancy d;
    d.item = "eigenstate k=" + std::to_string(k) + " band=" +
             band_names[band];
    const double overlap = std::abs(numeric.dot(states[band]));
    d.magnitude = 1.0 - overlap;
    const double residual = (h * states[band] - e * states[band]).norm();
    d.note = "eigen-residual " + std::to_string(residual);
    out.push_back(std::move(d));
  }
  return out;
}

ComplexMatrix o_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix<double, 9, 9> o_paper;
  o_paper << 0, s, s, 0, 0, 0, 0, 0, 0,  //
      0, 0, 0, 0, 0, 0, 0, 0, 1,         //
      0, -s, s, 0, 0, 0, 0, 0, 0,        //
      1, 0, 0, 0, 0, 0, 0, 0, 0,         //
      0, 0, 0, 0, 0, 0, s, s, 0,         //
      0, 0, 0, 0, 0, 0, -s, s, 0,        //
      0, 0, 0, 0, 1, 0, 0, 0, 0,         //
      0, 0, 0, s, 0, s, 0, 0, 0,         //
      0, 0, 0, -s, 0, s, 0, 0, 0;
  return o_paper.cast<Complex>() * paper_permutation();
}

ComplexMatrix block_diagonalize(const ComplexMatrix& h) {
  if (h.rows() != 9 || h.cols() != 9)
    throw BadShape("block_diagonalize: expected 9x9");
  const ComplexMatrix o = o_matrix();
  return o * h * o.transpose();
}

double block_pattern_residual(const ComplexMatrix& h_tilde) {
  ComplexMatrix rem = h_tilde;
  for (int base : {0, 3, 6}) rem.block(base, base, 2, 2).setZero();
  return rem.norm();
}

ComplexMatrix casimir_blocks(int k) {
  const ComplexMatrix o = o_matrix();
  return o * su2_realization(k).casimir * o.transpose();
}

std::array<double, 3> periods(const HamiltonianSpec& s) {
  constexpr double tau = 2.0 * std::numbers::pi;
  if (s.omega1 == 0.0 || s.omega2 == 0.0 || s.Omega() == 0.0)
    throw ZeroFrequency("periods: all subsystem frequencies must be nonzero");
  return {tau / s.Omega(), tau / s.omega1, tau / s.omega2};
}

}  // namespace ybq
