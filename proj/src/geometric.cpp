#include "ybq/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ybq/basis.hpp"
#include "ybq/tensor.hpp"
#include "ybq/yang_baxter.hpp"

namespace ybq {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateSin = 1e-8;

int band_to_index(const HamiltonianSpec& s, int k, Band band) {
  const double e_plus =
      2.0 * std::sqrt(2.0) / 3.0 * s.hbar * s.omega(k) * std::sin(s.theta);
  if (band == Band::Zero) return 1;
  const int plus_idx = e_plus > 0.0 ? 2 : 0;
  return band == Band::Plus ? plus_idx : 2 - plus_idx;
}

void require_nondegenerate(const HamiltonianSpec& s) {
  if (std::abs(std::sin(s.theta)) <= kDegenerateSin)
    throw DegenerateSpectrum("sin(theta) = " +
                             std::to_string(std::sin(s.theta)) +
                             " leaves the bands degenerate");
}

std::vector<Eigen::Vector3cd> loop_eigenvectors(const HamiltonianSpec& s,
                                                int subsystem, Band band,
                                                int steps) {
  const double period = periods(s)[subsystem - 1];
  const int idx = band_to_index(s, subsystem, band);
  std::vector<Eigen::Vector3cd> vecs;
  vecs.reserve(steps);
  for (int j = 0; j < steps; ++j) {
    const double t = period * j / steps;
    const SubsystemBlock blk = subsystem_block(build_H(s, t), subsystem);
    const EigenSystem es = eig_hermitian(ComplexMatrix(blk.h));
    vecs.emplace_back(es.vectors.col(idx));
  }
  return vecs;
}

}  // namespace

const char* band_name(Band b) {
  switch (b) {
    case Band::Plus:
      return "+";
    case Band::Zero:
      return "0";
    case Band::Minus:
      return "-";
  }
  return "?";
}

Band parse_band(const std::string& s) {
  if (s == "+" || s == "plus") return Band::Plus;
  if (s == "0" || s == "zero") return Band::Zero;
  if (s == "-" || s == "minus") return Band::Minus;
  throw BadLabel("band must be one of +, 0, -: got '" + s + "'");
}

double wrap_phase(double phase) {
  double r = std::remainder(phase, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double berry_analytic(double theta, Band band) {
  if (band == Band::Zero) return 0.0;
  const double gamma_plus =
      -2.0 * kPi * (0.5 - std::sqrt(2.0) / 3.0 * std::sin(theta));
  return wrap_phase(band == Band::Plus ? gamma_plus : -gamma_plus);
}

AlphaBeta alpha_beta(double theta, double omega_t) {
  const double sn = std::sin(theta), cs = std::cos(theta);
  const double ca =
      std::clamp(2.0 * std::sqrt(2.0) / 3.0 * sn, -1.0, 1.0);
  const double den = std::sqrt(9.0 - 8.0 * sn * sn);
  const double cb =
      (-sn * std::cos(omega_t) + 3.0 * cs * std::sin(omega_t)) / den;
  const double sb =
      (3.0 * cs * std::cos(omega_t) + sn * std::sin(omega_t)) / den;
  double beta = std::atan2(sb, cb);
  if (beta < 0.0) beta += 2.0 * kPi;
  return {std::acos(ca), beta};
}

double solid_angle(double alpha) {
  if (alpha < 0.0 || alpha > kPi)
    throw Error("solid_angle: alpha must lie in [0, pi]");
  return 2.0 * kPi * (1.0 - std::cos(alpha));
}

double berry_phase_overlap(const HamiltonianSpec& s, int subsystem, Band band,
                           int steps) {
  require_nondegenerate(s);
  if (steps < 8) throw Error("berry_phase_overlap: too few steps");
  const auto vecs = loop_eigenvectors(s, subsystem, band, steps);
  Complex prod = 1.0;
  for (int j = 0; j < steps; ++j)
    prod *= vecs[j].dot(vecs[(j + 1) % steps]);
  return wrap_phase(-std::arg(prod));
}

BerryResult berry_numeric(const LoopSpec& l) {
  if (l.steps < 16) throw Error("berry_numeric: steps must be >= 16");
  const double full = berry_phase_overlap(l.spec, l.subsystem, l.band,
                                          l.steps);
  const double half = berry_phase_overlap(l.spec, l.subsystem, l.band,
                                          l.steps / 2);
  const double estimate = std::abs(wrap_phase(full - half)) / 3.0;
  if (estimate > 1e-4)
    throw NotConverged("berry_numeric: error estimate " +
                       std::to_string(estimate) + " at steps " +
                       std::to_string(l.steps));
  BerryResult r;
  r.subsystem = l.subsystem;
  r.band = l.band;
  r.numeric_phase = full;
  r.analytic_phase = berry_analytic(l.spec.theta, l.band);
  r.steps = l.steps;
  r.richardson_estimate = estimate;
  return r;
}

double berry_direct_integral(const LoopSpec& l) {
  require_nondegenerate(l.spec);
  if (l.steps < 16) throw Error("berry_direct_integral: steps must be >= 16");
  auto vecs = loop_eigenvectors(l.spec, l.subsystem, l.band, l.steps);
  for (auto& v : vecs) {
    int arg_max = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(v[i]) > std::abs(v[arg_max])) arg_max = i;
    v *= std::polar(1.0, -std::arg(v[arg_max]));
  }
  const int n = l.steps;
  const double dt = periods(l.spec)[l.subsystem - 1] / n;
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const Eigen::Vector3cd deriv =
        (vecs[(j + 1) % n] - vecs[(j + n - 1) % n]) / (2.0 * dt);
    acc += (kI * vecs[j].dot(deriv)).real() * dt;
  }
  return wrap_phase(acc);
}

double coherent_state_check(const HamiltonianSpec& s, double t) {
  require_nondegenerate(s);
  const auto [alpha, beta] = alpha_beta(s.theta, s.Omega() * t);
  const Complex zeta = -(alpha / 2.0) * std::polar(1.0, -beta);

  const ComplexMatrix o = o_matrix();
  const ComplexMatrix s_plus_tilde =
      o * su2_realization(1).s_plus * o.transpose();
  const ComplexMatrix gen =
      zeta * s_plus_tilde - std::conj(zeta) * s_plus_tilde.adjoint();
  const ComplexMatrix u = expm(gen);

  // doublet slots of subsystem 1 in the block-diagonal basis
  ComplexVector up = ComplexVector::Zero(9), down = ComplexVector::Zero(9);
  up[0] = 1.0;
  down[1] = 1.0;
  const ComplexVector formula_plus = o.transpose() * (u * down);
  const ComplexVector formula_minus = o.transpose() * (u * up);

  const SubsystemBlock blk = subsystem_block(build_H(s, t), 1);
  const EigenSystem es = eig_hermitian(ComplexMatrix(blk.h));
  const auto embed = [&](int idx) {
    ComplexVector v = ComplexVector::Zero(9);
    for (int i = 0; i < 3; ++i) v[blk.basis[i]] = es.vectors.col(idx)[i];
    return v;
  };
  const ComplexVector numeric_plus = embed(band_to_index(s, 1, Band::Plus));
  const ComplexVector numeric_minus = embed(band_to_index(s, 1, Band::Minus));

  const double deficit_plus = 1.0 - std::abs(numeric_plus.dot(formula_plus));
  const double deficit_minus =
      1.0 - std::abs(numeric_minus.dot(formula_minus));
  return std::max(deficit_plus, deficit_minus);
}

}  // namespace ybq
