#include "ybq/yang_baxter.hpp"

#include <cmath>
#include <numbers>

#include "ybq/basis.hpp"
#include "ybq/tensor.hpp"

namespace ybq {

namespace {

double wrap_angle(double a) {
  constexpr double tau = 2.0 * std::numbers::pi;
  double r = std::fmod(a, tau);
  if (r < 0.0) r += tau;
  return r;
}

}  // namespace

RParams::RParams(double theta_, double phi1_, double phi2_)
    : theta(wrap_angle(theta_)), phi1(wrap_angle(phi1_)),
      phi2(wrap_angle(phi2_)) {
  if (!std::isfinite(theta_) || !std::isfinite(phi1_) ||
      !std::isfinite(phi2_))
    throw Error("RParams: angles must be finite");
}

WeightPair weights(double theta) {
  const Complex x = std::polar(1.0, theta);
  const Complex a = 1.0 / x - x;
  const Complex b = 2.0 * x + 1.0 / x;
  return {b / 3.0, -(x - 1.0 / x) / b, a, b};
}

ComplexMatrix build_R(const RParams& p) {
  const WeightPair w = weights(p.theta);
  return (w.b * ComplexMatrix::Identity(9, 9) + w.a * build_M(p.hecke())) /
         3.0;
}

double ybe_residual(double theta_x, double theta_y, double phi1, double phi2,
                    double middle_offset) {
  const ComplexMatrix rx = build_R({theta_x, phi1, phi2});
  const ComplexMatrix ry = build_R({theta_y, phi1, phi2});
  const ComplexMatrix rxy =
      build_R({theta_x + theta_y + middle_offset, phi1, phi2});
  const ComplexMatrix id3 = ComplexMatrix::Identity(3, 3);
  const auto r12 = [&](const ComplexMatrix& r) { return kron(r, id3); };
  const auto r23 = [&](const ComplexMatrix& r) { return kron(id3, r); };
  return (r12(rx) * r23(rxy) * r12(ry) - r23(ry) * r12(rxy) * r23(rx)).norm();
}

ComplexVector act_on_basis(const RParams& p, int m, int n) {
  return build_R(p).col(lex_index(m, n));
}

double negativity(const ComplexVector& state, double tol) {
  if (state.size() != 9) throw BadShape("negativity: expected a 9-vector");
  if (std::abs(state.norm() - 1.0) > tol)
    throw NotNormalized("negativity: state norm " +
                        std::to_string(state.norm()));
  const ComplexMatrix rho = state * state.adjoint();
  const ComplexMatrix pt = partial_transpose(rho, Subsystem::A);

  // Route 1: trace norm via singular values.
  Eigen::JacobiSVD<ComplexMatrix> svd(pt);
  const double trace_norm = svd.singularValues().sum();
  const double via_trace_norm = (trace_norm - 1.0) / 2.0;

  // Route 2: |sum of negative eigenvalues|.
  const EigenSystem es = eig_hermitian(pt);
  double negative_sum = 0.0;
  for (Eigen::Index i = 0; i < es.values.size(); ++i)
    if (es.values[i] < 0.0) negative_sum -= es.values[i];

  if (std::abs(via_trace_norm - negative_sum) > tol)
    throw Error("negativity: route disagreement " +
                std::to_string(std::abs(via_trace_norm - negative_sum)));
  return via_trace_norm;
}

double negativity_closed(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 4.0 / 9.0 * (s * s + std::abs(s) * std::sqrt(1.0 + 8.0 * c * c));
}

ComplexMatrix su3_expansion_matrix(const RParams& p) {
  const WeightPair w = weights(p.theta);
  const HeckeParams h = p.hecke();
  const Complex q1 = h.q1(), q2 = h.q2(), Q = h.Q();
  const Su3Realization r1 = su3_realization(1);
  const Su3Realization r2 = su3_realization(2);
  const Su3Realization r3 = su3_realization(3);

  ComplexMatrix sum = r1.i_plus + r1.i_minus + Q * (r1.v_minus + r1.u_plus) +
                      (1.0 / Q) * (r1.u_minus + r1.v_plus);
  sum += r2.i_plus + r2.i_minus + q1 * (r2.v_plus + r2.u_minus) +
         (1.0 / q1) * (r2.v_minus + r2.u_plus);
  sum += r3.i_plus + r3.i_minus + q2 * (r3.v_plus + r3.u_minus) +
         (1.0 / q2) * (r3.v_minus + r3.u_plus);
  return w.a / 3.0 * sum + w.b / 3.0 * ComplexMatrix::Identity(9, 9);
}

double rebuild_from_su3(const RParams& p) {
  return (su3_expansion_matrix(p) - build_R(p)).norm();
}

}  // namespace ybq
