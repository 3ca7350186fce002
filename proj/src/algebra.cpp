#include "ybq/algebra.hpp"

#include <cmath>

#include "ybq/tensor.hpp"

namespace ybq {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix unit3(int i, int j) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix eye(int n) { return ComplexMatrix::Identity(n, n); }

// Fill the M-matrix entry pattern with one value per entry class.
struct MEntryValues {
  Complex row1, row0, rowm1;  // row (a,a), column a permutation of the rest
  Complex col1, col0, colm1;  // transposed pattern
  Complex swap;               // (a,b) -> (b,a), a != b
};

ComplexMatrix fill_m(const MEntryValues& v) {
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int a : kLabels)
    for (int b : kLabels)
      for (int c : kLabels)
        for (int d : kLabels) {
          Complex value = 0.0;
          const bool cd_other = (c != d) && (c != a) && (d != a);
          const bool ab_other = (a != b) && (a != c) && (b != c);
          if (a == b && a == 1 && cd_other)
            value = v.row1;
          else if (a == b && a == 0 && cd_other)
            value = v.row0;
          else if (a == b && a == -1 && cd_other)
            value = v.rowm1;
          else if (c == d && c == 1 && ab_other)
            value = v.col1;
          else if (c == d && c == 0 && ab_other)
            value = v.col0;
          else if (c == d && c == -1 && ab_other)
            value = v.colm1;
          else if (a != b && a == d && b == c)
            value = v.swap;
          if (value != Complex(0.0))
            m(lex_index(a, b), lex_index(c, d)) = value;
        }
  return m;
}

}  // namespace

std::array<ComplexMatrix, 8> gellmann() {
  std::array<ComplexMatrix, 8> l;
  for (auto& m : l) m = ComplexMatrix::Zero(3, 3);
  l[0](0, 1) = l[0](1, 0) = 1.0;
  l[1](0, 1) = -kI;
  l[1](1, 0) = kI;
  l[2](0, 0) = 1.0;
  l[2](1, 1) = -1.0;
  l[3](0, 2) = l[3](2, 0) = 1.0;
  l[4](0, 2) = -kI;
  l[4](2, 0) = kI;
  l[5](1, 2) = l[5](2, 1) = 1.0;
  l[6](1, 2) = -kI;
  l[6](2, 1) = kI;
  const double s3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = s3;
  l[7](1, 1) = s3;
  l[7](2, 2) = -2.0 * s3;
  return l;
}

const StructureConstants& structure_constants() {
  static const StructureConstants f = [] {
    StructureConstants out{};
    const auto l = gellmann();
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const ComplexMatrix comm = l[a] * l[b] - l[b] * l[a];
        for (int c = 0; c < 8; ++c)
          out[a][b][c] = ((comm * l[c]).trace() / (4.0 * kI)).real();
      }
    return out;
  }();
  return f;
}

ComplexMatrix site_i_plus() { return unit3(0, 1); }
ComplexMatrix site_u_plus() { return unit3(1, 2); }
ComplexMatrix site_v_plus() { return unit3(2, 0); }

ComplexMatrix site_i3() {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  return m;
}

ComplexMatrix site_y() {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 1.0 / 3.0;
  m(1, 1) = 1.0 / 3.0;
  m(2, 2) = -2.0 / 3.0;
  return m;
}

std::array<ComplexMatrix, 8> Su3Realization::generators() const {
  std::array<ComplexMatrix, 8> g;
  g[0] = (i_plus + i_minus) / 2.0;
  g[1] = (i_plus - i_minus) / (2.0 * kI);
  g[2] = i3;
  g[3] = (v_plus + v_minus) / 2.0;
  g[4] = (v_minus - v_plus) / (2.0 * kI);
  g[5] = (u_plus + u_minus) / 2.0;
  g[6] = (u_plus - u_minus) / (2.0 * kI);
  g[7] = std::sqrt(3.0) / 2.0 * y;
  return g;
}

Su3Realization su3_realization(int k) {
  const ComplexMatrix ip = site_i_plus(), im = site_i_plus().adjoint();
  const ComplexMatrix up = site_u_plus(), um = site_u_plus().adjoint();
  const ComplexMatrix vp = site_v_plus(), vm = site_v_plus().adjoint();
  const ComplexMatrix i3 = site_i3(), y = site_y(), id = eye(3);

  Su3Realization r;
  r.k = k;
  switch (k) {
    case 1:
      r.i_plus = kron(ip, im);
      r.u_plus = kron(up, vm);
      r.v_plus = kron(vp, um);
      r.i3 = (kron(i3, id) - kron(id, i3)) / 3.0 +
             (kron(i3, y) - kron(y, i3)) / 2.0;
      r.y = (kron(y, id) + kron(id, y)) / 3.0 - 2.0 / 3.0 * kron(i3, i3) -
            0.5 * kron(y, y);
      break;
    case 2:
      r.i_plus = kron(up, um);
      r.u_plus = kron(vp, im);
      r.v_plus = kron(ip, vm);
      r.i3 = 0.5 * (-(kron(i3, id) - kron(id, i3)) / 3.0 +
                    (kron(y, id) - kron(id, y)) / 2.0 + kron(i3, y) -
                    kron(y, i3));
      r.y = -((kron(i3, id) + kron(id, i3)) / 3.0 +
              (kron(y, id) + kron(id, y)) / 6.0 + 2.0 / 3.0 * kron(i3, i3) +
              0.5 * kron(y, y));
      break;
    case 3:
      r.i_plus = kron(vp, vm);
      r.u_plus = kron(ip, um);
      r.v_plus = kron(up, im);
      r.i3 = 0.5 * (-(kron(i3, id) - kron(id, i3)) / 3.0 -
                    (kron(y, id) - kron(id, y)) / 2.0 + kron(i3, y) -
                    kron(y, i3));
      r.y = (kron(i3, id) + kron(id, i3)) / 3.0 -
            (kron(y, id) + kron(id, y)) / 6.0 - 2.0 / 3.0 * kron(i3, i3) -
            0.5 * kron(y, y);
      break;
    default:
      throw BadSubsystem("su3_realization: k must be 1, 2 or 3, got " +
                         std::to_string(k));
  }
  r.i_minus = r.i_plus.adjoint();
  r.u_minus = r.u_plus.adjoint();
  r.v_minus = r.v_plus.adjoint();
  return r;
}

Su2Realization su2_realization(int k) {
  const Su3Realization r = su3_realization(k);
  const double s2 = std::sqrt(2.0);
  Su2Realization s;
  s.k = k;
  s.s_plus = (r.v_minus + r.u_plus) / s2;
  s.s_minus = (r.v_plus + r.u_minus) / s2;
  s.s3 = 0.75 * r.y + 0.25 * (r.i_plus + r.i_minus);
  s.casimir =
      0.5 * (s.s_plus * s.s_minus + s.s_minus * s.s_plus) + s.s3 * s.s3;
  return s;
}

ComplexMatrix build_M(const HeckeParams& p) {
  const Complex q1 = p.q1(), q2 = p.q2(), Q = p.Q();
  return fill_m({q1, q2, 1.0 / Q, 1.0 / q1, 1.0 / q2, Q, 1.0});
}

ComplexMatrix build_M_time_derivative(const HeckeParams& p, double omega1,
                                      double omega2) {
  const Complex q1 = p.q1(), q2 = p.q2(), Q = p.Q();
  const double W = omega1 + omega2;
  return fill_m({kI * omega1 * q1, kI * omega2 * q2, -kI * W / Q,
                 -kI * omega1 / q1, -kI * omega2 / q2, kI * W * Q, 0.0});
}

double hecke_residual(const HeckeParams& p, double g) {
  const ComplexMatrix m = build_M(p);
  const ComplexMatrix m12 = kron(m, eye(3));
  const ComplexMatrix m23 = kron(eye(3), m);
  return (m12 * m23 * m12 + g * m12 - m23 * m12 * m23 - g * m23).norm();
}

double braid_limit_residual(const HeckeParams& p) {
  const ComplexMatrix b = (2.0 * eye(9) - build_M(p)) / 3.0;
  const ComplexMatrix b12 = kron(b, eye(3));
  const ComplexMatrix b23 = kron(eye(3), b);
  return (b12 * b23 * b12 - b23 * b12 * b23).norm();
}

}  // namespace ybq
