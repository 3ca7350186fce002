#pragma once

#include <array>

#include "ybq/basis.hpp"
#include "ybq/types.hpp"

namespace ybq {

/// Phases of the Hecke matrix. q1 = e^{i phi1}, q2 = e^{i phi2}, Q = q1 q2.
struct HeckeParams {
  double phi1 = 0.0;
  double phi2 = 0.0;

  Complex q1() const { return std::polar(1.0, phi1); }
  Complex q2() const { return std::polar(1.0, phi2); }
  Complex Q() const { return std::polar(1.0, phi1 + phi2); }
};

/// Standard Gell-Mann matrices lambda_1..lambda_8, tr(l_a l_b) = 2 delta_ab.
/// Row/column order follows the label map 1 -> 0, 0 -> 1, -1 -> 2.
std::array<ComplexMatrix, 8> gellmann();

/// su(3) structure constants from traces in the fundamental representation:
/// f_abc = tr([lambda_a, lambda_b] lambda_c) / (4i). Totally antisymmetric.
using StructureConstants = std::array<std::array<std::array<double, 8>, 8>, 8>;
const StructureConstants& structure_constants();

// Single-site 3x3 operators in the label basis (1, 0, -1):
//   I+ = |1><0|, U+ = |0><-1|, V+ = |-1><1|,
//   I3 = diag(1/2, -1/2, 0),  Y = diag(1/3, 1/3, -2/3).
ComplexMatrix site_i_plus();
ComplexMatrix site_u_plus();
ComplexMatrix site_v_plus();
ComplexMatrix site_i3();
ComplexMatrix site_y();

/// One of the three commuting su(3) copies acting on the two-qutrit space.
/// Each operator is 9x9 (lex order) and supported on the k-th 3-dim subspace.
struct Su3Realization {
  int k = 0;
  ComplexMatrix i_plus, i_minus;
  ComplexMatrix u_plus, u_minus;
  ComplexMatrix v_plus, v_minus;
  ComplexMatrix i3, y;

  /// Hermitian generators I_1..I_8 rebuilt from the ladder combinations:
  /// I+- = I1 +- iI2, V+- = I4 -+ iI5, U+- = I6 +- iI7, Y = (2/sqrt3) I8.
  std::array<ComplexMatrix, 8> generators() const;
};

/// Subsystem operators built from products of single-site operators:
///   k=1: I+ = I1+ I2-,  U+ = U1+ V2-,  V+ = V1+ U2-
///   k=2: I+ = U1+ U2-,  U+ = V1+ I2-,  V+ = I1+ V2-
///   k=3: I+ = V1+ V2-,  U+ = I1+ U2-,  V+ = U1+ I2-
/// together with the matching I3 / Y combinations.
Su3Realization su3_realization(int k);

/// Spin-1/2 + spin-0 decomposition inside subsystem k:
///   S+ = (V- + U+)/sqrt2, S- = (V+ + U-)/sqrt2, S3 = (3/4)Y + (1/4)(I+ + I-),
/// with second-order Casimir J = (S+S- + S-S+)/2 + S3^2.
struct Su2Realization {
  int k = 0;
  ComplexMatrix s_plus, s_minus, s3;
  ComplexMatrix casimir;
};

Su2Realization su2_realization(int k);

/// The 9x9 Hecke matrix (lex order). Nonzero entries:
///   M[(a,a),(c,d)] = q1 / q2 / 1/Q  for a = 1 / 0 / -1 and {c,d} the two
///                    other labels in either order;
///   M[(c,d),(a,a)] = the reciprocal phases, symmetrically;
///   M[(a,b),(b,a)] = 1 for a != b.
/// Hermitian; satisfies M^2 = M + 2I.
ComplexMatrix build_M(const HeckeParams& p);

/// Entrywise d/dt of M(phi1 = w1 t, phi2 = w2 t) at the configuration p.
/// Phase entries scale by +-i w; the swap entries are constant.
ComplexMatrix build_M_time_derivative(const HeckeParams& p, double omega1,
                                      double omega2);

/// Frobenius norm of M12 M23 M12 + g M12 - M23 M12 M23 - g M23 on the
/// three-site (27-dim) space, with M12 = M (x) I3 and M23 = I3 (x) M.
/// g defaults to the value fixed by M^2 = M + 2I; overriding it serves as a
/// negative control.
double hecke_residual(const HeckeParams& p, double g = 2.0);

/// Frobenius norm of B12 B23 B12 - B23 B12 B23 for the braid-limit
/// projector B = (2I - M)/3.
double braid_limit_residual(const HeckeParams& p);

}  // namespace ybq
