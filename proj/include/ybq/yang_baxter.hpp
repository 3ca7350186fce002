#pragma once

#include "ybq/algebra.hpp"
#include "ybq/types.hpp"

namespace ybq {

/// Parameters of the unitary solution R(theta, phi1, phi2) with spectral
/// parameter x = e^{i theta}. Angles are canonicalized to [0, 2pi).
struct RParams {
  RParams(double theta_, double phi1_, double phi2_);

  double theta;
  double phi1;
  double phi2;

  Complex x() const { return std::polar(1.0, theta); }
  HeckeParams hecke() const { return {phi1, phi2}; }
};

/// Normalization pair of the Baxterization, plus the derived entries
/// a = x^{-1} - x and b = 2x + x^{-1}:
///   rho(x) = b/3,  F(x) = -(x - x^{-1})/b,  so  rho*F = a/3.
struct WeightPair {
  Complex rho;
  Complex f;
  Complex a;
  Complex b;
};

WeightPair weights(double theta);

/// R = rho(x) [ I + F(x) M(phi1, phi2) ] = (b I + a M)/3, 9x9 lex order.
/// Unitary on the unit circle; eigenvalues x^{-1} (x3) and x (x6).
ComplexMatrix build_R(const RParams& p);

/// || R12(x) R23(xy) R12(y) - R23(y) R12(xy) R23(x) || on the 27-dim
/// three-site space, all factors sharing (phi1, phi2).
/// `middle_offset` shifts the spectral angle of the middle factor and is
/// used as a negative control; 0 gives the genuine identity.
double ybe_residual(double theta_x, double theta_y, double phi1, double phi2,
                    double middle_offset = 0.0);

/// Column of R at |m n>: the generated state R|m n>, unit norm.
ComplexVector act_on_basis(const RParams& p, int m, int n);

/// Entanglement negativity of a pure two-qutrit state:
///   N = (||rho^{T_A}||_1 - 1)/2  with rho = |psi><psi|.
/// Computed both via singular values and via the negative eigenvalues of
/// the partial transpose; the two routes are cross-checked internally.
double negativity(const ComplexVector& state, double tol = kDefaultTol);

/// Closed form N(theta) = (4/9)(sin^2 th + |sin th| sqrt(1 + 8 cos^2 th)).
double negativity_closed(double theta);

/// R reassembled from the three su(3) realizations:
///   (a/3)[ I+^1 + I-^1 + Q(V-^1 + U+^1) + Q^{-1}(U-^1 + V+^1)
///        + I+^2 + I-^2 + q1(V+^2 + U-^2) + q1^{-1}(V-^2 + U+^2)
///        + I+^3 + I-^3 + q2(V+^3 + U-^3) + q2^{-1}(V-^3 + U+^3) ] + (b/3) I.
ComplexMatrix su3_expansion_matrix(const RParams& p);

/// Distance between the su(3) reassembly and build_R.
double rebuild_from_su3(const RParams& p);

}  // namespace ybq
