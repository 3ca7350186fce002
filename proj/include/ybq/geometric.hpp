#pragma once

#include "ybq/dynamics.hpp"
#include "ybq/types.hpp"

namespace ybq {

enum class Band { Plus, Zero, Minus };

const char* band_name(Band b);
Band parse_band(const std::string& s);  // "+", "0", "-"

/// Reduce an angle to (-pi, pi].
double wrap_phase(double phase);

/// gamma_+ = -2pi (1/2 - (sqrt2/3) sin theta), gamma_- = -gamma_+,
/// gamma_0 = 0; reduced to (-pi, pi].
double berry_analytic(double theta, Band band);

/// Bloch angles of the spin-1/2 block of subsystem 1:
///   cos alpha = (2 sqrt2 / 3) sin theta                (time-independent)
///   cos beta  = (-sin th cos Wt + 3 cos th sin Wt)/sqrt(9 - 8 sin^2 th)
/// with beta resolved to [0, 2pi) by the matching sine component so that
/// H_{1/2} = C(1)(sin a cos b S1 + sin a sin b S2 + cos a S3).
struct AlphaBeta {
  double alpha;
  double beta;
};
AlphaBeta alpha_beta(double theta, double omega_t);

/// 2pi (1 - cos alpha), alpha in [0, pi].
double solid_angle(double alpha);

struct LoopSpec {
  HamiltonianSpec spec;
  int subsystem = 1;
  Band band = Band::Plus;
  int steps = 2048;
};

struct BerryResult {
  int subsystem = 0;
  Band band = Band::Plus;
  double numeric_phase = 0.0;
  double analytic_phase = 0.0;
  int steps = 0;
  double richardson_estimate = 0.0;
};

/// Gauge-invariant discrete loop phase gamma = -arg prod_j <psi_j|psi_j+1>
/// over one subsystem period, psi_N identified with psi_0; bands tracked by
/// eigenvalue order (the spectrum is time-independent and nondegenerate).
/// No Richardson policy; building block for berry_numeric and the
/// convergence tests.
double berry_phase_overlap(const HamiltonianSpec& s, int subsystem, Band band,
                           int steps);

/// berry_phase_overlap at `steps` plus a step-halved rerun for an error
/// estimate (O(N^-2) convergence). Throws DegenerateSpectrum when
/// |sin theta| <= 1e-8 and NotConverged when the estimate exceeds 1e-4.
BerryResult berry_numeric(const LoopSpec& l);

/// Secondary route: fix the gauge by rotating each eigenvector so its
/// largest-modulus component is real positive, then trapezoid-integrate
/// i <psi|dpsi/dt> around the loop.
double berry_direct_integral(const LoopSpec& l);

/// Displacement construction of the subsystem-1 eigenstates in the
/// block-diagonal basis: exp[zeta S~+ - conj(zeta) S~-] applied to the
/// doublet states, zeta = -(alpha/2) e^{-i beta}, mapped back through O^T.
/// Returns max over bands +- of (1 - |<formula|numeric eigenvector>|).
double coherent_state_check(const HamiltonianSpec& s, double t);

}  // namespace ybq
