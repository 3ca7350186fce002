#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ybq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Default tolerance for algebraic identity checks on <= 27x27 doubles.
inline constexpr double kDefaultTol = 1e-10;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};
struct BadShape : Error {
  using Error::Error;
};
struct BadSubsystem : Error {
  using Error::Error;
};
struct BadLabel : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct BlockLeakage : Error {
  using Error::Error;
};
struct DegenerateSpectrum : Error {
  using Error::Error;
};
struct ZeroFrequency : Error {
  using Error::Error;
};
struct NotConverged : Error {
  using Error::Error;
};

}  // namespace ybq
