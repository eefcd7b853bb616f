#pragma once

#include "dpcbound/error.hpp"

namespace dpc {

// Jointly Gaussian (X, Z, N) with X independent of Z. The exact
// Gel'fand-Pinsker rate of this joint law with the linear auxiliary
// U = X + alpha*Z is the independent cross-check for the closed-form bound:
// the bound is tight exactly when the noise is Gaussian.
struct GaussianJoint {
  double sigma_x2 = 1.0;
  double sigma_z2 = 1.0;
  double sigma_n2 = 1.0;
  double rho_xn = 0.0;
  double rho_zn = 0.0;
  // rho_xz is fixed at 0.
};

// R(alpha) = I(U;Y) - I(U;Z) in bits, with Y = eta*X + Z + N, from exact
// bivariate-Gaussian mutual informations -1/2 log2(1 - rho^2).
double gp_rate(const GaussianJoint& j, double eta, double alpha);

struct GpMax {
  double rate_bits = 0.0;
  double alpha_star = 0.0;
};

// Golden-section maximization of gp_rate over alpha in [-10, 10] (tolerance
// 1e-10), widening the interval x2 up to 3 times if the optimum sits on a
// boundary.
GpMax gp_rate_max(const GaussianJoint& j, double eta);

}  // namespace dpc
