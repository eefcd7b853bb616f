#include "dpcbound/oracle.hpp"

#include <cmath>

namespace dpc {

namespace {

void require_joint(const GaussianJoint& j) {
  if (!(j.sigma_x2 > 0.0) || !(j.sigma_z2 > 0.0) || !(j.sigma_n2 > 0.0) ||
      !std::isfinite(j.sigma_x2) || !std::isfinite(j.sigma_z2) || !std::isfinite(j.sigma_n2))
    throw Error(Errc::precondition, "gp_rate: variances must be finite and > 0");
  // Schur complement of the (X,Z,N) covariance with rho_xz = 0.
  if (1.0 - j.rho_xn * j.rho_xn - j.rho_zn * j.rho_zn < 0.0)
    throw Error(Errc::singular_covariance,
                "gp_rate: (X,Z,N) covariance is not positive semidefinite");
}

double golden_max(double a, double b, double tol, const auto& f) {
  constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double gp_rate(const GaussianJoint& j, double eta, double alpha) {
  require_joint(j);

  const double cov_xn = j.rho_xn * std::sqrt(j.sigma_x2 * j.sigma_n2);
  const double cov_zn = j.rho_zn * std::sqrt(j.sigma_z2 * j.sigma_n2);
  const double cov_xy = eta * j.sigma_x2 + cov_xn;
  const double cov_zy = j.sigma_z2 + cov_zn;
  const double var_y =
      eta * eta * j.sigma_x2 + j.sigma_z2 + j.sigma_n2 + 2.0 * eta * cov_xn + 2.0 * cov_zn;
  if (!(var_y > 0.0))
    throw Error(Errc::singular_covariance, "gp_rate: Var(Y) is not positive");

  const double var_u = j.sigma_x2 + alpha * alpha * j.sigma_z2;
  const double cov_uz = alpha * j.sigma_z2;
  const double cov_uy = cov_xy + alpha * cov_zy;

  // I(U;Y) - I(U;Z) from -1/2 log2(1 - rho^2); the correlation form stays
  // well conditioned at extreme SNR.
  const double rho_uy2 = (cov_uy * cov_uy) / (var_u * var_y);
  const double rho_uz2 = (cov_uz * cov_uz) / (var_u * j.sigma_z2);
  if (!(rho_uy2 < 1.0))
    throw Error(Errc::singular_covariance, "gp_rate: U and Y are linearly dependent");
  return 0.5 * std::log2((1.0 - rho_uz2) / (1.0 - rho_uy2));
}

GpMax gp_rate_max(const GaussianJoint& j, double eta) {
  require_joint(j);
  constexpr double kTol = 1e-10;

  double lo = -10.0, hi = 10.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const double alpha =
        golden_max(lo, hi, kTol, [&](double a) { return gp_rate(j, eta, a); });
    const double margin = 1e-6 * (hi - lo);
    if (alpha - lo > margin && hi - alpha > margin)
      return {gp_rate(j, eta, alpha), alpha};
    lo *= 2.0;  // optimum pinned to a boundary: widen and retry
    hi *= 2.0;
  }
  const double alpha = golden_max(lo, hi, kTol, [&](double a) { return gp_rate(j, eta, a); });
  return {gp_rate(j, eta, alpha), alpha};
}

}  // namespace dpc
