#pragma once

#include <optional>
#include <vector>

#include "dpcbound/scenario.hpp"

namespace dpc {

enum class Method { theorem1, corollary1, lemma_mc, oracle };

const char* method_name(Method m);

// The rewritten channel Y = Ht*X + Wt*Z + Nt in which the transformed noise
// is uncorrelated with both X and Z:
//   Ht  = eta + rho_xn * sigma_n / sigma_x
//   Wt  = 1 + rho_zn * sigma_n / sigma_z          (only when sigma_z > 0)
//   var(Nt) = (1 - rho_xn^2 - rho_zn^2) * sigma_n^2
struct VirtualChannel {
  double eta_tilde = 0.0;
  std::optional<double> w_tilde;  // absent when the scenario has no interference
  double sigma_ntilde2 = 0.0;
};

struct PerGainRate {
  double eta = 0.0;
  double p = 0.0;
  double rate_bits = 0.0;
};

struct BoundResult {
  Method method = Method::theorem1;
  Domain domain = Domain::real_valued;
  // sigma_n2 == 0 makes the bound infinite; flagged instead of produced by
  // floating overflow.
  bool unbounded = false;
  double rate_bits = 0.0;  // +inf when unbounded
  double stderr_bits = 0.0;  // 0 for closed-form methods
  std::vector<PerGainRate> per_gain;
};

VirtualChannel virtual_channel(const SecondOrderStats& stats, double eta,
                               std::optional<double> sigma_z2 = std::nullopt);

// Per-gain term 1/2 log2(1 + Ht^2/(1-rho_xn^2-rho_zn^2) * sigma_x^2/sigma_n^2),
// averaged over the gain atoms. The 1/2 is dropped for complex-valued signals.
BoundResult theorem1_bound(const SecondOrderStats& stats, const GainDistribution& gain,
                           Domain domain);

// Uncorrelated-noise special case: per-gain term 1/2 log2(1 + eta^2 sx2/sn2).
BoundResult corollary1_bound(double sigma_x2, double sigma_n2,
                             const GainDistribution& gain, Domain domain);

// Residual-variance minimizer beta = eta*sx2 / (eta^2*sx2 + snt2).
double beta_star(double eta_tilde, double sigma_x2, double sigma_ntilde2);

// Q(alpha, beta) = (1-beta*eta)^2 sx2 + (alpha-beta)^2 sz2_eff + beta^2 snt2,
// where sz2_eff carries Wt^2 * sigma_z^2.
double q_form(double alpha, double beta, double eta, double sigma_x2,
              double sigma_z2_eff, double sigma_ntilde2);

struct QMin {
  double q = 0.0;
  double beta = 0.0;
};

// Minimal residual variance Q = snt2*sx2 / (eta^2*sx2 + snt2) at beta_star.
QMin q_min(double eta, double sigma_x2, double sigma_ntilde2);

// 0.5 for real-valued signals, 1.0 for complex-valued (the removed 1/2).
double domain_half(Domain d);

}  // namespace dpc
