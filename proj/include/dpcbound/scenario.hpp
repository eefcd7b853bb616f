#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dpcbound/error.hpp"

namespace dpc {

enum class Domain { real_valued, complex_valued };

struct GainAtom {
  double eta = 1.0;  // channel gain realization
  double p = 1.0;    // probability mass
};

// Finite discrete law of the channel gain H. A continuous gain density is
// approximated by quantizing it into atoms before it reaches this layer.
struct GainDistribution {
  std::vector<GainAtom> atoms;
};

struct MixtureComponent {
  double weight = 1.0;
  double mean = 0.0;
  double sigma = 1.0;
};

struct Gaussian {
  double mean = 0.0;
  double sigma = 1.0;
};

struct Laplace {
  double mean = 0.0;
  double scale = 1.0;  // variance = 2*scale^2
};

struct Uniform {
  double low = 0.0;
  double high = 1.0;
};

struct GaussianMixture {
  std::vector<MixtureComponent> components;
};

// Marker for interference whose variance is unbounded/unknown. The closed-form
// bound never reads the interference variance, so it accepts this; samplers
// reject it.
struct UnboundedVariance {};

struct MarginalFamily {
  std::variant<Gaussian, Laplace, Uniform, GaussianMixture, UnboundedVariance> law =
      Gaussian{};

  static MarginalFamily gaussian(double mean, double sigma);
  static MarginalFamily laplace(double mean, double scale);
  static MarginalFamily uniform(double low, double high);
  static MarginalFamily gaussian_mixture(std::vector<MixtureComponent> components);
  static MarginalFamily unbounded();

  bool is_unbounded() const;
  const char* kind_name() const;
  double mean() const;
  double variance() const;  // +inf for the unbounded marker
  double stddev() const;

  // Same shape, rescaled about its mean to the target variance.
  MarginalFamily scaled_to_variance(double target) const;
};

// Linear-mixing conditional noise N = c_x*X + c_z*Z + W with W independent of
// X and Z. This family realizes any feasible (rho_XN, rho_ZN) pair with exact
// analytic second moments while keeping the noise genuinely non-Gaussian and
// input-dependent.
struct NoiseModel {
  double c_x = 0.0;
  double c_z = 0.0;
  MarginalFamily innovation;
  // Permits Var(W) = 0 (e.g. the zero-noise scenario that produces the
  // infinite-rate sentinel).
  bool allow_degenerate = false;
};

// Full generative description of Y = H*X + Z + N.
struct ChannelScenario {
  GainDistribution gain;
  MarginalFamily interference;
  NoiseModel noise;
  double power = 1.0;  // sigma_X^2 budget, input drawn Gaussian(0, power)
  Domain domain = Domain::real_valued;
};

// Second-order statistics of (X, N) under the Gaussian input; the entire
// input to the closed-form bound.
struct SecondOrderStats {
  double sigma_x2 = 1.0;
  double sigma_n2 = 1.0;
  double rho_xn = 0.0;
  double rho_zn = 0.0;
};

enum class IssueCode {
  non_positive_power,
  bad_pmf,
  correlation_overflow,
  degenerate_innovation,
  unbounded_variance_misuse,
  bad_parameter,
};

struct Issue {
  IssueCode code;
  std::string field;  // dotted path into the scenario document
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

const char* issue_code_name(IssueCode code);

// Total: reports every violation and never throws on finite-real input.
ValidationReport validate(const ChannelScenario& s);

// Invariant checks for directly constructed stats (rho in (-1,1), rho-sum < 1, ...).
ValidationReport check_stats(const SecondOrderStats& stats);

// Exact closed-form moments of the linear-mixing noise under X ~ N(0, power),
// X independent of Z. Throws Error{validation_failed} when validate(s) fails.
SecondOrderStats moment_algebra(const ChannelScenario& s);

// Rebuilds the noise model of `tmpl` so that moment_algebra hits the given
// targets exactly (innovation keeps its shape, rescaled). Used by sweeps.
ChannelScenario with_target_stats(const ChannelScenario& tmpl, double sigma_x2,
                                  double sigma_n2, double rho_xn, double rho_zn);

const char* domain_name(Domain d);

}  // namespace dpc
