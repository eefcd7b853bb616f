#include "dpcbound/scenario.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dpc {

namespace {

constexpr double kPmfTolerance = 1e-9;

bool finite(double v) { return std::isfinite(v); }

std::string field_index(const std::string& base, std::size_t i, const char* leaf) {
  std::ostringstream os;
  os << base << "[" << i << "]." << leaf;
  return os.str();
}

}  // namespace

MarginalFamily MarginalFamily::gaussian(double mean, double sigma) {
  return MarginalFamily{Gaussian{mean, sigma}};
}

MarginalFamily MarginalFamily::laplace(double mean, double scale) {
  return MarginalFamily{Laplace{mean, scale}};
}

MarginalFamily MarginalFamily::uniform(double low, double high) {
  return MarginalFamily{Uniform{low, high}};
}

MarginalFamily MarginalFamily::gaussian_mixture(std::vector<MixtureComponent> components) {
  return MarginalFamily{GaussianMixture{std::move(components)}};
}

MarginalFamily MarginalFamily::unbounded() { return MarginalFamily{UnboundedVariance{}}; }

bool MarginalFamily::is_unbounded() const {
  return std::holds_alternative<UnboundedVariance>(law);
}

const char* MarginalFamily::kind_name() const {
  struct Visitor {
    const char* operator()(const Gaussian&) const { return "gaussian"; }
    const char* operator()(const Laplace&) const { return "laplace"; }
    const char* operator()(const Uniform&) const { return "uniform"; }
    const char* operator()(const GaussianMixture&) const { return "gaussian_mixture"; }
    const char* operator()(const UnboundedVariance&) const { return "unbounded_variance"; }
  };
  return std::visit(Visitor{}, law);
}

double MarginalFamily::mean() const {
  struct Visitor {
    double operator()(const Gaussian& g) const { return g.mean; }
    double operator()(const Laplace& l) const { return l.mean; }
    double operator()(const Uniform& u) const { return 0.5 * (u.low + u.high); }
    double operator()(const GaussianMixture& m) const {
      double mu = 0.0;
      for (const auto& c : m.components) mu += c.weight * c.mean;
      return mu;
    }
    double operator()(const UnboundedVariance&) const { return 0.0; }
  };
  return std::visit(Visitor{}, law);
}

double MarginalFamily::variance() const {
  struct Visitor {
    double operator()(const Gaussian& g) const { return g.sigma * g.sigma; }
    double operator()(const Laplace& l) const { return 2.0 * l.scale * l.scale; }
    double operator()(const Uniform& u) const {
      const double w = u.high - u.low;
      return w * w / 12.0;
    }
    double operator()(const GaussianMixture& m) const {
      double mu = 0.0;
      for (const auto& c : m.components) mu += c.weight * c.mean;
      double v = 0.0;
      for (const auto& c : m.components) {
        const double d = c.mean - mu;
        v += c.weight * (c.sigma * c.sigma + d * d);
      }
      return v;
    }
    double operator()(const UnboundedVariance&) const {
      return std::numeric_limits<double>::infinity();
    }
  };
  return std::visit(Visitor{}, law);
}

double MarginalFamily::stddev() const { return std::sqrt(variance()); }

MarginalFamily MarginalFamily::scaled_to_variance(double target) const {
  if (target < 0.0 || !finite(target))
    throw Error(Errc::precondition, "scaled_to_variance: target variance must be finite and >= 0");
  struct Visitor {
    double target;
    MarginalFamily operator()(const Gaussian& g) const {
      return MarginalFamily::gaussian(g.mean, std::sqrt(target));
    }
    MarginalFamily operator()(const Laplace& l) const {
      return MarginalFamily::laplace(l.mean, std::sqrt(target / 2.0));
    }
    MarginalFamily operator()(const Uniform& u) const {
      const double mid = 0.5 * (u.low + u.high);
      const double hw = std::sqrt(3.0 * target);
      return MarginalFamily::uniform(mid - hw, mid + hw);
    }
    MarginalFamily operator()(const GaussianMixture& m) const {
      const MarginalFamily self{m};
      const double current = self.variance();
      if (current <= 0.0)
        throw Error(Errc::precondition, "scaled_to_variance: mixture has zero variance");
      const double r = std::sqrt(target / current);
      const double mu = self.mean();
      std::vector<MixtureComponent> scaled = m.components;
      for (auto& c : scaled) {
        c.mean = mu + r * (c.mean - mu);
        c.sigma = r * c.sigma;
      }
      return MarginalFamily::gaussian_mixture(std::move(scaled));
    }
    MarginalFamily operator()(const UnboundedVariance&) const {
      throw Error(Errc::precondition, "scaled_to_variance: unbounded-variance family");
    }
  };
  return std::visit(Visitor{target}, law);
}

const char* issue_code_name(IssueCode code) {
  switch (code) {
    case IssueCode::non_positive_power: return "NonPositivePower";
    case IssueCode::bad_pmf: return "BadPmf";
    case IssueCode::correlation_overflow: return "CorrelationOverflow";
    case IssueCode::degenerate_innovation: return "DegenerateInnovation";
    case IssueCode::unbounded_variance_misuse: return "UnboundedVarianceMisuse";
    case IssueCode::bad_parameter: return "BadParameter";
  }
  return "?";
}

const char* domain_name(Domain d) {
  return d == Domain::real_valued ? "real" : "complex";
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << issue_code_name(issues[i].code) << " at " << issues[i].field << ": "
       << issues[i].message;
  }
  return os.str();
}

namespace {

void check_family(const MarginalFamily& f, const std::string& path, bool allow_unbounded,
                  std::vector<Issue>& out) {
  struct Visitor {
    const std::string& path;
    bool allow_unbounded;
    std::vector<Issue>& out;

    void bad(const char* leaf, const std::string& msg) const {
      out.push_back({IssueCode::bad_parameter, path + "." + leaf, msg});
    }
    void operator()(const Gaussian& g) const {
      if (!finite(g.mean)) bad("mean", "must be finite");
      if (!finite(g.sigma) || g.sigma < 0.0) bad("sigma", "must be finite and >= 0");
    }
    void operator()(const Laplace& l) const {
      if (!finite(l.mean)) bad("mean", "must be finite");
      if (!finite(l.scale) || l.scale < 0.0) bad("scale", "must be finite and >= 0");
    }
    void operator()(const Uniform& u) const {
      if (!finite(u.low) || !finite(u.high)) bad("low", "bounds must be finite");
      else if (u.low > u.high) bad("low", "low must not exceed high");
    }
    void operator()(const GaussianMixture& m) const {
      if (m.components.empty()) {
        bad("components", "mixture needs at least one component");
        return;
      }
      double wsum = 0.0;
      bool weights_ok = true;
      for (std::size_t i = 0; i < m.components.size(); ++i) {
        const auto& c = m.components[i];
        if (!finite(c.weight) || c.weight < 0.0) {
          out.push_back({IssueCode::bad_pmf, field_index(path + ".components", i, "weight"),
                         "must be finite and >= 0"});
          weights_ok = false;
        }
        if (!finite(c.mean))
          out.push_back({IssueCode::bad_parameter, field_index(path + ".components", i, "mean"),
                         "must be finite"});
        if (!finite(c.sigma) || c.sigma < 0.0)
          out.push_back({IssueCode::bad_parameter, field_index(path + ".components", i, "sigma"),
                         "must be finite and >= 0"});
        if (finite(c.weight)) wsum += c.weight;
      }
      if (weights_ok && std::abs(wsum - 1.0) > kPmfTolerance)
        out.push_back({IssueCode::bad_pmf, path + ".components",
                       "weights sum to " + std::to_string(wsum) + ", expected 1"});
    }
    void operator()(const UnboundedVariance&) const {
      if (!allow_unbounded)
        out.push_back({IssueCode::unbounded_variance_misuse, path,
                       "unbounded-variance marker is only allowed for the interference"});
    }
  };
  std::visit(Visitor{path, allow_unbounded, out}, f.law);
}

}  // namespace

ValidationReport validate(const ChannelScenario& s) {
  ValidationReport rep;
  auto& out = rep.issues;

  if (!finite(s.power) || s.power <= 0.0)
    out.push_back({IssueCode::non_positive_power, "power", "must be finite and > 0"});

  if (s.gain.atoms.empty()) {
    out.push_back({IssueCode::bad_pmf, "gain.atoms", "needs at least one atom"});
  } else {
    double psum = 0.0;
    bool pmf_ok = true;
    for (std::size_t i = 0; i < s.gain.atoms.size(); ++i) {
      const auto& a = s.gain.atoms[i];
      if (!finite(a.eta))
        out.push_back({IssueCode::bad_parameter, field_index("gain.atoms", i, "eta"),
                       "must be finite"});
      if (!finite(a.p) || a.p < 0.0) {
        out.push_back({IssueCode::bad_pmf, field_index("gain.atoms", i, "p"),
                       "must be finite and >= 0"});
        pmf_ok = false;
      } else {
        psum += a.p;
      }
    }
    if (pmf_ok && std::abs(psum - 1.0) > kPmfTolerance)
      out.push_back({IssueCode::bad_pmf, "gain.atoms",
                     "probabilities sum to " + std::to_string(psum) + ", expected 1"});
  }

  check_family(s.interference, "interference", /*allow_unbounded=*/true, out);
  check_family(s.noise.innovation, "noise.innovation", /*allow_unbounded=*/false, out);
  if (!finite(s.noise.c_x))
    out.push_back({IssueCode::bad_parameter, "noise.cx", "must be finite"});
  if (!finite(s.noise.c_z))
    out.push_back({IssueCode::bad_parameter, "noise.cz", "must be finite"});
  if (!rep.ok()) return rep;  // the moment checks below need sane parameters

  const double var_w = s.noise.innovation.variance();
  if (var_w == 0.0 && !s.noise.allow_degenerate)
    out.push_back({IssueCode::degenerate_innovation, "noise.innovation",
                   "innovation has zero variance (flag the scenario degenerate to allow)"});

  const double var_z = s.interference.variance();
  if (s.interference.is_unbounded() && s.noise.c_z != 0.0)
    out.push_back({IssueCode::unbounded_variance_misuse, "noise.cz",
                   "noise cannot load on unbounded-variance interference"});
  if (!s.interference.is_unbounded() && var_z == 0.0 && s.noise.c_z != 0.0)
    out.push_back({IssueCode::bad_parameter, "noise.cz",
                   "interference is degenerate (zero variance); cz must be 0"});

  // Correlation feasibility: with the linear-mixing model the rho^2-sum equals
  // (sx^2 + sz^2) / sigma_n^2, which reaches 1 only when Var(W) = 0.
  const double s_x = s.noise.c_x * std::sqrt(s.power);
  const double s_z = (s.interference.is_unbounded() || var_z == 0.0)
                         ? 0.0
                         : s.noise.c_z * std::sqrt(var_z);
  const double load2 = s_x * s_x + s_z * s_z;
  const double sigma_n2 = load2 + var_w;
  if (sigma_n2 > 0.0 && load2 >= sigma_n2)
    out.push_back({IssueCode::correlation_overflow, "noise",
                   "rho_xn^2 + rho_zn^2 >= 1; the bound denominator is non-positive"});

  return rep;
}

ValidationReport check_stats(const SecondOrderStats& st) {
  ValidationReport rep;
  auto& out = rep.issues;
  if (!finite(st.sigma_x2) || st.sigma_x2 <= 0.0)
    out.push_back({IssueCode::non_positive_power, "stats.sigma_x2", "must be finite and > 0"});
  if (!finite(st.sigma_n2) || st.sigma_n2 < 0.0)
    out.push_back({IssueCode::bad_parameter, "stats.sigma_n2", "must be finite and >= 0"});
  if (!finite(st.rho_xn) || std::abs(st.rho_xn) >= 1.0)
    out.push_back({IssueCode::bad_parameter, "stats.rho_xn", "must lie in (-1, 1)"});
  if (!finite(st.rho_zn) || std::abs(st.rho_zn) >= 1.0)
    out.push_back({IssueCode::bad_parameter, "stats.rho_zn", "must lie in (-1, 1)"});
  if (rep.ok()) {
    if (st.sigma_n2 == 0.0 && (st.rho_xn != 0.0 || st.rho_zn != 0.0))
      out.push_back({IssueCode::bad_parameter, "stats",
                     "zero noise variance requires zero correlations"});
    if (st.rho_xn * st.rho_xn + st.rho_zn * st.rho_zn >= 1.0)
      out.push_back({IssueCode::correlation_overflow, "stats",
                     "rho_xn^2 + rho_zn^2 >= 1"});
  }
  return rep;
}

SecondOrderStats moment_algebra(const ChannelScenario& s) {
  const ValidationReport rep = validate(s);
  if (!rep.ok())
    throw Error(Errc::validation_failed, "moment_algebra: " + rep.to_string());

  // Amplitude-domain products keep the interference-variance independence
  // exact: only c_z * sigma_z enters, never sigma_z alone.
  const double sigma_x = std::sqrt(s.power);
  const double var_z = s.interference.variance();
  const double s_x = s.noise.c_x * sigma_x;
  const double s_z = (s.interference.is_unbounded() || var_z == 0.0)
                         ? 0.0
                         : s.noise.c_z * std::sqrt(var_z);
  const double var_w = s.noise.innovation.variance();

  SecondOrderStats st;
  st.sigma_x2 = s.power;
  st.sigma_n2 = s_x * s_x + s_z * s_z + var_w;
  if (st.sigma_n2 > 0.0) {
    const double sigma_n = std::sqrt(st.sigma_n2);
    st.rho_xn = s_x / sigma_n;
    st.rho_zn = s_z / sigma_n;
  } else {
    st.rho_xn = 0.0;
    st.rho_zn = 0.0;
  }
  return st;
}

ChannelScenario with_target_stats(const ChannelScenario& tmpl, double sigma_x2,
                                  double sigma_n2, double rho_xn, double rho_zn) {
  if (!finite(sigma_x2) || sigma_x2 <= 0.0)
    throw Error(Errc::precondition, "with_target_stats: sigma_x2 must be > 0");
  if (!finite(sigma_n2) || sigma_n2 <= 0.0)
    throw Error(Errc::precondition, "with_target_stats: sigma_n2 must be > 0");
  const ValidationReport st_rep =
      check_stats(SecondOrderStats{sigma_x2, sigma_n2, rho_xn, rho_zn});
  if (!st_rep.ok())
    throw Error(Errc::precondition, "with_target_stats: " + st_rep.to_string());

  const double sigma_n = std::sqrt(sigma_n2);
  const double s_x = rho_xn * sigma_n;
  const double s_z = rho_zn * sigma_n;
  const double var_z = tmpl.interference.variance();

  ChannelScenario out = tmpl;
  out.power = sigma_x2;
  out.noise.c_x = s_x / std::sqrt(sigma_x2);
  if (s_z == 0.0) {
    out.noise.c_z = 0.0;
  } else {
    if (tmpl.interference.is_unbounded() || var_z <= 0.0)
      throw Error(Errc::precondition,
                  "with_target_stats: rho_zn != 0 needs finite positive interference variance");
    out.noise.c_z = s_z / std::sqrt(var_z);
  }
  const double var_w = sigma_n2 - s_x * s_x - s_z * s_z;
  if (var_w <= 0.0)
    throw Error(Errc::precondition, "with_target_stats: residual innovation variance <= 0");
  out.noise.innovation = tmpl.noise.innovation.scaled_to_variance(var_w);
  return out;
}

}  // namespace dpc
