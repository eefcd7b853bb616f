#include "dpcbound/closed_form.hpp"

#include <cmath>
#include <limits>

namespace dpc {

const char* method_name(Method m) {
  switch (m) {
    case Method::theorem1: return "theorem1";
    case Method::corollary1: return "corollary1";
    case Method::lemma_mc: return "lemma_mc";
    case Method::oracle: return "oracle";
  }
  return "?";
}

double domain_half(Domain d) { return d == Domain::real_valued ? 0.5 : 1.0; }

namespace {

void require_stats(const SecondOrderStats& stats) {
  const ValidationReport rep = check_stats(stats);
  if (!rep.ok()) throw Error(Errc::precondition, rep.to_string());
}

void require_gain(const GainDistribution& gain) {
  if (gain.atoms.empty())
    throw Error(Errc::precondition, "gain distribution has no atoms");
}

BoundResult unbounded_result(Method method, Domain domain, const GainDistribution& gain) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  BoundResult r;
  r.method = method;
  r.domain = domain;
  r.unbounded = true;
  r.rate_bits = inf;
  r.per_gain.reserve(gain.atoms.size());
  for (const auto& a : gain.atoms) r.per_gain.push_back({a.eta, a.p, inf});
  return r;
}

}  // namespace

VirtualChannel virtual_channel(const SecondOrderStats& stats, double eta,
                               std::optional<double> sigma_z2) {
  require_stats(stats);
  const double sigma_n = std::sqrt(stats.sigma_n2);
  const double sigma_x = std::sqrt(stats.sigma_x2);

  VirtualChannel vc;
  vc.eta_tilde = eta + stats.rho_xn * (sigma_n / sigma_x);
  if (sigma_z2 && *sigma_z2 > 0.0)
    vc.w_tilde = 1.0 + stats.rho_zn * (sigma_n / std::sqrt(*sigma_z2));
  vc.sigma_ntilde2 =
      (1.0 - stats.rho_xn * stats.rho_xn - stats.rho_zn * stats.rho_zn) * stats.sigma_n2;
  return vc;
}

BoundResult theorem1_bound(const SecondOrderStats& stats, const GainDistribution& gain,
                           Domain domain) {
  require_stats(stats);
  require_gain(gain);
  if (stats.sigma_n2 == 0.0) return unbounded_result(Method::theorem1, domain, gain);

  const double half = domain_half(domain);
  BoundResult r;
  r.method = Method::theorem1;
  r.domain = domain;
  r.per_gain.reserve(gain.atoms.size());
  double total = 0.0;
  for (const auto& a : gain.atoms) {
    const VirtualChannel vc = virtual_channel(stats, a.eta);
    const double ratio = (vc.eta_tilde * vc.eta_tilde) * (stats.sigma_x2 / vc.sigma_ntilde2);
    const double term = half * std::log2(1.0 + ratio);
    r.per_gain.push_back({a.eta, a.p, term});
    total += a.p * term;
  }
  r.rate_bits = total;
  return r;
}

BoundResult corollary1_bound(double sigma_x2, double sigma_n2,
                             const GainDistribution& gain, Domain domain) {
  if (!(sigma_x2 > 0.0) || !std::isfinite(sigma_x2))
    throw Error(Errc::precondition, "corollary1_bound: sigma_x2 must be finite and > 0");
  if (!(sigma_n2 >= 0.0) || !std::isfinite(sigma_n2))
    throw Error(Errc::precondition, "corollary1_bound: sigma_n2 must be finite and >= 0");
  require_gain(gain);
  if (sigma_n2 == 0.0) return unbounded_result(Method::corollary1, domain, gain);

  const double half = domain_half(domain);
  BoundResult r;
  r.method = Method::corollary1;
  r.domain = domain;
  r.per_gain.reserve(gain.atoms.size());
  double total = 0.0;
  for (const auto& a : gain.atoms) {
    const double ratio = (a.eta * a.eta) * (sigma_x2 / sigma_n2);
    const double term = half * std::log2(1.0 + ratio);
    r.per_gain.push_back({a.eta, a.p, term});
    total += a.p * term;
  }
  r.rate_bits = total;
  return r;
}

double beta_star(double eta_tilde, double sigma_x2, double sigma_ntilde2) {
  if (!(sigma_ntilde2 > 0.0))
    throw Error(Errc::precondition, "beta_star: sigma_ntilde2 must be > 0");
  return eta_tilde * sigma_x2 / (eta_tilde * eta_tilde * sigma_x2 + sigma_ntilde2);
}

double q_form(double alpha, double beta, double eta, double sigma_x2,
              double sigma_z2_eff, double sigma_ntilde2) {
  const double a = 1.0 - beta * eta;
  const double b = alpha - beta;
  return a * a * sigma_x2 + b * b * sigma_z2_eff + beta * beta * sigma_ntilde2;
}

QMin q_min(double eta, double sigma_x2, double sigma_ntilde2) {
  if (!(sigma_ntilde2 > 0.0))
    throw Error(Errc::precondition, "q_min: sigma_ntilde2 must be > 0");
  QMin m;
  m.beta = beta_star(eta, sigma_x2, sigma_ntilde2);
  m.q = sigma_ntilde2 * sigma_x2 / (eta * eta * sigma_x2 + sigma_ntilde2);
  return m;
}

}  // namespace dpc
