#include "dpcbound/sampling.hpp"

#include <cmath>
#include <numbers>

namespace dpc {

namespace {

// Column stream labels under the per-batch seed.
constexpr std::uint64_t kColX = 1;
constexpr std::uint64_t kColZ = 2;
constexpr std::uint64_t kColW = 3;

// Each sample index owns four counter slots per column; every family draws
// from its own fixed slots, so per-family consumption differences cannot
// shift later samples.
constexpr std::uint64_t kSlots = 4;

double slot01(Seed key, std::size_t index, std::uint64_t t) {
  return counter_open01(key, kSlots * static_cast<std::uint64_t>(index) + t);
}

double standard_normal(Seed key, std::size_t index, std::uint64_t t0) {
  const double u0 = slot01(key, index, t0);
  const double u1 = slot01(key, index, t0 + 1);
  return std::sqrt(-2.0 * std::log(u0)) * std::cos(2.0 * std::numbers::pi * u1);
}

struct FamilySampler {
  const MarginalFamily& family;
  Seed key;

  double operator()(std::size_t i) const {
    struct Visitor {
      Seed key;
      std::size_t i;
      double operator()(const Gaussian& g) const {
        return g.mean + g.sigma * standard_normal(key, i, 0);
      }
      double operator()(const Laplace& l) const {
        const double u = slot01(key, i, 0) - 0.5;
        return l.mean - l.scale * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
      }
      double operator()(const Uniform& u) const {
        return u.low + (u.high - u.low) * slot01(key, i, 0);
      }
      double operator()(const GaussianMixture& m) const {
        const double u = slot01(key, i, 0);
        double acc = 0.0;
        std::size_t pick = m.components.size() - 1;
        for (std::size_t c = 0; c < m.components.size(); ++c) {
          acc += m.components[c].weight;
          if (u < acc) {
            pick = c;
            break;
          }
        }
        const auto& comp = m.components[pick];
        return comp.mean + comp.sigma * standard_normal(key, i, 1);
      }
      double operator()(const UnboundedVariance&) const {
        throw Error(Errc::unsupported_sampling, "unbounded-variance family has no sampler");
      }
    };
    return std::visit(Visitor{key, i}, family.law);
  }
};

}  // namespace

SampleBatch draw_range(const ChannelScenario& s, double eta, std::size_t offset,
                       std::size_t count, Seed seed) {
  const ValidationReport rep = validate(s);
  if (!rep.ok()) throw Error(Errc::validation_failed, "draw: " + rep.to_string());
  if (s.domain == Domain::complex_valued)
    throw Error(Errc::unsupported_sampling,
                "complex-domain sampling is not supported; use the closed-form methods");
  if (s.interference.is_unbounded())
    throw Error(Errc::unsupported_sampling,
                "interference is marked unbounded-variance; it cannot be sampled");
  if (count < 1) throw Error(Errc::precondition, "draw: need at least one sample");

  const double sigma_x = std::sqrt(s.power);
  const Seed kx = seed.child(kColX);
  const FamilySampler draw_z{s.interference, seed.child(kColZ)};
  const FamilySampler draw_w{s.noise.innovation, seed.child(kColW)};

  SampleBatch b;
  b.eta = eta;
  b.x.resize(count);
  b.z.resize(count);
  b.noise.resize(count);
  b.y.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pos = offset + i;
    const double x = sigma_x * standard_normal(kx, pos, 0);
    const double z = draw_z(pos);
    const double w = draw_w(pos);
    const double noise = s.noise.c_x * x + s.noise.c_z * z + w;
    b.x[i] = x;
    b.z[i] = z;
    b.noise[i] = noise;
    b.y[i] = eta * x + z + noise;
  }
  return b;
}

SampleBatch draw(const ChannelScenario& s, double eta, std::size_t n, Seed seed) {
  return draw_range(s, eta, 0, n, seed);
}

SecondOrderStats empirical_stats(const SampleBatch& b) {
  const std::size_t n = b.size();
  if (n < 2) throw Error(Errc::precondition, "empirical_stats: need n >= 2");

  auto mean_of = [n](const std::vector<double>& v) {
    double m = 0.0;
    for (double e : v) m += e;
    return m / static_cast<double>(n);
  };
  const double mx = mean_of(b.x);
  const double mz = mean_of(b.z);
  const double mn = mean_of(b.noise);

  double sxx = 0.0, szz = 0.0, snn = 0.0, sxn = 0.0, szn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = b.x[i] - mx;
    const double dz = b.z[i] - mz;
    const double dn = b.noise[i] - mn;
    sxx += dx * dx;
    szz += dz * dz;
    snn += dn * dn;
    sxn += dx * dn;
    szn += dz * dn;
  }
  const double denom = static_cast<double>(n - 1);
  const double var_x = sxx / denom;
  const double var_z = szz / denom;
  const double var_n = snn / denom;
  if (var_x <= 0.0)
    throw Error(Errc::degenerate_column, "empirical_stats: x column has zero variance");
  if (var_n <= 0.0)
    throw Error(Errc::degenerate_column, "empirical_stats: noise column has zero variance");

  SecondOrderStats st;
  st.sigma_x2 = var_x;
  st.sigma_n2 = var_n;
  st.rho_xn = (sxn / denom) / std::sqrt(var_x * var_n);
  st.rho_zn = var_z > 0.0 ? (szn / denom) / std::sqrt(var_z * var_n) : 0.0;

  constexpr double kRhoCeiling = 1.0 - 1e-12;
  if (std::abs(st.rho_xn) >= kRhoCeiling)
    throw Error(Errc::degenerate_column,
                "empirical_stats: noise column is (near) perfectly correlated with x");
  if (std::abs(st.rho_zn) >= kRhoCeiling)
    throw Error(Errc::degenerate_column,
                "empirical_stats: noise column is (near) perfectly correlated with z");
  if (st.rho_xn * st.rho_xn + st.rho_zn * st.rho_zn >= 1.0)
    throw Error(Errc::degenerate_column,
                "empirical_stats: rho_xn^2 + rho_zn^2 >= 1; columns are degenerate");
  return st;
}

std::vector<double> residual_noise(const SampleBatch& b, const SecondOrderStats& stats,
                                   double sigma_z) {
  const double sigma_n = std::sqrt(stats.sigma_n2);
  const double sigma_x = std::sqrt(stats.sigma_x2);
  const double gx = stats.rho_xn * (sigma_n / sigma_x);
  const double gz = sigma_z > 0.0 ? stats.rho_zn * (sigma_n / sigma_z) : 0.0;

  std::vector<double> r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] = b.noise[i] - gx * b.x[i] - gz * b.z[i];
  return r;
}

}  // namespace dpc
