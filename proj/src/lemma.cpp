#include "dpcbound/lemma.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numbers>

#include "dpcbound/entropy.hpp"

namespace dpc {

const char* sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::rho_zn: return "rho_zn";
    case SweepAxis::rho_xn: return "rho_xn";
    case SweepAxis::snr_db: return "snr_db";
    case SweepAxis::family: return "family";
  }
  return "?";
}

std::vector<double> objective_samples(const SampleBatch& b, double alpha, double beta) {
  const double cx = 1.0 - beta * b.eta;
  const double cz = alpha - beta;
  std::vector<double> v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    v[i] = cx * b.x[i] + cz * b.z[i] - beta * b.noise[i];
  return v;
}

namespace {

struct Candidate {
  double alpha;
  double beta;
};

std::vector<double> axis_grid(double center, double half_width, std::size_t points) {
  if (half_width <= 0.0 || points == 1) return {center};
  std::vector<double> g(points);
  const double step = 2.0 * half_width / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    g[i] = center - half_width + step * static_cast<double>(i);
  return g;
}

void push_unique(std::vector<Candidate>& c, double alpha, double beta) {
  for (const auto& e : c)
    if (e.alpha == alpha && e.beta == beta) return;
  c.push_back({alpha, beta});
}

// Candidate (alpha, beta) set: a local grid around the second-moment warm
// start. The tied alpha = beta warm-start point and the exact variance
// minimizer (beta0 * Wt, beta0) are always included, so the searched minimum
// never does worse than either.
std::vector<Candidate> build_candidates(const LemmaConfig& cfg, double beta0, double w_tilde,
                                        bool has_interference) {
  const double hw_beta = cfg.refine_span * std::abs(beta0);
  const std::vector<double> betas = axis_grid(beta0, hw_beta, cfg.refine_grid);

  std::vector<Candidate> out;
  if (cfg.alpha_policy == AlphaPolicy::tied_to_beta || !has_interference) {
    out.reserve(betas.size() + 1);
    for (double b : betas) push_unique(out, b, b);
  } else {
    const double alpha0 = beta0 * w_tilde;
    const std::vector<double> alphas =
        axis_grid(alpha0, cfg.refine_span * std::abs(alpha0), cfg.refine_grid);
    out.reserve(alphas.size() * betas.size() + 2);
    for (double b : betas)
      for (double a : alphas) push_unique(out, a, b);
    push_unique(out, alpha0, beta0);
  }
  push_unique(out, beta0, beta0);
  return out;
}

struct Scored {
  EntropyEstimate entropy;
  Candidate point;
};

// Smaller entropy wins; ties go to the candidate closer to passive scaling.
bool better(const Scored& a, const Scored& b) {
  if (a.entropy.nats != b.entropy.nats) return a.entropy.nats < b.entropy.nats;
  if (std::abs(a.point.beta) != std::abs(b.point.beta))
    return std::abs(a.point.beta) < std::abs(b.point.beta);
  return std::abs(a.point.alpha) < std::abs(b.point.alpha);
}

Scored search_candidates(const SampleBatch& batch, const std::vector<Candidate>& candidates,
                         const LemmaConfig& cfg) {
  std::vector<Scored> scored(candidates.size());
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto v = objective_samples(batch, candidates[i].alpha, candidates[i].beta);
      scored[i] = {estimate_knn(v, cfg.k), candidates[i]};
    }
  } else {
    std::vector<std::future<void>> jobs;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
      jobs.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1)) {
          const auto v = objective_samples(batch, candidates[i].alpha, candidates[i].beta);
          scored[i] = {estimate_knn(v, cfg.k), candidates[i]};
        }
      }));
    for (auto& j : jobs) j.get();
  }
  // Reduction in candidate order: independent of scheduling.
  std::size_t best = 0;
  for (std::size_t i = 1; i < scored.size(); ++i)
    if (better(scored[i], scored[best])) best = i;
  return scored[best];
}

void require_config(const LemmaConfig& cfg) {
  if (cfg.refine_grid < 3 || cfg.refine_grid % 2 == 0)
    throw Error(Errc::precondition, "lemma: refine_grid must be odd and >= 3");
  if (!(cfg.refine_span > 0.0) || cfg.refine_span > 1.0)
    throw Error(Errc::precondition, "lemma: refine_span must lie in (0, 1]");
  if (cfg.n_samples < 50)
    throw Error(Errc::precondition, "lemma: n_samples must be at least 50");
}

}  // namespace

LemmaResult lemma_bound(const ChannelScenario& s, const LemmaConfig& cfg) {
  require_config(cfg);
  const ValidationReport rep = validate(s);
  if (!rep.ok()) throw Error(Errc::validation_failed, "lemma_bound: " + rep.to_string());

  const SecondOrderStats stats = moment_algebra(s);
  if (stats.sigma_n2 == 0.0)
    throw Error(Errc::precondition,
                "lemma_bound: zero noise variance; the closed-form bound is infinite");

  const BoundResult theorem = theorem1_bound(stats, s.gain, s.domain);
  const double sigma_z2 = s.interference.is_unbounded() ? 0.0 : s.interference.variance();
  const bool has_interference = sigma_z2 > 0.0;
  const EntropyEstimate h_input = gaussian_entropy(stats.sigma_x2);
  const Seed root = cfg.seed.child(seed_tag::lemma);

  LemmaResult res;
  res.bound.method = Method::lemma_mc;
  res.bound.domain = s.domain;
  res.atoms.reserve(s.gain.atoms.size());

  double total = 0.0;
  double var_sum = 0.0;
  for (std::size_t ai = 0; ai < s.gain.atoms.size(); ++ai) {
    const GainAtom atom = s.gain.atoms[ai];
    const SampleBatch batch = draw(s, atom.eta, cfg.n_samples, root.child(ai));

    const VirtualChannel vc = virtual_channel(
        stats, atom.eta, has_interference ? std::optional<double>(sigma_z2) : std::nullopt);
    const double beta0 = beta_star(vc.eta_tilde, stats.sigma_x2, vc.sigma_ntilde2);
    const auto candidates =
        build_candidates(cfg, beta0, vc.w_tilde.value_or(1.0), has_interference);
    const Scored best = search_candidates(batch, candidates, cfg);

    LemmaAtom la;
    la.eta = atom.eta;
    la.p = atom.p;
    la.alpha = best.point.alpha;
    la.beta = best.point.beta;
    la.entropy_nats = best.entropy.nats;
    la.entropy_stderr_nats = best.entropy.stderr_nats;
    const double rate = (h_input.nats - best.entropy.nats) / std::numbers::ln2;
    la.rate_bits = std::max(0.0, rate);
    la.stderr_bits = best.entropy.stderr_nats / std::numbers::ln2;
    la.theorem_bits = theorem.per_gain[ai].rate_bits;
    res.atoms.push_back(la);

    res.bound.per_gain.push_back({atom.eta, atom.p, la.rate_bits});
    total += atom.p * la.rate_bits;
    var_sum += (atom.p * la.stderr_bits) * (atom.p * la.stderr_bits);
  }
  res.bound.rate_bits = total;
  res.bound.stderr_bits = std::sqrt(var_sum);
  return res;
}

namespace {

ChannelScenario scenario_for_value(const ChannelScenario& tmpl, const SecondOrderStats& base,
                                   SweepAxis axis, const SweepValue& v) {
  switch (axis) {
    case SweepAxis::rho_zn:
      return with_target_stats(tmpl, base.sigma_x2, base.sigma_n2, base.rho_xn, v.number);
    case SweepAxis::rho_xn:
      return with_target_stats(tmpl, base.sigma_x2, base.sigma_n2, v.number, base.rho_zn);
    case SweepAxis::snr_db:
      return with_target_stats(tmpl, base.sigma_n2 * std::pow(10.0, v.number / 10.0),
                               base.sigma_n2, base.rho_xn, base.rho_zn);
    case SweepAxis::family: {
      ChannelScenario out = tmpl;
      const double var_w = tmpl.noise.innovation.variance();
      if (v.family == "gaussian") {
        out.noise.innovation = MarginalFamily::gaussian(0.0, std::sqrt(var_w));
      } else if (v.family == "laplace") {
        out.noise.innovation = MarginalFamily::laplace(0.0, std::sqrt(var_w / 2.0));
      } else if (v.family == "uniform") {
        const double hw = std::sqrt(3.0 * var_w);
        out.noise.innovation = MarginalFamily::uniform(-hw, hw);
      } else if (v.family == "gaussian_mixture") {
        const double c = std::sqrt(var_w / 2.0);
        out.noise.innovation = MarginalFamily::gaussian_mixture(
            {{0.5, -c, c}, {0.5, c, c}});
      } else {
        throw Error(Errc::precondition, "sweep: unknown family '" + v.family + "'");
      }
      return out;
    }
  }
  throw Error(Errc::precondition, "sweep: unknown axis");
}

}  // namespace

std::vector<SweepPoint> sweep(const ChannelScenario& tmpl, SweepAxis axis,
                              const std::vector<SweepValue>& values, const LemmaConfig& cfg) {
  require_config(cfg);
  const ValidationReport rep = validate(tmpl);
  if (!rep.ok()) throw Error(Errc::validation_failed, "sweep: " + rep.to_string());
  const SecondOrderStats base = moment_algebra(tmpl);

  std::vector<SweepPoint> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    SweepPoint pt;
    pt.value = values[i];
    try {
      const ChannelScenario s = scenario_for_value(tmpl, base, axis, values[i]);
      const SecondOrderStats stats = moment_algebra(s);
      pt.theorem = theorem1_bound(stats, s.gain, s.domain);
      LemmaConfig point_cfg = cfg;
      point_cfg.seed = cfg.seed.child(seed_tag::sweep).child(i);
      pt.lemma = lemma_bound(s, point_cfg);
    } catch (const Error& e) {
      pt.error = e.what();
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace dpc
