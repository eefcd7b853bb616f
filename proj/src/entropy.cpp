#include "dpcbound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace dpc {

double digamma(double x) {
  // Recurrence into the asymptotic region, then the standard series.
  double acc = 0.0;
  while (x < 6.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return acc + std::log(x) - 0.5 * inv -
         inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
}

EntropyEstimate gaussian_entropy(double variance) {
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw Error(Errc::precondition, "gaussian_entropy: variance must be finite and > 0");
  EntropyEstimate e;
  e.nats = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * variance);
  e.stderr_nats = 0.0;
  e.estimator = Estimator::gaussian_closed_form;
  return e;
}

namespace {

constexpr double kMinDistance = 1e-300;  // clamp for duplicate samples

struct Moments {
  double mean;
  double sd;  // ddof = 1
};

Moments sample_moments(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  double m = 0.0;
  for (double e : v) m += e;
  m /= n;
  double ss = 0.0;
  for (double e : v) {
    const double d = e - m;
    ss += d * d;
  }
  return {m, std::sqrt(ss / (n - 1.0))};
}

// Core estimate on one subsample; standardizes, sorts, and scans the k-th
// neighbor distance through the contiguous-window identity (the k nearest
// neighbors of a point in sorted order form a window around it).
double knn_nats(std::span<const double> samples, std::size_t k) {
  const std::size_t n = samples.size();
  const auto [mean, sd] = sample_moments(samples);
  if (!(sd > 0.0) || !std::isfinite(sd))
    throw Error(Errc::degenerate_sample, "estimate_knn: samples have zero variance");

  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = (samples[i] - mean) / sd;
  std::sort(z.begin(), z.end());

  double logsum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = i, hi = i;
    for (std::size_t picked = 0; picked < k; ++picked) {
      const double dl = lo > 0 ? z[i] - z[lo - 1] : std::numeric_limits<double>::infinity();
      const double dr = hi + 1 < n ? z[hi + 1] - z[i] : std::numeric_limits<double>::infinity();
      if (dl <= dr)
        --lo;
      else
        ++hi;
    }
    const double r = std::max(z[i] - z[lo], z[hi] - z[i]);
    logsum += std::log(std::max(2.0 * r, kMinDistance));
  }
  const double nd = static_cast<double>(n);
  return digamma(nd) - digamma(static_cast<double>(k)) + logsum / nd + std::log(sd);
}

double hist_nats(std::span<const double> samples, std::size_t bins) {
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo))
    throw Error(Errc::degenerate_sample, "estimate_histogram: samples have zero range");

  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (double v : samples) {
    auto b = static_cast<std::size_t>((v - lo) / width);
    if (b >= bins) b = bins - 1;  // v == hi lands here
    ++counts[b];
  }
  const double n = static_cast<double>(samples.size());
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return h + std::log(width);
}

// 10-fold subsample spread; fold counts shrink for tiny inputs so each fold
// stays usable.
template <typename Core>
double fold_stderr(std::span<const double> samples, std::size_t min_fold, Core core) {
  std::size_t folds = 10;
  while (folds > 2 && samples.size() / folds < min_fold) folds /= 2;
  const std::size_t m = samples.size() / folds;
  std::vector<double> est(folds);
  for (std::size_t f = 0; f < folds; ++f)
    est[f] = core(samples.subspan(f * m, m));
  const auto [mean, sd] = sample_moments(est);
  (void)mean;
  return sd / std::sqrt(static_cast<double>(folds));
}

}  // namespace

EntropyEstimate estimate_knn(std::span<const double> samples, std::size_t k) {
  if (samples.size() < 50)
    throw Error(Errc::precondition, "estimate_knn: need at least 50 samples");
  if (k < 1 || k > 32)
    throw Error(Errc::precondition, "estimate_knn: k must lie in [1, 32]");

  EntropyEstimate e;
  e.nats = knn_nats(samples, k);
  e.stderr_nats = fold_stderr(samples, k + 2,
                              [k](std::span<const double> s) { return knn_nats(s, k); });
  e.estimator = Estimator::knn;
  e.n = samples.size();
  e.k_or_bins = k;
  return e;
}

EntropyEstimate estimate_histogram(std::span<const double> samples, std::size_t bins) {
  if (bins < 1) throw Error(Errc::precondition, "estimate_histogram: need at least one bin");
  if (samples.size() < 10 * bins)
    throw Error(Errc::precondition, "estimate_histogram: need n >= 10*bins");

  EntropyEstimate e;
  e.nats = hist_nats(samples, bins);
  e.stderr_nats = fold_stderr(samples, std::max<std::size_t>(bins, 10),
                              [bins](std::span<const double> s) { return hist_nats(s, bins); });
  e.estimator = Estimator::histogram;
  e.n = samples.size();
  e.k_or_bins = bins;
  return e;
}

}  // namespace dpc
