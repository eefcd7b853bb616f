#pragma once

#include <cstddef>
#include <vector>

#include "dpcbound/rng.hpp"
#include "dpcbound/scenario.hpp"

namespace dpc {

// One Monte-Carlo batch conditioned on a fixed gain atom.
// Invariant: y[i] = eta*x[i] + z[i] + noise[i] at machine precision.
struct SampleBatch {
  double eta = 1.0;
  std::vector<double> x;
  std::vector<double> z;
  std::vector<double> noise;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
};

// iid draw of (X, Z, N, Y) rows with X ~ Gaussian(0, power) independent of Z.
// Every sample is a pure function of (scenario, eta, seed, sample index), so
// (scenario, seed, n) determines every output byte regardless of chunking.
SampleBatch draw(const ChannelScenario& s, double eta, std::size_t n, Seed seed);

// Positional slice [offset, offset+count) of the batch draw(s, eta, *, seed)
// would produce; concatenating slices in index order reproduces it exactly.
SampleBatch draw_range(const ChannelScenario& s, double eta, std::size_t offset,
                       std::size_t count, Seed seed);

// Unbiased variances and centered-product correlations from a batch.
SecondOrderStats empirical_stats(const SampleBatch& b);

// Decorrelated residual Nt_i = noise_i - rho_xn*(sn/sx)*x_i - rho_zn*(sn/sz)*z_i.
std::vector<double> residual_noise(const SampleBatch& b, const SecondOrderStats& stats,
                                   double sigma_z);

}  // namespace dpc
