#pragma once

#include <cstddef>
#include <span>

#include "dpcbound/error.hpp"

namespace dpc {

enum class Estimator { knn, histogram, gaussian_closed_form };

struct EntropyEstimate {
  double nats = 0.0;
  double stderr_nats = 0.0;  // 0 only for the closed form
  Estimator estimator = Estimator::gaussian_closed_form;
  std::size_t n = 0;
  std::size_t k_or_bins = 0;
};

// 1/2 ln(2*pi*e*variance), exact.
EntropyEstimate gaussian_entropy(double variance);

// Kozachenko-Leonenko nearest-neighbor estimator for scalar samples:
//   h = psi(n) - psi(k) + mean ln(2 r_k(i))
// computed on variance-standardized samples with ln(scale) added back.
// Neighbor distances come from a sorted two-pointer scan; stderr from the
// spread of 10 disjoint subsample estimates.
EntropyEstimate estimate_knn(std::span<const double> samples, std::size_t k = 4);

// Plug-in histogram estimate sum -p ln(p/width) over occupied bins.
EntropyEstimate estimate_histogram(std::span<const double> samples, std::size_t bins);

double digamma(double x);

}  // namespace dpc
