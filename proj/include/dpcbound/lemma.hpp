#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpcbound/closed_form.hpp"
#include "dpcbound/sampling.hpp"

namespace dpc {

// alpha = beta zeroes the explicit interference term of the objective, so the
// bound can be evaluated without knowing the interference law; free alpha
// searches the full plane.
enum class AlphaPolicy { tied_to_beta, free_alpha };

struct LemmaConfig {
  std::size_t n_samples = 200000;
  std::size_t k = 4;  // nearest-neighbor order for the entropy estimate
  AlphaPolicy alpha_policy = AlphaPolicy::tied_to_beta;
  std::size_t refine_grid = 21;  // points per axis, odd >= 3
  double refine_span = 0.2;      // relative half-width around the warm start, (0, 1]
  Seed seed;
  int threads = 1;
};

struct LemmaAtom {
  double eta = 0.0;
  double p = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double entropy_nats = 0.0;
  double entropy_stderr_nats = 0.0;
  double rate_bits = 0.0;    // clamped at 0
  double stderr_bits = 0.0;
  double theorem_bits = 0.0;  // closed-form term for side-by-side comparison
};

struct LemmaResult {
  BoundResult bound;  // method = lemma_mc
  std::vector<LemmaAtom> atoms;
};

// Objective v[i] = (1 - beta*eta)*x[i] + (alpha - beta)*z[i] - beta*noise[i].
std::vector<double> objective_samples(const SampleBatch& b, double alpha, double beta);

// Monte-Carlo evaluation of the entropy-difference lower bound per gain atom:
//   rate = [h(X) - min over searched (alpha,beta) of h_knn(objective)] / ln 2.
// The search starts from the closed-form warm start on the virtual channel and
// scores a local grid by the entropy estimate, tie-breaking toward smaller
// |beta|; negative per-atom rates clamp to 0.
LemmaResult lemma_bound(const ChannelScenario& s, const LemmaConfig& cfg);

enum class SweepAxis { rho_zn, rho_xn, snr_db, family };

const char* sweep_axis_name(SweepAxis axis);

// Numeric for rho/snr axes, a family name for the family axis.
struct SweepValue {
  double number = 0.0;
  std::string family;
};

struct SweepPoint {
  SweepValue value;
  std::optional<LemmaResult> lemma;
  std::optional<BoundResult> theorem;
  std::string error;  // empty when the point evaluated cleanly
};

// One (lemma, theorem) pair per axis value, in declaration order, each point
// seeded from (cfg.seed, point index) so results are scheduler-independent.
std::vector<SweepPoint> sweep(const ChannelScenario& tmpl, SweepAxis axis,
                              const std::vector<SweepValue>& values,
                              const LemmaConfig& cfg);

}  // namespace dpc
