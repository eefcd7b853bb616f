#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dpcbound/lemma.hpp"
#include "dpcbound/scenario.hpp"

namespace dpc {

// Scenario/config document (JSON):
//   {
//     "gain":         {"atoms": [{"eta": 1.0, "p": 1.0}]},
//     "interference": {"family": "gaussian", "mean": 0.0, "sigma": 1.0},
//     "noise":        {"cx": 0.0, "cz": 0.0,
//                      "innovation": {"family": "gaussian", "mean": 0.0, "sigma": 1.0}},
//     "power":        1.0,
//     "domain":       "real",
//     "stats_override": {...},   // optional, verify only
//     "lemma":        {...},     // optional lemma options
//     "sweep":        {"axis": "rho_zn", "values": [0.0, 0.3, 0.6]}
//   }
// Families: gaussian{mean,sigma}, laplace{mean,scale}, uniform{low,high},
// gaussian_mixture{components:[{weight,mean,sigma}]}, unbounded_variance{}.
// Parse failures throw Error{parse} naming the offending field path.

struct SweepSpec {
  SweepAxis axis = SweepAxis::rho_zn;
  std::vector<SweepValue> values;
};

struct RunConfig {
  ChannelScenario scenario;
  std::optional<SecondOrderStats> stats_override;
  LemmaConfig lemma;  // seed/n_samples/threads filled in by the caller
  std::optional<SweepSpec> sweep;
};

MarginalFamily family_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json family_to_json(const MarginalFamily& f);

ChannelScenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ChannelScenario& s);

RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);

}  // namespace dpc
