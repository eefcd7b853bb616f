#include "dpcbound/scenario_io.hpp"

#include <fstream>

namespace dpc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(Errc::parse, path + ": " + what);
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing required field");
  return *it;
}

double num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double num_field(const json& j, const std::string& path, const char* key) {
  return num(member(j, path, key), path + "." + key);
}

double num_or(const json& j, const std::string& path, const char* key, double fallback) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return num(*it, path + "." + key);
}

std::string str_field(const json& j, const std::string& path, const char* key) {
  const json& v = member(j, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

MarginalFamily family_from_json(const json& j, const std::string& path) {
  const std::string kind = str_field(j, path, "family");
  if (kind == "gaussian")
    return MarginalFamily::gaussian(num_or(j, path, "mean", 0.0),
                                    num_field(j, path, "sigma"));
  if (kind == "laplace")
    return MarginalFamily::laplace(num_or(j, path, "mean", 0.0),
                                   num_field(j, path, "scale"));
  if (kind == "uniform")
    return MarginalFamily::uniform(num_field(j, path, "low"), num_field(j, path, "high"));
  if (kind == "gaussian_mixture") {
    const json& comps = member(j, path, "components");
    if (!comps.is_array() || comps.empty())
      fail(path + ".components", "expected a non-empty array");
    std::vector<MixtureComponent> components;
    components.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string cp = path + ".components[" + std::to_string(i) + "]";
      components.push_back({num_field(comps[i], cp, "weight"),
                            num_or(comps[i], cp, "mean", 0.0),
                            num_field(comps[i], cp, "sigma")});
    }
    return MarginalFamily::gaussian_mixture(std::move(components));
  }
  if (kind == "unbounded_variance") return MarginalFamily::unbounded();
  fail(path + ".family", "unknown family '" + kind + "'");
}

json family_to_json(const MarginalFamily& f) {
  struct Visitor {
    json operator()(const Gaussian& g) const {
      return {{"family", "gaussian"}, {"mean", g.mean}, {"sigma", g.sigma}};
    }
    json operator()(const Laplace& l) const {
      return {{"family", "laplace"}, {"mean", l.mean}, {"scale", l.scale}};
    }
    json operator()(const Uniform& u) const {
      return {{"family", "uniform"}, {"low", u.low}, {"high", u.high}};
    }
    json operator()(const GaussianMixture& m) const {
      json comps = json::array();
      for (const auto& c : m.components)
        comps.push_back({{"weight", c.weight}, {"mean", c.mean}, {"sigma", c.sigma}});
      return {{"family", "gaussian_mixture"}, {"components", comps}};
    }
    json operator()(const UnboundedVariance&) const {
      return {{"family", "unbounded_variance"}};
    }
  };
  return std::visit(Visitor{}, f.law);
}

ChannelScenario scenario_from_json(const json& j) {
  ChannelScenario s;

  const json& gain = member(j, "", "gain");
  const json& atoms = member(gain, "gain", "atoms");
  if (!atoms.is_array() || atoms.empty()) fail("gain.atoms", "expected a non-empty array");
  s.gain.atoms.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string ap = "gain.atoms[" + std::to_string(i) + "]";
    s.gain.atoms.push_back({num_field(atoms[i], ap, "eta"), num_field(atoms[i], ap, "p")});
  }

  s.interference = family_from_json(member(j, "", "interference"), "interference");

  const json& noise = member(j, "", "noise");
  s.noise.c_x = num_or(noise, "noise", "cx", 0.0);
  s.noise.c_z = num_or(noise, "noise", "cz", 0.0);
  s.noise.innovation = family_from_json(member(noise, "noise", "innovation"),
                                        "noise.innovation");
  if (auto it = noise.find("allow_degenerate"); it != noise.end()) {
    if (!it->is_boolean()) fail("noise.allow_degenerate", "expected a boolean");
    s.noise.allow_degenerate = it->get<bool>();
  }

  s.power = num_field(j, "", "power");

  const std::string domain = str_field(j, "", "domain");
  if (domain == "real")
    s.domain = Domain::real_valued;
  else if (domain == "complex")
    s.domain = Domain::complex_valued;
  else
    fail("domain", "expected \"real\" or \"complex\"");

  return s;
}

json scenario_to_json(const ChannelScenario& s) {
  json atoms = json::array();
  for (const auto& a : s.gain.atoms) atoms.push_back({{"eta", a.eta}, {"p", a.p}});
  json noise = {{"cx", s.noise.c_x},
                {"cz", s.noise.c_z},
                {"innovation", family_to_json(s.noise.innovation)}};
  if (s.noise.allow_degenerate) noise["allow_degenerate"] = true;
  return {{"gain", {{"atoms", atoms}}},
          {"interference", family_to_json(s.interference)},
          {"noise", noise},
          {"power", s.power},
          {"domain", domain_name(s.domain)}};
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  cfg.scenario = scenario_from_json(j);

  if (auto it = j.find("stats_override"); it != j.end()) {
    const std::string p = "stats_override";
    cfg.stats_override = SecondOrderStats{
        num_field(*it, p, "sigma_x2"), num_field(*it, p, "sigma_n2"),
        num_field(*it, p, "rho_xn"), num_field(*it, p, "rho_zn")};
  }

  if (auto it = j.find("lemma"); it != j.end()) {
    const json& l = *it;
    const std::string p = "lemma";
    if (!l.is_object()) fail(p, "expected an object");
    if (auto f = l.find("alpha_policy"); f != l.end()) {
      const std::string v = f->is_string() ? f->get<std::string>() : std::string();
      if (v == "tied_to_beta")
        cfg.lemma.alpha_policy = AlphaPolicy::tied_to_beta;
      else if (v == "free")
        cfg.lemma.alpha_policy = AlphaPolicy::free_alpha;
      else
        fail(p + ".alpha_policy", "expected \"tied_to_beta\" or \"free\"");
    }
    cfg.lemma.k = static_cast<std::size_t>(num_or(l, p, "k", 4.0));
    cfg.lemma.refine_grid = static_cast<std::size_t>(num_or(l, p, "refine_grid", 21.0));
    cfg.lemma.refine_span = num_or(l, p, "refine_span", 0.2);
  }

  if (auto it = j.find("sweep"); it != j.end()) {
    const json& sw = *it;
    const std::string p = "sweep";
    SweepSpec spec;
    const std::string axis = str_field(sw, p, "axis");
    if (axis == "rho_zn")
      spec.axis = SweepAxis::rho_zn;
    else if (axis == "rho_xn")
      spec.axis = SweepAxis::rho_xn;
    else if (axis == "snr_db")
      spec.axis = SweepAxis::snr_db;
    else if (axis == "family")
      spec.axis = SweepAxis::family;
    else
      fail(p + ".axis", "expected rho_zn, rho_xn, snr_db or family");

    const json& values = member(sw, p, "values");
    if (!values.is_array()) fail(p + ".values", "expected an array");
    for (std::size_t i = 0; i < values.size(); ++i) {
      const json& v = values[i];
      SweepValue sv;
      if (spec.axis == SweepAxis::family) {
        if (!v.is_string())
          fail(p + ".values[" + std::to_string(i) + "]", "expected a family name");
        sv.family = v.get<std::string>();
      } else {
        sv.number = num(v, p + ".values[" + std::to_string(i) + "]");
      }
      spec.values.push_back(std::move(sv));
    }
    cfg.sweep = std::move(spec);
  }

  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse, std::string("config parse error: ") + e.what());
  }
  return config_from_json(j);
}

}  // namespace dpc
