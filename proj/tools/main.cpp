// Batch front end: parses scenario configs, dispatches the bound/lemma/verify/
// sweep commands and emits machine-readable CSV or JSON.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 I/O error.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpcbound/closed_form.hpp"
#include "dpcbound/entropy.hpp"
#include "dpcbound/lemma.hpp"
#include "dpcbound/oracle.hpp"
#include "dpcbound/sampling.hpp"
#include "dpcbound/scenario_io.hpp"
#include "dpcbound/version.hpp"

namespace {

using dpc::Errc;
using dpc::Error;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

// Shortest round-trip text for a double; locale-independent.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

struct CommonOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::size_t samples = 200000;
  std::string out;       // empty = stdout
  std::string format = "csv";
  std::string manifest;  // optional run-manifest path (includes wall clock)
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config, "scenario/config file (JSON)")->required();
  cmd->add_option("--seed", o.seed, "root seed (default 0)");
  cmd->add_option("--samples", o.samples, "Monte-Carlo sample count (default 200000)");
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", o.threads, "worker threads (default 1)");
  cmd->add_option("--manifest", o.manifest,
                  "write a run manifest (JSON, includes wall-clock) to this path");
}

void write_output(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(Errc::io, "cannot open output file: " + o.out);
  f << text;
  if (!f) throw Error(Errc::io, "write failed: " + o.out);
}

void write_manifest(const CommonOpts& o, const char* command, std::size_t rows,
                    double wall_ms) {
  if (o.manifest.empty()) return;
  json m = {{"command", command},     {"config", o.config}, {"seed", o.seed},
            {"samples", o.samples},   {"out", o.out},       {"version", dpc::kVersion},
            {"wall_clock_ms", wall_ms}, {"rows", rows}};
  std::ofstream f(o.manifest, std::ios::binary);
  if (!f) throw Error(Errc::io, "cannot open manifest file: " + o.manifest);
  f << m.dump(2) << "\n";
}

json result_header(const char* command, const CommonOpts& o) {
  return {{"command", command},
          {"version", dpc::kVersion},
          {"config", o.config},
          {"seed", o.seed},
          {"samples", o.samples}};
}

dpc::RunConfig load_validated(const CommonOpts& o, bool need_valid_scenario = true) {
  dpc::RunConfig cfg = dpc::load_config_file(o.config);
  if (need_valid_scenario) {
    const dpc::ValidationReport rep = dpc::validate(cfg.scenario);
    if (!rep.ok())
      throw Error(Errc::validation_failed, "scenario invalid: " + rep.to_string());
  }
  cfg.lemma.n_samples = o.samples;
  cfg.lemma.seed = dpc::Seed{o.seed};
  cfg.lemma.threads = o.threads;
  return cfg;
}

// ---------------------------------------------------------------------------
// bound: closed-form theorem/corollary rates, CSV method,eta,p,rate_bits,total_bits
// ---------------------------------------------------------------------------

int cmd_bound(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const dpc::RunConfig cfg = load_validated(o);
  const dpc::SecondOrderStats stats = dpc::moment_algebra(cfg.scenario);

  const dpc::BoundResult th =
      dpc::theorem1_bound(stats, cfg.scenario.gain, cfg.scenario.domain);
  const dpc::BoundResult co = dpc::corollary1_bound(stats.sigma_x2, stats.sigma_n2,
                                                    cfg.scenario.gain, cfg.scenario.domain);

  std::size_t rows = 0;
  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "method,eta,p,rate_bits,total_bits\n";
    for (const dpc::BoundResult* r : {&th, &co})
      for (const auto& g : r->per_gain) {
        os << dpc::method_name(r->method) << "," << fmt(g.eta) << "," << fmt(g.p) << ","
           << fmt(g.rate_bits) << "," << fmt(r->rate_bits) << "\n";
        ++rows;
      }
    text = os.str();
  } else {
    json out = result_header("bound", o);
    json results = json::array();
    for (const dpc::BoundResult* r : {&th, &co})
      for (const auto& g : r->per_gain) {
        results.push_back({{"method", dpc::method_name(r->method)},
                           {"eta", g.eta},
                           {"p", g.p},
                           {"rate_bits", g.rate_bits},
                           {"total_bits", r->rate_bits},
                           {"unbounded", r->unbounded}});
        ++rows;
      }
    out["results"] = std::move(results);
    text = out.dump(2) + "\n";
  }
  write_output(o, text);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
  write_manifest(o, "bound", rows, ms);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lemma: Monte-Carlo entropy bound side by side with the closed form
// ---------------------------------------------------------------------------

int cmd_lemma(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const dpc::RunConfig cfg = load_validated(o);
  const dpc::LemmaResult res = dpc::lemma_bound(cfg.scenario, cfg.lemma);

  std::size_t rows = 0;
  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "eta,p,alpha,beta,entropy_nats,stderr,rate_bits,total_bits,theorem_bits\n";
    for (const auto& a : res.atoms) {
      os << fmt(a.eta) << "," << fmt(a.p) << "," << fmt(a.alpha) << "," << fmt(a.beta)
         << "," << fmt(a.entropy_nats) << "," << fmt(a.entropy_stderr_nats) << ","
         << fmt(a.rate_bits) << "," << fmt(res.bound.rate_bits) << ","
         << fmt(a.theorem_bits) << "\n";
      ++rows;
    }
    text = os.str();
  } else {
    json out = result_header("lemma", o);
    json results = json::array();
    for (const auto& a : res.atoms) {
      results.push_back({{"eta", a.eta},
                         {"p", a.p},
                         {"alpha", a.alpha},
                         {"beta", a.beta},
                         {"entropy_nats", a.entropy_nats},
                         {"stderr_nats", a.entropy_stderr_nats},
                         {"rate_bits", a.rate_bits},
                         {"stderr_bits", a.stderr_bits},
                         {"theorem_bits", a.theorem_bits}});
      ++rows;
    }
    out["results"] = std::move(results);
    out["total_bits"] = res.bound.rate_bits;
    out["stderr_bits"] = res.bound.stderr_bits;
    text = out.dump(2) + "\n";
  }
  write_output(o, text);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
  write_manifest(o, "lemma", rows, ms);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep: long-format axis,value,method,total_bits,stderr_bits
// ---------------------------------------------------------------------------

int cmd_sweep(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const dpc::RunConfig cfg = load_validated(o);
  if (!cfg.sweep)
    throw Error(Errc::precondition, "config has no \"sweep\" section");

  const auto points =
      dpc::sweep(cfg.scenario, cfg.sweep->axis, cfg.sweep->values, cfg.lemma);
  const char* axis = dpc::sweep_axis_name(cfg.sweep->axis);
  auto value_text = [&](const dpc::SweepValue& v) {
    return cfg.sweep->axis == dpc::SweepAxis::family ? v.family : fmt(v.number);
  };

  std::size_t rows = 0;
  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "axis,value,method,total_bits,stderr_bits\n";
    for (const auto& pt : points) {
      if (!pt.error.empty()) {
        std::cerr << "sweep point " << value_text(pt.value) << " skipped: " << pt.error
                  << "\n";
        continue;
      }
      os << axis << "," << value_text(pt.value) << ",theorem1,"
         << fmt(pt.theorem->rate_bits) << ",0\n";
      os << axis << "," << value_text(pt.value) << ",lemma_mc,"
         << fmt(pt.lemma->bound.rate_bits) << "," << fmt(pt.lemma->bound.stderr_bits)
         << "\n";
      rows += 2;
    }
    text = os.str();
  } else {
    json out = result_header("sweep", o);
    out["axis"] = axis;
    json results = json::array();
    for (const auto& pt : points) {
      json p;
      p["value"] = cfg.sweep->axis == dpc::SweepAxis::family ? json(pt.value.family)
                                                             : json(pt.value.number);
      if (!pt.error.empty()) {
        p["error"] = pt.error;
      } else {
        p["theorem1_bits"] = pt.theorem->rate_bits;
        p["lemma_bits"] = pt.lemma->bound.rate_bits;
        p["lemma_stderr_bits"] = pt.lemma->bound.stderr_bits;
      }
      results.push_back(std::move(p));
      ++rows;
    }
    out["results"] = std::move(results);
    text = out.dump(2) + "\n";
  }
  write_output(o, text);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
  write_manifest(o, "sweep", rows, ms);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: oracle-equivalence and invariant suite on the given scenario
// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

void brute_q(double eta, double sigma_x2, double sigma_z2_eff, double sigma_ntilde2,
             double& q_out) {
  // Independent route: explicit quadratic, coarse grid then shrinking refine.
  auto q = [&](double a, double b) {
    const double u = 1.0 - b * eta;
    const double w = a - b;
    return u * u * sigma_x2 + w * w * sigma_z2_eff + b * b * sigma_ntilde2;
  };
  double ca = 0.0, cb = 0.0, ha = 3.0, hb = 3.0;
  double best = q(ca, cb);
  for (int round = 0; round < 14; ++round) {
    const int pts = round == 0 ? 61 : 21;
    double ba = ca, bb = cb;
    for (int i = 0; i < pts; ++i)
      for (int j = 0; j < pts; ++j) {
        const double a = ca - ha + 2.0 * ha * i / (pts - 1);
        const double b = cb - hb + 2.0 * hb * j / (pts - 1);
        const double v = q(a, b);
        if (v < best) {
          best = v;
          ba = a;
          bb = b;
        }
      }
    ca = ba;
    cb = bb;
    ha /= 5.0;
    hb /= 5.0;
  }
  q_out = best;
}

int cmd_verify(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  dpc::RunConfig cfg = dpc::load_config_file(o.config);
  std::vector<Check> checks;
  bool all_pass = true;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
    all_pass = all_pass && pass;
  };

  dpc::SecondOrderStats stats;
  bool have_stats = false;
  bool sampled_checks = !cfg.stats_override.has_value();

  if (cfg.stats_override) {
    const dpc::ValidationReport rep = dpc::check_stats(*cfg.stats_override);
    add("stats_override", rep.ok(), rep.ok() ? "" : rep.to_string());
    if (rep.ok()) {
      stats = *cfg.stats_override;
      have_stats = true;
    }
  } else {
    const dpc::ValidationReport rep = dpc::validate(cfg.scenario);
    add("validate", rep.ok(), rep.ok() ? "" : rep.to_string());
    if (rep.ok()) {
      stats = dpc::moment_algebra(cfg.scenario);
      have_stats = true;
    }
  }

  const auto& gain = cfg.scenario.gain;
  const dpc::Domain domain = cfg.scenario.domain;

  if (have_stats && stats.sigma_n2 == 0.0) {
    const dpc::BoundResult th = dpc::theorem1_bound(stats, gain, domain);
    add("zero_noise_sentinel", th.unbounded && std::isinf(th.rate_bits),
        "theorem1 bound is the distinguished infinite-rate result");
    sampled_checks = false;
    have_stats = false;  // nothing further to compare against
  }

  if (have_stats) {
    const dpc::BoundResult th = dpc::theorem1_bound(stats, gain, domain);

    {  // Gel'fand-Pinsker oracle on the jointly Gaussian twin, per gain atom.
      const double var_z = cfg.scenario.interference.is_unbounded()
                               ? 0.0
                               : cfg.scenario.interference.variance();
      dpc::GaussianJoint joint{stats.sigma_x2, var_z > 0.0 ? var_z : 1.0, stats.sigma_n2,
                               stats.rho_xn, stats.rho_zn};
      const double half = dpc::domain_half(domain);
      double worst = 0.0;
      for (const auto& g : th.per_gain) {
        const dpc::GpMax gp = dpc::gp_rate_max(joint, g.eta);
        worst = std::max(worst, std::abs(gp.rate_bits * (half / 0.5) - g.rate_bits));
      }
      add("theorem_vs_oracle", worst < 1e-6, "max |diff| = " + fmt(worst) + " bits");
    }

    {  // Corollary reduction at zeroed correlations.
      const dpc::SecondOrderStats zeroed{stats.sigma_x2, stats.sigma_n2, 0.0, 0.0};
      const dpc::BoundResult th0 = dpc::theorem1_bound(zeroed, gain, domain);
      const dpc::BoundResult co =
          dpc::corollary1_bound(stats.sigma_x2, stats.sigma_n2, gain, domain);
      double worst = 0.0;
      for (std::size_t i = 0; i < th0.per_gain.size(); ++i)
        worst = std::max(worst,
                         std::abs(th0.per_gain[i].rate_bits - co.per_gain[i].rate_bits));
      add("corollary_reduction", worst <= 1e-12, "max |diff| = " + fmt(worst) + " bits");
    }

    {  // Closed-form Q minimum vs brute-force grid, per atom.
      const double var_z = cfg.scenario.interference.is_unbounded()
                               ? 0.0
                               : cfg.scenario.interference.variance();
      double worst = 0.0;
      for (const auto& g : gain.atoms) {
        const dpc::VirtualChannel vc = dpc::virtual_channel(
            stats, g.eta, var_z > 0.0 ? std::optional<double>(var_z) : std::nullopt);
        const double wt = vc.w_tilde.value_or(0.0);
        const dpc::QMin m = dpc::q_min(vc.eta_tilde, stats.sigma_x2, vc.sigma_ntilde2);
        double brute = 0.0;
        brute_q(vc.eta_tilde, stats.sigma_x2, wt * wt * var_z, vc.sigma_ntilde2, brute);
        worst = std::max(worst, std::abs(brute - m.q) / m.q);
      }
      add("qmin_brute_force", worst < 1e-9, "max rel err = " + fmt(worst));
    }

    {  // Complex-domain factor is exactly 2.
      const dpc::BoundResult re = dpc::theorem1_bound(stats, gain, dpc::Domain::real_valued);
      const dpc::BoundResult cx =
          dpc::theorem1_bound(stats, gain, dpc::Domain::complex_valued);
      add("complex_factor", cx.rate_bits == 2.0 * re.rate_bits,
          "complex = " + fmt(cx.rate_bits) + ", real = " + fmt(re.rate_bits));
    }
  }

  if (sampled_checks && have_stats) {
    const dpc::Seed root = dpc::Seed{o.seed}.child(dpc::seed_tag::verify);
    const std::size_t n = o.samples;
    const double eta0 = gain.atoms.front().eta;
    const dpc::SampleBatch batch = dpc::draw(cfg.scenario, eta0, n, root.child(0));
    const double sqrt_n = std::sqrt(static_cast<double>(n));

    {  // Analytic moments against the empirical ones.
      const dpc::SecondOrderStats emp = dpc::empirical_stats(batch);
      auto var_se = [&](const std::vector<double>& col, double var) {
        double mean = 0.0;
        for (double v : col) mean += v;
        mean /= static_cast<double>(n);
        double m4 = 0.0;
        for (double v : col) {
          const double d2 = (v - mean) * (v - mean);
          m4 += d2 * d2;
        }
        m4 /= static_cast<double>(n);
        return std::sqrt(std::max(m4 - var * var, 0.0) / static_cast<double>(n));
      };
      const bool ok_x = std::abs(emp.sigma_x2 - stats.sigma_x2) <=
                        5.0 * var_se(batch.x, stats.sigma_x2);
      const bool ok_n = std::abs(emp.sigma_n2 - stats.sigma_n2) <=
                        5.0 * var_se(batch.noise, stats.sigma_n2);
      const bool ok_rx = std::abs(emp.rho_xn - stats.rho_xn) <= 4.0 / sqrt_n;
      const bool ok_rz = std::abs(emp.rho_zn - stats.rho_zn) <= 4.0 / sqrt_n;
      add("moments_vs_empirical", ok_x && ok_n && ok_rx && ok_rz,
          "drho_xn = " + fmt(emp.rho_xn - stats.rho_xn) +
              ", drho_zn = " + fmt(emp.rho_zn - stats.rho_zn));
    }

    {  // Decorrelated residual: uncorrelated with x and z, variance matches.
      const double var_z = cfg.scenario.interference.is_unbounded()
                               ? 0.0
                               : cfg.scenario.interference.variance();
      const auto res = dpc::residual_noise(batch, stats, std::sqrt(var_z));
      auto corr = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double ma = 0.0, mb = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          ma += a[i];
          mb += b[i];
        }
        ma /= static_cast<double>(n);
        mb /= static_cast<double>(n);
        double saa = 0.0, sbb = 0.0, sab = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          saa += (a[i] - ma) * (a[i] - ma);
          sbb += (b[i] - mb) * (b[i] - mb);
          sab += (a[i] - ma) * (b[i] - mb);
        }
        return sbb > 0.0 ? sab / std::sqrt(saa * sbb) : 0.0;
      };
      const double cx = corr(batch.x, res);
      const double cz = var_z > 0.0 ? corr(batch.z, res) : 0.0;
      const double snt2 =
          (1.0 - stats.rho_xn * stats.rho_xn - stats.rho_zn * stats.rho_zn) * stats.sigma_n2;
      double mean = 0.0;
      for (double v : res) mean += v;
      mean /= static_cast<double>(n);
      double s2 = 0.0, m4 = 0.0;
      for (double v : res) {
        const double d2 = (v - mean) * (v - mean);
        s2 += d2;
        m4 += d2 * d2;
      }
      s2 /= static_cast<double>(n - 1);
      m4 /= static_cast<double>(n);
      const double se = std::sqrt(std::max(m4 - s2 * s2, 0.0) / static_cast<double>(n));
      const bool ok = std::abs(cx) <= 4.0 / sqrt_n && std::abs(cz) <= 4.0 / sqrt_n &&
                      std::abs(s2 - snt2) <= 5.0 * se;
      add("decorrelation", ok,
          "corr(x,res) = " + fmt(cx) + ", corr(z,res) = " + fmt(cz) +
              ", var(res) - target = " + fmt(s2 - snt2));
    }

    {  // Same (scenario, seed, n) must reproduce every byte.
      const dpc::SampleBatch again = dpc::draw(cfg.scenario, eta0, n, root.child(0));
      const bool same =
          std::memcmp(batch.x.data(), again.x.data(), n * sizeof(double)) == 0 &&
          std::memcmp(batch.z.data(), again.z.data(), n * sizeof(double)) == 0 &&
          std::memcmp(batch.noise.data(), again.noise.data(), n * sizeof(double)) == 0 &&
          std::memcmp(batch.y.data(), again.y.data(), n * sizeof(double)) == 0;
      add("draw_determinism", same);
    }
  }

  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;

  std::string text;
  if (o.format == "json") {
    json out = result_header("verify", o);
    json rows = json::array();
    for (const auto& c : checks)
      rows.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["results"] = std::move(rows);
    out["pass"] = all_pass;
    text = out.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << "\n";
    }
    os << (all_pass ? "VERIFY: PASS" : "VERIFY: FAIL") << " (" << passed << "/"
       << checks.size() << " checks)\n";
    text = os.str();
  }
  write_output(o, text);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
  write_manifest(o, "verify", checks.size(), ms);
  return all_pass ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// samples: raw batch export for external auditing, CSV x,z,n,y
// ---------------------------------------------------------------------------

int cmd_samples(const CommonOpts& o, std::size_t atom) {
  const auto t0 = std::chrono::steady_clock::now();
  const dpc::RunConfig cfg = load_validated(o);
  if (atom >= cfg.scenario.gain.atoms.size())
    throw Error(Errc::precondition, "atom index out of range");

  const dpc::Seed seed =
      dpc::Seed{o.seed}.child(dpc::seed_tag::samples).child(atom).child(0);
  const dpc::SampleBatch b =
      dpc::draw(cfg.scenario, cfg.scenario.gain.atoms[atom].eta, o.samples, seed);

  std::ostringstream os;
  os << "x,z,n,y\n";
  for (std::size_t i = 0; i < b.size(); ++i)
    os << fmt(b.x[i]) << "," << fmt(b.z[i]) << "," << fmt(b.noise[i]) << ","
       << fmt(b.y[i]) << "\n";
  write_output(o, os.str());
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
  write_manifest(o, "samples", b.size(), ms);
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::io: return kExitIo;
    default: return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds on dirty-paper-coding rates under dependent, "
               "non-Gaussian noise and interference"};
  app.set_version_flag("--version", dpc::kVersion);
  app.require_subcommand(1);

  CommonOpts bound_opts, lemma_opts, verify_opts, sweep_opts, samples_opts;
  std::size_t atom_index = 0;

  CLI::App* bound = app.add_subcommand("bound", "closed-form rate bounds");
  add_common(bound, bound_opts);
  CLI::App* lemma = app.add_subcommand("lemma", "Monte-Carlo entropy bound");
  add_common(lemma, lemma_opts);
  CLI::App* verify = app.add_subcommand("verify", "run the cross-check suite");
  add_common(verify, verify_opts);
  CLI::App* sw = app.add_subcommand("sweep", "evaluate bounds along an axis");
  add_common(sw, sweep_opts);
  CLI::App* samples = app.add_subcommand("samples", "export a raw sample batch");
  add_common(samples, samples_opts);
  samples->add_option("--atom", atom_index, "gain-atom index (default 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed()) return cmd_bound(bound_opts);
    if (lemma->parsed()) return cmd_lemma(lemma_opts);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (sw->parsed()) return cmd_sweep(sweep_opts);
    if (samples->parsed()) return cmd_samples(samples_opts, atom_index);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
