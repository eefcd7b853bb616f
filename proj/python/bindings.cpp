#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "dpcbound/closed_form.hpp"
#include "dpcbound/entropy.hpp"
#include "dpcbound/lemma.hpp"
#include "dpcbound/oracle.hpp"
#include "dpcbound/sampling.hpp"
#include "dpcbound/scenario_io.hpp"
#include "dpcbound/version.hpp"

namespace py = pybind11;

namespace {

dpc::ChannelScenario scenario_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw dpc::Error(dpc::Errc::parse, e.what());
  }
  return dpc::scenario_from_json(j);
}

std::string scenario_to_string(const dpc::ChannelScenario& s) {
  return dpc::scenario_to_json(s).dump(2);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lower bounds on dirty-paper-coding rates for additive channels "
            "with dependent, non-Gaussian noise and interference";
  m.attr("__version__") = dpc::kVersion;

  py::register_exception<dpc::Error>(m, "DpcError");

  py::enum_<dpc::Domain>(m, "Domain")
      .value("real", dpc::Domain::real_valued)
      .value("complex", dpc::Domain::complex_valued);
  py::enum_<dpc::Method>(m, "Method")
      .value("theorem1", dpc::Method::theorem1)
      .value("corollary1", dpc::Method::corollary1)
      .value("lemma_mc", dpc::Method::lemma_mc)
      .value("oracle", dpc::Method::oracle);
  py::enum_<dpc::AlphaPolicy>(m, "AlphaPolicy")
      .value("tied_to_beta", dpc::AlphaPolicy::tied_to_beta)
      .value("free", dpc::AlphaPolicy::free_alpha);
  py::enum_<dpc::Estimator>(m, "Estimator")
      .value("knn", dpc::Estimator::knn)
      .value("histogram", dpc::Estimator::histogram)
      .value("gaussian_closed_form", dpc::Estimator::gaussian_closed_form);
  py::enum_<dpc::SweepAxis>(m, "SweepAxis")
      .value("rho_zn", dpc::SweepAxis::rho_zn)
      .value("rho_xn", dpc::SweepAxis::rho_xn)
      .value("snr_db", dpc::SweepAxis::snr_db)
      .value("family", dpc::SweepAxis::family);

  py::class_<dpc::Seed>(m, "Seed")
      .def(py::init<>())
      .def(py::init([](std::uint64_t root) { return dpc::Seed{root}; }), py::arg("root"))
      .def_readwrite("root", &dpc::Seed::root)
      .def("child", &dpc::Seed::child, py::arg("label"));

  py::class_<dpc::GainAtom>(m, "GainAtom")
      .def(py::init([](double eta, double p) { return dpc::GainAtom{eta, p}; }),
           py::arg("eta"), py::arg("p"))
      .def_readwrite("eta", &dpc::GainAtom::eta)
      .def_readwrite("p", &dpc::GainAtom::p);

  py::class_<dpc::GainDistribution>(m, "GainDistribution")
      .def(py::init([](const std::vector<std::pair<double, double>>& atoms) {
             dpc::GainDistribution g;
             for (const auto& [eta, p] : atoms) g.atoms.push_back({eta, p});
             return g;
           }),
           py::arg("atoms"))
      .def_readwrite("atoms", &dpc::GainDistribution::atoms);

  py::class_<dpc::SecondOrderStats>(m, "SecondOrderStats")
      .def(py::init<>())
      .def(py::init([](double sx2, double sn2, double rxn, double rzn) {
             return dpc::SecondOrderStats{sx2, sn2, rxn, rzn};
           }),
           py::arg("sigma_x2"), py::arg("sigma_n2"), py::arg("rho_xn"), py::arg("rho_zn"))
      .def_readwrite("sigma_x2", &dpc::SecondOrderStats::sigma_x2)
      .def_readwrite("sigma_n2", &dpc::SecondOrderStats::sigma_n2)
      .def_readwrite("rho_xn", &dpc::SecondOrderStats::rho_xn)
      .def_readwrite("rho_zn", &dpc::SecondOrderStats::rho_zn);

  py::class_<dpc::ChannelScenario>(m, "ChannelScenario")
      .def_static("from_json", &scenario_from_string, py::arg("text"))
      .def("to_json", &scenario_to_string)
      .def_property_readonly("power", [](const dpc::ChannelScenario& s) { return s.power; })
      .def_property_readonly("domain", [](const dpc::ChannelScenario& s) { return s.domain; });

  py::class_<dpc::Issue>(m, "Issue")
      .def_property_readonly("code",
                             [](const dpc::Issue& i) { return dpc::issue_code_name(i.code); })
      .def_readonly("field", &dpc::Issue::field)
      .def_readonly("message", &dpc::Issue::message);

  py::class_<dpc::ValidationReport>(m, "ValidationReport")
      .def("ok", &dpc::ValidationReport::ok)
      .def("__str__", &dpc::ValidationReport::to_string)
      .def_readonly("issues", &dpc::ValidationReport::issues);

  py::class_<dpc::VirtualChannel>(m, "VirtualChannel")
      .def_readonly("eta_tilde", &dpc::VirtualChannel::eta_tilde)
      .def_readonly("w_tilde", &dpc::VirtualChannel::w_tilde)
      .def_readonly("sigma_ntilde2", &dpc::VirtualChannel::sigma_ntilde2);

  py::class_<dpc::PerGainRate>(m, "PerGainRate")
      .def_readonly("eta", &dpc::PerGainRate::eta)
      .def_readonly("p", &dpc::PerGainRate::p)
      .def_readonly("rate_bits", &dpc::PerGainRate::rate_bits);

  py::class_<dpc::BoundResult>(m, "BoundResult")
      .def_readonly("method", &dpc::BoundResult::method)
      .def_readonly("domain", &dpc::BoundResult::domain)
      .def_readonly("unbounded", &dpc::BoundResult::unbounded)
      .def_readonly("rate_bits", &dpc::BoundResult::rate_bits)
      .def_readonly("stderr_bits", &dpc::BoundResult::stderr_bits)
      .def_readonly("per_gain", &dpc::BoundResult::per_gain);

  py::class_<dpc::SampleBatch>(m, "SampleBatch")
      .def_readonly("eta", &dpc::SampleBatch::eta)
      .def_readonly("x", &dpc::SampleBatch::x)
      .def_readonly("z", &dpc::SampleBatch::z)
      .def_readonly("noise", &dpc::SampleBatch::noise)
      .def_readonly("y", &dpc::SampleBatch::y)
      .def("__len__", &dpc::SampleBatch::size);

  py::class_<dpc::EntropyEstimate>(m, "EntropyEstimate")
      .def_readonly("nats", &dpc::EntropyEstimate::nats)
      .def_readonly("stderr_nats", &dpc::EntropyEstimate::stderr_nats)
      .def_readonly("estimator", &dpc::EntropyEstimate::estimator)
      .def_readonly("n", &dpc::EntropyEstimate::n)
      .def_readonly("k_or_bins", &dpc::EntropyEstimate::k_or_bins);

  py::class_<dpc::GaussianJoint>(m, "GaussianJoint")
      .def(py::init([](double sx2, double sz2, double sn2, double rxn, double rzn) {
             return dpc::GaussianJoint{sx2, sz2, sn2, rxn, rzn};
           }),
           py::arg("sigma_x2"), py::arg("sigma_z2"), py::arg("sigma_n2"),
           py::arg("rho_xn") = 0.0, py::arg("rho_zn") = 0.0)
      .def_readwrite("sigma_x2", &dpc::GaussianJoint::sigma_x2)
      .def_readwrite("sigma_z2", &dpc::GaussianJoint::sigma_z2)
      .def_readwrite("sigma_n2", &dpc::GaussianJoint::sigma_n2)
      .def_readwrite("rho_xn", &dpc::GaussianJoint::rho_xn)
      .def_readwrite("rho_zn", &dpc::GaussianJoint::rho_zn);

  py::class_<dpc::GpMax>(m, "GpMax")
      .def_readonly("rate_bits", &dpc::GpMax::rate_bits)
      .def_readonly("alpha_star", &dpc::GpMax::alpha_star);

  py::class_<dpc::LemmaConfig>(m, "LemmaConfig")
      .def(py::init<>())
      .def_readwrite("n_samples", &dpc::LemmaConfig::n_samples)
      .def_readwrite("k", &dpc::LemmaConfig::k)
      .def_readwrite("alpha_policy", &dpc::LemmaConfig::alpha_policy)
      .def_readwrite("refine_grid", &dpc::LemmaConfig::refine_grid)
      .def_readwrite("refine_span", &dpc::LemmaConfig::refine_span)
      .def_readwrite("seed", &dpc::LemmaConfig::seed)
      .def_readwrite("threads", &dpc::LemmaConfig::threads);

  py::class_<dpc::LemmaAtom>(m, "LemmaAtom")
      .def_readonly("eta", &dpc::LemmaAtom::eta)
      .def_readonly("p", &dpc::LemmaAtom::p)
      .def_readonly("alpha", &dpc::LemmaAtom::alpha)
      .def_readonly("beta", &dpc::LemmaAtom::beta)
      .def_readonly("entropy_nats", &dpc::LemmaAtom::entropy_nats)
      .def_readonly("entropy_stderr_nats", &dpc::LemmaAtom::entropy_stderr_nats)
      .def_readonly("rate_bits", &dpc::LemmaAtom::rate_bits)
      .def_readonly("stderr_bits", &dpc::LemmaAtom::stderr_bits)
      .def_readonly("theorem_bits", &dpc::LemmaAtom::theorem_bits);

  py::class_<dpc::LemmaResult>(m, "LemmaResult")
      .def_readonly("bound", &dpc::LemmaResult::bound)
      .def_readonly("atoms", &dpc::LemmaResult::atoms);

  py::class_<dpc::SweepValue>(m, "SweepValue")
      .def(py::init([](double number) { return dpc::SweepValue{number, {}}; }),
           py::arg("number"))
      .def(py::init([](const std::string& family) { return dpc::SweepValue{0.0, family}; }),
           py::arg("family"))
      .def_readonly("number", &dpc::SweepValue::number)
      .def_readonly("family", &dpc::SweepValue::family);

  py::class_<dpc::SweepPoint>(m, "SweepPoint")
      .def_readonly("value", &dpc::SweepPoint::value)
      .def_readonly("lemma", &dpc::SweepPoint::lemma)
      .def_readonly("theorem", &dpc::SweepPoint::theorem)
      .def_readonly("error", &dpc::SweepPoint::error);

  m.def("validate", &dpc::validate, py::arg("scenario"));
  m.def("moment_algebra", &dpc::moment_algebra, py::arg("scenario"));
  m.def("check_stats", &dpc::check_stats, py::arg("stats"));
  m.def("virtual_channel", &dpc::virtual_channel, py::arg("stats"), py::arg("eta"),
        py::arg("sigma_z2") = std::nullopt);
  m.def("theorem1_bound", &dpc::theorem1_bound, py::arg("stats"), py::arg("gain"),
        py::arg("domain"));
  m.def("corollary1_bound", &dpc::corollary1_bound, py::arg("sigma_x2"), py::arg("sigma_n2"),
        py::arg("gain"), py::arg("domain"));
  m.def("theorem1_bound_for",
        [](const dpc::ChannelScenario& s) {
          return dpc::theorem1_bound(dpc::moment_algebra(s), s.gain, s.domain);
        },
        py::arg("scenario"));
  m.def("corollary1_bound_for",
        [](const dpc::ChannelScenario& s) {
          const auto st = dpc::moment_algebra(s);
          return dpc::corollary1_bound(st.sigma_x2, st.sigma_n2, s.gain, s.domain);
        },
        py::arg("scenario"));
  m.def("beta_star", &dpc::beta_star, py::arg("eta_tilde"), py::arg("sigma_x2"),
        py::arg("sigma_ntilde2"));
  m.def("q_form", &dpc::q_form, py::arg("alpha"), py::arg("beta"), py::arg("eta"),
        py::arg("sigma_x2"), py::arg("sigma_z2_eff"), py::arg("sigma_ntilde2"));
  m.def("q_min",
        [](double eta, double sx2, double snt2) {
          const auto q = dpc::q_min(eta, sx2, snt2);
          return std::make_pair(q.q, q.beta);
        },
        py::arg("eta"), py::arg("sigma_x2"), py::arg("sigma_ntilde2"));
  m.def("draw", &dpc::draw, py::arg("scenario"), py::arg("eta"), py::arg("n"),
        py::arg("seed"));
  m.def("empirical_stats", &dpc::empirical_stats, py::arg("batch"));
  m.def("residual_noise", &dpc::residual_noise, py::arg("batch"), py::arg("stats"),
        py::arg("sigma_z"));
  m.def("gaussian_entropy", &dpc::gaussian_entropy, py::arg("variance"));
  m.def("estimate_knn",
        [](const std::vector<double>& v, std::size_t k) { return dpc::estimate_knn(v, k); },
        py::arg("samples"), py::arg("k") = 4);
  m.def("estimate_histogram",
        [](const std::vector<double>& v, std::size_t bins) {
          return dpc::estimate_histogram(v, bins);
        },
        py::arg("samples"), py::arg("bins"));
  m.def("gp_rate", &dpc::gp_rate, py::arg("joint"), py::arg("eta"), py::arg("alpha"));
  m.def("gp_rate_max", &dpc::gp_rate_max, py::arg("joint"), py::arg("eta"));
  m.def("objective_samples", &dpc::objective_samples, py::arg("batch"), py::arg("alpha"),
        py::arg("beta"));
  m.def("lemma_bound", &dpc::lemma_bound, py::arg("scenario"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep", &dpc::sweep, py::arg("scenario"), py::arg("axis"), py::arg("values"),
        py::arg("config"), py::call_guard<py::gil_scoped_release>());
}
