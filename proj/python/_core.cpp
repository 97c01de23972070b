// Python bindings for the secure-ia library: channel generation, the three
// transceiver designs, rate/diagnostic metrics and the sweep harness.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "secia/harness.hpp"

namespace py = pybind11;
using namespace secia;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Interference-alignment transceiver designs for a multiuser MIMO "
            "network observed by a multi-antenna eavesdropper";

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init([](int K, int M, int N, int Ne, int d, double Pt, double sigma2) {
             SystemConfig c;
             c.K = K;
             c.M = M;
             c.N = N;
             c.Ne = Ne;
             c.d = d;
             c.Pt = Pt;
             c.sigma2 = sigma2;
             c.validate();
             return c;
           }),
           py::arg("K") = 3, py::arg("M") = 9, py::arg("N") = 9, py::arg("Ne") = 6,
           py::arg("d") = 3, py::arg("Pt") = 1.0, py::arg("sigma2") = 1.0)
      .def_readwrite("K", &SystemConfig::K)
      .def_readwrite("M", &SystemConfig::M)
      .def_readwrite("N", &SystemConfig::N)
      .def_readwrite("Ne", &SystemConfig::Ne)
      .def_readwrite("d", &SystemConfig::d)
      .def_readwrite("Pt", &SystemConfig::Pt)
      .def_readwrite("sigma2", &SystemConfig::sigma2)
      .def("validate", &SystemConfig::validate)
      .def("with_power", &SystemConfig::with_power, py::arg("pt"))
      .def("with_ne", &SystemConfig::with_ne, py::arg("ne"))
      .def("__repr__", [](const SystemConfig& c) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "SystemConfig(K=%d, M=%d, N=%d, Ne=%d, d=%d, Pt=%g, sigma2=%g)", c.K,
                      c.M, c.N, c.Ne, c.d, c.Pt, c.sigma2);
        return std::string(buf);
      });

  py::enum_<Scheme>(m, "Scheme")
      .value("conventional", Scheme::conventional)
      .value("wslm", Scheme::wslm)
      .value("zfws", Scheme::zfws);
  m.def("scheme_name", &scheme_name, py::arg("scheme"));
  m.def("scheme_from_name", &scheme_from_name, py::arg("name"));

  py::enum_<Termination>(m, "Termination")
      .value("converged", Termination::converged)
      .value("stagnated", Termination::stagnated)
      .value("max_iterations", Termination::max_iterations);

  py::class_<IAOptions>(m, "IAOptions")
      .def(py::init([](int kappa_max, double eps_leakage, double eps_delta,
                       std::uint64_t init_seed) {
             IAOptions o;
             o.kappa_max = kappa_max;
             o.eps_leakage = eps_leakage;
             o.eps_delta = eps_delta;
             o.init_seed = init_seed;
             o.validate();
             return o;
           }),
           py::arg("kappa_max") = 500, py::arg("eps_leakage") = 1e-10,
           py::arg("eps_delta") = 1e-14, py::arg("init_seed") = 1)
      .def_readwrite("kappa_max", &IAOptions::kappa_max)
      .def_readwrite("eps_leakage", &IAOptions::eps_leakage)
      .def_readwrite("eps_delta", &IAOptions::eps_delta)
      .def_readwrite("init_seed", &IAOptions::init_seed)
      .def("validate", &IAOptions::validate);

  py::class_<ChannelDims>(m, "ChannelDims")
      .def_readonly("K", &ChannelDims::K)
      .def_readonly("M", &ChannelDims::M)
      .def_readonly("N", &ChannelDims::N)
      .def_readonly("Ne", &ChannelDims::Ne)
      .def_readonly("d", &ChannelDims::d);

  py::class_<ChannelSet>(m, "ChannelSet",
                         "All channel matrices of one realization; receiver index K is "
                         "the eavesdropper")
      .def(py::init<ChannelDims, std::uint64_t, std::vector<CMatrix>>(), py::arg("dims"),
           py::arg("seed"), py::arg("matrices"))
      .def("H", &ChannelSet::H, py::arg("k"), py::arg("l"))
      .def("eaves", &ChannelSet::eaves, py::arg("l"))
      .def_property_readonly("dims", &ChannelSet::dims)
      .def_property_readonly("seed", &ChannelSet::seed);

  m.def("snr_to_power", &snr_to_power, py::arg("snr_db"), py::arg("sigma2"));
  m.def("trial_seed", &trial_seed, py::arg("master_seed"), py::arg("trial_index"));
  m.def("draw_channels", &draw_channels, py::arg("config"), py::arg("seed"));
  m.def("write_channel_dump", &write_channel_dump, py::arg("channels"), py::arg("path"));
  m.def("read_channel_dump", &read_channel_dump, py::arg("path"));

  py::class_<Orthonormal>(m, "Orthonormal")
      .def(py::init<CMatrix, double>(), py::arg("basis"), py::arg("tol") = kOrthoTol)
      .def_property_readonly("matrix",
                             [](const Orthonormal& o) -> CMatrix { return o.matrix(); })
      .def_property_readonly("rows", &Orthonormal::rows)
      .def_property_readonly("cols", &Orthonormal::cols)
      .def("projector", &Orthonormal::projector);

  py::class_<IATrace>(m, "IATrace")
      .def_readonly("leakage", &IATrace::leakage)
      .def_readonly("termination", &IATrace::termination)
      .def_property_readonly("iterations", &IATrace::iterations);

  py::class_<IASolution>(m, "IASolution")
      .def_readonly("scheme", &IASolution::scheme)
      .def_readonly("F", &IASolution::F)
      .def_readonly("U", &IASolution::U)
      .def_readonly("U_e", &IASolution::U_e)
      .def_readonly("Delta", &IASolution::Delta)
      .def_readonly("P", &IASolution::P);

  py::class_<LeakageReport>(m, "LeakageReport")
      .def_readonly("J", &LeakageReport::J)
      .def_readonly("J1", &LeakageReport::J1)
      .def_readonly("J2", &LeakageReport::J2);

  m.def("evaluate_leakage", &evaluate_leakage, py::arg("scheme"), py::arg("channels"),
        py::arg("sol"));
  m.def("conventional_ia", &conventional_ia, py::arg("channels"), py::arg("config"),
        py::arg("opts") = IAOptions{});
  m.def("wslm_ia", &wslm_ia, py::arg("channels"), py::arg("config"),
        py::arg("opts") = IAOptions{});
  m.def("zfws_ia", &zfws_ia, py::arg("channels"), py::arg("config"),
        py::arg("opts") = IAOptions{});
  m.def("null_space_precoder_basis", &null_space_precoder_basis, py::arg("He"),
        py::arg("d"));

  py::class_<WslmFeasibility>(m, "WslmFeasibility")
      .def_readonly("feasible", &WslmFeasibility::feasible)
      .def_readonly("Neq", &WslmFeasibility::Neq)
      .def_readonly("Nv", &WslmFeasibility::Nv);
  py::class_<ZfwsFeasibility>(m, "ZfwsFeasibility")
      .def_readonly("feasible", &ZfwsFeasibility::feasible)
      .def_readonly("antenna_ok", &ZfwsFeasibility::antenna_ok)
      .def_readonly("subspace_ok", &ZfwsFeasibility::subspace_ok);
  m.def("wslm_feasible", &wslm_feasible, py::arg("config"));
  m.def("zfws_feasible", &zfws_feasible, py::arg("config"));

  py::class_<RateReport>(m, "RateReport")
      .def_readonly("R", &RateReport::R)
      .def_readonly("Re", &RateReport::Re)
      .def_readonly("Rs", &RateReport::Rs)
      .def_readonly("ssr", &RateReport::ssr);
  py::class_<DiagnosticsReport>(m, "DiagnosticsReport")
      .def_readonly("imli_residual", &DiagnosticsReport::imli_residual)
      .def_readonly("rank_margin", &DiagnosticsReport::rank_margin)
      .def_readonly("wiretap_leakage", &DiagnosticsReport::wiretap_leakage);

  m.def("legit_rate", &legit_rate, py::arg("channels"), py::arg("F"), py::arg("sigma2"),
        py::arg("k"));
  m.def("eave_rate", &eave_rate, py::arg("channels"), py::arg("F"), py::arg("sigma2"),
        py::arg("k"));
  m.def("secrecy_report", &secrecy_report, py::arg("channels"), py::arg("sol"),
        py::arg("config"));
  m.def("ia_diagnostics", &ia_diagnostics, py::arg("channels"), py::arg("sol"),
        py::arg("config"));
  m.def("ssr_improvement", &ssr_improvement, py::arg("proposed_ssr"),
        py::arg("conventional_ssr"));

  py::class_<ExperimentSpec>(m, "ExperimentSpec")
      .def(py::init<>())
      .def_readwrite("config", &ExperimentSpec::config)
      .def_readwrite("schemes", &ExperimentSpec::schemes)
      .def_readwrite("snr_points", &ExperimentSpec::snr_points)
      .def_readwrite("ne_points", &ExperimentSpec::ne_points)
      .def_readwrite("trials", &ExperimentSpec::trials)
      .def_readwrite("master_seed", &ExperimentSpec::master_seed)
      .def_readwrite("opts", &ExperimentSpec::opts)
      .def_readwrite("jobs", &ExperimentSpec::jobs)
      .def("validate", &ExperimentSpec::validate);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("scheme", &SweepRow::scheme)
      .def_readonly("K", &SweepRow::K)
      .def_readonly("M", &SweepRow::M)
      .def_readonly("N", &SweepRow::N)
      .def_readonly("Ne", &SweepRow::Ne)
      .def_readonly("d", &SweepRow::d)
      .def_readonly("snr_db", &SweepRow::snr_db)
      .def_readonly("trial", &SweepRow::trial)
      .def_readonly("seed", &SweepRow::seed)
      .def_readonly("ssr", &SweepRow::ssr)
      .def_readonly("iterations", &SweepRow::iterations)
      .def_readonly("final_leakage", &SweepRow::final_leakage)
      .def_readonly("wslm_ok", &SweepRow::wslm_ok)
      .def_readonly("zfws_ok", &SweepRow::zfws_ok);

  py::class_<SsrAggregate>(m, "SsrAggregate")
      .def_readonly("scheme", &SsrAggregate::scheme)
      .def_readonly("snr_db", &SsrAggregate::snr_db)
      .def_readonly("ne", &SsrAggregate::ne)
      .def_readonly("mean_ssr", &SsrAggregate::mean_ssr)
      .def_readonly("std_ssr", &SsrAggregate::std_ssr)
      .def_readonly("n", &SsrAggregate::n);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("aggregates", &SweepResult::aggregates);

  py::class_<ImprovementRow>(m, "ImprovementRow")
      .def_readonly("scheme", &ImprovementRow::scheme)
      .def_readonly("ne", &ImprovementRow::ne)
      .def_readonly("improvement", &ImprovementRow::improvement)
      .def_readonly("wslm_ok", &ImprovementRow::wslm_ok)
      .def_readonly("zfws_ok", &ImprovementRow::zfws_ok);

  py::class_<NeSweepOutcome>(m, "NeSweepOutcome")
      .def_readonly("result", &NeSweepOutcome::result)
      .def_readonly("improvements", &NeSweepOutcome::improvements);

  m.def("run_convergence", &run_convergence, py::arg("config"), py::arg("scheme"),
        py::arg("opts"), py::arg("seed"));
  m.def("run_snr_sweep", &run_snr_sweep, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_ne_sweep", &run_ne_sweep, py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());
  m.def("scaling_alignment_angle", &scaling_alignment_angle, py::arg("config"),
        py::arg("scheme"), py::arg("opts"), py::arg("seed"), py::arg("pt_a"),
        py::arg("pt_b"));
  m.def("write_csv", &write_csv, py::arg("result"), py::arg("path"));
  m.def("write_aggregate_csv", &write_aggregate_csv, py::arg("result"), py::arg("path"));

  // Library building blocks, handy for notebook-side verification.
  m.def("eig_smallest",
        [](const CMatrix& A, int d) {
          const EigSelection s = eig_smallest(A, d);
          return py::make_tuple(s.vectors.matrix(), s.values);
        },
        py::arg("A"), py::arg("d"));
  m.def("eig_largest",
        [](const CMatrix& A, int m_) {
          const EigSelection s = eig_largest(A, m_);
          return py::make_tuple(s.vectors.matrix(), s.values);
        },
        py::arg("A"), py::arg("m"));
  m.def("logdet2", &logdet2, py::arg("A"));
  m.def("projection_residual", &projection_residual, py::arg("A"), py::arg("U"));
  m.def("orthonormal_complement", &orthonormal_complement, py::arg("U"));
}
