#include "relm/data.hpp"
#include "relm/elm.hpp"
#include "relm/errors.hpp"
#include "relm/numerics.hpp"
#include "relm/solvers.hpp"
#include "relm/thresholding.hpp"
#include "relm/version.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

PYBIND11_MODULE(_relm, m) {
  m.doc() = "Regularized extreme learning machines: half/soft thresholding "
            "operators, fixed-point solvers and ELM plumbing.";
  m.attr("__version__") = RELM_VERSION;

  py::register_exception<relm::Error>(m, "RelmError", PyExc_RuntimeError);

  // thresholding
  m.def("half_threshold", &relm::half_threshold, py::arg("lam"));
  m.def("half_scalar", &relm::half_scalar, py::arg("lam"), py::arg("t"));
  m.def("soft_scalar", &relm::soft_scalar, py::arg("lam"), py::arg("t"));
  m.def("half_vector", &relm::half_vector, py::arg("lam"), py::arg("beta"));
  m.def("soft_vector", &relm::soft_vector, py::arg("lam"), py::arg("beta"));
  m.def("prox_hybrid_half", &relm::prox_hybrid_half, py::arg("lam"),
        py::arg("gamma"), py::arg("epsilon"), py::arg("beta"));
  m.def("prox_hybrid_soft", &relm::prox_hybrid_soft, py::arg("lam"),
        py::arg("gamma"), py::arg("epsilon"), py::arg("beta"));

  // numerics
  py::class_<relm::SpectrumBounds>(m, "SpectrumBounds")
      .def_readonly("kappa0", &relm::SpectrumBounds::kappa0)
      .def_readonly("kappa", &relm::SpectrumBounds::kappa)
      .def_readonly("iterations_used", &relm::SpectrumBounds::iterations_used)
      .def("__repr__", [](const relm::SpectrumBounds& sb) {
        return "SpectrumBounds(kappa0=" + std::to_string(sb.kappa0) +
               ", kappa=" + std::to_string(sb.kappa) + ")";
      });
  m.def("gram", &relm::gram, py::arg("H"));
  m.def("spectral_bounds", &relm::spectral_bounds, py::arg("G"),
        py::arg("tol") = 1e-9, py::arg("max_iter") = 10000);
  m.def("solve_spd", &relm::solve_spd, py::arg("A"), py::arg("B"),
        py::arg("jitter") = 0.0);
  m.def("min_norm_lsq", &relm::min_norm_lsq, py::arg("H"), py::arg("T"),
        py::arg("ridge_floor") = 1e-10);

  // elm
  py::class_<relm::HiddenLayer>(m, "HiddenLayer")
      .def_readonly("input_dim", &relm::HiddenLayer::input_dim)
      .def_readonly("node_count", &relm::HiddenLayer::node_count)
      .def_readonly("weights", &relm::HiddenLayer::weights)
      .def_readonly("biases", &relm::HiddenLayer::biases)
      .def_readonly("weight_range", &relm::HiddenLayer::weight_range)
      .def_readonly("seed", &relm::HiddenLayer::seed);
  m.def("init_hidden", &relm::init_hidden, py::arg("input_dim"),
        py::arg("node_count"), py::arg("weight_range"), py::arg("seed"));
  m.def("hidden_matrix", &relm::hidden_matrix, py::arg("layer"), py::arg("X"));
  m.def("sigmoid", &relm::sigmoid, py::arg("x"));

  py::class_<relm::LabelEncoding>(m, "LabelEncoding")
      .def_readonly("class_names", &relm::LabelEncoding::class_names)
      .def("class_count", &relm::LabelEncoding::class_count)
      .def("index_of", &relm::LabelEncoding::index_of, py::arg("label"));
  m.def("make_encoding", &relm::make_encoding, py::arg("labels"));
  m.def("one_hot", &relm::one_hot, py::arg("labels"), py::arg("encoding"));
  m.def("argmax_rows", &relm::argmax_rows, py::arg("scores"));
  m.def("predict", &relm::predict, py::arg("layer"), py::arg("beta"), py::arg("X"));
  m.def("accuracy", &relm::accuracy, py::arg("predicted"), py::arg("truth"));
  m.def("remaining_nodes", &relm::remaining_nodes, py::arg("beta"),
        py::arg("tol") = 1e-8);

  // solvers
  py::enum_<relm::DeltaPolicy>(m, "DeltaPolicy")
      .value("FromSpectrum", relm::DeltaPolicy::FromSpectrum)
      .value("Fixed", relm::DeltaPolicy::Fixed);
  py::class_<relm::RegConfig>(m, "RegConfig")
      .def(py::init<>())
      .def_readwrite("lam", &relm::RegConfig::lambda)
      .def_readwrite("gamma", &relm::RegConfig::gamma)
      .def_readwrite("epsilon", &relm::RegConfig::epsilon)
      .def_readwrite("mu", &relm::RegConfig::mu)
      .def_readwrite("xi", &relm::RegConfig::xi)
      .def_readwrite("delta_policy", &relm::RegConfig::delta_policy)
      .def_readwrite("delta_fixed", &relm::RegConfig::delta_fixed)
      .def_readwrite("hard_iter_cap", &relm::RegConfig::hard_iter_cap)
      .def_readwrite("record_objective_trace",
                     &relm::RegConfig::record_objective_trace)
      .def_readwrite("ridge_floor", &relm::RegConfig::ridge_floor)
      .def_readwrite("spectral_tol", &relm::RegConfig::spectral_tol)
      .def_readwrite("spectral_max_iter", &relm::RegConfig::spectral_max_iter);
  py::class_<relm::SolverOutput>(m, "SolverOutput")
      .def_readonly("beta", &relm::SolverOutput::beta)
      .def_readonly("iterations", &relm::SolverOutput::iterations)
      .def_readonly("objective_trace", &relm::SolverOutput::objective_trace)
      .def_readonly("support_size", &relm::SolverOutput::support_size)
      .def_readonly("delta_used", &relm::SolverOutput::delta_used)
      .def_property_readonly("lmax_used",
                             [](const relm::SolverOutput& o) -> py::object {
                               if (!o.lmax_used) return py::none();
                               return py::int_(*o.lmax_used);
                             })
      .def_property_readonly("kappa_bounds",
                             [](const relm::SolverOutput& o) -> py::object {
                               if (!o.kappa_bounds) return py::none();
                               return py::cast(*o.kappa_bounds);
                             })
      .def_readonly("wall_time_s", &relm::SolverOutput::wall_time_s)
      .def_readonly("diagnostics", &relm::SolverOutput::diagnostics);

  m.def("objective_hybrid_half", &relm::objective_hybrid_half, py::arg("H"),
        py::arg("T"), py::arg("beta"), py::arg("lam"), py::arg("gamma"),
        py::arg("epsilon"));
  m.def("objective_hybrid_soft", &relm::objective_hybrid_soft, py::arg("H"),
        py::arg("T"), py::arg("beta"), py::arg("lam"), py::arg("gamma"),
        py::arg("epsilon"));
  m.def("fixed_point_map", &relm::fixed_point_map, py::arg("H"), py::arg("T"),
        py::arg("beta"), py::arg("lam"), py::arg("gamma"), py::arg("epsilon"),
        py::arg("delta"));
  m.def("lmax_bound", &relm::lmax_bound, py::arg("beta0"), py::arg("beta1"),
        py::arg("kappa0"), py::arg("kappa"), py::arg("epsilon"), py::arg("lam"),
        py::arg("xi"));
  m.def("train_hybrid_half", &relm::train_hybrid_half, py::arg("H"), py::arg("T"),
        py::arg("cfg"));
  m.def("train_half", &relm::train_half, py::arg("H"), py::arg("T"), py::arg("cfg"));
  m.def("train_hybrid_soft", &relm::train_hybrid_soft, py::arg("H"), py::arg("T"),
        py::arg("cfg"));
  m.def("train_l1", &relm::train_l1, py::arg("H"), py::arg("T"), py::arg("cfg"));
  m.def("train_l2", &relm::train_l2, py::arg("H"), py::arg("T"), py::arg("cfg"));
  m.def("train_elm", &relm::train_elm, py::arg("H"), py::arg("T"), py::arg("cfg"));

  // data fixtures
  py::class_<relm::SparseFixture>(m, "SparseFixture")
      .def_readonly("H", &relm::SparseFixture::H)
      .def_readonly("T", &relm::SparseFixture::T)
      .def_readonly("beta_true", &relm::SparseFixture::beta_true);
  m.def("synthetic_sparse", &relm::synthetic_sparse, py::arg("n"), py::arg("p"),
        py::arg("true_support"), py::arg("noise"), py::arg("seed"));
}
