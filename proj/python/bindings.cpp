#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hweyl/errors.hpp"
#include "hweyl/twisted.hpp"
#include "hweyl/vector_measure.hpp"
#include "hweyl/verify.hpp"
#include "hweyl/weyl.hpp"

namespace py = pybind11;
using namespace hweyl;

namespace {

FiniteAbelianGroup group_of(const std::vector<int>& orders) { return FiniteAbelianGroup(orders); }

PhaseFunction phase_fn(const std::vector<int>& orders, const Eigen::VectorXcd& values) {
  return PhaseFunction(group_of(orders), values);
}

py::dict to_dict(const Estimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["lower"] = e.lower;
  d["upper"] = e.upper;
  d["exact"] = e.exact;
  return d;
}

VectorMeasure measure(const std::vector<int>& orders, const Eigen::MatrixXcd& atoms, const std::string& field,
                      double lq) {
  const NormedSpace s(static_cast<int>(atoms.cols()), scalar_field_from_string(field), Exponent(lq));
  return VectorMeasure(group_of(orders), s, atoms);
}

SearchConfig search(bool estimators) {
  SearchConfig c;
  c.estimator_opt_in = estimators;
  return c;
}

}  // namespace

PYBIND11_MODULE(_hweyl, m) {
  py::register_exception<Error>(m, "HweylError", PyExc_ValueError);

  m.def(
      "weyl_transform",
      [](const std::vector<int>& orders, const Eigen::VectorXcd& values, const std::string& path) {
        return weyl_transform(phase_fn(orders, values), path == "direct" ? TransformPath::direct : TransformPath::fft)
            .matrix();
      },
      py::arg("orders"), py::arg("values"), py::arg("path") = "fft");
  m.def(
      "weyl_inverse",
      [](const std::vector<int>& orders, const Eigen::MatrixXcd& op) {
        return weyl_inverse(WeylOperator(group_of(orders), op)).values();
      },
      py::arg("orders"), py::arg("matrix"));
  m.def(
      "twisted_convolve",
      [](const std::vector<int>& orders, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const std::string& path) {
        return twisted_convolve(phase_fn(orders, f), phase_fn(orders, g), conv_path_from_string(path)).values();
      },
      py::arg("orders"), py::arg("f"), py::arg("g"), py::arg("path") = "weyl_factorized");
  m.def(
      "lp_norm",
      [](const std::vector<int>& orders, const Eigen::VectorXcd& f, double p) {
        return lp_norm(phase_fn(orders, f), Exponent(p));
      },
      py::arg("orders"), py::arg("f"), py::arg("p"));
  m.def(
      "schatten_norm", [](const Eigen::MatrixXcd& a, double p) { return schatten_norm(a, Exponent(p)); },
      py::arg("matrix"), py::arg("p"));
  m.def(
      "hausdorff_young_margin",
      [](const std::vector<int>& orders, const Eigen::VectorXcd& f, double p) {
        return hausdorff_young_margin(phase_fn(orders, f), p);
      },
      py::arg("orders"), py::arg("f"), py::arg("p"));
  m.def(
      "semivariation",
      [](const std::vector<int>& orders, const Eigen::MatrixXcd& atoms, const std::string& field, double lq,
         bool estimators) { return to_dict(semivariation(measure(orders, atoms, field, lq), search(estimators))); },
      py::arg("orders"), py::arg("atoms"), py::arg("field") = "real", py::arg("lq") = 2.0,
      py::arg("estimators") = false);
  m.def(
      "p_semivariation",
      [](const std::vector<int>& orders, const Eigen::MatrixXcd& atoms, double p, const std::string& field, double lq,
         bool estimators) {
        return to_dict(p_semivariation(measure(orders, atoms, field, lq), Exponent(p), search(estimators)));
      },
      py::arg("orders"), py::arg("atoms"), py::arg("p"), py::arg("field") = "real", py::arg("lq") = 2.0,
      py::arg("estimators") = false);
  m.def(
      "verify",
      [](const std::string& suite, std::optional<std::size_t> trials, std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        const std::string text = report_to_json(run_verify(suite_from_string(suite), cfg)).dump();
        return py::module_::import("json").attr("loads")(text);
      },
      py::arg("suite") = "all", py::arg("trials") = py::none(), py::arg("seed") = 1);
}
