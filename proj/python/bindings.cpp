#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "collin/diagnostics.hpp"
#include "collin/fixtures.hpp"
#include "collin/ols.hpp"
#include "collin/perturb.hpp"
#include "collin/report.hpp"

namespace py = pybind11;
using namespace collin;

namespace {

using ArrayD = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_python(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

Matrix to_matrix(const ArrayD& a) {
  if (a.ndim() != 2) throw DataError("expected a 2-D array");
  Matrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

Vector to_vector(const ArrayD& a) {
  if (a.ndim() != 1) throw DataError("expected a 1-D array");
  return Vector(a.data(), a.data() + a.size());
}

py::array_t<double> to_array(const Matrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

py::tuple dataset_pair(const Dataset& d) {
  py::object y = py::none();
  if (d.count(ColumnRole::Response) == 1) y = py::array_t<double>(py::cast(response_vector(d)));
  return py::make_tuple(y, design_matrix(d));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Near-multicollinearity diagnostics for linear regression designs";

  static py::exception<SingularMatrixError> singular(m, "SingularMatrixError", PyExc_ArithmeticError);
  static py::exception<NotApplicable> not_applicable(m, "NotApplicableError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SingularMatrixError& e) {
      py::set_error(singular, e.what());
    } catch (const NotApplicable& e) {
      py::set_error(not_applicable, e.what());
    } catch (const DataError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<DesignMatrix>(m, "Design")
      .def(py::init([](const ArrayD& x, bool intercept, std::vector<std::size_t> dummies,
                       std::vector<std::string> labels) {
             return DesignMatrix(to_matrix(x), intercept, std::move(dummies), std::move(labels));
           }),
           py::arg("x"), py::arg("intercept") = true, py::arg("dummies") = std::vector<std::size_t>{},
           py::arg("labels") = std::vector<std::string>{},
           "Design matrix; dummies are 0-based column indices, the intercept (if any) is column 0.")
      .def_property_readonly("x", [](const DesignMatrix& d) { return to_array(d.x()); })
      .def_property_readonly("labels", &DesignMatrix::labels)
      .def_property_readonly("intercept", &DesignMatrix::intercept_present)
      .def_property_readonly("quantitative_positions", &DesignMatrix::quantitative_positions)
      .def_property_readonly("dummy_positions", &DesignMatrix::dummy_positions)
      .def("subset", [](const DesignMatrix& d, std::vector<std::size_t> cols) { return d.subset(cols); })
      .def("__repr__", [](const DesignMatrix& d) {
        return "<Design " + std::to_string(d.n()) + "x" + std::to_string(d.k()) + ">";
      });

  m.def("fixture_names", &fixture_names);
  m.def(
      "load_fixture", [](const std::string& name) { return dataset_pair(fixture(name)); }, py::arg("name"),
      "Returns (y, Design) for an embedded dataset.");
  m.def(
      "load_csv",
      [](const std::string& path, const std::map<std::string, std::string>& roles, bool add_intercept) {
        RoleMap r;
        for (const auto& [label, role] : roles) r[label] = parse_role(role);
        return dataset_pair(load_csv(path, r, add_intercept));
      },
      py::arg("path"), py::arg("roles"), py::arg("add_intercept") = true,
      "Returns (y or None, Design); roles map labels to 'response', 'quantitative' or 'dummy'.");

  m.def("rdetr", [](const DesignMatrix& d) { return to_python(to_json(correlation_matrix(d))); });
  m.def("vif", [](const DesignMatrix& d) { return to_python(to_json(vif(d), "vif")); });
  m.def("cn", &condition_number, py::arg("design"), py::arg("include_intercept") = true);
  m.def("cns", [](const DesignMatrix& d) { return to_python(to_json(cns(d))); });
  m.def("ki", [](const DesignMatrix& d) { return to_python(to_json(stewart_index(d))); });
  m.def("cv", [](const ArrayD& v) { return coefficient_of_variation(to_vector(v)); });
  m.def("proportion_of_ones", [](const ArrayD& v) { return proportion_of_ones(to_vector(v)); });
  m.def("slm", [](const DesignMatrix& d) { return to_python(to_json(slm(d))); });
  m.def("multicol", [](const DesignMatrix& d) { return to_python(to_json(multicol(d))); });
  m.def(
      "ols",
      [](const ArrayD& y, const DesignMatrix& d, double alpha) {
        const OLSFit fit = ols_fit(to_vector(y), d);
        auto j = to_json(fit);
        j["contradiction"] = to_json(significance_contradiction(fit, alpha));
        return to_python(j);
      },
      py::arg("y"), py::arg("design"), py::arg("alpha") = 0.05);
  m.def(
      "perturb_n",
      [](const ArrayD& y, const DesignMatrix& d, double tol, std::size_t iterations, double noise_mean,
         double noise_sd, std::vector<std::size_t> positions, std::uint64_t seed, unsigned threads) {
        PerturbConfig cfg{tol, iterations, noise_mean, noise_sd, std::move(positions), seed, threads};
        PerturbResult r;
        {
          py::gil_scoped_release release;
          r = perturb_n(to_vector(y), d, cfg);
        }
        py::dict out;
        out["achieved_pct"] = py::array_t<double>(py::cast(r.achieved_pct));
        out["change_pct"] = py::array_t<double>(py::cast(r.change_pct));
        out["achieved"] = to_python(to_json(r.achieved));
        out["change"] = to_python(to_json(r.change));
        return out;
      },
      py::arg("y"), py::arg("design"), py::arg("tol") = 0.01, py::arg("iterations") = 5000,
      py::arg("noise_mean") = 10.0, py::arg("noise_sd") = 10.0,
      py::arg("positions") = std::vector<std::size_t>{}, py::arg("seed") = 1, py::arg("threads") = 1,
      "positions are 0-based design columns; empty perturbs every quantitative regressor.");
}
