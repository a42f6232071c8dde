#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "econlab/economy.hpp"
#include "econlab/natural.hpp"
#include "econlab/policy.hpp"
#include "econlab/scenario.hpp"
#include "econlab/scenario_file.hpp"
#include "econlab/sim.hpp"

namespace py = pybind11;
using namespace econlab;

namespace {

Matrix to_matrix(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  Matrix m(n, n == 0 ? 0 : rows[0].size());
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m.cols())
      throw ValidationError("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> from_matrix(const Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(econlab, m) {
  m.doc() = "Linear production (pure labour) economy toolkit";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NonBasicInfeasibleError>(m, "NonBasicInfeasible",
                                                  PyExc_ValueError);

  py::enum_<Units>(m, "Units")
      .value("physical", Units::physical)
      .value("dose", Units::dose);
  py::enum_<SimMode>(m, "SimMode")
      .value("closed", SimMode::closed)
      .value("open", SimMode::open);

  py::class_<Sector>(m, "Sector")
      .def(py::init([](std::string name, double population, double survival_dose,
                       double output) {
             return Sector{std::move(name), population, survival_dose, output};
           }),
           py::arg("name"), py::arg("population"), py::arg("survival_dose"),
           py::arg("output"))
      .def_readonly("name", &Sector::name)
      .def_readonly("population", &Sector::population)
      .def_readonly("survival_dose", &Sector::survival_dose)
      .def_readonly("output", &Sector::output)
      .def_property_readonly("doses", &Sector::doses);

  py::class_<Economy>(m, "Economy")
      .def(py::init<std::vector<Sector>, std::optional<Incidence>>(),
           py::arg("sectors"), py::arg("incidence") = std::nullopt)
      .def_property_readonly("sectors", &Economy::sectors)
      .def_property_readonly("size", &Economy::size)
      .def_property_readonly("total_population", &Economy::total_population)
      .def("index_of", &Economy::index_of)
      .def("incidence", &Economy::incidence)
      .def("full_incidence", &Economy::full_incidence);

  py::class_<PriceVector>(m, "PriceVector")
      .def(py::init([](Vector prices, std::optional<std::size_t> numeraire) {
             return PriceVector{std::move(prices), numeraire};
           }),
           py::arg("prices"), py::arg("numeraire") = std::nullopt)
      .def_readonly("prices", &PriceVector::prices)
      .def_readonly("numeraire", &PriceVector::numeraire);

  m.def("build_input_matrix",
        [](const Economy& e, Units u) {
          return from_matrix(build_input_matrix(e, u).entries);
        },
        py::arg("economy"), py::arg("units") = Units::dose);
  m.def("labour_coefficients", &labour_coefficients, py::arg("economy"),
        py::arg("units") = Units::dose);
  m.def("classify_basics",
        [](const std::vector<std::vector<double>>& a, Units u) {
          const auto part = classify_basics(InputMatrix{to_matrix(a), u});
          return py::make_tuple(part.basic, part.non_basic);
        },
        py::arg("matrix"), py::arg("units") = Units::dose);

  m.def("check_viability", [](const Economy& e) {
    const auto rep = check_viability(e);
    return py::make_tuple(rep.viable, rep.margins);
  });
  m.def("surplus_rates", &surplus_rates);
  m.def("two_sector_band", [](const Economy& e) {
    const auto band = two_sector_band(e);
    return py::make_tuple(band.lo, band.hi);
  });
  m.def("check_price_feasibility",
        [](const Economy& e, const PriceVector& p) {
          const auto rep = check_price_feasibility(e, p);
          py::dict d;
          d["feasible"] = rep.feasible;
          d["cost_per_worker"] = rep.cost_per_worker;
          d["slack"] = rep.slack;
          d["tight"] = rep.tight;
          return d;
        });
  m.def("sector_profit_rates", [](const Economy& e, const PriceVector& p) {
    const auto rates = sector_profit_rates(e, p);
    return py::make_tuple(rates.r, rates.s);
  });
  m.def("macro_identity_residual", [](const Economy& e, const PriceVector& p) {
    return macro_identity_residual(e, sector_profit_rates(e, p));
  });
  m.def("policy_prices_r_eq_s",
        [](const Economy& e, std::size_t num) {
          return policy_prices_r_eq_s(e, num);
        },
        py::arg("economy"), py::arg("numeraire") = 0);

  py::class_<EigenSolution>(m, "EigenSolution")
      .def_readonly("lambda_", &EigenSolution::lambda)
      .def_readonly("prices", &EigenSolution::prices)
      .def_readonly("R", &EigenSolution::R)
      .def_readonly("iterations", &EigenSolution::iterations)
      .def_readonly("residual", &EigenSolution::residual);
  py::class_<DistributionSolution>(m, "DistributionSolution")
      .def_readonly("r", &DistributionSolution::r)
      .def_readonly("w", &DistributionSolution::w)
      .def_readonly("prices", &DistributionSolution::prices);

  m.def("perron_left_eigen",
        [](const std::vector<std::vector<double>>& a, std::size_t num, double tol,
           std::uint64_t max_iter) {
          return perron_left_eigen(to_matrix(a), num, tol, max_iter);
        },
        py::arg("matrix"), py::arg("numeraire") = 0, py::arg("tol") = kEigenTol,
        py::arg("max_iter") = kEigenMaxIter);
  m.def("natural_prices", &natural_prices, py::arg("economy"),
        py::arg("numeraire") = 0, py::arg("units") = Units::dose,
        py::arg("tol") = kEigenTol);
  m.def("natural_prices_pure_labour", &natural_prices_pure_labour,
        py::arg("economy"), py::arg("numeraire") = 0,
        py::arg("units") = Units::dose);
  m.def("solve_reducible", &solve_reducible, py::arg("economy"),
        py::arg("numeraire") = 0, py::arg("units") = Units::dose,
        py::arg("tol") = kEigenTol);
  m.def("wage_profit_prices",
        [](const Economy& e, double r, std::size_t num, Units u,
           std::optional<Vector> labour) {
          return wage_profit_prices(e, r, num, u, labour ? &*labour : nullptr);
        },
        py::arg("economy"), py::arg("r"), py::arg("numeraire") = 0,
        py::arg("units") = Units::dose, py::arg("labour_override") = std::nullopt);
  m.def("vertically_integrated_labour",
        [](const std::vector<std::vector<double>>& a, const Vector& labour) {
          return vertically_integrated_labour(to_matrix(a), labour);
        });
  m.def("quantity_system",
        [](const std::vector<std::vector<double>>& a, const Vector& surplus) {
          const auto sol = quantity_system(to_matrix(a), surplus);
          return py::make_tuple(sol.gross_output, sol.residual);
        });

  m.def("apply_output_scaling", &apply_output_scaling);
  m.def("apply_labour_saving", &apply_labour_saving, py::arg("economy"),
        py::arg("sector"), py::arg("g"), py::arg("units") = Units::dose);
  m.def("sector_incomes",
        [](const Economy& e, const EigenSolution& sol, Units u) {
          const auto rep = sector_incomes(e, sol, u);
          py::dict d;
          d["income"] = rep.income;
          d["income_per_worker"] = rep.income_per_worker;
          d["surplus"] = rep.surplus;
          d["net_product_value"] = rep.net_product_value;
          return d;
        },
        py::arg("economy"), py::arg("solution"), py::arg("units") = Units::dose);

  m.def("simulate",
        [](const Economy& e, SimMode mode, std::uint64_t periods, Vector savings,
           const PriceVector& prices) {
          const auto traj = simulate(e, SimConfig{mode, periods, std::move(savings),
                                                  prices});
          py::list records, events;
          for (const auto& r : traj.records)
            records.append(py::make_tuple(r.period, r.sector, r.revenue,
                                          r.basket_cost, r.savings_after));
          for (const auto& ev : traj.events)
            events.append(py::make_tuple(ev.period, ev.sector));
          py::dict d;
          d["records"] = records;
          d["events"] = events;
          d["steady"] = traj.outcome == SimOutcome::steady;
          return d;
        },
        py::arg("economy"), py::arg("mode"), py::arg("periods"),
        py::arg("savings"), py::arg("prices"));
  m.def("time_to_collapse",
        [](const Economy& e, const PriceVector& prices, const Vector& savings,
           SimMode mode) {
          const auto sum = time_to_collapse(e, prices, savings, mode);
          return py::make_tuple(sum.collapse_period,
                                sum.outcome == SimOutcome::steady);
        },
        py::arg("economy"), py::arg("prices"), py::arg("savings"),
        py::arg("mode") = SimMode::closed);
}
