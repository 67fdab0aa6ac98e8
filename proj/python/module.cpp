#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdquant/dominance.hpp"
#include "sdquant/envelope.hpp"
#include "sdquant/io.hpp"
#include "sdquant/market.hpp"
#include "sdquant/oracles.hpp"
#include "sdquant/piecewise_linear.hpp"

namespace py = pybind11;
using namespace sdquant;

PYBIND11_MODULE(_sdquant, m) {
    m.doc() = "Quantile-function algebra, stochastic dominance and minimal-cost payoffs";

    py::class_<StepQuantile>(m, "StepQuantile")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("breakpoints"),
             py::arg("values"))
        .def_static("constant", &StepQuantile::constant, py::arg("value"))
        .def_static(
            "from_samples",
            [](const std::vector<double>& samples, const std::vector<double>& weights) {
                return StepQuantile::from_samples(samples, weights);
            },
            py::arg("samples"), py::arg("weights") = std::vector<double>{})
        .def("__call__", &StepQuantile::operator(), py::arg("t"))
        .def_property_readonly("breakpoints", &StepQuantile::breakpoints)
        .def_property_readonly("values", &StepQuantile::values)
        .def_property_readonly("max_value", &StepQuantile::max_value)
        .def("__eq__", [](const StepQuantile& a, const StepQuantile& b) {
            return approx_equal(a, b);
        })
        .def("__repr__", [](const StepQuantile& q) { return io::to_json(q); });

    py::class_<PiecewiseLinearFn>(m, "PiecewiseLinearFn")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("xs"), py::arg("ys"))
        .def("__call__", &PiecewiseLinearFn::operator(), py::arg("x"))
        .def_property_readonly("xs", &PiecewiseLinearFn::xs)
        .def_property_readonly("ys", &PiecewiseLinearFn::ys)
        .def("__eq__", [](const PiecewiseLinearFn& a, const PiecewiseLinearFn& b) {
            return approx_equal(a, b);
        })
        .def("__repr__", [](const PiecewiseLinearFn& p) { return io::to_json(p); });

    py::class_<DominanceReport>(m, "DominanceReport")
        .def_readonly("holds", &DominanceReport::holds)
        .def_readonly("witness", &DominanceReport::witness)
        .def_readonly("margin", &DominanceReport::margin)
        .def("__repr__", [](const DominanceReport& r) { return io::to_json(r); });

    py::class_<ProbInterval>(m, "ProbInterval")
        .def_readonly("lo", &ProbInterval::lo)
        .def_readonly("hi", &ProbInterval::hi)
        .def("__repr__", [](const ProbInterval& i) {
            return "(" + io::format_number(i.lo) + ", " + io::format_number(i.hi) + ")";
        });

    py::class_<EnvelopeSolution>(m, "EnvelopeSolution")
        .def_readonly("envelope", &EnvelopeSolution::envelope)
        .def_readonly("quantile", &EnvelopeSolution::quantile)
        .def_readonly("contact", &EnvelopeSolution::contact)
        .def_readonly("formula_mismatches", &EnvelopeSolution::formula_mismatches)
        .def("__repr__", [](const EnvelopeSolution& s) { return io::to_json(s); });

    py::class_<MarketState>(m, "MarketState")
        .def(py::init<double, double>(), py::arg("p"), py::arg("rho"))
        .def_readonly("p", &MarketState::p)
        .def_readonly("rho", &MarketState::rho);

    py::class_<Market>(m, "Market")
        .def(py::init([](const std::vector<std::pair<double, double>>& states) {
                 std::vector<MarketState> out;
                 out.reserve(states.size());
                 for (auto [p, rho] : states) out.push_back({p, rho});
                 return Market(std::move(out));
             }),
             py::arg("states"))
        .def_property_readonly("states",
                               [](const Market& m0) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& s : m0.states()) out.emplace_back(s.p, s.rho);
                                   return out;
                               })
        .def("__repr__", [](const Market& m0) { return io::to_json(m0); });

    py::class_<PayoffEntry>(m, "PayoffEntry")
        .def_readonly("state", &PayoffEntry::state)
        .def_readonly("mass", &PayoffEntry::mass)
        .def_readonly("value", &PayoffEntry::value);

    py::class_<RandomizedPayoff>(m, "RandomizedPayoff")
        .def_readonly("entries", &RandomizedPayoff::entries)
        .def("__repr__", [](const RandomizedPayoff& p) { return io::to_json(p); });

    py::class_<ExpenditureSolution>(m, "ExpenditureSolution")
        .def_readonly("envelope", &ExpenditureSolution::envelope)
        .def_readonly("payoff", &ExpenditureSolution::payoff)
        .def_readonly("cost", &ExpenditureSolution::cost);

    m.def("integrate", &integrate, py::arg("q"));
    m.def("right_slopes", &right_slopes, py::arg("p"));
    m.def("pointwise_max", &pointwise_max, py::arg("a"), py::arg("b"));
    m.def("fsd_check", &fsd_check, py::arg("a"), py::arg("b"));
    m.def("ssd_check", &ssd_check, py::arg("a"), py::arg("b"));
    m.def("running_max", &running_max, py::arg("f"));
    m.def("upper_envelope", &upper_envelope, py::arg("a"), py::arg("b"));
    m.def("ssd_minimal", &ssd_minimal, py::arg("fsd_bound"), py::arg("ssd_bound"));
    m.def(
        "reduce_fsd",
        [](const std::vector<StepQuantile>& qs) { return reduce_fsd(qs); }, py::arg("constraints"));
    m.def(
        "reduce_ssd",
        [](const std::vector<StepQuantile>& qs) { return reduce_ssd(qs); }, py::arg("constraints"));

    m.def("sdf_quantile", &sdf_quantile, py::arg("market"));
    m.def("price", &price, py::arg("q"), py::arg("q_rho"));
    m.def("comonotone_intervals", &comonotone_intervals, py::arg("market"));
    m.def("optimal_payoff", &optimal_payoff, py::arg("q"), py::arg("market"));
    m.def("expected_cost", &expected_cost, py::arg("payoff"), py::arg("market"));
    m.def(
        "solve_expenditure",
        [](const std::vector<StepQuantile>& fsd, const std::vector<StepQuantile>& ssd,
           const Market& market) { return solve_expenditure(fsd, ssd, market); },
        py::arg("fsd_constraints"), py::arg("ssd_constraints"), py::arg("market"));

    auto oracles_mod = m.def_submodule("oracles", "Brute-force references and probe generators");
    py::class_<oracles::GridFunction>(oracles_mod, "GridFunction")
        .def_readonly("n", &oracles::GridFunction::n)
        .def_readonly("values", &oracles::GridFunction::values)
        .def("abscissa", &oracles::GridFunction::abscissa, py::arg("k"));
    oracles_mod.def("brute_envelope", &oracles::brute_envelope, py::arg("q1"), py::arg("q2"),
                    py::arg("n"));
    oracles_mod.def("euler_envelope", &oracles::euler_envelope, py::arg("q1"), py::arg("q2"),
                    py::arg("n"));
    oracles_mod.def("feasible_sample", &oracles::feasible_sample, py::arg("q1"), py::arg("q2"),
                    py::arg("seed"));
    oracles_mod.def("single_crossing_solution", &oracles::single_crossing_solution, py::arg("q1"),
                    py::arg("q2"));
    oracles_mod.def(
        "random_step_quantile",
        [](std::uint64_t seed, std::size_t max_segments, double max_value) {
            oracles::Lcg rng(seed);
            return oracles::random_step_quantile(rng, max_segments, max_value);
        },
        py::arg("seed"), py::arg("max_segments") = 8, py::arg("max_value") = 10.0);
}
