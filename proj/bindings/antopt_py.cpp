#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "antopt/archive.hpp"
#include "antopt/distance.hpp"
#include "antopt/errors.hpp"
#include "antopt/objectives.hpp"
#include "antopt/optimizers.hpp"
#include "antopt/random.hpp"
#include "antopt/selection.hpp"

namespace py = pybind11;
using namespace antopt;

namespace {

ObjectiveSpec spec_from(const std::string& function, int dim,
                        const std::string& formula) {
  return make_objective(objective_from_name(function), dim,
                        formula_variant_from_name(formula));
}

py::dict result_to_dict(const TrialResult& result, bool with_trace) {
  py::dict out;
  out["initial_best"] = result.initial_best;
  out["final_best"] = result.final_best;
  out["best_trajectory"] = result.best_trajectory;
  out["final_solution"] = result.final_solution;
  out["elapsed_ms"] = result.elapsed_ms;
  if (with_trace) {
    py::list trace;
    for (const SelectionRecord& r : result.selection_trace) {
      trace.append(py::make_tuple(r.iteration, r.solution_index,
                                  r.variable_index, r.selected_rank));
    }
    out["selection_trace"] = trace;
  }
  return out;
}

// Wraps a bare column in an archive so the per-dimension distance can be
// queried from Python without building the whole optimizer state.
double column_distance(const std::vector<double>& column, std::size_t selected,
                       const std::string& metric) {
  if (column.size() < 2) {
    throw ArgumentError("column_distance: need at least two values");
  }
  if (selected >= column.size()) {
    throw ArgumentError("column_distance: selected index out of range");
  }
  const int k = static_cast<int>(column.size());
  RandomSource rng(1);
  auto zero = [](std::span<const double>) { return 0.0; };
  Archive archive = Archive::init(k, 1, Interval{-1e6, 1e6}, zero, rng);
  std::vector<Solution> takeover;
  for (int j = 0; j < k; ++j) {
    takeover.push_back(
        {{column[static_cast<std::size_t>(j)]}, -1e12 + static_cast<double>(j)});
  }
  archive.update(std::move(takeover));
  return per_dim_distance(archive, selected, 0,
                          DistanceMetric::from_name(metric));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "archive-based continuous ant colony optimizer";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<EvaluationError>(m, "EvaluationError",
                                          PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<RandomSource>(m, "RandomSource")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform01", &RandomSource::uniform01)
      .def("uniform", &RandomSource::uniform, py::arg("lo"), py::arg("hi"))
      .def("standard_normal", &RandomSource::standard_normal)
      .def_property_readonly("seed", &RandomSource::seed);

  m.def("benchmark_functions", [] {
    std::vector<std::string> names;
    for (ObjectiveId id : benchmark_suite) names.push_back(objective_name(id));
    return names;
  });
  m.def(
      "bounds",
      [](const std::string& function) {
        const Interval b = benchmark_bounds(objective_from_name(function));
        return py::make_tuple(b.min, b.max);
      },
      py::arg("function"));
  m.def(
      "evaluate",
      [](const std::string& function, const std::vector<double>& x,
         const std::string& formula) {
        return evaluate(spec_from(function, static_cast<int>(x.size()),
                                  formula),
                        x);
      },
      py::arg("function"), py::arg("x"), py::arg("formula") = "paper");
  m.def("rmse", [](const std::vector<double>& errors) { return rmse(errors); },
        py::arg("errors"));

  m.def("rank_weights", &rank_weights, py::arg("k"), py::arg("q") = 0.1);
  m.def(
      "probabilities_from_weights",
      [](const std::vector<double>& w) {
        const ProbabilityVector p = probabilities_from_weights(w);
        const auto s = p.values();
        return std::vector<double>(s.begin(), s.end());
      },
      py::arg("weights"));
  m.def(
      "probabilities_from_fitness",
      [](const std::vector<double>& f) {
        const ProbabilityVector p = probabilities_from_fitness(f);
        const auto s = p.values();
        return std::vector<double>(s.begin(), s.end());
      },
      py::arg("fitnesses"));
  m.def(
      "rws",
      [](const std::vector<double>& p, RandomSource& rng) {
        return rws_select(ProbabilityVector(p), rng);
      },
      py::arg("probabilities"), py::arg("rng"));
  m.def(
      "sus",
      [](const std::vector<double>& p, std::size_t count, RandomSource& rng) {
        return sus_sequence(ProbabilityVector(p), count, rng);
      },
      py::arg("probabilities"), py::arg("count"), py::arg("rng"));
  m.def(
      "bhs",
      [](const std::vector<double>& p, RandomSource& rng) {
        return bhs_select(ProbabilityVector(p), rng);
      },
      py::arg("probabilities"), py::arg("rng"));

  m.def("column_distance", &column_distance, py::arg("column"),
        py::arg("selected"), py::arg("metric"));
  m.def(
      "sample_gaussian",
      [](RandomSource& rng, double mu, double sigma) {
        return sample_gaussian(rng, mu, sigma);
      },
      py::arg("rng"), py::arg("mu"), py::arg("sigma"));

  m.def(
      "aco_run",
      [](const std::string& function, int dim, int archive_size,
         int new_solutions, double xi, const std::string& selection,
         const std::string& basis, double q, const std::string& metric,
         int iterations, std::uint64_t seed, const std::string& formula,
         bool trace) {
        AcoParams params;
        params.archive_size = archive_size;
        params.new_solutions = new_solutions;
        params.xi = EvaporationRate(xi);
        params.selection = {selection_method_from_name(selection),
                            probability_basis_from_name(basis), q};
        params.metric = DistanceMetric::from_name(metric);
        params.max_iterations = iterations;
        params.seed = seed;
        params.record_trace = trace;
        const ObjectiveSpec objective = spec_from(function, dim, formula);
        TrialResult result;
        {
          py::gil_scoped_release release;
          RandomSource rng(seed);
          result = aco_run(params, objective, rng);
        }
        return result_to_dict(result, trace);
      },
      py::arg("function"), py::arg("dim"), py::arg("archive_size") = 10,
      py::arg("new_solutions") = 10, py::arg("xi") = 0.5,
      py::arg("selection") = "rws", py::arg("basis") = "fitval",
      py::arg("q") = 0.1, py::arg("metric") = "squared-euclidean",
      py::arg("iterations") = 1000, py::arg("seed") = 0,
      py::arg("formula") = "paper", py::arg("trace") = false);

  m.def(
      "pso_run",
      [](const std::string& function, int dim, int swarm_size,
         double cognitive, double social, double inertia_high,
         double inertia_low, int iterations, std::uint64_t seed,
         const std::string& formula) {
        PsoParams params;
        params.swarm_size = swarm_size;
        params.cognitive = cognitive;
        params.social = social;
        params.inertia_high = inertia_high;
        params.inertia_low = inertia_low;
        params.max_iterations = iterations;
        params.seed = seed;
        const ObjectiveSpec objective = spec_from(function, dim, formula);
        TrialResult result;
        {
          py::gil_scoped_release release;
          RandomSource rng(seed);
          result = pso_run(params, objective, rng);
        }
        return result_to_dict(result, false);
      },
      py::arg("function"), py::arg("dim"), py::arg("swarm_size") = 10,
      py::arg("cognitive") = 2.0, py::arg("social") = 2.0,
      py::arg("inertia_high") = 1.0, py::arg("inertia_low") = 0.0,
      py::arg("iterations") = 1000, py::arg("seed") = 0,
      py::arg("formula") = "paper");

  m.def(
      "de_run",
      [](const std::string& function, int dim, int population,
         double weight_factor, double crossover_rate, int iterations,
         std::uint64_t seed, const std::string& formula) {
        DeParams params;
        params.population = population;
        params.weight_factor = weight_factor;
        params.crossover_rate = crossover_rate;
        params.max_iterations = iterations;
        params.seed = seed;
        const ObjectiveSpec objective = spec_from(function, dim, formula);
        TrialResult result;
        {
          py::gil_scoped_release release;
          RandomSource rng(seed);
          result = de_run(params, objective, rng);
        }
        return result_to_dict(result, false);
      },
      py::arg("function"), py::arg("dim"), py::arg("population") = 10,
      py::arg("weight_factor") = 0.7, py::arg("crossover_rate") = 0.9,
      py::arg("iterations") = 1000, py::arg("seed") = 0,
      py::arg("formula") = "paper");
}
