#include "antopt/optimizers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "antopt/errors.hpp"

namespace antopt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int resolve_dimension(int params_dimension, const ObjectiveSpec& objective,
                      const char* who) {
  const int n = params_dimension == 0 ? objective.dimension : params_dimension;
  if (n < 1) throw ConfigError(std::string(who) + ": dimension must be >= 1");
  if (n != objective.dimension) {
    std::ostringstream msg;
    msg << who << ": params dimension " << n << " != objective dimension "
        << objective.dimension;
    throw ConfigError(msg.str());
  }
  return n;
}

}  // namespace

TrialResult aco_run(const AcoParams& params, const ObjectiveSpec& objective,
                    RandomSource& rng) {
  if (params.archive_size < 2) throw ConfigError("aco: k must be >= 2");
  if (params.new_solutions < 1) throw ConfigError("aco: m must be >= 1");
  if (params.max_iterations < 1) throw ConfigError("aco: iterations must be >= 1");
  const int n = resolve_dimension(params.dimension, objective, "aco");
  const int k = params.archive_size;
  const int m = params.new_solutions;

  const auto start = Clock::now();
  const Objective handle = [&objective](std::span<const double> x) {
    return evaluate(objective, x);
  };

  TrialResult result;
  DistanceDiagnostics diagnostics;
  Archive archive = Archive::init(k, n, objective.bounds, handle, rng);
  result.initial_best = archive.best().fitness;
  result.best_trajectory.reserve(static_cast<std::size_t>(params.max_iterations));

  // Per-dimension distances depend only on (j, i) within one iteration, so
  // they are memoized across the m * n sampling steps.
  std::vector<double> distance_cache;
  const double unset = -1.0;

  for (int iteration = 1; iteration <= params.max_iterations; ++iteration) {
    const std::vector<double> fitnesses = archive.fitnesses();
    IterationSelector selector(params.selection, fitnesses,
                               static_cast<std::size_t>(m) *
                                   static_cast<std::size_t>(n),
                               rng);
    distance_cache.assign(static_cast<std::size_t>(k) *
                              static_cast<std::size_t>(n),
                          unset);

    std::vector<Solution> batch;
    batch.reserve(static_cast<std::size_t>(m));
    for (int l = 1; l <= m; ++l) {
      int current_variable = 0;
      try {
        Solution s;
        s.variables.resize(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
          current_variable = i;
          const std::size_t j = selector.next(rng);
          if (params.record_trace) {
            result.selection_trace.push_back(
                {iteration, l, i, static_cast<int>(j) + 1});
          }
          const std::size_t slot =
              j * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1);
          if (distance_cache[slot] == unset) {
            distance_cache[slot] = per_dim_distance(
                archive, j, static_cast<std::size_t>(i - 1), params.metric,
                &diagnostics);
          }
          const double mu = archive.value(j, static_cast<std::size_t>(i - 1));
          const double spread = sigma(distance_cache[slot], params.xi);
          s.variables[static_cast<std::size_t>(i - 1)] =
              sample_gaussian(rng, mu, spread);
        }
        current_variable = 0;
        s.fitness = handle(s.variables);
        batch.push_back(std::move(s));
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "aco: trial aborted at iteration " << iteration << ", solution "
            << l;
        if (current_variable > 0) msg << ", variable " << current_variable;
        msg << ": " << e.what();
        throw EvaluationError(msg.str());
      }
    }
    archive.update(std::move(batch));
    result.best_trajectory.push_back(archive.best().fitness);
  }

  result.final_best = archive.best().fitness;
  result.final_solution = archive.best().variables;
  result.degenerate_distance_events = diagnostics.degenerate_bray_curtis;
  result.elapsed_ms = elapsed_ms_since(start);
  return result;
}

TrialResult pso_run(const PsoParams& params, const ObjectiveSpec& objective,
                    RandomSource& rng) {
  if (params.swarm_size < 2) throw ConfigError("pso: swarm size must be >= 2");
  if (params.max_iterations < 1) throw ConfigError("pso: iterations must be >= 1");
  if (params.inertia_high < params.inertia_low) {
    throw ConfigError("pso: inertia_high must be >= inertia_low");
  }
  const int n = objective.dimension;
  const int swarm = params.swarm_size;

  const auto start = Clock::now();
  TrialResult result;

  std::vector<std::vector<double>> position(
      static_cast<std::size_t>(swarm),
      std::vector<double>(static_cast<std::size_t>(n)));
  std::vector<std::vector<double>> velocity(
      static_cast<std::size_t>(swarm),
      std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<std::vector<double>> personal_best = position;
  std::vector<double> personal_best_value(static_cast<std::size_t>(swarm));

  double global_best_value = std::numeric_limits<double>::infinity();
  std::vector<double> global_best(static_cast<std::size_t>(n));

  for (int p = 0; p < swarm; ++p) {
    auto& x = position[static_cast<std::size_t>(p)];
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] =
          rng.uniform(objective.bounds.min, objective.bounds.max);
    }
    const double f = evaluate(objective, x);
    personal_best[static_cast<std::size_t>(p)] = x;
    personal_best_value[static_cast<std::size_t>(p)] = f;
    if (f < global_best_value) {
      global_best_value = f;
      global_best = x;
    }
  }
  result.initial_best = global_best_value;
  result.best_trajectory.reserve(static_cast<std::size_t>(params.max_iterations));

  for (int iteration = 0; iteration < params.max_iterations; ++iteration) {
    const double progress =
        params.max_iterations > 1
            ? static_cast<double>(iteration) /
                  static_cast<double>(params.max_iterations - 1)
            : 0.0;
    const double inertia =
        params.inertia_high -
        (params.inertia_high - params.inertia_low) * progress;

    for (int p = 0; p < swarm; ++p) {
      auto& x = position[static_cast<std::size_t>(p)];
      auto& v = velocity[static_cast<std::size_t>(p)];
      const auto& pb = personal_best[static_cast<std::size_t>(p)];
      for (int i = 0; i < n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        v[ii] = inertia * v[ii] + params.cognitive * r1 * (pb[ii] - x[ii]) +
                params.social * r2 * (global_best[ii] - x[ii]);
        x[ii] += v[ii];
      }
      try {
        const double f = evaluate(objective, x);
        if (f < personal_best_value[static_cast<std::size_t>(p)]) {
          personal_best_value[static_cast<std::size_t>(p)] = f;
          personal_best[static_cast<std::size_t>(p)] = x;
          if (f < global_best_value) {
            global_best_value = f;
            global_best = x;
          }
        }
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "pso: trial aborted at iteration " << iteration + 1
            << ", particle " << p + 1 << ": " << e.what();
        throw EvaluationError(msg.str());
      }
    }
    result.best_trajectory.push_back(global_best_value);
  }

  result.final_best = global_best_value;
  result.final_solution = std::move(global_best);
  result.elapsed_ms = elapsed_ms_since(start);
  return result;
}

TrialResult de_run(const DeParams& params, const ObjectiveSpec& objective,
                   RandomSource& rng) {
  if (params.population < 4) throw ConfigError("de: population must be >= 4");
  if (!std::isfinite(params.weight_factor)) {
    throw ConfigError("de: weight factor must be finite");
  }
  if (!(params.crossover_rate >= 0.0 && params.crossover_rate <= 1.0)) {
    throw ConfigError("de: crossover rate must be in [0, 1]");
  }
  if (params.max_iterations < 1) throw ConfigError("de: iterations must be >= 1");
  const int n = objective.dimension;
  const int pop = params.population;

  const auto start = Clock::now();
  TrialResult result;

  std::vector<std::vector<double>> population(
      static_cast<std::size_t>(pop),
      std::vector<double>(static_cast<std::size_t>(n)));
  std::vector<double> fitness(static_cast<std::size_t>(pop));
  std::size_t best = 0;

  for (int p = 0; p < pop; ++p) {
    auto& x = population[static_cast<std::size_t>(p)];
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] =
          rng.uniform(objective.bounds.min, objective.bounds.max);
    }
    fitness[static_cast<std::size_t>(p)] = evaluate(objective, x);
    if (fitness[static_cast<std::size_t>(p)] < fitness[best]) {
      best = static_cast<std::size_t>(p);
    }
  }
  result.initial_best = fitness[best];
  result.best_trajectory.reserve(static_cast<std::size_t>(params.max_iterations));

  const auto pick_other = [&rng, pop](std::initializer_list<int> taken) {
    for (;;) {
      const int r = static_cast<int>(rng.uniform01() * pop);
      const int candidate = std::min(r, pop - 1);
      if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) {
        return candidate;
      }
    }
  };

  std::vector<double> trial(static_cast<std::size_t>(n));
  for (int iteration = 1; iteration <= params.max_iterations; ++iteration) {
    for (int p = 0; p < pop; ++p) {
      const int r1 = pick_other({p});
      const int r2 = pick_other({p, r1});
      const int forced = std::min(static_cast<int>(rng.uniform01() * n), n - 1);

      const auto& parent = population[static_cast<std::size_t>(p)];
      const auto& xb = population[best];
      const auto& x1 = population[static_cast<std::size_t>(r1)];
      const auto& x2 = population[static_cast<std::size_t>(r2)];
      for (int i = 0; i < n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        if (rng.uniform01() < params.crossover_rate || i == forced) {
          trial[ii] = parent[ii] +
                      params.weight_factor * (xb[ii] - parent[ii]) +
                      params.weight_factor * (x1[ii] - x2[ii]);
        } else {
          trial[ii] = parent[ii];
        }
      }
      try {
        const double f = evaluate(objective, trial);
        if (f < fitness[static_cast<std::size_t>(p)]) {
          population[static_cast<std::size_t>(p)] = trial;
          fitness[static_cast<std::size_t>(p)] = f;
          if (f < fitness[best]) best = static_cast<std::size_t>(p);
        }
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "de: trial aborted at iteration " << iteration << ", target "
            << p + 1 << ": " << e.what();
        throw EvaluationError(msg.str());
      }
    }
    result.best_trajectory.push_back(fitness[best]);
  }

  result.final_best = fitness[best];
  result.final_solution = population[best];
  result.elapsed_ms = elapsed_ms_since(start);
  return result;
}

}  // namespace antopt
