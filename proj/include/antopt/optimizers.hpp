#pragma once

#include <cstdint>
#include <vector>

#include "antopt/archive.hpp"
#include "antopt/distance.hpp"
#include "antopt/objectives.hpp"
#include "antopt/selection.hpp"

namespace antopt {

struct AcoParams {
  int archive_size = 10;        // k
  int new_solutions = 10;       // m, constructed per iteration
  int dimension = 0;            // n; 0 means take the objective's dimension
  EvaporationRate xi{0.5};
  SelectionSpec selection{};
  DistanceMetric metric = DistanceMetric::squared_euclidean();
  int max_iterations = 1000;
  std::uint64_t seed = 0;
  bool record_trace = false;
};

struct PsoParams {
  int swarm_size = 10;
  double cognitive = 2.0;       // c1
  double social = 2.0;          // c2
  double inertia_high = 1.0;
  double inertia_low = 0.0;
  int max_iterations = 1000;
  std::uint64_t seed = 0;
};

struct DeParams {
  int population = 10;
  double weight_factor = 0.7;   // F
  double crossover_rate = 0.9;  // CR
  int max_iterations = 1000;
  std::uint64_t seed = 0;
};

struct TrialResult {
  std::vector<double> best_trajectory;  // best-so-far after each iteration
  double initial_best = 0.0;            // best of the initial population
  double final_best = 0.0;
  std::vector<double> final_solution;
  double elapsed_ms = 0.0;
  SelectionTrace selection_trace;       // filled only when tracing
  std::uint64_t degenerate_distance_events = 0;
};

/// Archive-based continuous ant colony optimization. Each iteration
/// constructs m solutions; every variable of every new solution selects its
/// own archive member j, then samples N(mu, sigma^2) with mu the member's
/// value and sigma = xi * D(metric, archive, j, i). The m newcomers are
/// pooled with the archive and the m worst solutions are truncated.
/// Sampled variables are not clamped to the bounds; bounds shape the
/// initial archive only.
TrialResult aco_run(const AcoParams& params, const ObjectiveSpec& objective,
                    RandomSource& rng);

/// Global-best particle swarm with linearly decreasing inertia and no
/// velocity clamp. Velocities start at zero.
TrialResult pso_run(const PsoParams& params, const ObjectiveSpec& objective,
                    RandomSource& rng);

/// DE/rand-to-best/1/bin: mutate toward the population best plus one random
/// difference, binomial crossover with one forced mutant coordinate, greedy
/// replacement (ties keep the parent).
TrialResult de_run(const DeParams& params, const ObjectiveSpec& objective,
                   RandomSource& rng);

}  // namespace antopt
