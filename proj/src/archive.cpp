#include "antopt/archive.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "antopt/errors.hpp"

namespace antopt {

namespace {

// NonFiniteError distinguishes the source of a bad value: EvaluationError
// when the objective produced it (init), ArgumentError when the caller
// supplied it (update).
template <typename NonFiniteError>
void check_solution(const Solution& s, int dimension, const char* where) {
  if (static_cast<int>(s.variables.size()) != dimension) {
    std::ostringstream msg;
    msg << where << ": solution has " << s.variables.size()
        << " variables, archive dimension is " << dimension;
    throw ArgumentError(msg.str());
  }
  for (double v : s.variables) {
    if (!std::isfinite(v)) {
      throw NonFiniteError(std::string(where) + ": non-finite variable");
    }
  }
  if (!std::isfinite(s.fitness)) {
    throw NonFiniteError(std::string(where) + ": non-finite fitness");
  }
}

void sort_by_fitness(std::vector<Solution>& pool) {
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Solution& a, const Solution& b) {
                     return a.fitness < b.fitness;
                   });
}

}  // namespace

Archive::Archive(std::vector<Solution> solutions, int dimension)
    : solutions_(std::move(solutions)), dimension_(dimension) {}

Archive Archive::init(int k, int n, Interval bounds,
                      const Objective& objective, RandomSource& rng) {
  if (k < 2) throw ConfigError("archive: k must be at least 2");
  if (n < 1) throw ConfigError("archive: n must be at least 1");
  if (!std::isfinite(bounds.min) || !std::isfinite(bounds.max) ||
      !(bounds.min < bounds.max)) {
    throw ConfigError("archive: bounds must be finite with min < max");
  }

  std::vector<Solution> solutions;
  solutions.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    Solution s;
    s.variables.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      s.variables[static_cast<std::size_t>(i)] =
          rng.uniform(bounds.min, bounds.max);
    }
    s.fitness = objective(s.variables);
    check_solution<EvaluationError>(s, n, "archive init");
    solutions.push_back(std::move(s));
  }
  sort_by_fitness(solutions);
  return Archive(std::move(solutions), n);
}

void Archive::update(std::vector<Solution> newcomers) {
  if (newcomers.empty()) {
    throw ArgumentError("archive update: need at least one new solution");
  }
  for (const Solution& s : newcomers) {
    check_solution<ArgumentError>(s, dimension_, "archive update");
  }
  // Incumbents precede newcomers so the stable sort resolves ties in their
  // favor, and earlier positions beat later ones within each group.
  const std::size_t k = solutions_.size();
  std::vector<Solution> pool;
  pool.reserve(k + newcomers.size());
  std::move(solutions_.begin(), solutions_.end(), std::back_inserter(pool));
  std::move(newcomers.begin(), newcomers.end(), std::back_inserter(pool));
  sort_by_fitness(pool);
  pool.resize(k);
  solutions_ = std::move(pool);
}

const Solution& Archive::at(std::size_t rank) const {
  if (rank >= solutions_.size()) {
    throw ArgumentError("archive: rank out of range");
  }
  return solutions_[rank];
}

double Archive::value(std::size_t rank, std::size_t i) const {
  if (i >= at(rank).variables.size()) {
    throw ArgumentError("archive: variable index out of range");
  }
  return solutions_[rank].variables[i];
}

std::vector<double> Archive::fitnesses() const {
  std::vector<double> out;
  out.reserve(solutions_.size());
  for (const Solution& s : solutions_) out.push_back(s.fitness);
  return out;
}

double sample_gaussian(RandomSource& rng, double mu, double sigma) {
  if (!std::isfinite(mu) || !std::isfinite(sigma)) {
    throw ArgumentError("sample_gaussian: mu and sigma must be finite");
  }
  if (sigma < 0.0) {
    throw ArgumentError("sample_gaussian: sigma must be nonnegative");
  }
  if (sigma == 0.0) return mu;
  return mu + sigma * rng.standard_normal();
}

}  // namespace antopt
