#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "antopt/random.hpp"

namespace antopt {

/// Inclusive coordinate range, one per problem (all dimensions share it).
struct Interval {
  double min = 0.0;
  double max = 0.0;
};

/// A candidate point together with its objective value.
struct Solution {
  std::vector<double> variables;
  double fitness = 0.0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Solution archive: the pheromone model. Holds exactly k solutions sorted
/// ascending by fitness (index 0 is the current best). The size k and the
/// dimension n are fixed for the archive's lifetime.
class Archive {
 public:
  /// Builds an archive of k solutions with coordinates drawn uniformly from
  /// bounds, evaluated with objective, and sorted. Bounds apply here only;
  /// solutions added later are not clamped.
  static Archive init(int k, int n, Interval bounds, const Objective& objective,
                      RandomSource& rng);

  /// Merges newcomers into the archive and keeps the k best of the pooled
  /// k + m solutions. On fitness ties incumbents win over newcomers and
  /// earlier positions win over later ones.
  void update(std::vector<Solution> newcomers);

  std::size_t size() const { return solutions_.size(); }
  int dimension() const { return dimension_; }

  /// Solution at the given rank. Throws ArgumentError when out of range.
  const Solution& at(std::size_t rank) const;
  const Solution& best() const { return solutions_.front(); }

  /// Variable i of the solution at the given rank. Throws ArgumentError
  /// when either index is out of range.
  double value(std::size_t rank, std::size_t i) const;

  /// Fitnesses in rank order (ascending).
  std::vector<double> fitnesses() const;

  std::span<const Solution> solutions() const { return solutions_; }

 private:
  Archive(std::vector<Solution> solutions, int dimension);

  std::vector<Solution> solutions_;
  int dimension_ = 0;
};

/// Draws from N(mu, sigma^2) where sigma is the standard deviation.
/// sigma == 0 returns mu exactly.
double sample_gaussian(RandomSource& rng, double mu, double sigma);

}  // namespace antopt
