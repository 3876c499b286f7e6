#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antopt/random.hpp"

namespace antopt {

enum class SelectionMethod { Rws, Sus, Bhs };
enum class ProbabilityBasis { Weight, FitVal };

/// One of the six selection strategies: method x probability basis.
/// q is the rank-weight spread parameter (Weight basis only).
struct SelectionSpec {
  SelectionMethod method = SelectionMethod::Rws;
  ProbabilityBasis basis = ProbabilityBasis::FitVal;
  double q = 0.1;
};

SelectionMethod selection_method_from_name(std::string_view name);
ProbabilityBasis probability_basis_from_name(std::string_view name);
std::string selection_method_name(SelectionMethod method);
std::string probability_basis_name(ProbabilityBasis basis);

/// Selection probabilities over archive ranks: all entries nonnegative and
/// summing to 1 within 1e-12 (validated at construction).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  double operator[](std::size_t j) const { return p_[j]; }
  std::size_t size() const { return p_.size(); }
  std::span<const double> values() const { return p_; }

 private:
  std::vector<double> p_;
};

/// Gaussian-of-rank weights: w_j = exp(-(j-1)^2 / (2 q^2 k^2)) / (q k sqrt(2 pi))
/// for ranks j = 1..k. Strictly decreasing; independent of fitness values.
std::vector<double> rank_weights(std::size_t k, double q);

/// Normalizes positive weights into probabilities p_j = w_j / sum(w).
ProbabilityVector probabilities_from_weights(std::span<const double> weights);

/// Minimization-sense probabilities from raw objective values:
/// p_j = (f_max - f_j + delta) / sum_r(f_max - f_r + delta) with
/// delta = (f_max - f_min) / k, or uniform 1/k when all values are equal.
/// The additive floor keeps every member selectable; lower fitness means
/// higher probability.
ProbabilityVector probabilities_from_fitness(std::span<const double> fitnesses);

/// Roulette wheel: inverts one uniform draw against the cumulative
/// probability segments. Floating-point residue goes to the last segment.
std::size_t rws_select(const ProbabilityVector& p, RandomSource& rng);

/// Stochastic universal sampling (Baker): one uniform draw in [0, 1/count)
/// seeds count pointers spaced exactly 1/count apart; each pointer picks the
/// index whose cumulative segment contains it. Returned in pointer order, so
/// indices are nondecreasing. Per-index counts never differ from
/// count * p_j by more than 1.
std::vector<std::size_t> sus_sequence(const ProbabilityVector& p,
                                      std::size_t count, RandomSource& rng);

/// Bernoulli scan: walks j = 1..k drawing a fresh uniform R per index and
/// accepts the first j with R < p_j; restarts the scan when a full pass
/// accepts nothing. After 10^6 draws without acceptance returns index 0
/// (the best rank). Concentrates mass on top ranks much more strongly than
/// roulette selection under the same p.
std::size_t bhs_select(const ProbabilityVector& p, RandomSource& rng);

/// One record per selection event; indices are 1-based as exported.
struct SelectionRecord {
  int iteration = 0;
  int solution_index = 0;  // l in 1..m
  int variable_index = 0;  // i in 1..n
  int selected_rank = 0;   // 1..k, 1 = best
};
using SelectionTrace = std::vector<SelectionRecord>;

/// Per-iteration selection state. Computes the probability vector for the
/// current archive fitnesses once, and for SUS pre-generates the whole
/// pointer sweep (length = draws, one per selection the iteration will make)
/// which next() then consumes in order. RWS and BHS draw on demand.
class IterationSelector {
 public:
  IterationSelector(const SelectionSpec& spec,
                    std::span<const double> archive_fitnesses,
                    std::size_t draws, RandomSource& rng);

  std::size_t next(RandomSource& rng);

  const ProbabilityVector& probabilities() const { return p_; }

 private:
  SelectionMethod method_;
  ProbabilityVector p_;
  std::vector<std::size_t> pending_;  // SUS only
  std::size_t cursor_ = 0;
};

}  // namespace antopt
