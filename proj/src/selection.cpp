#include "antopt/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "antopt/errors.hpp"

namespace antopt {

SelectionMethod selection_method_from_name(std::string_view name) {
  if (name == "rws") return SelectionMethod::Rws;
  if (name == "sus") return SelectionMethod::Sus;
  if (name == "bhs") return SelectionMethod::Bhs;
  throw ConfigError("unknown selection method: " + std::string(name));
}

ProbabilityBasis probability_basis_from_name(std::string_view name) {
  if (name == "weight") return ProbabilityBasis::Weight;
  if (name == "fitval") return ProbabilityBasis::FitVal;
  throw ConfigError("unknown probability basis: " + std::string(name));
}

std::string selection_method_name(SelectionMethod method) {
  switch (method) {
    case SelectionMethod::Rws: return "rws";
    case SelectionMethod::Sus: return "sus";
    case SelectionMethod::Bhs: return "bhs";
  }
  return "?";
}

std::string probability_basis_name(ProbabilityBasis basis) {
  return basis == ProbabilityBasis::Weight ? "weight" : "fitval";
}

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw ArgumentError("probability vector: empty");
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0)) {
      throw ArgumentError("probability vector: negative or NaN entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ArgumentError("probability vector: entries do not sum to 1");
  }
}

std::vector<double> rank_weights(std::size_t k, double q) {
  if (k < 1) throw ConfigError("rank_weights: k must be at least 1");
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw ConfigError("rank_weights: q must be positive");
  }
  const double kd = static_cast<double>(k);
  const double norm = 1.0 / (q * kd * std::sqrt(2.0 * std::numbers::pi));
  const double denom = 2.0 * q * q * kd * kd;
  std::vector<double> w(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double rank_offset = static_cast<double>(j);  // rank - 1
    w[j] = norm * std::exp(-(rank_offset * rank_offset) / denom);
  }
  return w;
}

ProbabilityVector probabilities_from_weights(std::span<const double> weights) {
  if (weights.empty()) throw ArgumentError("probabilities: empty weight vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ArgumentError("probabilities: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw ArgumentError("probabilities: degenerate all-zero weight vector");
  }
  std::vector<double> p(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) p[j] = weights[j] / sum;
  return ProbabilityVector(std::move(p));
}

ProbabilityVector probabilities_from_fitness(
    std::span<const double> fitnesses) {
  if (fitnesses.empty()) throw ArgumentError("probabilities: empty fitness vector");
  for (double f : fitnesses) {
    if (!std::isfinite(f)) {
      throw ArgumentError("probabilities: non-finite fitness");
    }
  }
  const std::size_t k = fitnesses.size();
  const auto [lo, hi] = std::minmax_element(fitnesses.begin(), fitnesses.end());
  const double fmin = *lo, fmax = *hi;
  if (fmin == fmax) {
    return ProbabilityVector(
        std::vector<double>(k, 1.0 / static_cast<double>(k)));
  }
  const double delta = (fmax - fmin) / static_cast<double>(k);
  std::vector<double> shifted(k);
  double sum = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    shifted[j] = fmax - fitnesses[j] + delta;
    sum += shifted[j];
  }
  for (double& v : shifted) v /= sum;
  return ProbabilityVector(std::move(shifted));
}

std::size_t rws_select(const ProbabilityVector& p, RandomSource& rng) {
  const double u = rng.uniform01();
  double acc = 0.0;
  const std::size_t k = p.size();
  for (std::size_t j = 0; j + 1 < k; ++j) {
    acc += p[j];
    if (u < acc) return j;
  }
  return k - 1;
}

std::vector<std::size_t> sus_sequence(const ProbabilityVector& p,
                                      std::size_t count, RandomSource& rng) {
  if (count < 1) throw ArgumentError("sus_sequence: count must be at least 1");
  const double step = 1.0 / static_cast<double>(count);
  const double start = rng.uniform01() * step;
  std::vector<std::size_t> out;
  out.reserve(count);
  // Pointers are increasing, so one cumulative sweep suffices.
  std::size_t j = 0;
  double acc = p[0];
  for (std::size_t i = 0; i < count; ++i) {
    const double pointer = start + static_cast<double>(i) * step;
    while (pointer >= acc && j + 1 < p.size()) {
      ++j;
      acc += p[j];
    }
    out.push_back(j);
  }
  return out;
}

std::size_t bhs_select(const ProbabilityVector& p, RandomSource& rng) {
  constexpr std::size_t budget = 1'000'000;
  const std::size_t k = p.size();
  std::size_t draws = 0;
  while (draws < budget) {
    for (std::size_t j = 0; j < k && draws < budget; ++j) {
      ++draws;
      if (rng.uniform01() < p[j]) return j;
    }
  }
  return 0;
}

namespace {

ProbabilityVector make_probabilities(const SelectionSpec& spec,
                                     std::span<const double> fitnesses) {
  if (spec.basis == ProbabilityBasis::Weight) {
    return probabilities_from_weights(rank_weights(fitnesses.size(), spec.q));
  }
  return probabilities_from_fitness(fitnesses);
}

}  // namespace

IterationSelector::IterationSelector(const SelectionSpec& spec,
                                     std::span<const double> archive_fitnesses,
                                     std::size_t draws, RandomSource& rng)
    : method_(spec.method), p_(make_probabilities(spec, archive_fitnesses)) {
  if (method_ == SelectionMethod::Sus && draws > 0) {
    pending_ = sus_sequence(p_, draws, rng);
  }
}

std::size_t IterationSelector::next(RandomSource& rng) {
  switch (method_) {
    case SelectionMethod::Rws:
      return rws_select(p_, rng);
    case SelectionMethod::Bhs:
      return bhs_select(p_, rng);
    case SelectionMethod::Sus:
      if (cursor_ >= pending_.size()) {
        throw ArgumentError("selector: SUS pointer sequence exhausted");
      }
      return pending_[cursor_++];
  }
  throw ArgumentError("selector: unknown method");
}

}  // namespace antopt
