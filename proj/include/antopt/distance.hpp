#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "antopt/archive.hpp"

namespace antopt {

/// One of the ten per-dimension distance definitions. Manhattan and
/// euclidean are the Minkowski orders 1 and 2 under their usual names.
struct DistanceMetric {
  enum class Kind { Minkowski, SquaredEuclidean, Chebychev, BrayCurtis, Canberra };

  Kind kind = Kind::SquaredEuclidean;
  double order = 2.0;  // Minkowski only

  static DistanceMetric minkowski(double order);
  static DistanceMetric manhattan() { return minkowski(1.0); }
  static DistanceMetric euclidean() { return minkowski(2.0); }
  static DistanceMetric squared_euclidean() { return {Kind::SquaredEuclidean, 0.0}; }
  static DistanceMetric chebychev() { return {Kind::Chebychev, 0.0}; }
  static DistanceMetric bray_curtis() { return {Kind::BrayCurtis, 0.0}; }
  static DistanceMetric canberra() { return {Kind::Canberra, 0.0}; }

  /// Accepts: minkowski-0.5, manhattan, euclidean, minkowski-3, minkowski-4,
  /// minkowski-5, squared-euclidean, chebychev, bray-curtis, canberra.
  static DistanceMetric from_name(std::string_view name);
  std::string name() const;

  /// The study family in table order: minkowski-0.5, manhattan, euclidean,
  /// minkowski-3, minkowski-4, minkowski-5, squared-euclidean, chebychev,
  /// bray-curtis, canberra.
  static const std::array<DistanceMetric, 10>& family();
};

/// Counters for degenerate-input events mapped to a defined result.
struct DistanceDiagnostics {
  std::uint64_t degenerate_bray_curtis = 0;
};

/// Average distance between variable i of the solution at rank `selected`
/// and variable i of every archive member, normalized by (k - 1). The
/// selected member's own term contributes 0. Bray-Curtis with denominator
/// magnitude below 1e-15 yields 0 and bumps the diagnostic counter.
double per_dim_distance(const Archive& archive, std::size_t selected,
                        std::size_t dim, const DistanceMetric& metric,
                        DistanceDiagnostics* diagnostics = nullptr);

/// Pheromone evaporation rate: the multiplier that turns a per-dimension
/// distance into the Gaussian sampling spread.
class EvaporationRate {
 public:
  explicit EvaporationRate(double xi);
  double value() const { return xi_; }

 private:
  double xi_;
};

/// Sampling spread: sigma = xi * D.
double sigma(double distance, EvaporationRate xi);

}  // namespace antopt
