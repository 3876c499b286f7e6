#include "antopt/distance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "antopt/errors.hpp"

namespace antopt {

DistanceMetric DistanceMetric::minkowski(double order) {
  if (!(order > 0.0) || !std::isfinite(order)) {
    throw ConfigError("minkowski: order must be positive");
  }
  return {Kind::Minkowski, order};
}

DistanceMetric DistanceMetric::from_name(std::string_view name) {
  if (name == "manhattan") return manhattan();
  if (name == "euclidean") return euclidean();
  if (name == "squared-euclidean") return squared_euclidean();
  if (name == "chebychev") return chebychev();
  if (name == "bray-curtis") return bray_curtis();
  if (name == "canberra") return canberra();
  constexpr std::string_view prefix = "minkowski-";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string order_text(name.substr(prefix.size()));
    std::size_t used = 0;
    double order = 0.0;
    try {
      order = std::stod(order_text, &used);
    } catch (const std::exception&) {
      throw ConfigError("unknown distance metric: " + std::string(name));
    }
    if (used != order_text.size()) {
      throw ConfigError("unknown distance metric: " + std::string(name));
    }
    return minkowski(order);
  }
  throw ConfigError("unknown distance metric: " + std::string(name));
}

std::string DistanceMetric::name() const {
  switch (kind) {
    case Kind::SquaredEuclidean: return "squared-euclidean";
    case Kind::Chebychev: return "chebychev";
    case Kind::BrayCurtis: return "bray-curtis";
    case Kind::Canberra: return "canberra";
    case Kind::Minkowski: break;
  }
  if (order == 1.0) return "manhattan";
  if (order == 2.0) return "euclidean";
  std::ostringstream out;
  out << "minkowski-" << order;
  return out.str();
}

const std::array<DistanceMetric, 10>& DistanceMetric::family() {
  static const std::array<DistanceMetric, 10> metrics = {
      DistanceMetric::minkowski(0.5), DistanceMetric::manhattan(),
      DistanceMetric::euclidean(),    DistanceMetric::minkowski(3.0),
      DistanceMetric::minkowski(4.0), DistanceMetric::minkowski(5.0),
      DistanceMetric::squared_euclidean(), DistanceMetric::chebychev(),
      DistanceMetric::bray_curtis(),  DistanceMetric::canberra()};
  return metrics;
}

double per_dim_distance(const Archive& archive, std::size_t selected,
                        std::size_t dim, const DistanceMetric& metric,
                        DistanceDiagnostics* diagnostics) {
  const std::size_t k = archive.size();
  if (k < 2) throw ArgumentError("per_dim_distance: archive must have k >= 2");
  if (selected >= k) throw ArgumentError("per_dim_distance: selected out of range");
  if (dim >= static_cast<std::size_t>(archive.dimension())) {
    throw ArgumentError("per_dim_distance: dimension out of range");
  }

  const double y = archive.value(selected, dim);
  const double norm = static_cast<double>(k - 1);

  switch (metric.kind) {
    case DistanceMetric::Kind::Minkowski: {
      double sum = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        sum += std::pow(std::abs(archive.value(r, dim) - y), metric.order);
      }
      return std::pow(sum, 1.0 / metric.order) / norm;
    }
    case DistanceMetric::Kind::SquaredEuclidean: {
      double sum = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        const double d = archive.value(r, dim) - y;
        sum += d * d;
      }
      return sum / norm;
    }
    case DistanceMetric::Kind::Chebychev: {
      double worst = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        worst = std::max(worst, std::abs(archive.value(r, dim) - y));
      }
      return worst / norm;
    }
    case DistanceMetric::Kind::BrayCurtis: {
      double num = 0.0, den = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        num += std::abs(archive.value(r, dim) - y);
        den += archive.value(r, dim) + y;
      }
      // Magnitude keeps the result nonnegative when the column sums negative;
      // a vanishing denominator is degenerate and maps to zero spread.
      if (std::abs(den) < 1e-15) {
        if (diagnostics) ++diagnostics->degenerate_bray_curtis;
        return 0.0;
      }
      return (num / std::abs(den)) / norm;
    }
    case DistanceMetric::Kind::Canberra: {
      double sum = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        const double x = archive.value(r, dim);
        const double den = std::abs(x) + std::abs(y);
        if (den > 0.0) sum += std::abs(x - y) / den;
      }
      return sum / norm;
    }
  }
  throw ArgumentError("per_dim_distance: unknown metric");
}

EvaporationRate::EvaporationRate(double xi) : xi_(xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw ConfigError("evaporation rate: xi must be positive and finite");
  }
}

double sigma(double distance, EvaporationRate xi) {
  return xi.value() * distance;
}

}  // namespace antopt
