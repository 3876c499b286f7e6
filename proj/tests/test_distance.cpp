#include <cmath>
#include <span>
#include <vector>

#include <doctest.h>

#include "antopt/archive.hpp"
#include "antopt/distance.hpp"
#include "antopt/errors.hpp"
#include "antopt/random.hpp"

using namespace antopt;

namespace {

double sum_abs(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += std::fabs(v);
  return s;
}

// Build an archive whose columns are fully under test control: seed the
// archive randomly, then replace its contents through update with
// far-better fitness values in the order given.
Archive fixed_archive(const std::vector<std::vector<double>>& rows) {
  const int k = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows[0].size());
  RandomSource rng(1);
  Archive archive = Archive::init(k, n, Interval{-1e6, 1e6}, sum_abs, rng);
  std::vector<Solution> takeover;
  for (int j = 0; j < k; ++j) {
    takeover.push_back({rows[j], -1e9 + j});
  }
  archive.update(std::move(takeover));
  return archive;
}

// Reference implementation, written flat for cross-checking.
double oracle(const std::vector<std::vector<double>>& rows, std::size_t sel,
              std::size_t dim, const DistanceMetric& metric) {
  const std::size_t k = rows.size();
  const double y = rows[sel][dim];
  double acc = 0.0;
  double max_term = 0.0;
  double num = 0.0, den = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    const double x = rows[r][dim];
    switch (metric.kind) {
      case DistanceMetric::Kind::Minkowski:
        acc += std::pow(std::fabs(x - y), metric.order);
        break;
      case DistanceMetric::Kind::SquaredEuclidean:
        acc += (x - y) * (x - y);
        break;
      case DistanceMetric::Kind::Chebychev:
        max_term = std::max(max_term, std::fabs(x - y));
        break;
      case DistanceMetric::Kind::BrayCurtis:
        num += std::fabs(x - y);
        den += x + y;
        break;
      case DistanceMetric::Kind::Canberra: {
        const double d = std::fabs(x) + std::fabs(y);
        if (d != 0.0) acc += std::fabs(x - y) / d;
        break;
      }
    }
  }
  const double scale = static_cast<double>(k - 1);
  switch (metric.kind) {
    case DistanceMetric::Kind::Minkowski:
      return std::pow(acc, 1.0 / metric.order) / scale;
    case DistanceMetric::Kind::SquaredEuclidean:
      return acc / scale;
    case DistanceMetric::Kind::Chebychev:
      return max_term / scale;
    case DistanceMetric::Kind::BrayCurtis:
      if (std::fabs(den) < 1e-15) return 0.0;
      return (num / std::fabs(den)) / scale;
    case DistanceMetric::Kind::Canberra:
      return acc / scale;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("pinned column distances") {
  const std::vector<std::vector<double>> rows{{1.0}, {2.0}, {3.0}};
  Archive archive = fixed_archive(rows);
  // Column {1,2,3}, pivot 2: mean absolute deviation (|1-2|+|0|+|3-2|)/2 = 1.
  CHECK(per_dim_distance(archive, 1, 0, DistanceMetric::manhattan()) == 1.0);
  // Squared: ((1)^2+(0)^2+(1)^2)/2 = 1.
  CHECK(per_dim_distance(archive, 1, 0, DistanceMetric::squared_euclidean()) ==
        1.0);
  // Chebychev: max(1,0,1)/2 = 0.5.
  CHECK(per_dim_distance(archive, 1, 0, DistanceMetric::chebychev()) == 0.5);
  // Euclidean: sqrt(2)/2.
  CHECK(per_dim_distance(archive, 1, 0, DistanceMetric::euclidean()) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  // Bray-Curtis: (1+0+1)/|1+2 + 2+2 + 3+2| / 2 = 2/12/2... careful: the
  // denominator sums x_r + y over r: (1+2)+(2+2)+(3+2)=12, so 2/12/2 = 1/12.
  CHECK(per_dim_distance(archive, 1, 0, DistanceMetric::bray_curtis()) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  // Canberra: (1/3 + 0 + 1/5)/2 = 4/15.
  CHECK(per_dim_distance(archive, 1, 0, DistanceMetric::canberra()) ==
        doctest::Approx((1.0 / 3.0 + 0.2) / 2.0).epsilon(1e-15));
}

TEST_CASE("random archives agree with the flat oracle") {
  RandomSource rng(909);
  const auto metrics = DistanceMetric::family();
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 2 + static_cast<int>(rng.uniform01() * 5);  // 2..6
    const int n = 1 + static_cast<int>(rng.uniform01() * 4);  // 1..4
    std::vector<std::vector<double>> rows(k, std::vector<double>(n));
    for (auto& row : rows) {
      for (double& v : row) v = rng.uniform(-10.0, 10.0);
    }
    Archive archive = fixed_archive(rows);
    const std::size_t sel = static_cast<std::size_t>(rng.uniform01() * k);
    const std::size_t dim = static_cast<std::size_t>(rng.uniform01() * n);
    for (const DistanceMetric& metric : metrics) {
      const double got = per_dim_distance(archive, sel, dim, metric);
      const double want = oracle(rows, sel, dim, metric);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("distances are nonnegative and zero against self-only variation") {
  RandomSource rng(311);
  const auto metrics = DistanceMetric::family();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<double>> rows(4, std::vector<double>(2));
    for (auto& row : rows) {
      for (double& v : row) v = rng.uniform(-100.0, 100.0);
    }
    Archive archive = fixed_archive(rows);
    for (const DistanceMetric& metric : metrics) {
      CHECK(per_dim_distance(archive, 2, 1, metric) >= 0.0);
    }
  }
  // Identical column: every metric reports zero spread.
  const std::vector<std::vector<double>> flat{{5.0, 1.0}, {5.0, 2.0},
                                              {5.0, 3.0}};
  Archive archive = fixed_archive(flat);
  for (const DistanceMetric& metric : metrics) {
    CHECK(per_dim_distance(archive, 0, 0, metric) == 0.0);
  }
}

TEST_CASE("translation invariance for difference-based metrics") {
  const std::vector<std::vector<double>> rows{{1.5}, {-2.0}, {4.0}, {0.5}};
  std::vector<std::vector<double>> shifted = rows;
  for (auto& row : shifted) row[0] += 37.25;
  Archive a = fixed_archive(rows);
  Archive b = fixed_archive(shifted);
  const std::vector<DistanceMetric> invariant{
      DistanceMetric::minkowski(0.5), DistanceMetric::manhattan(),
      DistanceMetric::euclidean(),    DistanceMetric::minkowski(3.0),
      DistanceMetric::minkowski(4.0), DistanceMetric::minkowski(5.0),
      DistanceMetric::squared_euclidean(), DistanceMetric::chebychev()};
  for (const DistanceMetric& metric : invariant) {
    CHECK(per_dim_distance(a, 1, 0, metric) ==
          doctest::Approx(per_dim_distance(b, 1, 0, metric)).epsilon(1e-12));
  }
}

TEST_CASE("homogeneity of degree one for Minkowski and Chebychev") {
  const std::vector<std::vector<double>> rows{{1.5}, {-2.0}, {4.0}};
  std::vector<std::vector<double>> scaled = rows;
  for (auto& row : scaled) row[0] *= 3.0;
  Archive a = fixed_archive(rows);
  Archive b = fixed_archive(scaled);
  for (const DistanceMetric& metric :
       {DistanceMetric::manhattan(), DistanceMetric::euclidean(),
        DistanceMetric::minkowski(0.5), DistanceMetric::chebychev()}) {
    CHECK(3.0 * per_dim_distance(a, 0, 0, metric) ==
          doctest::Approx(per_dim_distance(b, 0, 0, metric)).epsilon(1e-12));
  }
  // Squared Euclidean scales with the square instead.
  CHECK(9.0 * per_dim_distance(a, 0, 0, DistanceMetric::squared_euclidean()) ==
        doctest::Approx(
            per_dim_distance(b, 0, 0, DistanceMetric::squared_euclidean()))
            .epsilon(1e-12));
}

TEST_CASE("degenerate Bray-Curtis column reports zero and counts the event") {
  // Column sums to zero around the pivot: x = {1, -1, 0}, pivot 0 -> the
  // denominator (1+0)+(-1+0)+(0+0) = 0.
  const std::vector<std::vector<double>> rows{{0.0}, {1.0}, {-1.0}};
  Archive archive = fixed_archive(rows);
  DistanceDiagnostics diagnostics;
  const double d = per_dim_distance(archive, 0, 0, DistanceMetric::bray_curtis(),
                                    &diagnostics);
  CHECK(d == 0.0);
  CHECK(diagnostics.degenerate_bray_curtis == 1);
}

TEST_CASE("Canberra ignores zero-over-zero terms") {
  const std::vector<std::vector<double>> rows{{0.0}, {0.0}, {2.0}};
  Archive archive = fixed_archive(rows);
  // Terms vs pivot 0: |0-0|/(0+0) skipped, |0-0|/0 skipped, |2-0|/2 = 1.
  CHECK(per_dim_distance(archive, 0, 0, DistanceMetric::canberra()) ==
        doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("metric names round-trip") {
  const auto metrics = DistanceMetric::family();
  REQUIRE(metrics.size() == 10);
  const std::vector<std::string> names{
      "minkowski-0.5", "manhattan",         "euclidean", "minkowski-3",
      "minkowski-4",   "minkowski-5",       "squared-euclidean",
      "chebychev",     "bray-curtis",       "canberra"};
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    CHECK(metrics[i].name() == names[i]);
    const DistanceMetric parsed = DistanceMetric::from_name(names[i]);
    CHECK(parsed.kind == metrics[i].kind);
    if (parsed.kind == DistanceMetric::Kind::Minkowski) {
      CHECK(parsed.order == metrics[i].order);
    }
  }
  CHECK_THROWS_AS(DistanceMetric::from_name("mahalanobis"), ConfigError);
  CHECK_THROWS_AS(DistanceMetric::from_name("minkowski-x"), ConfigError);
  CHECK_THROWS_AS(DistanceMetric::from_name("minkowski--2"), ConfigError);
  CHECK_THROWS_AS(DistanceMetric::minkowski(0.0), ConfigError);
}

TEST_CASE("spread from distance and evaporation rate") {
  CHECK(sigma(2.4, EvaporationRate(0.85)) ==
        doctest::Approx(2.04).epsilon(1e-15));
  CHECK(sigma(0.0, EvaporationRate(0.5)) == 0.0);
  CHECK_THROWS_AS(EvaporationRate(0.0), ConfigError);
  CHECK_THROWS_AS(EvaporationRate(-0.5), ConfigError);
  CHECK_THROWS_AS(EvaporationRate(std::numeric_limits<double>::infinity()),
                  ConfigError);
}
