#include <cmath>
#include <span>
#include <vector>

#include <doctest.h>

#include "antopt/archive.hpp"
#include "antopt/errors.hpp"
#include "antopt/random.hpp"

using namespace antopt;

namespace {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

Archive make_archive(int k, int n, std::uint64_t seed) {
  RandomSource rng(seed);
  return Archive::init(k, n, Interval{-5.0, 5.0}, sphere, rng);
}

}  // namespace

TEST_CASE("init fills k solutions inside bounds, sorted ascending") {
  Archive archive = make_archive(10, 3, 21);
  CHECK(archive.size() == 10);
  CHECK(archive.dimension() == 3);
  for (std::size_t j = 0; j < archive.size(); ++j) {
    const Solution& s = archive.at(j);
    CHECK(s.variables.size() == 3);
    for (double v : s.variables) {
      CHECK(v >= -5.0);
      CHECK(v < 5.0);
    }
    CHECK(s.fitness == sphere(s.variables));
    if (j > 0) CHECK(archive.at(j - 1).fitness <= s.fitness);
  }
}

TEST_CASE("init rejects bad shapes and bounds") {
  RandomSource rng(1);
  const Interval bounds{-1.0, 1.0};
  CHECK_THROWS_AS(Archive::init(1, 1, bounds, sphere, rng), ConfigError);
  CHECK_THROWS_AS(Archive::init(5, 0, bounds, sphere, rng), ConfigError);
  CHECK_THROWS_AS(Archive::init(5, 1, Interval{2.0, -2.0}, sphere, rng),
                  ConfigError);
  CHECK_THROWS_AS(Archive::init(5, 1, Interval{1.0, 1.0}, sphere, rng),
                  ConfigError);
}

TEST_CASE("init surfaces non-finite objective values") {
  RandomSource rng(3);
  auto bad = [](std::span<const double>) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_THROWS_AS(Archive::init(4, 1, Interval{-1.0, 1.0}, bad, rng),
                  EvaluationError);
}

TEST_CASE("update merges, sorts, truncates") {
  Archive archive = make_archive(3, 1, 8);
  // Overwrite with a known state through update: the sphere never goes
  // negative, so these displace every random incumbent.
  std::vector<Solution> takeover{{{0.0}, -3.0}, {{0.0}, -2.0}, {{0.0}, -1.0}};
  archive.update(std::move(takeover));
  CHECK(archive.at(0).fitness == -3.0);
  CHECK(archive.at(1).fitness == -2.0);
  CHECK(archive.at(2).fitness == -1.0);

  std::vector<Solution> incoming{{{0.0}, -3.5}, {{0.0}, 4.0}};
  archive.update(std::move(incoming));
  CHECK(archive.size() == 3);
  CHECK(archive.at(0).fitness == -3.5);
  CHECK(archive.at(1).fitness == -3.0);
  CHECK(archive.at(2).fitness == -2.0);
}

TEST_CASE("update keeps incumbents on fitness ties") {
  Archive archive = make_archive(2, 1, 8);
  std::vector<Solution> takeover{{{1.0}, -5.0}, {{2.0}, -4.0}};
  archive.update(std::move(takeover));
  std::vector<Solution> tied{{{3.0}, -5.0}};
  archive.update(std::move(tied));
  // Incumbent with equal fitness ranks ahead of the newcomer.
  CHECK(archive.at(0).variables[0] == 1.0);
  CHECK(archive.at(1).fitness == -5.0);
  CHECK(archive.at(1).variables[0] == 3.0);
}

TEST_CASE("update rejects malformed candidates") {
  Archive archive = make_archive(3, 2, 12);
  std::vector<Solution> wrong_dim{{{1.0}, 1.0}};
  CHECK_THROWS_AS(archive.update(std::move(wrong_dim)), ArgumentError);
  std::vector<Solution> bad_fit{
      {{1.0, 1.0}, std::numeric_limits<double>::quiet_NaN()}};
  CHECK_THROWS_AS(archive.update(std::move(bad_fit)), ArgumentError);
  std::vector<Solution> bad_var{
      {{std::numeric_limits<double>::infinity(), 0.0}, 1.0}};
  CHECK_THROWS_AS(archive.update(std::move(bad_var)), ArgumentError);
}

TEST_CASE("best returns rank one") {
  Archive archive = make_archive(5, 2, 33);
  CHECK(archive.best().fitness == archive.at(0).fitness);
  CHECK(archive.value(0, 0) == archive.at(0).variables[0]);
  CHECK(archive.value(4, 1) == archive.at(4).variables[1]);
  CHECK_THROWS_AS(archive.at(5), ArgumentError);
  CHECK_THROWS_AS(archive.value(0, 2), ArgumentError);
}
