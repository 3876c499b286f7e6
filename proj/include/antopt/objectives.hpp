#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "antopt/archive.hpp"

namespace antopt {

enum class ObjectiveId {
  Ackley,
  Sphere,
  SumSquare,
  DixonPrice,
  Rosenbrock,
  Rastrigin,
  Griewank,
  Zakharov,
  ExternalRmse,
};

/// Zakharov and Dixon-Price exist in two algebraic forms; see evaluate().
/// AsWritten is the default.
enum class FormulaVariant { AsWritten, Standard };

struct ObjectiveSpec {
  ObjectiveId id = ObjectiveId::Sphere;
  int dimension = 1;
  Interval bounds{};
  double optimum_value = 0.0;
  FormulaVariant variant = FormulaVariant::AsWritten;
};

/// The benchmark suite in its customary order.
inline constexpr std::array<ObjectiveId, 8> benchmark_suite = {
    ObjectiveId::Ackley,     ObjectiveId::Sphere,    ObjectiveId::SumSquare,
    ObjectiveId::DixonPrice, ObjectiveId::Rosenbrock, ObjectiveId::Rastrigin,
    ObjectiveId::Griewank,   ObjectiveId::Zakharov};

/// Search bounds for a built-in benchmark function.
Interval benchmark_bounds(ObjectiveId id);

/// Builds a fully populated spec (bounds, optimum 0) for a built-in.
ObjectiveSpec make_objective(ObjectiveId id, int dimension,
                             FormulaVariant variant = FormulaVariant::AsWritten);

/// Evaluates spec at x. Throws ArgumentError on size or finiteness
/// violations of x, EvaluationError when the value overflows to non-finite.
double evaluate(const ObjectiveSpec& spec, std::span<const double> x);

inline double evaluate(const ObjectiveSpec& spec,
                       std::initializer_list<double> x) {
  return evaluate(spec, std::span<const double>(x.begin(), x.size()));
}

/// Root mean square error of a residual vector: sqrt(sum(e^2) / n).
double rmse(std::span<const double> errors);

ObjectiveId objective_from_name(std::string_view name);
std::string objective_name(ObjectiveId id);

FormulaVariant formula_variant_from_name(std::string_view name);
std::string formula_variant_name(FormulaVariant variant);

}  // namespace antopt
