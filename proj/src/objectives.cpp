#include "antopt/objectives.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "antopt/errors.hpp"

namespace antopt {

namespace {

double ackley(std::span<const double> x) {
  constexpr double a = 20.0, b = 0.2;
  const double c = 2.0 * std::numbers::pi;
  const double d = static_cast<double>(x.size());
  double sum_sq = 0.0, sum_cos = 0.0;
  for (double v : x) {
    sum_sq += v * v;
    sum_cos += std::cos(c * v);
  }
  return -a * std::exp(-b * std::sqrt(sum_sq / d)) - std::exp(sum_cos / d) +
         a + std::numbers::e;
}

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double sum_square(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += static_cast<double>(i + 1) * x[i] * x[i];
  }
  return sum;
}

double dixon_price(std::span<const double> x, FormulaVariant variant) {
  const double head = (x[0] - 1.0) * (x[0] - 1.0);
  if (variant == FormulaVariant::AsWritten) {
    // (x1 - 1)^2 * sum_i i (2 x_i^2 - x_i - 1)^2: any point with x1 = 1
    // is a global minimum.
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double t = 2.0 * x[i] * x[i] - x[i] - 1.0;
      sum += static_cast<double>(i + 1) * t * t;
    }
    return head * sum;
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double t = 2.0 * x[i] * x[i] - x[i - 1];
    sum += static_cast<double>(i + 1) * t * t;
  }
  return head + sum;
}

double rosenbrock(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

double rastrigin(std::span<const double> x) {
  const double c = 2.0 * std::numbers::pi;
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) sum += v * v - 10.0 * std::cos(c * v);
  return sum;
}

double griewank(std::span<const double> x) {
  double sum = 0.0, prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - prod + 1.0;
}

double zakharov(std::span<const double> x, FormulaVariant variant) {
  double sum_sq = 0.0, weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum_sq += x[i] * x[i];
    weighted += 0.5 * static_cast<double>(i + 1) * x[i];
  }
  const double w2 = weighted * weighted;
  if (variant == FormulaVariant::AsWritten) return sum_sq + 2.0 * w2;
  return sum_sq + w2 + w2 * w2;
}

std::string format_point(std::span<const double> x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    out << x[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

Interval benchmark_bounds(ObjectiveId id) {
  switch (id) {
    case ObjectiveId::Ackley: return {-15.0, 30.0};
    case ObjectiveId::Sphere: return {-50.0, 100.0};
    case ObjectiveId::SumSquare: return {-10.0, 10.0};
    case ObjectiveId::DixonPrice: return {-10.0, 10.0};
    case ObjectiveId::Rosenbrock: return {-5.0, 10.0};
    case ObjectiveId::Rastrigin: return {-5.12, 5.12};
    case ObjectiveId::Griewank: return {-600.0, 600.0};
    case ObjectiveId::Zakharov: return {-10.0, 10.0};
    case ObjectiveId::ExternalRmse: break;
  }
  throw ConfigError("benchmark_bounds: not a built-in benchmark");
}

ObjectiveSpec make_objective(ObjectiveId id, int dimension,
                             FormulaVariant variant) {
  if (dimension < 1) throw ConfigError("objective: dimension must be >= 1");
  ObjectiveSpec spec;
  spec.id = id;
  spec.dimension = dimension;
  spec.bounds = benchmark_bounds(id);
  spec.optimum_value = 0.0;
  spec.variant = variant;
  return spec;
}

double evaluate(const ObjectiveSpec& spec, std::span<const double> x) {
  if (static_cast<int>(x.size()) != spec.dimension) {
    std::ostringstream msg;
    msg << "evaluate: point has " << x.size() << " entries, expected "
        << spec.dimension;
    throw ArgumentError(msg.str());
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw ArgumentError("evaluate: non-finite coordinate in " +
                          format_point(x));
    }
  }
  double value = 0.0;
  switch (spec.id) {
    case ObjectiveId::Ackley: value = ackley(x); break;
    case ObjectiveId::Sphere: value = sphere(x); break;
    case ObjectiveId::SumSquare: value = sum_square(x); break;
    case ObjectiveId::DixonPrice: value = dixon_price(x, spec.variant); break;
    case ObjectiveId::Rosenbrock: value = rosenbrock(x); break;
    case ObjectiveId::Rastrigin: value = rastrigin(x); break;
    case ObjectiveId::Griewank: value = griewank(x); break;
    case ObjectiveId::Zakharov: value = zakharov(x, spec.variant); break;
    case ObjectiveId::ExternalRmse:
      throw ConfigError("evaluate: rmse objective takes residuals, use rmse()");
  }
  if (!std::isfinite(value)) {
    throw EvaluationError("evaluate: " + objective_name(spec.id) +
                          " overflowed to non-finite at " + format_point(x));
  }
  return value;
}

double rmse(std::span<const double> errors) {
  if (errors.empty()) throw ArgumentError("rmse: empty error vector");
  double sum = 0.0;
  for (double e : errors) {
    if (!std::isfinite(e)) throw ArgumentError("rmse: non-finite entry");
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(errors.size()));
}

ObjectiveId objective_from_name(std::string_view name) {
  if (name == "ackley") return ObjectiveId::Ackley;
  if (name == "sphere") return ObjectiveId::Sphere;
  if (name == "sumsquare") return ObjectiveId::SumSquare;
  if (name == "dixonprice") return ObjectiveId::DixonPrice;
  if (name == "rosenbrock") return ObjectiveId::Rosenbrock;
  if (name == "rastrigin") return ObjectiveId::Rastrigin;
  if (name == "griewank") return ObjectiveId::Griewank;
  if (name == "zakharov") return ObjectiveId::Zakharov;
  throw ConfigError("unknown function: " + std::string(name));
}

std::string objective_name(ObjectiveId id) {
  switch (id) {
    case ObjectiveId::Ackley: return "ackley";
    case ObjectiveId::Sphere: return "sphere";
    case ObjectiveId::SumSquare: return "sumsquare";
    case ObjectiveId::DixonPrice: return "dixonprice";
    case ObjectiveId::Rosenbrock: return "rosenbrock";
    case ObjectiveId::Rastrigin: return "rastrigin";
    case ObjectiveId::Griewank: return "griewank";
    case ObjectiveId::Zakharov: return "zakharov";
    case ObjectiveId::ExternalRmse: return "external-rmse";
  }
  return "?";
}

FormulaVariant formula_variant_from_name(std::string_view name) {
  if (name == "paper") return FormulaVariant::AsWritten;
  if (name == "standard") return FormulaVariant::Standard;
  throw ConfigError("unknown formula variant: " + std::string(name));
}

std::string formula_variant_name(FormulaVariant variant) {
  return variant == FormulaVariant::AsWritten ? "paper" : "standard";
}

}  // namespace antopt
