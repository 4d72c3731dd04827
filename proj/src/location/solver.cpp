#include "location/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tropical/spectral.hpp"

namespace location {

namespace {

constexpr double kCaseTieTol = 1e-9;
constexpr double kExactTol = 1e-9;
constexpr double kProperTol = 1e-9;

void require_alpha(double alpha, const char* who) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": alpha outside [0, 1]");
  }
}

void require_finite(double v, const char* who) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(who) + ": coefficient not finite");
  }
}

// Point of the minimizer segment at parameter alpha, straight from the
// coefficients and the optimum.
Point segment_point(const Coefficients& co, double lambda, double alpha) {
  const double beta = 1.0 - alpha;
  const double x1 = alpha * (co.a - co.d) / 2.0 - beta * (co.b - co.c) / 2.0;
  const double x2 = (2.0 * alpha - 1.0) * lambda - alpha * (co.a + co.d) / 2.0 +
                    beta * (co.b + co.c) / 2.0;
  return {x1, x2};
}

CaseTag classify(const Coefficients& co) {
  const double diff = (co.a + co.b) - (co.c + co.d);
  if (diff > kCaseTieTol) return CaseTag::AB_DOMINANT;
  if (diff < -kCaseTieTol) return CaseTag::CD_DOMINANT;
  return CaseTag::TIE;
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::AB_DOMINANT:
      return "AB_DOMINANT";
    case CaseTag::CD_DOMINANT:
      return "CD_DOMINANT";
    case CaseTag::TIE:
      return "TIE";
  }
  throw std::logic_error("to_string: unknown case tag");
}

Point SolutionReport::point(double alpha) const {
  return {std::lerp(endpoint_alpha0[0], endpoint_alpha1[0], alpha),
          std::lerp(endpoint_alpha0[1], endpoint_alpha1[1], alpha)};
}

double rectilinear_distance(Point p, Point q) {
  return std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]);
}

tropical::Scalar rectilinear_distance_tropical(Point p, Point q) {
  using tropical::Scalar;
  const auto axis = [](double r, double s) {
    return Scalar{r - s} + Scalar{s - r};
  };
  return axis(p[0], q[0]) * axis(p[1], q[1]);
}

Coefficients unconstrained_coefficients(const std::vector<WeightedPoint>& points) {
  if (points.empty()) {
    throw std::invalid_argument(
        "unconstrained_coefficients: at least one point required");
  }
  const WeightedPoint& f = points.front();
  Coefficients co{f.w + f.r1 - f.r2, f.w - f.r1 + f.r2, f.w + f.r1 + f.r2,
                  f.w - f.r1 - f.r2};
  for (std::size_t i = 1; i < points.size(); ++i) {
    const WeightedPoint& p = points[i];
    co.a = std::max(co.a, p.w + p.r1 - p.r2);
    co.b = std::max(co.b, p.w - p.r1 + p.r2);
    co.c = std::max(co.c, p.w + p.r1 + p.r2);
    co.d = std::max(co.d, p.w - p.r1 - p.r2);
  }
  return co;
}

double lambda_from_coefficients(const Coefficients& co) {
  require_finite(co.a, "lambda_from_coefficients");
  require_finite(co.b, "lambda_from_coefficients");
  require_finite(co.c, "lambda_from_coefficients");
  require_finite(co.d, "lambda_from_coefficients");
  return std::max(co.a + co.b, co.c + co.d) / 2.0;
}

tropical::Matrix build_extended_matrix(const Coefficients& co) {
  using tropical::Scalar;
  tropical::Matrix m(3, 3);
  m(0, 1) = Scalar{co.a};
  m(1, 0) = Scalar{co.b};
  m(1, 2) = Scalar{co.c};
  m(2, 1) = Scalar{co.d};
  return m;
}

Coefficients merge_constraints(const Coefficients& co0, double lambda0,
                               const RotatedRectConstraint& cons) {
  const auto merged = [lambda0](double base, tropical::Scalar side) {
    const double normalized = base - lambda0;
    return side.is_zero() ? normalized : std::max(normalized, side.value());
  };
  return {merged(co0.a, cons.a1), merged(co0.b, cons.b1), merged(co0.c, cons.c1),
          merged(co0.d, cons.d1)};
}

SolutionReport solve_unconstrained(const std::vector<WeightedPoint>& points,
                                   double alpha) {
  require_alpha(alpha, "solve_unconstrained");
  if (points.size() < 2) {
    throw std::invalid_argument("solve_unconstrained: at least two points required");
  }
  const Coefficients co = unconstrained_coefficients(points);
  const double lambda = lambda_from_coefficients(co);

  SolutionReport report;
  report.lambda = lambda;
  report.endpoint_alpha0 = segment_point(co, lambda, 0.0);
  report.endpoint_alpha1 = segment_point(co, lambda, 1.0);
  report.exact = true;
  report.case_tag = classify(co);
  return report;
}

SolutionReport solve_constrained(const ProblemInstance& instance, double alpha) {
  require_alpha(alpha, "solve_constrained");
  if (!instance.constraint) return solve_unconstrained(instance.points, alpha);
  if (instance.points.size() < 2) {
    throw std::invalid_argument("solve_constrained: at least two points required");
  }
  const Coefficients co0 = unconstrained_coefficients(instance.points);
  const double lambda0 = lambda_from_coefficients(co0);
  const Coefficients co = merge_constraints(co0, lambda0, *instance.constraint);
  const double lambda = lambda_from_coefficients(co);

  SolutionReport report;
  report.lambda = lambda;
  report.endpoint_alpha0 = segment_point(co, lambda, 0.0);
  report.endpoint_alpha1 = segment_point(co, lambda, 1.0);
  report.exact = lambda <= kExactTol;
  report.case_tag = classify(co);
  report.lambda0 = lambda0;
  return report;
}

double evaluate_objective(const std::vector<WeightedPoint>& points, Point x) {
  double best = -std::numeric_limits<double>::infinity();
  for (const WeightedPoint& p : points) {
    best = std::max(best, std::abs(x[0] - p.r1) + std::abs(x[1] - p.r2) + p.w);
  }
  return best;
}

double evaluate_constraint(const RotatedRectConstraint& cons, Point x) {
  double best = -std::numeric_limits<double>::infinity();
  if (cons.a1.is_finite()) best = std::max(best, cons.a1.value() - x[0] + x[1]);
  if (cons.b1.is_finite()) best = std::max(best, cons.b1.value() + x[0] - x[1]);
  if (cons.c1.is_finite()) best = std::max(best, cons.c1.value() - x[0] - x[1]);
  if (cons.d1.is_finite()) best = std::max(best, cons.d1.value() + x[0] + x[1]);
  return best;
}

double evaluate_merged(const ProblemInstance& instance, Point x) {
  const double lambda0 =
      lambda_from_coefficients(unconstrained_coefficients(instance.points));
  const double phi0 = evaluate_objective(instance.points, x) - lambda0;
  if (!instance.constraint) return phi0;
  return std::max(phi0, evaluate_constraint(*instance.constraint, x));
}

bool proper_solution_check(const tropical::Vector& y) {
  if (y.size() != 3) {
    throw std::invalid_argument("proper_solution_check: dimension 3 required");
  }
  const tropical::Scalar product = y[0] * y[2];
  return product.is_finite() && std::abs(product.value()) <= kProperTol;
}

Point spectral_pipeline_point(const Coefficients& co, double alpha) {
  const tropical::Matrix a = build_extended_matrix(co);
  const auto minimizer = tropical::min_quadratic_form(a, alpha);
  const tropical::Vector& y = minimizer.second;
  // Rescale so the first and last entries become reciprocal; scaling leaves
  // the value of the quadratic form unchanged.
  const tropical::Scalar sigma = tropical::pow(y[0] * y[2], -0.5);
  const tropical::Vector proper = sigma * y;
  return {proper[0].value(), proper[1].value()};
}

}  // namespace location
