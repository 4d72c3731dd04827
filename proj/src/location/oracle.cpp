#include "location/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "location/solver.hpp"

namespace location {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double kGapSlack = 3.0;  // grid gap allowance in multiples of step
constexpr std::size_t kBlock = 1024;

std::size_t grid_count(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double side_or_neg_inf(tropical::Scalar s) {
  return s.is_finite() ? s.value() : -std::numeric_limits<double>::infinity();
}

}  // namespace

GridSpec auto_window(const std::vector<WeightedPoint>& points, double step) {
  if (points.empty()) {
    throw std::invalid_argument("auto_window: at least one point required");
  }
  if (!(step > 0.0)) {
    throw std::invalid_argument("auto_window: positive step required");
  }
  double lo1 = points[0].r1, hi1 = points[0].r1;
  double lo2 = points[0].r2, hi2 = points[0].r2;
  double wlo = points[0].w, whi = points[0].w;
  for (const WeightedPoint& p : points) {
    lo1 = std::min(lo1, p.r1);
    hi1 = std::max(hi1, p.r1);
    lo2 = std::min(lo2, p.r2);
    hi2 = std::max(hi2, p.r2);
    wlo = std::min(wlo, p.w);
    whi = std::max(whi, p.w);
  }
  double diameter = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      diameter = std::max(
          diameter, rectilinear_distance({points[i].r1, points[i].r2},
                                         {points[j].r1, points[j].r2}));
    }
  }
  const double margin = (whi - wlo) + diameter;
  return {lo1 - margin, hi1 + margin, lo2 - margin, hi2 + margin, step};
}

GridSpec audit_window(const ProblemInstance& instance,
                      const SolutionReport& report, double step) {
  GridSpec g = auto_window(instance.points, step);
  const double pad = std::max(0.5, kGapSlack * step);
  for (const Point& e : {report.endpoint_alpha0, report.endpoint_alpha1}) {
    g.x1_min = std::min(g.x1_min, e[0] - pad);
    g.x1_max = std::max(g.x1_max, e[0] + pad);
    g.x2_min = std::min(g.x2_min, e[1] - pad);
    g.x2_max = std::max(g.x2_max, e[1] + pad);
  }
  return g;
}

std::optional<GridMinimum> grid_search_min(
    const std::vector<WeightedPoint>& points,
    const std::optional<RotatedRectConstraint>& cons, const GridSpec& spec,
    GridObjective objective) {
  if (!spec.valid()) {
    throw std::invalid_argument("grid_search_min: invalid grid spec");
  }
  if (points.empty()) {
    throw std::invalid_argument("grid_search_min: at least one point required");
  }
  const std::size_t m = points.size();
  const std::size_t n1 = grid_count(spec.x1_min, spec.x1_max, spec.step);
  const std::size_t n2 = grid_count(spec.x2_min, spec.x2_max, spec.step);
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> r1(m), r2(m), w(m);
  for (std::size_t p = 0; p < m; ++p) {
    r1[p] = points[p].r1;
    r2[p] = points[p].r2;
    w[p] = points[p].w;
  }

  // Half-plane offsets; absent sides fall to -infinity and drop out of the
  // running maxima below without branching.
  double sa = -inf, sb = -inf, sc = -inf, sd = -inf;
  if (cons) {
    sa = side_or_neg_inf(cons->a1);
    sb = side_or_neg_inf(cons->b1);
    sc = side_or_neg_inf(cons->c1);
    sd = side_or_neg_inf(cons->d1);
  }
  const bool merged = objective == GridObjective::Merged;
  const bool filter = !merged && cons.has_value();
  const double lambda0 =
      merged ? lambda_from_coefficients(unconstrained_coefficients(points)) : 0.0;

  std::vector<double> x2s(n2);
  for (std::size_t j = 0; j < n2; ++j) x2s[j] = spec.x2_min + static_cast<double>(j) * spec.step;

  std::vector<double> ucol(m);
  std::vector<double> val(kBlock);

  double best = inf;
  std::size_t best_i = 0, best_j = 0;

  for (std::size_t i = 0; i < n1; ++i) {
    const double x1 = spec.x1_min + static_cast<double>(i) * spec.step;
    for (std::size_t p = 0; p < m; ++p) ucol[p] = std::abs(x1 - r1[p]) + w[p];
    const double ta = sa - x1, tb = sb + x1, tc = sc - x1, td = sd + x1;

    for (std::size_t j0 = 0; j0 < n2; j0 += kBlock) {
      const std::size_t jn = std::min(kBlock, n2 - j0);
      const double* xs = x2s.data() + j0;
      double* v = val.data();

      for (std::size_t j = 0; j < jn; ++j) v[j] = -inf;
      for (std::size_t p = 0; p < m; ++p) {
        const double up = ucol[p], rp = r2[p];
        for (std::size_t j = 0; j < jn; ++j) {
          v[j] = std::max(v[j], up + std::abs(xs[j] - rp));
        }
      }

      if (merged) {
        for (std::size_t j = 0; j < jn; ++j) {
          const double x2 = xs[j];
          const double phi1 =
              std::max(std::max(ta + x2, tb - x2), std::max(tc - x2, td + x2));
          v[j] = std::max(v[j] - lambda0, phi1);
        }
      } else if (filter) {
        for (std::size_t j = 0; j < jn; ++j) {
          const double x2 = xs[j];
          const double phi1 =
              std::max(std::max(ta + x2, tb - x2), std::max(tc - x2, td + x2));
          if (phi1 > 0.0) v[j] = inf;
        }
      }

      for (std::size_t j = 0; j < jn; ++j) {
        if (v[j] < best) {
          best = v[j];
          best_i = i;
          best_j = j0 + j;
        }
      }
    }
  }

  if (best == inf) return std::nullopt;  // every grid point filtered out
  return GridMinimum{
      best,
      {spec.x1_min + static_cast<double>(best_i) * spec.step, x2s[best_j]}};
}

VerificationVerdict verify_report(const ProblemInstance& instance,
                                  const SolutionReport& report,
                                  const GridSpec& spec) {
  const bool constrained = instance.constraint.has_value();
  const GridObjective objective =
      constrained ? GridObjective::Merged : GridObjective::Raw;

  VerificationVerdict verdict;
  const auto minimum =
      grid_search_min(instance.points, instance.constraint, spec, objective);
  if (!minimum) {
    verdict.infeasible_at_resolution = true;
    return verdict;
  }
  verdict.grid_min = minimum->value;
  verdict.grid_gap = std::abs(minimum->value - report.lambda);

  const double alphas[3] = {0.0, 0.5, 1.0};
  for (int k = 0; k < 3; ++k) {
    const Point x = report.point(alphas[k]);
    const double value = constrained
                             ? evaluate_merged(instance, x)
                             : evaluate_objective(instance.points, x);
    verdict.attainment_residuals[k] = std::abs(value - report.lambda);
  }

  if (constrained) {
    verdict.endpoints_feasible =
        evaluate_constraint(*instance.constraint, report.endpoint_alpha0) <=
            kResidualTol &&
        evaluate_constraint(*instance.constraint, report.endpoint_alpha1) <=
            kResidualTol;
  }

  const bool residuals_ok =
      std::all_of(verdict.attainment_residuals.begin(),
                  verdict.attainment_residuals.end(),
                  [](double r) { return r <= kResidualTol; });
  const bool gap_ok = verdict.grid_gap <= kGapSlack * spec.step &&
                      verdict.grid_min >= report.lambda - kResidualTol;
  const bool feasibility_ok = !report.exact || verdict.endpoints_feasible;
  verdict.pass = residuals_ok && gap_ok && feasibility_ok;
  return verdict;
}

}  // namespace location
