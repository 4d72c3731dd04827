#pragma once

#include <array>
#include <optional>
#include <vector>

#include "location/types.hpp"

namespace location {

// Search window and resolution for the brute-force grid scan. Rows run
// x1_min..x1_max, columns x2_min..x2_max, both inclusive, spacing `step`.
struct GridSpec {
  double x1_min = 0.0;
  double x1_max = 0.0;
  double x2_min = 0.0;
  double x2_max = 0.0;
  double step = 0.0;

  bool valid() const {
    return step > 0.0 && x1_min <= x1_max && x2_min <= x2_max;
  }
};

// Window guaranteed to contain an unconstrained minimizer: the bounding box
// of the points expanded on each side by (weight spread + point diameter).
GridSpec auto_window(const std::vector<WeightedPoint>& points, double step);

// auto_window additionally stretched to cover the report's solution segment,
// so the merged objective's minimizers lie inside even when the feasible
// rectangle sits away from the point cloud.
GridSpec audit_window(const ProblemInstance& instance,
                      const SolutionReport& report, double step);

enum class GridObjective {
  // max_i (rho(r_i, x) + w_i), skipping infeasible grid points when a
  // constraint is given.
  Raw,
  // psi(x) = max(phi(x) - lambda0, phi1(x)) over the whole grid.
  Merged,
};

struct GridMinimum {
  double value = 0.0;
  Point argmin{};
};

// Exhaustive scan; ties resolve to the lexicographically smallest grid
// point. Returns nothing when Raw mode finds no feasible grid point at this
// resolution. Throws std::invalid_argument on an invalid spec.
std::optional<GridMinimum> grid_search_min(
    const std::vector<WeightedPoint>& points,
    const std::optional<RotatedRectConstraint>& cons, const GridSpec& spec,
    GridObjective objective);

struct VerificationVerdict {
  double grid_min = 0.0;
  // |grid minimum - report lambda|; piecewise-linear objectives with unit
  // slopes keep this below 3 * step.
  double grid_gap = 0.0;
  // |objective(x(alpha)) - lambda| at alpha = 0, 0.5, 1.
  std::array<double, 3> attainment_residuals{};
  // Only checked for exact constrained reports; true otherwise.
  bool endpoints_feasible = true;
  bool infeasible_at_resolution = false;
  bool pass = false;
};

// Replays the report against the grid oracle: merged objective when the
// instance is constrained, raw otherwise.
VerificationVerdict verify_report(const ProblemInstance& instance,
                                  const SolutionReport& report,
                                  const GridSpec& spec);

}  // namespace location
