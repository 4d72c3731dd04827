#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tropical/scalar.hpp"

namespace location {

using Point = std::array<double, 2>;

// A demand point r = (r1, r2) with additive weight w, in distance units.
struct WeightedPoint {
  double r1 = 0.0;
  double r2 = 0.0;
  double w = 0.0;

  bool operator==(const WeightedPoint&) const = default;
};

// Feasible set: intersection of the four half-planes
//   x2 - x1 <= -a1,  x1 - x2 <= -b1,  x1 + x2 >= c1,  x1 + x2 <= -d1,
// a rectangle rotated 45 degrees. A tropical-zero field means the
// corresponding half-plane is absent.
struct RotatedRectConstraint {
  tropical::Scalar a1;
  tropical::Scalar b1;
  tropical::Scalar c1;
  tropical::Scalar d1;

  bool all_absent() const {
    return a1.is_zero() && b1.is_zero() && c1.is_zero() && d1.is_zero();
  }
  bool operator==(const RotatedRectConstraint&) const = default;
};

struct ProblemInstance {
  std::vector<WeightedPoint> points;
  std::optional<RotatedRectConstraint> constraint;
};

// The four reduction coefficients: maxima of w+r1-r2, w-r1+r2, w+r1+r2,
// w-r1-r2 over the points, or their constraint-merged counterparts.
struct Coefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  bool operator==(const Coefficients&) const = default;
};

enum class CaseTag { AB_DOMINANT, CD_DOMINANT, TIE };

std::string_view to_string(CaseTag tag);

// Closed-form solution. The minimizer set is the segment traced by
// alpha in [0,1] between the two endpoints; point() evaluates it.
struct SolutionReport {
  double lambda = 0.0;
  Point endpoint_alpha0{};
  Point endpoint_alpha1{};
  bool exact = true;
  CaseTag case_tag = CaseTag::TIE;
  std::optional<double> lambda0;

  Point point(double alpha) const;
};

}  // namespace location
