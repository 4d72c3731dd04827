#pragma once

#include <vector>

#include "location/types.hpp"
#include "tropical/matrix.hpp"

namespace location {

// L1 plane distance |p1-q1| + |p2-q2|.
double rectilinear_distance(Point p, Point q);

// The same distance computed as (q1^-1 p1 + p1^-1 q1)(q2^-1 p2 + p2^-1 q2)
// in max-plus arithmetic; agrees exactly with the conventional form.
tropical::Scalar rectilinear_distance_tropical(Point p, Point q);

// Reduction coefficients of the unconstrained problem:
//   a = max(w + r1 - r2), b = max(w - r1 + r2),
//   c = max(w + r1 + r2), d = max(w - r1 - r2).
// Throws std::invalid_argument on an empty point list.
Coefficients unconstrained_coefficients(const std::vector<WeightedPoint>& points);

// Optimal value max(a+b, c+d) / 2.
double lambda_from_coefficients(const Coefficients& co);

// The 3x3 matrix with rows (0*, a, 0*), (b, 0*, c), (0*, d, 0*) where 0* is
// the tropical zero; the matrix of the extended one-variable problem.
tropical::Matrix build_extended_matrix(const Coefficients& co);

// Constraint merge: (max(a0 - lambda0, a1), ...), absent constraint fields
// falling back to the normalized unconstrained terms.
Coefficients merge_constraints(const Coefficients& co0, double lambda0,
                               const RotatedRectConstraint& cons);

// Closed-form minimizer segment of max_i (rho(r_i, x) + w_i).
// Requires at least two points and 0 <= alpha <= 1.
SolutionReport solve_unconstrained(const std::vector<WeightedPoint>& points,
                                   double alpha = 0.5);

// Constrained variant over the merged objective psi. Reports lambda >= 0;
// exact means lambda vanishes and the segment solves the original problem
// inside the feasible set. Without a constraint delegates to
// solve_unconstrained.
SolutionReport solve_constrained(const ProblemInstance& instance,
                                 double alpha = 0.5);

// phi(x) = max_i (rho(r_i, x) + w_i).
double evaluate_objective(const std::vector<WeightedPoint>& points, Point x);

// phi1(x) = max(a1 - x1 + x2, b1 + x1 - x2, c1 - x1 - x2, d1 + x1 + x2),
// absent terms contributing -infinity. x is feasible iff phi1(x) <= 0.
double evaluate_constraint(const RotatedRectConstraint& cons, Point x);

// psi(x) = max(phi(x) - lambda0, phi1(x)), the normalized merged objective.
double evaluate_merged(const ProblemInstance& instance, Point x);

// True iff y1 * y3 = 1 tropically (conventionally y1 + y3 = 0) within 1e-9;
// the defining property of proper extended solutions y = (x1, x2, x1^-1).
bool proper_solution_check(const tropical::Vector& y);

// Solves the unconstrained problem through the spectral machinery instead of
// the closed form: eigenbasis of the extended matrix and its transpose,
// the eigenvector combination for the given alpha, then the reciprocity
// normalization that makes the extended solution proper. Used to cross-check
// solve_unconstrained; the two must agree to within rounding.
Point spectral_pipeline_point(const Coefficients& co, double alpha);

}  // namespace location
