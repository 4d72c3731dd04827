#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "location/solver.hpp"
#include "testutil.hpp"
#include "tropical/spectral.hpp"

using location::CaseTag;
using location::Coefficients;
using location::Point;
using location::ProblemInstance;
using location::RotatedRectConstraint;
using location::SolutionReport;
using location::WeightedPoint;
using tropical::Scalar;

namespace {

const std::vector<WeightedPoint> kTwoPoints{{0, 0, 0}, {2, 0, 0}};

RotatedRectConstraint diagonal_floor(double c1) {
  RotatedRectConstraint cons;
  cons.c1 = Scalar{c1};
  return cons;
}

Coefficients tropical_coefficients(const std::vector<WeightedPoint>& points) {
  Scalar a, b, c, d;
  for (const WeightedPoint& p : points) {
    const Scalar w{p.w}, r1{p.r1}, r2{p.r2};
    a += w * r1 * inv(r2);
    b += w * inv(r1) * r2;
    c += w * r1 * r2;
    d += w * inv(r1) * inv(r2);
  }
  return {a.value(), b.value(), c.value(), d.value()};
}

}  // namespace

TEST_CASE("rectilinear distance") {
  CHECK(location::rectilinear_distance({0, 0}, {0, 0}) == 0.0);
  CHECK(location::rectilinear_distance({0, 0}, {2, 0}) == 2.0);
  CHECK(location::rectilinear_distance({1, -3}, {-2, 4}) == 10.0);
}

TEST_CASE("tropical and conventional distances agree exactly") {
  testutil::Rng rng(4001);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (int t = 0; t < 500; ++t) {
    const Point p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)};
    CHECK(location::rectilinear_distance_tropical(p, q).value() ==
          location::rectilinear_distance(p, q));
  }
}

TEST_CASE("distance is a metric") {
  testutil::Rng rng(4002);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (int t = 0; t < 500; ++t) {
    const Point p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)},
        r{coord(rng), coord(rng)};
    const double pq = location::rectilinear_distance(p, q);
    CHECK(pq >= 0.0);
    CHECK(pq == location::rectilinear_distance(q, p));
    CHECK(pq <= location::rectilinear_distance(p, r) +
                    location::rectilinear_distance(r, q) + 1e-9);
  }
}

TEST_CASE("reduction coefficients of fixed instances") {
  CHECK(location::unconstrained_coefficients(kTwoPoints) ==
        Coefficients{2, 0, 2, 0});
  CHECK(location::unconstrained_coefficients({{0, 0, 0}, {0, 2, 0}}) ==
        Coefficients{0, 2, 2, 0});
  CHECK(location::unconstrained_coefficients({{3, 1, 5}}) ==
        Coefficients{7, 3, 9, 1});
  CHECK_THROWS_AS(location::unconstrained_coefficients({}),
                  std::invalid_argument);
}

TEST_CASE("coefficients agree with the tropical computation") {
  testutil::Rng rng(4003);
  for (int t = 0; t < 100; ++t) {
    std::vector<WeightedPoint> points;
    const std::size_t m = 2 + t % 20;
    for (std::size_t i = 0; i < m; ++i) {
      points.push_back(
          {testutil::dyadic(rng), testutil::dyadic(rng), testutil::dyadic(rng)});
    }
    CHECK(location::unconstrained_coefficients(points) ==
          tropical_coefficients(points));
  }
}

TEST_CASE("optimal value from coefficients") {
  CHECK(location::lambda_from_coefficients({2, 0, 2, 0}) == 1.0);
  CHECK(location::lambda_from_coefficients({0, 0, 0, 0}) == 0.0);
  CHECK(location::lambda_from_coefficients({4, 0, 1, 1}) == 2.0);
}

TEST_CASE("extended matrix structure") {
  const tropical::Matrix a = location::build_extended_matrix({2, 0, 2, 0});
  const Scalar O = Scalar::zero();
  CHECK(a == tropical::Matrix(3, 3,
                              {O, Scalar{2}, O, Scalar{0}, O, Scalar{2}, O,
                               Scalar{0}, O}));
  CHECK(is_irreducible(a));
  CHECK(eigenvalue(a).value() == location::lambda_from_coefficients({2, 0, 2, 0}));
}

TEST_CASE("extended-matrix eigenvalue matches the closed form") {
  testutil::Rng rng(4004);
  for (int t = 0; t < 300; ++t) {
    const Coefficients co{testutil::dyadic(rng), testutil::dyadic(rng),
                          testutil::dyadic(rng), testutil::dyadic(rng)};
    const tropical::Matrix a = location::build_extended_matrix(co);
    CHECK(is_irreducible(a));
    CHECK(std::abs(eigenvalue(a).value() -
                   location::lambda_from_coefficients(co)) <= 1e-9);
  }
}

TEST_CASE("unconstrained worked instances") {
  const SolutionReport horizontal = location::solve_unconstrained(kTwoPoints);
  CHECK(horizontal.lambda == 1.0);
  CHECK(horizontal.case_tag == CaseTag::TIE);
  CHECK(horizontal.exact);
  for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
    CHECK(horizontal.point(alpha) == Point{1.0, 0.0});
  }

  const SolutionReport vertical =
      location::solve_unconstrained({{0, 0, 0}, {0, 2, 0}});
  CHECK(vertical.lambda == 1.0);
  for (double alpha : {0.0, 0.5, 1.0}) {
    CHECK(vertical.point(alpha) == Point{0.0, 1.0});
  }

  CHECK_THROWS_AS(location::solve_unconstrained({{0, 0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(location::solve_unconstrained(kTwoPoints, 1.5),
                  std::invalid_argument);
}

TEST_CASE("objective attains lambda on the segment and nowhere less") {
  testutil::Rng rng(4005);
  for (int t = 0; t < 40; ++t) {
    const auto points = testutil::random_instance(rng, 30);
    const SolutionReport report = location::solve_unconstrained(points);
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double value =
          location::evaluate_objective(points, report.point(alpha));
      CHECK(std::abs(value - report.lambda) <= 1e-9);
    }
    std::uniform_real_distribution<double> probe(-300.0, 300.0);
    for (int k = 0; k < 300; ++k) {
      const Point z{probe(rng), probe(rng)};
      CHECK(location::evaluate_objective(points, z) >= report.lambda - 1e-9);
    }
  }
}

TEST_CASE("constraint merge") {
  const Coefficients co0{2, 0, 2, 0};
  CHECK(location::merge_constraints(co0, 1.0, {}) == Coefficients{1, -1, 1, -1});
  CHECK(location::lambda_from_coefficients(
            location::merge_constraints(co0, 1.0, {})) == 0.0);
  CHECK(location::merge_constraints(co0, 1.0, diagonal_floor(4)) ==
        Coefficients{1, -1, 4, -1});
  CHECK(location::merge_constraints(co0, 1.0, diagonal_floor(0)) ==
        Coefficients{1, -1, 1, -1});
}

TEST_CASE("constrained worked instances") {
  ProblemInstance inactive{kTwoPoints, diagonal_floor(0)};
  const SolutionReport exact_report = location::solve_constrained(inactive);
  CHECK(exact_report.lambda == 0.0);
  CHECK(exact_report.exact);
  CHECK(exact_report.lambda0 == 1.0);
  CHECK(exact_report.point(0.5) == Point{1.0, 0.0});
  CHECK(location::evaluate_constraint(*inactive.constraint,
                                      exact_report.point(0.5)) <= 0.0);

  ProblemInstance active{kTwoPoints, diagonal_floor(4)};
  const SolutionReport approx = location::solve_constrained(active);
  CHECK(approx.lambda == 1.5);
  CHECK_FALSE(approx.exact);
  CHECK(approx.lambda0 == 1.0);
  CHECK(approx.case_tag == CaseTag::CD_DOMINANT);
  CHECK(approx.endpoint_alpha1 == Point{1.0, 1.5});
  CHECK(location::evaluate_merged(active, approx.endpoint_alpha1) ==
        doctest::Approx(1.5).epsilon(1e-12));

  RotatedRectConstraint contradictory;
  contradictory.c1 = Scalar{10};
  contradictory.d1 = Scalar{10};
  ProblemInstance empty{kTwoPoints, contradictory};
  const SolutionReport infeasible = location::solve_constrained(empty);
  CHECK(infeasible.lambda > 0.0);
  CHECK_FALSE(infeasible.exact);

  CHECK_THROWS_AS(location::solve_constrained({{{0, 0, 0}}, diagonal_floor(0)}),
                  std::invalid_argument);
}

TEST_CASE("missing constraint delegates to the unconstrained path") {
  ProblemInstance instance{kTwoPoints, std::nullopt};
  const SolutionReport report = location::solve_constrained(instance);
  CHECK(report.lambda == 1.0);
  CHECK_FALSE(report.lambda0.has_value());
  CHECK(report.exact);
}

TEST_CASE("objective and constraint evaluation") {
  CHECK(location::evaluate_objective({{3, -1, 7}}, {3, -1}) == 7.0);
  CHECK(location::evaluate_objective(kTwoPoints, {1, 0}) == 1.0);
  CHECK(location::evaluate_constraint(diagonal_floor(4), {1, 1.5}) == 1.5);
  CHECK(location::evaluate_constraint({}, {5, 5}) ==
        -std::numeric_limits<double>::infinity());
  ProblemInstance active{kTwoPoints, diagonal_floor(4)};
  CHECK(location::evaluate_merged(active, {1, 1.5}) == 1.5);
}

TEST_CASE("proper extended solutions") {
  using tropical::Vector;
  CHECK(location::proper_solution_check(Vector{Scalar{0}, Scalar{9}, Scalar{0}}));
  CHECK(location::proper_solution_check(Vector{Scalar{1}, Scalar{5}, Scalar{-1}}));
  CHECK_FALSE(
      location::proper_solution_check(Vector{Scalar{1}, Scalar{5}, Scalar{1}}));
  CHECK_THROWS_AS(location::proper_solution_check(Vector{Scalar{0}, Scalar{0}}),
                  std::invalid_argument);
}

TEST_CASE("spectral pipeline reproduces the closed form on engineered cases") {
  const Coefficients ab{4, 0, 1, 1};     // a+b dominant
  const Coefficients cd{0, 0, 3, 1};     // c+d dominant
  const Coefficients tie{2, 0, 2, 0};    // a+b = c+d
  struct Expected {
    Coefficients co;
    Point at0, at1;
  };
  const Expected cases[] = {
      {ab, {0.5, -1.5}, {1.5, -0.5}},
      {cd, {1.5, -0.5}, {-0.5, 1.5}},
      {tie, {1.0, 0.0}, {1.0, 0.0}},
  };
  for (const Expected& e : cases) {
    const Point p0 = location::spectral_pipeline_point(e.co, 0.0);
    const Point p1 = location::spectral_pipeline_point(e.co, 1.0);
    CHECK(std::abs(p0[0] - e.at0[0]) <= 1e-9);
    CHECK(std::abs(p0[1] - e.at0[1]) <= 1e-9);
    CHECK(std::abs(p1[0] - e.at1[0]) <= 1e-9);
    CHECK(std::abs(p1[1] - e.at1[1]) <= 1e-9);
  }
}

TEST_CASE("spectral pipeline matches the closed form on random instances") {
  testutil::Rng rng(4006);
  for (int t = 0; t < 60; ++t) {
    const auto points = testutil::random_instance(rng, 30);
    const Coefficients co = location::unconstrained_coefficients(points);
    const SolutionReport report = location::solve_unconstrained(points);
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Point direct = report.point(alpha);
      const Point spectral = location::spectral_pipeline_point(co, alpha);
      CHECK(std::abs(direct[0] - spectral[0]) <= 1e-9);
      CHECK(std::abs(direct[1] - spectral[1]) <= 1e-9);
    }
  }
}

TEST_CASE("pipeline minimizers become proper after normalization") {
  testutil::Rng rng(4007);
  for (int t = 0; t < 50; ++t) {
    const auto points = testutil::random_instance(rng, 20);
    const Coefficients co = location::unconstrained_coefficients(points);
    const tropical::Matrix a = location::build_extended_matrix(co);
    const auto minimizer = tropical::min_quadratic_form(a, 0.5);
    const tropical::Vector& y = minimizer.second;
    const Scalar sigma = tropical::pow(y[0] * y[2], -0.5);
    CHECK(location::proper_solution_check(sigma * y));
  }
}

TEST_CASE("translation equivariance") {
  testutil::Rng rng(4008);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int t = 0; t < 40; ++t) {
    const auto points = testutil::random_instance(rng, 20);
    const double t1 = shift(rng), t2 = shift(rng);
    std::vector<WeightedPoint> moved;
    for (const WeightedPoint& p : points) moved.push_back({p.r1 + t1, p.r2 + t2, p.w});
    const SolutionReport base = location::solve_unconstrained(points);
    const SolutionReport shifted = location::solve_unconstrained(moved);
    CHECK(std::abs(shifted.lambda - base.lambda) <= 1e-9);
    for (double alpha : {0.0, 0.5, 1.0}) {
      const Point x = base.point(alpha), y = shifted.point(alpha);
      CHECK(std::abs(y[0] - (x[0] + t1)) <= 1e-9);
      CHECK(std::abs(y[1] - (x[1] + t2)) <= 1e-9);
    }
  }
}

TEST_CASE("uniform weight shift moves lambda and nothing else") {
  testutil::Rng rng(4009);
  std::uniform_real_distribution<double> shift(-20.0, 20.0);
  for (int t = 0; t < 40; ++t) {
    const auto points = testutil::random_instance(rng, 20);
    const double ws = shift(rng);
    std::vector<WeightedPoint> heavier;
    for (const WeightedPoint& p : points) heavier.push_back({p.r1, p.r2, p.w + ws});
    const SolutionReport base = location::solve_unconstrained(points);
    const SolutionReport moved = location::solve_unconstrained(heavier);
    CHECK(std::abs(moved.lambda - (base.lambda + ws)) <= 1e-9);
    for (double alpha : {0.0, 0.5, 1.0}) {
      const Point x = base.point(alpha), y = moved.point(alpha);
      CHECK(std::abs(y[0] - x[0]) <= 1e-9);
      CHECK(std::abs(y[1] - x[1]) <= 1e-9);
    }
  }
}

TEST_CASE("constrained reports are consistent at sampled alphas") {
  testutil::Rng rng(4010);
  int exact_seen = 0, approx_seen = 0;
  for (int t = 0; t < 120; ++t) {
    ProblemInstance instance{testutil::random_instance(rng, 30),
                             testutil::random_constraint(rng)};
    const SolutionReport report = location::solve_constrained(instance);
    CHECK(report.lambda >= -1e-9);
    CHECK(report.lambda0.has_value());
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double psi = location::evaluate_merged(instance, report.point(alpha));
      CHECK(std::abs(psi - report.lambda) <= 1e-9);
    }
    if (report.exact) {
      ++exact_seen;
      for (double alpha : {0.0, 0.5, 1.0}) {
        const Point x = report.point(alpha);
        CHECK(location::evaluate_constraint(*instance.constraint, x) <= 1e-9);
        CHECK(std::abs(location::evaluate_objective(instance.points, x) -
                       *report.lambda0) <= 1e-9);
      }
    } else {
      ++approx_seen;
    }
  }
  // The generator must exercise both branches.
  CHECK(exact_seen > 0);
  CHECK(approx_seen > 0);
}
