#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tropical {

/// An element of the max-plus semifield: either a finite real or the
/// semiring zero (conventionally read as -infinity). Addition is max,
/// multiplication is conventional +. The zero element is a tagged state
/// rather than a floating-point sentinel so that the absorption and
/// identity laws hold exactly.
class Scalar {
 public:
  constexpr Scalar() : finite_(false), v_(0.0) {}
  constexpr explicit Scalar(double v) : finite_(true), v_(v) {}

  static constexpr Scalar zero() { return Scalar{}; }
  static constexpr Scalar one() { return Scalar{0.0}; }

  constexpr bool is_zero() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  /// The finite value; throws for the zero element.
  constexpr double value() const {
    if (!finite_) {
      throw std::domain_error("tropical::Scalar: zero element has no finite value");
    }
    return v_;
  }

  /// Conventional reading: the value, or -infinity for the zero element.
  constexpr double as_real() const {
    return finite_ ? v_ : -std::numeric_limits<double>::infinity();
  }

  friend constexpr bool operator==(Scalar x, Scalar y) {
    if (x.finite_ != y.finite_) return false;
    return !x.finite_ || x.v_ == y.v_;
  }
  friend constexpr bool operator!=(Scalar x, Scalar y) { return !(x == y); }

  // Total order induced by addition: x <= y iff x (+) y == y. The zero
  // element sits below every finite value.
  friend constexpr bool operator<(Scalar x, Scalar y) {
    if (x.finite_ && y.finite_) return x.v_ < y.v_;
    return !x.finite_ && y.finite_;
  }
  friend constexpr bool operator<=(Scalar x, Scalar y) { return x < y || x == y; }
  friend constexpr bool operator>(Scalar x, Scalar y) { return y < x; }
  friend constexpr bool operator>=(Scalar x, Scalar y) { return y <= x; }

 private:
  bool finite_;
  double v_;
};

/// Tropical addition: max, with the zero element as neutral.
constexpr Scalar operator+(Scalar x, Scalar y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return Scalar{std::max(x.value(), y.value())};
}

/// Tropical multiplication: conventional +, with the zero element absorbing.
constexpr Scalar operator*(Scalar x, Scalar y) {
  if (x.is_zero() || y.is_zero()) return Scalar::zero();
  return Scalar{x.value() + y.value()};
}

constexpr Scalar& operator+=(Scalar& x, Scalar y) { return x = x + y; }
constexpr Scalar& operator*=(Scalar& x, Scalar y) { return x = x * y; }

/// Multiplicative inverse (conventional negation); the zero element has none.
constexpr Scalar inv(Scalar x) {
  if (x.is_zero()) {
    throw std::domain_error("tropical::inv: zero element is not invertible");
  }
  return Scalar{-x.value()};
}

/// Real-exponent power (conventional alpha * x). Raising the zero element
/// to a positive power gives zero; non-positive powers of zero are undefined.
constexpr Scalar pow(Scalar x, double alpha) {
  if (x.is_zero()) {
    if (alpha > 0.0) return Scalar::zero();
    throw std::domain_error("tropical::pow: zero element to a non-positive power");
  }
  return Scalar{alpha * x.value()};
}

}  // namespace tropical
