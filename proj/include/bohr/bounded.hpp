#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "bohr/errors.hpp"

namespace bohr {

/// A real value together with a certified absolute error radius: the exact
/// quantity lies in [value - err, value + err]. err covers series truncation
/// only; double rounding is absorbed by the comparison slack of the verdict
/// logic.
struct BoundedValue {
  double value = 0.0;
  double err = 0.0;

  double lo() const { return value - err; }
  double hi() const { return value + err; }
};

inline BoundedValue operator+(BoundedValue x, BoundedValue y) {
  return {x.value + y.value, x.err + y.err};
}

inline BoundedValue& operator+=(BoundedValue& x, BoundedValue y) {
  x = x + y;
  return x;
}

inline BoundedValue scaled(BoundedValue x, double c) {
  return {c * x.value, std::abs(c) * x.err};
}

/// x^p for a quantity known to be nonnegative (the enclosure is clamped at 0
/// before applying the monotone power).
inline BoundedValue pow_enclosure(BoundedValue x, double p) {
  if (!(p > 0.0)) throw BadParameter("pow_enclosure: p must be > 0");
  double lo = std::max(0.0, x.lo());
  double hi = std::max(0.0, x.hi());
  double ylo = std::pow(lo, p);
  double yhi = std::pow(hi, p);
  return {0.5 * (ylo + yhi), 0.5 * (yhi - ylo)};
}

/// A complex value with a certified absolute error radius in the plane.
struct ComplexBounded {
  std::complex<double> value{0.0, 0.0};
  double err = 0.0;
};

inline ComplexBounded operator+(ComplexBounded x, ComplexBounded y) {
  return {x.value + y.value, x.err + y.err};
}

inline ComplexBounded operator-(ComplexBounded x, std::complex<double> c) {
  return {x.value - c, x.err};
}

/// Modulus of a complex enclosure: |value| with the same radius (triangle
/// inequality).
inline BoundedValue abs_bounded(const ComplexBounded& x) {
  return {std::abs(x.value), x.err};
}

}  // namespace bohr
