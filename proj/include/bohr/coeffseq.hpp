#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "bohr/bounded.hpp"
#include "bohr/errors.hpp"

namespace bohr {

/// Certified bound |a_n| <= c * q^n for every index n beyond the stored
/// coefficient block.
struct TailBound {
  enum class Kind { Zero, Geometric };
  Kind kind = Kind::Zero;
  double c = 0.0;
  double q = 0.0;

  static TailBound zero() { return {}; }

  static TailBound geometric(double c, double q) {
    if (!(c >= 0.0) || !std::isfinite(c))
      throw BadParameter("geometric tail: c must be finite and >= 0");
    if (!(q >= 0.0 && q < 1.0))
      throw BadParameter("geometric tail: q must be in [0,1)");
    if (c == 0.0) return zero();
    TailBound t;
    t.kind = Kind::Geometric;
    t.c = c;
    t.q = q;
    return t;
  }
};

/// Exact continuation a_n = amp * (-1)^n for every n beyond the stored block.
/// Used by coefficient families whose moduli do not decay (so no geometric
/// bound with q < 1 exists); all sums and evaluations then add closed-form
/// tails with zero error. amp may be negative.
struct AlternatingExtension {
  bool active = false;
  double amp = 0.0;
};

/// Power-series coefficients a_0..a_N plus a certified description of the
/// rest: either a tail bound (err contribution) or an exact alternating
/// continuation (value contribution).
class CoefficientSequence {
 public:
  CoefficientSequence() : coeffs_(1, {0.0, 0.0}) {}

  CoefficientSequence(std::vector<std::complex<double>> coeffs, TailBound tail)
      : coeffs_(std::move(coeffs)), tail_(tail) {
    if (coeffs_.empty()) coeffs_.push_back({0.0, 0.0});
    for (const auto& c : coeffs_)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw BadParameter("coefficient sequence: non-finite coefficient");
  }

  static CoefficientSequence polynomial(std::vector<std::complex<double>> coeffs) {
    return CoefficientSequence(std::move(coeffs), TailBound::zero());
  }

  /// Stored block plus the exact continuation amp * (-1)^n beyond it.
  static CoefficientSequence alternating_extended(
      std::vector<std::complex<double>> coeffs, double amp) {
    if (!std::isfinite(amp))
      throw BadParameter("alternating extension: amp must be finite");
    CoefficientSequence s(std::move(coeffs), TailBound::zero());
    s.ext_.active = true;
    s.ext_.amp = amp;
    return s;
  }

  std::size_t max_index() const { return coeffs_.size() - 1; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  const TailBound& tail() const { return tail_; }
  const AlternatingExtension& extension() const { return ext_; }

 private:
  std::vector<std::complex<double>> coeffs_;
  TailBound tail_{};
  AlternatingExtension ext_{};
};

namespace detail {

// sum_{n >= m} x^n = x^m / (1-x)
inline double geom_from(double x, std::size_t m) {
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  return std::pow(x, static_cast<double>(m)) / (1.0 - x);
}

// sum_{n >= m} n x^n = x^m (m - (m-1) x) / (1-x)^2
inline double geom_n_from(double x, std::size_t m) {
  if (x == 0.0) return m == 1 ? 1.0 : 0.0;
  double md = static_cast<double>(m);
  return std::pow(x, md) * (md - (md - 1.0) * x) / ((1.0 - x) * (1.0 - x));
}

inline double falling(double n, unsigned d) {
  double r = 1.0;
  for (unsigned i = 0; i < d; ++i) r *= (n - i);
  return r;
}

inline double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class T>
T pow_int(T base, std::size_t e) {
  T r = static_cast<T>(1.0);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// sum_{n >= m} (n)_d x^{n-d}, the d-th derivative of x^m/(1-x); works for
// real and complex x with |x| < 1. (n)_d is the falling factorial.
template <class T>
T geom_deriv_from(T x, std::size_t m, unsigned d) {
  T one = static_cast<T>(1.0);
  T acc = static_cast<T>(0.0);
  for (unsigned i = 0; i <= d && i <= m; ++i) {
    double coef = binomial(d, i) * falling(static_cast<double>(m), i);
    double fact = 1.0;
    for (unsigned j = 2; j <= d - i; ++j) fact *= j;
    acc += coef * fact * pow_int(x, m - i) / pow_int(one - x, d - i + 1);
  }
  return acc;
}

inline void require_radius(double rho) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw BadParameter("radius must lie in [0,1)");
}

}  // namespace detail

/// Sum_{n >= start} |a_n| rho^n. Stored coefficients contribute to value; a
/// geometric tail contributes c (q rho)^m / (1 - q rho) to err, an
/// alternating continuation contributes |amp| rho^m / (1 - rho) exactly.
inline BoundedValue majorant_sum(const CoefficientSequence& s, double rho,
                                 std::size_t start = 0) {
  detail::require_radius(rho);
  const auto& a = s.coeffs();
  double value = 0.0;
  for (std::size_t n = a.size(); n-- > start;)
    value = value * rho + std::abs(a[n]);
  value *= detail::pow_int(rho, start);
  std::size_t m = std::max(s.max_index() + 1, start);
  double err = 0.0;
  if (s.extension().active) {
    value += std::abs(s.extension().amp) * detail::geom_from(rho, m);
  } else if (s.tail().kind == TailBound::Kind::Geometric) {
    double x = s.tail().q * rho;
    if (x >= 1.0) throw TailNotCertifiable("majorant_sum: q*rho >= 1");
    err = s.tail().c * detail::geom_from(x, m);
  }
  return {value, err};
}

/// Sum_{n >= start} n |a_n| rho^{n-1} (derivative-series majorant).
inline BoundedValue derivative_majorant_sum(const CoefficientSequence& s,
                                            double rho,
                                            std::size_t start = 1) {
  detail::require_radius(rho);
  if (start < 1) start = 1;
  const auto& a = s.coeffs();
  double value = 0.0;
  for (std::size_t n = a.size(); n-- > start;)
    value = value * rho + static_cast<double>(n) * std::abs(a[n]);
  value *= detail::pow_int(rho, start - 1);
  std::size_t m = std::max(s.max_index() + 1, start);
  double err = 0.0;
  if (s.extension().active) {
    // sum_{n >= m} n |amp| rho^{n-1}
    if (rho == 0.0)
      value += (m <= 1) ? std::abs(s.extension().amp) : 0.0;
    else
      value += std::abs(s.extension().amp) * detail::geom_n_from(rho, m) / rho;
  } else if (s.tail().kind == TailBound::Kind::Geometric) {
    // sum_{n >= m} n c q^n rho^{n-1} = (c/rho) sum_{n >= m} n (q rho)^n
    double x = s.tail().q * rho;
    if (x >= 1.0) throw TailNotCertifiable("derivative_majorant_sum: q*rho >= 1");
    if (rho == 0.0)
      err = (m <= 1) ? s.tail().c * s.tail().q : 0.0;
    else
      err = s.tail().c * detail::geom_n_from(x, m) / rho;
  }
  return {value, err};
}

/// Sum_{n >= start} |a_n|^2 x^n for x in [0,1). With x = rho^2 this is the
/// square sum of the refined inequalities; with x = rho it is the form used
/// by the coefficient comparison of dilatation-bounded pairs.
inline BoundedValue power_square_sum(const CoefficientSequence& s, double x,
                                     std::size_t start = 1) {
  detail::require_radius(x);
  if (start < 1) start = 1;
  const auto& a = s.coeffs();
  double value = 0.0;
  for (std::size_t n = a.size(); n-- > start;)
    value = value * x + std::norm(a[n]);
  value *= detail::pow_int(x, start);
  std::size_t m = std::max(s.max_index() + 1, start);
  double err = 0.0;
  if (s.extension().active) {
    double amp = s.extension().amp;
    value += amp * amp * detail::geom_from(x, m);
  } else if (s.tail().kind == TailBound::Kind::Geometric) {
    double xx = s.tail().q * s.tail().q * x;
    if (xx >= 1.0) throw TailNotCertifiable("power_square_sum: q^2*x >= 1");
    err = s.tail().c * s.tail().c * detail::geom_from(xx, m);
  }
  return {value, err};
}

/// Area functional S_rho/pi = sum_{n >= 1} n |a_n|^2 rho^{2n}.
inline BoundedValue area_functional(const CoefficientSequence& s, double rho) {
  detail::require_radius(rho);
  double x = rho * rho;
  const auto& a = s.coeffs();
  double value = 0.0;
  for (std::size_t n = a.size(); n-- > 1;)
    value = value * x + static_cast<double>(n) * std::norm(a[n]);
  value *= x;
  std::size_t m = s.max_index() + 1;
  double err = 0.0;
  if (s.extension().active) {
    double amp = s.extension().amp;
    value += amp * amp * detail::geom_n_from(x, m);
  } else if (s.tail().kind == TailBound::Kind::Geometric) {
    double xx = s.tail().q * s.tail().q * x;
    if (xx >= 1.0) throw TailNotCertifiable("area_functional: (q*rho)^2 >= 1");
    err = s.tail().c * s.tail().c * detail::geom_n_from(xx, m);
  }
  return {value, err};
}

/// (1/(1+|a_0|) + rho/(1-rho)) * sum_{n >= 1} |a_n|^2 rho^{2n}.
inline BoundedValue refined_weight_sum(const CoefficientSequence& s, double rho) {
  detail::require_radius(rho);
  double a0 = std::abs(s.coeffs()[0]);
  double w = 1.0 / (1.0 + a0) + rho / (1.0 - rho);
  return scaled(power_square_sum(s, rho * rho, 1), w);
}

/// Truncated evaluation of sum a_n z^n (deriv = 0) or its deriv-th
/// derivative series sum (n)_d a_n z^{n-d}, with certified tail radius.
inline ComplexBounded eval_series(const CoefficientSequence& s,
                                  std::complex<double> z, unsigned deriv = 0) {
  double r = std::abs(z);
  if (!(r < 1.0)) throw BadParameter("eval_series: |z| must be < 1");
  const auto& a = s.coeffs();
  std::complex<double> value{0.0, 0.0};
  for (std::size_t n = a.size(); n-- > deriv;)
    value = value * z + detail::falling(static_cast<double>(n), deriv) * a[n];
  std::size_t m = std::max(s.max_index() + 1, static_cast<std::size_t>(deriv));
  double err = 0.0;
  if (s.extension().active) {
    // tail sum_{n >= m} amp (-1)^n z^n = amp w^m/(1-w) at w = -z; the d-th
    // z-derivative picks up (-1)^d
    std::complex<double> w = -z;
    std::complex<double> t =
        detail::geom_deriv_from(w, m, deriv) * s.extension().amp;
    value += (deriv % 2 == 0) ? t : -t;
  } else if (s.tail().kind == TailBound::Kind::Geometric) {
    double x = s.tail().q * r;
    if (x >= 1.0) throw TailNotCertifiable("eval_series: q*|z| >= 1");
    err = s.tail().c * std::pow(s.tail().q, static_cast<double>(deriv)) *
          detail::geom_deriv_from(x, m, deriv);
  }
  return {value, err};
}

/// Necessary bounds for a sup-norm-1 analytic function: |a_0| <= 1 and
/// |a_n| <= 1 - |a_0|^2 for n >= 1 (with the tail bound checked at its first
/// index). Throws NotNormalized naming the offending index.
inline void require_schur_plausible(const CoefficientSequence& s,
                                    double tol = 1e-9) {
  const auto& a = s.coeffs();
  double a0 = std::abs(a[0]);
  if (a0 > 1.0 + tol) throw NotNormalized("|a_0| > 1");
  double cap = 1.0 - a0 * a0 + tol;
  for (std::size_t n = 1; n < a.size(); ++n)
    if (std::abs(a[n]) > cap)
      throw NotNormalized("|a_" + std::to_string(n) + "| > 1 - |a_0|^2");
  if (s.extension().active && std::abs(s.extension().amp) > cap)
    throw NotNormalized("alternating continuation exceeds 1 - |a_0|^2");
  if (s.tail().kind == TailBound::Kind::Geometric) {
    double first = s.tail().c *
                   std::pow(s.tail().q, static_cast<double>(s.max_index() + 1));
    if (first > cap)
      throw NotNormalized("tail bound exceeds 1 - |a_0|^2 at its first index");
  }
}

/// Multiply all stored coefficients by a unimodular factor; tails are
/// modulus-invariant. Rejects alternating continuations unless the factor is
/// real (the continuation must stay real-alternating).
inline CoefficientSequence rotated(const CoefficientSequence& s,
                                   std::complex<double> u) {
  if (std::abs(std::abs(u) - 1.0) > 1e-12)
    throw BadParameter("rotated: factor must be unimodular");
  auto coeffs = s.coeffs();
  for (auto& c : coeffs) c *= u;
  if (s.extension().active) {
    if (std::abs(u.imag()) > 1e-15)
      throw BadParameter("rotated: alternating continuation needs a real factor");
    return CoefficientSequence::alternating_extended(std::move(coeffs),
                                                     u.real() * s.extension().amp);
  }
  return CoefficientSequence(std::move(coeffs), s.tail());
}

}  // namespace bohr
