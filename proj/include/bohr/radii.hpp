#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/mappings.hpp"

namespace bohr {

struct RadiusParams {
  double K = 1.0;
  bool K_infinite = false;
  double p = 1.0;  // exponent for E-T2/E-T4; tail start N for E-A1/E-A2
  double a = 1.0;  // |a_0| parameter of E-D; a = 1 is the classical worst case

  QuasiconformalParams qc() const {
    return K_infinite ? QuasiconformalParams::infinite_K()
                      : QuasiconformalParams::from_K(K);
  }
};

/// One catalog entry: residual function with a validated monotone bracket.
/// The sharp radius is the unique root of residual on (lo, hi).
struct RadiusEquation {
  std::string id;
  RadiusParams params;
  std::function<double(double)> residual;
  double lo = 0.0;
  double hi = 1.0;
  bool increasing = true;
};

struct RadiusResult {
  double rho0 = 0.0;
  double residual_at_root = 0.0;
  double bracket_width = 0.0;
};

/// Area-term constant of the improved Bohr inequality:
/// 8K^2(3K+1)^2 / ((5K+1)^2(K+1)^2); limit 72/25 as K -> infinity.
inline double lambda_area_coefficient(const QuasiconformalParams& qc) {
  if (qc.infinite) return 72.0 / 25.0;
  double K = qc.K;
  double num = 8.0 * K * K * (3.0 * K + 1.0) * (3.0 * K + 1.0);
  double den = (5.0 * K + 1.0) * (5.0 * K + 1.0) * (K + 1.0) * (K + 1.0);
  return num / den;
}

namespace detail {

inline double guarded(double v) {
  // overflow near the open end of a (0, 1-eps) bracket counts as +infinity
  // on the increasing side
  return std::isfinite(v) ? v : 1e300;
}

inline void validate_bracket(const RadiusEquation& eq) {
  double flo = eq.residual(eq.lo);
  double fhi = eq.residual(eq.hi);
  if (!(flo * fhi < 0.0))
    throw NoSignChange(eq.id + ": residual does not change sign on bracket");
  double prev = flo;
  for (int i = 1; i <= 100; ++i) {
    double x = eq.lo + (eq.hi - eq.lo) * i / 100.0;
    double v = eq.residual(x);
    if (eq.increasing ? v < prev - 1e-12 : v > prev + 1e-12)
      throw NonMonotoneDetected(eq.id + ": sampled monotonicity failed");
    prev = v;
  }
}

}  // namespace detail

inline const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {
      "E-T1",  "E-TT1", "E-T7",       "E-T2",
      "E-T4",  "E-T6",  "E-TF-sharp", "E-TF-nonsharp",
      "E-C1",  "E-C2",  "E-G8",
      // classical regression entries
      "E-B",   "E-E",   "E-A1",       "E-A2",
      "E-C",   "E-D"};
  return ids;
}

/// Build the catalog entry for an equation id, with params validated for the
/// id and the bracket certified (sign change + sampled monotonicity).
inline RadiusEquation catalog(const std::string& id, RadiusParams params = {}) {
  if (!params.K_infinite && !(params.K >= 1.0 && std::isfinite(params.K)))
    throw BadParameter(id + ": K must be >= 1");
  RadiusEquation eq;
  eq.id = id;
  eq.params = params;
  double k = params.K_infinite ? 1.0 : (params.K - 1.0) / (params.K + 1.0);

  if (params.K_infinite && !(id == "E-TT1" || id == "E-T7" || id == "E-T6"))
    throw BadParameter(id + ": infinite K is only a limit entry for E-TT1/E-T7/E-T6");

  if (id == "E-T1") {
    eq.residual = [k](double r) { return 2.0 * (1.0 + k) * r / (1.0 - r) - 1.0; };
    eq.lo = 0.0;
    eq.hi = 0.45;
  } else if (id == "E-TT1") {
    eq.residual = [k](double r) {
      return (1.0 - r) * (r * r + 2.0 * r - 1.0) +
             2.0 * r * (1.0 + r) * (1.0 + r) * (k + r);
    };
    eq.lo = 0.0;
    eq.hi = 0.41421356237309503;  // sqrt(2) - 1
  } else if (id == "E-T7") {
    eq.residual = [k](double r) {
      return (1.0 - r) * (1.0 - r * r - r) -
             r * (1.0 + r) * (1.0 + r) * (r + k);
    };
    eq.lo = 0.0;
    eq.hi = 0.6180339887498949;  // (sqrt(5) - 1)/2
    eq.increasing = false;
  } else if (id == "E-T2") {
    double p = params.p;
    if (!(p >= 1.0) || p != std::floor(p) || p > 60.0)
      throw BadParameter("E-T2: p must be a positive integer");
    eq.residual = [k, p](double r) {
      double v = std::pow(2.0 * r / (1.0 - r), p) +
                 2.0 * (1.0 + k) * r / (1.0 - r) - 1.0;
      return detail::guarded(v);
    };
    eq.lo = 0.0;
    eq.hi = 1.0 - 1e-9;
  } else if (id == "E-T4") {
    double p = params.p;
    if (!(p > 0.0 && p <= 2.0))
      throw BadParameter("E-T4: p must lie in (0,2]");
    eq.residual = [k, p](double r) {
      return p * (1.0 - r) * (1.0 - r) -
             2.0 * (1.0 + k) * r * (1.0 + r);
    };
    eq.lo = 0.0;
    eq.hi = 0.5;
    eq.increasing = false;
  } else if (id == "E-T6") {
    eq.residual = [k](double r) {
      double poly = 2.0 * r * r * r * r + 3.0 * r * r * r + r * r + 3.0 * r - 1.0;
      return poly + 2.0 * k * (1.0 + r) * (1.0 + r) *
                        (r + (1.0 - r) * std::log(1.0 - r));
    };
    eq.lo = 0.0;
    eq.hi = 1.0 / 3.0;
  } else if (id == "E-TF-sharp") {
    eq.residual = [k](double r) {
      double v = 2.0 * (1.0 + k) * r / (1.0 - r) +
                 2.0 * k * std::log(1.0 - r) - 1.0;
      return detail::guarded(v);
    };
    eq.lo = 0.0;
    eq.hi = 1.0 - 1e-9;
  } else if (id == "E-TF-nonsharp") {
    eq.residual = [k](double r) {
      double c = std::sqrt(1.6449340668482264 - 1.0);  // sqrt(pi^2/6 - 1)
      double r2 = r * r;
      double v = r / (1.0 - r) +
                 k * r2 * std::sqrt((1.0 + r2) / std::pow(1.0 - r2, 3.0)) * c -
                 0.5;
      return detail::guarded(v);
    };
    eq.lo = 0.0;
    eq.hi = 1.0 - 1e-9;
  } else if (id == "E-C1") {
    eq.residual = [](double r) {
      return 2.0 * r * r * r * r + 5.0 * r * r * r + 5.0 * r * r + 5.0 * r - 1.0;
    };
    eq.lo = 0.0;
    eq.hi = 0.5;
  } else if (id == "E-C2") {
    eq.residual = [](double r) {
      return r * r * r * r + 2.0 * r * r * r + 3.0 * r * r + 3.0 * r - 1.0;
    };
    eq.lo = 0.0;
    eq.hi = 0.5;
  } else if (id == "E-G8") {
    eq.residual = [](double r) {
      double poly = 2.0 * r * r * r * r + 3.0 * r * r * r + r * r + 3.0 * r - 1.0;
      return poly + 2.0 * (1.0 + r) * (1.0 + r) *
                        (r + (1.0 - r) * std::log(1.0 - r));
    };
    eq.lo = 0.0;
    eq.hi = 1.0 / 3.0;
  } else if (id == "E-B") {
    // classical Bohr radius 1/3 as the a -> 1 margin of the Mobius family
    eq.residual = [](double r) { return 2.0 * r / (1.0 - r) - 1.0; };
    eq.lo = 0.0;
    eq.hi = 0.9;
  } else if (id == "E-E") {
    // second harmonic-extension radius 1/(2+k) = (K+1)/(3K+1)
    eq.residual = [k](double r) { return (2.0 + k) * r - 1.0; };
    eq.lo = 0.0;
    eq.hi = 0.99;
  } else if (id == "E-A1" || id == "E-A2") {
    double p = params.p;
    if (!(p >= 1.0) || p != std::floor(p) || p > 1000.0)
      throw BadParameter(id + ": tail start N (the p slot) must be a positive integer");
    double w = (id == "E-A1") ? 2.0 : 1.0;
    eq.residual = [w, p](double r) {
      return w * (1.0 + r) * std::pow(r, p) - (1.0 - r) * (1.0 - r);
    };
    eq.lo = 0.0;
    eq.hi = 1.0 - 1e-9;
  } else if (id == "E-C") {
    // (sqrt(17)-3)/4; the quadratic cofactor of the k = 0 slice of E-TT1
    eq.residual = [](double r) { return 2.0 * r * r + 3.0 * r - 1.0; };
    eq.lo = 0.0;
    eq.hi = 0.5;
  } else if (id == "E-D") {
    double a = params.a;
    if (!(a >= 0.0 && a <= 1.0))
      throw BadParameter("E-D: a must lie in [0,1]");
    eq.residual = [a](double r) { return (2.0 + a) * r - 1.0; };
    eq.lo = 0.0;
    eq.hi = 0.99;
  } else {
    throw UnknownId("no catalog equation named " + id);
  }

  detail::validate_bracket(eq);
  return eq;
}

/// Bisect to width <= 1e-13, then one damped Newton polish (finite-difference
/// slope), staying inside the bracket.
inline RadiusResult solve(const RadiusEquation& eq) {
  double lo = eq.lo, hi = eq.hi;
  double flo = eq.residual(lo);
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    double fm = eq.residual(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  double fx = eq.residual(x);
  double h = 1e-7;
  double slope = (eq.residual(x + h) - eq.residual(x - h)) / (2.0 * h);
  if (slope != 0.0) {
    double x1 = x - fx / slope;
    if (x1 > eq.lo && x1 < eq.hi && std::abs(eq.residual(x1)) <= std::abs(fx)) {
      x = x1;
      fx = eq.residual(x);
    }
  }
  return {x, fx, hi - lo};
}

/// Closed-form roots where the catalog has one; empty otherwise.
inline std::optional<double> closed_form(const std::string& id,
                                         RadiusParams params = {}) {
  double k = params.K_infinite ? 1.0 : (params.K - 1.0) / (params.K + 1.0);
  if (id == "E-T1") {
    // 2(1+k) r = 1 - r  =>  r = 1/(3 + 2k) = (K+1)/(5K+1)
    return 1.0 / (3.0 + 2.0 * k);
  }
  if (id == "E-T2" && params.p == 1.0) {
    // (2 + 2(1+k)) r = 1 - r  =>  r = 1/(5 + 2k) = (K+1)/(7K+3)
    return 1.0 / (5.0 + 2.0 * k);
  }
  if (id == "E-T4") {
    double p = params.p;
    if (!(p > 0.0 && p <= 2.0)) throw BadParameter("E-T4: p must lie in (0,2]");
    // (p - c) r^2 - (2p + c) r + p = 0 with c = 2(1+k); smaller positive root
    double c = 2.0 * (1.0 + k);
    return 2.0 * p / ((2.0 * p + c) + std::sqrt(c * (8.0 * p + c)));
  }
  if (id == "E-B") return 1.0 / 3.0;
  if (id == "E-E") return 1.0 / (2.0 + k);  // (K+1)/(3K+1)
  if (id == "E-C") return (std::sqrt(17.0) - 3.0) / 4.0;
  if (id == "E-D") {
    double a = params.a;
    if (!(a >= 0.0 && a <= 1.0)) throw BadParameter("E-D: a must lie in [0,1]");
    return 1.0 / (2.0 + a);
  }
  return std::nullopt;
}

struct LimitConsistency {
  std::string id;
  std::string limit_id;
  double max_deviation = 0.0;
  bool ok = false;
};

/// The k = 1 limits of E-TT1 / E-T7 / E-T6 coincide with E-C1 / E-C2 / E-G8
/// up to an overall sign. Compares residuals on 100 points of the common
/// bracket after sign normalization at the midpoint.
inline LimitConsistency limit_consistency(const std::string& id) {
  std::string limit_id;
  if (id == "E-TT1") limit_id = "E-C1";
  else if (id == "E-T7") limit_id = "E-C2";
  else if (id == "E-T6") limit_id = "E-G8";
  else throw UnknownId(id + " has no k=1 limit entry");

  RadiusParams params;
  params.K_infinite = true;
  RadiusEquation a = catalog(id, params);
  RadiusEquation b = catalog(limit_id);
  double lo = std::max(a.lo, b.lo);
  double hi = std::min(a.hi, b.hi);
  double mid = 0.5 * (lo + hi);
  double s = (a.residual(mid) / b.residual(mid) < 0.0) ? -1.0 : 1.0;
  double dev = 0.0;
  for (int i = 0; i < 100; ++i) {
    double x = lo + (hi - lo) * (i + 0.5) / 100.0;
    dev = std::max(dev, std::abs(a.residual(x) - s * b.residual(x)));
  }
  LimitConsistency out;
  out.id = id;
  out.limit_id = limit_id;
  out.max_deviation = dev;
  out.ok = dev <= 1e-12;
  return out;
}

}  // namespace bohr
