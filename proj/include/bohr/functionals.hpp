#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bohr/bounded.hpp"
#include "bohr/coeffseq.hpp"
#include "bohr/errors.hpp"
#include "bohr/mappings.hpp"
#include "bohr/radii.hpp"

namespace bohr {

enum class FunctionalId { FT1, FT3, FTT1, FT7, FT2, FT4, FT6, FTF };

inline std::string to_string(FunctionalId id) {
  switch (id) {
    case FunctionalId::FT1: return "F-T1";
    case FunctionalId::FT3: return "F-T3";
    case FunctionalId::FTT1: return "F-TT1";
    case FunctionalId::FT7: return "F-T7";
    case FunctionalId::FT2: return "F-T2";
    case FunctionalId::FT4: return "F-T4";
    case FunctionalId::FT6: return "F-T6";
    case FunctionalId::FTF: return "F-TF";
  }
  return "?";
}

inline FunctionalId parse_functional_id(const std::string& s) {
  if (s == "F-T1") return FunctionalId::FT1;
  if (s == "F-T3") return FunctionalId::FT3;
  if (s == "F-TT1") return FunctionalId::FTT1;
  if (s == "F-T7") return FunctionalId::FT7;
  if (s == "F-T2") return FunctionalId::FT2;
  if (s == "F-T4") return FunctionalId::FT4;
  if (s == "F-T6") return FunctionalId::FT6;
  if (s == "F-TF") return FunctionalId::FTF;
  throw UnknownId("no functional named " + s);
}

struct PointRule {
  enum class Kind { RadialNegative, RadialPositive, Grid };
  Kind kind = Kind::RadialNegative;
  int n_theta = 64;

  static PointRule radial_negative() { return {}; }
  static PointRule radial_positive() { return {Kind::RadialPositive, 64}; }
  static PointRule grid(int n_theta) {
    if (n_theta < 1) throw BadParameter("grid rule needs n_theta >= 1");
    return {Kind::Grid, n_theta};
  }
};

/// Which inequality to evaluate, at which dilatation bound, with the
/// id-specific exponents: s and p for F-T2 (a_0^s + |h(z)-a_0|^p), p for
/// F-T4 (|h(z)|^p).
struct FunctionalSpec {
  FunctionalId id = FunctionalId::FT1;
  QuasiconformalParams qc{};
  int s = 1;
  double p = 1.0;
};

inline void validate_spec(const FunctionalSpec& spec) {
  if (spec.qc.infinite)
    throw BadParameter("functional evaluation needs finite K");
  if (spec.id == FunctionalId::FT2) {
    if (spec.s != 1 && spec.s != 2)
      throw BadParameter("F-T2: s must be 1 or 2");
    if (!(spec.p >= 1.0) || spec.p != std::floor(spec.p) || spec.p > 60.0)
      throw BadParameter("F-T2: p must be a positive integer");
  }
  if (spec.id == FunctionalId::FT4 && !(spec.p > 0.0 && spec.p <= 2.0))
    throw BadParameter("F-T4: p must lie in (0,2]");
}

inline bool z_dependent(FunctionalId id) {
  switch (id) {
    case FunctionalId::FTT1:
    case FunctionalId::FT7:
    case FunctionalId::FT2:
    case FunctionalId::FT4:
    case FunctionalId::FT6:
      return true;
    default:
      return false;
  }
}

inline PointRule default_point_rule(FunctionalId id) {
  return z_dependent(id) ? PointRule::grid(64) : PointRule::radial_negative();
}

/// Catalog equation giving the sharp radius of a functional spec.
inline std::string equation_id(const FunctionalSpec& spec) {
  switch (spec.id) {
    case FunctionalId::FT1:
    case FunctionalId::FT3: return "E-T1";
    case FunctionalId::FTT1: return "E-TT1";
    case FunctionalId::FT7: return "E-T7";
    case FunctionalId::FT2: return "E-T2";
    case FunctionalId::FT4: return "E-T4";
    case FunctionalId::FT6: return "E-T6";
    case FunctionalId::FTF: return "E-TF-sharp";
  }
  throw UnknownId("unmapped functional id");
}

inline double sharp_radius(const FunctionalSpec& spec) {
  validate_spec(spec);
  RadiusParams params;
  params.K = spec.qc.K;
  params.p = spec.p;
  if (auto cf = closed_form(equation_id(spec), params)) return *cf;
  return solve(catalog(equation_id(spec), params)).rho0;
}

enum class Verdict { Holds, Violated, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Violated: return "Violated";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct InequalityReport {
  BoundedValue lhs{};
  double bound = 1.0;
  double margin = 0.0;  // bound - lhs.value
  Verdict verdict = Verdict::Inconclusive;
};

inline Verdict classify(const BoundedValue& lhs, double bound) {
  if (lhs.value + lhs.err <= bound + 1e-12) return Verdict::Holds;
  if (lhs.value - lhs.err > bound) return Verdict::Violated;
  return Verdict::Inconclusive;
}

/// Certified LHS of the spec's inequality for mapping f at radius rho and
/// point z on |z| = rho. The bound is 1 in every case (sup-norm-normalized
/// inputs).
inline BoundedValue evaluate(const FunctionalSpec& spec,
                             const HarmonicMapping& f, double rho,
                             std::complex<double> z) {
  validate_spec(spec);
  require_valid(f);
  if (!(rho >= 0.0 && rho < 1.0))
    throw BadParameter("evaluate: rho must lie in [0,1)");
  if (std::abs(std::abs(z) - rho) > 1e-12 * std::max(1.0, rho))
    throw PointOffCircle("evaluate: |z| != rho");
  if (f.qc.k > spec.qc.k + 1e-12)
    throw NotNormalized("mapping dilatation bound exceeds the spec's k");

  const bool needs_b1 =
      spec.id == FunctionalId::FT6 || spec.id == FunctionalId::FTF;
  if (needs_b1 && !f.b1_zero)
    throw MissingB1Zero(to_string(spec.id) + " needs g'(0) = 0");
  if (spec.id == FunctionalId::FT6 && rho > 1.0 / 3.0 + 1e-15)
    throw RadiusOutOfLemmaRange("F-T6 is valid only for rho <= 1/3");

  std::complex<double> a0 = f.h.coeffs()[0];
  if (spec.id == FunctionalId::FT2) {
    if (std::abs(a0.imag()) > 1e-12 || !(a0.real() >= 0.0 && a0.real() < 1.0))
      throw NotNormalized("F-T2 needs real h(0) in [0,1)");
  } else {
    require_schur_plausible(f.h);
  }

  BoundedValue lhs{0.0, 0.0};
  switch (spec.id) {
    case FunctionalId::FT1: {
      lhs += majorant_sum(f.h, rho, 0);
      lhs += majorant_sum(f.g, rho, 1);
      lhs += scaled(area_functional(f.h, rho),
                    lambda_area_coefficient(spec.qc));
      break;
    }
    case FunctionalId::FT3: {
      lhs += majorant_sum(f.h, rho, 0);
      lhs += refined_weight_sum(f.h, rho);
      lhs += majorant_sum(f.g, rho, 1);
      lhs += scaled(area_functional(f.h, rho),
                    lambda_area_coefficient(spec.qc));
      break;
    }
    case FunctionalId::FTT1: {
      lhs += abs_bounded(eval_series(f.h, z, 0));
      lhs += scaled(abs_bounded(eval_series(f.h, z, 1)), rho);
      lhs += majorant_sum(f.h, rho, 2);
      lhs += majorant_sum(f.g, rho, 1);
      break;
    }
    case FunctionalId::FT7: {
      lhs += pow_enclosure(abs_bounded(eval_series(f.h, z, 0)), 2.0);
      lhs += scaled(abs_bounded(eval_series(f.h, z, 1)), rho);
      lhs += majorant_sum(f.h, rho, 2);
      lhs += majorant_sum(f.g, rho, 1);
      break;
    }
    case FunctionalId::FT2: {
      lhs += BoundedValue{std::pow(a0.real(), static_cast<double>(spec.s)), 0.0};
      lhs += pow_enclosure(abs_bounded(eval_series(f.h, z, 0) - a0), spec.p);
      lhs += majorant_sum(f.h, rho, 1);
      lhs += majorant_sum(f.g, rho, 1);
      break;
    }
    case FunctionalId::FT4: {
      lhs += pow_enclosure(abs_bounded(eval_series(f.h, z, 0)), spec.p);
      lhs += majorant_sum(f.h, rho, 1);
      lhs += refined_weight_sum(f.h, rho);
      lhs += majorant_sum(f.g, rho, 1);
      break;
    }
    case FunctionalId::FT6: {
      lhs += abs_bounded(eval_series(f.h, z, 0));
      lhs += scaled(abs_bounded(eval_series(f.h, z, 1)), rho);
      lhs += majorant_sum(f.h, rho, 2);
      lhs += refined_weight_sum(f.h, rho);
      lhs += majorant_sum(f.g, rho, 2);
      break;
    }
    case FunctionalId::FTF: {
      lhs += majorant_sum(f.h, rho, 0);
      lhs += majorant_sum(f.g, rho, 2);
      break;
    }
  }
  return lhs;
}

/// Evaluate at the rule's points (max over a grid approximates the sup over
/// |z| = rho) and classify against bound 1.
inline InequalityReport check(const FunctionalSpec& spec,
                              const HarmonicMapping& f, double rho,
                              PointRule rule) {
  std::vector<std::complex<double>> points;
  if (!z_dependent(spec.id) || rule.kind == PointRule::Kind::RadialNegative) {
    points.push_back({-rho, 0.0});
  } else if (rule.kind == PointRule::Kind::RadialPositive) {
    points.push_back({rho, 0.0});
  } else {
    for (int j = 0; j < rule.n_theta; ++j) {
      double th = 6.283185307179586 * j / rule.n_theta;
      points.push_back(std::polar(rho, th));
    }
  }
  InequalityReport rep;
  bool first = true;
  for (const auto& z : points) {
    BoundedValue v = evaluate(spec, f, rho, z);
    if (first || v.value > rep.lhs.value) {
      rep.lhs = v;
      first = false;
    }
  }
  rep.bound = 1.0;
  rep.margin = rep.bound - rep.lhs.value;
  rep.verdict = classify(rep.lhs, rep.bound);
  return rep;
}

}  // namespace bohr
