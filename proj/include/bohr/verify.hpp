#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/io.hpp"
#include "bohr/mappings.hpp"
#include "bohr/radii.hpp"
#include "bohr/rng.hpp"

namespace bohr {

struct Violation {
  std::uint64_t trial = 0;
  double rho = 0.0;
  BoundedValue lhs{};
  std::string verdict;
  std::string mapping_json;  // serialized sample for replay
};

struct CampaignReport {
  std::string spec;
  double K = 1.0;
  int trials = 0;
  std::uint64_t seed = 0;
  long holds = 0;
  long violated = 0;
  long inconclusive = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<Violation> violations;
  std::vector<std::string> errors;

  long total() const { return holds + violated + inconclusive; }
  bool ok() const { return violated == 0 && inconclusive == 0 && errors.empty(); }
};

namespace detail {

// verdict against a two-sided certified bound
inline Verdict classify_between(const BoundedValue& lhs, const BoundedValue& rhs) {
  if (lhs.hi() <= rhs.lo() + 1e-12) return Verdict::Holds;
  if (lhs.lo() > rhs.hi()) return Verdict::Violated;
  return Verdict::Inconclusive;
}

inline void tally(CampaignReport& rep, Verdict v) {
  switch (v) {
    case Verdict::Holds: ++rep.holds; break;
    case Verdict::Violated: ++rep.violated; break;
    case Verdict::Inconclusive: ++rep.inconclusive; break;
  }
}

}  // namespace detail

/// Sweep `trials` seeded admissible mappings against the spec's inequality at
/// 10 radii in (0, rho0]. A theorem holds below its sharp radius, so any
/// Violated or Inconclusive entry is a defect (or an inadmissible input) and
/// is recorded with the serialized mapping.
inline CampaignReport verify_theorem(FunctionalSpec spec, double K, int trials,
                                     std::uint64_t seed) {
  if (trials < 1) throw BadParameter("verify_theorem: trials must be >= 1");
  spec.qc = QuasiconformalParams::from_K(K);
  validate_spec(spec);
  CampaignReport rep;
  rep.spec = to_string(spec.id);
  rep.K = K;
  rep.trials = trials;
  rep.seed = seed;

  double rho0 = sharp_radius(spec);
  PointRule rule = default_point_rule(spec.id);
  const bool needs_b1 =
      spec.id == FunctionalId::FT6 || spec.id == FunctionalId::FTF;

  for (int t = 0; t < trials; ++t) {
    std::uint64_t st = detail::derive_seed(seed, static_cast<std::uint64_t>(t));
    try {
      detail::Rng rng(detail::derive_seed(st, 2));
      int m = 1 + rng.uniform_int(4);
      CoefficientSequence h = sample_schur(detail::derive_seed(st, 1), m, 64);
      if (spec.id == FunctionalId::FT2) {
        // rotate so h(0) is real and nonnegative
        std::complex<double> a0 = h.coeffs()[0];
        if (std::abs(a0) > 0.0) h = rotated(h, std::conj(a0) / std::abs(a0));
      }
      double phase = rng.uniform(0.0, 6.283185307179586);
      DilatationMode mode =
          needs_b1 ? DilatationMode::ZTimes : DilatationMode::Constant;
      HarmonicMapping f = attach_dilatation(h, spec.qc.k, mode, phase);
      for (int i = 1; i <= 10; ++i) {
        double rho = rho0 * i / 10.0;
        InequalityReport r = check(spec, f, rho, rule);
        detail::tally(rep, r.verdict);
        rep.worst_margin = std::min(rep.worst_margin, r.margin);
        if (r.verdict != Verdict::Holds) {
          Violation v;
          v.trial = static_cast<std::uint64_t>(t);
          v.rho = rho;
          v.lhs = r.lhs;
          v.verdict = to_string(r.verdict);
          v.mapping_json = mapping_to_json(f).dump();
          rep.violations.push_back(std::move(v));
        }
      }
    } catch (const std::exception& e) {
      rep.errors.push_back("trial " + std::to_string(t) + ": " + e.what());
    }
  }
  return rep;
}

struct SharpnessSample {
  double a = 0.0;
  double rho = 0.0;
  BoundedValue lhs{};
  Verdict verdict = Verdict::Inconclusive;
};

struct SharpnessScan {
  std::string spec;
  double K = 1.0;
  double rho0 = 0.0;
  std::vector<SharpnessSample> samples;
  std::optional<SharpnessSample> witness;
  std::string witness_mapping_json;
};

/// Scan the spec's designated extremal family just above the sharp radius
/// looking for a certified violation (the sharpness direction of the
/// theorem). A found witness is re-evaluated at doubled truncation before
/// being accepted.
inline SharpnessScan sharpness_scan(FunctionalSpec spec, double K,
                                    std::vector<double> a_list = {},
                                    std::vector<double> delta_list = {}) {
  spec.qc = QuasiconformalParams::from_K(K);
  validate_spec(spec);
  SharpnessScan scan;
  scan.spec = to_string(spec.id);
  scan.K = K;
  scan.rho0 = sharp_radius(spec);

  if (a_list.empty()) {
    for (int j = 1; j <= 6; ++j) {
      double eps = std::pow(10.0, -j);
      a_list.push_back(spec.id == FunctionalId::FT2 ? eps : 1.0 - eps);
    }
  }
  if (delta_list.empty()) delta_list = {0.05};

  ExtremalFamily family = ExtremalFamily::MobiusPair;
  if (spec.id == FunctionalId::FT2) family = ExtremalFamily::HalfPlane;
  if (spec.id == FunctionalId::FT6 || spec.id == FunctionalId::FTF)
    family = ExtremalFamily::MobiusZDilatation;

  for (double delta : delta_list) {
    if (!(delta > 0.0))
      throw BadParameter("sharpness_scan: every delta must be > 0");
    double rho = scan.rho0 * (1.0 + delta);
    if (spec.id == FunctionalId::FT6)
      rho = std::min(rho, 1.0 / 3.0 * (1.0 - 1e-9));
    rho = std::min(rho, 0.99);
    std::complex<double> z{-rho, 0.0};

    for (double a : a_list) {
      if (!(a >= 0.0 && a < 1.0))
        throw BadParameter("sharpness_scan: a must lie in [0,1)");
      ExtremalSpec es;
      es.family = family;
      es.a = a;
      es.qc = spec.qc;
      auto terms = [&](std::size_t scale) {
        if (family == ExtremalFamily::HalfPlane) return std::size_t{48} * scale;
        double c = (1.0 - a * a) / std::max(a, 0.1);
        if (family == ExtremalFamily::MobiusZDilatation)
          c = std::max(c, (1.0 - a * a) / std::max(a * a, 0.01));
        std::size_t n = suggested_terms(c, a, rho, 1e-13);
        return std::max<std::size_t>(16, n) * scale;
      };
      HarmonicMapping f = make_extremal(es, terms(1));
      BoundedValue lhs = evaluate(spec, f, rho, z);
      SharpnessSample sample{a, rho, lhs, classify(lhs, 1.0)};
      scan.samples.push_back(sample);
      if (sample.verdict == Verdict::Violated) {
        // rule out truncation artifacts before accepting the witness
        HarmonicMapping f2 = make_extremal(es, terms(2));
        BoundedValue lhs2 = evaluate(spec, f2, rho, z);
        if (classify(lhs2, 1.0) == Verdict::Violated) {
          scan.witness = sample;
          scan.witness_mapping_json = mapping_to_json(f).dump();
          return scan;
        }
      }
    }
  }
  return scan;
}

enum class LemmaId { L1, L2, L3, L4, L5, L6 };

inline std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return "L1";
    case LemmaId::L2: return "L2";
    case LemmaId::L3: return "L3";
    case LemmaId::L4: return "L4";
    case LemmaId::L5: return "L5";
    case LemmaId::L6: return "L6";
  }
  return "?";
}

inline LemmaId parse_lemma_id(const std::string& s) {
  if (s == "L1") return LemmaId::L1;
  if (s == "L2") return LemmaId::L2;
  if (s == "L3") return LemmaId::L3;
  if (s == "L4") return LemmaId::L4;
  if (s == "L5") return LemmaId::L5;
  if (s == "L6") return LemmaId::L6;
  throw UnknownId("no lemma named " + s);
}

namespace detail {

inline void record_lemma_violation(CampaignReport& rep, int trial,
                                   double rho, const BoundedValue& lhs,
                                   Verdict v, const json& payload) {
  if (v == Verdict::Holds) return;
  Violation viol;
  viol.trial = static_cast<std::uint64_t>(trial);
  viol.rho = rho;
  viol.lhs = lhs;
  viol.verdict = to_string(v);
  viol.mapping_json = payload.dump();
  rep.violations.push_back(std::move(viol));
}

}  // namespace detail

/// Property campaign for one of the coefficient lemmas the inequalities rest
/// on. These are proved statements: any Violated entry indicates an
/// implementation bug, which is exactly what the suite exists to catch.
inline CampaignReport verify_lemma(LemmaId id, int trials, std::uint64_t seed) {
  if (trials < 1) throw BadParameter("verify_lemma: trials must be >= 1");
  CampaignReport rep;
  rep.spec = to_string(id);
  rep.K = 0.0;
  rep.trials = trials;
  rep.seed = seed;

  for (int t = 0; t < trials; ++t) {
    std::uint64_t st = detail::derive_seed(seed, static_cast<std::uint64_t>(t));
    detail::Rng rng(detail::derive_seed(st, 2));
    int m = 1 + rng.uniform_int(4);

    switch (id) {
      case LemmaId::L1: {
        CoefficientSequence h = sample_schur(detail::derive_seed(st, 1), m, 160);
        double a0 = std::abs(h.coeffs()[0]);
        for (int i = 0; i < 8; ++i) {
          double r = (i == 0) ? 0.0 : 0.9 * std::sqrt(rng.uniform());
          std::complex<double> z = std::polar(r, rng.uniform(0.0, 6.283185307179586));
          BoundedValue lhs = abs_bounded(eval_series(h, z, 0));
          BoundedValue rhs{(a0 + r) / (1.0 + a0 * r), 0.0};
          Verdict v = detail::classify_between(lhs, rhs);
          detail::tally(rep, v);
          detail::record_lemma_violation(
              rep, t, r, lhs, v,
              json{{"lemma", "L1"}, {"z", {z.real(), z.imag()}},
                   {"h", sequence_to_json(h)}});
        }
        break;
      }
      case LemmaId::L2: {
        CoefficientSequence h = sample_schur(detail::derive_seed(st, 1), m, 160);
        for (int i = 0; i < 4; ++i) {
          double r = 0.85 * std::sqrt(rng.uniform());
          std::complex<double> z = std::polar(r, rng.uniform(0.0, 6.283185307179586));
          BoundedValue f0 = abs_bounded(eval_series(h, z, 0));
          double flo = std::clamp(f0.lo(), 0.0, 1.0);
          double fhi = std::clamp(f0.hi(), 0.0, 1.0);
          for (unsigned n = 1; n <= 3; ++n) {
            double fact = (n == 1 ? 1.0 : n == 2 ? 2.0 : 6.0);
            BoundedValue lhs = scaled(abs_bounded(eval_series(h, z, n)), 1.0 / fact);
            double den = std::pow(1.0 - r, static_cast<double>(n) - 1.0) *
                         (1.0 - r * r);
            BoundedValue rhs{(1.0 - 0.5 * (flo * flo + fhi * fhi)) / den,
                             0.5 * (fhi * fhi - flo * flo) / den};
            Verdict v = detail::classify_between(lhs, rhs);
            detail::tally(rep, v);
            detail::record_lemma_violation(
                rep, t, r, lhs, v,
                json{{"lemma", "L2"}, {"n", n}, {"z", {z.real(), z.imag()}},
                     {"h", sequence_to_json(h)}});
          }
        }
        break;
      }
      case LemmaId::L3:
      case LemmaId::L4: {
        // equality cases (constant dilatation in L3, the z h' identity in L4)
        // need the stored run long enough that tail error clears the slack
        CoefficientSequence h = sample_schur(detail::derive_seed(st, 1), m, 160);
        double k = (t % 7 == 0) ? 0.0 : rng.uniform(0.0, 0.95);
        double phase = rng.uniform(0.0, 6.283185307179586);
        DilatationMode mode = (id == LemmaId::L4 || t % 2 == 0)
                                  ? DilatationMode::ZTimes
                                  : DilatationMode::Constant;
        HarmonicMapping f = attach_dilatation(h, k, mode, phase);
        if (id == LemmaId::L3) {
          for (int i = 1; i <= 9; ++i) {
            double rho = i / 10.0;
            BoundedValue lhs = power_square_sum(f.g, rho, 1);
            BoundedValue rhs = scaled(power_square_sum(f.h, rho, 1), k * k);
            Verdict v = detail::classify_between(lhs, rhs);
            detail::tally(rep, v);
            detail::record_lemma_violation(
                rep, t, rho, lhs, v,
                json{{"lemma", "L3"}, {"mapping", mapping_to_json(f)}});
          }
        } else {
          for (int i = 1; i <= 10; ++i) {
            double rho = i / 30.0;
            BoundedValue lhs = derivative_majorant_sum(f.g, rho, 1);
            BoundedValue rhs =
                scaled(derivative_majorant_sum(f.h, rho, 1), k * rho);
            Verdict v = detail::classify_between(lhs, rhs);
            detail::tally(rep, v);
            detail::record_lemma_violation(
                rep, t, rho, lhs, v,
                json{{"lemma", "L4"}, {"mapping", mapping_to_json(f)}});
          }
        }
        break;
      }
      case LemmaId::L5: {
        CoefficientSequence h = sample_schur(detail::derive_seed(st, 1), m, 160);
        double a0 = std::abs(h.coeffs()[0]);
        int N = 1 + t % 4;
        int tt = (N - 1) / 2;
        for (int i = 1; i <= 9; ++i) {
          double rho = i / 10.0;
          double geom = std::pow(rho, N) / (1.0 - rho);
          BoundedValue lhs = majorant_sum(h, rho, static_cast<std::size_t>(N));
          double head = 0.0;
          for (int n = 1; n <= tt; ++n) head += std::norm(h.coeffs()[n]);
          lhs += BoundedValue{head * geom, 0.0};
          double w = 1.0 / (1.0 + a0) + rho / (1.0 - rho);
          lhs += scaled(power_square_sum(h, rho * rho,
                                         static_cast<std::size_t>(tt) + 1),
                        w);
          BoundedValue rhs{(1.0 - a0 * a0) * geom, 0.0};
          Verdict v = detail::classify_between(lhs, rhs);
          detail::tally(rep, v);
          detail::record_lemma_violation(
              rep, t, rho, lhs, v,
              json{{"lemma", "L5"}, {"N", N}, {"h", sequence_to_json(h)}});
        }
        break;
      }
      case LemmaId::L6: {
        // positive-real-part functions: conic combinations of disk kernels
        // (1 + b z)/(1 - b z), plus half-plane blends on odd trials
        std::vector<std::complex<double>> p(33, {0.0, 0.0});
        if (t % 2 == 0) {
          for (int j = 0; j < m; ++j) {
            double c = rng.uniform(0.05, 1.0);
            std::complex<double> b =
                std::polar(rng.uniform(0.0, 0.95), rng.uniform(0.0, 6.283185307179586));
            p[0] += c;
            std::complex<double> bn = b;
            for (std::size_t n = 1; n < p.size(); ++n) {
              p[n] += 2.0 * c * bn;
              bn *= b;
            }
          }
        } else {
          for (int j = 0; j < m; ++j) {
            double w = rng.uniform(0.05, 1.0);
            double a = rng.uniform(0.0, 0.9);
            double amp = w * (1.0 - a);
            p[0] += amp;
            for (std::size_t n = 1; n < p.size(); ++n)
              p[n] += 2.0 * amp * (n % 2 ? -1.0 : 1.0);
          }
        }
        double cap = 2.0 * p[0].real();
        for (std::size_t n = 1; n < p.size(); ++n) {
          BoundedValue lhs{std::abs(p[n]), 0.0};
          BoundedValue rhs{cap, 0.0};
          Verdict v = detail::classify_between(lhs, rhs);
          detail::tally(rep, v);
          detail::record_lemma_violation(
              rep, t, 0.0, lhs, v,
              json{{"lemma", "L6"}, {"n", n}, {"p0", {p[0].real(), p[0].imag()}}});
        }
        break;
      }
    }
  }
  return rep;
}

struct MonotonicityRow {
  std::string id;
  double K = 1.0;
  double rho0 = 0.0;
};

struct MonotonicityReport {
  std::vector<MonotonicityRow> rows;
  bool ok = true;
  std::vector<std::string> failures;
};

/// Solve each K-dependent catalog equation over a K grid and assert the root
/// strictly decreases (a tighter dilatation bound shrinks every radius).
inline MonotonicityReport radius_monotonicity(
    const std::vector<std::string>& ids, std::vector<double> K_grid,
    double p = 1.0) {
  if (K_grid.empty()) throw BadParameter("radius_monotonicity: empty K grid");
  std::sort(K_grid.begin(), K_grid.end());
  MonotonicityReport rep;
  for (const auto& id : ids) {
    if (id == "E-C1" || id == "E-C2" || id == "E-G8" || id == "E-B" ||
        id == "E-C" || id == "E-D" || id == "E-A1" || id == "E-A2")
      throw BadParameter(id + " has no K dependence");
    double prev = std::numeric_limits<double>::infinity();
    for (double K : K_grid) {
      RadiusParams params;
      params.K = K;
      params.p = p;
      double rho0 = solve(catalog(id, params)).rho0;
      rep.rows.push_back({id, K, rho0});
      if (!(rho0 < prev - 1e-12)) {
        rep.ok = false;
        rep.failures.push_back(id + " not strictly decreasing at K = " +
                               std::to_string(K));
      }
      prev = rho0;
    }
  }
  return rep;
}

inline json campaign_to_json(const CampaignReport& rep) {
  json viols = json::array();
  for (const auto& v : rep.violations)
    viols.push_back({{"trial", v.trial},
                     {"rho", v.rho},
                     {"lhs", bounded_to_json(v.lhs)},
                     {"verdict", v.verdict},
                     {"sample", json::parse(v.mapping_json)}});
  return {{"schema", 1},
          {"spec", rep.spec},
          {"K", rep.K},
          {"trials", rep.trials},
          {"seed", rep.seed},
          {"holds", rep.holds},
          {"violated", rep.violated},
          {"inconclusive", rep.inconclusive},
          {"worst_margin", rep.worst_margin},
          {"violations", viols},
          {"errors", rep.errors}};
}

inline json scan_to_json(const SharpnessScan& scan) {
  json samples = json::array();
  for (const auto& s : scan.samples)
    samples.push_back({{"a", s.a},
                       {"rho", s.rho},
                       {"lhs", bounded_to_json(s.lhs)},
                       {"verdict", to_string(s.verdict)}});
  json j = {{"schema", 1},
            {"spec", scan.spec},
            {"K", scan.K},
            {"rho0", scan.rho0},
            {"samples", samples}};
  if (scan.witness) {
    j["witness"] = {{"a", scan.witness->a},
                    {"rho", scan.witness->rho},
                    {"lhs", bounded_to_json(scan.witness->lhs)},
                    {"mapping", json::parse(scan.witness_mapping_json)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline json monotonicity_to_json(const MonotonicityReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"id", r.id}, {"K", r.K}, {"rho0", r.rho0}});
  return {{"schema", 1}, {"rows", rows}, {"ok", rep.ok}, {"failures", rep.failures}};
}

}  // namespace bohr
