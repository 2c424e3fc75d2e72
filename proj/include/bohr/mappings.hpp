#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "bohr/coeffseq.hpp"
#include "bohr/errors.hpp"
#include "bohr/rng.hpp"

namespace bohr {

/// Dilatation-bound parameters: k = (K-1)/(K+1), K = (1+k)/(1-k) >= 1.
/// The infinite flag represents the K -> infinity limit (k = 1); it is valid
/// only for limit catalog entries, never for functional evaluation.
struct QuasiconformalParams {
  double K = 1.0;
  double k = 0.0;
  bool infinite = false;

  static QuasiconformalParams from_K(double K) {
    if (std::isinf(K) && K > 0) return infinite_K();
    if (!(K >= 1.0) || !std::isfinite(K))
      throw BadParameter("quasiconformal: K must be >= 1");
    QuasiconformalParams qc;
    qc.K = K;
    qc.k = (K - 1.0) / (K + 1.0);
    return qc;
  }

  static QuasiconformalParams from_k(double k) {
    if (!(k >= 0.0 && k < 1.0))
      throw BadParameter("quasiconformal: k must be in [0,1)");
    QuasiconformalParams qc;
    qc.k = k;
    qc.K = (1.0 + k) / (1.0 - k);
    return qc;
  }

  static QuasiconformalParams infinite_K() {
    QuasiconformalParams qc;
    qc.K = std::numeric_limits<double>::infinity();
    qc.k = 1.0;
    qc.infinite = true;
    return qc;
  }
};

/// f = h + conj(g): analytic part h, co-analytic part g (no constant term),
/// dilatation bounded by qc.k. b1_zero marks mappings with g'(0) = 0.
struct HarmonicMapping {
  CoefficientSequence h;
  CoefficientSequence g;
  QuasiconformalParams qc{};
  bool b1_zero = false;
};

inline void require_valid(const HarmonicMapping& f) {
  if (std::abs(f.g.coeffs()[0]) > 1e-15)
    throw NotNormalized("co-analytic part must have no constant term");
  if (f.b1_zero && f.g.max_index() >= 1 && std::abs(f.g.coeffs()[1]) > 1e-15)
    throw NotNormalized("b1_zero mapping has nonzero g'(0)");
  if (f.qc.infinite)
    throw BadParameter("mapping with infinite K cannot be evaluated");
}

enum class ExtremalFamily { MobiusPair, HalfPlane, MobiusZDilatation };

/// Parameters of the sharpness families: the disk automorphism pair
/// h = (a-z)/(1-az) with constant dilatation, the half-plane pair
/// h = a - 2(1-a)z/(1+z), and the Mobius analytic part with dilatation
/// omega = lambda k z.
struct ExtremalSpec {
  ExtremalFamily family = ExtremalFamily::MobiusPair;
  double a = 0.5;
  double phase = 0.0;  // dilatation factor lambda = exp(i*phase), |lambda| = 1
  QuasiconformalParams qc{};
};

namespace detail {

inline std::vector<std::complex<double>> mobius_coeffs(double a, std::size_t N) {
  // (a - z)/(1 - a z) = a - (1-a^2) sum_{n>=1} a^{n-1} z^n
  std::vector<std::complex<double>> c(N + 1, {0.0, 0.0});
  c[0] = a;
  double f = -(1.0 - a * a);
  for (std::size_t n = 1; n <= N; ++n) {
    c[n] = f;
    f *= a;
  }
  return c;
}

inline TailBound mobius_tail(double a, double scale = 1.0) {
  if (a == 0.0) return TailBound::zero();
  return TailBound::geometric(scale * (1.0 - a * a) / a, a);
}

}  // namespace detail

/// Smallest stored length N for which a geometric tail c q^n certifies
/// err <= target at every radius up to rho_max.
inline std::size_t suggested_terms(double c, double q, double rho_max = 0.95,
                                   double target = 1e-13) {
  if (c <= 0.0 || q * rho_max <= 0.0) return 8;
  double x = q * rho_max;
  if (x >= 1.0) throw TailNotCertifiable("suggested_terms: q*rho_max >= 1");
  double need = target * (1.0 - x) / c;
  std::size_t n = 8;
  double t = std::pow(x, 9.0);
  while (t > need && n < 4000) {
    t *= x;
    ++n;
  }
  return n;
}

/// Build one of the sharpness families with N stored coefficients.
inline HarmonicMapping make_extremal(const ExtremalSpec& spec, std::size_t N) {
  if (N < 2) throw BadParameter("make_extremal: N must be >= 2");
  if (!(spec.a >= 0.0 && spec.a < 1.0))
    throw BadParameter("make_extremal: a must be in [0,1)");
  if (spec.qc.infinite)
    throw BadParameter("make_extremal: extremal families need finite K");
  double a = spec.a;
  double k = spec.qc.k;
  std::complex<double> lambda = std::polar(1.0, spec.phase);

  HarmonicMapping f;
  f.qc = spec.qc;

  switch (spec.family) {
    case ExtremalFamily::MobiusPair: {
      auto hc = detail::mobius_coeffs(a, N);
      f.h = CoefficientSequence(hc, detail::mobius_tail(a));
      // g = lambda k (h - a): constant dilatation lambda k
      std::vector<std::complex<double>> gc(N + 1, {0.0, 0.0});
      for (std::size_t n = 1; n <= N; ++n) gc[n] = lambda * k * hc[n];
      f.g = CoefficientSequence(std::move(gc), detail::mobius_tail(a, k));
      f.b1_zero = (k == 0.0);
      break;
    }
    case ExtremalFamily::HalfPlane: {
      if (std::abs(lambda.imag()) > 1e-15)
        throw BadParameter(
            "make_extremal: half-plane dilatation factor must be +1 or -1");
      double lam = lambda.real();
      // A_n = 2(1-a)(-1)^n with exact alternating continuation
      double amp = 2.0 * (1.0 - a);
      std::vector<std::complex<double>> hc(N + 1, {0.0, 0.0});
      hc[0] = a;
      for (std::size_t n = 1; n <= N; ++n) hc[n] = (n % 2 ? -amp : amp);
      f.h = CoefficientSequence::alternating_extended(std::move(hc), amp);
      std::vector<std::complex<double>> gc(N + 1, {0.0, 0.0});
      double gamp = lam * k * amp;
      for (std::size_t n = 1; n <= N; ++n) gc[n] = (n % 2 ? -gamp : gamp);
      f.g = CoefficientSequence::alternating_extended(std::move(gc), gamp);
      f.b1_zero = (k == 0.0);
      break;
    }
    case ExtremalFamily::MobiusZDilatation: {
      auto hc = detail::mobius_coeffs(a, N);
      f.h = CoefficientSequence(std::move(hc), detail::mobius_tail(a));
      // omega = lambda k z: B_n = -lambda k ((n-1)/n)(1-a^2) a^{n-2}, n >= 2
      std::vector<std::complex<double>> gc(N + 1, {0.0, 0.0});
      double pw = 1.0;
      for (std::size_t n = 2; n <= N; ++n) {
        double nn = static_cast<double>(n);
        gc[n] = -lambda * k * ((nn - 1.0) / nn) * (1.0 - a * a) * pw;
        pw *= a;
      }
      TailBound gt = (a == 0.0)
                         ? TailBound::zero()
                         : TailBound::geometric(k * (1.0 - a * a) / (a * a), a);
      f.g = CoefficientSequence(std::move(gc), gt);
      f.b1_zero = true;
      break;
    }
  }
  return f;
}

/// One component of a convex blend of rotated disk automorphisms.
struct BlendComponent {
  double weight = 1.0;
  double theta = 0.0;
  double a = 0.0;
};

/// h(z) = sum_j w_j e^{i theta_j} (a_j - z)/(1 - a_j z) with w_j >= 0
/// normalized to sum 1; a genuine sup-norm <= 1 function for any component
/// list. Tail: |c_n| <= (sum_j w_j (1-a_j^2)/q) q^n with q = max_j a_j.
inline CoefficientSequence schur_blend(const std::vector<BlendComponent>& parts,
                                       std::size_t N) {
  if (parts.empty()) throw BadParameter("schur_blend: needs >= 1 component");
  double wsum = 0.0;
  for (const auto& p : parts) {
    if (!(p.weight >= 0.0)) throw BadParameter("schur_blend: weight < 0");
    if (!(p.a >= 0.0 && p.a <= 0.95))
      throw BadParameter("schur_blend: a must be in [0, 0.95]");
    wsum += p.weight;
  }
  if (!(wsum > 0.0)) throw BadParameter("schur_blend: zero total weight");

  std::vector<std::complex<double>> c(N + 1, {0.0, 0.0});
  double q = 0.0, csum = 0.0;
  for (const auto& p : parts) {
    double w = p.weight / wsum;
    std::complex<double> u = std::polar(1.0, p.theta);
    c[0] += w * u * p.a;
    std::complex<double> f = -w * u * (1.0 - p.a * p.a);
    for (std::size_t n = 1; n <= N; ++n) {
      c[n] += f;
      f *= p.a;
    }
    q = std::max(q, p.a);
    csum += w * (1.0 - p.a * p.a);
  }
  TailBound tail = (q == 0.0) ? TailBound::zero() : TailBound::geometric(csum / q, q);
  return CoefficientSequence(std::move(c), tail);
}

/// Seeded random Schur-class analytic part: m blend components with uniform
/// weights, angles, and a_j in [0, 0.9]. Identical seeds give identical
/// sequences.
inline CoefficientSequence sample_schur(std::uint64_t seed, int m,
                                        std::size_t N) {
  if (m < 1) throw BadParameter("sample_schur: m must be >= 1");
  detail::Rng rng(seed);
  std::vector<BlendComponent> parts(static_cast<std::size_t>(m));
  for (auto& p : parts) {
    p.weight = 0.05 + rng.uniform();
    p.theta = rng.uniform(0.0, 6.283185307179586);
    p.a = rng.uniform(0.0, 0.9);
  }
  return schur_blend(parts, N);
}

enum class DilatationMode { Constant, ZTimes };

/// Pair h with a co-analytic part produced by a concrete admissible
/// dilatation: omega = k e^{i phase} (Constant) gives b_n = k e^{i phase} a_n;
/// omega = k e^{i phase} z (ZTimes) gives b_n = k e^{i phase} (n-1) a_{n-1}/n
/// with b_1 = 0.
inline HarmonicMapping attach_dilatation(const CoefficientSequence& h, double k,
                                         DilatationMode mode,
                                         double phase = 0.0) {
  if (!(k >= 0.0 && k < 1.0))
    throw BadParameter("attach_dilatation: k must be in [0,1)");
  std::complex<double> w = std::polar(k, phase);
  const auto& a = h.coeffs();
  std::size_t N = h.max_index();
  HarmonicMapping f;
  f.h = h;
  f.qc = QuasiconformalParams::from_k(k);

  if (k == 0.0) {
    f.g = CoefficientSequence::polynomial({{0.0, 0.0}});
    f.b1_zero = true;
    return f;
  }

  if (mode == DilatationMode::Constant) {
    if (h.extension().active && std::abs(w.imag()) > 1e-15)
      throw BadParameter(
          "attach_dilatation: alternating sequences support real phase only");
    if (h.extension().active) w = {w.real(), 0.0};
    std::vector<std::complex<double>> g(N + 1, {0.0, 0.0});
    for (std::size_t n = 1; n <= N; ++n) g[n] = w * a[n];
    if (h.extension().active) {
      f.g = CoefficientSequence::alternating_extended(
          std::move(g), w.real() * h.extension().amp);
    } else {
      TailBound t = h.tail();
      if (t.kind == TailBound::Kind::Geometric)
        t = TailBound::geometric(k * t.c, t.q);
      f.g = CoefficientSequence(std::move(g), t);
    }
    f.b1_zero = (N >= 1 && std::abs(a[1]) == 0.0);
  } else {
    if (h.extension().active)
      throw BadParameter("attach_dilatation: ZTimes needs a decaying tail");
    std::vector<std::complex<double>> g(N + 2, {0.0, 0.0});
    for (std::size_t n = 2; n <= N + 1; ++n) {
      double nn = static_cast<double>(n);
      g[n] = w * ((nn - 1.0) / nn) * a[n - 1];
    }
    TailBound t = h.tail();
    if (t.kind == TailBound::Kind::Geometric) {
      // |b_n| <= k |a_{n-1}| <= k c q^{n-1}
      t = TailBound::geometric(t.q > 0.0 ? k * t.c / t.q : 0.0, t.q);
    }
    f.g = CoefficientSequence(std::move(g), t);
    f.b1_zero = true;
  }
  return f;
}

/// Sampled check of |g'(z)| <= k |h'(z)| on a polar grid, within certified
/// evaluation error. Guards user-supplied mappings; generator output passes
/// by construction.
struct DilatationCheck {
  bool ok = true;
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::complex<double> worst_z{0.0, 0.0};
};

inline DilatationCheck check_dilatation(const HarmonicMapping& f,
                                        int n_theta = 32, int n_r = 8,
                                        double r_max = 0.95,
                                        double tol = 1e-9) {
  DilatationCheck out;
  double k = f.qc.k;
  for (int ir = 1; ir <= n_r; ++ir) {
    double r = r_max * ir / n_r;
    for (int it = 0; it < n_theta; ++it) {
      double th = 6.283185307179586 * it / n_theta;
      std::complex<double> z = std::polar(r, th);
      auto hp = eval_series(f.h, z, 1);
      auto gp = eval_series(f.g, z, 1);
      double excess =
          (std::abs(gp.value) - gp.err) - k * (std::abs(hp.value) + hp.err);
      if (excess > out.worst_excess) {
        out.worst_excess = excess;
        out.worst_z = z;
      }
    }
  }
  out.ok = out.worst_excess <= tol;
  return out;
}

}  // namespace bohr
