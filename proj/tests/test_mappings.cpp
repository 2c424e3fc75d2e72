#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "bohr/bohr.hpp"

using namespace bohr;
using std::complex;

TEST_CASE("quasiconformal parameter conversions") {
  REQUIRE(QuasiconformalParams::from_K(1.0).k == 0.0);
  REQUIRE(QuasiconformalParams::from_K(3.0).k == Catch::Approx(0.5));
  for (double K : {1.0, 2.0, 5.0, 100.0}) {
    QuasiconformalParams qc = QuasiconformalParams::from_K(K);
    REQUIRE(QuasiconformalParams::from_k(qc.k).K == Catch::Approx(K).margin(1e-12));
  }
  REQUIRE(QuasiconformalParams::infinite_K().infinite);
  REQUIRE(QuasiconformalParams::infinite_K().k == 1.0);
  double inf = std::numeric_limits<double>::infinity();
  REQUIRE(QuasiconformalParams::from_K(inf).infinite);
  REQUIRE_THROWS_AS(QuasiconformalParams::from_K(0.5), BadParameter);
  REQUIRE_THROWS_AS(QuasiconformalParams::from_k(1.0), BadParameter);
}

TEST_CASE("mobius pair family coefficients and values") {
  ExtremalSpec spec;
  spec.family = ExtremalFamily::MobiusPair;
  spec.a = 0.5;
  spec.qc = QuasiconformalParams::from_K(3.0);  // k = 1/2
  HarmonicMapping f = make_extremal(spec, 32);

  auto& A = f.h.coeffs();
  REQUIRE(A[0] == complex<double>(0.5, 0.0));
  REQUIRE(std::abs(A[1] - complex<double>(-0.75, 0.0)) < 1e-15);
  REQUIRE(std::abs(A[2] - complex<double>(-0.375, 0.0)) < 1e-15);
  auto& B = f.g.coeffs();
  REQUIRE(B[0] == complex<double>(0.0, 0.0));
  REQUIRE(std::abs(B[1] - complex<double>(-0.375, 0.0)) < 1e-15);
  REQUIRE_FALSE(f.b1_zero);
  REQUIRE_NOTHROW(require_valid(f));

  // h(-rho) = (a + rho)/(1 + a rho)
  for (double rho : {0.1, 0.3, 0.6}) {
    ComplexBounded v = eval_series(f.h, {-rho, 0.0}, 0);
    double exact = (0.5 + rho) / (1.0 + 0.5 * rho);
    REQUIRE(std::abs(v.value - exact) <= v.err + 1e-12);
  }
}

TEST_CASE("half-plane family uses the exact alternating extension") {
  ExtremalSpec spec;
  spec.family = ExtremalFamily::HalfPlane;
  spec.a = 0.25;
  spec.qc = QuasiconformalParams::from_K(2.0);
  HarmonicMapping f = make_extremal(spec, 8);

  REQUIRE(f.h.extension().active);
  REQUIRE(f.h.extension().amp == Catch::Approx(1.5));
  REQUIRE(std::abs(f.h.coeffs()[3] - complex<double>(-1.5, 0.0)) < 1e-15);
  REQUIRE(std::abs(f.g.coeffs()[2] - complex<double>(0.5, 0.0)) < 1e-15);

  // phase must stay real for the alternating representation
  ExtremalSpec bad = spec;
  bad.phase = 0.3;
  REQUIRE_THROWS_AS(make_extremal(bad, 8), BadParameter);
  ExtremalSpec neg = spec;
  neg.phase = 3.14159265358979323846;
  REQUIRE_NOTHROW(make_extremal(neg, 8));
}

TEST_CASE("mobius-z-dilatation family matches its closed-form coefficients") {
  ExtremalSpec spec;
  spec.family = ExtremalFamily::MobiusZDilatation;
  spec.a = 0.5;
  spec.qc = QuasiconformalParams::from_k(0.5);
  HarmonicMapping f = make_extremal(spec, 32);

  REQUIRE(f.b1_zero);
  auto& B = f.g.coeffs();
  REQUIRE(B[0] == complex<double>(0.0, 0.0));
  REQUIRE(std::abs(B[1]) == 0.0);
  // B_n = -k ((n-1)/n)(1-a^2) a^(n-2)
  REQUIRE(std::abs(B[2] - complex<double>(-0.1875, 0.0)) < 1e-15);
  REQUIRE(std::abs(B[3] - complex<double>(-0.125, 0.0)) < 1e-15);
  REQUIRE_NOTHROW(require_valid(f));
}

TEST_CASE("z-times dilatation attachment reproduces the extremal family") {
  double a = 0.6, k = 0.4;
  CoefficientSequence h(detail::mobius_coeffs(a, 24), detail::mobius_tail(a));
  HarmonicMapping built = attach_dilatation(h, k, DilatationMode::ZTimes);
  ExtremalSpec spec;
  spec.family = ExtremalFamily::MobiusZDilatation;
  spec.a = a;
  spec.qc = QuasiconformalParams::from_k(k);
  HarmonicMapping fam = make_extremal(spec, 24);
  for (std::size_t n = 0; n < 24; ++n) {
    CAPTURE(n);
    REQUIRE(std::abs(built.g.coeffs()[n] - fam.g.coeffs()[n]) < 1e-15);
  }
  REQUIRE(built.b1_zero);
}

TEST_CASE("constant dilatation scales coefficients and certifies the bound") {
  CoefficientSequence h = sample_schur(11, 3, 48);
  double k = 0.7;
  HarmonicMapping f = attach_dilatation(h, k, DilatationMode::Constant, 1.1);
  REQUIRE(f.g.coeffs()[0] == complex<double>(0.0, 0.0));
  for (std::size_t n = 1; n < h.coeffs().size(); ++n)
    REQUIRE(std::abs(f.g.coeffs()[n]) ==
            Catch::Approx(k * std::abs(h.coeffs()[n])).margin(1e-15));
  DilatationCheck chk = check_dilatation(f);
  REQUIRE(chk.ok);

  HarmonicMapping f0 = attach_dilatation(h, 0.0, DilatationMode::Constant);
  REQUIRE(f0.b1_zero);
  REQUIRE(f0.g.coeffs().size() == 1);
}

TEST_CASE("dilatation check flags a co-analytic part that is too large") {
  CoefficientSequence h = CoefficientSequence::polynomial({{0.0, 0.0}, {1.0, 0.0}});
  CoefficientSequence g = CoefficientSequence::polynomial({{0.0, 0.0}, {0.9, 0.0}});
  HarmonicMapping f;
  f.h = h;
  f.g = g;
  f.qc = QuasiconformalParams::from_k(0.5);
  DilatationCheck chk = check_dilatation(f);
  REQUIRE_FALSE(chk.ok);
  REQUIRE(chk.worst_excess > 0.3);
}

TEST_CASE("mapping validation rejects malformed pairs") {
  HarmonicMapping f;
  f.h = CoefficientSequence::polynomial({{0.1, 0.0}, {0.5, 0.0}});
  f.g = CoefficientSequence::polynomial({{0.2, 0.0}});
  f.qc = QuasiconformalParams::from_k(0.3);
  REQUIRE_THROWS_AS(require_valid(f), NotNormalized);
  f.g = CoefficientSequence::polynomial({{0.0, 0.0}, {0.1, 0.0}});
  f.b1_zero = true;
  REQUIRE_THROWS_AS(require_valid(f), NotNormalized);
  f.b1_zero = false;
  REQUIRE_NOTHROW(require_valid(f));
  f.qc = QuasiconformalParams::infinite_K();
  REQUIRE_THROWS_AS(require_valid(f), BadParameter);
}

TEST_CASE("single-component blend is the rotated automorphism") {
  double a = 0.45;
  std::vector<BlendComponent> parts = {{2.0, 0.0, a}};
  CoefficientSequence blend = schur_blend(parts, 20);
  CoefficientSequence mob(detail::mobius_coeffs(a, 20), detail::mobius_tail(a));
  for (std::size_t n = 0; n <= 20; ++n)
    REQUIRE(std::abs(blend.coeffs()[n] - mob.coeffs()[n]) < 1e-15);
}

TEST_CASE("blend validation") {
  REQUIRE_THROWS_AS(schur_blend({}, 16), BadParameter);
  REQUIRE_THROWS_AS(schur_blend({{-1.0, 0.0, 0.5}}, 16), BadParameter);
  REQUIRE_THROWS_AS(schur_blend({{1.0, 0.0, 0.96}}, 16), BadParameter);
  REQUIRE_THROWS_AS(schur_blend({{0.0, 0.0, 0.5}}, 16), BadParameter);
}

TEST_CASE("sampled schur functions are deterministic and plausible") {
  CoefficientSequence s1 = sample_schur(99, 4, 64);
  CoefficientSequence s2 = sample_schur(99, 4, 64);
  REQUIRE(s1.coeffs() == s2.coeffs());
  CoefficientSequence s3 = sample_schur(100, 4, 64);
  REQUIRE(s1.coeffs() != s3.coeffs());
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CoefficientSequence s = sample_schur(seed, 1 + seed % 5, 64);
    REQUIRE_NOTHROW(require_schur_plausible(s));
    REQUIRE(std::abs(s.coeffs()[0]) <= 0.9);
    if (s.tail().kind == TailBound::Kind::Geometric)
      REQUIRE(s.tail().q <= 0.9);
  }
}

TEST_CASE("suggested terms grows with rho and caps") {
  std::size_t n1 = suggested_terms(1.0, 0.5, 0.5);
  std::size_t n2 = suggested_terms(1.0, 0.5, 0.9);
  REQUIRE(n1 >= 8);
  REQUIRE(n2 >= n1);
  REQUIRE(suggested_terms(1e300, 0.999, 0.95) == 4000);
}

TEST_CASE("extremal construction rejects bad parameters") {
  ExtremalSpec spec;
  spec.family = ExtremalFamily::MobiusPair;
  spec.a = 1.0;
  REQUIRE_THROWS_AS(make_extremal(spec, 16), BadParameter);
  spec.a = 0.5;
  REQUIRE_THROWS_AS(make_extremal(spec, 1), BadParameter);
  spec.qc = QuasiconformalParams::infinite_K();
  REQUIRE_THROWS_AS(make_extremal(spec, 16), BadParameter);
}

TEST_CASE("zero-a mobius family degenerates to minus identity") {
  ExtremalSpec spec;
  spec.family = ExtremalFamily::MobiusPair;
  spec.a = 0.0;
  spec.qc = QuasiconformalParams::from_K(1.0);
  HarmonicMapping f = make_extremal(spec, 8);
  REQUIRE(f.h.coeffs()[0] == complex<double>(0.0, 0.0));
  REQUIRE(std::abs(f.h.coeffs()[1] + 1.0) < 1e-15);
  for (std::size_t n = 2; n < f.h.coeffs().size(); ++n)
    REQUIRE(std::abs(f.h.coeffs()[n]) == 0.0);
  REQUIRE(f.h.tail().kind == TailBound::Kind::Zero);
}
