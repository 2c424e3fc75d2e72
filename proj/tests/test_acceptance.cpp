// Acceptance suite: one printed line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bohr/bohr.hpp"

using namespace bohr;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::string line = ok ? "[PASS] " : "[FAIL] ";
  line += std::to_string(idx) + ". " + name;
  if (!detail.empty()) line += " (" + detail + ")";
  std::puts(line.c_str());
  if (!ok) ++failures;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double root_of(const std::string& id, double K = 1.0, double p = 1.0) {
  RadiusParams params;
  params.K = K;
  params.p = p;
  return solve(catalog(id, params)).rho0;
}

FunctionalSpec make_spec(FunctionalId id, int s = 1, double p = 1.0) {
  FunctionalSpec spec;
  spec.id = id;
  spec.s = s;
  spec.p = p;
  return spec;
}

std::vector<double> poly_mul(const std::vector<double>& x,
                             const std::vector<double>& y) {
  std::vector<double> r(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(BOHR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion_roots() {
  double c1 = root_of("E-C1"), c2 = root_of("E-C2"), g8 = root_of("E-G8");
  bool ok = std::abs(c1 - 0.1671) <= 5e-4 && std::abs(c2 - 0.255508) <= 1e-5 &&
            std::abs(g8 - 0.254876) <= 1e-5;
  report(1, "paper roots reproduced",
         ok, "E-C1=" + fmt(c1) + " E-C2=" + fmt(c2) + " E-G8=" + fmt(g8));
}

void criterion_closed_forms() {
  bool ok = std::abs(root_of("E-T1", 1.0) - 1.0 / 3.0) <= 1e-12;
  double worst = 0.0;
  for (double K : {1.0, 2.0, 5.0, 10.0}) {
    RadiusParams params;
    params.K = K;
    double dev = std::abs(*closed_form("E-T1", params) - root_of("E-T1", K));
    worst = std::max(worst, dev);
    ok = ok && dev <= 1e-12 &&
         std::abs(*closed_form("E-T1", params) - (K + 1.0) / (5.0 * K + 1.0)) <=
             1e-15;
  }
  report(2, "closed forms match bisection", ok,
         "max deviation " + fmt(worst));
}

void criterion_limits() {
  bool ok = true;
  double worst = 0.0;
  for (const char* id : {"E-TT1", "E-T7", "E-T6"}) {
    LimitConsistency lc = limit_consistency(id);
    ok = ok && lc.ok;
    worst = std::max(worst, lc.max_deviation);
  }
  // (1-r)(r^2+2r-1) + 2r(1+r)^3 expands to 2r^4+5r^3+5r^2+5r-1
  std::vector<double> lhs = poly_mul({1.0, -1.0}, {-1.0, 2.0, 1.0});
  std::vector<double> cube = poly_mul(poly_mul({1.0, 1.0}, {1.0, 1.0}), {1.0, 1.0});
  std::vector<double> second = poly_mul({0.0, 2.0}, cube);
  lhs.resize(5, 0.0);
  for (std::size_t i = 0; i < second.size(); ++i) lhs[i] += second[i];
  std::vector<double> expect = {-1.0, 5.0, 5.0, 5.0, 2.0};
  ok = ok && lhs == expect;
  report(3, "k=1 limits agree with the constant entries", ok,
         "max residual deviation " + fmt(worst));
}

void criterion_sweeps() {
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    FunctionalSpec spec;
    double K;
  };
  std::vector<Case> cases = {
      {make_spec(FunctionalId::FT1), 1.0},
      {make_spec(FunctionalId::FT1), 2.0},
      {make_spec(FunctionalId::FT3), 2.0},
      {make_spec(FunctionalId::FTT1), 2.0},
      {make_spec(FunctionalId::FT7), 2.0},
      {make_spec(FunctionalId::FT2, 1, 1.0), 2.0},
      {make_spec(FunctionalId::FT2, 2, 2.0), 2.0},
      {make_spec(FunctionalId::FT4, 1, 1.0), 2.0},
      {make_spec(FunctionalId::FT4, 1, 0.5), 2.0},
      {make_spec(FunctionalId::FT6), 2.0},
      {make_spec(FunctionalId::FTF), 2.0},
  };
  bool ok = true;
  long holds = 0, bad = 0;
  std::string first_bad;
  for (const Case& c : cases) {
    CampaignReport rep = verify_theorem(c.spec, c.K, 200, 20260822);
    holds += rep.holds;
    bad += rep.violated + rep.inconclusive +
           static_cast<long>(rep.errors.size());
    if (!rep.ok() && first_bad.empty())
      first_bad = rep.spec + "@K=" + fmt(c.K);
    ok = ok && rep.ok();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  ok = ok && secs <= 60.0;
  std::string detail = fmt((double)holds) + " holds, " + fmt((double)bad) +
                       " defects, " + fmt(secs) + "s";
  if (!first_bad.empty()) detail += ", first defect " + first_bad;
  report(4, "200x10 verification sweeps all hold", ok, detail);
}

void criterion_sharpness() {
  std::vector<double> big_a, small_a;
  for (int j = 2; j <= 6; ++j) {
    big_a.push_back(1.0 - std::pow(10.0, -j));
    small_a.push_back(std::pow(10.0, -j));
  }
  bool ok = true;
  int found = 0, total = 0;
  std::string first_bad;
  for (FunctionalId id :
       {FunctionalId::FT1, FunctionalId::FT3, FunctionalId::FTT1,
        FunctionalId::FT7, FunctionalId::FT2, FunctionalId::FT4,
        FunctionalId::FT6, FunctionalId::FTF}) {
    for (double K : {1.0, 2.0, 10.0}) {
      ++total;
      SharpnessScan scan = sharpness_scan(
          make_spec(id), K, id == FunctionalId::FT2 ? small_a : big_a, {0.05});
      if (scan.witness) {
        ++found;
      } else {
        ok = false;
        if (first_bad.empty())
          first_bad = to_string(id) + "@K=" + fmt(K);
      }
    }
  }
  std::string detail =
      std::to_string(found) + "/" + std::to_string(total) + " witnesses";
  if (!first_bad.empty()) detail += ", missing " + first_bad;
  report(5, "extremal witnesses above every sharp radius", ok, detail);
}

void criterion_lambda() {
  double l1 = lambda_area_coefficient(QuasiconformalParams::from_K(1.0));
  double l6 = lambda_area_coefficient(QuasiconformalParams::from_K(1e6));
  bool ok = std::abs(l1 - 8.0 / 9.0) <= 1e-15 &&
            std::abs(l6 - 72.0 / 25.0) <= 1e-4;
  double prev = 0.0;
  for (double K = 1.0; K <= 100.0; K += 0.5) {
    double l = lambda_area_coefficient(QuasiconformalParams::from_K(K));
    if (!(l > prev)) ok = false;
    prev = l;
  }
  report(7, "area coefficient lambda endpoints and monotonicity", ok,
         "lambda(1)=" + fmt(l1) + " lambda(1e6)=" + fmt(l6));
}

void criterion_plot() {
  auto [rc1, out1] = run_cli("plot --id E-G8");
  auto [rc2, out2] = run_cli("plot --id E-G8");
  bool ok = rc1 == 0 && rc2 == 0 && out1 == out2 && !out1.empty();
  int rows = 0;
  bool zero_row = false, crossed = false;
  double prev_rho = -1.0, prev_res = 0.0;
  bool first = true;
  std::size_t pos = 0;
  while (pos < out1.size()) {
    std::size_t eol = out1.find('\n', pos);
    if (eol == std::string::npos) eol = out1.size();
    std::string line = out1.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line[0] == '#' || line == "rho,residual") continue;
    ++rows;
    if (line == "0,-1") zero_row = true;
    std::size_t comma = line.find(',');
    double rho = std::stod(line.substr(0, comma));
    double res = std::stod(line.substr(comma + 1));
    if (!first && prev_res < 0.0 && res >= 0.0 &&
        prev_rho <= 0.254876 + 1e-6 && rho >= 0.254876 - 1e-6)
      crossed = true;
    prev_rho = rho;
    prev_res = res;
    first = false;
  }
  ok = ok && rows >= 200 && zero_row && crossed;
  report(8, "figure data: exact G8(0), bracketing sign change, byte-stable", ok,
         std::to_string(rows) + " rows");
}

}  // namespace

int main() {
  criterion_roots();
  criterion_closed_forms();
  criterion_limits();
  criterion_sweeps();
  criterion_sharpness();
  {
    bool ok = true;
    long samples = 0, violated = 0, inconclusive = 0;
    for (LemmaId id : {LemmaId::L1, LemmaId::L2, LemmaId::L3, LemmaId::L4,
                       LemmaId::L5, LemmaId::L6}) {
      CampaignReport rep = verify_lemma(id, 300, 424242);
      samples += rep.total();
      violated += rep.violated;
      inconclusive += rep.inconclusive;
      ok = ok && rep.ok();
    }
    ok = ok && samples >= 10000 && violated == 0;
    report(6, "lemma property suites clean", ok,
           std::to_string(samples) + " samples, " + std::to_string(violated) +
               " violated, " + std::to_string(inconclusive) + " inconclusive");
  }
  criterion_lambda();
  criterion_plot();
  if (failures == 0) {
    std::puts("all acceptance criteria passed");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures);
  return 1;
}
