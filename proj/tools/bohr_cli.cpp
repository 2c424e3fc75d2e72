#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bohr/bohr.hpp"

namespace {

using bohr::json;

std::string fmt12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double parse_K_token(const std::string& tok) {
  if (tok == "inf" || tok == "Inf" || tok == "INF")
    return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double K = 0.0;
  try {
    K = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw bohr::BadParameter("cannot parse K value '" + tok + "'");
  }
  if (pos != tok.size())
    throw bohr::BadParameter("cannot parse K value '" + tok + "'");
  return K;
}

bohr::RadiusParams make_params(double K, double p, double a) {
  bohr::RadiusParams params;
  if (std::isinf(K))
    params.K_infinite = true;
  else
    params.K = K;
  params.p = p;
  params.a = a;
  return params;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw bohr::BadParameter("cannot open output file " + out_path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::size_t extremal_terms(bohr::ExtremalFamily fam, double a, double rho) {
  if (fam == bohr::ExtremalFamily::HalfPlane) return 48;
  double c = (1.0 - a * a) / std::max(a, 0.1);
  if (fam == bohr::ExtremalFamily::MobiusZDilatation)
    c = std::max(c, (1.0 - a * a) / std::max(a * a, 0.01));
  return std::max<std::size_t>(16, bohr::suggested_terms(c, a, rho, 1e-13));
}

bohr::ExtremalFamily parse_family(const std::string& s) {
  if (s == "mobius") return bohr::ExtremalFamily::MobiusPair;
  if (s == "halfplane") return bohr::ExtremalFamily::HalfPlane;
  if (s == "mobius-z") return bohr::ExtremalFamily::MobiusZDilatation;
  throw bohr::UnknownId("no extremal family named " + s +
                        " (expected mobius|halfplane|mobius-z)");
}

int cmd_radius(const std::string& id, const std::string& K_tok, double p,
               double a, const std::string& out_path) {
  bohr::RadiusParams params = make_params(parse_K_token(K_tok), p, a);
  json j;
  std::optional<double> cf =
      params.K_infinite ? std::nullopt : bohr::closed_form(id, params);
  if (cf) {
    bohr::RadiusEquation eq = bohr::catalog(id, params);
    bohr::RadiusResult res{*cf, eq.residual(*cf), 0.0};
    j = bohr::radius_result_to_json(id, params, res, "closed-form");
  } else {
    bohr::RadiusResult res = bohr::solve(bohr::catalog(id, params));
    j = bohr::radius_result_to_json(id, params, res, "bisection");
  }
  emit(dump(j), out_path);
  return 0;
}

int cmd_table(const std::string& id, const std::string& K_csv, double p,
              double a, const std::string& out_path) {
  std::vector<double> Ks;
  std::stringstream ss(K_csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) Ks.push_back(parse_K_token(tok));
  if (Ks.empty()) throw bohr::BadParameter("table: empty K list");
  std::sort(Ks.begin(), Ks.end());
  std::string csv = "id,K,rho0\n";
  for (double K : Ks) {
    bohr::RadiusParams params = make_params(K, p, a);
    bohr::RadiusResult res = bohr::solve(bohr::catalog(id, params));
    csv += id + "," + (params.K_infinite ? "inf" : fmt12(K)) + "," +
           fmt12(res.rho0) + "\n";
  }
  emit(csv, out_path);
  return 0;
}

int cmd_check(const std::string& spec_str, const std::string& K_tok, double p,
              int s, double rho, const std::string& input,
              const std::string& family_str, double a, double phase,
              const std::string& out_path) {
  bohr::FunctionalSpec spec;
  spec.id = bohr::parse_functional_id(spec_str);
  spec.qc = bohr::QuasiconformalParams::from_K(parse_K_token(K_tok));
  spec.p = p;
  spec.s = s;
  bohr::validate_spec(spec);

  bohr::HarmonicMapping f;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw bohr::BadParameter("cannot open input file " + input);
    f = bohr::mapping_from_json(json::parse(in));
  } else if (!family_str.empty()) {
    bohr::ExtremalSpec es;
    es.family = parse_family(family_str);
    es.a = a;
    es.phase = phase;
    es.qc = spec.qc;
    f = bohr::make_extremal(es, extremal_terms(es.family, a, rho));
  } else {
    throw bohr::BadParameter("check: provide --input or --family");
  }

  bohr::InequalityReport rep =
      bohr::check(spec, f, rho, bohr::default_point_rule(spec.id));
  json j = {{"schema", 1},
            {"spec", spec_str},
            {"K", spec.qc.infinite ? json("inf") : json(spec.qc.K)},
            {"p", p},
            {"s", s},
            {"rho", rho}};
  j.update(bohr::report_to_json(rep));
  emit(dump(j), out_path);
  return rep.verdict == bohr::Verdict::Holds ? 0 : 1;
}

int cmd_sharpness(const std::string& spec_str, const std::string& K_tok,
                  double p, int s, const std::vector<double>& a_list,
                  const std::string& out_path) {
  bohr::FunctionalSpec spec;
  spec.id = bohr::parse_functional_id(spec_str);
  spec.p = p;
  spec.s = s;
  bohr::SharpnessScan scan =
      bohr::sharpness_scan(spec, parse_K_token(K_tok), a_list);
  emit(dump(bohr::scan_to_json(scan)), out_path);
  return scan.witness ? 0 : 1;
}

int cmd_verify(const std::string& spec_str, const std::string& K_tok, double p,
               int s, int trials, std::uint64_t seed,
               const std::string& out_path) {
  bohr::FunctionalSpec spec;
  spec.id = bohr::parse_functional_id(spec_str);
  spec.p = p;
  spec.s = s;
  bohr::CampaignReport rep =
      bohr::verify_theorem(spec, parse_K_token(K_tok), trials, seed);
  emit(dump(bohr::campaign_to_json(rep)), out_path);
  return rep.ok() ? 0 : 1;
}

int cmd_lemmas(const std::string& id, int trials, std::uint64_t seed,
               const std::string& out_path) {
  std::vector<bohr::LemmaId> which;
  if (id.empty()) {
    which = {bohr::LemmaId::L1, bohr::LemmaId::L2, bohr::LemmaId::L3,
             bohr::LemmaId::L4, bohr::LemmaId::L5, bohr::LemmaId::L6};
  } else {
    which = {bohr::parse_lemma_id(id)};
  }
  json reports = json::array();
  bool all_ok = true;
  for (bohr::LemmaId lid : which) {
    bohr::CampaignReport rep = bohr::verify_lemma(lid, trials, seed);
    all_ok = all_ok && rep.ok();
    reports.push_back(bohr::campaign_to_json(rep));
  }
  emit(dump(json{{"schema", 1}, {"lemmas", reports}}), out_path);
  return all_ok ? 0 : 1;
}

int cmd_plot(const std::string& id, const std::string& K_tok, double p,
             double a, int samples, const std::string& out_path) {
  if (samples < 2) throw bohr::BadParameter("plot: samples must be >= 2");
  bohr::RadiusParams params = make_params(parse_K_token(K_tok), p, a);
  bohr::RadiusEquation eq = bohr::catalog(id, params);
  double root = bohr::solve(eq).rho0;

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(samples) + 1);
  for (int j = 0; j < samples; ++j) xs.push_back(eq.hi * j / (samples - 1.0));
  auto it = std::lower_bound(xs.begin(), xs.end(), root);
  bool dup = (it != xs.end() && std::abs(*it - root) < 1e-15) ||
             (it != xs.begin() && std::abs(*(it - 1) - root) < 1e-15);
  if (!dup) xs.insert(it, root);

  std::string csv = "# id=" + id + " root=" + fmt12(root) + "\n";
  csv += "rho,residual\n";
  for (double x : xs) csv += fmt12(x) + "," + fmt12(eq.residual(x)) + "\n";
  emit(csv, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp Bohr-type radii for quasiconformal harmonic mappings"};
  app.require_subcommand(1);

  std::string id, spec_str, K_tok = "1", input, family_str, out_path;
  double p = 1.0, rho = 0.0, a = 0.5, phase = 0.0, eq_a = 1.0;
  int s = 1, trials = 200, samples = 256;
  std::uint64_t seed = 1;
  std::vector<double> a_list;

  auto* c_radius = app.add_subcommand("radius", "Solve one catalog equation");
  c_radius->add_option("--id", id, "catalog equation id")->required();
  c_radius->add_option("--K", K_tok, "quasiconformality constant (or 'inf')");
  c_radius->add_option("--p", p, "exponent parameter where applicable");
  c_radius->add_option("--a", eq_a, "a0 parameter of E-D, in [0,1]");
  c_radius->add_option("--out", out_path, "write output to file");

  auto* c_table = app.add_subcommand("table", "Solve one equation over a K list");
  c_table->add_option("--id", id, "catalog equation id")->required();
  c_table->add_option("--K", K_tok, "comma-separated K values");
  c_table->add_option("--p", p, "exponent parameter where applicable");
  c_table->add_option("--a", eq_a, "a0 parameter of E-D, in [0,1]");
  c_table->add_option("--out", out_path, "write output to file");

  auto* c_check = app.add_subcommand("check", "Evaluate one inequality on a mapping");
  c_check->add_option("--spec", spec_str, "functional id, e.g. F-T1")->required();
  c_check->add_option("--K", K_tok, "quasiconformality constant");
  c_check->add_option("--p", p, "exponent parameter");
  c_check->add_option("--s", s, "a0 power in F-T2 (1 or 2)");
  c_check->add_option("--rho", rho, "evaluation radius")->required();
  auto* opt_in = c_check->add_option("--input", input, "mapping JSON file");
  auto* opt_fam = c_check->add_option("--family", family_str,
                                      "extremal family: mobius|halfplane|mobius-z");
  opt_in->excludes(opt_fam);
  c_check->add_option("--a", a, "family parameter a in [0,1)");
  c_check->add_option("--phase", phase, "dilatation phase");
  c_check->add_option("--out", out_path, "write output to file");

  auto* c_sharp = app.add_subcommand("sharpness", "Hunt a certified violation above rho0");
  c_sharp->add_option("--spec", spec_str, "functional id")->required();
  c_sharp->add_option("--K", K_tok, "quasiconformality constant");
  c_sharp->add_option("--p", p, "exponent parameter");
  c_sharp->add_option("--s", s, "a0 power in F-T2");
  c_sharp->add_option("--a", a_list, "family parameters to scan");
  c_sharp->add_option("--out", out_path, "write output to file");

  auto* c_verify = app.add_subcommand("verify", "Random-mapping campaign below rho0");
  c_verify->add_option("--spec", spec_str, "functional id")->required();
  c_verify->add_option("--K", K_tok, "quasiconformality constant");
  c_verify->add_option("--p", p, "exponent parameter");
  c_verify->add_option("--s", s, "a0 power in F-T2");
  c_verify->add_option("--trials", trials, "number of sampled mappings");
  c_verify->add_option("--seed", seed, "campaign seed");
  c_verify->add_option("--out", out_path, "write output to file");

  auto* c_lemmas = app.add_subcommand("lemmas", "Property campaigns for the coefficient lemmas");
  c_lemmas->add_option("--id", id, "lemma id L1..L6 (default: all)");
  c_lemmas->add_option("--trials", trials, "trials per lemma");
  c_lemmas->add_option("--seed", seed, "campaign seed");
  c_lemmas->add_option("--out", out_path, "write output to file");

  auto* c_plot = app.add_subcommand("plot", "Residual curve CSV with annotated root");
  c_plot->add_option("--id", id, "catalog equation id")->required();
  c_plot->add_option("--K", K_tok, "quasiconformality constant (or 'inf')");
  c_plot->add_option("--p", p, "exponent parameter");
  c_plot->add_option("--a", eq_a, "a0 parameter of E-D, in [0,1]");
  c_plot->add_option("--samples", samples, "number of sample points");
  c_plot->add_option("--out", out_path, "write output to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_radius->parsed()) return cmd_radius(id, K_tok, p, eq_a, out_path);
    if (c_table->parsed()) return cmd_table(id, K_tok, p, eq_a, out_path);
    if (c_check->parsed())
      return cmd_check(spec_str, K_tok, p, s, rho, input, family_str, a, phase,
                       out_path);
    if (c_sharp->parsed())
      return cmd_sharpness(spec_str, K_tok, p, s, a_list, out_path);
    if (c_verify->parsed())
      return cmd_verify(spec_str, K_tok, p, s, trials, seed, out_path);
    if (c_lemmas->parsed()) return cmd_lemmas(id, trials, seed, out_path);
    if (c_plot->parsed()) return cmd_plot(id, K_tok, p, eq_a, samples, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bohr::NotNormalized& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bohr::MissingB1Zero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bohr::PointOffCircle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bohr::RadiusOutOfLemmaRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
