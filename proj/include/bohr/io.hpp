#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bohr/coeffseq.hpp"
#include "bohr/functionals.hpp"
#include "bohr/mappings.hpp"
#include "bohr/radii.hpp"

namespace bohr {

using json = nlohmann::ordered_json;

inline json sequence_to_json(const CoefficientSequence& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back({c.real(), c.imag()});
  json tail;
  if (s.extension().active) {
    tail = {{"type", "alternating"}, {"amp", s.extension().amp}};
  } else if (s.tail().kind == TailBound::Kind::Geometric) {
    tail = {{"type", "geometric"}, {"c", s.tail().c}, {"q", s.tail().q}};
  } else {
    tail = {{"type", "zero"}};
  }
  return {{"coeffs", coeffs}, {"tail", tail}};
}

inline CoefficientSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw BadParameter("sequence: expected object with \"coeffs\"");
  std::vector<std::complex<double>> coeffs;
  for (const auto& e : j.at("coeffs")) {
    if (!e.is_array() || e.size() != 2)
      throw BadParameter("sequence: coefficients must be [re, im] pairs");
    coeffs.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  std::string type = "zero";
  json tail;
  if (j.contains("tail")) {
    tail = j.at("tail");
    type = tail.at("type").get<std::string>();
  }
  if (type == "zero") return CoefficientSequence::polynomial(std::move(coeffs));
  if (type == "geometric")
    return CoefficientSequence(
        std::move(coeffs),
        TailBound::geometric(tail.at("c").get<double>(),
                             tail.at("q").get<double>()));
  if (type == "alternating")
    return CoefficientSequence::alternating_extended(std::move(coeffs),
                                                     tail.at("amp").get<double>());
  throw BadParameter("sequence: unknown tail type \"" + type + "\"");
}

inline json mapping_to_json(const HarmonicMapping& f) {
  return {{"h", sequence_to_json(f.h)},
          {"g", sequence_to_json(f.g)},
          {"k", f.qc.k},
          {"b1_zero", f.b1_zero}};
}

/// Parse and validate a mapping: structural invariants always, plus the
/// sampled dilatation grid check unless check_grid is false.
inline HarmonicMapping mapping_from_json(const json& j, bool check_grid = true) {
  if (!j.is_object()) throw BadParameter("mapping: expected a JSON object");
  HarmonicMapping f;
  f.h = sequence_from_json(j.at("h"));
  f.g = sequence_from_json(j.at("g"));
  f.qc = QuasiconformalParams::from_k(j.at("k").get<double>());
  f.b1_zero = j.value("b1_zero", false);
  require_valid(f);
  if (check_grid) {
    auto dc = check_dilatation(f);
    if (!dc.ok)
      throw NotNormalized("mapping: |g'| <= k|h'| fails on the sampled grid");
  }
  return f;
}

inline json bounded_to_json(const BoundedValue& v) {
  return {{"value", v.value}, {"err", v.err}};
}

inline json report_to_json(const InequalityReport& rep) {
  return {{"lhs", bounded_to_json(rep.lhs)},
          {"bound", rep.bound},
          {"margin", rep.margin},
          {"verdict", to_string(rep.verdict)}};
}

inline json radius_result_to_json(const std::string& id,
                                  const RadiusParams& params,
                                  const RadiusResult& res,
                                  const std::string& method) {
  json j = {{"schema", 1}, {"id", id}};
  if (params.K_infinite)
    j["K"] = "inf";
  else
    j["K"] = params.K;
  j["p"] = params.p;
  j["a"] = params.a;
  j["rho0"] = res.rho0;
  j["residual"] = res.residual_at_root;
  j["method"] = method;
  return j;
}

}  // namespace bohr
