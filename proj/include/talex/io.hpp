#pragma once

// JSON encodings and file ingestion. Kept out of talex.hpp so the algebra
// headers do not pull in the JSON library.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "talex/errors.hpp"
#include "talex/field.hpp"
#include "talex/laurent.hpp"
#include "talex/multipoly.hpp"
#include "talex/sl2.hpp"
#include "talex/twisted.hpp"

namespace talex {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("io_error", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const QLaurent& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = rational_string(c);
  return Json{{"text", p.to_string()}, {"coeffs", coeffs}};
}

inline Json to_json(const CLaurent& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = complex_json(c);
  return Json{{"text", p.to_string()}, {"coeffs", coeffs}};
}

inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms.push_back(Json::array({it->first, rational_string(it->second)}));
  return Json{{"vars", p.vars()}, {"text", p.to_string()}, {"terms", terms}};
}

inline Json to_json(const CRepresentation& rho) {
  Json gens = Json::array();
  for (const auto& m : rho.images) gens.push_back(Json::array({complex_json(m.a), complex_json(m.b), complex_json(m.c), complex_json(m.d)}));
  return Json{{"generators", gens}, {"residual", rho.residual}, {"determinant_drift", rho.determinant_drift}};
}

template <class F>
Json to_json(const TwistedAlex<F>& ta, int genus_bound) {
  Json j;
  if (ta.is_polynomial()) {
    j["polynomial"] = to_json(*ta.polynomial);
  } else {
    j["polynomial"] = nullptr;
    j["numerator"] = to_json(ta.value.num);
    j["denominator"] = to_json(ta.value.den);
  }
  j["degree"] = ta.degree;
  j["leading"] = complex_json(to_complex(ta.leading));
  j["monic"] = ta.monic;
  if (genus_bound >= 0) j["genus_lower_bound"] = genus_bound;
  return j;
}

// Representation file: {"generators": [[a, b, c, d], ...]} with each entry an
// integer, a rational string "p/q", a number, or [re, im]. If every entry is
// an integer or a string the representation is exact.
using AnyRepresentation = std::variant<Representation<Rational>, CRepresentation>;

inline AnyRepresentation parse_representation(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError("bad_representation", std::string("representation file is not JSON: ") + e.what());
  }
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw ParseError("bad_representation", "representation file needs a 'generators' array");
  }
  bool exact = true;
  for (const auto& g : j["generators"]) {
    if (!g.is_array() || g.size() != 4) throw ParseError("bad_representation", "each generator needs four entries a, b, c, d");
    for (const auto& e : g) exact = exact && (e.is_number_integer() || e.is_string());
  }
  auto complex_entry = [](const Json& e) -> Complex {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_string()) return to_complex(parse_rational(e.get<std::string>()));
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) return {e[0].get<double>(), e[1].get<double>()};
    throw ParseError("bad_representation", "matrix entry must be a number, a rational string or [re, im]");
  };
  if (exact) {
    Representation<Rational> rho;
    for (const auto& g : j["generators"]) {
      auto q = [](const Json& e) { return e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>()); };
      rho.images.push_back({q(g[0]), q(g[1]), q(g[2]), q(g[3])});
    }
    return rho;
  }
  CRepresentation rho;
  for (const auto& g : j["generators"]) rho.images.push_back({complex_entry(g[0]), complex_entry(g[1]), complex_entry(g[2]), complex_entry(g[3])});
  return rho;
}

}  // namespace talex
