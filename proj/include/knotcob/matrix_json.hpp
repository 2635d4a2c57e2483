#pragma once

#include <json.hpp>
#include <string>

#include "knotcob/error.hpp"
#include "knotcob/filling.hpp"
#include "knotcob/graded_matrix.hpp"

namespace knotcob {

using Json = nlohmann::ordered_json;

/// {"elements":[{"name","sign"}...],"b":[[...]],"ring":"Z"|"Z/p"}; row 0 of b is s.
inline Json matrix_to_json(const GradedMatrix& t) {
  Json out;
  out["elements"] = Json::array();
  for (int g = 1; g < t.size(); ++g) out["elements"].push_back({{"name", t.name(g)}, {"sign", t.sign(g)}});
  out["b"] = t.pairing();
  out["ring"] = t.modulus() == 0 ? "Z" : "Z/" + std::to_string(t.modulus());
  return out;
}

/// Canonical form: elements sorted by (sign, name).
inline Json matrix_to_canonical_json(const GradedMatrix& t) { return matrix_to_json(canonical_order(t)); }

inline GradedMatrix matrix_from_json(const Json& in) {
  try {
    std::vector<std::string> names{"s"};
    std::vector<int> signs{0};
    for (const auto& e : in.at("elements")) {
      names.push_back(e.at("name").get<std::string>());
      signs.push_back(e.at("sign").get<int>());
    }
    IntMatrix b = in.at("b").get<IntMatrix>();
    Int modulus = 0;
    const std::string ring = in.value("ring", std::string("Z"));
    if (ring.rfind("Z/", 0) == 0)
      modulus = std::stoll(ring.substr(2));
    else if (ring != "Z")
      throw Error(ErrorCode::ParseError, "unknown ring '" + ring + "'");
    return GradedMatrix(std::move(names), std::move(signs), std::move(b), modulus);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad matrix JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad ring modulus");
  }
}

inline GradedMatrix matrix_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

/// Human-readable vector, e.g. "x@1 + y@2 - s2".
inline std::string vector_to_string(const Family& f, const FillingVector& v) {
  std::string out;
  for (int id : v.elements) out += (out.empty() ? "" : " + ") + f.element_name(id);
  for (int t = 0; t < static_cast<int>(v.base.size()); ++t) {
    const Int c = v.base[t];
    if (c == 0) continue;
    const std::string s = "s" + std::to_string(t + 1);
    const Int mag = c < 0 ? -c : c;
    const std::string term = (mag == 1 ? "" : std::to_string(mag)) + s;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

inline Json filling_to_json(const Family& f, const Filling& l) {
  Json out = Json::array();
  for (const FillingVector& v : l.vectors) {
    Json elements = Json::array();
    for (int id : v.elements) elements.push_back({{"matrix", f.owner(id) + 1}, {"name", f.member(f.owner(id)).name(f.local(id))}});
    out.push_back({{"elements", elements}, {"base", v.base}, {"text", vector_to_string(f, v)}});
  }
  return out;
}

}  // namespace knotcob
