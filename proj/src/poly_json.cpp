#include <json.hpp>

#include "lcat/errors.hpp"
#include "lcat/poly.hpp"

// Coefficients are serialized as decimal strings so that arbitrarily large
// integers survive the round trip.

namespace lcat {

using nlohmann::json;

std::string to_json_string(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e, c.get_str()}));
  return arr.dump();
}

std::string to_json_string(const BiLaurentPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back(json::array({json::array({e.first, e.second}), c.get_str()}));
  return arr.dump();
}

namespace {

BigInt parse_coeff(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw ValidationError("polynomial coefficient must be a string or integer");
  BigInt c;
  if (c.set_str(j.get<std::string>(), 10) != 0)
    throw ValidationError("bad coefficient '" + j.get<std::string>() + "'");
  return c;
}

json parse_array(const std::string& s) {
  json j;
  try {
    j = json::parse(s);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed polynomial JSON: ") + e.what());
  }
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array");
  return j;
}

}  // namespace

LaurentPoly laurent_from_json_string(const std::string& s) {
  LaurentPoly p;
  for (const auto& t : parse_array(s)) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw ValidationError("polynomial term must be [exponent, coefficient]");
    p += LaurentPoly::monomial(t[0].get<int>(), parse_coeff(t[1]));
  }
  return p;
}

BiLaurentPoly bilaurent_from_json_string(const std::string& s) {
  BiLaurentPoly p;
  for (const auto& t : parse_array(s)) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2)
      throw ValidationError("polynomial term must be [[a, b], coefficient]");
    p += BiLaurentPoly::monomial(t[0][0].get<int>(), t[0][1].get<int>(), parse_coeff(t[1]));
  }
  return p;
}

}  // namespace lcat
