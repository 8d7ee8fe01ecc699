#include "lcat/ring.hpp"

#include "lcat/errors.hpp"
#include <json.hpp>

namespace lcat {

GroupAlgebra::GroupAlgebra(long c) {
  if (c != 0) terms_[{}] = c;
}

GroupAlgebra GroupAlgebra::monomial(Exponent v, const BigInt& c) {
  GroupAlgebra g;
  g.add_term(trim(std::move(v)), c);
  return g;
}

GroupAlgebra::Exponent GroupAlgebra::trim(Exponent v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

void GroupAlgebra::add_term(const Exponent& v, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt GroupAlgebra::coeff(Exponent v) const {
  auto it = terms_.find(trim(std::move(v)));
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt GroupAlgebra::at_one() const {
  BigInt s = 0;
  for (const auto& [v, c] : terms_) s += c;
  return s;
}

LaurentPoly GroupAlgebra::principal_specialization(int divisor) const {
  LaurentPoly p;
  for (const auto& [v, c] : terms_) {
    long e = 0;
    for (std::size_t k = 0; k < v.size(); ++k) e += static_cast<long>(k + 1) * v[k];
    if (e % divisor != 0) throw ValidationError("principal specialization has a fractional exponent");
    p += LaurentPoly::monomial(static_cast<int>(e / divisor), c);
  }
  return p;
}

GroupAlgebra& GroupAlgebra::operator+=(const GroupAlgebra& o) {
  for (const auto& [v, c] : o.terms_) add_term(v, c);
  return *this;
}

GroupAlgebra& GroupAlgebra::operator-=(const GroupAlgebra& o) {
  for (const auto& [v, c] : o.terms_) add_term(v, -c);
  return *this;
}

GroupAlgebra GroupAlgebra::operator-() const {
  GroupAlgebra g;
  for (const auto& [v, c] : terms_) g.terms_[v] = -c;
  return g;
}

GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra r;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      GroupAlgebra::Exponent w(std::max(u.size(), v.size()), 0);
      for (std::size_t k = 0; k < u.size(); ++k) w[k] += u[k];
      for (std::size_t k = 0; k < v.size(); ++k) w[k] += v[k];
      r.add_term(GroupAlgebra::trim(std::move(w)), c * d);
    }
  return r;
}

std::string GroupAlgebra::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [v, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*x^(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    s += ")";
  }
  return s;
}

std::string ring_json(const BigInt& x) { return nlohmann::json(x.get_str()).dump(); }
std::string ring_json(const LaurentPoly& x) { return to_json_string(x); }
std::string ring_json(const BiLaurentPoly& x) { return to_json_string(x); }

std::string ring_json(const GroupAlgebra& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [v, c] : x.terms()) j.push_back({v, c.get_str()});
  return j.dump();
}

}  // namespace lcat
