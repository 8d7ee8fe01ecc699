#include "lcat/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lcat/errors.hpp"

namespace lcat {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw ValidationError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw InternalError("min_exp of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw InternalError("max_exp of the zero polynomial");
  return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::has_negative_coeff() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second < 0; });
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::subs_power(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e * k, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const long lo = static_cast<long>(a.min_exp()) + b.min_exp();
  const long span = static_cast<long>(a.max_exp()) + b.max_exp() - lo + 1;
  LaurentPoly r;
  // Dense accumulation is much faster than map updates whenever the result
  // is not extremely sparse.
  if (span <= 4 * static_cast<long>(a.size() * b.size()) + 64 && span <= 4'000'000) {
    std::vector<BigInt> acc(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        BigInt& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
        mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    for (long i = 0; i < span; ++i)
      if (acc[static_cast<std::size_t>(i)] != 0)
        r.terms_.emplace_hint(r.terms_.end(), static_cast<int>(lo + i),
                              std::move(acc[static_cast<std::size_t>(i)]));
    return r;
  }
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::optional<LaurentPoly> LaurentPoly::try_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw InternalError("division by the zero polynomial");
  if (is_zero()) return LaurentPoly{};
  // Single term divisor: fast path.
  if (d.size() == 1) {
    const auto& [de, dc] = *d.terms_.begin();
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
      BigInt qc;
      mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
      r.terms_.emplace_hint(r.terms_.end(), e - de, std::move(qc));
    }
    return r;
  }
  const int alo = min_exp(), dlo = d.min_exp();
  const int adeg = max_exp() - alo, ddeg = d.max_exp() - dlo;
  if (adeg < ddeg) return std::nullopt;
  std::vector<BigInt> rem(static_cast<std::size_t>(adeg) + 1);
  for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - alo)] = c;
  std::vector<std::pair<int, BigInt>> dv;
  for (const auto& [e, c] : d.terms_) dv.emplace_back(e - dlo, c);
  const BigInt& lead = dv.back().second;
  const int qdeg = adeg - ddeg;
  std::vector<BigInt> quo(static_cast<std::size_t>(qdeg) + 1);
  for (int k = qdeg; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + ddeg)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (const auto& [e, c] : dv) {
      BigInt& slot = rem[static_cast<std::size_t>(k + e)];
      mpz_submul(slot.get_mpz_t(), qc.get_mpz_t(), c.get_mpz_t());
    }
    quo[static_cast<std::size_t>(k)] = std::move(qc);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  LaurentPoly r;
  for (int k = 0; k <= qdeg; ++k)
    if (quo[static_cast<std::size_t>(k)] != 0)
      r.terms_.emplace_hint(r.terms_.end(), alo - dlo + k, std::move(quo[static_cast<std::size_t>(k)]));
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  auto r = try_div(d);
  if (!r) throw InternalError("inexact polynomial division: (" + str() + ") / (" + d.str() + ")");
  return *std::move(r);
}

namespace {

std::string monomial_str(const BigInt& c, const std::string& body, bool first) {
  std::string out;
  BigInt a = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (body.empty()) {
    out += a.get_str();
  } else {
    if (a != 1) out += a.get_str();
    out += body;
  }
  return out;
}

std::string power_str(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += monomial_str(it->second, power_str(var, it->first), first);
    first = false;
  }
  return out;
}

LaurentPoly q_int(int n) {
  if (n < 0) throw ValidationError("q-integer of a negative number");
  LaurentPoly::Terms t;
  for (int i = 0; i < n; ++i) t.emplace_hint(t.end(), i, 1);
  return LaurentPoly::from_terms(t);
}

LaurentPoly q_factorial(int n) {
  if (n < 0) throw ValidationError("q-factorial of a negative number");
  LaurentPoly r = 1;
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

LaurentPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  k = std::min(k, n - k);
  LaurentPoly num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= q_int(n - i);
    den *= q_int(i + 1);
  }
  return num.exact_div(den);
}

LaurentPoly q_pochhammer(int n, PochhammerBase base) {
  if (n < 0) throw ValidationError("q-Pochhammer with negative length");
  LaurentPoly r = 1;
  for (int i = 1; i <= n; ++i) {
    // (q;q)_n = prod (1 - q^i), (-q;q)_n = prod (1 + q^i)
    LaurentPoly f = LaurentPoly(1) + LaurentPoly::monomial(i, base == PochhammerBase::q ? -1 : 1);
    r *= f;
  }
  return r;
}

std::pair<int, LaurentPoly> normalize_valuation(const LaurentPoly& p) {
  if (p.is_zero()) throw ValidationError("cannot normalize the zero polynomial");
  const int v = p.min_exp();
  return {v, p.shift(-v)};
}

// ---------------------------------------------------------------------------
// BiLaurentPoly

BiLaurentPoly::BiLaurentPoly(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiLaurentPoly BiLaurentPoly::monomial(int a, int b, const BigInt& coeff) {
  BiLaurentPoly p;
  if (coeff != 0) p.terms_[{a, b}] = coeff;
  return p;
}

BiLaurentPoly BiLaurentPoly::from_terms(const Terms& terms) {
  BiLaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void BiLaurentPoly::add_term(const Exp& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BiLaurentPoly::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt BiLaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool BiLaurentPoly::has_negative_coeff() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second < 0; });
}

BiLaurentPoly BiLaurentPoly::swapped() const {
  BiLaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_[{e.second, e.first}] = c;
  return p;
}

LaurentPoly BiLaurentPoly::substitute_t(int power_of_q) const {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : terms_) t[e.first + power_of_q * e.second] += c;
  return LaurentPoly::from_terms(t);
}

LaurentPoly BiLaurentPoly::substitute_t_qinv() const { return substitute_t(-1); }

BiLaurentPoly& BiLaurentPoly::operator+=(const BiLaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiLaurentPoly& BiLaurentPoly::operator-=(const BiLaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiLaurentPoly BiLaurentPoly::operator-() const {
  BiLaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b) {
  BiLaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      BigInt& slot = r.terms_[{ea.first + eb.first, ea.second + eb.second}];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second == 0)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

BiLaurentPoly& BiLaurentPoly::operator*=(const BiLaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::optional<BiLaurentPoly> BiLaurentPoly::try_div(const BiLaurentPoly& d) const {
  if (d.is_zero()) throw InternalError("division by the zero polynomial");
  if (is_zero()) return BiLaurentPoly{};
  // Multivariate division with respect to the lex order (q first, then t);
  // exact quotients are unique, so the order only affects the speed.
  const auto lead_d = *d.terms_.rbegin();
  auto min_t = [](const Terms& t) {
    int m = t.begin()->first.second;
    for (const auto& [e, c] : t) m = std::min(m, e.second);
    return m;
  };
  // An exact quotient has exponents bounded below by these, which makes the
  // (otherwise not well-founded) lex reduction terminate.
  const int qmin = terms_.begin()->first.first - d.terms_.begin()->first.first;
  const int tmin = min_t(terms_) - min_t(d.terms_);
  BiLaurentPoly rem = *this, quo;
  while (!rem.is_zero()) {
    const auto lead_r = *rem.terms_.rbegin();
    if (!mpz_divisible_p(lead_r.second.get_mpz_t(), lead_d.second.get_mpz_t())) return std::nullopt;
    const int a = lead_r.first.first - lead_d.first.first;
    const int b = lead_r.first.second - lead_d.first.second;
    if (a < qmin || b < tmin) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), lead_r.second.get_mpz_t(), lead_d.second.get_mpz_t());
    BiLaurentPoly m = monomial(a, b, c);
    quo += m;
    rem -= m * d;
  }
  return quo;
}

std::string BiLaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exp, BigInt>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : v) {
    std::string body = power_str("q", e.first);
    std::string tb = power_str("t", e.second);
    if (!body.empty() && !tb.empty()) body += "*";
    body += tb;
    out += monomial_str(c, body, first);
    first = false;
  }
  return out;
}

}  // namespace lcat
