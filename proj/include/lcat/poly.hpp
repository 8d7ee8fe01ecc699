#pragma once

// Exact sparse Laurent polynomials in q (and in q,t) over the integers, with
// the standard q-analogs built on top.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcat {

using BigInt = mpz_class;

BigInt binomial(long n, long k);  // 0 unless 0 <= k <= n
BigInt factorial(long n);

class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers embed as constants
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(int exponent, const BigInt& coeff = 1);
  static LaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Lowest and highest exponent; both throw InternalError on the zero poly.
  int min_exp() const;
  int max_exp() const;
  BigInt coeff(int exponent) const;
  BigInt at_one() const;
  bool has_negative_coeff() const;

  LaurentPoly shift(int k) const;        // q^k * p
  LaurentPoly subs_power(int k) const;   // p(q^k), k may be negative
  LaurentPoly mirrored() const { return subs_power(-1); }

  // Exact quotient; nullopt when the division leaves a remainder.
  std::optional<LaurentPoly> try_div(const LaurentPoly& d) const;
  // Exact quotient, throwing InternalError when inexact.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Human readable, highest power first: "q^3 + 2q - 1 + q^-2".
  std::string str(const std::string& var = "q") const;

 private:
  void add_term(int e, const BigInt& c);
  Terms terms_;
};

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
LaurentPoly q_int(int n);
LaurentPoly q_factorial(int n);
// Gaussian binomial via the product form and exact division; 0 off range.
LaurentPoly q_binomial(int n, int k);

enum class PochhammerBase { q, minus_q };
// (q;q)_n or (-q;q)_n.
LaurentPoly q_pochhammer(int n, PochhammerBase base = PochhammerBase::q);

// Returns (valuation, q^{-valuation} p).  Throws ValidationError on p = 0.
std::pair<int, LaurentPoly> normalize_valuation(const LaurentPoly& p);

class BiLaurentPoly {
 public:
  using Exp = std::pair<int, int>;  // q^a t^b
  using Terms = std::map<Exp, BigInt>;

  BiLaurentPoly() = default;
  BiLaurentPoly(long c);  // NOLINT
  static BiLaurentPoly monomial(int a, int b, const BigInt& coeff = 1);
  static BiLaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int a, int b) const;
  BigInt at_one() const;
  bool has_negative_coeff() const;

  BiLaurentPoly swapped() const;  // exchange q and t
  LaurentPoly substitute_t_qinv() const;
  LaurentPoly substitute_t(int power_of_q) const;  // t := q^k

  std::optional<BiLaurentPoly> try_div(const BiLaurentPoly& d) const;

  BiLaurentPoly& operator+=(const BiLaurentPoly& o);
  BiLaurentPoly& operator-=(const BiLaurentPoly& o);
  BiLaurentPoly& operator*=(const BiLaurentPoly& o);
  BiLaurentPoly operator-() const;
  friend BiLaurentPoly operator+(BiLaurentPoly a, const BiLaurentPoly& b) { return a += b; }
  friend BiLaurentPoly operator-(BiLaurentPoly a, const BiLaurentPoly& b) { return a -= b; }
  friend BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b);
  friend bool operator==(const BiLaurentPoly& a, const BiLaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiLaurentPoly& a, const BiLaurentPoly& b) { return !(a == b); }

  // Graded by total degree then by q-degree, highest first.
  std::string str() const;

 private:
  void add_term(const Exp& e, const BigInt& c);
  Terms terms_;
};

// Canonical JSON: [[e,"c"],...] sorted by e, and [[[a,b],"c"],...] sorted
// lexicographically.  These strings are the golden-file format.
std::string to_json_string(const LaurentPoly& p);
std::string to_json_string(const BiLaurentPoly& p);
LaurentPoly laurent_from_json_string(const std::string& s);
BiLaurentPoly bilaurent_from_json_string(const std::string& s);

}  // namespace lcat
