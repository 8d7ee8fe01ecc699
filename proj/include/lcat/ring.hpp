#pragma once

// The commutative rings used for path weights and determinants: integers,
// Laurent polynomials in q, in q and t, and the group algebra of the weight
// lattice.  Algorithms are templates over a RingTraits specialisation that
// supplies zero and one; +, -, * and == come from the types themselves.

#include <map>
#include <string>
#include <vector>

#include "lcat/poly.hpp"

namespace lcat {

// Finite Z-linear combinations of monomials x^v, v an integer vector.
// Exponent vectors are stored with trailing zeros removed, so vectors of
// different lengths are identified by zero padding and 1 = x^().
class GroupAlgebra {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, BigInt>;

  GroupAlgebra() = default;
  GroupAlgebra(long c);  // NOLINT: integers embed as constants
  static GroupAlgebra monomial(Exponent v, const BigInt& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(Exponent v) const;
  BigInt at_one() const;  // sum of coefficients

  // x_k := q^{k+1} applied to each coordinate k with the given divisor on
  // the exponent (2 for doubled weight coordinates); exponents must divide.
  LaurentPoly principal_specialization(int divisor = 1) const;

  GroupAlgebra& operator+=(const GroupAlgebra& o);
  GroupAlgebra& operator-=(const GroupAlgebra& o);
  GroupAlgebra operator-() const;
  friend GroupAlgebra operator+(GroupAlgebra a, const GroupAlgebra& b) { return a += b; }
  friend GroupAlgebra operator-(GroupAlgebra a, const GroupAlgebra& b) { return a -= b; }
  friend GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b);
  GroupAlgebra& operator*=(const GroupAlgebra& o) { return *this = *this * o; }
  friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GroupAlgebra& a, const GroupAlgebra& b) { return !(a == b); }

  std::string str() const;

 private:
  static Exponent trim(Exponent v);
  void add_term(const Exponent& v, const BigInt& c);
  Terms terms_;
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& x) { return x == 0; }
  static constexpr const char* tag = "integer";
};

template <>
struct RingTraits<LaurentPoly> {
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return 1; }
  static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
  static constexpr const char* tag = "laurent_q";
};

template <>
struct RingTraits<BiLaurentPoly> {
  static BiLaurentPoly zero() { return {}; }
  static BiLaurentPoly one() { return 1; }
  static bool is_zero(const BiLaurentPoly& x) { return x.is_zero(); }
  static constexpr const char* tag = "laurent_qt";
};

template <>
struct RingTraits<GroupAlgebra> {
  static GroupAlgebra zero() { return {}; }
  static GroupAlgebra one() { return 1; }
  static bool is_zero(const GroupAlgebra& x) { return x.is_zero(); }
  static constexpr const char* tag = "group_algebra";
};

// JSON text of one element; the matrix form wraps rows with a ring tag.
std::string ring_json(const BigInt& x);
std::string ring_json(const LaurentPoly& x);
std::string ring_json(const BiLaurentPoly& x);
std::string ring_json(const GroupAlgebra& x);

}  // namespace lcat
