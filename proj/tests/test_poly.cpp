#include <doctest.h>

#include <random>

#include "lcat/errors.hpp"
#include "lcat/poly.hpp"
#include "test_util.hpp"

using namespace lcat;

namespace {
LaurentPoly Q(int e) { return LaurentPoly::monomial(e); }
}  // namespace

TEST_CASE("q_int small values") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == LaurentPoly(1));
  CHECK(q_int(3) == LaurentPoly(1) + Q(1) + Q(2));
}

TEST_CASE("q_binomial (4,2) by hand") {
  CHECK(q_binomial(4, 2) == LaurentPoly(1) + Q(1) + 2 * Q(2) + Q(3) + Q(4));
  for (int n = 0; n < 8; ++n) CHECK(q_binomial(n, 0) == LaurentPoly(1));
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(3, 4).is_zero());
}

TEST_CASE("q_binomial: Pascal, symmetry and q=1") {
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      CHECK(q_binomial(n, k).at_one() == binomial(n, k));
      CHECK(!q_binomial(n, k).has_negative_coeff());
    }
  for (int total = 1; total <= 20; ++total)
    for (int n = 0; n <= total; ++n) {
      const int m = total - n;
      CHECK(q_binomial(total, n) == Q(n) * q_binomial(total - 1, n) + q_binomial(total - 1, n - 1));
      CHECK(q_binomial(total, n) == q_binomial(total - 1, n) + Q(m) * q_binomial(total - 1, n - 1));
    }
}

TEST_CASE("printed product of Gaussian binomials") {
  const auto d_plus = q_binomial(5, 2) * q_binomial(9, 4);
  const auto d_minus = q_binomial(7, 3) * q_binomial(7, 3);
  CHECK(to_json_string(d_plus) == testutil::read_golden("d_plus.json"));
  CHECK(to_json_string(d_minus) == testutil::read_golden("d_minus.json"));
}

TEST_CASE("q_pochhammer") {
  CHECK(q_pochhammer(0) == LaurentPoly(1));
  CHECK(q_pochhammer(2) == (LaurentPoly(1) - Q(1)) * (LaurentPoly(1) - Q(2)));
  CHECK(q_pochhammer(2, PochhammerBase::minus_q) == (LaurentPoly(1) + Q(1)) * (LaurentPoly(1) + Q(2)));
}

TEST_CASE("normalize_valuation") {
  auto [v, p] = normalize_valuation(Q(3) + Q(5));
  CHECK(v == 3);
  CHECK(p == LaurentPoly(1) + Q(2));
  auto [v1, p1] = normalize_valuation(LaurentPoly(1));
  CHECK(v1 == 0);
  CHECK(p1 == LaurentPoly(1));
  CHECK_THROWS_AS(normalize_valuation(LaurentPoly()), ValidationError);

  const auto printed = laurent_from_json_string(testutil::read_golden("q7_catprime_7_2.json"));
  auto [v7, body] = normalize_valuation(printed.shift(7));
  CHECK(v7 == 7);
  CHECK(body == printed);
}

TEST_CASE("substitute_t_qinv") {
  CHECK(BiLaurentPoly::monomial(1, 1).substitute_t_qinv() == LaurentPoly(1));
  CHECK((BiLaurentPoly::monomial(2, 0) + BiLaurentPoly::monomial(0, 2)).substitute_t_qinv() ==
        Q(2) + Q(-2));
  // q^6 Cat_4(q, 1/q) is the Mahonian q-Catalan [8 choose 4]_q / [5]_q.
  const auto cat4 = bilaurent_from_json_string(testutil::read_golden("cat4_qt.json"));
  CHECK(cat4.substitute_t_qinv().shift(6) == q_binomial(8, 4).exact_div(q_int(5)));
}

TEST_CASE("exact division") {
  const auto a = q_binomial(9, 4) * (Q(-3) + LaurentPoly(2));
  CHECK(a.exact_div(q_binomial(9, 4)) == Q(-3) + LaurentPoly(2));
  CHECK(!q_int(5).try_div(q_int(2)).has_value());
  CHECK(!LaurentPoly(3).try_div(LaurentPoly(2)).has_value());
  CHECK_THROWS_AS(q_int(5).exact_div(q_int(3)), InternalError);

  const auto qt1 = BiLaurentPoly::monomial(1, 1) - BiLaurentPoly(1);
  const auto f = BiLaurentPoly::monomial(2, 0) + BiLaurentPoly::monomial(-1, 3) + BiLaurentPoly(5);
  auto quo = (f * qt1).try_div(qt1);
  REQUIRE(quo.has_value());
  CHECK(*quo == f);
  CHECK(!(f * qt1 + BiLaurentPoly(1)).try_div(qt1).has_value());
  CHECK(!BiLaurentPoly::monomial(1, 0).try_div(qt1).has_value());
}

TEST_CASE("ring laws on random sparse operands") {
  std::mt19937 rng(12345);
  auto random_poly = [&]() {
    std::uniform_int_distribution<int> ne(0, 6), ex(-10, 10), co(-50, 50);
    LaurentPoly p;
    for (int i = ne(rng); i > 0; --i) p += LaurentPoly::monomial(ex(rng), co(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("json round trip and pretty form") {
  const auto p = Q(-2) * 7 - Q(3) + LaurentPoly(BigInt("123456789012345678901234567890"));
  CHECK(laurent_from_json_string(to_json_string(p)) == p);
  CHECK(to_json_string(p) == R"([[-2,"7"],[0,"123456789012345678901234567890"],[3,"-1"]])");
  CHECK((Q(3) + 2 * Q(1) - LaurentPoly(1)).str() == "q^3 + 2q - 1");
  CHECK_THROWS_AS(laurent_from_json_string("[[1"), ValidationError);
  const auto b = BiLaurentPoly::monomial(1, 2, 3) - BiLaurentPoly(1);
  CHECK(bilaurent_from_json_string(to_json_string(b)) == b);
}
