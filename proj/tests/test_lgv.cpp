#include <doctest.h>

#include <random>

#include "lcat/kingtab.hpp"
#include "lcat/lgv.hpp"
#include "lcat/paths.hpp"

using namespace lcat;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(-2, 3), len(0, 3);
  LaurentPoly p;
  for (int k = len(rng); k > 0; --k) p += LaurentPoly::monomial(exp(rng), coeff(rng));
  return p;
}

GroupAlgebra random_group(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2), exp(-1, 1), len(0, 2);
  GroupAlgebra g;
  for (int k = len(rng); k > 0; --k) g += GroupAlgebra::monomial({exp(rng), exp(rng)}, coeff(rng));
  return g;
}

}  // namespace

TEST_CASE("group algebra") {
  const auto x = GroupAlgebra::monomial({1, 0});
  const auto y = GroupAlgebra::monomial({0, 1, 0});
  CHECK(GroupAlgebra::monomial({0, 0}) == GroupAlgebra(1));
  CHECK((x * y).coeff({1, 1}) == 1);
  CHECK((x - x).is_zero());
  CHECK(((x + y) * (x - y)) == x * x - y * y);
  CHECK((x * GroupAlgebra::monomial({-1})) == GroupAlgebra(1));
  // x_1 x_2^2 -> q^{1 + 4}
  CHECK(GroupAlgebra::monomial({1, 2}).principal_specialization() == LaurentPoly::monomial(5));
  CHECK(GroupAlgebra::monomial({2, -2}).principal_specialization(2) == LaurentPoly::monomial(-1));
  CHECK_THROWS_AS(GroupAlgebra::monomial({1}).principal_specialization(2), ValidationError);
}

TEST_CASE("determinants") {
  CHECK(det_berkowitz(Matrix<BigInt>{}) == 1);
  CHECK(det_berkowitz(Matrix<BigInt>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
  CHECK(det_berkowitz(Matrix<BigInt>{{2, 5}, {5, 14}}) == 3);
  CHECK(det_berkowitz(Matrix<BigInt>{{0, 1}, {1, 0}}) == -1);
  CHECK_THROWS_AS(det_berkowitz(Matrix<BigInt>{{1, 2}}), ValidationError);

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix<BigInt> m(n, std::vector<BigInt>(n));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    CHECK(det_berkowitz(m) == det_cofactor(m));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix<LaurentPoly> m(n, std::vector<LaurentPoly>(n));
    Matrix<GroupAlgebra> g(n, std::vector<GroupAlgebra>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = random_poly(rng);
        g[i][j] = random_group(rng);
      }
    CHECK(det_berkowitz(m) == det_cofactor(m));
    CHECK(det_berkowitz(g) == det_cofactor(g));
  }
}

TEST_CASE("Hankel of Carlitz-Riordan Catalan numbers") {
  for (int n = 0; n <= 5; ++n) {
    const auto h = hankel<LaurentPoly>(n + 1, [](int k) { return carlitz_riordan(k); });
    CHECK(det(h) == LaurentPoly::monomial(n * (n + 1) * (4 * n - 1) / 6));
  }
  const auto h = hankel<BigInt>(2, [](int k) { return catalan(k); }, 1);
  CHECK(matrix_json(h) == R"({"ring":"integer","rows":[["1","2"],["2","5"]]})");
}

TEST_CASE("path generating functions") {
  const auto unit = catalan_graph<BigInt>(8, 8, [](int, int, char) { return BigInt(1); });
  PathGFSession<BigInt> gf(unit.dag);
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) CHECK(gf(unit.id(0, 0), unit.id(n, k)) == catalan_triangle(n, k));
  CHECK(unit.dag.path_gf(unit.id(3, 1), unit.id(3, 1)) == 1);
  CHECK(unit.dag.path_gf(unit.id(3, 1), unit.id(1, 1)) == 0);

  // Area weighting: an N step from (x, y) adds x - y cells.
  const auto area = catalan_graph<LaurentPoly>(7, 7, [](int x, int y, char s) {
    return s == 'N' ? LaurentPoly::monomial(x - y - 1) : LaurentPoly(1);
  });
  for (int n = 0; n <= 7; ++n) CHECK(area.dag.path_gf(area.id(0, 0), area.id(n, n)) == carlitz_riordan(n));

  WeightedDAG<BigInt> cyc(2);
  cyc.add_edge(0, 1, 1);
  cyc.add_edge(1, 0, 1);
  CHECK_THROWS_AS(cyc.path_gf(0, 1), ValidationError);
}

TEST_CASE("LGV lemma on random DAGs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int V = 9;
    WeightedDAG<LaurentPoly> g(V);
    std::bernoulli_distribution edge(0.45);
    for (int u = 0; u < V; ++u)
      for (int v = u + 1; v < V; ++v)
        if (edge(rng)) {
          auto w = random_poly(rng);
          if (w.is_zero()) w = LaurentPoly::monomial(1);
          g.add_edge(u, v, w);
        }
    const int k = 1 + trial % 3;
    std::vector<int> s, t;
    for (int i = 0; i < k; ++i) {
      s.push_back(i);
      t.push_back(V - 1 - i);
    }
    const auto fams = lgv_enumerate(g, s, t);
    CHECK(signed_sum(fams) == det(path_matrix(g, s, t)));
  }
  // One source and sink: families are the paths, all with sign +1.
  const auto unit = catalan_graph<BigInt>(4, 4, [](int, int, char) { return BigInt(1); });
  const auto fams = lgv_enumerate(unit.dag, {unit.id(0, 0)}, {unit.id(4, 4)});
  CHECK(fams.size() == 14);
  for (const auto& f : fams) CHECK(f.sign == 1);
}

TEST_CASE("Jacobi-Trudi grid: only the identity permutation contributes") {
  for (const auto& [lam, n] : std::vector<std::pair<std::vector<int>, int>>{{{2, 2}, 2}, {{3, 3, 3}, 3}, {{2, 1}, 2}, {{3, 2}, 3}}) {
    const JTLayout lay(lam, n);
    int X = 0, Y = 0;
    for (int j = 1; j <= lay.ell(); ++j) {
      X = std::max(X, lay.sink(j).first);
      Y = std::max(Y, lay.sink(j).second);
    }
    const auto g = catalan_graph<BigInt>(X, Y, [](int, int, char) { return BigInt(1); });
    std::vector<int> s, t;
    for (int i = 1; i <= lay.ell(); ++i) {
      s.push_back(g.id(lay.source(i).first, lay.source(i).second));
      t.push_back(g.id(lay.sink(i).first, lay.sink(i).second));
    }
    const auto fams = lgv_enumerate(g.dag, s, t);
    for (const auto& f : fams) CHECK(f.sign == 1);
    for (const auto& f : fams) {
      std::vector<int> id(f.sigma.size());
      std::iota(id.begin(), id.end(), 0);
      CHECK(f.sigma == id);
    }
    CHECK(fams.size() == enumerate_king(lam, n).size());
    CHECK(signed_sum(fams) == det(path_matrix(g.dag, s, t)));
  }
}
