#include <doctest.h>

#include <random>

#include "lcat/crystal.hpp"
#include "lcat/errors.hpp"

using namespace lcat;

namespace {

CartanType B(int n) { return {Family::B, n}; }
CartanType C(int n) { return {Family::C, n}; }
CartanType D(int n) { return {Family::D, n}; }

std::map<Weight, BigInt> multiset(std::initializer_list<std::pair<Weight, int>> items) {
  std::map<Weight, BigInt> m;
  for (const auto& [w, k] : items) m[w] += k;
  return m;
}

// Walk f_i along the labels of a KN crystal.
std::string apply_f(const FiniteCrystal& c, int i, const std::string& label) {
  const int b = c.find(label);
  REQUIRE(b != FiniteCrystal::kNone);
  const int t = c.f(i, b);
  REQUIRE(t != FiniteCrystal::kNone);
  return c.label(t);
}

}  // namespace

TEST_CASE("vector crystals follow the figure") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(vector_crystal({Family::A, n})->size() == n + 1);
    CHECK(vector_crystal(B(n))->size() == 2 * n + 1);
    CHECK(vector_crystal(C(n))->size() == 2 * n);
    for (auto ct : {CartanType{Family::A, n}, B(n), C(n)}) {
      vector_crystal(ct)->check_axioms();
      CHECK(vector_crystal(ct)->highest_weight_elements() == std::vector<int>{0});
    }
    if (n >= 2) {
      CHECK(vector_crystal(D(n))->size() == 2 * n);
      vector_crystal(D(n))->check_axioms();
    }
  }
  const auto d4 = vector_crystal(D(4));
  // f_4: 3 -> 4-bar and 4 -> 3-bar; f_3: 3 -> 4 and 4-bar -> 3-bar.
  CHECK(d4->label(d4->f(4, d4->find("3"))) == "-4");
  CHECK(d4->label(d4->f(4, d4->find("4"))) == "-3");
  CHECK(d4->label(d4->f(3, d4->find("-4"))) == "-3");
  const auto b3 = vector_crystal(B(3));
  CHECK(b3->phi(3, b3->find("3")) == 2);
  CHECK(b3->label(b3->f(3, b3->find("0"))) == "-3");
}

TEST_CASE("spin crystals") {
  const auto s = spin_crystal(B(3), 3);
  CHECK(s->label(s->f(3, s->find("\"+++\""))) == "\"++-\"");
  CHECK(s->f(2, s->find("\"+++\"")) == FiniteCrystal::kNone);
  for (int n = 1; n <= 5; ++n) {
    const auto sp = spin_crystal(B(n), n);
    CHECK(sp->size() == (1 << n));
    sp->check_axioms();
    CHECK(sp->highest_weight_elements().size() == 1);
  }
  for (int n = 2; n <= 5; ++n)
    for (int which : {n - 1, n}) {
      const auto sp = spin_crystal(D(n), which);
      CHECK(sp->size() == (1 << (n - 1)));
      sp->check_axioms();
      const auto hw = sp->highest_weight_elements();
      REQUIRE(hw.size() == 1);
      CHECK(sp->wt(hw[0]) == fundamental_weight(D(n), which));
    }
  CHECK_THROWS_AS(spin_crystal(C(3), 3), ValidationError);
}

TEST_CASE("signature rule: e_i f_i = id on B(omega_1)^3, type C2") {
  const auto tp = TensorProduct::power(vector_crystal(C(2)), 3);
  int checked = 0;
  for (const auto& w : tp.all_elements())
    for (int i = 1; i <= 2; ++i) {
      if (auto g = tp.f(i, w)) {
        CHECK(tp.e(i, *g) == w);
        CHECK(tp.wt(*g) == sub(tp.wt(w), simple_root(C(2), i)));
        ++checked;
      }
      if (auto g = tp.e(i, w)) CHECK(tp.f(i, *g) == w);
      CHECK(coroot_pairing(C(2), i, tp.wt(w)) + tp.epsilon(i, w) == tp.phi(i, w));
    }
  CHECK(checked > 0);
}

TEST_CASE("signature rule agrees with the two-factor tensor formulas") {
  std::mt19937 rng(7);
  for (auto ct : {B(3), C(3), D(4), CartanType{Family::A, 3}}) {
    const auto vec = vector_crystal(ct);
    const auto c2 = kn_crystal(ct, tfw(ct, 2)).crystal;
    const TensorProduct tp({c2, vec});  // b2 (x) b1
    std::uniform_int_distribution<int> p2(0, c2->size() - 1), p1(0, vec->size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const TensorWord w{p2(rng), p1(rng)};
      for (int i = 1; i <= ct.rank; ++i) {
        const int e2 = c2->epsilon(i, w[0]), f2 = c2->phi(i, w[0]);
        (void)f2;
        const int e1 = vec->epsilon(i, w[1]), f1 = vec->phi(i, w[1]);
        CHECK(tp.epsilon(i, w) == std::max(e1, e2 - coroot_pairing(ct, i, vec->wt(w[1]))));
        CHECK(tp.phi(i, w) == std::max(f2, f1 + coroot_pairing(ct, i, c2->wt(w[0]))));
        const auto fw = tp.f(i, w);
        CHECK(fw.has_value() == (tp.phi(i, w) > 0));
        if (fw) CHECK(((*fw)[0] != w[0]) == (e2 >= f1));
        if (const auto ew = tp.e(i, w)) CHECK(((*ew)[0] != w[0]) == (e2 > f1));
      }
    }
  }
}

TEST_CASE("closures and KN crystals") {
  CHECK(kn_crystal(C(2), fundamental_weight(C(2), 1)).crystal->size() == 4);
  CHECK(kn_crystal(C(2), fundamental_weight(C(2), 2)).crystal->size() == 5);
  CHECK(kn_crystal(C(2), scale(fundamental_weight(C(2), 2), 2)).crystal->size() == 14);
  CHECK(kn_crystal(C(3), fundamental_weight(C(3), 3)).crystal->size() == 14);
  CHECK(kn_crystal(B(3), tfw(B(3), 3)).crystal->size() == 35);
  CHECK(kn_crystal(B(3), fundamental_weight(B(3), 3)).crystal->size() == 8);
  CHECK(kn_crystal(B(3), weight_from_fundamental(B(3), {1, 0, 1})).crystal->size() == 48);
  CHECK(kn_crystal(D(4), tfw(D(4), 2)).crystal->size() == 28);
  CHECK(kn_crystal(D(4), weight_from_fundamental(D(4), {0, 0, 2, 0})).crystal->size() == 35);
  CHECK(kn_crystal(D(4), weight_from_fundamental(D(4), {0, 0, 0, 2})).crystal->size() == 35);
  CHECK(kn_crystal({Family::A, 2}, weight_from_partition({Family::A, 2}, {2, 1})).crystal->size() == 8);
  CHECK(kn_crystal(C(3), zero_weight(C(3))).crystal->size() == 1);
  for (auto ct : {B(3), C(3), D(4), B(2)}) {
    for (int i = 1; i <= ct.rank; ++i) {
      const auto k = kn_crystal(ct, fundamental_weight(ct, i));
      k.crystal->check_axioms();
      CHECK(k.crystal->wt(k.highest) == fundamental_weight(ct, i));
    }
  }
  CHECK_THROWS_AS(kn_crystal(C(2), Weight{0, 2}), ValidationError);
  CHECK_THROWS_AS(kn_crystal(C(2), Weight{1, 1}), ValidationError);
}

TEST_CASE("negative last row in type D") {
  const CartanType d3 = D(3);
  const auto plus = kn_crystal(d3, Weight{2, 2, 2});
  const auto minus = kn_crystal(d3, Weight{2, 2, -2});
  CHECK(minus.shape.negative_last_row);
  CHECK(plus.crystal->size() == minus.crystal->size());
  CHECK(minus.crystal->label(minus.highest) == "[[1,2,-3]]");
  minus.crystal->check_axioms();
}

TEST_CASE("the f-chain on B(2 tfw_3), type B3") {
  const auto k = kn_crystal(B(3), scale(tfw(B(3), 3), 2));
  const FiniteCrystal& c = *k.crystal;
  std::string t = c.label(k.highest);
  CHECK(t == "[[1,2,3],[1,2,3]]");
  t = apply_f(c, 3, t);
  CHECK(t == "[[1,2,3],[1,2,0]]");
  t = apply_f(c, 2, t);
  CHECK(t == "[[1,2,3],[1,3,0]]");
  t = apply_f(c, 3, t);
  CHECK(t == "[[1,2,3],[1,0,0]]");
  t = apply_f(c, 3, t);
  CHECK(t == "[[1,2,3],[1,0,-3]]");
  t = apply_f(c, 3, t);
  CHECK(t == "[[1,2,0],[1,0,-3]]");
  CHECK(kn_columns(k, c.find(t)) == std::vector<std::vector<int>>{{1, 2, 0}, {1, 0, -3}});
}

TEST_CASE("characters") {
  for (int n = 1; n <= 4; ++n) {
    const auto ch = character(*vector_crystal(C(n)));
    CHECK(ch.size() == static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      Weight w = zero_weight(C(n));
      w[i] = 2;
      CHECK(ch.at(w) == 1);
      w[i] = -2;
      CHECK(ch.at(w) == 1);
    }
  }
  const auto ch = character(*kn_crystal(C(3), fundamental_weight(C(3), 2)).crystal);
  CHECK(character_mass(ch) == 14);
  for (const auto& [w, m] : ch)
    for (const auto& v : weyl_orbit(C(3), w)) CHECK(ch.at(v) == m);
}

TEST_CASE("every closure has one highest weight element") {
  const auto tp = TensorProduct::power(vector_crystal(B(2)), 3);
  for (const auto& u : tp.highest_weight_elements()) {
    const auto comp = closure(tp, u);
    comp.crystal->check_axioms();
    CHECK(comp.crystal->highest_weight_elements().size() == 1);
  }
}

TEST_CASE("square of the type B spin crystal") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = spin_crystal(B(n), n);
    std::map<Weight, BigInt> expect;
    for (int i = 0; i <= n; ++i) expect[tfw(B(n), i)] += 1;
    CHECK(decompose_tensor({s, s}) == expect);
  }
}

TEST_CASE("squares of the type D spin crystals") {
  for (int n = 1; n <= 3; ++n) {
    const CartanType ct = D(n + 1);
    const auto sp = spin_crystal(ct, n + 1), sm = spin_crystal(ct, n);
    std::map<Weight, BigInt> pp, mm, pm;
    for (int i = 0; i <= (n + 1) / 2; ++i) {
      // tfw_{n+1} = 2 omega_{n+1} is the top term.
      pp[tfw(ct, n + 1 - 2 * i)] += 1;
    }
    // The remaining terms of B(omega_n)^2 are tfw_{n-1-2i}: the total
    // dimension is 2^{2n}, which tfw_{n-2i} would overshoot.
    mm[scale(fundamental_weight(ct, n), 2)] += 1;
    for (int i = 0; i <= (n - 1) / 2; ++i) mm[tfw(ct, n - 1 - 2 * i)] += 1;
    for (int i = 0; i <= n / 2; ++i) pm[tfw(ct, n - 2 * i)] += 1;
    CHECK(decompose_tensor({sp, sp}) == pp);
    CHECK(decompose_tensor({sm, sm}) == mm);
    CHECK(decompose_tensor({sp, sm}) == pm);
    CHECK(decompose_tensor({sm, sp}) == pm);
  }
}

TEST_CASE("cube of the type B spin crystal") {
  for (int n = 1; n <= 4; ++n) {
    const CartanType ct = B(n);
    const auto s = spin_crystal(ct, n);
    std::map<Weight, BigInt> expect;
    for (int k = 0; k <= n; ++k) expect[add(fundamental_weight(ct, n), tfw(ct, n - k))] += k + 1;
    CHECK(decompose_tensor({s, s, s}) == expect);
  }
}

TEST_CASE("iterated decomposition agrees with the exhaustive scan") {
  const auto s = spin_crystal(B(3), 3);
  for (int m = 1; m <= 5; ++m) {
    std::vector<CrystalPtr> f(m, s);
    CHECK(decompose_tensor(f) == decompose_tensor_iterated(f));
  }
  const auto w = wedge_column_crystal(2).crystal;
  CHECK(decompose_tensor({w, w, w}) == decompose_tensor_iterated({w, w, w}));
  const auto v = vector_crystal(D(4)), k2 = kn_crystal(D(4), tfw(D(4), 2)).crystal;
  CHECK(decompose_tensor({v, k2, v}) == decompose_tensor_iterated({v, k2, v}));
  CHECK(decompose_tensor({v, v}) == multiset({{tfw(D(4), 2), 1}, {Weight{4, 0, 0, 0}, 1}, {zero_weight(D(4)), 1}}));
}

TEST_CASE("tensor products respect the resource cap") {
  const auto saved = resource_cap();
  set_resource_cap(1000);
  const auto s = spin_crystal(B(3), 3);
  CHECK_THROWS_AS(decompose_tensor({s, s, s, s}), ResourceCapError);
  set_resource_cap(saved);
}

TEST_CASE("wedge column crystal") {
  for (int n = 1; n <= 3; ++n) {
    const auto wc = wedge_column_crystal(n);
    const FiniteCrystal& c = *wc.crystal;
    CHECK(c.size() == (1 << (2 * n)));
    c.check_axioms();
    // Height one columns form B(omega_1).
    int h1 = 0;
    for (const auto& col : wc.columns) h1 += col.size() == 1;
    CHECK(h1 == 2 * n);
    std::map<Weight, BigInt> by_height;
    for (int b = 0; b < c.size(); ++b)
      if (wc.columns[b].size() == 1) by_height[c.wt(b)] += 1;
    CHECK(by_height == character(*vector_crystal(C(n))));
  }
  CHECK(wedge_to_kn(3, {1, -1}).empty());
  CHECK(wedge_to_kn(3, {1, 3, -3}) == std::vector<int>{1, 3, -3});
  CHECK(wedge_to_kn(3, {1, 2, -2}) == std::vector<int>{1});
  CHECK(wedge_to_kn(2, {1, 2, -2, -1}).empty());
  CHECK(wedge_to_kn(3, {1, 2, -2, -1}).empty());
  CHECK(wedge_to_kn(3, {1, 3, -3, -1}) == std::vector<int>{3, -3});
  CHECK(wedge_to_kn(3, {2, 3, -3, -2}) == std::vector<int>{2, -2});
  CHECK(!is_kn_column_C({1, -1}));
  CHECK(!is_kn_column_C({1, 2, -2}));
  CHECK(is_kn_column_C({1, 3, -3}));
  CHECK_THROWS_AS(wedge_to_kn(3, {2, 1}), ValidationError);
}

TEST_CASE("pair removal is a crystal morphism onto KN columns") {
  for (int n = 1; n <= 4; ++n) {
    const CartanType ct = C(n);
    const auto wc = wedge_column_crystal(n);
    const FiniteCrystal& c = *wc.crystal;
    const auto vec = vector_crystal(ct);
    std::map<int, KNCrystal> kn;
    for (int h = 0; h <= n; ++h) kn.emplace(h, kn_crystal(ct, fundamental_weight(ct, h)));
    auto image = [&](int b) {
      const auto col = wedge_to_kn(n, wc.columns[b]);
      REQUIRE(is_kn_column_C(col));
      const auto it = kn.find(static_cast<int>(col.size()));
      REQUIRE(it != kn.end());
      const int t = it->second.crystal->find(col.empty() ? "[]" : "[[" + [&] {
        std::string s;
        for (std::size_t k = 0; k < col.size(); ++k) s += (k ? "," : "") + std::to_string(col[k]);
        return s;
      }() + "]]");
      REQUIRE(t != FiniteCrystal::kNone);
      return std::pair<const FiniteCrystal*, int>{it->second.crystal.get(), t};
    };
    for (int b = 0; b < c.size(); ++b) {
      const auto [kc, t] = image(b);
      CHECK(kc->wt(t) == c.wt(b));
      for (int i = 1; i <= n; ++i) {
        CHECK(kc->epsilon(i, t) == c.epsilon(i, b));
        CHECK(kc->phi(i, t) == c.phi(i, b));
        if (c.f(i, b) != FiniteCrystal::kNone) {
          const auto [kc2, t2] = image(c.f(i, b));
          CHECK(kc2 == kc);
          CHECK(kc->f(i, t) == t2);
        }
      }
    }
  }
}
