#include "lcat/kingtab.hpp"

#include <algorithm>
#include <set>

#include "lcat/errors.hpp"
#include <json.hpp>

namespace lcat {

namespace {

int mod_range(int v, int m) {  // representative in 1..m
  return ((v - 1) % m + m) % m + 1;
}

std::vector<int> trim_partition(std::vector<int> lambda, int n) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    if (lambda[r] < 0) throw ValidationError("partition parts must be nonnegative");
    if (r && lambda[r] > lambda[r - 1]) throw ValidationError("partition parts must be weakly decreasing");
  }
  if (static_cast<int>(lambda.size()) > n)
    throw ValidationError("partition has more than " + std::to_string(n) + " parts");
  return lambda;
}

std::vector<BarLetter> king_alphabet(int n) {
  std::vector<BarLetter> a;
  for (int k = 1; k <= n; ++k) {
    a.push_back({k, false});
    a.push_back({k, true});
  }
  return a;
}

}  // namespace

std::vector<int> KingTableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

Column KingTableau::column(int c) const {
  Column col;
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) > c) col.push_back(r[c]);
  return col;
}

bool is_king_column(const Column& c, int n) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].value < 1 || c[k].value > n) return false;
    if (c[k] < BarLetter{static_cast<int>(k) + 1, false}) return false;
    if (k && !(c[k - 1] < c[k])) return false;
  }
  return true;
}

bool is_king_tableau(const KingTableau& t, int n) {
  const auto sh = t.shape();
  for (std::size_t r = 0; r < sh.size(); ++r) {
    if (sh[r] == 0 || (r && sh[r] > sh[r - 1])) return false;
    for (int c = 0; c < sh[r]; ++c) {
      const BarLetter& x = t.rows[r][c];
      if (x.value < 1 || x.value > n) return false;
      if (x < BarLetter{static_cast<int>(r) + 1, false}) return false;
      if (c && x < t.rows[r][c - 1]) return false;
      if (r && !(t.rows[r - 1][c] < x)) return false;
    }
  }
  return true;
}

std::vector<KingTableau> enumerate_king(const std::vector<int>& lambda_in, int n) {
  const auto lambda = trim_partition(lambda_in, n);
  const auto alphabet = king_alphabet(n);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);

  KingTableau t;
  for (int len : lambda) t.rows.emplace_back(len);
  std::vector<KingTableau> out;
  std::uint64_t count = 0;

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      check_cap(++count, "King tableaux");
      out.push_back(t);
      return;
    }
    const auto [r, c] = cells[k];
    BarLetter lo{r + 1, false};
    for (const BarLetter& x : alphabet) {
      if (x < lo) continue;
      if (c && x < t.rows[r][c - 1]) continue;
      if (r && !(t.rows[r - 1][c] < x)) continue;
      t.rows[r][c] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Weight column_weight(const Column& c, int n) {
  Weight w(n, 0);
  for (const auto& x : c) w[x.value - 1] += x.barred ? -2 : 2;
  return w;
}

Weight king_weight(const KingTableau& t, int n) {
  Weight w(n, 0);
  for (const auto& r : t.rows)
    for (const auto& x : r) w[x.value - 1] += x.barred ? -2 : 2;
  return w;
}

Character king_character(const std::vector<int>& lambda, int n) {
  Character ch;
  for (const auto& t : enumerate_king(lambda, n)) ch[king_weight(t, n)] += 1;
  return ch;
}

std::string king_json(const KingTableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(x.signed_value());
    rows.push_back(row);
  }
  return nlohmann::json{{"alphabet", "king"}, {"rows", rows}}.dump();
}

// -- Xi ---------------------------------------------------------------------

Column xi(const std::string& d, int n) {
  if (!is_partial_dyck(d)) throw ValidationError("not a partial Dyck word: " + d);
  const int i = count_steps(d, 'N');
  if (count_steps(d, 'E') != 2 * n - i + 1)
    throw ValidationError("a word in Dyck_{(2n-i+1,i)} needs 2n-i+1 E steps");
  return path_weight_w(d);
}

std::string xi_inverse(const Column& c, int n) {
  const int i = static_cast<int>(c.size());
  const int total_e = 2 * n - i + 1;
  std::string w;
  int x = 0;
  for (int k = 0; k < i; ++k) {
    const int s = c[k].barred ? 2 * c[k].value : 2 * c[k].value - 1;
    const int target_x = s - k;
    if (target_x < x || target_x > total_e) throw ValidationError("column is not the image of a partial Dyck word");
    w.append(target_x - x, 'E');
    w.push_back('N');
    x = target_x;
  }
  w.append(total_e - x, 'E');
  if (!is_partial_dyck(w) || xi(w, n) != c) throw ValidationError("column is not the image of a partial Dyck word");
  return w;
}

Column xi_prime(const std::string& dprime, int n) {
  auto w = path_weight_wprime(dprime, n);
  return Column(w.rbegin(), w.rend());
}

Column xi_via_partitions(const std::string& dyck, bool conjugate) {
  if (!is_partial_dyck(dyck) || count_steps(dyck, 'N') != count_steps(dyck, 'E'))
    throw ValidationError("not a Dyck word: " + dyck);
  const int N = count_steps(dyck, 'N');
  const int n = N - 1;
  // Row y (from the bottom) of the region below the path has N - x cells,
  // x the abscissa of the (y+1)-th N step.  The top row is always empty.
  std::vector<int> mu;
  int x = 0;
  for (char s : dyck) {
    if (s == 'E')
      ++x;
    else
      mu.push_back(N - x);
  }
  mu.resize(n);
  if (conjugate) {
    std::vector<int> conj(n, 0);
    for (int part : mu)
      for (int j = 0; j < part; ++j) ++conj[j];
    mu = conj;
  }
  Column col;
  for (int y = 0; y < n; ++y) {
    const int v = mu[y] + (n - y);
    if (v < 1 || v > 2 * n) throw InternalError("partition does not fit the staircase");
    col.push_back(BarLetter{n - (v - 1) / 2, v % 2 == 1});
  }
  std::sort(col.begin(), col.end());
  return col;
}

// -- Jacobi-Trudi layout ----------------------------------------------------

JTLayout::JTLayout(std::vector<int> lambda, int n) : n_(n) {
  if (n < 1) throw ValidationError("rank must be positive");
  lambda_ = trim_partition(std::move(lambda), n);
  ell_ = lambda_.empty() ? 0 : lambda_[0];
  conj_.assign(ell_, 0);
  for (int part : lambda_)
    for (int j = 0; j < part; ++j) ++conj_[j];
}

BarLetter JTLayout::reweight(int i, const BarLetter& local) const {
  return {mod_range(local.value - (ell_ - i), m(i)), local.barred};
}

BarLetter JTLayout::unreweight(int i, const BarLetter& shifted) const {
  return {mod_range(shifted.value + (ell_ - i), m(i)), shifted.barred};
}

std::vector<std::pair<int, int>> path_points(const JTLayout& lay, int i, const std::string& word) {
  auto [x, y] = lay.source(i);
  std::vector<std::pair<int, int>> pts{{x, y}};
  for (char s : word) {
    if (s == 'E')
      ++x;
    else if (s == 'N')
      ++y;
    else
      throw ValidationError("path words use only N and E");
    pts.emplace_back(x, y);
  }
  return pts;
}

bool non_intersecting(const JTLayout& lay, const std::vector<std::string>& family) {
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 0; k < family.size(); ++k)
    for (const auto& p : path_points(lay, static_cast<int>(k) + 1, family[k]))
      if (!seen.insert(p).second) return false;
  return true;
}

KingTableau nilp_to_king(const JTLayout& lay, const std::vector<std::string>& family) {
  const int ell = lay.ell();
  if (static_cast<int>(family.size()) != ell)
    throw ValidationError("expected " + std::to_string(ell) + " paths");
  for (int i = 1; i <= ell; ++i) {
    const auto& w = family[i - 1];
    if (!is_partial_dyck(w) || count_steps(w, 'E') != lay.a(i, i) || count_steps(w, 'N') != lay.b(i, i))
      throw ValidationError("path " + std::to_string(i) + " does not run from s_i to t_i below the diagonal");
  }
  if (!non_intersecting(lay, family)) throw ValidationError("path family intersects");

  KingTableau t;
  for (int len : lay.lambda()) t.rows.emplace_back(len);
  for (int i = 1; i <= ell; ++i) {
    const auto local = path_weight_w(family[i - 1]);
    const int col = lay.column_of_path(i) - 1;
    for (std::size_t r = 0; r < local.size(); ++r) t.rows[r][col] = lay.reweight(i, local[r]);
  }
  if (!is_king_tableau(t, lay.rank())) throw InternalError("non-intersecting family did not give a King tableau");
  return t;
}

std::vector<std::string> king_to_nilp(const JTLayout& lay, const KingTableau& t) {
  if (t.shape() != lay.lambda() || !is_king_tableau(t, lay.rank()))
    throw ValidationError("not a King tableau of the layout's shape");
  std::vector<std::string> family;
  for (int i = 1; i <= lay.ell(); ++i) {
    Column local;
    for (const auto& x : t.column(lay.column_of_path(i) - 1)) local.push_back(lay.unreweight(i, x));
    family.push_back(xi_inverse(local, lay.m(i)));
  }
  return family;
}

}  // namespace lcat
