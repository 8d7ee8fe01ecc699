#pragma once

// Determinants over commutative rings without division, weighted DAGs with
// path generating functions, and brute-force enumeration of the vertex-
// disjoint path families in the Lindstrom-Gessel-Viennot lemma.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lcat/errors.hpp"
#include "lcat/ring.hpp"

namespace lcat {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
void require_square(const Matrix<R>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw ValidationError("matrix is not square");
}

// Berkowitz: the characteristic polynomial of each leading principal
// submatrix is obtained from the previous one by a Toeplitz product, using
// only ring operations.  O(n^4) multiplications.
template <class R>
R det_berkowitz(const Matrix<R>& a) {
  using T = RingTraits<R>;
  require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return T::one();
  // c = coefficients of det(x I - A_r), leading coefficient first.
  std::vector<R> c{T::one(), T::zero() - a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // t_0 = 1, t_1 = -a_rr, t_k = -R M^{k-2} S with R = a[r][0..r),
    // S = a[0..r)[r], M the leading r x r block.
    std::vector<R> t{T::one(), T::zero() - a[r][r]};
    std::vector<R> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t k = 2; k <= r + 1; ++k) {
      R s = T::zero();
      for (std::size_t i = 0; i < r; ++i) s += a[r][i] * v[i];
      t.push_back(T::zero() - s);
      if (k == r + 1) break;
      std::vector<R> w(r, T::zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) w[i] += a[i][j] * v[j];
      v = std::move(w);
    }
    std::vector<R> next(r + 2, T::zero());
    for (std::size_t k = 0; k < r + 2; ++k)
      for (std::size_t j = 0; j <= std::min(k, r); ++j) next[k] += t[k - j] * c[j];
    c = std::move(next);
  }
  return n % 2 == 0 ? c[n] : T::zero() - c[n];
}

// Laplace expansion along the first row; the small-size oracle.
template <class R>
R det_cofactor(const Matrix<R>& a) {
  using T = RingTraits<R>;
  require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return T::one();
  if (n == 1) return a[0][0];
  R s = T::zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (T::is_zero(a[0][j])) continue;
    Matrix<R> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    R term = a[0][j] * det_cofactor(minor);
    if (j % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

template <class R>
R det(const Matrix<R>& a) {
  return det_berkowitz(a);
}

template <class R>
Matrix<R> make_matrix(std::size_t n, const std::function<R(int, int)>& entry, int base = 0) {
  Matrix<R> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(entry(static_cast<int>(i) + base, static_cast<int>(j) + base));
  return m;
}

// [f(shift + i + j)]_{i,j=0}^{n-1}
template <class R>
Matrix<R> hankel(std::size_t n, const std::function<R(int)>& f, int shift = 0) {
  return make_matrix<R>(n, [&](int i, int j) { return f(shift + i + j); });
}

template <class R>
std::string matrix_json(const Matrix<R>& m) {
  std::string s = std::string("{\"ring\":\"") + RingTraits<R>::tag + "\",\"rows\":[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + ring_json(m[i][j]);
    s += "]";
  }
  return s + "]}";
}

// -- weighted DAGs -----------------------------------------------------------

template <class R>
class WeightedDAG {
 public:
  struct Edge {
    int to;
    R weight;
  };

  explicit WeightedDAG(int vertices = 0) : out_(vertices) {}

  int add_vertex() {
    out_.emplace_back();
    order_.clear();
    return static_cast<int>(out_.size()) - 1;
  }
  void add_edge(int u, int v, R w) {
    check_vertex(u);
    check_vertex(v);
    out_[u].push_back({v, std::move(w)});
    order_.clear();
  }
  int size() const { return static_cast<int>(out_.size()); }
  const std::vector<Edge>& out(int u) const { return out_[u]; }

  // Kahn's algorithm; throws ValidationError on a cycle.
  const std::vector<int>& topological_order() const {
    if (order_.size() == out_.size()) return order_;
    std::vector<int> indeg(out_.size(), 0);
    for (const auto& es : out_)
      for (const auto& e : es) ++indeg[e.to];
    std::vector<int> todo, order;
    for (int v = 0; v < size(); ++v)
      if (indeg[v] == 0) todo.push_back(v);
    while (!todo.empty()) {
      const int u = todo.back();
      todo.pop_back();
      order.push_back(u);
      for (const auto& e : out_[u])
        if (--indeg[e.to] == 0) todo.push_back(e.to);
    }
    if (order.size() != out_.size()) throw ValidationError("graph has a directed cycle");
    order_ = std::move(order);
    position_.assign(out_.size(), 0);
    for (std::size_t k = 0; k < order_.size(); ++k) position_[order_[k]] = static_cast<int>(k);
    return order_;
  }

  // Generating function of all paths from u to every vertex.
  std::vector<R> path_gf_from(int u) const {
    using T = RingTraits<R>;
    check_vertex(u);
    const auto& order = topological_order();
    std::vector<R> gf(out_.size(), T::zero());
    gf[u] = T::one();
    for (std::size_t k = position_[u]; k < order.size(); ++k) {
      const int x = order[k];
      if (T::is_zero(gf[x])) continue;
      for (const auto& e : out_[x]) gf[e.to] += gf[x] * e.weight;
    }
    return gf;
  }

  R path_gf(int u, int v) const {
    check_vertex(v);
    return path_gf_from(u)[v];
  }

  // Every path u -> v as a vertex list, with its weight.  Resource-capped.
  std::vector<std::pair<std::vector<int>, R>> paths(int u, int v) const {
    using T = RingTraits<R>;
    check_vertex(u);
    check_vertex(v);
    topological_order();
    std::vector<std::pair<std::vector<int>, R>> out;
    std::vector<int> cur{u};
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int x, const R& w) -> void {
      if (x == v) {
        check_cap(++count, "paths");
        out.emplace_back(cur, w);
        return;
      }
      if (position_[x] > position_[v]) return;
      for (const auto& e : out_[x]) {
        cur.push_back(e.to);
        self(self, e.to, w * e.weight);
        cur.pop_back();
      }
    };
    rec(rec, u, T::one());
    return out;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= size()) throw ValidationError("vertex out of range");
  }
  std::vector<std::vector<Edge>> out_;
  mutable std::vector<int> order_;
  mutable std::vector<int> position_;
};

// Session-local memo of path generating functions, keyed by source vertex.
template <class R>
class PathGFSession {
 public:
  explicit PathGFSession(const WeightedDAG<R>& g) : g_(g) {}
  const R& operator()(int u, int v) {
    auto it = memo_.find(u);
    if (it == memo_.end()) it = memo_.emplace(u, g_.path_gf_from(u)).first;
    return it->second.at(v);
  }

 private:
  const WeightedDAG<R>& g_;
  std::map<int, std::vector<R>> memo_;
};

// A grid of lattice points (x, y), 0 <= x <= X, 0 <= y <= Y, restricted by
// `keep`, with E = (x,y) -> (x+1,y) and N = (x,y) -> (x,y+1) edges weighted
// by `weight(x, y, step)` (the start point of the step).
template <class R>
struct GridGraph {
  WeightedDAG<R> dag;
  std::map<std::pair<int, int>, int> ids;

  int id(int x, int y) const {
    auto it = ids.find({x, y});
    if (it == ids.end()) throw ValidationError("grid point (" + std::to_string(x) + "," + std::to_string(y) + ") not in graph");
    return it->second;
  }
};

template <class R>
GridGraph<R> make_grid_graph(int X, int Y, const std::function<bool(int, int)>& keep,
                             const std::function<R(int, int, char)>& weight) {
  GridGraph<R> g;
  for (int x = 0; x <= X; ++x)
    for (int y = 0; y <= Y; ++y)
      if (keep(x, y)) g.ids[{x, y}] = g.dag.add_vertex();
  for (const auto& [p, v] : g.ids) {
    const auto [x, y] = p;
    if (auto it = g.ids.find({x + 1, y}); it != g.ids.end()) g.dag.add_edge(v, it->second, weight(x, y, 'E'));
    if (auto it = g.ids.find({x, y + 1}); it != g.ids.end()) g.dag.add_edge(v, it->second, weight(x, y, 'N'));
  }
  return g;
}

// The Catalan graph: points with y <= x.
template <class R>
GridGraph<R> catalan_graph(int X, int Y, const std::function<R(int, int, char)>& weight) {
  return make_grid_graph<R>(X, Y, [](int x, int y) { return y <= x; }, weight);
}

// -- LGV ---------------------------------------------------------------------

template <class R>
struct PathFamily {
  std::vector<int> sigma;                // path i runs s_i -> t_{sigma[i]}
  int sign = 1;
  R weight;
  std::vector<std::vector<int>> paths;  // vertex lists
};

inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// All vertex-disjoint families s_i -> t_{sigma(i)} over all permutations.
template <class R>
std::vector<PathFamily<R>> lgv_enumerate(const WeightedDAG<R>& g, const std::vector<int>& sources,
                                         const std::vector<int>& sinks) {
  using T = RingTraits<R>;
  const std::size_t k = sources.size();
  if (sinks.size() != k) throw ValidationError("need as many sinks as sources");
  std::vector<std::vector<std::vector<std::pair<std::vector<int>, R>>>> all(k);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      all[i].push_back(g.paths(sources[i], sinks[j]));
      total += all[i].back().size();
      check_cap(total, "paths");
    }

  std::vector<PathFamily<R>> out;
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<char> used(g.size(), 0);
  std::vector<const std::pair<std::vector<int>, R>*> chosen(k);
  std::uint64_t families = 0;
  do {
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == k) {
        check_cap(++families, "path families");
        PathFamily<R> f{sigma, permutation_sign(sigma), T::one(), {}};
        for (const auto* p : chosen) {
          f.weight *= p->second;
          f.paths.push_back(p->first);
        }
        out.push_back(std::move(f));
        return;
      }
      for (const auto& p : all[i][sigma[i]]) {
        bool ok = true;
        for (int v : p.first)
          if (used[v]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (int v : p.first) used[v] = 1;
        chosen[i] = &p;
        self(self, i + 1);
        for (int v : p.first) used[v] = 0;
      }
    };
    rec(rec, 0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

template <class R>
R signed_sum(const std::vector<PathFamily<R>>& fams) {
  R s = RingTraits<R>::zero();
  for (const auto& f : fams) {
    if (f.sign > 0)
      s += f.weight;
    else
      s -= f.weight;
  }
  return s;
}

template <class R>
Matrix<R> path_matrix(const WeightedDAG<R>& g, const std::vector<int>& sources, const std::vector<int>& sinks) {
  PathGFSession<R> gf(g);
  Matrix<R> m(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i)
    for (int t : sinks) m[i].push_back(gf(sources[i], t));
  return m;
}

}  // namespace lcat
