#include "lcat/crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "lcat/errors.hpp"

namespace lcat {

// ---------------------------------------------------------------------------
// FiniteCrystal

FiniteCrystal::FiniteCrystal(CartanType ct, std::vector<Weight> weights, std::vector<std::string> labels,
                             std::vector<std::vector<int>> f_table)
    : type_(ct), weights_(std::move(weights)), labels_(std::move(labels)), f_(std::move(f_table)) {
  const int N = size();
  const int n = type_.rank;
  if (static_cast<int>(labels_.size()) != N || static_cast<int>(f_.size()) != n)
    throw InternalError("crystal tables have inconsistent sizes");
  e_.assign(n, std::vector<int>(N, kNone));
  eps_.assign(n, std::vector<int>(N, 0));
  phi_.assign(n, std::vector<int>(N, 0));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(f_[i].size()) != N) throw InternalError("crystal f-table has the wrong size");
    for (int b = 0; b < N; ++b) {
      const int t = f_[i][b];
      if (t == kNone) continue;
      if (t < 0 || t >= N || e_[i][t] != kNone) throw InternalError("f_i is not a partial injection");
      e_[i][t] = b;
    }
    std::vector<char> seen(N, 0);
    for (int b = 0; b < N; ++b) {
      if (e_[i][b] != kNone) continue;
      std::vector<int> chain;
      for (int c = b; c != kNone; c = f_[i][c]) {
        if (seen[c]) throw InternalError("f_i has a cycle");
        seen[c] = 1;
        chain.push_back(c);
      }
      const int L = static_cast<int>(chain.size());
      for (int k = 0; k < L; ++k) {
        eps_[i][chain[k]] = k;
        phi_[i][chain[k]] = L - 1 - k;
      }
    }
    for (int b = 0; b < N; ++b)
      if (!seen[b]) throw InternalError("f_i has a cycle");
  }
  for (int b = 0; b < N; ++b)
    if (!index_.emplace(labels_[b], b).second) throw InternalError("duplicate crystal label " + labels_[b]);
}

int FiniteCrystal::find(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? kNone : it->second;
}

bool FiniteCrystal::is_highest_weight(int b) const {
  for (int i = 1; i <= type_.rank; ++i)
    if (e(i, b) != kNone) return false;
  return true;
}

std::vector<int> FiniteCrystal::highest_weight_elements() const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b)
    if (is_highest_weight(b)) out.push_back(b);
  return out;
}

void FiniteCrystal::check_axioms() const {
  for (int b = 0; b < size(); ++b)
    for (int i = 1; i <= type_.rank; ++i) {
      if (coroot_pairing(type_, i, wt(b)) + epsilon(i, b) != phi(i, b))
        throw InternalError("crystal axiom <wt,alpha^vee> + eps = phi fails at " + label(b));
      const int t = e(i, b);
      if (t != kNone) {
        if (wt(t) != add(wt(b), simple_root(type_, i)))
          throw InternalError("crystal axiom wt(e_i b) = wt(b) + alpha_i fails at " + label(b));
        if (f(i, t) != b) throw InternalError("e_i and f_i are not inverse at " + label(b));
      }
    }
}

Character character(const FiniteCrystal& c) {
  Character ch;
  for (int b = 0; b < c.size(); ++b) ch[c.wt(b)] += 1;
  return ch;
}

BigInt character_mass(const Character& ch) {
  BigInt s = 0;
  for (const auto& [w, m] : ch) s += m;
  return s;
}

// ---------------------------------------------------------------------------
// atoms

std::vector<int> vector_letters(const CartanType& ct) {
  const int n = ct.rank;
  std::vector<int> out;
  if (ct.family == Family::A) {
    for (int k = 1; k <= n + 1; ++k) out.push_back(k);
    return out;
  }
  for (int k = 1; k <= n; ++k) out.push_back(k);
  if (ct.family == Family::B) out.push_back(0);
  for (int k = n; k >= 1; --k) out.push_back(-k);
  return out;
}

int letter_rank(const CartanType& ct, int letter) {
  const auto letters = vector_letters(ct);
  auto it = std::find(letters.begin(), letters.end(), letter);
  if (it == letters.end()) throw ValidationError("letter " + std::to_string(letter) + " is not in B(omega_1) of " + ct.str());
  return static_cast<int>(it - letters.begin());
}

CrystalPtr vector_crystal(const CartanType& ct) {
  const int n = ct.rank;
  const auto letters = vector_letters(ct);
  const int N = static_cast<int>(letters.size());
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  for (int x : letters) {
    Weight w = zero_weight(ct);
    if (x > 0) w[x - 1] = 2;
    if (x < 0) w[-x - 1] = -2;
    wts.push_back(w);
    labels.push_back(std::to_string(x));
  }
  auto pos = [&](int x) { return letter_rank(ct, x); };
  std::vector<std::vector<int>> f(n, std::vector<int>(N, FiniteCrystal::kNone));
  auto arrow = [&](int i, int from, int to) { f[i - 1][pos(from)] = pos(to); };
  for (int i = 1; i <= n; ++i) {
    if (ct.family == Family::A) {
      arrow(i, i, i + 1);
      continue;
    }
    if (i < n) {
      arrow(i, i, i + 1);
      arrow(i, -(i + 1), -i);
      continue;
    }
    switch (ct.family) {
      case Family::B:
        arrow(n, n, 0);
        arrow(n, 0, -n);
        break;
      case Family::C: arrow(n, n, -n); break;
      case Family::D:
        arrow(n, n - 1, -n);
        arrow(n, n, -(n - 1));
        break;
      case Family::A: break;
    }
  }
  return std::make_shared<FiniteCrystal>(ct, std::move(wts), std::move(labels), std::move(f));
}

CrystalPtr spin_crystal(const CartanType& ct, int which) {
  const int n = ct.rank;
  if (ct.family == Family::B) {
    if (which != n) throw ValidationError("type B spin crystal is B(omega_n)");
  } else if (ct.family == Family::D) {
    if (which != n && which != n - 1) throw ValidationError("type D spin crystals are B(omega_{n-1}) and B(omega_n)");
  } else {
    throw ValidationError("spin crystals exist only in types B and D");
  }
  // Sign vectors with '+' < '-' lexicographically; (+,...,+) comes first.
  std::vector<std::string> signs;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::string s;
    int minus = 0;
    for (int k = n - 1; k >= 0; --k) {
      const bool m = (mask >> k) & 1;
      s.push_back(m ? '-' : '+');
      minus += m;
    }
    if (ct.family == Family::D && (minus % 2 == 1) != (which == n - 1)) continue;
    signs.push_back(s);
  }
  std::map<std::string, int> index;
  for (std::size_t k = 0; k < signs.size(); ++k) index[signs[k]] = static_cast<int>(k);
  const int N = static_cast<int>(signs.size());
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> f(n, std::vector<int>(N, FiniteCrystal::kNone));
  for (int b = 0; b < N; ++b) {
    const std::string& s = signs[b];
    Weight w(n);
    for (int k = 0; k < n; ++k) w[k] = s[k] == '+' ? 1 : -1;
    wts.push_back(w);
    labels.push_back("\"" + s + "\"");
    for (int i = 1; i <= n; ++i) {
      std::string t = s;
      if (i < n) {
        if (s[i - 1] != '+' || s[i] != '-') continue;
        t[i - 1] = '-';
        t[i] = '+';
      } else if (ct.family == Family::B) {
        if (s[n - 1] != '+') continue;
        t[n - 1] = '-';
      } else {
        if (s[n - 2] != '+' || s[n - 1] != '+') continue;
        t[n - 2] = '-';
        t[n - 1] = '-';
      }
      f[i - 1][b] = index.at(t);
    }
  }
  return std::make_shared<FiniteCrystal>(ct, std::move(wts), std::move(labels), std::move(f));
}

// ---------------------------------------------------------------------------
// tensor products

TensorProduct::TensorProduct(std::vector<CrystalPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("a tensor product needs at least one factor");
  type_ = factors_.front()->type();
  for (const auto& c : factors_)
    if (!(c->type() == type_)) throw ValidationError("tensor factors must share a Cartan type");
}

TensorProduct TensorProduct::power(const CrystalPtr& c, int k) {
  if (k < 1) throw ValidationError("tensor power must be at least 1");
  return TensorProduct(std::vector<CrystalPtr>(k, c));
}

BigInt TensorProduct::cardinality() const {
  BigInt s = 1;
  for (const auto& c : factors_) s *= c->size();
  return s;
}

TensorProduct::Scan TensorProduct::scan(int i, const TensorWord& w) const {
  Scan s;
  // Unmatched + signs as (position, count) runs, oldest first.
  std::vector<std::pair<int, int>> plus;
  for (int p = 0; p < length(); ++p) {
    const FiniteCrystal& c = *factors_[p];
    int minus = c.phi(i, w[p]);
    while (minus > 0 && !plus.empty()) {
      const int take = std::min(minus, plus.back().second);
      minus -= take;
      plus.back().second -= take;
      s.plus -= take;
      if (plus.back().second == 0) plus.pop_back();
    }
    if (minus > 0) {
      s.minus += minus;
      s.f_pos = p;
    }
    const int eps = c.epsilon(i, w[p]);
    if (eps > 0) {
      plus.emplace_back(p, eps);
      s.plus += eps;
    }
  }
  if (!plus.empty()) s.e_pos = plus.front().first;
  return s;
}

std::optional<TensorWord> TensorProduct::e(int i, const TensorWord& w) const {
  const Scan s = scan(i, w);
  if (s.e_pos < 0) return std::nullopt;
  TensorWord r = w;
  r[s.e_pos] = factors_[s.e_pos]->e(i, w[s.e_pos]);
  return r;
}

std::optional<TensorWord> TensorProduct::f(int i, const TensorWord& w) const {
  const Scan s = scan(i, w);
  if (s.f_pos < 0) return std::nullopt;
  TensorWord r = w;
  r[s.f_pos] = factors_[s.f_pos]->f(i, w[s.f_pos]);
  return r;
}

int TensorProduct::epsilon(int i, const TensorWord& w) const { return scan(i, w).plus; }
int TensorProduct::phi(int i, const TensorWord& w) const { return scan(i, w).minus; }

Weight TensorProduct::wt(const TensorWord& w) const {
  Weight r = zero_weight(type_);
  for (int p = 0; p < length(); ++p) r = add(r, factors_[p]->wt(w[p]));
  return r;
}

bool TensorProduct::is_highest_weight(const TensorWord& w) const {
  for (int i = 1; i <= type_.rank; ++i)
    if (scan(i, w).plus > 0) return false;
  return true;
}

std::string TensorProduct::label(const TensorWord& w) const {
  std::string s = "[";
  for (int p = length() - 1; p >= 0; --p) {
    s += factors_[p]->label(w[p]);
    if (p) s += ",";
  }
  return s + "]";
}

namespace {

void check_tensor_size(const TensorProduct& tp) {
  const BigInt card = tp.cardinality();
  if (!card.fits_ulong_p()) throw ResourceCapError("tensor product too large");
  check_cap(card.get_ui(), "tensor product elements");
}

template <class Visit>
void for_each_word(const TensorProduct& tp, Visit&& visit) {
  TensorWord w(tp.length(), 0);
  while (true) {
    visit(w);
    int p = tp.length() - 1;
    while (p >= 0 && ++w[p] == tp.factor(p).size()) w[p--] = 0;
    if (p < 0) return;
  }
}

}  // namespace

std::vector<TensorWord> TensorProduct::all_elements() const {
  check_tensor_size(*this);
  std::vector<TensorWord> out;
  for_each_word(*this, [&](const TensorWord& w) { out.push_back(w); });
  return out;
}

std::vector<TensorWord> TensorProduct::highest_weight_elements() const {
  check_tensor_size(*this);
  std::vector<TensorWord> out;
  for_each_word(*this, [&](const TensorWord& w) {
    if (is_highest_weight(w)) out.push_back(w);
  });
  return out;
}

Component closure(const TensorProduct& tp, const TensorWord& start, const WordLabeller& labeller) {
  if (static_cast<int>(start.size()) != tp.length()) throw ValidationError("tensor word has the wrong length");
  std::set<TensorWord> seen{start};
  std::deque<TensorWord> todo{start};
  const int n = tp.type().rank;
  while (!todo.empty()) {
    const TensorWord w = todo.front();
    todo.pop_front();
    for (int i = 1; i <= n; ++i)
      for (const auto& next : {tp.e(i, w), tp.f(i, w)})
        if (next && seen.insert(*next).second) {
          check_cap(seen.size(), "crystal closure");
          todo.push_back(*next);
        }
  }
  Component comp;
  comp.words.assign(seen.begin(), seen.end());
  std::map<TensorWord, int> index;
  for (std::size_t k = 0; k < comp.words.size(); ++k) index[comp.words[k]] = static_cast<int>(k);
  const int N = static_cast<int>(comp.words.size());
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> f(n, std::vector<int>(N, FiniteCrystal::kNone));
  for (int b = 0; b < N; ++b) {
    const TensorWord& w = comp.words[b];
    wts.push_back(tp.wt(w));
    labels.push_back(labeller ? labeller(w) : tp.label(w));
    for (int i = 1; i <= n; ++i)
      if (auto next = tp.f(i, w)) f[i - 1][b] = index.at(*next);
  }
  comp.crystal = std::make_shared<FiniteCrystal>(tp.type(), std::move(wts), std::move(labels), std::move(f));
  return comp;
}

std::map<Weight, BigInt> decompose_tensor(const std::vector<CrystalPtr>& factors) {
  const TensorProduct tp(factors);
  std::map<Weight, BigInt> out;
  for (const auto& w : tp.highest_weight_elements()) out[tp.wt(w)] += 1;
  return out;
}

std::map<Weight, BigInt> decompose_tensor_iterated(const std::vector<CrystalPtr>& factors) {
  if (factors.empty()) throw ValidationError("a tensor product needs at least one factor");
  const CartanType ct = factors.front()->type();
  std::map<Weight, BigInt> hw{{zero_weight(ct), BigInt(1)}};
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const FiniteCrystal& c = **it;
    if (!(c.type() == ct)) throw ValidationError("tensor factors must share a Cartan type");
    std::map<Weight, BigInt> next;
    for (const auto& [mu, mult] : hw)
      for (int b = 0; b < c.size(); ++b) {
        bool ok = true;
        for (int i = 1; ok && i <= ct.rank; ++i) ok = c.epsilon(i, b) <= coroot_pairing(ct, i, mu);
        if (ok) next[add(mu, c.wt(b))] += mult;
      }
    check_cap(next.size(), "distinct highest weights");
    hw = std::move(next);
  }
  return hw;
}

// ---------------------------------------------------------------------------
// KN tableaux

KNShape kn_shape(const CartanType& ct, const Weight& lambda) {
  validate_weight(ct, lambda);
  if (!is_dominant(ct, lambda)) throw ValidationError("weight " + weight_str(lambda) + " is not dominant for " + ct.str());
  const int n = ct.rank;
  KNShape shape;
  Weight rest = lambda;
  if (lambda[0] % 2 != 0) {
    if (ct.family == Family::D && lambda[n - 1] < 0) {
      shape.spin = n - 1;
    } else {
      shape.spin = n;
    }
    rest = sub(lambda, fundamental_weight(ct, shape.spin));
  }
  std::vector<int> part = weight_partition(rest);
  if (ct.family == Family::D && part[n - 1] < 0) {
    shape.negative_last_row = true;
    part[n - 1] = -part[n - 1];
  }
  const int width = part.empty() ? 0 : part[0];
  for (int c = 0; c < width; ++c) {
    int h = 0;
    while (h < static_cast<int>(part.size()) && part[h] > c) ++h;
    shape.columns.push_back(h);
  }
  return shape;
}

KNCrystal kn_crystal(const CartanType& ct, const Weight& lambda) {
  KNCrystal out;
  out.shape = kn_shape(ct, lambda);
  const int n = ct.rank;
  const CrystalPtr vec = vector_crystal(ct);
  std::vector<CrystalPtr> factors;
  TensorWord start;
  if (out.shape.spin) {
    factors.push_back(spin_crystal(ct, out.shape.spin));
    start.push_back(0);  // (+,...,+) or (+,...,+,-)
  }
  for (int h : out.shape.columns)
    for (int row = h; row >= 1; --row) {
      factors.push_back(vec);
      const int letter = (out.shape.negative_last_row && row == n) ? -n : row;
      start.push_back(letter_rank(ct, letter));
    }
  if (factors.empty()) {
    // B(0): a single element with no operators.
    out.crystal = std::make_shared<FiniteCrystal>(ct, std::vector<Weight>{zero_weight(ct)}, std::vector<std::string>{"[]"},
                                                  std::vector<std::vector<int>>(n, std::vector<int>{FiniteCrystal::kNone}));
    out.words = {TensorWord{}};
    return out;
  }
  const TensorProduct tp(factors);
  if (!tp.is_highest_weight(start) || tp.wt(start) != lambda)
    throw InternalError("highest weight tableau is not highest weight");
  const KNShape shape = out.shape;
  auto labeller = [&](const TensorWord& w) {
    std::string s = "[";
    std::size_t p = 0;
    bool first = true;
    if (shape.spin) {
      s += tp.factor(0).label(w[0]);
      p = 1;
      first = false;
    }
    for (int h : shape.columns) {
      if (!first) s += ",";
      first = false;
      s += "[";
      for (int r = 0; r < h; ++r) {
        if (r) s += ",";
        s += tp.factor(p + h - 1 - r).label(w[p + h - 1 - r]);
      }
      s += "]";
      p += h;
    }
    return s + "]";
  };
  Component comp = closure(tp, start, labeller);
  out.crystal = comp.crystal;
  out.words = std::move(comp.words);
  out.highest = static_cast<int>(std::lower_bound(out.words.begin(), out.words.end(), start) - out.words.begin());
  if (out.crystal->highest_weight_elements() != std::vector<int>{out.highest})
    throw InternalError("KN crystal does not have a unique highest weight element");
  return out;
}

std::vector<std::vector<int>> kn_columns(const KNCrystal& k, int b) {
  const auto letters = vector_letters(k.crystal->type());
  const TensorWord& w = k.words.at(b);
  std::vector<std::vector<int>> cols;
  std::size_t p = k.shape.spin ? 1 : 0;
  for (int h : k.shape.columns) {
    std::vector<int> col;
    for (int r = 0; r < h; ++r) col.push_back(letters[w[p + h - 1 - r]]);
    cols.push_back(col);
    p += h;
  }
  return cols;
}

// ---------------------------------------------------------------------------
// exterior powers, type C

namespace {

std::string column_label(const std::vector<int>& col) {
  std::string s = "[";
  for (std::size_t k = 0; k < col.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(col[k]);
  }
  return s + "]";
}

}  // namespace

WedgeCrystal wedge_column_crystal(int n) {
  const CartanType ct(Family::C, n);
  const auto letters = vector_letters(ct);
  const int L = static_cast<int>(letters.size());
  const CrystalPtr vec = vector_crystal(ct);
  WedgeCrystal out;
  // Height first, then lexicographic in letter ranks.
  std::vector<std::vector<int>> ranks;
  for (int k = 0; k <= L; ++k) {
    std::vector<int> pick(L, 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    std::vector<std::vector<int>> level;
    do {
      std::vector<int> r;
      for (int t = 0; t < L; ++t)
        if (pick[t]) r.push_back(t);
      level.push_back(r);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(level.begin(), level.end());
    ranks.insert(ranks.end(), level.begin(), level.end());
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t b = 0; b < ranks.size(); ++b) index[ranks[b]] = static_cast<int>(b);
  const int N = static_cast<int>(ranks.size());
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> f(n, std::vector<int>(N, FiniteCrystal::kNone));
  for (int b = 0; b < N; ++b) {
    std::vector<int> col;
    Weight w = zero_weight(ct);
    for (int r : ranks[b]) {
      col.push_back(letters[r]);
      w = add(w, vec->wt(r));
    }
    out.columns.push_back(col);
    wts.push_back(w);
    labels.push_back(column_label(col));
    if (ranks[b].empty()) continue;
    const auto tp = TensorProduct::power(vec, static_cast<int>(ranks[b].size()));
    const TensorWord word(ranks[b].rbegin(), ranks[b].rend());  // bottom to top
    for (int i = 1; i <= n; ++i) {
      auto next = tp.f(i, word);
      if (!next) continue;
      std::vector<int> r(next->rbegin(), next->rend());
      if (!std::is_sorted(r.begin(), r.end()) || std::adjacent_find(r.begin(), r.end()) != r.end())
        throw InternalError("strict columns are not closed under f_i");
      f[i - 1][b] = index.at(r);
    }
  }
  out.crystal = std::make_shared<FiniteCrystal>(ct, std::move(wts), std::move(labels), std::move(f));
  return out;
}

namespace {

// Row (1-based from the top) of `letter` in `column`, 0 if absent.
int row_of(const std::vector<int>& column, int letter) {
  auto it = std::find(column.begin(), column.end(), letter);
  return it == column.end() ? 0 : static_cast<int>(it - column.begin()) + 1;
}

}  // namespace

std::vector<int> wedge_to_kn(int n, const std::vector<int>& column) {
  const CartanType ct(Family::C, n);
  for (std::size_t k = 0; k < column.size(); ++k) {
    letter_rank(ct, column[k]);
    if (k && letter_rank(ct, column[k - 1]) >= letter_rank(ct, column[k]))
      throw ValidationError("column is not strictly increasing");
  }
  const int k = static_cast<int>(column.size());
  std::vector<int> removed;
  for (int i = 1; i <= n; ++i) {
    const int p = row_of(column, i), pbar = row_of(column, -i);
    if (p && pbar && k + 1 + p - pbar - static_cast<int>(removed.size()) > i) removed.push_back(i);
  }
  std::vector<int> col;
  for (int x : column)
    if (std::find(removed.begin(), removed.end(), std::abs(x)) == removed.end()) col.push_back(x);
  return col;
}

bool is_kn_column_C(const std::vector<int>& column) {
  const int k = static_cast<int>(column.size());
  for (int p = 1; p <= k; ++p) {
    const int i = column[p - 1];
    const int pbar = i > 0 ? row_of(column, -i) : 0;
    if (pbar && k + 1 + p - pbar > i) return false;
  }
  return true;
}

}  // namespace lcat
