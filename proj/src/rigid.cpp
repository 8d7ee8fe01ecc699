#include "lcat/rigid.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>

#include <json.hpp>

#include "lcat/errors.hpp"

namespace lcat {

namespace {

int subset_mask(const std::vector<int>& parts) {
  int mask = 0;
  for (int v : parts) mask |= 1 << (v - 1);
  return mask;
}

std::vector<int> mask_parts(int mask, int n) {
  std::vector<int> parts;
  for (int v = n; v >= 1; --v)
    if ((mask >> (v - 1)) & 1) parts.push_back(v);
  return parts;
}

bool has_part(const std::vector<int>& parts, int v) { return std::find(parts.begin(), parts.end(), v) != parts.end(); }

void replace_part(std::vector<int>& parts, int from, int to) {
  *std::find(parts.begin(), parts.end(), from) = to;
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

void check_rank(int n) {
  if (n < 1 || n > 20) throw ValidationError("rank must be between 1 and 20");
}

std::uint64_t power_of(std::uint64_t base, int e, const std::string& what) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) {
    if (r > resource_cap() / base) throw ResourceCapError(what + " exceeds the resource cap");
    r *= base;
  }
  check_cap(r, what);
  return r;
}

// Shifts t_1, ..., t_{l-1} -> (mu, eta).
SkewShape shape_from_shifts(const std::vector<int>& shifts, const std::vector<int>& lengths) {
  SkewShape sh;
  const int l = static_cast<int>(lengths.size());
  if (l == 0) return sh;
  sh.inner.assign(l - 1, 0);
  for (int i = l - 2; i >= 0; --i) sh.inner[i] = shifts[i] + (i + 1 < l - 1 ? sh.inner[i + 1] : 0);
  sh.outer.resize(l);
  for (int j = 0; j < l; ++j) sh.outer[j] = (j < l - 1 ? sh.inner[j] : 0) + lengths[j];
  return sh;
}

// The subcrystal of a tensor product on the given words, with stability
// under every e_i and f_i checked.
template <class T, class FromWord>
Subcrystal<T> filtered_subcrystal(const TensorProduct& tp, const std::vector<TensorWord>& words, FromWord&& from_word,
                                  const std::function<std::string(const T&)>& label, const std::string& what) {
  std::map<TensorWord, int> index;
  for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = static_cast<int>(k);
  const int N = static_cast<int>(words.size());
  const int r = tp.type().rank;
  Subcrystal<T> out;
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> f(r, std::vector<int>(N, FiniteCrystal::kNone));
  for (int b = 0; b < N; ++b) {
    out.elements.push_back(from_word(words[b]));
    wts.push_back(tp.wt(words[b]));
    labels.push_back(label(out.elements.back()));
    for (int i = 1; i <= r; ++i) {
      if (auto next = tp.f(i, words[b])) {
        auto it = index.find(*next);
        if (it == index.end()) throw InternalError(what + " is not stable under f_" + std::to_string(i));
        f[i - 1][b] = it->second;
      }
      if (auto prev = tp.e(i, words[b]); prev && !index.count(*prev))
        throw InternalError(what + " is not stable under e_" + std::to_string(i));
    }
  }
  out.crystal = std::make_shared<FiniteCrystal>(tp.type(), std::move(wts), std::move(labels), std::move(f));
  return out;
}

// Every assignment of 1..m to three rows, as (rows of values descending).
template <class Visit>
void for_each_standard_triple(int m, Visit&& visit) {
  const std::uint64_t total = power_of(3, m, "standard triples");
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::array<std::vector<int>, 3> rows;
    for (int v = m; v >= 1; --v) {
      rows[c % 3].push_back(v);
      c /= 3;
    }
    visit(rows);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// strict partitions

void validate_strict_partition(const StrictPartition& nu, int n) {
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (nu[k] < 1 || nu[k] > n) throw ValidationError("strict partition parts must lie in 1..n");
    if (k && nu[k] >= nu[k - 1]) throw ValidationError("strict partition parts must strictly decrease");
  }
}

std::vector<StrictPartition> all_strict_partitions(int n) {
  check_rank(n);
  std::vector<StrictPartition> out;
  for (int mask = 0; mask < (1 << n); ++mask) out.push_back(mask_parts(mask, n));
  return out;
}

std::optional<StrictPartition> sp_apply(CrystalOp op, int i, const StrictPartition& nu, int n) {
  if (i < 1 || i > n) throw ValidationError("crystal operator index out of range");
  validate_strict_partition(nu, n);
  const int v = n - i;
  StrictPartition out = nu;
  if (op == CrystalOp::f) {
    if ((v > 0 && !has_part(nu, v)) || has_part(nu, v + 1)) return std::nullopt;
    if (v == 0) {
      out.push_back(1);
    } else {
      replace_part(out, v, v + 1);
    }
  } else {
    if (!has_part(nu, v + 1) || (v > 0 && has_part(nu, v))) return std::nullopt;
    if (v == 0) {
      out.pop_back();
    } else {
      replace_part(out, v + 1, v);
    }
  }
  return out;
}

std::string sp_to_signs(const StrictPartition& nu, int n) {
  validate_strict_partition(nu, n);
  std::string s(n, '+');
  for (int v : nu) s[n - v] = '-';
  return s;
}

StrictPartition signs_to_sp(const std::string& signs) {
  const int n = static_cast<int>(signs.size());
  StrictPartition nu;
  for (int i = 1; i <= n; ++i) {
    if (signs[i - 1] != '+' && signs[i - 1] != '-') throw ValidationError("sign vectors use + and -");
    if (signs[i - 1] == '-') nu.push_back(n + 1 - i);
  }
  std::sort(nu.begin(), nu.end(), std::greater<>());
  return nu;
}

Weight sp_weight(const StrictPartition& nu, int n) {
  const std::string s = sp_to_signs(nu, n);
  Weight w(n);
  for (int k = 0; k < n; ++k) w[k] = s[k] == '+' ? 1 : -1;
  return w;
}

CrystalPtr strict_partition_crystal(int n) {
  const auto parts = all_strict_partitions(n);
  const int N = static_cast<int>(parts.size());
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> f(n, std::vector<int>(N, FiniteCrystal::kNone));
  for (int b = 0; b < N; ++b) {
    wts.push_back(sp_weight(parts[b], n));
    labels.push_back(nlohmann::json(parts[b]).dump());
    for (int i = 1; i <= n; ++i)
      if (auto next = sp_apply(CrystalOp::f, i, parts[b], n)) f[i - 1][b] = subset_mask(*next);
  }
  return std::make_shared<FiniteCrystal>(CartanType(Family::B, n), std::move(wts), std::move(labels), std::move(f));
}

StrictPartition staircase(int m) { return staircase(m, 1); }

StrictPartition staircase(int a, int b) {
  StrictPartition out;
  for (int v = a; v >= std::max(b, 1); --v) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// SSRT

bool sp_contains(const StrictPartition& a, const StrictPartition& b) {
  if (a.size() < b.size()) return false;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (a[j] < b[j]) return false;
  return true;
}

StrictPartition drop_parts(const StrictPartition& tau, int t) {
  if (t >= static_cast<int>(tau.size())) return {};
  return StrictPartition(tau.begin() + std::max(t, 0), tau.end());
}

int ssrt_shift(const StrictPartition& upper, const StrictPartition& lower) {
  const int L = static_cast<int>(lower.size());
  int t = 0;
  while (!sp_contains(upper, drop_parts(lower, t))) ++t;
  // Uniqueness: containment persists for every larger shift.
  for (int u = t + 1; u <= L; ++u)
    if (!sp_contains(upper, drop_parts(lower, u))) throw InternalError("SSRT shift is not unique");
  return t;
}

SkewShape ssrt_shape(const SSRT& t) {
  std::vector<int> shifts, lengths;
  for (std::size_t i = 0; i < t.size(); ++i) {
    lengths.push_back(static_cast<int>(t[i].size()));
    if (i + 1 < t.size()) shifts.push_back(ssrt_shift(t[i], t[i + 1]));
  }
  return shape_from_shifts(shifts, lengths);
}

std::vector<int> strip_zeros(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

SSRTCrystal::SSRTCrystal(int n, int m)
    : n_(n), m_(m), parts_(all_strict_partitions(n)), tp_(TensorProduct::power(strict_partition_crystal(n), m)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) index_[parts_[k]] = static_cast<int>(k);
}

TensorWord SSRTCrystal::to_word(const SSRT& t) const {
  if (static_cast<int>(t.size()) != m_) throw ValidationError("SSRT has the wrong number of rows");
  TensorWord w(m_);
  for (int k = 0; k < m_; ++k) {
    validate_strict_partition(t[m_ - 1 - k], n_);
    w[k] = index_.at(t[m_ - 1 - k]);
  }
  return w;
}

SSRT SSRTCrystal::from_word(const TensorWord& w) const {
  SSRT t(m_);
  for (int k = 0; k < m_; ++k) t[m_ - 1 - k] = parts_[w[k]];
  return t;
}

std::optional<SSRT> SSRTCrystal::apply(CrystalOp op, int i, const SSRT& t) const {
  const auto w = to_word(t);
  const auto r = op == CrystalOp::e ? tp_.e(i, w) : tp_.f(i, w);
  if (!r) return std::nullopt;
  return from_word(*r);
}

Weight SSRTCrystal::wt(const SSRT& t) const { return tp_.wt(to_word(t)); }

bool SSRTCrystal::is_highest_weight(const SSRT& t) const { return tp_.is_highest_weight(to_word(t)); }

std::vector<SSRT> SSRTCrystal::all_elements() const {
  std::vector<SSRT> out;
  for (const auto& w : tp_.all_elements()) out.push_back(from_word(w));
  return out;
}

std::string ssrt_json(const SSRT& t) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t) j["rows"].push_back(row);
  const auto sh = ssrt_shape(t);
  j["outer"] = sh.outer;
  j["inner"] = sh.inner;
  return j.dump();
}

Subcrystal<SSRT> rigid_subcrystal(int n, int m, const std::vector<int>& eta) {
  const auto target = strip_zeros(eta);
  if (static_cast<int>(target.size()) >= m) throw ValidationError("R_{n,m}(eta) needs l(eta) < m");
  power_of(1ULL << n, m, "rigid tableaux");
  const SSRTCrystal sp(n, m);
  std::vector<TensorWord> words;
  for (const auto& w : sp.tensor().all_elements())
    if (strip_zeros(ssrt_shape(sp.from_word(w)).inner) == target) words.push_back(w);
  return filtered_subcrystal<SSRT>(
      sp.tensor(), words, [&](const TensorWord& w) { return sp.from_word(w); },
      [](const SSRT& t) { return ssrt_json(t); }, "R_{n,m}(eta)");
}

Subcrystal<SSRT> ssrt_closure(int n, int m, const SSRT& start) {
  const SSRTCrystal sp(n, m);
  const auto comp = closure(sp.tensor(), sp.to_word(start));
  Subcrystal<SSRT> out;
  out.crystal = comp.crystal;
  for (const auto& w : comp.words) out.elements.push_back(sp.from_word(w));
  return out;
}

SSRT highest_ssrt(int n, const std::vector<int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != n) throw ValidationError("need n fundamental coefficients");
  int K = 0;
  for (int c : coeffs) {
    if (c < 0) throw ValidationError("fundamental coefficients must be nonnegative");
    K += c;
  }
  SSRT t(K);
  for (int j = n - 1; j >= 1; --j)
    for (int c = 0; c < coeffs[j - 1]; ++c) t.push_back(staircase(n - j));
  return t;
}

std::vector<SSRT> motzkin_standard_set(int n, int s, int t, int m) {
  if (t < 0 || t > s || s > n - 1) throw ValidationError("need 0 <= t <= s <= n-1");
  if (m < 0 || m > n) throw ValidationError("need 0 <= m <= n");
  const auto target = strip_zeros({s, s - t});
  std::vector<SSRT> out;
  for_each_standard_triple(m, [&](const std::array<std::vector<int>, 3>& rows) {
    SSRT T(rows.begin(), rows.end());
    if (strip_zeros(ssrt_shape(T).inner) == target) out.push_back(T);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::vector<int>, long> standard_triples_by_inner_shape(int m) {
  if (m < 0) throw ValidationError("m must be nonnegative");
  std::map<std::vector<int>, long> out;
  for_each_standard_triple(m, [&](const std::array<std::vector<int>, 3>& rows) {
    ++out[strip_zeros(ssrt_shape(SSRT(rows.begin(), rows.end())).inner)];
  });
  return out;
}

std::vector<SSRT> virtualization_filter(int n, int r) {
  if (r < 0) throw ValidationError("r must be nonnegative");
  if (r == 0) return {SSRT{}};
  std::vector<SSRT> out;
  for (const auto& T : rigid_subcrystal(n, 2 * r, {}).elements) {
    const auto mu = ssrt_shape(T).outer;
    bool even = true;
    for (int i = 0; i + 1 < 2 * r; i += 2) even = even && mu[i] == mu[i + 1];
    if (even) out.push_back(T);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SSRT> virtual_closure(int n, int r) {
  if (r < 0) throw ValidationError("r must be nonnegative");
  if (r == 0) return {SSRT{}};
  const SSRTCrystal sp(n, 2 * r);
  const TensorProduct& tp = sp.tensor();
  const TensorWord start(2 * r, 0);
  std::set<TensorWord> seen{start};
  std::deque<TensorWord> todo{start};
  auto twice = [&](auto op, const TensorWord& w) -> std::optional<TensorWord> {
    auto a = op(w);
    if (!a) return std::nullopt;
    return op(*a);
  };
  while (!todo.empty()) {
    const TensorWord w = todo.front();
    todo.pop_front();
    for (int i = 1; i <= n; ++i) {
      auto fi = [&](const TensorWord& x) { return tp.f(i, x); };
      auto ei = [&](const TensorWord& x) { return tp.e(i, x); };
      const auto nf = i < n ? fi(w) : twice(fi, w);
      const auto ne = i < n ? ei(w) : twice(ei, w);
      for (const auto& next : {nf, ne})
        if (next && seen.insert(*next).second) {
          check_cap(seen.size(), "virtual crystal closure");
          todo.push_back(*next);
        }
    }
  }
  std::vector<SSRT> out;
  for (const auto& w : seen) out.push_back(sp.from_word(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> dual_conjugate(const SSRT& t, int n) {
  const auto sh = ssrt_shape(t);
  if (!strip_zeros(sh.inner).empty()) throw ValidationError("dual conjugate needs an empty inner shape");
  std::vector<std::vector<int>> rows;
  for (std::size_t j = 0;; ++j) {
    std::vector<int> row;
    for (const auto& tau : t)
      if (j < tau.size()) row.push_back(n + 1 - tau[j]);
    if (row.empty()) break;
    rows.push_back(row);
  }
  return rows;
}

bool is_ssyt(const std::vector<std::vector<int>>& rows, int n) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1 || rows[i][j] > n) return false;
      if (j && rows[i][j] < rows[i][j - 1]) return false;
      if (i && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ASP

Color ASP::color_at(int j) const { return j % 2 == 1 ? top : flip(top); }

std::vector<ColoredInt> ASP::colored() const {
  std::vector<ColoredInt> out;
  for (std::size_t j = 0; j < parts.size(); ++j) out.push_back({parts[j], color_at(static_cast<int>(j) + 1)});
  return out;
}

ASP ASP::from_colored(const std::vector<ColoredInt>& cparts, Color empty_color) {
  ASP a;
  a.top = cparts.empty() ? empty_color : cparts.front().color;
  for (std::size_t j = 0; j < cparts.size(); ++j) {
    if (j && cparts[j].color == cparts[j - 1].color) throw ValidationError("ASP colors must alternate");
    if (j && cparts[j].value >= cparts[j - 1].value) throw ValidationError("ASP parts must strictly decrease");
    a.parts.push_back(cparts[j].value);
  }
  return a;
}

void validate_asp(const ASP& tau, int n) { validate_strict_partition(tau.parts, n); }

bool colored_geq(const ColoredInt& j, const ColoredInt& k) { return j.color == k.color && j.value >= k.value; }

bool asp_contains(const ASP& a, const ASP& b) {
  if (a.parts.size() < b.parts.size()) return false;
  for (std::size_t i = 1; i <= b.parts.size(); ++i)
    if (!colored_geq({a.parts[i - 1], a.color_at(static_cast<int>(i))}, {b.parts[i - 1], b.color_at(static_cast<int>(i))}))
      return false;
  return true;
}

ASP drop_parts(const ASP& tau, int t) {
  ASP out;
  out.top = tau.color_at(std::max(t, 0) + 1);
  out.parts = drop_parts(tau.parts, t);
  return out;
}

std::optional<ASP> asp_apply(CrystalOp op, int i, const ASP& tau, int n) {
  if (i < 1 || i > n + 1) throw ValidationError("crystal operator index out of range");
  validate_asp(tau, n);
  ASP out = tau;
  const int ell = static_cast<int>(tau.parts.size());
  const Color last = ell == 0 ? flip(tau.top) : tau.color_at(ell);
  if (i < n) {
    const int v = n - i;
    if (op == CrystalOp::f) {
      if (!has_part(tau.parts, v) || has_part(tau.parts, v + 1)) return std::nullopt;
      replace_part(out.parts, v, v + 1);
    } else {
      if (!has_part(tau.parts, v + 1) || has_part(tau.parts, v)) return std::nullopt;
      replace_part(out.parts, v + 1, v);
    }
    return out;
  }
  // i = n appends / removes a gray 1, i = n+1 a white 1.
  const Color c = i == n ? Color::gray : Color::white;
  if (op == CrystalOp::f) {
    if (last == c || has_part(tau.parts, 1)) return std::nullopt;
    out.parts.push_back(1);
  } else {
    if (ell == 0 || tau.parts.back() != 1 || last != c) return std::nullopt;
    out.parts.pop_back();
  }
  return out;
}

std::string asp_to_signs(const ASP& tau, int n) {
  validate_asp(tau, n);
  std::string s(n + 1, '+');
  for (int v : tau.parts) s[n - v] = '-';
  const int ell = static_cast<int>(tau.parts.size());
  const bool plus = ell == 0 ? tau.top == Color::white : tau.color_at(ell) == Color::gray;
  s[n] = plus ? '+' : '-';
  return s;
}

Weight asp_weight(const ASP& tau, int n) {
  const std::string s = asp_to_signs(tau, n);
  Weight w(n + 1);
  for (int k = 0; k <= n; ++k) w[k] = s[k] == '+' ? 1 : -1;
  return w;
}

std::vector<ASP> all_asps(int n, Color top) {
  check_rank(n);
  std::vector<ASP> out;
  for (int mask = 0; mask < (1 << n); ++mask) out.push_back(ASP{top, mask_parts(mask, n)});
  return out;
}

CrystalPtr asp_crystal(int n, Color top) {
  const auto asps = all_asps(n, top);
  const int N = static_cast<int>(asps.size());
  std::vector<Weight> wts;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> f(n + 1, std::vector<int>(N, FiniteCrystal::kNone));
  for (int b = 0; b < N; ++b) {
    wts.push_back(asp_weight(asps[b], n));
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : asps[b].colored()) j.push_back({c.value, static_cast<int>(c.color)});
    labels.push_back(j.dump());
    for (int i = 1; i <= n + 1; ++i)
      if (auto next = asp_apply(CrystalOp::f, i, asps[b], n)) f[i - 1][b] = subset_mask(next->parts);
  }
  return std::make_shared<FiniteCrystal>(CartanType(Family::D, n + 1), std::move(wts), std::move(labels), std::move(f));
}

Weight colored_integer_weight(int n, const ColoredInt& c) {
  if (c.value < 1 || c.value > n) throw ValidationError("colored integer out of range");
  Weight w(n + 1, 0);
  w[n - c.value] = -2;
  w[n] = c.color == Color::white ? -2 : 2;
  return w;
}

// ---------------------------------------------------------------------------
// SSSRT

int sssrt_shift(const ASP& upper, const ASP& lower) {
  const int parity = (static_cast<int>(upper.top) + static_cast<int>(lower.top)) % 2;
  const int L = static_cast<int>(lower.parts.size());
  int t = parity;
  while (!asp_contains(upper, drop_parts(lower, t))) t += 2;
  if (t >= 2 && asp_contains(upper, drop_parts(lower, t - 2))) throw InternalError("SSSRT shift is not unique");
  for (int u = t + 2; u <= L + 1; u += 2)
    if (!asp_contains(upper, drop_parts(lower, u))) throw InternalError("SSSRT shift is not unique");
  return t;
}

SkewShape sssrt_shape(const SSSRT& t) {
  std::vector<int> shifts, lengths;
  for (std::size_t i = 0; i < t.size(); ++i) {
    lengths.push_back(static_cast<int>(t[i].parts.size()));
    if (i + 1 < t.size()) shifts.push_back(sssrt_shift(t[i], t[i + 1]));
  }
  return shape_from_shifts(shifts, lengths);
}

std::string sssrt_json(const SSSRT& t) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  j["tops"] = nlohmann::json::array();
  for (const auto& row : t) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row.colored()) r.push_back({c.value, static_cast<int>(c.color)});
    j["rows"].push_back(r);
    j["tops"].push_back(static_cast<int>(row.top));
  }
  const auto sh = sssrt_shape(t);
  j["outer"] = sh.outer;
  j["inner"] = sh.inner;
  return j.dump();
}

namespace {

std::vector<CrystalPtr> sssrt_factors(int n, const std::vector<Color>& tops) {
  if (tops.empty()) throw ValidationError("an SSSRT needs at least one row");
  const CrystalPtr white = asp_crystal(n, Color::white), gray = asp_crystal(n, Color::gray);
  std::vector<CrystalPtr> out;
  for (auto it = tops.rbegin(); it != tops.rend(); ++it) out.push_back(*it == Color::white ? white : gray);
  return out;
}

}  // namespace

SSSRTCrystal::SSSRTCrystal(int n, std::vector<Color> tops)
    : n_(n), tops_(std::move(tops)), tp_(sssrt_factors(n, tops_)) {
  for (Color c : {Color::white, Color::gray}) {
    asps_.push_back(all_asps(n, c));
    for (std::size_t k = 0; k < asps_.back().size(); ++k) index_[asps_.back()[k]] = static_cast<int>(k);
  }
}

TensorWord SSSRTCrystal::to_word(const SSSRT& t) const {
  const int m = static_cast<int>(tops_.size());
  if (static_cast<int>(t.size()) != m) throw ValidationError("SSSRT has the wrong number of rows");
  TensorWord w(m);
  for (int k = 0; k < m; ++k) {
    const ASP& row = t[m - 1 - k];
    if (row.top != tops_[m - 1 - k]) throw ValidationError("SSSRT row has the wrong color");
    validate_asp(row, n_);
    w[k] = index_.at(row);
  }
  return w;
}

SSSRT SSSRTCrystal::from_word(const TensorWord& w) const {
  const int m = static_cast<int>(tops_.size());
  SSSRT t(m);
  for (int k = 0; k < m; ++k) t[m - 1 - k] = asps_[static_cast<int>(tops_[m - 1 - k])][w[k]];
  return t;
}

std::optional<SSSRT> SSSRTCrystal::apply(CrystalOp op, int i, const SSSRT& t) const {
  const auto w = to_word(t);
  const auto r = op == CrystalOp::e ? tp_.e(i, w) : tp_.f(i, w);
  if (!r) return std::nullopt;
  return from_word(*r);
}

Weight SSSRTCrystal::wt(const SSSRT& t) const { return tp_.wt(to_word(t)); }

bool SSSRTCrystal::is_highest_weight(const SSSRT& t) const { return tp_.is_highest_weight(to_word(t)); }

std::vector<SSSRT> SSSRTCrystal::all_elements() const {
  std::vector<SSSRT> out;
  for (const auto& w : tp_.all_elements()) out.push_back(from_word(w));
  return out;
}

std::vector<Color> pattern_colors(ColorPattern p) {
  if (p == ColorPattern::p100) return {Color::gray, Color::white, Color::white};
  return {Color::white, Color::white, Color::gray};
}

namespace {

Subcrystal<SSSRT> sssrt_subcrystal(int n, const std::vector<Color>& tops, const std::vector<int>& eta,
                                   const std::string& what) {
  power_of(1ULL << n, static_cast<int>(tops.size()), "spin rigid tableaux");
  const SSSRTCrystal sc(n, tops);
  const auto target = strip_zeros(eta);
  std::vector<TensorWord> words;
  for (const auto& w : sc.tensor().all_elements())
    if (strip_zeros(sssrt_shape(sc.from_word(w)).inner) == target) words.push_back(w);
  return filtered_subcrystal<SSSRT>(
      sc.tensor(), words, [&](const TensorWord& w) { return sc.from_word(w); },
      [](const SSSRT& t) { return sssrt_json(t); }, what);
}

std::vector<Color> odd_colors(Parity x) {
  return pattern_colors(x == Parity::x1 ? ColorPattern::p100 : ColorPattern::p001);
}

}  // namespace

Subcrystal<SSSRT> riordan_subcrystal(int n, int s, Parity x) {
  if (s < 0 || 2 * s > n + 1) throw ValidationError("need 0 <= s <= floor((n+1)/2)");
  return sssrt_subcrystal(n, std::vector<Color>(3, Color::white), {2 * s, x == Parity::x0 ? 2 * s : 0}, "R^x");
}

Subcrystal<SSSRT> riordan_odd_subcrystal(int n, int s, Parity x) {
  if (s < 0 || 2 * s > n) throw ValidationError("need 0 <= s <= floor(n/2)");
  return sssrt_subcrystal(n, odd_colors(x), {2 * s + 1, x == Parity::x0 ? 2 * s + 1 : 0}, "mixed spin R^x");
}

Weight riordan_highest_weight(int n, int s, bool odd) {
  const CartanType ct(Family::D, n + 1);
  return add(Weight(n + 1, 1), tfw(ct, odd ? n - 2 * s : n + 1 - 2 * s));
}

bool almost_even(const std::vector<int>& composition) {
  int m = 0, odd = 0;
  for (int p : composition) {
    if (p < 0) return false;
    m += p;
    odd += p % 2;
  }
  return odd == (m % 2 == 1 ? 1 : 2);
}

namespace {

std::vector<SSSRT> standard_sssrts(int n, int m, const std::vector<Color>& tops, const std::vector<int>& eta,
                                   const std::function<bool(const std::vector<int>&)>& lengths_ok) {
  if (m < 0 || m > n) throw ValidationError("need 0 <= m <= n");
  const auto target = strip_zeros(eta);
  std::vector<SSSRT> out;
  for_each_standard_triple(m, [&](const std::array<std::vector<int>, 3>& rows) {
    SSSRT T;
    std::vector<int> lengths;
    for (int k = 0; k < 3; ++k) {
      T.push_back(ASP{tops[k], rows[k]});
      lengths.push_back(static_cast<int>(rows[k].size()));
    }
    if (lengths_ok(lengths) && strip_zeros(sssrt_shape(T).inner) == target) out.push_back(T);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SSSRT> riordan_sets(int n, int s, Parity x, int m) {
  if (s < 0 || 2 * s > n + 1) throw ValidationError("need 0 <= s <= floor((n+1)/2)");
  if (m < 2 * s - 1) throw ValidationError("need m >= 2s-1");
  return standard_sssrts(n, m, std::vector<Color>(3, Color::white), {2 * s, x == Parity::x0 ? 2 * s : 0},
                         [](const std::vector<int>& l) { return almost_even(l); });
}

std::vector<SSSRT> riordan_sets_odd(int n, int s, Parity x, int m) {
  if (s < 0 || 2 * s > n) throw ValidationError("need 0 <= s <= floor(n/2)");
  if (m < 2 * s) throw ValidationError("need m >= 2s");
  const int h = 2 * s + 1;
  return standard_sssrts(n, m, odd_colors(x), {h, x == Parity::x0 ? h : 0}, [&](const std::vector<int>& l) {
    return x == Parity::x1 ? almost_even({l[0], l[1] + h, l[2] + h}) : almost_even({l[0], l[1], l[2] + h});
  });
}

}  // namespace lcat
