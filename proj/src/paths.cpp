#include "lcat/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lcat/errors.hpp"

namespace lcat {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_odd(long v) { return (v % 2 + 2) % 2 == 1; }

void cap_enumeration(const BigInt& count, const std::string& what) {
  if (!count.fits_ulong_p()) throw ResourceCapError(what + ": enumeration too large");
  check_cap(count.get_ui(), what);
}

}  // namespace

std::string BarLetter::str() const {
  std::string s = std::to_string(value);
  if (barred) s += "̅";
  return s;
}

std::string column_str(const Column& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].str();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// words

bool is_ne_word(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == 'N' || c == 'E'; });
}

bool is_partial_dyck(const std::string& w) {
  int e = 0, n = 0;
  for (char c : w) {
    if (c == 'E')
      ++e;
    else if (c == 'N')
      ++n;
    else
      return false;
    if (n > e) return false;
  }
  return true;
}

int count_steps(const std::string& w, char step) {
  return static_cast<int>(std::count(w.begin(), w.end(), step));
}

std::vector<std::string> enumerate_partial_dyck(int n, int k) {
  if (n < 0 || k < 0) throw ValidationError("partial Dyck words need n, k >= 0");
  std::vector<std::string> out;
  if (k > n) return out;
  cap_enumeration(catalan_triangle(n, k), "partial Dyck words");
  std::string w;
  std::function<void(int, int)> rec = [&](int e, int nn) {
    if (e == n && nn == k) {
      out.push_back(w);
      return;
    }
    if (e < n) {
      w.push_back('E');
      rec(e + 1, nn);
      w.pop_back();
    }
    if (nn < k && nn + 1 <= e) {
      w.push_back('N');
      rec(e, nn + 1);
      w.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<std::string> enumerate_dyck(int n) { return enumerate_partial_dyck(n, n); }

std::vector<std::string> enumerate_rectangle(int n, int m) {
  if (n < 0 || m < 0) throw ValidationError("rectangle words need n, m >= 0");
  cap_enumeration(binomial(n + m, n), "rectangle words");
  std::vector<std::string> out;
  std::string w;
  std::function<void(int, int)> rec = [&](int nn, int e) {
    if (nn == n && e == m) {
      out.push_back(w);
      return;
    }
    if (e < m) {
      w.push_back('E');
      rec(nn, e + 1);
      w.pop_back();
    }
    if (nn < n) {
      w.push_back('N');
      rec(nn + 1, e);
      w.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<std::string> enumerate_motzkin(int n, int k) {
  if (n < 0 || k < 0) throw ValidationError("Motzkin words need n, k >= 0");
  std::vector<std::string> out;
  if (k > n) return out;
  cap_enumeration(motzkin_triangle(n, k), "Motzkin words");
  std::string w;
  std::function<void(int, int)> rec = [&](int len, int h) {
    if (h - (n - len) > k || h + (n - len) < k) return;
    if (len == n) {
      out.push_back(w);
      return;
    }
    for (char c : {'D', 'H', 'U'}) {
      const int nh = h + (c == 'U') - (c == 'D');
      if (nh < 0) continue;
      w.push_back(c);
      rec(len + 1, nh);
      w.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

bool is_riordan(const std::string& w) {
  int h = 0;
  for (char c : w) {
    if (c == 'U')
      ++h;
    else if (c == 'D')
      --h;
    else if (c == 'H') {
      if (h == 0) return false;
    } else {
      return false;
    }
    if (h < 0) return false;
  }
  return true;
}

std::vector<std::string> enumerate_riordan(int n, int k) {
  std::vector<std::string> out;
  for (auto& w : enumerate_motzkin(n, k))
    if (is_riordan(w)) out.push_back(std::move(w));
  return out;
}

std::optional<std::string> alt_riordan_to_riordan(const std::string& w) {
  // Conditions of the alternative set, stated on the {e,n} lattice path:
  // it ends with e, has no three consecutive n, stays weakly below the
  // diagonal after every e, and an isolated n never starts on the diagonal.
  if (!w.empty() && w.back() != 'e') return std::nullopt;
  std::string out;
  int x = 0, y = 0, run = 0;
  for (char c : w) {
    if (c == 'n') {
      if (++run > 2) return std::nullopt;
      ++y;
    } else if (c == 'e') {
      if (run == 1 && x == y - 1) return std::nullopt;
      out.push_back(run == 0 ? 'U' : run == 1 ? 'H' : 'D');
      ++x;
      if (y > x) return std::nullopt;
      run = 0;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<std::string> enumerate_alt_riordan(int length, int k) {
  if (length < 0 || k < 0) throw ValidationError("alternative Riordan words need length, k >= 0");
  std::vector<std::string> out;
  const int ns = length - k;  // total n steps: x - y = k at the end
  if (ns < 0) return out;
  cap_enumeration(binomial(length + ns, ns), "alternative Riordan words");
  std::string w;
  std::function<void(int, int)> rec = [&](int e, int nn) {
    if (e == length && nn == ns) {
      if (alt_riordan_to_riordan(w)) out.push_back(w);
      return;
    }
    if (e < length) {
      w.push_back('e');
      rec(e + 1, nn);
      w.pop_back();
    }
    if (nn < ns) {
      w.push_back('n');
      rec(e, nn + 1);
      w.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// numbers

BigInt catalan(long n) { return catalan_triangle(n, n); }

BigInt catalan_triangle(long n, long k) {
  if (k < 0 || k > n) return 0;
  return binomial(n + k, k) - binomial(n + k, k - 1);
}

BigInt motzkin_triangle(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt s = 0;
  for (long i = 0; 2 * i + k <= n; ++i)
    s += binomial(n, 2 * i + k) * (binomial(2 * i + k, i) - binomial(2 * i + k, i - 1));
  return s;
}

BigInt motzkin(long n) { return motzkin_triangle(n, 0); }

BigInt riordan_triangle(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // Alternating Motzkin sum with the index n-1-i; the i = n-k term of the
  // k = 0 column uses the boundary value Mot_{(-1,-1)} = 1.
  auto mot = [](long a, long b) -> BigInt { return (a == -1 && b == -1) ? BigInt(1) : motzkin_triangle(a, b); };
  BigInt s = 0;
  for (long i = 0; i <= n - k; ++i) {
    BigInt term = mot(n - 1 - i, k) + mot(n - 1 - i, k - 1);
    if (i % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

BigInt riordan(long n) { return riordan_triangle(n, 0); }

// ---------------------------------------------------------------------------
// statistics

std::vector<BarLetter> path_weight_w(const std::string& d) {
  if (!is_partial_dyck(d)) throw ValidationError("not a partial Dyck word: " + d);
  std::vector<BarLetter> out;
  int x = 0, y = 0;
  for (char c : d) {
    if (c == 'N') {
      const int s = x + y;
      out.push_back(is_odd(s) ? BarLetter{(s + 1) / 2, false} : BarLetter{s / 2, true});
      ++y;
    } else {
      ++x;
    }
  }
  return out;
}

BarLetter wprime_letter(int x, int y, int n) {
  const int s = x + y;
  if (is_odd(s)) return BarLetter{n - floor_div(s + 1, 2), true};
  return BarLetter{n - floor_div(s, 2), false};
}

bool is_conjugate_partial_dyck(const std::string& w) {
  std::string r(w.rbegin(), w.rend());
  for (char& c : r) {
    if (c == 'N')
      c = 'E';
    else if (c == 'E')
      c = 'N';
    else
      return false;
  }
  return is_partial_dyck(r);
}

std::vector<BarLetter> path_weight_wprime(const std::string& dprime, int n) {
  if (!is_conjugate_partial_dyck(dprime))
    throw ValidationError("not a conjugate partial Dyck word: " + dprime);
  const int i = count_steps(dprime, 'E');
  const int nn = count_steps(dprime, 'N');
  if (nn != 2 * n - i + 1)
    throw ValidationError("a word in Dyck'_{(i,2n-i+1)} needs 2n-i+1 N steps");
  int x = n - i, y = n - nn;
  std::vector<BarLetter> out;
  for (char c : dprime) {
    if (c == 'E') {
      out.push_back(wprime_letter(x, y, n));
      ++x;
    } else {
      ++y;
    }
  }
  return out;
}

PathStatistics dyck_statistics(const std::string& d) {
  if (!is_partial_dyck(d)) throw ValidationError("not a partial Dyck word: " + d);
  PathStatistics st;
  int x = 0, y = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 'N') {
      ++y;
      st.area += x - y;
      if (i + 1 < d.size() && d[i + 1] == 'E') {
        st.descents.push_back(static_cast<int>(i) + 1);
        st.maj_N += y;
        st.maj_E += x;
      }
    } else {
      ++x;
    }
  }
  auto ws = path_weight_w(d);
  if (!ws.empty() && count_steps(d, 'N') == count_steps(d, 'E')) ws.pop_back();  // fixed last N
  for (const auto& l : ws) {
    if (l.barred)
      st.w_minus += l.value;
    else
      st.w_plus += l.value;
  }
  st.signed_weight = st.w_plus - st.w_minus;
  return st;
}

BiLaurentPoly stump_qt_catalan(int n) {
  BiLaurentPoly::Terms t;
  const int B = static_cast<int>(n * (n - 1) / 2);
  for (const auto& d : enumerate_dyck(n)) {
    const auto st = dyck_statistics(d);
    t[{static_cast<int>(st.maj_N), B - static_cast<int>(st.maj_E)}] += 1;
  }
  return BiLaurentPoly::from_terms(t);
}

BiLaurentPoly wpm_qt_catalan(int n) {
  BiLaurentPoly::Terms t;
  const int B = static_cast<int>(n * (n - 1) / 2);
  for (const auto& d : enumerate_dyck(n)) {
    const auto st = dyck_statistics(d);
    t[{B - static_cast<int>(st.w_minus), B - static_cast<int>(st.w_plus)}] += 1;
  }
  return BiLaurentPoly::from_terms(t);
}

BiLaurentPoly wpm_literal(int n) {
  BiLaurentPoly::Terms t;
  for (const auto& d : enumerate_dyck(n)) {
    const auto st = dyck_statistics(d);
    t[{static_cast<int>(st.w_plus), static_cast<int>(st.w_minus)}] += 1;
  }
  return BiLaurentPoly::from_terms(t);
}

BiLaurentPoly::Exp wprime_pm(const std::string& d, int n) {
  int x = 0, y = 0, plus = 0, minus = 0;
  bool first = true;
  for (char c : d) {
    if (c == 'E') {
      if (!first) {
        const auto l = wprime_letter(x, y, n);
        (l.barred ? minus : plus) += l.value;
      }
      first = false;
      ++x;
    } else {
      ++y;
    }
  }
  return {plus, minus};
}

BiLaurentPoly wpm_qt_catalan_triangle(int n, int k) {
  BiLaurentPoly::Terms t;
  const int rank = floor_div(n + k, 2);
  for (const auto& d : enumerate_partial_dyck(n, k)) t[wprime_pm(d, rank)] += 1;
  return BiLaurentPoly::from_terms(t);
}

std::string dyck_from_valleys(int n, const std::vector<std::pair<int, int>>& valleys) {
  std::string w;
  int x = 0, y = 0;
  for (const auto& [a, b] : valleys) {
    if (a <= x || b <= y || a < b || a >= n || b >= n)
      throw InternalError("invalid valley sequence for a Dyck path");
    w.append(static_cast<std::size_t>(a - x), 'E');
    w.append(static_cast<std::size_t>(b - y), 'N');
    x = a;
    y = b;
  }
  w.append(static_cast<std::size_t>(n - x), 'E');
  w.append(static_cast<std::size_t>(n - y), 'N');
  return w;
}

std::string upsilon(const std::string& d) {
  const int n = count_steps(d, 'E');
  if (!is_partial_dyck(d) || count_steps(d, 'N') != n) throw ValidationError("not a Dyck word: " + d);
  if (n == 0) return d;
  auto ws = path_weight_w(d);
  ws.pop_back();
  std::vector<int> xs;
  std::set<int> xminus;
  for (const auto& l : ws) {
    if (l.barred)
      xminus.insert(l.value);
    else
      xs.push_back(l.value);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<int> ys;
  for (int v = 1; v <= n - 1; ++v)
    if (!xminus.count(v)) ys.push_back(v);
  if (xs.size() != ys.size()) throw InternalError("Upsilon: |X_+| != n-1-|X_-|");
  std::vector<std::pair<int, int>> valleys;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < ys[i]) throw InternalError("Upsilon: x_i < y_i");
    valleys.emplace_back(xs[i], ys[i]);
  }
  return dyck_from_valleys(n, valleys);
}

LaurentPoly carlitz_riordan(int n) {
  if (n < 0) throw ValidationError("negative index");
  std::vector<LaurentPoly> c{LaurentPoly(1)};
  for (int m = 0; m < n; ++m) {
    LaurentPoly next;
    for (int k = 0; k <= m; ++k) next += (c[k] * c[m - k]).shift(k);
    c.push_back(next);
  }
  return c[n];
}

LaurentPoly area_generating(int n) {
  LaurentPoly::Terms t;
  for (const auto& d : enumerate_dyck(n)) t[static_cast<int>(dyck_statistics(d).area)] += 1;
  return LaurentPoly::from_terms(t);
}

LaurentPoly mahonian_catalan(int n) { return q_binomial(2 * n, n).exact_div(q_int(n + 1)); }

LaurentPoly q_catalan_triangle(int n, int k) {
  if (k < 0 || k > n) return {};
  return (q_binomial(n + k, k) - q_binomial(n + k, k - 1)).shift(-k);
}

long rect_edge_weight(int x, int y, int n, int m) {
  const long s = static_cast<long>(n) - x + m - y;
  return is_odd(s) ? -(s - 1) / 2 : s / 2;
}

long rect_weight(const std::string& p, int n, int m) {
  if (!is_ne_word(p) || count_steps(p, 'N') != n || count_steps(p, 'E') != m)
    throw ValidationError("word is not in R_{n,m}: " + p);
  int x = 0, y = 0;
  long total = 0;
  for (char c : p) {
    if (c == 'E') {
      total += rect_edge_weight(x, y, n, m);
      ++x;
    } else {
      ++y;
    }
  }
  return total;
}

int rect_valuation(int n, int m) {
  const int D = floor_div(n - m + 1, 2);
  int v = 0;
  for (int k = D; k <= D + m - 1; ++k) v -= k;
  return v;
}

RectGenerating rect_generating(int n, int m) {
  RectGenerating r;
  LaurentPoly::Terms t;
  for (const auto& p : enumerate_rectangle(n, m)) t[static_cast<int>(rect_weight(p, n, m))] += 1;
  r.poly = LaurentPoly::from_terms(t);
  r.D = floor_div(n - m + 1, 2);
  r.v = rect_valuation(n, m);
  return r;
}

}  // namespace lcat
