#include "lcat/identities.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <json.hpp>
#include <map>
#include <sstream>
#include <thread>

#include "lcat/cartan.hpp"
#include "lcat/charforms.hpp"
#include "lcat/errors.hpp"
#include "lcat/lgv.hpp"
#include "lcat/paths.hpp"
#include "lcat/rigid.hpp"

namespace lcat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

// binom(m, k) with binom(m, 0) = 1 for every m (the column sum of type D
// reaches binom(-1, 0)).
BigInt gbinom(long m, long k) { return k == 0 ? BigInt(1) : binomial(m, k); }

BigInt pow2(long e) {
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(e);
  return r;
}

// e_0, ..., e_n of the n binomials q^j + t^j, j = 1..n.
std::vector<BiLaurentPoly> elementary_qt(int n) {
  std::vector<BiLaurentPoly> e(n + 1);
  e[0] = 1;
  for (int j = 1; j <= n; ++j) {
    const BiLaurentPoly x = BiLaurentPoly::monomial(j, 0) + BiLaurentPoly::monomial(0, j);
    for (int m = j; m >= 1; --m) e[m] += e[m - 1] * x;
  }
  return e;
}

int exponent(const BigInt& x) { return static_cast<int>(x.get_si()); }

}  // namespace

// -- recursively defined q-analogues ----------------------------------------

LaurentPoly qmotzkin_prime(int n) {
  require(n >= 0, "Mot'_n needs n >= 0");
  std::vector<LaurentPoly> m{LaurentPoly(1)};
  for (int k = 1; k <= n; ++k) {
    LaurentPoly v = mahonian_catalan(k + 1);
    for (int i = 0; i < k; ++i) v -= (q_binomial(k, i) * m[i]).shift(i);
    m.push_back(v.shift(-k));
  }
  return m[n];
}

namespace {

// Column r of the triangle recursions: X_{(n,r)} for n = r..top, where
// X_{(n,r)} = cat(n, s) - sum_{i<s} q^{c(n)(s-i)} [n choose s-i] X_{(i+r, r)}.
std::vector<LaurentPoly> triangle_column(int r, int top, bool riordan) {
  std::vector<LaurentPoly> col;  // col[k] = X_{(r+k, r)}
  for (int n = r; n <= top; ++n) {
    const int s = n - r;
    LaurentPoly v = riordan ? q_catalan_triangle(2 * n - s, s) : q_catalan_triangle(2 * n + 1 - s, s);
    const int c = riordan ? n - 1 : n;
    for (int i = 0; i < s; ++i) v -= (q_binomial(n, s - i) * col[i]).shift(c * (s - i));
    col.push_back(v);
  }
  return col;
}

std::vector<std::vector<LaurentPoly>> triangle_matrix(int size, bool riordan) {
  require(size >= 0, "matrix size must be >= 0");
  std::vector<std::vector<LaurentPoly>> m(size, std::vector<LaurentPoly>(size));
  for (int r = 0; r < size; ++r) {
    const auto col = triangle_column(r, size - 1, riordan);
    for (int n = r; n < size; ++n) m[n][r] = col[n - r];
  }
  return m;
}

}  // namespace

LaurentPoly qmotzkin_tri_prime(int n, int r) {
  require(n >= 0 && r >= 0, "Mot'_{(n,r)} needs n, r >= 0");
  if (r > n) return {};
  return triangle_column(r, n, false).back();
}

LaurentPoly qriordan_tri_prime(int n, int r) {
  require(n >= 0 && r >= 0, "Rior'_{(n,r)} needs n, r >= 0");
  if (r > n) return {};
  return triangle_column(r, n, true).back();
}

std::vector<std::vector<LaurentPoly>> qmotzkin_prime_matrix(int size) { return triangle_matrix(size, false); }
std::vector<std::vector<LaurentPoly>> qriordan_prime_matrix(int size) { return triangle_matrix(size, true); }

// -- (q,t) Catalan numbers -----------------------------------------------------

BiLaurentPoly qt_catalan_tri_prime(int n, int s) {
  require(n >= 0 && s >= 0 && s <= n, "Cat'_{(2n-s+1,s)} needs 0 <= s <= n");
  const auto e = elementary_qt(n);
  BiLaurentPoly out;
  for (int k = 0; 2 * k <= s; ++k) {
    const BigInt c = catalan_triangle(n - s + k, k);
    if (c != 0) out += e[s - 2 * k] * BiLaurentPoly::monomial(0, 0, c);
  }
  return out;
}

BiLaurentPoly qt_catalan_prime(int n) {
  require(n >= 0, "Cat'_n needs n >= 0");
  if (n == 0) return 1;
  return qt_catalan_tri_prime(n - 1, n - 1);
}

BiLaurentPoly qt_catalan_tri_prime_bruteforce(int n, int s) {
  require(n >= 0 && s >= 0 && s <= n, "Cat'_{(2n-s+1,s)} needs 0 <= s <= n");
  require(n < 30, "rank too large for subset enumeration");
  check_cap(std::uint64_t{1} << n, "subsets");
  BiLaurentPoly out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > s || (s - size) % 2 != 0) continue;
    BiLaurentPoly prod = 1;
    for (int j = 1; j <= n; ++j)
      if (mask >> (j - 1) & 1) prod *= BiLaurentPoly::monomial(j, 0) + BiLaurentPoly::monomial(0, j);
    const int k = (s - size) / 2;
    out += prod * BiLaurentPoly::monomial(0, 0, catalan_triangle(n - s + k, k));
  }
  return out;
}

QtMinusOneDivision divide_by_qt_minus_one(const BiLaurentPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (e.first < 0 || e.second < 0) throw ValidationError("(qt-1) division needs a polynomial");
  // Along each diagonal a - b = d the coefficient at (a,b) of (qt-1) Q is
  // Q_{(a-1,b-1)} - Q_{(a,b)}; eliminate from the top of every diagonal.
  std::map<BiLaurentPoly::Exp, BigInt> rem(p.terms().begin(), p.terms().end());
  QtMinusOneDivision out;
  BiLaurentPoly::Terms quo;
  while (true) {
    auto it = std::find_if(rem.rbegin(), rem.rend(), [](const auto& kv) {
      return kv.second != 0 && kv.first.first >= 1 && kv.first.second >= 1;
    });
    if (it == rem.rend()) break;
    const auto [a, b] = it->first;
    const BigInt c = it->second;
    rem.erase(std::next(it).base());
    quo[{a - 1, b - 1}] += c;
    rem[{a - 1, b - 1}] += c;
  }
  BiLaurentPoly::Terms r;
  for (const auto& [e, c] : rem)
    if (c != 0) r[e] = c;
  out.quotient = BiLaurentPoly::from_terms(quo);
  out.remainder = BiLaurentPoly::from_terms(r);
  return out;
}

// -- Cigler's q-Motzkin numbers -------------------------------------------------

namespace {

std::vector<LaurentPoly> cigler_sequence(int top) {
  std::vector<LaurentPoly> m{LaurentPoly(1)};
  for (int n = 0; n < top; ++n) {
    LaurentPoly v = m[n];
    for (int k = 0; k < n; ++k) v += (m[k] * m[n - k - 1]).shift(k + 1);
    m.push_back(v);
  }
  return m;
}

}  // namespace

LaurentPoly cigler_motzkin(int n) {
  require(n >= 0, "Motzkin index must be >= 0");
  return cigler_sequence(n)[n];
}

int tunnel_length(const std::string& w) {
  std::vector<int> open;
  int total = 0;
  for (int j = 0; j < static_cast<int>(w.size()); ++j) {
    if (w[j] == 'U') {
      open.push_back(j);
    } else if (w[j] == 'D') {
      if (open.empty()) throw ValidationError("not a Motzkin word: " + w);
      total += j - open.back();
      open.pop_back();
    } else if (w[j] != 'H') {
      throw ValidationError("Motzkin words use U, H, D: " + w);
    }
  }
  if (!open.empty()) throw ValidationError("not a Motzkin word: " + w);
  return total;
}

LaurentPoly tunnel_generating(int n) {
  LaurentPoly::Terms t;
  for (const auto& w : enumerate_motzkin(n, 0)) t[tunnel_length(w)] += 1;
  return LaurentPoly::from_terms(t);
}

LaurentPoly cigler_motzkin_hankel(int size, int shift) {
  require(size >= 0 && shift >= 0, "Hankel size and shift must be >= 0");
  if (size == 0) return 1;
  const auto m = cigler_sequence(2 * size - 2 + shift);
  return det_berkowitz(hankel<LaurentPoly>(size, [&](int k) { return m[k]; }, shift));
}

int cigler_kappa(int n) {
  static constexpr int k[6] = {1, 1, 0, -1, -1, 0};
  return k[((n % 6) + 6) % 6];
}

LaurentPoly catcr_hankel(int size, int shift) {
  require(size >= 0 && shift >= 0, "Hankel size and shift must be >= 0");
  if (size == 0) return 1;
  std::vector<LaurentPoly> c;
  for (int k = 0; k <= 2 * size - 2 + shift; ++k) c.push_back(carlitz_riordan(k));
  return det_berkowitz(hankel<LaurentPoly>(size, [&](int k) { return c[k]; }, shift));
}

LaurentPoly catcr_hankel_lgv(int size, int shift) {
  require(size >= 0 && shift >= 0, "Hankel size and shift must be >= 0");
  if (size == 0) return 1;
  // Translate by size - 1 so every source (-i,-i) has nonnegative coordinates.
  const int off = size - 1, top = off + shift + size - 1;
  auto g = catalan_graph<LaurentPoly>(top, top, [](int x, int y, char step) {
    return step == 'N' ? LaurentPoly::monomial(x - y - 1) : LaurentPoly(1);
  });
  std::vector<int> src, dst;
  for (int i = 0; i < size; ++i) {
    src.push_back(g.id(off - i, off - i));
    dst.push_back(g.id(off + shift + i, off + shift + i));
  }
  return signed_sum(lgv_enumerate(g.dag, src, dst));
}

// -- reports ----------------------------------------------------------------------

std::string status_str(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::verified: return "verified";
    case IdentityStatus::failed: return "failed";
    case IdentityStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

nlohmann::ordered_json report_object(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["range"] = r.range;
  j["status"] = status_str(r.status);
  j["instances"] = r.instances;
  j["conjecture"] = r.conjecture;
  if (r.counterexample) {
    j["counterexample"] = {{"params", r.counterexample->params},
                           {"lhs", r.counterexample->lhs},
                           {"rhs", r.counterexample->rhs}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string IdentityReport::to_json() const { return report_object(*this).dump(); }

std::string reports_json(const std::vector<IdentityReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_object(r));
  return arr.dump();
}

std::string reports_table(const std::vector<IdentityReport>& reports) {
  std::size_t w_name = 4, w_range = 5;
  for (const auto& r : reports) {
    w_name = std::max(w_name, r.name.size());
    w_range = std::max(w_range, r.range.size());
  }
  std::ostringstream os;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    os << a << std::string(w_name - a.size() + 2, ' ') << b << std::string(w_range - b.size() + 2, ' ') << c
       << std::string(10 - std::min<std::size_t>(c.size(), 9), ' ') << d << '\n';
  };
  row("name", "range", "status", "instances");
  for (const auto& r : reports) {
    row(r.name, r.range, status_str(r.status), std::to_string(r.instances));
    if (r.counterexample)
      os << "    counterexample " << r.counterexample->params << ": " << r.counterexample->lhs
         << " != " << r.counterexample->rhs << '\n';
    if (!r.note.empty()) os << "    note: " << r.note << '\n';
  }
  return os.str();
}

std::string reports_csv(const std::vector<IdentityReport>& reports) {
  std::string out = "name,range,status,instances,conjecture,params,lhs,rhs,note\n";
  for (const auto& r : reports) {
    const Counterexample ce = r.counterexample.value_or(Counterexample{});
    out += csv_field(r.name) + "," + csv_field(r.range) + "," + status_str(r.status) + "," +
           std::to_string(r.instances) + "," + (r.conjecture ? "true" : "false") + "," + csv_field(ce.params) +
           "," + csv_field(ce.lhs) + "," + csv_field(ce.rhs) + "," + csv_field(r.note) + "\n";
  }
  return out;
}

bool identities_hold(const std::vector<IdentityReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const IdentityReport& r) {
    return !r.conjecture && r.status == IdentityStatus::failed;
  });
}

bool all_verified(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.status == IdentityStatus::verified; });
}

// -- runner -------------------------------------------------------------------------

namespace {

struct Evaluated {
  InstanceOutcome outcome;
  bool capped = false;
  std::string cap_message;
};

Evaluated evaluate(const IdentityInstance& inst) {
  Evaluated ev;
  try {
    ev.outcome = inst.eval();
  } catch (const ResourceCapError& e) {
    ev.capped = true;
    ev.cap_message = e.what();
  } catch (const std::exception& e) {
    ev.outcome = {false, "exception", e.what()};
  }
  return ev;
}

IdentityReport run_instances(const std::string& name, const std::string& range, bool conjecture,
                             const std::string& note, const std::vector<IdentityInstance>& insts,
                             unsigned threads) {
  std::vector<Evaluated> results(insts.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, insts.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < insts.size(); ++i) results[i] = evaluate(insts[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < insts.size();) results[i] = evaluate(insts[i]);
      });
    for (auto& th : pool) th.join();
  }

  IdentityReport rep;
  rep.name = name;
  rep.range = range;
  rep.conjecture = conjecture;
  rep.note = note;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const auto& ev = results[i];
    if (ev.capped) {
      // Instances are in increasing size, so the later ones would be capped too.
      rep.status = IdentityStatus::skipped;
      rep.note = (note.empty() ? "" : note + "; ") + "stopped at " + insts[i].params + ": " + ev.cap_message;
      return rep;
    }
    ++rep.instances;
    if (!ev.outcome.ok) {
      rep.status = IdentityStatus::failed;
      rep.counterexample = Counterexample{insts[i].params, ev.outcome.lhs, ev.outcome.rhs};
      if (conjecture) rep.note = (note.empty() ? "" : note + "; ") + "counterexample found: the printed statement fails";
      return rep;
    }
  }
  if (conjecture) rep.note = (note.empty() ? "" : note + "; ") + "verified up to the bound, not proved";
  return rep;
}

// Serializations used for the two sides.
std::string side(const BigInt& x) { return x.get_str(); }
std::string side(const LaurentPoly& p) { return to_json_string(p); }
std::string side(const BiLaurentPoly& p) { return to_json_string(p); }
std::string side(bool b) { return b ? "true" : "false"; }
std::string side(const std::string& s) { return s; }

template <class L, class R>
IdentityInstance instance(std::string params, L lhs, R rhs) {
  return {std::move(params), [lhs, rhs] {
            const auto a = lhs();
            const auto b = rhs();
            return InstanceOutcome{a == b, side(a), side(b)};
          }};
}

std::string p1(const char* a, int x) { return std::string(a) + "=" + std::to_string(x); }
std::string p2(const char* a, int x, const char* b, int y) { return p1(a, x) + "," + p1(b, y); }

// -- instance families ---------------------------------------------------------

// 0 <= s <= n <= bound, ordered by n then s.
template <class F>
std::vector<IdentityInstance> triangle_instances(int lo, int bound, F make) {
  std::vector<IdentityInstance> v;
  for (int n = lo; n <= bound; ++n)
    for (int s = 0; s <= n; ++s) v.push_back(make(n, s));
  return v;
}

template <class F>
std::vector<IdentityInstance> line_instances(int lo, int bound, F make) {
  std::vector<IdentityInstance> v;
  for (int n = lo; n <= bound; ++n) v.push_back(make(n));
  return v;
}

IdentityInstance touchard_instance(int n, int s) {
  return {p2("n", n, "s", s), [n, s] {
            const BigInt lhs = catalan_triangle(2 * n - s + 1, s);
            BigInt rhs = 0;
            for (int i = 0; 2 * i <= s; ++i)
              rhs += binomial(n, s - 2 * i) * pow2(s - 2 * i) * catalan_triangle(n - s + i, i);
            BigInt dim = lhs;
            if (n >= 1) {
              const CartanType C(Family::C, n);
              dim = dim_weyl(C, tfw(C, s));
            }
            return InstanceOutcome{lhs == rhs && lhs == dim, side(lhs), side(rhs) + " (dim " + side(dim) + ")"};
          }};
}

IdentityInstance near_spin_instance(int n, int s) {
  return {p2("n", n, "s", s), [n, s] {
            const CartanType B(Family::B, n);
            const LaurentPoly lhs = nps_weyl(B, add(fundamental_weight(B, n), tfw(B, s)));
            LaurentPoly num = q_catalan_triangle(2 * n + 1 - s, s);
            for (int k = 1; k <= n + 1; ++k) num *= LaurentPoly::monomial(k) + 1;
            const auto rhs = num.try_div(LaurentPoly::monomial(n + 1 - s) + 1);
            if (!rhs) return InstanceOutcome{false, side(lhs), "division by q^(n+1-s)+1 is not exact"};
            return InstanceOutcome{lhs == *rhs, side(lhs), side(*rhs)};
          }};
}

IdentityInstance branching_instance(const std::string& kind, int n, int k) {
  const std::string params = p2("n", n, "k", k);
  if (kind == "likely-stanley") {
    return instance(
        params,
        [n, k] {
          const CartanType A(Family::A, n);
          return ps_weyl(A, add(fundamental_weight(A, n), fundamental_weight(A, k)));
        },
        [n, k] {
          const int e = exponent(binomial(n, 2) + binomial(k, 2));
          return (q_int(n - k + 1) * q_binomial(n + 2, k)).shift(e);
        });
  }
  if (kind == "column-A") {
    return instance(
        params,
        [n, k] {
          if (k == 0) return LaurentPoly(1);
          const CartanType A(Family::A, n - 1);
          return ps_weyl(A, fundamental_weight(A, k));
        },
        [n, k] { return q_binomial(n, k).shift(exponent(binomial(k, 2))); });
  }
  if (kind == "q-binomial-B") {
    return instance(
        params, [n, k] { const CartanType B(Family::B, n); return nps_weyl(B, tfw(B, k)); },
        [n, k] { return q_binomial(2 * n + 1, k); });
  }
  if (kind == "spin-B") {
    return {params, [n] {
              const CartanType B(Family::B, n);
              const LaurentPoly lhs = nps_weyl(B, fundamental_weight(B, n));
              LaurentPoly prod = 1;
              for (int j = 1; j <= n; ++j) prod *= LaurentPoly::monomial(j) + 1;
              LaurentPoly::Terms count;
              for (const auto& nu : all_strict_partitions(n)) {
                int size = 0;
                for (int x : nu) size += x;
                count[size] += 1;
              }
              const LaurentPoly strict = LaurentPoly::from_terms(count);
              return InstanceOutcome{lhs == prod && prod == strict, side(lhs),
                                     side(prod) + " (strict partitions " + side(strict) + ")"};
            }};
  }
  if (kind == "branching-B-D") {
    return {params, [n, k] {
              const auto c = branching_nps_B_to_D(k, n);
              return InstanceOutcome{c.holds(), side(c.lhs), side(c.rhs)};
            }};
  }
  throw ValidationError("unknown branching kind: " + kind);
}

std::vector<IdentityInstance> branching_instances(const std::string& kind, int bound) {
  std::vector<IdentityInstance> v;
  for (int n = 1; n <= bound; ++n) {
    if (kind == "likely-stanley") {
      for (int k = 0; k <= n; ++k) v.push_back(branching_instance(kind, n, k));
    } else if (kind == "column-A") {
      if (n >= 2)
        for (int k = 0; k < n; ++k) v.push_back(branching_instance(kind, n, k));
    } else if (kind == "q-binomial-B") {
      for (int k = 1; k <= n; ++k) v.push_back(branching_instance(kind, n, k));
    } else if (kind == "spin-B") {
      v.push_back(branching_instance(kind, n, n));
    } else if (kind == "branching-B-D") {
      if (n >= 2)
        for (int k = 1; k <= n; ++k) v.push_back(branching_instance(kind, n, k));
    } else {
      throw ValidationError("unknown branching kind: " + kind);
    }
  }
  return v;
}

IdentityInstance appendix_instance(const std::string& which, int n, int r) {
  if (which == "catcr0" || which == "catcr1") {
    const bool one = which == "catcr1";
    return instance(
        p1("n", n), [n, one] { return catcr_hankel(n + 1, one ? 1 : 0); },
        [n, one] { return LaurentPoly::monomial(n * (n + 1) * (4 * n + (one ? 5 : -1)) / 6); });
  }
  if (which == "catcr-lgv") {
    return instance(
        p2("n", n, "r", r), [n, r] { return catcr_hankel(n, r); }, [n, r] { return catcr_hankel_lgv(n, r); });
  }
  if (which == "cigler0") {
    return instance(
        p1("n", n), [n] { return cigler_motzkin_hankel(n, 0); },
        [n] { return LaurentPoly::monomial(n * (n - 1) * (2 * n - 1) / 6); });
  }
  if (which == "cigler1") {
    // kappa_n q^{binom(n,2)} q^{n(n-1)(2n-1)/6}
    return instance(
        p1("n", n), [n] { return cigler_motzkin_hankel(n, 1); },
        [n] {
          return LaurentPoly::monomial(n * (n - 1) / 2 + n * (n - 1) * (2 * n - 1) / 6, cigler_kappa(n));
        });
  }
  if (which == "tunnel") {
    return instance(p1("n", n), [n] { return cigler_motzkin(n); }, [n] { return tunnel_generating(n); });
  }
  if (which == "odd-shift") {
    return instance(
        p2("n", n, "r", r), [n, r] { return cigler_motzkin_hankel(n, r).has_negative_coeff(); },
        [] { return true; });
  }
  throw ValidationError("unknown appendix determinant: " + which);
}

// Laurent polynomial in Z_{>=0}[q]: no negative exponent or coefficient.
bool in_nonneg_poly(const LaurentPoly& p) {
  return !p.has_negative_coeff() && (p.is_zero() || p.min_exp() >= 0);
}
bool in_nonneg_poly(const BiLaurentPoly& p) {
  if (p.has_negative_coeff()) return false;
  for (const auto& [e, c] : p.terms())
    if (e.first < 0 || e.second < 0) return false;
  return true;
}

// f_n of the 2-shifted conjecture, summed from k = 0 when 3 | n.
LaurentPoly factored_f(int n) {
  LaurentPoly f;
  if (n % 3 == 0) {
    for (int k = 0; k <= n; ++k)
      if (k % 3 != 1) f += LaurentPoly::monomial(k);
  } else {
    for (int k = 0; k <= n / 3; ++k) f += LaurentPoly::monomial(3 * k);
    f *= LaurentPoly::monomial(1) + 1;
  }
  return f;
}

LaurentPoly t_poly(int n) {
  LaurentPoly t;
  for (int k = 0; k <= n / 3; ++k) t += LaurentPoly::monomial(3 * k);
  return t;
}

std::string normalize_name(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

std::vector<IdentityInstance> conjecture_instances(const std::string& name, int bound) {
  std::vector<IdentityInstance> v;
  if (name == "motzkin-pos") {
    for (int n = 0; n <= bound; ++n)
      v.push_back(instance(p1("n", n), [n] { return in_nonneg_poly(qmotzkin_prime(n)); }, [] { return true; }));
  } else if (name == "motzkin-tri-pos" || name == "riordan-tri-pos") {
    const bool rior = name == "riordan-tri-pos";
    for (int n = 0; n <= bound; ++n)
      v.push_back({p1("n", n), [n, rior] {
                     const auto m = triangle_matrix(n + 1, rior);
                     for (int r = 0; r <= n; ++r)
                       if (!in_nonneg_poly(m[n][r]))
                         return InstanceOutcome{false, "r=" + std::to_string(r) + ": " + side(m[n][r]),
                                                "nonnegative polynomial"};
                     return InstanceOutcome{true, "row nonnegative", "nonnegative polynomial"};
                   }});
  } else if (name == "qt-divisibility") {
    for (int n = 1; n <= bound; ++n)
      v.push_back({p1("n", n), [n] {
                     const auto d = divide_by_qt_minus_one(stump_qt_catalan(n) - qt_catalan_prime(n));
                     if (!d.exact()) return InstanceOutcome{false, "remainder " + side(d.remainder), "0"};
                     if (!in_nonneg_poly(d.quotient))
                       return InstanceOutcome{false, "quotient " + side(d.quotient), "nonnegative quotient"};
                     return InstanceOutcome{true, "quotient " + side(d.quotient), "nonnegative quotient"};
                   }});
  } else if (name == "shifted-motzkin-hankel") {
    // det [M_{i+j+2k}]_{0..n-1} in Z_{>=0}[q] for 1 <= k <= 3, 1 <= n <= bound.
    for (int n = 1; n <= bound; ++n)
      for (int k = 1; k <= 3; ++k)
        v.push_back(instance(
            p2("n", n, "k", k), [n, k] { return in_nonneg_poly(cigler_motzkin_hankel(n, 2 * k)); },
            [] { return true; }));
  } else if (name == "factored-motzkin-2shifted") {
    for (int n = 1; n <= bound; ++n)
      v.push_back({p1("n", n), [n] {
                     const LaurentPoly d = cigler_motzkin_hankel(n, 2);
                     const LaurentPoly f = factored_f(n);
                     const bool ok = !d.is_zero() && d.min_exp() >= 0 && d.shift(-d.min_exp()) == f;
                     return InstanceOutcome{ok, side(d), "q^c " + side(f)};
                   }});
  } else if (name == "factored-motzkin-2shifted-dup" || name == "factored-motzkin-2shifted-dup-divisibility") {
    // Sign (-1)^floor(n/3), a nonnegative g_n, and g_n = (q+1)^2 t_n^2 for
    // n = 1 mod 3; the divisibility clause for n = 2 mod 3 is scanned apart.
    const bool divisibility = name == "factored-motzkin-2shifted-dup-divisibility";
    for (int n = divisibility ? 2 : 1; n <= bound; n += divisibility ? 3 : 1)
      v.push_back({p1("n", n), [n, divisibility] {
                     const LaurentPoly d = cigler_motzkin_hankel(n, 3);
                     const LaurentPoly t = t_poly(n);
                     if (divisibility) {
                       const LaurentPoly g = d.shift(-d.min_exp());
                       return InstanceOutcome{g.try_div(t).has_value(), "g_n = " + side(g), "divisible by t_n = " + side(t)};
                     }
                     const int sign = (n / 3) % 2 == 0 ? 1 : -1;
                     const std::string want = "(-1)^floor(n/3) q^c g_n, g_n >= 0";
                     if (d.is_zero() || d.min_exp() < 0) return InstanceOutcome{false, side(d), want};
                     const LaurentPoly g = (sign > 0 ? d : -d).shift(-d.min_exp());
                     if (!in_nonneg_poly(g)) return InstanceOutcome{false, side(d), want};
                     if (n % 3 == 1) {
                       const LaurentPoly h = (LaurentPoly::monomial(1) + 1) * t;
                       return InstanceOutcome{g == h * h, side(g), "(q+1)^2 t_n^2 = " + side(h * h)};
                     }
                     return InstanceOutcome{true, side(g), want};
                   }});
  } else {
    throw ValidationError("unknown conjecture scan: " + name);
  }
  return v;
}

std::string upto(const char* var, int bound) { return std::string(var) + "<=" + std::to_string(bound); }

std::vector<IdentityEntry> build_registry() {
  std::vector<IdentityEntry> reg;
  auto put = [&](IdentityEntry e) { reg.push_back(std::move(e)); };
  auto tri_range = [](int b) { return "0<=s<=n<=" + std::to_string(b); };

  put({"touchard", "Cat_{(2n-s+1,s)} = sum_i binom(n,s-2i) 2^{s-2i} Cat_{(n-s+i,i)} = dim V(omega_s) (C_n)", 12, 14,
       false, "",
       [](int b) { return triangle_instances(0, b, touchard_instance); }, tri_range});
  put({"touchard-classical", "Cat_{n+1} = sum_k binom(n,2k) 2^{n-2k} Cat_k", 12, 20, false, "",
       [](int b) {
         return line_instances(0, b, [](int n) {
           return instance(
               p1("n", n), [n] { return catalan(n + 1); },
               [n] {
                 BigInt s = 0;
                 for (int k = 0; 2 * k <= n; ++k) s += binomial(n, 2 * k) * pow2(n - 2 * k) * catalan(k);
                 return s;
               });
         });
       },
       [](int b) { return upto("n", b); }});
  put({"catalan-from-motzkin", "Cat_{n+1} = sum_i Mot_i binom(n,i)", 15, 25, false, "",
       [](int b) {
         return line_instances(0, b, [](int n) {
           return instance(
               p1("n", n), [n] { return catalan(n + 1); },
               [n] {
                 BigInt s = 0;
                 for (int i = 0; i <= n; ++i) s += motzkin(i) * binomial(n, i);
                 return s;
               });
         });
       },
       [](int b) { return upto("n", b); }});
  put({"catalan-from-riordan", "Cat_n = sum_i Rior_i binom(n,i)", 15, 25, false, "",
       [](int b) {
         return line_instances(0, b, [](int n) {
           return instance(
               p1("n", n), [n] { return catalan(n); },
               [n] {
                 BigInt s = 0;
                 for (int i = 0; i <= n; ++i) s += riordan(i) * binomial(n, i);
                 return s;
               });
         });
       },
       [](int b) { return upto("n", b); }});
  put({"tri-catalan-from-motzkin", "Cat_{(2n+1-s,s)} = sum_i Mot_{(i+n-s,n-s)} binom(n,s-i)", 12, 16, false, "",
       [](int b) {
         return triangle_instances(0, b, [](int n, int s) {
           return instance(
               p2("n", n, "s", s), [n, s] { return catalan_triangle(2 * n + 1 - s, s); },
               [n, s] {
                 BigInt t = 0;
                 for (int i = 0; i <= s; ++i) t += motzkin_triangle(i + n - s, n - s) * binomial(n, s - i);
                 return t;
               });
         });
       },
       tri_range});
  put({"tri-catalan-from-riordan", "Cat_{(2n-s,s)} = sum_i Rior_{(i+n-s,n-s)} binom(n,s-i)", 12, 16, false, "",
       [](int b) {
         return triangle_instances(0, b, [](int n, int s) {
           return instance(
               p2("n", n, "s", s), [n, s] { return catalan_triangle(2 * n - s, s); },
               [n, s] {
                 BigInt t = 0;
                 for (int i = 0; i <= s; ++i) t += riordan_triangle(i + n - s, n - s) * binomial(n, s - i);
                 return t;
               });
         });
       },
       tri_range});
  put({"column-dim-B", "sum_k 2^k binom(n,k) binom(n-k,floor((s-k)/2)) = binom(2n+1,s) = dim V(tfw_s) (B_n)", 8,
       12, false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 1; n <= b; ++n)
           for (int s = 1; s <= n; ++s)
             v.push_back({p2("n", n, "s", s), [n, s] {
                            BigInt sum = 0;
                            for (int k = 0; k <= s; ++k)
                              sum += pow2(k) * binomial(n, k) * gbinom(n - k, (s - k) / 2);
                            const CartanType B(Family::B, n);
                            const BigInt dim = dim_weyl(B, tfw(B, s));
                            const BigInt bin = binomial(2 * n + 1, s);
                            return InstanceOutcome{sum == bin && bin == dim, side(sum),
                                                   side(bin) + " (dim " + side(dim) + ")"};
                          }});
         return v;
       },
       [](int b) { return "1<=s<=n<=" + std::to_string(b); }});
  put({"column-dim-D",
       "sum_{k = s mod 2} 2^{k-d(k,n)} binom(n,n-k) binom(n-k-d(n,s),(s-k)/2) = binom(2n-d(s,n),s) = dim V(tfw_s) (D_n)",
       8, 12, false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 2; n <= b; ++n)
           for (int s = 1; s <= n; ++s)
             v.push_back({p2("n", n, "s", s), [n, s] {
                            BigInt sum = 0;
                            const int dns = n == s ? 1 : 0;
                            for (int k = s % 2; k <= s; k += 2)
                              sum += pow2(k - (k == n ? 1 : 0)) * binomial(n, n - k) * gbinom(n - k - dns, (s - k) / 2);
                            const CartanType D(Family::D, n);
                            const BigInt dim = dim_weyl(D, tfw(D, s));
                            const BigInt bin = binomial(2 * n - dns, s);
                            return InstanceOutcome{sum == bin && bin == dim, side(sum),
                                                   side(bin) + " (dim " + side(dim) + ")"};
                          }});
         return v;
       },
       [](int b) { return "1<=s<=n<=" + std::to_string(b) + ", n>=2"; }});
  put({"near-spin-dim", "dim V(omega_n + tfw_s) = 2^n Cat_{(2n+1-s,s)} (B_n), = 2^{n-1} Cat_{(2n-s,s)} (D_n)", 8, 10,
       false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 2; n <= b; ++n)
           for (int s = 0; s <= n; ++s)
             v.push_back({p2("n", n, "s", s), [n, s] {
                            const CartanType B(Family::B, n), D(Family::D, n);
                            const BigInt db = dim_weyl(B, add(fundamental_weight(B, n), tfw(B, s)));
                            const BigInt dd = dim_weyl(D, add(fundamental_weight(D, n), tfw(D, s)));
                            const BigInt cb = pow2(n) * catalan_triangle(2 * n + 1 - s, s);
                            const BigInt cd = pow2(n - 1) * catalan_triangle(2 * n - s, s);
                            return InstanceOutcome{db == cb && dd == cd, side(db) + "," + side(dd),
                                                   side(cb) + "," + side(cd)};
                          }});
         return v;
       },
       [](int b) { return "0<=s<=n<=" + std::to_string(b) + ", n>=2"; }});
  put({"near-spin-nps", "nps(omega_n + tfw_s) = Cat_{(2n+1-s,s)}(q) / (q^{n+1-s}+1) prod_{k<=n+1} (q^k+1) (B_n)", 5,
       7, false, "",
       [](int b) { return triangle_instances(1, b, near_spin_instance); },
       [](int b) { return "0<=s<=n<=" + std::to_string(b) + ", n>=1"; }});
  put({"catalan-q2", "C_{n+1}(q) prod_{k<=n} (1+q^k) = nps(3 omega_n) (B_n)", 6, 8, false, "",
       [](int b) {
         return line_instances(1, b, [](int n) {
           return instance(
               p1("n", n),
               [n] {
                 LaurentPoly p = mahonian_catalan(n + 1);
                 for (int k = 1; k <= n; ++k) p *= LaurentPoly::monomial(k) + 1;
                 return p;
               },
               [n] {
                 const CartanType B(Family::B, n);
                 return nps_weyl(B, scale(fundamental_weight(B, n), 3));
               });
         });
       },
       [](int b) { return "1<=n<=" + std::to_string(b); }});
  put({"mahonian-from-qt-prime", "q^{binom(n,2)} Cat'_n(q,q^{-1}) = Cat_n(q) (Mahonian)", 10, 14, false, "",
       [](int b) {
         return line_instances(1, b, [](int n) {
           return instance(
               p1("n", n), [n] { return qt_catalan_prime(n).substitute_t_qinv().shift(n * (n - 1) / 2); },
               [n] { return mahonian_catalan(n); });
         });
       },
       [](int b) { return "1<=n<=" + std::to_string(b); }});
  put({"qt-prime-at-one", "Cat'_n(1,1) = Cat_n", 8, 14, false, "",
       [](int b) {
         return line_instances(0, b, [](int n) {
           return instance(p1("n", n), [n] { return qt_catalan_prime(n).at_one(); }, [n] { return catalan(n); });
         });
       },
       [](int b) { return upto("n", b); }});
  put({"column-ps-C", "ps(omega_s) = Cat'_{(2n-s+1,s)}(q,q^{-1}) (C_n)", 5, 7, false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 1; n <= b; ++n)
           for (int s = 0; s <= n; ++s)
             v.push_back(instance(
                 p2("n", n, "s", s),
                 [n, s] {
                   const CartanType C(Family::C, n);
                   return s == 0 ? LaurentPoly(1) : ps_weyl(C, tfw(C, s));
                 },
                 [n, s] { return qt_catalan_tri_prime(n, s).substitute_t_qinv(); }));
         return v;
       },
       [](int b) { return "0<=s<=n<=" + std::to_string(b) + ", n>=1"; }});
  for (const auto& [name, rior] : {std::pair{"motzkin-prime-at-one", false}, std::pair{"riordan-prime-at-one", true}}) {
    const bool r = rior;
    put({name, r ? "Rior'_{(n,k)}(1) = Rior_{(n,k)}" : "Mot'_n(1) = Mot_n and Mot'_{(n,k)}(1) = Mot_{(n,k)}", 10, 14,
         false, "",
         [r](int b) {
           return line_instances(0, b, [r](int n) {
             return IdentityInstance{p1("n", n), [n, r] {
                                       const auto m = triangle_matrix(n + 1, r);
                                       std::string lhs, rhs;
                                       bool ok = true;
                                       for (int k = 0; k <= n; ++k) {
                                         const BigInt a = m[n][k].at_one();
                                         const BigInt e = r ? riordan_triangle(n, k) : motzkin_triangle(n, k);
                                         ok = ok && a == e;
                                         lhs += (k ? "," : "") + a.get_str();
                                         rhs += (k ? "," : "") + e.get_str();
                                       }
                                       if (!r) {
                                         const BigInt a = qmotzkin_prime(n).at_one();
                                         ok = ok && a == motzkin(n);
                                         lhs += ";" + a.get_str();
                                         rhs += ";" + motzkin(n).get_str();
                                       }
                                       return InstanceOutcome{ok, lhs, rhs};
                                     }};
           });
         },
         [](int b) { return upto("n", b); }});
  }
  for (const char* kind : {"likely-stanley", "column-A", "q-binomial-B", "spin-B", "branching-B-D"}) {
    const std::string k = kind;
    put({k, "principal specialization by branching: " + k, 6, 7, false, "",
         [k](int b) { return branching_instances(k, b); }, [](int b) { return "rank<=" + std::to_string(b); }});
  }
  put({"ratio", "Cat_{(2n-i-1,i)}(q) / Cat'_{(2n-i-1,i)}(q) = q^{binom(n,2)-binom(n-i,2)} (q^{n-i}+1)/(q^n+1)", 6, 8,
       false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 2; n <= b; ++n)
           for (int i = 1; i <= n - 1; ++i)
             v.push_back(instance(p2("n", n, "i", i), [n, i] { return ratio_identity_holds(n, i); }, [] { return true; }));
         return v;
       },
       [](int b) { return "1<=i<=n-1, n<=" + std::to_string(b); }});
  put({"double-spin-B", "det BH_{r,n} = dim V(r tfw_n) (B_n) = dim V(2r omega_n) (D_{n+1})", 4, 6, false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 1; n <= b; ++n)
           for (int r = 1; r <= b; ++r)
             v.push_back({p2("r", r, "n", n), [n, r] {
                            const CartanType B(Family::B, n), D(Family::D, n + 1);
                            const BigInt det = spin_rect_hankel(r, n);
                            const BigInt db = dim_weyl(B, scale(tfw(B, n), r));
                            const BigInt d1 = dim_weyl(D, scale(fundamental_weight(D, n), 2 * r));
                            const BigInt d2 = dim_weyl(D, scale(fundamental_weight(D, n + 1), 2 * r));
                            return InstanceOutcome{det == db && db == d1 && d1 == d2, side(det),
                                                   side(db) + "," + side(d1) + "," + side(d2)};
                          }});
         return v;
       },
       [](int b) { return "1<=r,n<=" + std::to_string(b); }});
  put({"even-binomial-D", "det [binom(2(n+i+j),n+i+j)] = 2^r dim V(2r omega_n) (D_n)", 4, 6, false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 2; n <= b; ++n)
           for (int r = 1; r <= b; ++r)
             v.push_back(instance(
                 p2("r", r, "n", n), [n, r] { return even_binomial_hankel(r, n); },
                 [n, r] {
                   const CartanType D(Family::D, n);
                   return BigInt(pow2(r) * dim_weyl(D, scale(fundamental_weight(D, n), 2 * r)));
                 }));
         return v;
       },
       [](int b) { return "1<=r<=" + std::to_string(b) + ", 2<=n<=" + std::to_string(b); }});
  put({"all-spin-rectangles", "dim V(r omega_n) = prod_{i<=j} (r+i+j-1)/(i+j-1) (B_n)", 6, 8, false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 1; n <= b; ++n)
           for (int r = 1; r <= b; ++r)
             v.push_back(instance(
                 p2("r", r, "n", n), [n, r] { return dim_spin_rectangle_B(r, n); },
                 [n, r] {
                   const CartanType B(Family::B, n);
                   return dim_weyl(B, scale(fundamental_weight(B, n), r));
                 }));
         return v;
       },
       [](int b) { return "1<=r,n<=" + std::to_string(b); }});
  put({"no-q-double-spin", "d_+ - q^k d_- has a negative coefficient for every k (r = n = 2)", 0, 0, false, "",
       [](int) {
         std::vector<IdentityInstance> v;
         v.push_back(instance(
             "k in [-40,40]",
             [] {
               const LaurentPoly dp = q_binomial(5, 2) * q_binomial(9, 4), dm = q_binomial(7, 3) * q_binomial(7, 3);
               for (int k = -40; k <= 40; ++k)
                 if (!(dp - dm.shift(k)).has_negative_coeff()) return "k=" + std::to_string(k) + " nonnegative";
               return std::string("negative for all k");
             },
             [] { return std::string("negative for all k"); }));
         return v;
       },
       [](int) { return std::string("r=n=2"); }});
  put({"no-det-tfw-n-1", "dim V(2(omega_3+omega_4)) = 840 != 252 = det [binom(2(4+i+j),3+i+j)] (D_4)", 0, 0, false, "",
       [](int) {
         std::vector<IdentityInstance> v;
         v.push_back(instance(
             "n=4,r=2",
             [] {
               const CartanType D(Family::D, 4);
               const BigInt dim = dim_weyl(D, scale(tfw(D, 3), 2));
               const BigInt d = det(hankel<BigInt>(2, [](int k) { return binomial(2L * (4 + k), 3 + k); }));
               return dim.get_str() + "," + d.get_str();
             },
             [] { return std::string("840,252"); }));
         return v;
       },
       [](int) { return std::string("n=4,r=2"); }});
  for (const char* which : {"catcr0", "catcr1", "cigler0", "cigler1", "tunnel"}) {
    const std::string w = which;
    const bool cr = w.rfind("catcr", 0) == 0;
    put({"appendix-" + w, "Appendix A: " + w, cr ? 5 : 8, cr ? 7 : 11, false,
         w == "tunnel" ? "tunnel length of a matched pair (i,j) counted as j-i" : "",
         [w, cr](int b) { return line_instances(cr ? 0 : 1, b, [w](int n) { return appendix_instance(w, n, 0); }); },
         [cr](int b) { return (cr ? "0<=n<=" : "1<=n<=") + std::to_string(b); }});
  }
  put({"appendix-catcr-lgv", "det [CatCR_{r+i+j}] = sum over non-intersecting Dyck path families of q^area", 3, 4,
       false, "",
       [](int b) {
         std::vector<IdentityInstance> v;
         for (int n = 1; n <= b; ++n)
           for (int r = 0; r <= 2; ++r) v.push_back(appendix_instance("catcr-lgv", n, r));
         return v;
       },
       [](int b) { return "1<=n<=" + std::to_string(b) + ", 0<=r<=2"; }});
  put({"appendix-odd-shift", "det [M_{i+j+5}]_{0..2} has a negative coefficient", 0, 0, false, "",
       [](int) { return std::vector<IdentityInstance>{appendix_instance("odd-shift", 3, 5)}; },
       [](int) { return std::string("n=3,shift=5"); }});

  const std::string dup = "label factored_motzkin_2shifted is printed twice with different statements";
  put({"motzkin-pos", "Mot'_n(q) in Z>=0[q]", 12, 14, true, "", [](int b) { return conjecture_instances("motzkin-pos", b); },
       [](int b) { return upto("n", b); }});
  put({"motzkin-tri-pos", "Mot'_{(n,r)}(q) in Z>=0[q]", 12, 14, true, "",
       [](int b) { return conjecture_instances("motzkin-tri-pos", b); }, [](int b) { return upto("n", b); }});
  put({"riordan-tri-pos", "Rior'_{(n,r)}(q) in Z>=0[q]", 12, 14, true, "",
       [](int b) { return conjecture_instances("riordan-tri-pos", b); }, [](int b) { return upto("n", b); }});
  put({"qt-divisibility", "Cat_n(q,t) - Cat'_n(q,t) = (qt-1) f_n(q,t), f_n in Z>=0[q,t]", 8, 10, true, "",
       [](int b) { return conjecture_instances("qt-divisibility", b); }, [](int b) { return "1<=n<=" + std::to_string(b); }});
  put({"shifted-motzkin-hankel", "det [M_{i+j+2k}]_{0..n-1} in Z>=0[q]", 6, 8, true, "k <= 3",
       [](int b) { return conjecture_instances("shifted-motzkin-hankel", b); },
       [](int b) { return "1<=n<=" + std::to_string(b) + ", 1<=k<=3"; }});
  put({"factored-motzkin-2shifted", "det [M_{i+j+2}]_{0..n-1} = q^{c_n} f_n(q)", 8, 10, true,
       dup + "; f_n for 3 | n sums k = 0..n, k != 1 mod 3",
       [](int b) { return conjecture_instances("factored-motzkin-2shifted", b); },
       [](int b) { return "1<=n<=" + std::to_string(b); }});
  put({"factored-motzkin-2shifted-dup", "det [M_{i+j+3}]_{0..n-1} = (-1)^{floor(n/3)} q^{c_n} g_n(q)", 8, 10, true,
       dup + "; read with g_n in place of the displayed f_n",
       [](int b) { return conjecture_instances("factored-motzkin-2shifted-dup", b); },
       [](int b) { return "1<=n<=" + std::to_string(b); }});
  put({"factored-motzkin-2shifted-dup-divisibility", "t_n divides g_n for n = 2 mod 3", 8, 11, true,
       dup + "; the n = 2 mod 3 divisibility clause of the second statement",
       [](int b) { return conjecture_instances("factored-motzkin-2shifted-dup-divisibility", b); },
       [](int b) { return "n=2 mod 3, n<=" + std::to_string(b); }});
  return reg;
}

}  // namespace

const std::vector<IdentityEntry>& identity_registry() {
  static const std::vector<IdentityEntry> reg = build_registry();
  return reg;
}

const IdentityEntry& find_identity(const std::string& name) {
  const std::string n = normalize_name(name);
  for (const auto& e : identity_registry())
    if (e.name == n) return e;
  throw ValidationError("unknown identity: " + name);
}

IdentityReport run_identity(const IdentityEntry& entry, int bound, unsigned threads) {
  return run_instances(entry.name, entry.range(bound), entry.conjecture, entry.note, entry.instances(bound), threads);
}

std::vector<IdentityReport> run_identities(const std::vector<const IdentityEntry*>& entries,
                                           const std::function<int(const IdentityEntry&)>& bound,
                                           unsigned threads) {
  std::vector<IdentityReport> out;
  for (const auto* e : entries) out.push_back(run_identity(*e, bound(*e), threads));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

// -- the named operations ----------------------------------------------------------

IdentityReport touchard_triangle(int n, int s) {
  require(0 <= s && s <= n, "touchard needs 0 <= s <= n");
  return run_instances("touchard", p2("n", n, "s", s), false, "", {touchard_instance(n, s)}, 1);
}

IdentityReport near_spin_nps(int n, int s) {
  require(n >= 1 && 0 <= s && s <= n, "near-spin needs 0 <= s <= n, n >= 1");
  return run_instances("near-spin-nps", p2("n", n, "s", s), false, "", {near_spin_instance(n, s)}, 1);
}

IdentityReport branching_specializations(const std::string& kind, int bound) {
  require(bound >= 1, "bound must be >= 1");
  const auto& e = find_identity(kind);
  return run_identity(e, bound);
}

IdentityReport appendix_hankels(const std::string& which, int n, int r) {
  require(n >= 0 && r >= 0, "sizes must be >= 0");
  return run_instances("appendix-" + which, p2("n", n, "r", r), false, "", {appendix_instance(which, n, r)}, 1);
}

IdentityReport conjecture_scan(const std::string& name, int bound) {
  require(bound >= 1, "scan bound must be >= 1");
  const auto& e = find_identity(name);
  if (!e.conjecture) throw ValidationError(name + " is not a conjecture scan");
  return run_identity(e, bound);
}

}  // namespace lcat
