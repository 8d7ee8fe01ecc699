#include "lcat/cartan.hpp"

#include <deque>
#include <set>

#include "lcat/errors.hpp"

namespace lcat {

CartanType::CartanType(Family f, int n) : family(f), rank(n) {
  const int min_rank = f == Family::D ? 2 : 1;
  if (n < min_rank) throw ValidationError("rank too small for type " + std::string(1, family_char(f)));
}

std::string CartanType::str() const { return std::string(1, family_char(family)) + std::to_string(rank); }

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw ValidationError("unknown Cartan family: " + s);
}

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Weight zero_weight(const CartanType& ct) { return Weight(ct.coords(), 0); }

Weight add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight scale(const Weight& a, int k) {
  Weight r(a);
  for (auto& x : r) x *= k;
  return r;
}

std::string weight_str(const Weight& w) {
  bool half = false;
  for (int x : w) half = half || (x % 2 != 0);
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(half ? w[i] : w[i] / 2);
  }
  s += ")";
  if (half) s += "/2";
  return s;
}

Weight simple_root(const CartanType& ct, int i) {
  const int n = ct.rank;
  if (i < 1 || i > n) throw ValidationError("simple root index out of range");
  Weight a = zero_weight(ct);
  if (i < n || ct.family == Family::A) {
    a[i - 1] = 2;
    a[i] = -2;
    return a;
  }
  switch (ct.family) {
    case Family::B: a[n - 1] = 2; break;
    case Family::C: a[n - 1] = 4; break;
    case Family::D:
      a[n - 2] = 2;
      a[n - 1] = 2;
      break;
    case Family::A: break;
  }
  return a;
}

int coroot_pairing(const CartanType& ct, int i, const Weight& w) {
  const int n = ct.rank;
  if (i < n || ct.family == Family::A) return (w[i - 1] - w[i]) / 2;
  switch (ct.family) {
    case Family::B: return w[n - 1];
    case Family::C: return w[n - 1] / 2;
    case Family::D: return (w[n - 2] + w[n - 1]) / 2;
    case Family::A: break;
  }
  return 0;
}

Weight fundamental_weight(const CartanType& ct, int i) {
  const int n = ct.rank;
  if (i < 0 || i > n) throw ValidationError("fundamental weight index out of range");
  Weight w = zero_weight(ct);
  if (ct.family == Family::B && i == n) {
    for (auto& x : w) x = 1;
  } else if (ct.family == Family::D && i >= n - 1) {
    for (auto& x : w) x = 1;
    if (i == n - 1) w[n - 1] = -1;
  } else {
    for (int j = 0; j < i; ++j) w[j] = 2;
  }
  return w;
}

Weight tfw(const CartanType& ct, int i) {
  if (i < 0 || i > ct.rank) throw ValidationError("tfw index out of range");
  Weight w = zero_weight(ct);
  for (int j = 0; j < i; ++j) w[j] = 2;
  return w;
}

Weight weight_from_fundamental(const CartanType& ct, const std::vector<int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != ct.rank)
    throw ValidationError("expected " + std::to_string(ct.rank) + " fundamental coefficients for " + ct.str());
  Weight w = zero_weight(ct);
  for (int i = 0; i < ct.rank; ++i) {
    if (coeffs[i] < 0) throw ValidationError("fundamental coefficients must be nonnegative");
    w = add(w, scale(fundamental_weight(ct, i + 1), coeffs[i]));
  }
  return w;
}

std::vector<int> fundamental_coefficients(const CartanType& ct, const Weight& w) {
  std::vector<int> c(ct.rank);
  for (int i = 1; i <= ct.rank; ++i) c[i - 1] = coroot_pairing(ct, i, w);
  return c;
}

bool is_dominant(const CartanType& ct, const Weight& w) {
  for (int c : fundamental_coefficients(ct, w))
    if (c < 0) return false;
  if (ct.family == Family::A) return w.back() >= 0;
  return true;
}

void validate_weight(const CartanType& ct, const Weight& w) {
  if (static_cast<int>(w.size()) != ct.coords()) throw ValidationError("weight has the wrong length for " + ct.str());
  int odd = 0;
  for (int x : w) odd += (x % 2 != 0);
  if (odd == 0) return;
  const bool spin_ok = (ct.family == Family::B || ct.family == Family::D) && odd == static_cast<int>(w.size());
  if (!spin_ok) throw ValidationError("weight is not in the weight lattice of " + ct.str());
}

std::vector<int> weight_partition(const Weight& w) {
  std::vector<int> p;
  p.reserve(w.size());
  for (int x : w) {
    if (x % 2 != 0) throw ValidationError("weight " + weight_str(w) + " has half-integral coordinates");
    p.push_back(x / 2);
  }
  return p;
}

Weight weight_from_partition(const CartanType& ct, const std::vector<int>& parts) {
  if (static_cast<int>(parts.size()) > ct.coords()) throw ValidationError("partition has too many parts for " + ct.str());
  Weight w = zero_weight(ct);
  for (std::size_t i = 0; i < parts.size(); ++i) w[i] = 2 * parts[i];
  return w;
}

std::vector<Weight> weyl_orbit(const CartanType& ct, const Weight& w) {
  std::set<Weight> seen{w};
  std::deque<Weight> todo{w};
  while (!todo.empty()) {
    const Weight v = todo.front();
    todo.pop_front();
    for (int i = 1; i <= ct.rank; ++i) {
      const Weight s = sub(v, scale(simple_root(ct, i), coroot_pairing(ct, i, v)));
      if (seen.insert(s).second) todo.push_back(s);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace lcat
