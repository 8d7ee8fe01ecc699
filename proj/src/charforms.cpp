#include "lcat/charforms.hpp"

#include <algorithm>
#include <numeric>

#include "lcat/errors.hpp"
#include "lcat/kingtab.hpp"
#include "lcat/paths.hpp"

namespace lcat {

namespace {

void require_dominant(const CartanType& ct, const Weight& w) {
  validate_weight(ct, w);
  if (!is_dominant(ct, w)) throw ValidationError("weight " + weight_str(w) + " is not dominant for " + ct.str());
}

// 1 - s^e
LaurentPoly one_minus(long e) { return LaurentPoly(1) - LaurentPoly::monomial(static_cast<int>(e)); }

// Doubled rho.
Weight rho2(const CartanType& ct) {
  const int n = ct.rank;
  Weight r(ct.coords());
  for (int k = 0; k < ct.coords(); ++k) {
    switch (ct.family) {
      case Family::A: r[k] = 2 * (n - k); break;
      case Family::B: r[k] = 2 * n - 1 - 2 * k; break;
      case Family::C: r[k] = 2 * n - 2 * k; break;
      case Family::D: r[k] = 2 * n - 2 - 2 * k; break;
    }
  }
  return r;
}

// The specialization point: x_k = q^{nu_k}.
std::vector<int> nu(const CartanType& ct) {
  std::vector<int> v(ct.coords());
  for (int k = 0; k < ct.coords(); ++k) v[k] = ct.family == Family::A ? k : k + 1;
  return v;
}

// Positive roots in epsilon-coordinates.
std::vector<std::vector<int>> positive_roots(const CartanType& ct) {
  const int N = ct.coords();
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      std::vector<int> a(N, 0);
      a[i] = 1;
      a[j] = -1;
      roots.push_back(a);
      if (ct.family != Family::A) {
        a[j] = 1;
        roots.push_back(a);
      }
    }
  if (ct.family == Family::B || ct.family == Family::C)
    for (int i = 0; i < N; ++i) {
      std::vector<int> a(N, 0);
      a[i] = ct.family == Family::B ? 1 : 2;
      roots.push_back(a);
    }
  return roots;
}

long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<long>(a[k]) * b[k];
  return s;
}

// sum over W of sgn(w) s^{<w mu, nu>} for doubled mu, as a determinant.
LaurentPoly alternant(const CartanType& ct, const Weight& mu) {
  const auto v = nu(ct);
  const std::size_t N = mu.size();
  auto build = [&](int sign) {
    return make_matrix<LaurentPoly>(N, [&](int i, int j) {
      const int e = mu[j] * v[i];
      if (ct.family == Family::A) return LaurentPoly::monomial(e);
      return LaurentPoly::monomial(e) + LaurentPoly::monomial(-e, sign);
    });
  };
  switch (ct.family) {
    case Family::A: return det(build(1));
    case Family::B:
    case Family::C: return det(build(-1));
    case Family::D: {
      const LaurentPoly twice = det(build(1)) + det(build(-1));
      LaurentPoly::Terms half;
      for (const auto& [e, c] : twice.terms()) {
        if (c % 2 != 0) throw InternalError("type D alternant has an odd coefficient");
        half[e] = c / 2;
      }
      return LaurentPoly::from_terms(half);
    }
  }
  throw InternalError("unknown family");
}

}  // namespace

// -- DominantWeight -----------------------------------------------------------

DominantWeight DominantWeight::from_fundamental(const CartanType& ct, const std::vector<int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != ct.rank)
    throw ValidationError("expected " + std::to_string(ct.rank) + " fundamental coefficients");
  for (int c : coeffs)
    if (c < 0) throw ValidationError("fundamental coefficients must be nonnegative");
  return {ct, coeffs, weight_from_fundamental(ct, coeffs)};
}

DominantWeight DominantWeight::from_weight(const CartanType& ct, const Weight& w) {
  require_dominant(ct, w);
  return {ct, fundamental_coefficients(ct, w), w};
}

DominantWeight DominantWeight::from_partition(const CartanType& ct, const std::vector<int>& parts) {
  return from_weight(ct, weight_from_partition(ct, parts));
}

bool DominantWeight::integral() const {
  return std::all_of(weight.begin(), weight.end(), [](int x) { return x % 2 == 0; });
}

std::vector<int> DominantWeight::partition() const {
  if (!integral()) throw ValidationError("weight " + weight_str(weight) + " has no partition form");
  auto p = weight_partition(weight);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<int> DominantWeight::conjugate() const { return conjugate_partition(partition()); }

int DominantWeight::ell() const {
  const auto p = partition();
  return p.empty() ? 0 : p.front();
}

int DominantWeight::size() const {
  const auto p = partition();
  return std::accumulate(p.begin(), p.end(), 0);
}

int DominantWeight::n_lambda() const {
  const auto p = partition();
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

std::vector<int> conjugate_partition(const std::vector<int>& lambda) {
  std::vector<int> c;
  for (int k = 1; !lambda.empty() && k <= lambda.front(); ++k)
    c.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [k](int x) { return x >= k; })));
  return c;
}

// -- principal specializations --------------------------------------------------

LaurentPoly ps_weyl_half(const CartanType& ct, const Weight& lambda) {
  require_dominant(ct, lambda);
  if (ct.family == Family::D) return ps_alternant_half(ct, lambda);

  const int N = ct.coords();
  const int n = ct.rank;
  const auto& L = lambda;  // L_i = 2 lambda_i
  LaurentPoly num(1), den(1);
  long prefactor = 0;  // in s
  for (int i = 1; i <= N; ++i) prefactor += static_cast<long>(i - 1) * L[i - 1];
  if (ct.family != Family::A) prefactor -= static_cast<long>(n) * std::accumulate(L.begin(), L.end(), 0L);

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      num *= one_minus(L[i - 1] - L[j - 1] + 2 * (j - i));
      den *= one_minus(2 * (j - i));
    }
  if (ct.family == Family::B) {
    for (int i = 1; i <= n; ++i) {
      num *= one_minus(2L * L[i - 1] + 2 * (2 * n - 2 * i + 1));
      den *= one_minus(2 * (2 * n - 2 * i + 1));
      for (int j = i + 1; j <= n; ++j) {
        num *= one_minus(L[i - 1] + L[j - 1] + 2 * (2 * n - i - j + 1));
        den *= one_minus(2 * (2 * n - i - j + 1));
      }
    }
  } else if (ct.family == Family::C) {
    for (int i = 1; i <= n; ++i) {
      num *= one_minus(2L * L[i - 1] + 4 * (n - i + 1));
      den *= one_minus(4 * (n - i + 1));
      for (int j = i + 1; j <= n; ++j) {
        num *= one_minus(L[i - 1] + L[j - 1] + 2 * (2 * n - i - j + 2));
        den *= one_minus(2 * (2 * n - i - j + 2));
      }
    }
  }
  return num.exact_div(den).shift(static_cast<int>(prefactor));
}

LaurentPoly halve_exponents(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw ValidationError("principal specialization has half-integral exponents");
    t[e / 2] = c;
  }
  return LaurentPoly::from_terms(t);
}

LaurentPoly ps_weyl(const CartanType& ct, const Weight& lambda) { return halve_exponents(ps_weyl_half(ct, lambda)); }

LaurentPoly nps_weyl(const CartanType& ct, const Weight& lambda) {
  return halve_exponents(normalize_valuation(ps_weyl_half(ct, lambda)).second);
}

LaurentPoly ps_alternant_half(const CartanType& ct, const Weight& lambda) {
  require_dominant(ct, lambda);
  const Weight r = rho2(ct);
  return alternant(ct, add(lambda, r)).exact_div(alternant(ct, r));
}

LaurentPoly ps_of_character_half(const CartanType& ct, const Character& ch) {
  const auto v = nu(ct);
  LaurentPoly p;
  for (const auto& [w, m] : ch) p += LaurentPoly::monomial(static_cast<int>(dot(w, v)), m);
  return p;
}

// -- dimensions -----------------------------------------------------------------

BigInt dim_weyl(const CartanType& ct, const Weight& lambda) {
  require_dominant(ct, lambda);
  const Weight r = rho2(ct);
  const Weight lr = add(lambda, r);
  BigInt num = 1, den = 1;
  for (const auto& a : positive_roots(ct)) {
    num *= dot(lr, a);
    den *= dot(r, a);
  }
  if (num % den != 0) throw InternalError("Weyl dimension formula did not divide exactly");
  return num / den;
}

BigInt dim_spin_rectangle_B(int r, int n) {
  if (r < 0 || n < 1) throw ValidationError("need r >= 0 and n >= 1");
  BigInt num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      num *= r + i + j - 1;
      den *= i + j - 1;
    }
  if (num % den != 0) throw InternalError("spin rectangle product did not divide exactly");
  return num / den;
}

BigInt superfactorial(long n) {
  BigInt f = 1;
  for (long i = 1; i <= n; ++i) f *= factorial(i);
  return f;
}

BigInt alternating_superfactorial(long n) {
  BigInt f = 1;
  for (long i = n; i > 0; i -= 2) f *= factorial(i);
  return f;
}

namespace {

BigInt exact_quotient(const mpq_class& q, const char* what) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() != 1) throw InternalError(std::string(what) + " is not an integer");
  return c.get_num();
}

}  // namespace

BigInt dim_spin_rectangle_B_factorials(int r, int n) {
  if (r < 1 || n < 1) throw ValidationError("need r, n >= 1");
  const auto& F = superfactorial;
  const auto& Phi = alternating_superfactorial;
  const mpq_class q(BigInt(Phi(2L * n + r - 1) * Phi(r - 2) * F(n - 1)), BigInt(F(r + n - 1) * Phi(2L * n - 1)));
  return exact_quotient(q, "factorial form of dim V(r omega_n)");
}

BigInt dim_column_D(int s, int n) {
  if (s < 0 || s > n) throw ValidationError("need 0 <= s <= n");
  return binomial(2L * n - (s == n ? 1 : 0), s);
}

BigInt cn_rect_dim_krattenthaler(int r, int n) {
  if (r < 1 || n < 1) throw ValidationError("need r, n >= 1");
  mpq_class q = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) q *= j - i;
  for (int i = 0; i < r; ++i)
    q *= mpq_class(BigInt(factorial(i + r) * factorial(2L * n + 2 + 2L * i)),
                   BigInt(factorial(2L * i) * factorial(n + 1L + i) * factorial(static_cast<long>(n) + i + r + 1)));
  return exact_quotient(q, "Krattenthaler product");
}

BigInt cn_rect_dim_binomial(int r, int n) {
  if (r < 1 || n < 1) throw ValidationError("need r, n >= 1");
  mpq_class q = 1;
  for (int i = 1; i <= r; ++i) {
    q *= mpq_class(i, n + i);
    q *= mpq_class(binomial(2L * n + 2L * r, n + r - i), binomial(2L * n + 2L * r, r - i));
    for (int j = i + 1; j <= r; ++j) q *= mpq_class(i + j, 2 * n + i + j);
  }
  return exact_quotient(q, "binomial product");
}

BigInt cn_rect_dim_factorial(int r, int n) {
  if (r < 1 || n < 1) throw ValidationError("need r, n >= 1");
  const auto& F = superfactorial;
  const auto& Phi = alternating_superfactorial;
  const mpq_class q(BigInt(Phi(2L * r - 1) * Phi(2L * n + 2L * r) * F(n)), BigInt(Phi(2L * n) * F(n + 2L * r)));
  return exact_quotient(q, "F/Phi product");
}

// -- Jacobi-Trudi ----------------------------------------------------------------

JTMode parse_jt_mode(const std::string& s) {
  if (s == "dim" || s == "dimension") return JTMode::dimension;
  if (s == "q") return JTMode::q;
  if (s == "char" || s == "character") return JTMode::character;
  throw ValidationError("unknown mode '" + s + "' (expected dim, q or char)");
}

Matrix<BigInt> jt_matrix_dimension(const std::vector<int>& lambda, int n) {
  const JTLayout lay(lambda, n);
  return make_matrix<BigInt>(lay.ell(), [&](int i, int j) { return catalan_triangle(lay.a(i, j), lay.b(i, j)); }, 1);
}

namespace {

// ps or nps of omega_b in type C_m; 0 outside 0 <= b <= m.
LaurentPoly fundamental_ps_C(int m, int b, bool normalized) {
  if (b < 0 || b > m) return {};
  if (b == 0) return 1;
  const CartanType ct(Family::C, m);
  const Weight w = fundamental_weight(ct, b);
  return normalized ? nps_weyl(ct, w) : ps_weyl(ct, w);
}

}  // namespace

Matrix<LaurentPoly> jt_matrix_q(const std::vector<int>& lambda, int n) {
  const JTLayout lay(lambda, n);
  return make_matrix<LaurentPoly>(lay.ell(), [&](int i, int j) { return fundamental_ps_C(lay.m(i), lay.b(i, j), false); }, 1);
}

Matrix<LaurentPoly> jt_matrix_nps(const std::vector<int>& lambda, int n) {
  const JTLayout lay(lambda, n);
  return make_matrix<LaurentPoly>(lay.ell(), [&](int i, int j) { return fundamental_ps_C(lay.m(i), lay.b(i, j), true); }, 1);
}

Matrix<GroupAlgebra> jt_matrix_character(const std::vector<int>& lambda, int n) {
  const JTLayout lay(lambda, n);
  return make_matrix<GroupAlgebra>(lay.ell(), [&](int i, int j) {
    const int b = lay.b(i, j);
    GroupAlgebra g;
    if (b < 0) return g;
    for (const auto& word : enumerate_partial_dyck(lay.a(i, j), b)) {
      GroupAlgebra::Exponent e(lay.m(i), 0);
      for (const auto& local : path_weight_w(word)) {
        const BarLetter x = lay.reweight(i, local);
        e[x.value - 1] += x.barred ? -2 : 2;
      }
      g += GroupAlgebra::monomial(e);
    }
    return g;
  }, 1);
}

BigInt jacobi_trudi_dimension(const std::vector<int>& lambda, int n) { return det(jt_matrix_dimension(lambda, n)); }
LaurentPoly jacobi_trudi_q(const std::vector<int>& lambda, int n) { return det(jt_matrix_q(lambda, n)); }
GroupAlgebra jacobi_trudi_character(const std::vector<int>& lambda, int n) { return det(jt_matrix_character(lambda, n)); }

Character group_to_character(const GroupAlgebra& g, int n) {
  Character ch;
  for (const auto& [e, c] : g.terms()) {
    if (c < 0) throw ValidationError("negative coefficient in a character");
    if (static_cast<int>(e.size()) > n) throw ValidationError("exponent outside the rank");
    Weight w(n, 0);
    std::copy(e.begin(), e.end(), w.begin());
    ch[w] = c;
  }
  return ch;
}

GroupAlgebra character_to_group(const Character& ch) {
  GroupAlgebra g;
  for (const auto& [w, m] : ch) g += GroupAlgebra::monomial(w, m);
  return g;
}

BigInt jt_rectangle_dimension(int ell, int k, int n, bool transposed) {
  return det(make_matrix<BigInt>(ell, [&](int i, int j) {
    return catalan_triangle(i + j + 2 * n - k + 1, transposed ? i - j + k : j - i + k);
  }));
}

BigInt jt_dimension_extended(const std::vector<int>& lambda, int n) {
  const JTLayout lay(lambda, n);
  return det(make_matrix<BigInt>(lay.ell(), [&](int i, int j) { return catalan_triangle(lay.a(i, j), lay.b(i, j) + 1); }, 1));
}

// -- decomposition multiplicities ------------------------------------------------

BigInt hankel_B(int n, int m) {
  return det(make_matrix<BigInt>(n, [&](int i, int j) { return catalan(2 * n - i - j + m); }, 1));
}

BigInt spin_power_multiplicity_B(const Weight& lambda, int n, int power) {
  const CartanType ct(Family::B, n);
  require_dominant(ct, lambda);
  if (power < 0) throw ValidationError("tensor power must be nonnegative");
  // With m = power/2 and c_j = lambda_j both possibly half-integral, m + c_j
  // and m - c_j are integers: (power +- 2 lambda_j) / 2.
  std::vector<int> plus(n), minus(n);
  for (int j = 0; j < n; ++j) {
    if ((lambda[j] - power) % 2 != 0)
      throw ValidationError("weight " + weight_str(lambda) + " cannot occur in this tensor power");
    plus[j] = (power + lambda[j]) / 2;
    minus[j] = (power - lambda[j]) / 2;
  }
  return det(make_matrix<BigInt>(n, [&](int i, int j) {
    return catalan_triangle(2 * n - i - j + plus[j - 1], j - i + minus[j - 1]);
  }, 1));
}

BigInt hankel_C(int n, int m) {
  return det(hankel<BigInt>(n, [](int k) { return catalan(k); }, m + 1));
}

BigInt wedge_power_multiplicity_C(const Weight& lambda, int n, int m) {
  const CartanType ct(Family::C, n);
  require_dominant(ct, lambda);
  if (m < 0) throw ValidationError("tensor power must be nonnegative");
  const auto c = weight_partition(lambda);
  return det(make_matrix<BigInt>(n, [&](int i, int j) {
    return catalan_triangle(2 * n - i - j - 1 + m + c[j], j - i + m - c[j]);
  }));
}

std::vector<int> conjugate_complement(const std::vector<int>& lambda, int n, int m) {
  if (static_cast<int>(lambda.size()) > n) throw ValidationError("partition has more than n parts");
  std::vector<int> padded(lambda);
  padded.resize(n, 0);
  std::vector<int> bar(n);
  for (int i = 0; i < n; ++i) {
    if (padded[i] > m || padded[i] < 0) throw ValidationError("partition does not fit in the box");
    bar[i] = m - padded[n - 1 - i];
  }
  while (!bar.empty() && bar.back() == 0) bar.pop_back();
  return conjugate_partition(bar);
}

BigInt spin_rect_hankel(int r, int n) {
  if (r < 1 || n < 1) throw ValidationError("need r, n >= 1");
  return det(hankel<BigInt>(r, [n](int k) { return binomial(2L * (n + k) + 1, n + k); }));
}

BigInt even_binomial_hankel(int r, int n) {
  if (r < 1 || n < 1) throw ValidationError("need r, n >= 1");
  return det(hankel<BigInt>(r, [n](int k) { return binomial(2L * (n + k), n + k); }));
}

// -- q-identities -----------------------------------------------------------------

LaurentPoly cat_prime(int n, int i) { return fundamental_ps_C(n, i, false); }

bool ratio_identity_holds(int n, int i) {
  if (i < 1 || i > n - 1) throw ValidationError("need 1 <= i <= n-1");
  // Cat_{(2n-i-1,i)} (q^n + 1) = q^{...} (q^{n-i} + 1) Cat'_{(2n-i-1,i)}, Cat' in type C_{n-1}.
  const LaurentPoly lhs = q_catalan_triangle(2 * n - i - 1, i) * (LaurentPoly::monomial(n) + 1);
  const int e = static_cast<int>(binomial(n, 2).get_si() - binomial(n - i, 2).get_si());
  const LaurentPoly rhs = (LaurentPoly::monomial(n - i) + 1) * cat_prime(n - 1, i).shift(e);
  return lhs == rhs;
}

BranchingCheck branching_nps_B_to_D(int s, int n) {
  if (n < 2 || s < 1 || s > n) throw ValidationError("need n >= 2 and 1 <= s <= n");
  const CartanType B(Family::B, n), D(Family::D, n);
  auto nps_D = [&](const Weight& w) { return w == zero_weight(D) ? LaurentPoly(1) : nps_weyl(D, w); };
  BranchingCheck out;
  out.lhs = nps_weyl(B, tfw(B, s));
  if (s < n) {
    out.rhs = nps_D(tfw(D, s)) + nps_D(tfw(D, s - 1)).shift(n - s + 1);
  } else {
    const int sign = n % 2 == 0 ? 1 : -1;
    // The valuation of ps(2 zeta_n) is -binom(n+1,2) for n even and
    // -binom(n+1,2) + 2 for n odd (w_0 = -1 exactly when n is even); the
    // other spin weight is the mirror case.
    out.rhs = nps_D(tfw(D, n - 1)).shift(1) + nps_D(scale(fundamental_weight(D, n), 2)).shift(1 - sign) +
              nps_D(scale(fundamental_weight(D, n - 1), 2)).shift(1 + sign);
  }
  return out;
}

}  // namespace lcat
