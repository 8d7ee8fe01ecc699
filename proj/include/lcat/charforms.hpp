#pragma once

// Principal specializations and dimensions from the Weyl character formula,
// the Jacobi-Trudi determinants for type C_n characters, and the
// determinants counting highest weight elements in tensor powers of the
// spin crystal (type B_n) and of the exterior-power column crystal (type C_n).

#include <string>
#include <vector>

#include "lcat/cartan.hpp"
#include "lcat/crystal.hpp"
#include "lcat/lgv.hpp"
#include "lcat/poly.hpp"
#include "lcat/ring.hpp"

namespace lcat {

// A dominant weight with both of its descriptions: fundamental coefficients
// and doubled epsilon-coordinates (the partition is half of the latter).
struct DominantWeight {
  CartanType type;
  std::vector<int> coeffs;  // c_i of sum c_i omega_i
  Weight weight;            // doubled epsilon-coordinates

  static DominantWeight from_fundamental(const CartanType& ct, const std::vector<int>& coeffs);
  static DominantWeight from_weight(const CartanType& ct, const Weight& w);
  static DominantWeight from_partition(const CartanType& ct, const std::vector<int>& parts);

  bool integral() const;
  std::vector<int> partition() const;  // throws ValidationError if half-integral
  std::vector<int> conjugate() const;
  int ell() const;         // lambda_1
  int size() const;        // |lambda|
  int n_lambda() const;    // sum (i-1) lambda_i
};

std::vector<int> conjugate_partition(const std::vector<int>& lambda);

// -- principal specializations ---------------------------------------------
//
// ps(lambda) = ch(lambda) at x_k = q^k (types B, C, D) or at
// (1, q, ..., q^n) for the n+1 variables of gl_{n+1} (type A_n).  Spin
// weights of types B/D have half-integral exponents, so the "half" variants
// return a polynomial in s = q^{1/2}.

// Product formulas for types A, B, C (one exact division at the end) and the
// Weyl alternant quotient for type D.
LaurentPoly ps_weyl_half(const CartanType& ct, const Weight& lambda);
// Throws ValidationError when some exponent is half-integral.
LaurentPoly ps_weyl(const CartanType& ct, const Weight& lambda);
// q^{-valuation} ps; always a polynomial in q.
LaurentPoly nps_weyl(const CartanType& ct, const Weight& lambda);
// The Weyl character formula A_{lambda+rho} / A_rho evaluated directly, for
// every family; an independent check of the product formulas.
LaurentPoly ps_alternant_half(const CartanType& ct, const Weight& lambda);
// s^{2k} -> q^k; throws ValidationError on an odd exponent.
LaurentPoly halve_exponents(const LaurentPoly& p_in_s);
// Principal specialization of a weight multiset (doubled coordinates).
LaurentPoly ps_of_character_half(const CartanType& ct, const Character& ch);

// -- dimensions --------------------------------------------------------------

// Weyl dimension formula, all four families.
BigInt dim_weyl(const CartanType& ct, const Weight& lambda);
// dim V(r omega_n) in type B_n as prod_{i<=j} (r+i+j-1)/(i+j-1).
BigInt dim_spin_rectangle_B(int r, int n);
// The same through the factorial products F and Phi.
BigInt dim_spin_rectangle_B_factorials(int r, int n);
// dim V(tfw_s) in type D_n = binom(2n - delta_{s,n}, s).
BigInt dim_column_D(int s, int n);
// F(n) = 1! 2! ... n!,  Phi(n) = n! (n-2)! (n-4)! ...; both 1 for n <= 0.
BigInt superfactorial(long n);
BigInt alternating_superfactorial(long n);

// dim V(r omega_n) in type C_n through three product forms: Krattenthaler's
// evaluation of the Hankel determinant, the binomial product from the
// specialization at q = 1, and the reduced F/Phi quotient.
BigInt cn_rect_dim_krattenthaler(int r, int n);
BigInt cn_rect_dim_binomial(int r, int n);
BigInt cn_rect_dim_factorial(int r, int n);

// -- Jacobi-Trudi determinants for type C_n ---------------------------------

enum class JTMode { dimension, q, character };
JTMode parse_jt_mode(const std::string& s);  // "dim"/"dimension", "q", "char"/"character"

// Entry (i,j), 1-based, is the type C_{m(i)} fundamental character
// chi_{(a(i,j), b(i,j))} = ch(omega_{b(i,j)}): Cat_{(a,b)} at x = 1, its
// principal specialization in mode q, and in mode character the sum over
// Dyck_{(a,b)} of the reweighted path weights (doubled coordinates).
Matrix<BigInt> jt_matrix_dimension(const std::vector<int>& lambda, int n);
Matrix<LaurentPoly> jt_matrix_q(const std::vector<int>& lambda, int n);
Matrix<GroupAlgebra> jt_matrix_character(const std::vector<int>& lambda, int n);
// The entries nps(omega_b) in type C_{m(i)}; each differs from the ps entry
// by a power of q, so the determinant is ps(lambda) only up to q^k.
Matrix<LaurentPoly> jt_matrix_nps(const std::vector<int>& lambda, int n);

BigInt jacobi_trudi_dimension(const std::vector<int>& lambda, int n);
LaurentPoly jacobi_trudi_q(const std::vector<int>& lambda, int n);
GroupAlgebra jacobi_trudi_character(const std::vector<int>& lambda, int n);

// Group algebra element with doubled-coordinate exponents -> weight multiset
// of length n (throws ValidationError on a negative coefficient).
Character group_to_character(const GroupAlgebra& g, int n);
GroupAlgebra character_to_group(const Character& ch);

// Remark forms for lambda = ell omega_k: the 0-based matrices with second
// index j-i+k and i-j+k, and the form with b(i,j)+1, which extends every
// path by one N step and equals the dimension only for k = n.
BigInt jt_rectangle_dimension(int ell, int k, int n, bool transposed);
BigInt jt_dimension_extended(const std::vector<int>& lambda, int n);

// -- decomposition multiplicities -------------------------------------------

// det H^B_{n,m} = det [Cat_{2n-i-j+m}]_{i,j=1}^n.
BigInt hankel_B(int n, int m);
// Multiplicity of B(lambda) in B(omega_n)^{(x) power}, type B_n, as
// det [Cat_{(2n-i-j+m+c_j, j-i+m-c_j)}]_{i,j=1}^n with m = power/2 and
// c = lambda.  For odd powers both are half-integral (lambda lies in
// omega_n + integral weights) while m +- c_j stay integral.  lambda is given
// in doubled coordinates and must be dominant.
BigInt spin_power_multiplicity_B(const Weight& lambda, int n, int power);
// det H^C_{n,m+1} = det [Cat_{m+1+i+j}]_{i,j=0}^{n-1}.
BigInt hankel_C(int n, int m);
// Multiplicity of B(lambda) in (wedge B(omega_1))^{(x) m}, type C_n, as
// det [Cat_{(2n-i-j-1+m+c_j, j-i+m-c_j)}]_{i,j=0}^{n-1} with c_j = lambda_{j+1}.
BigInt wedge_power_multiplicity_C(const Weight& lambda, int n, int m);
// The complement of lambda (at most n parts, lambda_1 <= m) in the n x m
// box, conjugated: a partition with at most m parts, read in type C_m.
std::vector<int> conjugate_complement(const std::vector<int>& lambda, int n, int m);

// det BH_{r,n} = det [binom(2(n+i+j)+1, n+i+j)]_{i,j=0}^{r-1}.
BigInt spin_rect_hankel(int r, int n);
// det [binom(2(n+i+j), n+i+j)]_{i,j=0}^{r-1}.
BigInt even_binomial_hankel(int r, int n);

// -- q-identities tied to characters ----------------------------------------

// Cat'_{(2n-i+1,i)}(q) = ps(omega_i) in type C_n, a Laurent polynomial
// symmetric under q -> 1/q (the printed q^7 Cat'_{(7,2)} is nps(omega_2) in
// C_4, and the ratio identity holds in this normalization).
LaurentPoly cat_prime(int n, int i);
// Cat_{(2n-i-1,i)}(q) / Cat'_{(2n-i-1,i)}(q) against
// q^{binom(n,2) - binom(n-i,2)} (q^{n-i}+1)/(q^n+1): both sides multiplied out.
bool ratio_identity_holds(int n, int i);

// B_n -> D_n branching on normalized principal specializations:
// nps_B(tfw_s) = nps_D(tfw_s) + q^{n-s+1} nps_D(tfw_{s-1}) for s < n, and
// nps_B(tfw_n) = q nps_D(tfw_{n-1}) + q^{1-(-1)^n} nps_D(2 zeta_n)
//              + q^{1+(-1)^n} nps_D(2 zeta_{n-1}),
// with zeta_n = (1/2, ..., 1/2) and zeta_{n-1} = (1/2, ..., 1/2, -1/2).
struct BranchingCheck {
  LaurentPoly lhs;  // nps(tfw_s) in B_n
  LaurentPoly rhs;
  bool holds() const { return lhs == rhs; }
};
BranchingCheck branching_nps_B_to_D(int s, int n);

}  // namespace lcat
