#pragma once

// The q-Motzkin / q-Riordan analogues defined by recursion, the (q,t)
// Catalan numbers built from Touchard-type subset sums, Cigler's q-Motzkin
// numbers, and a registry of every named identity and bounded conjecture
// scan with a generic (concurrent) runner producing IdentityReports.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcat/poly.hpp"
#include "lcat/ring.hpp"

namespace lcat {

// -- recursively defined q-analogues ----------------------------------------

// Mot'_n(q) = q^{-n} (Cat_{n+1}(q) - sum_{i<n} q^i [n choose i]_q Mot'_i(q)),
// Mot'_0 = 1, with the Mahonian Cat(q).
LaurentPoly qmotzkin_prime(int n);
// Mot'_{(n,r)}(q) for 0 <= r <= n (zero otherwise): with s = n - r,
// Cat_{(2n+1-s,s)}(q) - sum_{i<s} q^{n(s-i)} [n choose s-i]_q Mot'_{(i+n-s,n-s)}(q).
LaurentPoly qmotzkin_tri_prime(int n, int r);
// Rior'_{(n,r)}(q): Cat_{(2n-s,s)}(q) and q^{(n-1)(s-i)} in place of the above.
LaurentPoly qriordan_tri_prime(int n, int r);
// Rows 0..size-1 of the lower triangular matrices [X_{(n,r)}]; entries with
// r > n are zero.
std::vector<std::vector<LaurentPoly>> qmotzkin_prime_matrix(int size);
std::vector<std::vector<LaurentPoly>> qriordan_prime_matrix(int size);

// -- (q,t) Catalan numbers from subset sums ---------------------------------

// Cat'_{(2n-s+1,s)}(q,t) = sum_k Cat_{(n-s+k,k)} e_{s-2k}(q^j + t^j : 1 <= j <= n),
// 0 <= s <= n.
BiLaurentPoly qt_catalan_tri_prime(int n, int s);
// Cat'_n(q,t) = sum_k Cat_k sum over 2k-subsets S of [n-1] of
// prod_{j in [n-1] \ S} (q^j + t^j); Cat'_0 = 1.
BiLaurentPoly qt_catalan_prime(int n);
// The same sums by explicit subset enumeration (resource-capped); an
// independent oracle for the two functions above.
BiLaurentPoly qt_catalan_tri_prime_bruteforce(int n, int s);

// P = (qt - 1) Q + R with R supported on exponents min(a, b) = 0, by
// synthetic division along the diagonals a - b = const.  P must be a
// polynomial (no negative exponents).
struct QtMinusOneDivision {
  BiLaurentPoly quotient;
  BiLaurentPoly remainder;
  bool exact() const { return remainder.is_zero(); }
};
QtMinusOneDivision divide_by_qt_minus_one(const BiLaurentPoly& p);

// -- Cigler's q-Motzkin numbers -----------------------------------------------

// M_{n+1} = M_n + sum_{k=0}^{n-1} q^{k+1} M_k M_{n-k-1}, M_0 = 1.
LaurentPoly cigler_motzkin(int n);
// Tunnel length of a Motzkin word over {U,H,D}: the sum of j - i over the
// matched pairs U at position i, D at position j.
int tunnel_length(const std::string& motzkin_word);
// sum over Motzkin words of length n of q^{tunnel_length}.
LaurentPoly tunnel_generating(int n);
// det [M_{i+j+shift}]_{i,j=0}^{size-1}.
LaurentPoly cigler_motzkin_hankel(int size, int shift);
// kappa_n = 1, 1, 0, -1, -1, 0, ... (period 6, from n = 0).
int cigler_kappa(int n);
// det [CatCR_{shift+i+j}]_{i,j=0}^{size-1} (Carlitz-Riordan area q-Catalan).
LaurentPoly catcr_hankel(int size, int shift);
// The same determinant as a signed sum over non-intersecting families of
// Dyck paths from (-i,-i) to (shift+j, shift+j), N steps weighted by area.
LaurentPoly catcr_hankel_lgv(int size, int shift);

// -- reports ------------------------------------------------------------------

enum class IdentityStatus { verified, failed, skipped };
std::string status_str(IdentityStatus s);

struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct IdentityReport {
  std::string name;
  std::string range;  // e.g. "0<=s<=n<=12"
  IdentityStatus status = IdentityStatus::verified;
  std::optional<Counterexample> counterexample;  // set iff failed
  long instances = 0;                            // instances evaluated
  std::string note;                              // skip reason, flags
  bool conjecture = false;

  std::string to_json() const;  // one JSON object
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

std::string reports_json(const std::vector<IdentityReport>& reports);
std::string reports_table(const std::vector<IdentityReport>& reports);
std::string reports_csv(const std::vector<IdentityReport>& reports);
bool all_verified(const std::vector<IdentityReport>& reports);
// No theorem-level identity failed.  Conjecture scans are report-only: a
// counterexample to a printed conjecture is reported but does not count.
bool identities_hold(const std::vector<IdentityReport>& reports);

// -- registry -----------------------------------------------------------------

// One parameter point.  `eval` returns whether both sides agree together
// with their serializations.
struct InstanceOutcome {
  bool ok = true;
  std::string lhs;
  std::string rhs;
};
struct IdentityInstance {
  std::string params;
  std::function<InstanceOutcome()> eval;
};

struct IdentityEntry {
  std::string name;
  std::string statement;
  int default_bound = 0;   // the ranges of the acceptance checks
  int extended_bound = 0;  // larger ranges (the full `verify all` run)
  bool conjecture = false;
  std::string note;
  // Instances in canonical parameter order for the given bound, and the
  // printed description of that range.
  std::function<std::vector<IdentityInstance>(int bound)> instances;
  std::function<std::string(int bound)> range;
};

const std::vector<IdentityEntry>& identity_registry();
// Accepts '_' for '-'; throws ValidationError on an unknown name.
const IdentityEntry& find_identity(const std::string& name);

// Evaluates the instances (concurrently when threads > 1) and reports the
// first failing one in canonical order.  A ResourceCapError makes the
// report "skipped"; any other exception inside an instance is a failure.
IdentityReport run_identity(const IdentityEntry& entry, int bound, unsigned threads = 0);
// Runs several entries; reports are sorted by name.
std::vector<IdentityReport> run_identities(const std::vector<const IdentityEntry*>& entries,
                                           const std::function<int(const IdentityEntry&)>& bound,
                                           unsigned threads = 0);

// -- the named operations -------------------------------------------------------

// Cat_{(2n-s+1,s)} = sum_i binom(n, s-2i) 2^{s-2i} Cat_{(n-s+i,i)}, together
// with dim V(omega_s) in type C_n for n >= 1.
IdentityReport touchard_triangle(int n, int s);
// nps(omega_n + tfw_s) in type B_n against
// Cat_{(2n+1-s,s)}(q) / (q^{n+1-s} + 1) prod_{k=1}^{n+1} (q^k + 1).
IdentityReport near_spin_nps(int n, int s);
// kind: "likely-stanley" (type A_n, ps(varpi_n + varpi_k)), "column-A"
// (ps(varpi_k) in A_{n-1}), "q-binomial-B" (nps(tfw_i) in B_n),
// "spin-B" (nps(omega_n) in B_n and the strict partition count),
// "branching-B-D" (the B_n -> D_n relation); ranks up to `bound`.
IdentityReport branching_specializations(const std::string& kind, int bound = 6);
// which: "catcr0", "catcr1" (closed forms for size n+1), "catcr-lgv"
// (signed path sum, size n, shift r), "cigler0", "cigler1" (size n),
// "tunnel" (length n), "odd-shift" (size n, shift r has a negative
// coefficient).
IdentityReport appendix_hankels(const std::string& which, int n, int r = 0);
// name: motzkin_pos, motzkin_tri_pos, riordan_tri_pos, qt_divisibility,
// shifted_motzkin_hankel, factored_motzkin_2shifted,
// factored_motzkin_2shifted_dup, factored_motzkin_2shifted_dup_divisibility.
IdentityReport conjecture_scan(const std::string& name, int bound);

}  // namespace lcat
