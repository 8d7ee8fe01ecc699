#pragma once

// Lattice words over {N,E} and {U,H,D}, the Catalan/Motzkin/Riordan triangle
// numbers, and the path statistics built on top of them.
//
// Words are plain ASCII strings.  A Dyck-type path starts at (0,0), E = +x,
// N = +y, and stays weakly below the diagonal (#N <= #E on every prefix).

#include <optional>
#include <string>
#include <vector>

#include "lcat/poly.hpp"

namespace lcat {

// A possibly barred letter.  `value` may be 0 so that the excluded step
// weighted 0-bar can be represented.  Lexicographic order on (value, barred)
// is the King order 1 < 1bar < 2 < 2bar < ...
struct BarLetter {
  int value = 0;
  bool barred = false;

  int signed_value() const { return barred ? -value : value; }
  std::string str() const;
  friend auto operator<=>(const BarLetter&, const BarLetter&) = default;
};

using Column = std::vector<BarLetter>;
std::string column_str(const Column& c);

// -- words -----------------------------------------------------------------

bool is_ne_word(const std::string& w);  // only N and E
bool is_partial_dyck(const std::string& w);
int count_steps(const std::string& w, char step);

// Dyck_{(n,k)}: n E steps, k N steps, every prefix #N <= #E.  Sorted
// lexicographically (E < N).
std::vector<std::string> enumerate_partial_dyck(int n, int k);
std::vector<std::string> enumerate_dyck(int n);
// All words with n N's and m E's (the rectangle R_{n,m}), sorted.
std::vector<std::string> enumerate_rectangle(int n, int m);

// Motzkin words over {U,H,D} of length n ending at height k, sorted.
std::vector<std::string> enumerate_motzkin(int n, int k);
bool is_riordan(const std::string& w);  // Motzkin word with no H at height 0
std::vector<std::string> enumerate_riordan(int n, int k);

// The alternative Riordan model: words over {e,n} cut into blocks e, ne, nne
// which map to U, H, D.  Returns nullopt when the word is not in the set.
std::optional<std::string> alt_riordan_to_riordan(const std::string& w);
std::vector<std::string> enumerate_alt_riordan(int length, int k);

// -- numbers ---------------------------------------------------------------

BigInt catalan(long n);
BigInt catalan_triangle(long n, long k);  // Cat_{(n,k)}, 0 off range
BigInt motzkin_triangle(long n, long k);  // closed-form sum
BigInt motzkin(long n);
BigInt riordan_triangle(long n, long k);  // alternating Motzkin sum
BigInt riordan(long n);

// -- statistics ------------------------------------------------------------

// w(N;D) for every N step of D, in order.  D must be a partial Dyck word.
std::vector<BarLetter> path_weight_w(const std::string& d);

// The E-step weighting: E starting at (x,y) gets n - (x+y)/2 when x+y is even
// and the barred n - (x+y+1)/2 when odd.
BarLetter wprime_letter(int x, int y, int n);

// w'(E;D') for the E steps E^(1..i) of D' in Dyck'_{(i,2n-i+1)}, with the word
// placed so that it ends at (n,n).
std::vector<BarLetter> path_weight_wprime(const std::string& dprime, int n);
bool is_conjugate_partial_dyck(const std::string& w);

struct PathStatistics {
  long area = 0;
  std::vector<int> descents;  // 1-based positions i with D_i = N, D_{i+1} = E
  long maj_N = 0;
  long maj_E = 0;
  long w_plus = 0;   // sum of unbarred w values (last N excluded)
  long w_minus = 0;  // sum of barred w values, as a positive number
  long signed_weight = 0;
};

PathStatistics dyck_statistics(const std::string& d);

// Stump: sum over Dyck_n of q^{maj_N} t^{C(n,2) - maj_E}.
BiLaurentPoly stump_qt_catalan(int n);
// Sum over Dyck_n of q^{C(n,2) - w_minus} t^{C(n,2) - w_plus}; equals Stump.
BiLaurentPoly wpm_qt_catalan(int n);
// Sum over Dyck_n of q^{w_plus} t^{w_minus} exactly as the vertical weights
// give it (differs from Stump from n = 3 on).
BiLaurentPoly wpm_literal(int n);
// Sum over Dyck_{(n,k)} of q^{w'_+} t^{w'_-}: E steps except the first, rank
// parameter floor((n+k)/2).
BiLaurentPoly wpm_qt_catalan_triangle(int n, int k);

// (w'_+, w'_-) of a word starting at (0,0), over its E steps except the
// first, with rank parameter n.
BiLaurentPoly::Exp wprime_pm(const std::string& d, int n);

// Upsilon on Dyck_n: valleys at (x_i, y_i), x from X_+(D), y from the
// complement of X_-(D) in [n-1].
std::string upsilon(const std::string& d);
std::string dyck_from_valleys(int n, const std::vector<std::pair<int, int>>& valleys);

// Carlitz-Riordan q-Catalan via the recursion, and via areas.
LaurentPoly carlitz_riordan(int n);
LaurentPoly area_generating(int n);

// Mahonian q-Catalan [2n choose n]_q / [n+1]_q and q-triangle
// Cat_{(n,k)}(q) = q^{-k}([n+k choose k] - [n+k choose k-1]).
LaurentPoly mahonian_catalan(int n);
LaurentPoly q_catalan_triangle(int n, int k);

// The rectangle statistic w'_{n,m}: e starting at (x,y) in an n-N, m-E word.
long rect_edge_weight(int x, int y, int n, int m);
long rect_weight(const std::string& p, int n, int m);

struct RectGenerating {
  LaurentPoly poly;
  int D = 0;  // floor((n-m+1)/2)
  int v = 0;  // -sum_{k=D}^{D+m-1} k
};
RectGenerating rect_generating(int n, int m);
int rect_valuation(int n, int m);

}  // namespace lcat
