#pragma once

// Strict partitions as the type B_n spin crystal, semistandard rigid
// tableaux (sequences of strict partitions) with their inner shapes and the
// subcrystals R_{n,m}(eta), the Motzkin standard sets, the type C_n -> B_n
// virtualization filter, and the type D_{n+1} analogues built from
// alternating strict partitions of colored integers (SSSRTs) with the
// Riordan standard sets.
//
// Tensor convention: a sequence (tau^(1), ..., tau^(m)) is the tensor word
// tau^(m) (x) ... (x) tau^(1) of crystal.hpp, so tau^(1) is the rightmost
// factor b_1 and every highest weight element has tau^(1) empty.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcat/crystal.hpp"

namespace lcat {

enum class CrystalOp { e, f };

// -- strict partitions (type B_n) -------------------------------------------

// Strictly decreasing positive parts; the subset view is {parts}.
using StrictPartition = std::vector<int>;

// Throws ValidationError unless nu is strictly decreasing with parts in 1..n.
void validate_strict_partition(const StrictPartition& nu, int n);
// All 2^n strict partitions with nu_1 <= n, ordered by the bitmask of the
// subset (value k is bit k-1), so the empty partition is first.
std::vector<StrictPartition> all_strict_partitions(int n);

// The explicit operators: f_{n-i} replaces a part i by i+1 when i+1 is not a
// part (i = 0 appends 1), e_{n-i} is the inverse.  nullopt is the zero.
std::optional<StrictPartition> sp_apply(CrystalOp op, int i, const StrictPartition& nu, int n);
// (s_1, ..., s_n) with s_i = '-' iff n+1-i is a part.
std::string sp_to_signs(const StrictPartition& nu, int n);
StrictPartition signs_to_sp(const std::string& signs);
// Doubled coordinates: +1 / -1 from the signs.
Weight sp_weight(const StrictPartition& nu, int n);
// The crystal on strict partitions in the order of all_strict_partitions,
// built from sp_apply alone.  Labels are JSON arrays.
CrystalPtr strict_partition_crystal(int n);

// uplambda(m) = (m, ..., 1), empty for m <= 0; uplambda(a; b) = (a, ..., b),
// empty when b > a.
StrictPartition staircase(int m);
StrictPartition staircase(int a, int b);

// -- semistandard rigid tableaux --------------------------------------------

using SSRT = std::vector<StrictPartition>;  // rows tau^(1), ..., tau^(l)

struct SkewShape {
  std::vector<int> outer;  // mu, l entries
  std::vector<int> inner;  // eta, l-1 entries (zeros kept)
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Diagram containment: l(a) >= l(b) and a_j >= b_j.
bool sp_contains(const StrictPartition& a, const StrictPartition& b);
// tau_{>t}
StrictPartition drop_parts(const StrictPartition& tau, int t);
// The unique t >= 0 with upper containing lower_{>t} but not lower_{>t-1}.
int ssrt_shift(const StrictPartition& upper, const StrictPartition& lower);
SkewShape ssrt_shape(const SSRT& t);
// A partition with its trailing zeros removed.
std::vector<int> strip_zeros(std::vector<int> p);

// SP_{n,m} = B(omega_n)^{(x) m}, type B_n.
class SSRTCrystal {
 public:
  SSRTCrystal(int n, int m);
  int n() const { return n_; }
  int m() const { return m_; }
  const CartanType& type() const { return tp_.type(); }
  const TensorProduct& tensor() const { return tp_; }

  TensorWord to_word(const SSRT& t) const;
  SSRT from_word(const TensorWord& w) const;
  std::optional<SSRT> apply(CrystalOp op, int i, const SSRT& t) const;
  Weight wt(const SSRT& t) const;
  bool is_highest_weight(const SSRT& t) const;
  // All 2^{nm} sequences (resource-capped), lexicographic in the words.
  std::vector<SSRT> all_elements() const;

 private:
  int n_, m_;
  std::vector<StrictPartition> parts_;
  std::map<StrictPartition, int> index_;
  TensorProduct tp_;
};

std::string ssrt_json(const SSRT& t);

// A finite subcrystal with its elements (element k of `crystal` is
// elements[k]).
template <class T>
struct Subcrystal {
  CrystalPtr crystal;
  std::vector<T> elements;
};

// R_{n,m}(eta): every element of SP_{n,m} whose inner shape is eta (trailing
// zeros ignored).  Each e_i, f_i of every element is checked to stay inside;
// a violation throws InternalError.
Subcrystal<SSRT> rigid_subcrystal(int n, int m, const std::vector<int>& eta);
// The connected component of `start` in SP_{n,m}.
Subcrystal<SSRT> ssrt_closure(int n, int m, const SSRT& start);

// O_varpi for varpi = sum c_i omega_i: K = c_1 + ... + c_n empty rows, then
// c_{n-1} copies of uplambda(1), ..., c_1 copies of uplambda(n-1).
SSRT highest_ssrt(int n, const std::vector<int>& coeffs);

// Tableaux in R_{n,3}((s, s-t)) whose rows partition {1, ..., m}: the
// Motzkin standard set of size Mot_{(m,s)}.  Needs 0 <= t <= s <= n-1 and
// m <= n.
std::vector<SSRT> motzkin_standard_set(int n, int s, int t, int m);
// All 3^m standard triples with rows partitioning {1, ..., m}, counted by
// inner shape (zeros stripped).
std::map<std::vector<int>, long> standard_triples_by_inner_shape(int m);

// The type C_n -> B_n virtualization of B(r omega_n): the tableaux of
// R(O_{r tfw_n}) = R_{n,2r}(empty) whose shape has only columns of even
// length (rows pair up: mu_{2i-1} = mu_{2i}).
std::vector<SSRT> virtualization_filter(int n, int r);
// The same set generated from (empty, ..., empty) by f_i (i < n) and f_n^2.
std::vector<SSRT> virtual_closure(int n, int r);

// The dual conjugate of a tableau with empty inner shape: transpose and
// replace each entry t by n+1-t.  Rows of the result are weakly increasing,
// columns strictly increasing (an SSYT with entries <= n).
std::vector<std::vector<int>> dual_conjugate(const SSRT& t, int n);
bool is_ssyt(const std::vector<std::vector<int>>& rows, int n);

// -- colored integers and alternating strict partitions (type D_{n+1}) ------

enum class Color { white = 0, gray = 1 };
inline Color flip(Color c) { return c == Color::white ? Color::gray : Color::white; }

struct ColoredInt {
  int value;
  Color color;
  friend bool operator==(const ColoredInt&, const ColoredInt&) = default;
};

// An ASP is determined by the color of its first part (the color of the
// empty ASP says which spin crystal it lies in) and its strictly decreasing
// values; colors alternate along the parts.
struct ASP {
  Color top = Color::white;
  std::vector<int> parts;

  Color color_at(int j) const;  // 1-based
  std::vector<ColoredInt> colored() const;
  static ASP from_colored(const std::vector<ColoredInt>& parts, Color empty_color = Color::white);
  friend bool operator==(const ASP&, const ASP&) = default;
  friend auto operator<=>(const ASP& a, const ASP& b) {
    if (a.top != b.top) return a.top <=> b.top;
    return a.parts <=> b.parts;
  }
};

void validate_asp(const ASP& tau, int n);
// j >= k (colors equal and |j| >= |k|)
bool colored_geq(const ColoredInt& j, const ColoredInt& k);
// Length-aware containment: l(a) >= l(b) and a_i >= b_i in the colored order.
bool asp_contains(const ASP& a, const ASP& b);
ASP drop_parts(const ASP& tau, int t);

// The D_{n+1} operators, i in 1..n+1: for i < n a part n-i+1 is lowered to
// n-i (e) or a part n-i raised to n-i+1 (f); f_n appends a gray 1 and f_{n+1}
// a white 1 after a part of the other color (the empty ASP counts as
// following a part of the opposite color to its own), e_n / e_{n+1} remove a
// final gray / white 1.
std::optional<ASP> asp_apply(CrystalOp op, int i, const ASP& tau, int n);
// (s_1, ..., s_{n+1}): s_i = '-' iff n+1-i is a part (i <= n); s_{n+1} is
// '+' iff the last part is gray (for the empty ASP: iff it is white).
std::string asp_to_signs(const ASP& tau, int n);
Weight asp_weight(const ASP& tau, int n);
// All ASPs with values <= n and first color `top`, by subset bitmask.
std::vector<ASP> all_asps(int n, Color top);
// B(omega_{n+1}) (white) or B(omega_n) (gray) over D_{n+1} from asp_apply.
CrystalPtr asp_crystal(int n, Color top);
// Weight of a colored integer k in the basis eps'_k = -eps_{n+1-k}
// (k <= n), eps'_{n+1} = eps_{n+1}: eps'_k - eps'_{n+1} (white) or
// eps'_k + eps'_{n+1} (gray).  Returned in doubled eps-coordinates; the
// weight of an ASP is the weight of its empty ASP plus these.
Weight colored_integer_weight(int n, const ColoredInt& c);

// -- semistandard spin rigid tableaux ---------------------------------------

using SSSRT = std::vector<ASP>;

// The unique t >= 0 with t = c(upper) + c(lower) mod 2 (so the colored
// columns line up) such that upper contains lower_{>t} but not lower_{>t-2}.
int sssrt_shift(const ASP& upper, const ASP& lower);
SkewShape sssrt_shape(const SSSRT& t);
std::string sssrt_json(const SSSRT& t);

// Rows of fixed first colors; tensor convention as for SSRT.
class SSSRTCrystal {
 public:
  SSSRTCrystal(int n, std::vector<Color> tops);
  int n() const { return n_; }
  const CartanType& type() const { return tp_.type(); }
  const TensorProduct& tensor() const { return tp_; }
  const std::vector<Color>& tops() const { return tops_; }

  TensorWord to_word(const SSSRT& t) const;
  SSSRT from_word(const TensorWord& w) const;
  std::optional<SSSRT> apply(CrystalOp op, int i, const SSSRT& t) const;
  Weight wt(const SSSRT& t) const;
  bool is_highest_weight(const SSSRT& t) const;
  std::vector<SSSRT> all_elements() const;

 private:
  int n_;
  std::vector<Color> tops_;
  std::vector<std::vector<ASP>> asps_;  // per color
  std::map<ASP, int> index_;
  TensorProduct tp_;
};

// The parity selector of the Riordan families and the two color patterns of
// the mixed spin case.
enum class Parity { x0 = 0, x1 = 1 };
enum class ColorPattern { p100, p001 };
std::vector<Color> pattern_colors(ColorPattern p);

// R^x(omega_{n+1} + tfw_{n+1-2s}): all-white triples with inner shape
// (2s, delta_{x,0} 2s); 0 <= s <= floor((n+1)/2).  Stability is checked.
Subcrystal<SSSRT> riordan_subcrystal(int n, int s, Parity x);
// The mixed spin family with colors (1,0,0) for x = 1 and (0,0,1) for
// x = 0 and inner shape (2s+1, delta_{x,0} (2s+1)); 0 <= s <= floor(n/2).
Subcrystal<SSSRT> riordan_odd_subcrystal(int n, int s, Parity x);
// Highest weight of either family in doubled coordinates of D_{n+1}.
Weight riordan_highest_weight(int n, int s, bool odd);

// A composition (zero parts allowed) of m with exactly one odd part (m odd)
// or exactly two odd parts (m even).
bool almost_even(const std::vector<int>& composition);

// The standard sets: rows partition {1, ..., m} and the length condition of
// the almost even filter; |even family| = Rior_{(m+1,2s)} for m >= 2s-1,
// |odd family| = Rior_{(m+1,2s+1)} for m >= 2s.  Values must fit: m <= n.
std::vector<SSSRT> riordan_sets(int n, int s, Parity x, int m);
std::vector<SSSRT> riordan_sets_odd(int n, int s, Parity x, int m);

}  // namespace lcat
