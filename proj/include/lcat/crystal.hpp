#pragma once

// Finite crystals stored as explicit operator tables, tensor products via the
// signature rule, closures of tensor words, and the concrete crystals used
// throughout: vector representations, spin representations, KN tableaux and
// the exterior-power column crystal of type C.
//
// Tensor convention: a word is written b_L (x) ... (x) b_1 and stored in that
// written order, so element 0 of a TensorWord is the leftmost factor b_L.
// The signature of b is read left to right: each factor contributes
// -^{phi_i} followed by +^{eps_i}, then (+-) pairs cancel.  e_i acts on the
// leftmost surviving +, f_i on the rightmost surviving -.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcat/cartan.hpp"
#include "lcat/poly.hpp"

namespace lcat {

class FiniteCrystal {
 public:
  static constexpr int kNone = -1;

  // f_table[i-1][b] is f_i(b) or kNone.  e_i, eps_i and phi_i are derived.
  // Labels are JSON fragments identifying the elements.
  FiniteCrystal(CartanType ct, std::vector<Weight> weights, std::vector<std::string> labels,
                std::vector<std::vector<int>> f_table);

  const CartanType& type() const { return type_; }
  int size() const { return static_cast<int>(weights_.size()); }
  int e(int i, int b) const { return e_[i - 1][b]; }
  int f(int i, int b) const { return f_[i - 1][b]; }
  int epsilon(int i, int b) const { return eps_[i - 1][b]; }
  int phi(int i, int b) const { return phi_[i - 1][b]; }
  const Weight& wt(int b) const { return weights_[b]; }
  const std::string& label(int b) const { return labels_[b]; }
  int find(const std::string& label) const;  // kNone if absent

  bool is_highest_weight(int b) const;
  std::vector<int> highest_weight_elements() const;
  // Kashiwara axioms: pairing + eps = phi, weight shift by alpha_i, e/f
  // inverse.  Throws InternalError describing the first violation.
  void check_axioms() const;

 private:
  CartanType type_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> e_, f_, eps_, phi_;
  std::map<std::string, int> index_;
};

using CrystalPtr = std::shared_ptr<const FiniteCrystal>;

// Weight multiset.
using Character = std::map<Weight, BigInt>;
Character character(const FiniteCrystal& c);
BigInt character_mass(const Character& ch);

// -- atoms -----------------------------------------------------------------

// B(omega_1) as in the vector-representation figure.  Letters are signed
// integers (k-bar = -k, 0 only in type B), in the order
// 1 < ... < n (< 0) < n-bar < ... < 1-bar; type A uses 1..n+1.
CrystalPtr vector_crystal(const CartanType& ct);
std::vector<int> vector_letters(const CartanType& ct);  // in crystal order
// Position of a letter in the vector-crystal order (throws if invalid).
int letter_rank(const CartanType& ct, int letter);

// Spin crystals on sign vectors: type B_n gives B(omega_n); type D_n with
// which = n or n-1 gives B(omega_which) (sign product + resp. -).  Labels are
// JSON strings such as "+-+".
CrystalPtr spin_crystal(const CartanType& ct, int which);

// -- tensor products -------------------------------------------------------

using TensorWord = std::vector<int>;

class TensorProduct {
 public:
  explicit TensorProduct(std::vector<CrystalPtr> factors);
  static TensorProduct power(const CrystalPtr& c, int k);

  const CartanType& type() const { return type_; }
  int length() const { return static_cast<int>(factors_.size()); }
  const FiniteCrystal& factor(int p) const { return *factors_[p]; }
  BigInt cardinality() const;

  std::optional<TensorWord> e(int i, const TensorWord& w) const;
  std::optional<TensorWord> f(int i, const TensorWord& w) const;
  int epsilon(int i, const TensorWord& w) const;
  int phi(int i, const TensorWord& w) const;
  Weight wt(const TensorWord& w) const;
  bool is_highest_weight(const TensorWord& w) const;
  // JSON array listing b_1 first, i.e. index 1 = rightmost factor.
  std::string label(const TensorWord& w) const;

  // Every element, lexicographic in the factor indices (resource-capped).
  std::vector<TensorWord> all_elements() const;
  // Highest weight elements by exhaustive scan (resource-capped).
  std::vector<TensorWord> highest_weight_elements() const;

 private:
  struct Scan {
    int minus = 0;         // phi of the word
    int plus = 0;          // eps of the word
    int f_pos = -1;        // factor hit by f_i
    int e_pos = -1;        // factor hit by e_i
  };
  Scan scan(int i, const TensorWord& w) const;

  CartanType type_;
  std::vector<CrystalPtr> factors_;
};

// The connected component of `start` under all e_i, f_i.  Elements are
// sorted by their factor-index sequence; `words[k]` is element k.  The
// labeller defaults to TensorProduct::label.
struct Component {
  CrystalPtr crystal;
  std::vector<TensorWord> words;
};
using WordLabeller = std::function<std::string(const TensorWord&)>;
Component closure(const TensorProduct& tp, const TensorWord& start, const WordLabeller& labeller = {});

// Multiset of weights of highest weight elements.
std::map<Weight, BigInt> decompose_tensor(const std::vector<CrystalPtr>& factors);
// The same multiset computed factor by factor: b (x) u is highest weight iff
// u is and eps_i(b) <= <alpha_i^vee, wt(u)> for all i.  Not capped by the
// total size, only by the number of distinct weights.
std::map<Weight, BigInt> decompose_tensor_iterated(const std::vector<CrystalPtr>& factors);

// -- KN tableaux -----------------------------------------------------------

// Column heights (left to right) of the tableau for a dominant weight, plus
// the spin column in types B/D.
struct KNShape {
  int spin = 0;                  // 0 = none, otherwise which spin node
  std::vector<int> columns;      // heights, weakly decreasing
  bool negative_last_row = false;  // type D with lambda_n < 0
};
KNShape kn_shape(const CartanType& ct, const Weight& lambda);

// B(lambda) as the closure of the highest weight tableau, identified with a
// tensor word by the reverse Far-Eastern reading (spin column first, then
// each column bottom to top, columns left to right).  Labels are JSON arrays
// of columns read top to bottom, the spin column (if any) as a sign string.
struct KNCrystal {
  CrystalPtr crystal;
  KNShape shape;
  std::vector<TensorWord> words;
  int highest = 0;
};
KNCrystal kn_crystal(const CartanType& ct, const Weight& lambda);
// Tableau columns (top to bottom) of an element of kn_crystal, spin omitted.
std::vector<std::vector<int>> kn_columns(const KNCrystal& k, int b);

// -- exterior powers of B(omega_1), type C_n -------------------------------

// All strictly increasing columns over 1 < ... < n < n-bar < ... < 1-bar of
// every height 0..2n (2^{2n} elements), with the crystal structure of the
// column read bottom to top.  Labels are JSON arrays (top to bottom).
struct WedgeCrystal {
  CrystalPtr crystal;
  std::vector<std::vector<int>> columns;  // top to bottom, signed letters
};
WedgeCrystal wedge_column_crystal(int n);

// Pair removal onto KN columns.  For i = 1, ..., n in turn, the pair
// (i, i-bar) is removed when k + 1 + p_i - p_{i-bar} - r > i, where k and the
// rows p (1-based from the top) refer to the original column and r is the
// number of pairs removed so far.  With r = 0 this is the KN violation test.
std::vector<int> wedge_to_kn(int n, const std::vector<int>& column);
// The KN admissibility condition for a type C column.
bool is_kn_column_C(const std::vector<int>& column);

}  // namespace lcat
