#pragma once

// King tableaux of type C_n, the column bijections Xi / Xi' with partial Dyck
// words, and the non-intersecting path families behind the Jacobi-Trudi
// formula for type C_n characters.

#include <string>
#include <utility>
#include <vector>

#include "lcat/crystal.hpp"
#include "lcat/paths.hpp"

namespace lcat {

// Rows top to bottom.  Entries use the King order 1 < 1bar < 2 < ... < nbar,
// which is the BarLetter ordering.
struct KingTableau {
  std::vector<std::vector<BarLetter>> rows;

  std::vector<int> shape() const;
  Column column(int c) const;  // 0-based, top to bottom
  friend bool operator==(const KingTableau&, const KingTableau&) = default;
  friend auto operator<=>(const KingTableau&, const KingTableau&) = default;
};

// Semistandard in the King order, entries in 1..n, row k entries >= k.
bool is_king_tableau(const KingTableau& t, int n);
bool is_king_column(const Column& c, int n);
// All King tableaux of shape lambda (a partition), sorted.  Resource-capped.
std::vector<KingTableau> enumerate_king(const std::vector<int>& lambda, int n);
// Doubled epsilon-coordinates of length n (k contributes +eps_k).
Weight king_weight(const KingTableau& t, int n);
Weight column_weight(const Column& c, int n);
Character king_character(const std::vector<int>& lambda, int n);

// JSON rows, barred letters negative: {"alphabet":"king","rows":[[-1,2],[3]]}.
std::string king_json(const KingTableau& t);

// Xi_{(2n-i+1,i)}: the column (w(N^(1);D), ..., w(N^(i);D)) of a word in
// Dyck_{(2n-i+1,i)}.  Throws ValidationError on any other word.
Column xi(const std::string& d, int n);
// The inverse: the unique word in Dyck_{(2n-i+1,i)} with the given column.
std::string xi_inverse(const Column& c, int n);
// Xi'_{(i,2n-i+1)}: the column (w'(E^(i);D'), ..., w'(E^(1);D')).
Column xi_prime(const std::string& dprime, int n);

// Xi_{n+1} on Dyck_{n+1} by the construction through partitions: take the
// partition cut out below the path, add the staircase (n, ..., 1), and
// replace 1, 2, ..., 2n by nbar, n, ..., 1bar, 1.  `conjugate` takes the
// conjugate partition first (Xi').  Kept as an independent check of the
// weight formulas.
Column xi_via_partitions(const std::string& dyck, bool conjugate = false);

// The grid for a partition lambda (at most n rows) in type C_n: ell = lambda_1
// paths, c_j = lambda'_{ell+1-j}, sources s_i = (i,i) and sinks
// t_j = (2 ell - j + 2n + 1 - c_j, j + c_j) in a Catalan graph below the
// diagonal, and a path s_i -> t_j lies in Dyck_{(a(i,j), b(i,j))} after
// translating s_i to the origin.
class JTLayout {
 public:
  JTLayout(std::vector<int> lambda, int n);

  int rank() const { return n_; }
  int ell() const { return ell_; }
  const std::vector<int>& lambda() const { return lambda_; }
  const std::vector<int>& conjugate() const { return conj_; }
  int c(int j) const { return conj_[ell_ - j]; }  // lambda'_{ell+1-j}

  int a(int i, int j) const { return 2 * ell_ - i - j + 2 * n_ + 1 - c(j); }
  int b(int i, int j) const { return j - i + c(j); }
  // The type C_m whose fundamental character sits at entry (i,j).
  int m(int i) const { return ell_ + n_ - i; }
  std::pair<int, int> source(int i) const { return {i, i}; }
  std::pair<int, int> sink(int j) const { return {2 * ell_ - j + 2 * n_ + 1 - c(j), j + c(j)}; }

  // Letter k of row i becomes k - (ell - i) taken mod m(i) in {1..m(i)};
  // barred letters stay barred.
  BarLetter reweight(int i, const BarLetter& local) const;
  BarLetter unreweight(int i, const BarLetter& shifted) const;
  // Path s_i -> t_i feeds column ell + 1 - i of the tableau.
  int column_of_path(int i) const { return ell_ + 1 - i; }

 private:
  std::vector<int> lambda_;
  std::vector<int> conj_;
  int n_ = 0, ell_ = 0;
};

// Global lattice points visited by the local word starting at s_i.
std::vector<std::pair<int, int>> path_points(const JTLayout& lay, int i, const std::string& word);
// True iff the paths (word k starts at s_{k+1}) share no lattice point.
bool non_intersecting(const JTLayout& lay, const std::vector<std::string>& family);

// Family P^(1..ell) with P^(i): s_i -> t_i, given as local words.  Throws
// ValidationError if a word has the wrong endpoint, leaves the Catalan graph
// or the family intersects.  Column ell+1-i of the result is the reweighted
// Xi of P^(i).
KingTableau nilp_to_king(const JTLayout& lay, const std::vector<std::string>& family);
std::vector<std::string> king_to_nilp(const JTLayout& lay, const KingTableau& t);

}  // namespace lcat
