#pragma once

// Cartan data for the classical families and weights in doubled
// epsilon-coordinates: entry i of a Weight is 2 * (coefficient of eps_{i+1}),
// so spin weights stay integral.  Type A_n uses n+1 coordinates (gl_{n+1}
// weights); the other families use n.

#include <string>
#include <vector>

namespace lcat {

enum class Family { A, B, C, D };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  CartanType() = default;
  CartanType(Family f, int n);

  int coords() const { return family == Family::A ? rank + 1 : rank; }
  std::string str() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

Family parse_family(const std::string& s);
char family_char(Family f);

using Weight = std::vector<int>;

Weight zero_weight(const CartanType& ct);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight scale(const Weight& a, int k);
// "(2,1,1)" for integral weights, "(1,1,1)/2" when some coordinate is odd.
std::string weight_str(const Weight& w);

Weight simple_root(const CartanType& ct, int i);
// <alpha_i^vee, w>
int coroot_pairing(const CartanType& ct, int i, const Weight& w);
// omega_i; i = 0 gives the zero weight.
Weight fundamental_weight(const CartanType& ct, int i);
// The modified fundamental weight: eps_1 + ... + eps_i in every family
// (2 omega_n in B_n; omega_{n-1} + omega_n and 2 omega_n in D_n).
Weight tfw(const CartanType& ct, int i);

Weight weight_from_fundamental(const CartanType& ct, const std::vector<int>& coeffs);
std::vector<int> fundamental_coefficients(const CartanType& ct, const Weight& w);
bool is_dominant(const CartanType& ct, const Weight& w);
// Throws ValidationError unless w has the right length and lies in the
// weight lattice (integral, or all coordinates half-odd in types B/D).
void validate_weight(const CartanType& ct, const Weight& w);

// Half of the doubled coordinates; requires an integral weight.
std::vector<int> weight_partition(const Weight& w);
Weight weight_from_partition(const CartanType& ct, const std::vector<int>& parts);

// The Weyl group orbit representative check: all signed permutations (B/C),
// even-signed permutations (D), permutations (A).  Used for invariance tests.
std::vector<Weight> weyl_orbit(const CartanType& ct, const Weight& w);

}  // namespace lcat
