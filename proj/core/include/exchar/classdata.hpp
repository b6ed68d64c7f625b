#ifndef EXCHAR_CLASSDATA_HPP
#define EXCHAR_CLASSDATA_HPP

#include <unordered_map>
#include <vector>

#include "exchar/perm.hpp"
#include "exchar/permgroup.hpp"

namespace exchar {

// Conjugacy class data in a canonical order: each representative is the
// lexicographically least element of its class, and classes are sorted by
// (representative element order, class size, representative image list).
// The identity class is therefore always class 0. The canonical order makes
// every downstream table, eigenvector split, and cache key reproducible.
struct ClassData {
  PermGroup group;
  std::vector<Permutation> reps;
  std::vector<long> sizes;
  std::vector<long> rep_orders;
  std::vector<int> inverse_classes; // inverse_classes[k] = class of reps[k]^{-1}
  long exponent = 1;                // lcm of all element orders
  std::unordered_map<Permutation, int, PermHash> index; // element -> class

  int class_count() const { return static_cast<int>(reps.size()); }
  int class_of(const Permutation& g) const;
  int power_class(int k, long t) const; // class of reps[k]^t
};

// Enumerates the classes of g (fails with OrderCapExceeded beyond the
// element-enumeration cap).
ClassData conjugacy_classes(const PermGroup& g);

// For a subgroup S <= G on the same points, maps each class of S to the
// class of G containing it.
std::vector<int> class_fusion(const ClassData& sub, const ClassData& big);

// True when a and b are subgroups of g with a ∩ b = 1 and |a|·|b| = |g|
// (so g = a·b as a product of subgroups).
bool complements_in(const PermGroup& g, const PermGroup& a, const PermGroup& b);

} // namespace exchar

#endif
