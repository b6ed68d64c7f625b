#ifndef EXCHAR_CHARTAB_HPP
#define EXCHAR_CHARTAB_HPP

#include <vector>

#include "exchar/classdata.hpp"
#include "exchar/cyclotomic.hpp"
#include "exchar/permgroup.hpp"

namespace exchar {

// One irreducible character: exact values in the canonical class order of
// the owning table.
struct Character {
  long degree = 1;
  std::vector<Cyc> values;
};

// The full, exact character table of a finite group, rows sorted by
// (degree, value list). Row 0 is always the trivial character and column 0
// the identity class.
struct CharacterTable {
  ClassData classes;
  std::vector<Character> chars;

  int char_count() const { return static_cast<int>(chars.size()); }
  const Cyc& value(int chi, int cls) const { return chars[chi].values[cls]; }
};

// Computes the table by the modular (eigenvector) method with exact lifting,
// and cross-checks it (degree sum, row orthogonality) before returning.
// Results are memoized per group hash for the lifetime of the process.
const CharacterTable& character_table(const PermGroup& g);

// Number of tables actually computed (cache misses) so far in this process.
long table_computations();

// <a, b> = (1/|G|) sum over classes of |K| a(K) conj(b(K)).
Cyc inner_product(const ClassData& cd, const std::vector<Cyc>& a,
                  const std::vector<Cyc>& b);

// Values of row chi of `big` read along the classes of a subgroup.
std::vector<Cyc> restrict_values(const CharacterTable& big, int chi,
                                 const ClassData& sub);

// Induction of a class function from the subgroup with class data `sub` to
// the group with class data `big`.
std::vector<Cyc> induce_values(const ClassData& sub, const std::vector<Cyc>& f,
                               const ClassData& big);

// The subgroup {g : chi(g) = chi(1)}.
PermGroup kernel_subgroup(const CharacterTable& t, int chi);

// All normal subgroups (as intersections of irreducible-character kernels),
// sorted by (order, hash).
std::vector<PermGroup> normal_subgroups(const CharacterTable& t);

} // namespace exchar

#endif
