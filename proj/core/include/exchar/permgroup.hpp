#ifndef EXCHAR_PERMGROUP_HPP
#define EXCHAR_PERMGROUP_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exchar/intmath.hpp"
#include "exchar/perm.hpp"

namespace exchar {

// A finite permutation group backed by a deterministic stabilizer chain
// (Schreier-Sims). Base points are chosen as the smallest moved point when
// a chain level is created, orbits are explored breadth-first with a fixed
// generator order, and element enumeration walks the chain with transversal
// points in ascending order. The same input generators therefore always
// produce the same element ordering, which downstream canonical forms
// (class representatives, hashes, cache keys) rely on.
class PermGroup {
public:
  PermGroup() = default; // trivial group on 0 points

  static PermGroup trivial(int degree);
  // Builds the group generated by `gens`, all of degree `degree`.
  static PermGroup from_generators(std::vector<Permutation> gens, int degree);
  // Same, with the degree taken from the first generator (gens must be
  // nonempty).
  static PermGroup from_generators(std::vector<Permutation> gens);

  int degree() const { return degree_; }
  // The input generators, deduplicated and with identities dropped.
  const std::vector<Permutation>& generators() const { return gens_; }

  Int order() const;
  // Order as a plain long; fails with OrderCapExceeded when it does not fit.
  long order_long() const;
  bool is_trivial() const { return levels_.empty(); }
  bool is_abelian() const;

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool is_normal_in(const PermGroup& g) const;

  // All elements in chain order: the first element is always the identity
  // coset product. Enumeration fails with OrderCapExceeded beyond the cap.
  const std::vector<Permutation>& elements() const;
  // All elements sorted lexicographically by image list (canonical order).
  const std::vector<Permutation>& sorted_elements() const;
  // SHA-256 over the canonical sorted element list; identifies the group as
  // a set of permutations independently of the generating set.
  const std::string& hash() const;

  PermGroup derived_subgroup() const;
  PermGroup sylow_subgroup(long p) const;
  PermGroup normalizer_of(const PermGroup& h) const;
  PermGroup centralizer_of(const PermGroup& h) const;
  PermGroup centralizer_of(const Permutation& x) const;
  PermGroup center() const;
  PermGroup intersection_with(const PermGroup& other) const;
  PermGroup join_with(const PermGroup& other) const;
  PermGroup conjugated_by(const Permutation& g) const;
  // Smallest normal subgroup of `g` containing *this (requires *this <= g).
  PermGroup normal_closure_in(const PermGroup& g) const;

  // Element enumeration ceiling (default 20000, override via the
  // EXCHAR_ORDER_CAP environment variable).
  static long order_cap();

private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;                  // gens assigned to this level
    std::vector<int> orbit;                         // discovery order
    std::unordered_map<int, Permutation> transversal; // point -> u, base^u = point
  };

  explicit PermGroup(int degree) : degree_(degree) {}

  void insert_element(const Permutation& g);
  // Sift g through levels[from..]; returns the residue and the level at
  // which sifting stopped (levels_.size() when g fixed every base).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void place_residue(std::size_t lvl, const Permutation& r);
  std::vector<const Permutation*> cumulative_gens(std::size_t lvl) const;
  void recompute_orbit(std::size_t lvl);
  // Re-establishes the orbit-stabilizer property of the whole chain.
  void certify();
  void invalidate_caches();
  long enumerable_order() const;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;

  mutable std::vector<Permutation> elements_cache_;
  mutable std::vector<Permutation> sorted_cache_;
  mutable std::string hash_cache_;
};

} // namespace exchar

#endif
