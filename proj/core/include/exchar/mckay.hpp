#ifndef EXCHAR_MCKAY_HPP
#define EXCHAR_MCKAY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exchar/chartab.hpp"
#include "exchar/intmath.hpp"
#include "exchar/permgroup.hpp"

namespace exchar {

// Degree statistics of the characters of p'-degree (degree coprime to p).
struct PPrimeStats {
  long p = 2;
  std::vector<long> degrees; // all p'-degrees, in table row order
  long m = 1; // smallest nontrivial p'-degree (1 when every p'-degree is 1)
  long b = 1; // largest p'-degree
  long d = 1; // smallest nontrivial degree of any character (1 when abelian)
};

// Comparison of the squared-degree sum over p'-degree characters of G with
// the index of the derived subgroup of a Sylow p-subgroup P inside the
// normalizer N = N_G(P), together with the structural side conditions that
// are expected to pin down the equality case.
struct ConjAReport {
  std::string group_id;   // hash of the ambient group
  long p = 2;
  Int lhs;                // sum of chi(1)^2 over p'-degree chi of G
  Int rhs;                // |N_G(P) : P'|
  bool holds = false;     // lhs >= rhs
  bool equality = false;  // lhs == rhs
  std::optional<PermGroup> complement; // normal K with K*N = G, K cap N = 1
  bool all_extend = false; // every p'-degree character of N extends to G
  std::pair<long, long> mckay_counts{0, 0}; // |Irr_{p'}(G)|, |Irr_{p'}(N)|
  std::vector<std::string> notes;
};

// The three equivalent extension/complement criteria, evaluated separately.
struct TheoremCTriple {
  bool pprime_extend = false;     // all p'-degree characters of N extend to G
  bool all_extend = false;        // all characters of N extend to G
  bool complement_exists = false; // some normal K with K*N = G, K cap N = 1
};

// The version of ConjAReport relative to a normal subgroup N and a fixed
// invariant character theta of N: sums run over characters lying over theta
// whose degree ratio chi(1)/theta(1) is coprime to p.
struct RelativeReport {
  std::string group_id;
  std::string normal_id;
  int theta_row = 0;
  long p = 2;
  Int lhs;               // sum of (chi(1)/theta(1))^2 over G-rows over theta
  Int rhs;               // same sum over N * N_G(P)
  bool holds = false;
  bool equality = false;
  // Normal K containing N with K * (N*N_G(P)) = G, K cap (N*N_G(P)) = N,
  // such that theta extends to K; paired with the extending row of Irr(K).
  std::optional<std::pair<PermGroup, int>> complement_with_extension;
  std::vector<std::string> notes;
};

// Both sides of the diagnostic "p'-part of the squared-degree sum equals the
// p'-part of |G| exactly when the Sylow p-subgroup is normal".
struct PPrimePartReport {
  Int lhs;               // sum of chi(1)^2 over p'-degree chi
  Int lhs_pprime_part;   // p'-part of lhs
  Int order_pprime_part; // |G|_{p'}
  bool sylow_normal = false;
  bool consistent = false; // (lhs_pprime_part == order_pprime_part) == sylow_normal
};

// Outcome of the normal-p-complement cross-check over the normal subgroups
// K of G with K cap P = K cap P' (P a Sylow p-subgroup): each such K must
// contain a normal subgroup of order |K|_{p'}.
struct TateReport {
  int eligible = 0; // K satisfying the intersection condition
  int verified = 0; // complement located among normal subgroups of G
  int skipped = 0;  // no candidate found within the searched family
  std::vector<std::string> notes;
};

// Row indices of the characters of p'-degree, in table order.
std::vector<int> irr_pprime(const CharacterTable& t, long p);

// Degree statistics for the p'-degree rows of t.
PPrimeStats pprime_stats(const CharacterTable& t, long p);

// Looks for a row of `big` whose restriction to the subgroup of `sub` equals
// row `psi` of `sub` exactly; returns that row index if one exists.
std::optional<int> extension_row(const CharacterTable& sub, int psi,
                                 const CharacterTable& big);

// Full report for the squared-degree-sum inequality on (G, p).
ConjAReport conjecture_a_report(const PermGroup& g, long p);

// Evaluates the three extension/complement criteria independently and fails
// with EquivalenceViolation if they do not agree.
TheoremCTriple theoremc_equivalence(const PermGroup& g, long p);

// Scans every normal subgroup K of g for K cap h = 1 and |K||h| = |g|;
// fails with UniquenessViolation if two distinct complements show up.
std::optional<PermGroup> complement_uniqueness(const PermGroup& g,
                                               const PermGroup& h);

// Pairs the two degree multisets largest-to-largest; succeeds when every
// paired n-degree is at most its g-degree, and returns the (g, n) pairs in
// descending order. Fails with CountMismatch when the sizes differ.
std::optional<std::vector<std::pair<long, long>>> degree_dominating_bijection(
    std::vector<long> gdegs, std::vector<long> ndegs);

// True when restriction to N_G(P) maps the p'-degree rows of G bijectively
// onto the p'-degree rows of N_G(P).
bool restriction_bijection_check(const PermGroup& g, long p);

// Report for the inequality relative to a normal subgroup n and the
// invariant character row `theta_row` of Irr(n). Fails with NotInvariant or
// NoExtensionToNP when the hypotheses do not hold.
RelativeReport relative_report(const PermGroup& g, const PermGroup& n,
                               int theta_row, long p);

// The p'-part diagnostic on (G, p).
PPrimePartReport pprime_part_test(const PermGroup& g, long p);

// True when the smallest nontrivial p'-degree of G is at least the largest
// p'-degree of N_G(P).
bool hypothesis_check_group(const PermGroup& g, long p);

// Runs the normal-p-complement cross-check described at TateReport.
TateReport tate_crosscheck(const PermGroup& g, long p);

} // namespace exchar

#endif
