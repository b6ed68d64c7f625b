#ifndef EXCHAR_LIE_HPP
#define EXCHAR_LIE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exchar/intmath.hpp"

namespace exchar {

// Families of finite groups of Lie type covered by the closed-form
// evaluators. The classical tags denote the simply connected groups
// (SL_n(q), SU_n(q), Sp_{2n}(q), Spin_{2n+1}(q), Spin^±_{2n}(q)); the
// remaining tags denote the Suzuki/Ree and exceptional series.
enum class LieFamily {
  SL,
  SU,
  Sp,
  SpinOdd,
  SpinPlus,
  SpinMinus,
  Suz2B2,
  Ree2G2,
  Ree2F4,
  G2,
  D4_3,
  F4,
  E6,
  E6_2,
  E7,
  E8,
};

const char* lie_family_name(LieFamily family);
std::optional<LieFamily> lie_family_from_name(const std::string& name);

// A concrete group in one of the families: rank parameter n (the subscript
// convention of the tag: Sp has Sp_{2n}, SpinOdd has Spin_{2n+1}, the
// Suzuki/Ree and exceptional families ignore n) over the field with q
// elements, q = p0^f. For the Suzuki/Ree families q is the full odd-exponent
// power (2^{2k+1} or 3^{2k+1}).
struct LieFamilySpec {
  LieFamily family = LieFamily::SL;
  long n = 0;
  long q = 2;
  long p0 = 2;
  int f = 1;
};

// Validates the family-specific rank and field constraints and fills in the
// (p0, f) decomposition. Fails with UnsupportedFamily on a rank outside the
// family's meaning and ParseError on a non-prime-power q.
LieFamilySpec lie_spec(LieFamily family, long n, long q);

// Centralizer of a semisimple element of GU_n(q), described by its parts:
// each unitary part (n_i, d_i) contributes GU_{n_i}(q^{d_i}), each linear
// part (m_j, e_j) contributes GL_{m_j}(q^{2 e_j}).
struct CentralizerShape {
  std::vector<std::pair<long, long>> unitary;
  std::vector<std::pair<long, long>> linear;
  long n = 1; // ambient rank
  long q = 2; // ambient field size
};

// |GL_n(q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - 1).
Int general_linear_order(long n, const Int& q);

// |GU_n(q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - (-1)^i).
Int general_unitary_order(long n, const Int& q);

// Order of the simply connected classical group described by spec; fails
// with UnsupportedFamily for the Suzuki/Ree and exceptional tags.
Int classical_order(const LieFamilySpec& spec);

// The two low-degree character degrees of SU_n(q):
// ((q^n - (-1)^n)/(q+1), (q^n + q(-1)^n)/(q+1)). Requires n >= 3; the pair
// (3, 2) is rejected with ExcludedCase. Both divisions are checked exact.
std::pair<Int, Int> weil_degrees(long n, long q);

// True when the i-th low-degree character of SU_n(q), 1 <= i <= q, is fixed
// by all field automorphisms: (q + 1) | i(p0 - 1).
bool weil_invariance(long i, long q, long p0);

// Product of the classical orders of the parts, with the field sizes
// substituted. Fails with ShapeMismatch when the parts do not fill the
// ambient rank (sum n_i d_i + 2 sum m_j e_j = n).
Int centralizer_order(const CentralizerShape& shape);

// p0'-part of |GU_n(q)| / centralizer_order(shape), the degree of the
// associated semisimple character. Fails with NonDivisible when the claimed
// shape does not divide the ambient order.
Int semisimple_index_pprime(const CentralizerShape& shape);

// Minimal nontrivial character degree; lower_bound marks the families where
// only a lower bound is known.
struct MinimalDegree {
  Int value;
  bool lower_bound = false;
};

// Evaluates the minimal-degree table row for spec; fails with
// OutsideTableConditions when (n, q) violates the row's condition column.
MinimalDegree minimal_degree(const LieFamilySpec& spec);

// Order of a maximally split torus: prod over diagram orbits J of
// (q^{|J|} - 1). Exact for the classical and Suzuki/Ree families; fails
// with UnsupportedFamily for the exceptional series.
Int torus_order(const LieFamilySpec& spec);

// Order of the center of the simply connected group.
Int center_order(const LieFamilySpec& spec);

// torus_order / center_order: the upper bound for the largest p'-degree of
// the Sylow normalizer in defining characteristic.
Int torus_bound(const LieFamilySpec& spec);

// Lower bound for the degree of any non-low-degree character of SU_n(q):
// (q^n + 1)(q^{n-1} - q^2) / ((q + 1)(q^2 - 1)).
Int su_nonweil_lower_bound(long n, long q);

// Defining-characteristic comparison for one spec: bound is the normalizer
// ceiling, degree the minimal-degree value it must not exceed. For SU_n(q)
// with n odd and gcd(n, q+1) = 1 the comparison instead runs in two tiers
// (see the fields); holds reflects the branch actually taken.
struct DefCharReport {
  LieFamilySpec spec;
  bool su_exception = false;
  Int bound;
  Int degree;
  bool holds = false;
  // Populated on the exceptional branch only: (a) every non-maximal
  // normalizer degree (at most tier_a_lhs) must be at most the low character
  // degree tier_a_rhs; (b) the torus order tier_b_lhs must be strictly
  // beaten by the semisimple character degree tier_b_rhs.
  Int tier_a_lhs, tier_a_rhs;
  Int tier_b_lhs, tier_b_rhs;
  std::vector<std::string> notes;
};

DefCharReport defining_char_check(const LieFamilySpec& spec);

// Upper bound for the largest odd degree of the Sylow-2 normalizer, for
// classical spec with q odd: SL_2 gives 3 or 1 by q mod 8, SL_n/SU_n give
// q + 1, Sp gives 3^t (t = ones in the binary expansion of n) or 1 by
// q mod 8, the Spin families give 1 (self-normalizing Sylow).
Int sylow2_normalizer_bound(const LieFamilySpec& spec);

// One inequality instance inside a scan.
struct ScanRow {
  std::string family;
  long n = 0;
  long q = 2;
  long p = 2;
  std::string lhs_name;
  Int lhs;
  std::string rhs_name;
  Int rhs;
  bool holds = false;
  std::vector<std::string> notes;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<std::string> skipped; // cells outside the table conditions
};

// Sylow-2-normalizer bound vs minimal degree over the grid of odd prime
// powers q <= q_max and ranks n_min..n_max (clamped to the family).
ScanReport p2_inequality_scan(LieFamily family, long n_min, long n_max,
                              long q_max);

// Defining-characteristic check over prime powers q <= q_max and ranks
// n_min..n_max; emits the two-tier rows for the SU exception.
ScanReport defining_char_scan(LieFamily family, long n_min, long n_max,
                              long q_max);

// A sporadic group where the largest p'-degree of the Sylow normalizer
// exceeds the smallest nontrivial p'-degree of the group.
struct SporadicRecord {
  std::string name;
  long p = 2;
  long b_val = 1; // largest p'-degree of the Sylow normalizer
  long m_val = 1; // smallest nontrivial p'-degree of the group
};

// The five exceptions, exactly as transcribed.
std::vector<SporadicRecord> sporadic_exceptions();

// The record for (name, p) when that pair is one of the five exceptions.
std::optional<SporadicRecord> sporadic_lookup(const std::string& name, long p);

// Exceptional covering groups: transcribed per-prime normalizer-degree
// bounds together with the group's smallest nontrivial degree; the
// inequality m_val >= bound holds in every record.
struct CoverRecord {
  std::string name;
  long p = 2;
  long bound = 1; // upper bound for the largest p'-degree of the normalizer
  long m_val = 1; // smallest nontrivial degree of the cover
};

std::vector<CoverRecord> exceptional_cover_checks();

// Ceiling for the order of the relative Weyl group acting on a cyclic
// maximal e-torus: 24 in every case except (E8, e = 30), where it is 30.
long weyl_order_ceiling(LieFamily family, long e);

// Ascending prime powers in [2, limit].
std::vector<long> prime_powers_up_to(long limit);

// One row of the transcribed minimal-degree table, for audit output.
struct Table1Row {
  std::string family;
  std::string conditions;
  std::string expression;
  bool lower_bound = false;
};

std::vector<Table1Row> minimal_degree_table();

} // namespace exchar

#endif
