#include "doctest.h"

#include <algorithm>
#include <vector>

#include "exchar/chartab.hpp"
#include "exchar/corpus.hpp"
#include "exchar/error.hpp"
#include "exchar/mckay.hpp"
#include "exchar/permgroup.hpp"

using namespace exchar;

namespace {

std::vector<long> pprime_degrees(const char* name, long p) {
  const auto& t = character_table(load_group(name));
  std::vector<long> d;
  for (int r : irr_pprime(t, p)) d.push_back(t.chars[r].degree);
  std::sort(d.begin(), d.end());
  return d;
}

} // namespace

TEST_CASE("rows of degree coprime to p") {
  CHECK(pprime_degrees("A5", 2) == std::vector<long>{1, 3, 3, 5});
  CHECK(pprime_degrees("A5", 3) == std::vector<long>{1, 4, 5});
  CHECK(pprime_degrees("A5", 5) == std::vector<long>{1, 3, 3, 4});
  CHECK(pprime_degrees("GL(2,3)", 3) == std::vector<long>{1, 1, 2, 2, 2, 4});
  CHECK(pprime_degrees("S4", 2) == std::vector<long>{1, 1, 3, 3});
  CHECK(pprime_degrees("C6", 7) == std::vector<long>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("degree statistics") {
  auto st = pprime_stats(character_table(load_group("A5")), 2);
  CHECK(st.d == 3);
  CHECK(st.m == 3);
  CHECK(st.b == 5);
  auto c6 = pprime_stats(character_table(load_group("C6")), 2);
  CHECK(c6.d == 1);
  CHECK(c6.m == 1);
  CHECK(c6.b == 1);
  auto sl = pprime_stats(character_table(load_group("SL(2,3)")), 3);
  CHECK(sl.d == 2);
  CHECK(sl.m == 2);
  CHECK(sl.b == 2);
}

TEST_CASE("pinned inequality reports") {
  PermGroup a5 = load_group("A5");
  auto r = conjecture_a_report(a5, 2);
  CHECK(r.lhs == 44);
  CHECK(r.rhs == 12);
  CHECK(r.holds);
  CHECK_FALSE(r.equality);
  CHECK_FALSE(r.complement.has_value());
  CHECK_FALSE(r.all_extend);
  CHECK(r.mckay_counts == std::pair<long, long>{4, 4});
  CHECK(r.group_id == a5.hash());

  auto s3 = conjecture_a_report(load_group("S3"), 3);
  CHECK(s3.lhs == 6);
  CHECK(s3.rhs == 6);
  CHECK(s3.equality);
  REQUIRE(s3.complement.has_value());
  CHECK(s3.complement->order() == 1);
  CHECK(s3.all_extend);

  auto f21 = conjecture_a_report(load_group("F21"), 3);
  CHECK(f21.lhs == 3);
  CHECK(f21.rhs == 3);
  CHECK(f21.equality);
  REQUIRE(f21.complement.has_value());
  CHECK(f21.complement->order() == 7);

  auto gl = conjecture_a_report(load_group("GL(2,3)"), 3);
  CHECK(gl.lhs == 30);
  CHECK(gl.rhs == 12);
  CHECK_FALSE(gl.equality);
  CHECK_FALSE(gl.complement.has_value());

  auto a57 = conjecture_a_report(load_group("A5"), 7);
  CHECK(a57.lhs == 60);
  CHECK(a57.rhs == 60);
  CHECK(a57.equality);
  REQUIRE(a57.complement.has_value());
  CHECK(a57.complement->order() == 1);

  auto a55 = conjecture_a_report(load_group("A5"), 5);
  CHECK(a55.lhs == 35);
  CHECK(a55.rhs == 10);
  CHECK(a55.holds);
  CHECK(a55.mckay_counts == std::pair<long, long>{4, 4});
}

TEST_CASE("three-way equivalence evaluates without violations") {
  auto c6 = theoremc_equivalence(load_group("C6"), 3);
  CHECK(c6.pprime_extend);
  CHECK(c6.all_extend);
  CHECK(c6.complement_exists);

  auto a5 = theoremc_equivalence(load_group("A5"), 2);
  CHECK_FALSE(a5.pprime_extend);
  CHECK_FALSE(a5.all_extend);
  CHECK_FALSE(a5.complement_exists);

  auto sl = theoremc_equivalence(load_group("SL(2,3)"), 3);
  CHECK_FALSE(sl.pprime_extend);
  CHECK_FALSE(sl.all_extend);
  CHECK_FALSE(sl.complement_exists);

  auto f21 = theoremc_equivalence(load_group("F21"), 3);
  CHECK(f21.pprime_extend);
  CHECK(f21.all_extend);
  CHECK(f21.complement_exists);
}

TEST_CASE("complements to a fixed subgroup are unique when they exist") {
  PermGroup s3 = load_group("S3");
  PermGroup two = PermGroup::from_generators(
      {Permutation::parse_cycles("(1,2)", 3)}, 3);
  auto k = complement_uniqueness(s3, two);
  REQUIRE(k.has_value());
  CHECK(k->order() == 3);
  CHECK(k->is_normal_in(s3));

  PermGroup a5 = load_group("A5");
  PermGroup a4 = PermGroup::from_generators(
      {Permutation::parse_cycles("(1,2,3)", 5),
       Permutation::parse_cycles("(2,3,4)", 5)},
      5);
  CHECK_FALSE(complement_uniqueness(a5, a4).has_value());

  PermGroup c6 = load_group("C6");
  PermGroup c2 = c6.sylow_subgroup(2);
  auto k3 = complement_uniqueness(c6, c2);
  REQUIRE(k3.has_value());
  CHECK(k3->order() == 3);
}

TEST_CASE("largest-to-largest degree pairing") {
  auto same = degree_dominating_bijection({1, 2, 3}, {1, 2, 3});
  REQUIRE(same.has_value());
  CHECK(*same == std::vector<std::pair<long, long>>{{3, 3}, {2, 2}, {1, 1}});

  auto a5 = degree_dominating_bijection({1, 3, 3, 5}, {1, 1, 1, 3});
  REQUIRE(a5.has_value());
  CHECK(*a5 ==
        std::vector<std::pair<long, long>>{{5, 3}, {3, 1}, {3, 1}, {1, 1}});

  auto gl = degree_dominating_bijection({1, 1, 2, 2, 2, 4}, {1, 1, 1, 1, 2, 2});
  CHECK(gl.has_value());

  CHECK_FALSE(degree_dominating_bijection({1, 1, 2}, {1, 1, 3}).has_value());
  CHECK_THROWS_AS(degree_dominating_bijection({1, 2}, {1}), Error);
}

TEST_CASE("restriction bijection onto the normalizer") {
  CHECK_FALSE(restriction_bijection_check(load_group("A5"), 2));
  CHECK(restriction_bijection_check(load_group("S3"), 3));
  CHECK(restriction_bijection_check(load_group("C6"), 3));
  CHECK(restriction_bijection_check(load_group("F21"), 3));
}

TEST_CASE("extension rows") {
  PermGroup s3 = load_group("S3");
  PermGroup a3 = s3.derived_subgroup();
  const auto& big = character_table(s3);
  const auto& small = character_table(a3);
  // the trivial row always extends to the trivial row
  auto row = extension_row(small, 0, big);
  REQUIRE(row.has_value());
  CHECK(*row == 0);
  // a nontrivial row of C3 does not extend to S3 (it is not invariant)
  CHECK_FALSE(extension_row(small, 1, big).has_value());
}

TEST_CASE("relative report over the center with a fixed faithful row") {
  PermGroup g = load_group("SL(2,3)");
  PermGroup z = g.center();
  REQUIRE(z.order() == 2);
  // row 1 of Irr(Z) is the faithful character of the order-2 center
  auto rel = relative_report(g, z, 1, 3);
  CHECK(rel.lhs == 12);
  CHECK(rel.rhs == 3);
  CHECK(rel.holds);
  CHECK_FALSE(rel.equality);
  CHECK_FALSE(rel.complement_with_extension.has_value());
  CHECK(rel.normal_id == z.hash());
  CHECK(rel.theta_row == 1);
}

TEST_CASE("relative report with trivial data reduces to the absolute one") {
  for (const char* name : {"S4", "A5", "SL(2,3)", "F21"}) {
    CAPTURE(name);
    PermGroup g = load_group(name);
    for (long p : prime_factors(g.order_long())) {
      CAPTURE(p);
      auto abs = conjecture_a_report(g, p);
      auto rel = relative_report(g, PermGroup::trivial(g.degree()), 0, p);
      CHECK(rel.lhs == abs.lhs);
      CHECK(rel.rhs == abs.rhs);
      CHECK(rel.holds == abs.holds);
      CHECK(rel.equality == abs.equality);
      CHECK(rel.complement_with_extension.has_value() ==
            abs.complement.has_value());
      if (rel.complement_with_extension && abs.complement)
        CHECK(rel.complement_with_extension->first.hash() ==
              abs.complement->hash());
    }
  }
}

TEST_CASE("relative report rejects a non-invariant row") {
  PermGroup s3 = load_group("S3");
  PermGroup a3 = s3.derived_subgroup();
  CHECK_THROWS_AS(relative_report(s3, a3, 1, 2), Error);
  try {
    relative_report(s3, a3, 1, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvariant);
  }
}

TEST_CASE("p-prime-part diagnostic") {
  auto s3 = pprime_part_test(load_group("S3"), 3);
  CHECK(s3.lhs == 6);
  CHECK(s3.lhs_pprime_part == 2);
  CHECK(s3.order_pprime_part == 2);
  CHECK(s3.sylow_normal);
  CHECK(s3.consistent);

  auto a5 = pprime_part_test(load_group("A5"), 2);
  CHECK(a5.lhs == 44);
  CHECK(a5.lhs_pprime_part == 11);
  CHECK(a5.order_pprime_part == 15);
  CHECK_FALSE(a5.sylow_normal);
  CHECK(a5.consistent);
}

TEST_CASE("smallest-nontrivial versus largest degree hypothesis") {
  CHECK(hypothesis_check_group(load_group("S4"), 2));
  CHECK(hypothesis_check_group(load_group("A5"), 2));
  CHECK(hypothesis_check_group(load_group("A5"), 5));
  CHECK(hypothesis_check_group(load_group("GL(2,3)"), 3));
}

TEST_CASE("normal p-complement cross-check") {
  auto s3 = tate_crosscheck(load_group("S3"), 3);
  CHECK(s3.eligible == 1);
  CHECK(s3.verified == 1);
  CHECK(s3.skipped == 0);

  auto c6 = tate_crosscheck(load_group("C6"), 3);
  CHECK(c6.eligible == 2);
  CHECK(c6.verified == 2);
  CHECK(c6.skipped == 0);

  auto a5 = tate_crosscheck(load_group("A5"), 2);
  CHECK(a5.eligible == 1);
  CHECK(a5.verified == 1);
  CHECK(a5.skipped == 0);
}

TEST_CASE("normalizer equality forces the trivial complement") {
  // When the Sylow subgroup is normal the ambient group is its own
  // normalizer and the only subgroup K with K*G = G, K cap G = 1 is trivial.
  auto c6 = conjecture_a_report(load_group("C6"), 3);
  CHECK(c6.equality);
  REQUIRE(c6.complement.has_value());
  CHECK(c6.complement->order() == 1);
  auto q8 = conjecture_a_report(load_group("Q8"), 2);
  CHECK(q8.equality);
  REQUIRE(q8.complement.has_value());
  CHECK(q8.complement->order() == 1);
}

TEST_CASE("mckay counts agree on the full corpus") {
  for (const auto& entry : builtin_manifest().entries) {
    PermGroup g = load_group(entry.name);
    for (long p : prime_factors(g.order_long())) {
      CAPTURE(entry.name);
      CAPTURE(p);
      auto r = conjecture_a_report(g, p);
      CHECK(r.mckay_counts.first == r.mckay_counts.second);
      CHECK(r.holds);
    }
  }
}
