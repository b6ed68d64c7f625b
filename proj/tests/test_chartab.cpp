#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "exchar/chartab.hpp"
#include "exchar/classdata.hpp"
#include "exchar/corpus.hpp"
#include "exchar/error.hpp"
#include "exchar/permgroup.hpp"

using namespace exchar;

namespace {

std::vector<long> degree_multiset(const CharacterTable& t) {
  std::vector<long> d;
  for (const auto& c : t.chars) d.push_back(c.degree);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<long> ones(long k) { return std::vector<long>(k, 1); }

} // namespace

TEST_CASE("frozen irreducible degree multisets for the whole corpus") {
  std::vector<std::pair<std::string, std::vector<long>>> expected = {
      {"C2", ones(2)},       {"C3", ones(3)},   {"C4", ones(4)},
      {"C5", ones(5)},       {"C6", ones(6)},   {"C7", ones(7)},
      {"C8", ones(8)},       {"C9", ones(9)},   {"C12", ones(12)},
      {"C15", ones(15)},     {"V4", ones(4)},   {"C2xC2xC2", ones(8)},
      {"C4xC2", ones(8)},
      {"D8", {1, 1, 1, 1, 2}},
      {"Q8", {1, 1, 1, 1, 2}},
      {"D10", {1, 1, 2, 2}},
      {"D12", {1, 1, 1, 1, 2, 2}},
      {"Dic3", {1, 1, 1, 1, 2, 2}},
      {"S3", {1, 1, 2}},
      {"S4", {1, 1, 2, 3, 3}},
      {"S5", {1, 1, 4, 4, 5, 5, 6}},
      {"S6", {1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16}},
      {"A4", {1, 1, 1, 3}},
      {"A5", {1, 3, 3, 4, 5}},
      {"A6", {1, 5, 5, 8, 8, 9, 10}},
      {"A7", {1, 6, 10, 10, 14, 14, 15, 21, 35}},
      {"F21", {1, 1, 1, 3, 3}},
      {"SL(2,3)", {1, 1, 1, 2, 2, 2, 3}},
      {"GL(2,3)", {1, 1, 2, 2, 2, 3, 3, 4}},
      {"SL(2,5)", {1, 2, 2, 3, 3, 4, 4, 5, 6}},
      {"PSL(2,7)", {1, 3, 3, 6, 7, 8}},
      {"S3xC5", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2}},
  };
  CHECK(expected.size() == builtin_manifest().entries.size());
  for (const auto& [name, degs] : expected) {
    CAPTURE(name);
    const auto& t = character_table(load_group(name));
    CHECK(degree_multiset(t) == degs);
    // sum of squares equals the group order
    Int sum = 0;
    for (const auto& c : t.chars) sum += Int(c.degree) * c.degree;
    CHECK(sum == load_group(name).order());
  }
}

TEST_CASE("canonical class data of A7") {
  const auto& t = character_table(load_group("A7"));
  CHECK(t.classes.sizes ==
        std::vector<long>{1, 105, 70, 280, 630, 504, 210, 360, 360});
  CHECK(t.classes.rep_orders == std::vector<long>{1, 2, 3, 3, 4, 5, 6, 7, 7});
  CHECK(t.classes.exponent == 420);
}

TEST_CASE("row zero is trivial and column zero holds the degrees") {
  for (const char* name : {"S4", "A5", "Q8", "F21"}) {
    CAPTURE(name);
    const auto& t = character_table(load_group(name));
    for (int c = 0; c < t.classes.class_count(); ++c)
      CHECK(t.value(0, c) == Cyc(1));
    for (int r = 0; r < t.char_count(); ++r)
      CHECK(t.value(r, 0) == Cyc(t.chars[r].degree));
  }
}

TEST_CASE("C2 table is fully pinned") {
  const auto& t = character_table(load_group("C2"));
  REQUIRE(t.char_count() == 2);
  CHECK(t.chars[0].values == std::vector<Cyc>{Cyc(1), Cyc(1)});
  CHECK(t.chars[1].values == std::vector<Cyc>{Cyc(1), Cyc(-1)});
}

TEST_CASE("column orthogonality, which the builder does not self-check") {
  for (const char* name : {"S4", "A5", "PSL(2,7)", "SL(2,3)", "D12"}) {
    CAPTURE(name);
    const auto& t = character_table(load_group(name));
    const long n = t.classes.class_count();
    const Int g_order = t.classes.group.order();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Cyc sum;
        for (int r = 0; r < t.char_count(); ++r)
          sum += t.value(r, i) * t.value(r, j).conjugate();
        if (i == j) {
          // centralizer order |G| / |class|
          CHECK(sum == Cyc(Int(g_order / t.classes.sizes[i])));
        } else {
          CHECK(sum.is_zero());
        }
      }
    }
  }
}

TEST_CASE("row orthogonality through the public inner product") {
  const auto& t = character_table(load_group("SL(2,5)"));
  for (int a = 0; a < t.char_count(); ++a)
    for (int b = 0; b < t.char_count(); ++b)
      CHECK(inner_product(t.classes, t.chars[a].values, t.chars[b].values) ==
            (a == b ? Cyc(1) : Cyc(0)));
}

TEST_CASE("golden-ratio values of the degree-3 rows of A5 are exact") {
  const auto& t = character_table(load_group("A5"));
  std::vector<int> five_classes;
  for (int c = 0; c < t.classes.class_count(); ++c)
    if (t.classes.rep_orders[c] == 5) five_classes.push_back(c);
  REQUIRE(five_classes.size() == 2);
  int found = 0;
  for (const auto& chi : t.chars) {
    if (chi.degree != 3) continue;
    ++found;
    Cyc a = chi.values[five_classes[0]];
    Cyc b = chi.values[five_classes[1]];
    // the two values are the roots of x^2 - x - 1
    CHECK(a + b == Cyc(1));
    CHECK(a * b == Cyc(-1));
    CHECK(a != b);
    CHECK(a.conductor() == 5);
  }
  CHECK(found == 2);
}

TEST_CASE("class-algebra structure constants match brute-force counting") {
  // a_{ijk} = #{(x, y) in C_i x C_j : x y = z_k} must equal
  // |C_i| |C_j| / |G| * sum over chi of chi(i) chi(j) conj(chi(k)) / chi(1).
  for (const char* name : {"S4", "A5"}) {
    CAPTURE(name);
    PermGroup g = load_group(name);
    const auto& t = character_table(g);
    const auto& cd = t.classes;
    const int n = cd.class_count();
    std::vector<std::vector<Permutation>> members(n);
    for (const auto& x : g.elements()) members[cd.class_of(x)].push_back(x);
    for (int i = 0; i < n; ++i)
      CHECK(static_cast<long>(members[i].size()) == cd.sizes[i]);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          long count = 0;
          for (const auto& x : members[i])
            for (const auto& y : members[j])
              if (x * y == cd.reps[k]) ++count;
          Cyc sum;
          for (const auto& chi : t.chars)
            sum += chi.values[i] * chi.values[j] *
                   chi.values[k].conjugate() * Cyc(Rat(1, chi.degree));
          Cyc predicted =
              Cyc(Rat(Int(cd.sizes[i]) * cd.sizes[j], g.order())) * sum;
          CHECK(predicted == Cyc(count));
        }
      }
    }
  }
}

TEST_CASE("restriction of the degree-5 row of A5 to a point stabilizer") {
  PermGroup a5 = load_group("A5");
  PermGroup a4 = PermGroup::from_generators(
      {Permutation::parse_cycles("(1,2,3)", 5),
       Permutation::parse_cycles("(2,3,4)", 5)},
      5);
  REQUIRE(a4.order() == 12);
  REQUIRE(a4.is_subgroup_of(a5));
  const auto& big = character_table(a5);
  const auto& small = character_table(a4);
  int deg5 = -1;
  for (int r = 0; r < big.char_count(); ++r)
    if (big.chars[r].degree == 5) deg5 = r;
  REQUIRE(deg5 >= 0);
  auto res = restrict_values(big, deg5, small.classes);
  // decomposition: both nontrivial linear rows and the degree-3 row, each once
  std::vector<long> mult;
  for (const auto& psi : small.chars)
    mult.push_back(
        inner_product(small.classes, res, psi.values).rational_integer_value()
            .convert_to<long>());
  CHECK(mult == std::vector<long>{0, 1, 1, 1});
}

TEST_CASE("restriction of a degree-3 row of S4 to a Sylow 2-subgroup") {
  PermGroup s4 = load_group("S4");
  PermGroup d8 = s4.sylow_subgroup(2);
  REQUIRE(d8.order() == 8);
  const auto& big = character_table(s4);
  auto sub_cd = conjugacy_classes(d8);
  for (int r = 0; r < big.char_count(); ++r) {
    if (big.chars[r].degree != 3) continue;
    auto res = restrict_values(big, r, sub_cd);
    CHECK(inner_product(sub_cd, res, res) == Cyc(2));
  }
}

TEST_CASE("frobenius reciprocity between A4 and A5") {
  PermGroup a5 = load_group("A5");
  PermGroup a4 = PermGroup::from_generators(
      {Permutation::parse_cycles("(1,2,3)", 5),
       Permutation::parse_cycles("(2,3,4)", 5)},
      5);
  const auto& big = character_table(a5);
  const auto& small = character_table(a4);
  for (int i = 0; i < small.char_count(); ++i) {
    auto ind = induce_values(small.classes, small.chars[i].values, big.classes);
    CHECK(ind[0] == Cyc(5 * small.chars[i].degree)); // degree scales by index
    for (int j = 0; j < big.char_count(); ++j) {
      Cyc up = inner_product(big.classes, ind, big.chars[j].values);
      Cyc down = inner_product(small.classes, small.chars[i].values,
                               restrict_values(big, j, small.classes));
      CHECK(up == down);
    }
  }
}

TEST_CASE("kernels of rows are the expected normal subgroups") {
  PermGroup s4 = load_group("S4");
  const auto& t = character_table(s4);
  // row 1 is the sign character (linear, second in sort order)
  REQUIRE(t.chars[1].degree == 1);
  PermGroup ker = kernel_subgroup(t, 1);
  CHECK(ker.order() == 12);
  CHECK(ker.hash() == s4.derived_subgroup().hash());
  int deg2 = -1;
  for (int r = 0; r < t.char_count(); ++r)
    if (t.chars[r].degree == 2) deg2 = r;
  PermGroup v4 = kernel_subgroup(t, deg2);
  CHECK(v4.order() == 4);
  CHECK(v4.is_normal_in(s4));
  CHECK(v4.is_abelian());
  // faithful row: trivial kernel
  int deg3 = -1;
  for (int r = 0; r < t.char_count(); ++r)
    if (t.chars[r].degree == 3) deg3 = r;
  CHECK(kernel_subgroup(t, deg3).order() == 1);
}

TEST_CASE("normal subgroup lattices recovered from kernels") {
  auto orders = [](const std::vector<PermGroup>& ns) {
    std::vector<long> o;
    for (const auto& h : ns) o.push_back(h.order_long());
    return o;
  };
  CHECK(orders(normal_subgroups(character_table(load_group("S4")))) ==
        std::vector<long>{1, 4, 12, 24});
  CHECK(orders(normal_subgroups(character_table(load_group("A5")))) ==
        std::vector<long>{1, 60});
  CHECK(orders(normal_subgroups(character_table(load_group("SL(2,3)")))) ==
        std::vector<long>{1, 2, 8, 24});
  CHECK(orders(normal_subgroups(character_table(load_group("Q8")))) ==
        std::vector<long>{1, 2, 4, 4, 4, 8});
  CHECK(orders(normal_subgroups(character_table(load_group("C6")))) ==
        std::vector<long>{1, 2, 3, 6});
  for (const auto& h : normal_subgroups(character_table(load_group("S4"))))
    CHECK(h.is_normal_in(load_group("S4")));
}

TEST_CASE("class fusion from a subgroup into the parent") {
  PermGroup a5 = load_group("A5");
  PermGroup a4 = PermGroup::from_generators(
      {Permutation::parse_cycles("(1,2,3)", 5),
       Permutation::parse_cycles("(2,3,4)", 5)},
      5);
  auto sub = conjugacy_classes(a4);
  auto big = conjugacy_classes(a5);
  auto fusion = class_fusion(sub, big);
  REQUIRE(fusion.size() == 4);
  CHECK(fusion[0] == 0);
  // the two subgroup classes of 3-cycles land in the single parent class
  CHECK(sub.rep_orders[2] == 3);
  CHECK(sub.rep_orders[3] == 3);
  CHECK(fusion[2] == fusion[3]);
  CHECK(fusion[1] != fusion[2]);
  for (std::size_t k = 0; k < fusion.size(); ++k)
    CHECK(big.rep_orders[fusion[k]] == sub.rep_orders[k]);
}

TEST_CASE("power maps inside class data") {
  auto cd = conjugacy_classes(load_group("A5"));
  for (int k = 0; k < cd.class_count(); ++k) {
    CHECK(cd.power_class(k, 1) == k);
    CHECK(cd.power_class(k, cd.rep_orders[k]) == 0);
    CHECK(cd.power_class(k, cd.rep_orders[k] + 1) == k);
  }
  // squaring a 5-class of A5 moves between the two 5-classes
  std::vector<int> fives;
  for (int k = 0; k < cd.class_count(); ++k)
    if (cd.rep_orders[k] == 5) fives.push_back(k);
  REQUIRE(fives.size() == 2);
  CHECK(cd.power_class(fives[0], 2) == fives[1]);
  CHECK(cd.power_class(fives[1], 2) == fives[0]);
}

TEST_CASE("memoization computes each table once per process") {
  PermGroup c11 = PermGroup::from_generators(
      {Permutation::parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11)}, 11);
  long before = table_computations();
  const auto& t1 = character_table(c11);
  CHECK(table_computations() == before + 1);
  const auto& t2 = character_table(c11);
  CHECK(table_computations() == before + 1);
  CHECK(&t1 == &t2);
  // a regenerated copy of the same group hits the same cache entry
  PermGroup again = PermGroup::from_generators(
      {Permutation::parse_cycles("(1,3,5,7,9,11,2,4,6,8,10)", 11)}, 11);
  REQUIRE(again.hash() == c11.hash());
  character_table(again);
  CHECK(table_computations() == before + 1);
}
