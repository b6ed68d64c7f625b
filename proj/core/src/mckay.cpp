#include "exchar/mckay.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "exchar/error.hpp"

namespace exchar {

namespace {

Int squared_degree_sum(const CharacterTable& t, const std::vector<int>& rows) {
  Int sum = 0;
  for (int r : rows) {
    Int d(t.chars[r].degree);
    sum += d * d;
  }
  return sum;
}

// Multiplicity of row `theta` of `sub` in the restriction of row `chi` of
// `big` to the subgroup of `sub`. Exact, and always a nonnegative integer.
Int restriction_multiplicity(const CharacterTable& big, int chi,
                             const CharacterTable& sub, int theta) {
  std::vector<Cyc> restricted = restrict_values(big, chi, sub.classes);
  Cyc ip = inner_product(sub.classes, restricted, sub.chars[theta].values);
  return ip.rational_integer_value();
}

// Sum of (chi(1)/theta(1))^2 over the rows chi of `amb` that contain theta in
// their restriction to `sub` and whose degree ratio is coprime to p. Valid
// only when row theta of `sub` is invariant in the ambient group, so that the
// ratio is an exact integer.
Int relative_squared_sum(const CharacterTable& amb, const CharacterTable& sub,
                         int theta, long p) {
  Int sum = 0;
  long tdeg = sub.chars[theta].degree;
  for (int chi = 0; chi < amb.char_count(); ++chi) {
    if (restriction_multiplicity(amb, chi, sub, theta) == 0) continue;
    Int ratio = exact_div(Int(amb.chars[chi].degree), Int(tdeg));
    if (ratio % p == 0) continue;
    sum += ratio * ratio;
  }
  return sum;
}

} // namespace

std::vector<int> irr_pprime(const CharacterTable& t, long p) {
  std::vector<int> rows;
  for (int r = 0; r < t.char_count(); ++r) {
    if (t.chars[r].degree % p != 0) rows.push_back(r);
  }
  return rows;
}

PPrimeStats pprime_stats(const CharacterTable& t, long p) {
  PPrimeStats st;
  st.p = p;
  st.m = 1;
  st.b = 1;
  st.d = 1;
  for (int r = 0; r < t.char_count(); ++r) {
    long deg = t.chars[r].degree;
    if (deg > 1 && (st.d == 1 || deg < st.d)) st.d = deg;
    if (deg % p != 0) {
      st.degrees.push_back(deg);
      if (deg > st.b) st.b = deg;
      if (deg > 1 && (st.m == 1 || deg < st.m)) st.m = deg;
    }
  }
  return st;
}

std::optional<int> extension_row(const CharacterTable& sub, int psi,
                                 const CharacterTable& big) {
  const Character& target = sub.chars[psi];
  for (int chi = 0; chi < big.char_count(); ++chi) {
    if (big.chars[chi].degree != target.degree) continue;
    if (restrict_values(big, chi, sub.classes) == target.values) return chi;
  }
  return std::nullopt;
}

ConjAReport conjecture_a_report(const PermGroup& g, long p) {
  ConjAReport rep;
  rep.group_id = g.hash();
  rep.p = p;

  const CharacterTable& tg = character_table(g);
  PermGroup sylow = g.sylow_subgroup(p);
  PermGroup normalizer = g.normalizer_of(sylow);
  const CharacterTable& tn = character_table(normalizer);
  PermGroup sylow_derived = sylow.derived_subgroup();

  std::vector<int> grows = irr_pprime(tg, p);
  std::vector<int> nrows = irr_pprime(tn, p);

  rep.lhs = squared_degree_sum(tg, grows);
  rep.rhs = exact_div(normalizer.order(), sylow_derived.order());

  // The normalizer has a normal Sylow p-subgroup, so its p'-degree rows are
  // exactly the rows trivial on P', and their squared degrees must sum to
  // the index |N : P'|. Anything else is an engine bug.
  if (squared_degree_sum(tn, nrows) != rep.rhs) {
    fail(ErrorCode::InternalInconsistency,
         "squared p'-degree sum over the Sylow normalizer of " + rep.group_id +
             " does not equal |N:P'| at p=" + std::to_string(p));
  }

  rep.holds = rep.lhs >= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;
  rep.complement = complement_uniqueness(g, normalizer);

  rep.all_extend = true;
  for (int psi : nrows) {
    if (!extension_row(tn, psi, tg)) {
      rep.all_extend = false;
      break;
    }
  }

  rep.mckay_counts = {static_cast<long>(grows.size()),
                      static_cast<long>(nrows.size())};

  if (g.order() % p != 0) {
    rep.notes.push_back(
        "p does not divide the group order; the Sylow subgroup is trivial "
        "and the comparison degenerates to the whole group");
  }
  return rep;
}

TheoremCTriple theoremc_equivalence(const PermGroup& g, long p) {
  const CharacterTable& tg = character_table(g);
  PermGroup sylow = g.sylow_subgroup(p);
  PermGroup normalizer = g.normalizer_of(sylow);
  const CharacterTable& tn = character_table(normalizer);

  TheoremCTriple triple;

  triple.pprime_extend = true;
  for (int psi : irr_pprime(tn, p)) {
    if (!extension_row(tn, psi, tg)) {
      triple.pprime_extend = false;
      break;
    }
  }

  triple.all_extend = true;
  for (int psi = 0; psi < tn.char_count(); ++psi) {
    if (!extension_row(tn, psi, tg)) {
      triple.all_extend = false;
      break;
    }
  }

  triple.complement_exists = complement_uniqueness(g, normalizer).has_value();

  if (triple.pprime_extend != triple.all_extend ||
      triple.all_extend != triple.complement_exists) {
    std::ostringstream msg;
    msg << "extension/complement criteria disagree on group " << g.hash()
        << " at p=" << p << ": p'-extend=" << triple.pprime_extend
        << " all-extend=" << triple.all_extend
        << " complement=" << triple.complement_exists;
    fail(ErrorCode::EquivalenceViolation, msg.str());
  }
  return triple;
}

std::optional<PermGroup> complement_uniqueness(const PermGroup& g,
                                               const PermGroup& h) {
  std::optional<PermGroup> found;
  for (const PermGroup& k : normal_subgroups(character_table(g))) {
    if (!complements_in(g, k, h)) continue;
    if (found && found->hash() != k.hash()) {
      fail(ErrorCode::UniquenessViolation,
           "two distinct normal complements of order " +
               found->order().str() + " and " + k.order().str() +
               " in group " + g.hash());
    }
    if (!found) found = k;
  }
  return found;
}

std::optional<std::vector<std::pair<long, long>>> degree_dominating_bijection(
    std::vector<long> gdegs, std::vector<long> ndegs) {
  if (gdegs.size() != ndegs.size()) {
    fail(ErrorCode::CountMismatch,
         "degree lists have sizes " + std::to_string(gdegs.size()) + " and " +
             std::to_string(ndegs.size()));
  }
  std::sort(gdegs.begin(), gdegs.end(), std::greater<long>());
  std::sort(ndegs.begin(), ndegs.end(), std::greater<long>());
  std::vector<std::pair<long, long>> pairing;
  pairing.reserve(gdegs.size());
  for (std::size_t i = 0; i < gdegs.size(); ++i) {
    if (ndegs[i] > gdegs[i]) return std::nullopt;
    pairing.emplace_back(gdegs[i], ndegs[i]);
  }
  return pairing;
}

bool restriction_bijection_check(const PermGroup& g, long p) {
  const CharacterTable& tg = character_table(g);
  PermGroup sylow = g.sylow_subgroup(p);
  PermGroup normalizer = g.normalizer_of(sylow);
  const CharacterTable& tn = character_table(normalizer);

  std::vector<int> grows = irr_pprime(tg, p);
  std::vector<int> nrows = irr_pprime(tn, p);
  if (grows.size() != nrows.size()) return false;

  std::set<int> images;
  for (int chi : grows) {
    std::vector<Cyc> restricted = restrict_values(tg, chi, tn.classes);
    int image = -1;
    for (int j = 0; j < tn.char_count(); ++j) {
      if (tn.chars[j].degree != tg.chars[chi].degree) continue;
      if (tn.chars[j].values == restricted) {
        image = j;
        break;
      }
    }
    if (image < 0) return false; // restriction is reducible
    if (!images.insert(image).second) return false; // not injective
  }
  return images == std::set<int>(nrows.begin(), nrows.end());
}

RelativeReport relative_report(const PermGroup& g, const PermGroup& n,
                               int theta_row, long p) {
  if (!n.is_subgroup_of(g)) {
    fail(ErrorCode::NotSubgroup, "relative subgroup is not inside the group");
  }
  if (!n.is_normal_in(g)) {
    fail(ErrorCode::NotNormal, "relative subgroup is not normal");
  }

  const CharacterTable& tg = character_table(g);
  const CharacterTable& tn = character_table(n);
  if (theta_row < 0 || theta_row >= tn.char_count()) {
    fail(ErrorCode::ParseError,
         "character row " + std::to_string(theta_row) + " out of range");
  }

  // Invariance: conjugation by every generator must fix the chosen row as a
  // class function on n.
  for (const Permutation& gen : g.generators()) {
    for (int k = 0; k < tn.classes.class_count(); ++k) {
      int moved = tn.classes.class_of(tn.classes.reps[k].conjugated_by(gen));
      if (!(tn.chars[theta_row].values[moved] ==
            tn.chars[theta_row].values[k])) {
        fail(ErrorCode::NotInvariant,
             "character row " + std::to_string(theta_row) +
                 " is moved by conjugation");
      }
    }
  }

  PermGroup sylow = g.sylow_subgroup(p);
  PermGroup np = n.join_with(sylow);
  if (!extension_row(tn, theta_row, character_table(np))) {
    fail(ErrorCode::NoExtensionToNP,
         "character row " + std::to_string(theta_row) +
             " does not extend to the product with the Sylow subgroup");
  }

  PermGroup normalizer = g.normalizer_of(sylow);
  PermGroup m = n.join_with(normalizer);
  const CharacterTable& tm = character_table(m);

  RelativeReport rep;
  rep.group_id = g.hash();
  rep.normal_id = n.hash();
  rep.theta_row = theta_row;
  rep.p = p;
  rep.lhs = relative_squared_sum(tg, tn, theta_row, p);
  rep.rhs = relative_squared_sum(tm, tn, theta_row, p);
  rep.holds = rep.lhs >= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;

  for (const PermGroup& k : normal_subgroups(tg)) {
    if (!n.is_subgroup_of(k)) continue;
    if (k.intersection_with(m).order() != n.order()) continue;
    if (k.order() * m.order() != g.order() * n.order()) continue;
    std::optional<int> ext = extension_row(tn, theta_row, character_table(k));
    if (!ext) continue;
    rep.complement_with_extension = std::make_pair(k, *ext);
    break;
  }

  if (g.order() % p != 0) {
    rep.notes.push_back(
        "p does not divide the group order; the Sylow subgroup is trivial "
        "and the comparison degenerates to the whole group");
  }
  return rep;
}

PPrimePartReport pprime_part_test(const PermGroup& g, long p) {
  const CharacterTable& tg = character_table(g);
  PPrimePartReport rep;
  rep.lhs = squared_degree_sum(tg, irr_pprime(tg, p));
  rep.lhs_pprime_part = p_prime_part(rep.lhs, p);
  rep.order_pprime_part = p_prime_part(g.order(), p);
  rep.sylow_normal = g.sylow_subgroup(p).is_normal_in(g);
  rep.consistent =
      (rep.lhs_pprime_part == rep.order_pprime_part) == rep.sylow_normal;
  return rep;
}

bool hypothesis_check_group(const PermGroup& g, long p) {
  const CharacterTable& tg = character_table(g);
  PermGroup sylow = g.sylow_subgroup(p);
  PermGroup normalizer = g.normalizer_of(sylow);
  const CharacterTable& tn = character_table(normalizer);
  return pprime_stats(tg, p).m >= pprime_stats(tn, p).b;
}

TateReport tate_crosscheck(const PermGroup& g, long p) {
  TateReport rep;
  PermGroup sylow = g.sylow_subgroup(p);
  PermGroup sylow_derived = sylow.derived_subgroup();
  std::vector<PermGroup> normals = normal_subgroups(character_table(g));
  for (const PermGroup& k : normals) {
    if (k.intersection_with(sylow).order() !=
        k.intersection_with(sylow_derived).order()) {
      continue;
    }
    ++rep.eligible;
    Int target = p_prime_part(k.order(), p);
    bool located = false;
    for (const PermGroup& cand : normals) {
      if (cand.order() == target && cand.is_subgroup_of(k)) {
        located = true;
        break;
      }
    }
    if (located) {
      ++rep.verified;
    } else {
      ++rep.skipped;
      rep.notes.push_back("no normal subgroup of the ambient group realizes "
                          "the p-complement of the normal subgroup of order " +
                          k.order().str());
    }
  }
  return rep;
}

} // namespace exchar
