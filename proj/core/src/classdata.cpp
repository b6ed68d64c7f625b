#include "exchar/classdata.hpp"

#include <algorithm>
#include <numeric>

#include "exchar/error.hpp"
#include "exchar/intmath.hpp"

namespace exchar {

int ClassData::class_of(const Permutation& g) const {
  auto it = index.find(g);
  if (it == index.end()) {
    fail(ErrorCode::GroupMismatch, "element does not belong to the group");
  }
  return it->second;
}

int ClassData::power_class(int k, long t) const {
  return class_of(reps[k].power(t));
}

ClassData conjugacy_classes(const PermGroup& g) {
  ClassData cd;
  cd.group = g;
  const auto& elems = g.sorted_elements();

  std::unordered_map<Permutation, int, PermHash> position;
  position.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    position.emplace(elems[i], static_cast<int>(i));
  }

  // Conjugation orbits, discovered in lexicographic element order so each
  // orbit is first met at its least element.
  struct RawClass {
    Permutation rep;
    long rep_order = 1;
    std::vector<int> members;
  };
  std::vector<RawClass> raw;
  std::vector<char> seen(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    RawClass rc;
    rc.rep = elems[i];
    rc.rep_order = rc.rep.order();
    rc.members.push_back(static_cast<int>(i));
    seen[i] = 1;
    for (std::size_t head = 0; head < rc.members.size(); ++head) {
      const Permutation& x = elems[rc.members[head]];
      for (const auto& s : g.generators()) {
        Permutation y = x.conjugated_by(s);
        int idx = position.at(y);
        if (!seen[idx]) {
          seen[idx] = 1;
          rc.members.push_back(idx);
        }
      }
    }
    raw.push_back(std::move(rc));
  }

  std::vector<int> by_key(raw.size());
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(), [&raw](int a, int b) {
    if (raw[a].rep_order != raw[b].rep_order) {
      return raw[a].rep_order < raw[b].rep_order;
    }
    if (raw[a].members.size() != raw[b].members.size()) {
      return raw[a].members.size() < raw[b].members.size();
    }
    return raw[a].rep < raw[b].rep;
  });

  cd.index.reserve(elems.size() * 2);
  for (std::size_t k = 0; k < by_key.size(); ++k) {
    const RawClass& rc = raw[by_key[k]];
    cd.reps.push_back(rc.rep);
    cd.sizes.push_back(static_cast<long>(rc.members.size()));
    cd.rep_orders.push_back(rc.rep_order);
    cd.exponent = lcm_long(cd.exponent, rc.rep_order);
    for (int idx : rc.members) {
      cd.index.emplace(elems[idx], static_cast<int>(k));
    }
  }
  for (int k = 0; k < cd.class_count(); ++k) {
    cd.inverse_classes.push_back(cd.class_of(cd.reps[k].inverse()));
  }
  return cd;
}

std::vector<int> class_fusion(const ClassData& sub, const ClassData& big) {
  if (sub.group.degree() != big.group.degree()) {
    fail(ErrorCode::GroupMismatch, "class fusion across different degrees");
  }
  std::vector<int> fusion;
  fusion.reserve(sub.reps.size());
  for (const auto& rep : sub.reps) fusion.push_back(big.class_of(rep));
  return fusion;
}

bool complements_in(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  if (!a.is_subgroup_of(g) || !b.is_subgroup_of(g)) return false;
  if (a.intersection_with(b).order() != 1) return false;
  return a.order() * b.order() == g.order();
}

} // namespace exchar
