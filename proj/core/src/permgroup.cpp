#include "exchar/permgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "exchar/error.hpp"
#include "exchar/sha256.hpp"

namespace exchar {

namespace {

int smallest_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p[i] != i) return i;
  }
  fail(ErrorCode::InternalInconsistency, "identity has no moved point");
}

} // namespace

long PermGroup::order_cap() {
  if (const char* env = std::getenv("EXCHAR_ORDER_CAP")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 20000;
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree); }

PermGroup PermGroup::from_generators(std::vector<Permutation> gens, int degree) {
  PermGroup g(degree);
  for (auto& p : gens) {
    if (p.degree() != degree) {
      fail(ErrorCode::GroupMismatch, "generator degree differs from group degree");
    }
    if (p.is_identity()) continue;
    if (std::find(g.gens_.begin(), g.gens_.end(), p) != g.gens_.end()) continue;
    g.gens_.push_back(std::move(p));
  }
  for (const auto& p : g.gens_) g.insert_element(p);
  return g;
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens) {
  if (gens.empty()) {
    fail(ErrorCode::GroupMismatch, "cannot infer degree from an empty generator list");
  }
  int degree = gens.front().degree();
  return from_generators(std::move(gens), degree);
}

void PermGroup::insert_element(const Permutation& g) {
  auto [r, lvl] = strip(g, 0);
  if (r.is_identity()) return;
  place_residue(lvl, r);
  certify();
  invalidate_caches();
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g,
                                                     std::size_t from) const {
  for (std::size_t lvl = from; lvl < levels_.size(); ++lvl) {
    const Level& L = levels_[lvl];
    int pt = g[L.base];
    auto it = L.transversal.find(pt);
    if (it == L.transversal.end()) return {std::move(g), lvl};
    g = g * it->second.inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::place_residue(std::size_t lvl, const Permutation& r) {
  if (lvl == levels_.size()) {
    Level fresh;
    fresh.base = smallest_moved_point(r);
    levels_.push_back(std::move(fresh));
  }
  levels_[lvl].gens.push_back(r);
}

std::vector<const Permutation*> PermGroup::cumulative_gens(std::size_t lvl) const {
  std::vector<const Permutation*> out;
  for (std::size_t j = lvl; j < levels_.size(); ++j) {
    for (const auto& g : levels_[j].gens) out.push_back(&g);
  }
  return out;
}

void PermGroup::recompute_orbit(std::size_t lvl) {
  Level& L = levels_[lvl];
  L.orbit.clear();
  L.transversal.clear();
  auto gens = cumulative_gens(lvl);
  L.orbit.push_back(L.base);
  L.transversal.emplace(L.base, Permutation(degree_));
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    int pt = L.orbit[head];
    Permutation u = L.transversal.at(pt);
    for (const Permutation* s : gens) {
      int img = (*s)[pt];
      if (L.transversal.find(img) == L.transversal.end()) {
        L.orbit.push_back(img);
        L.transversal.emplace(img, u * *s);
      }
    }
  }
}

// Fixpoint form of Schreier-Sims: recompute every orbit, then look for a
// Schreier generator that does not sift to the identity. Each residue found
// strictly enlarges the subgroup known at its level, so the loop terminates;
// on exit, every level satisfies the orbit-stabilizer property and the chain
// order is exact.
void PermGroup::certify() {
  for (;;) {
    for (std::size_t l = 0; l < levels_.size(); ++l) recompute_orbit(l);
    bool added = false;
    for (std::size_t l = levels_.size(); l-- > 0;) {
      const std::vector<int> orbit = levels_[l].orbit;
      const int base = levels_[l].base;
      std::vector<Permutation> gens;
      for (const Permutation* g : cumulative_gens(l)) gens.push_back(*g);
      for (int pt : orbit) {
        const Permutation u = levels_[l].transversal.at(pt);
        for (const Permutation& s : gens) {
          Permutation sg = u * s;
          Permutation schreier = sg * levels_[l].transversal.at(sg[base]).inverse();
          if (schreier.is_identity()) continue;
          auto [r, stop] = strip(std::move(schreier), l + 1);
          if (r.is_identity()) continue;
          place_residue(stop, r);
          added = true;
          break;
        }
        if (added) break;
      }
      if (added) break;
    }
    if (!added) return;
  }
}

void PermGroup::invalidate_caches() {
  elements_cache_.clear();
  sorted_cache_.clear();
  hash_cache_.clear();
}

Int PermGroup::order() const {
  Int n = 1;
  for (const auto& L : levels_) n *= static_cast<long>(L.orbit.size());
  return n;
}

long PermGroup::order_long() const {
  Int n = order();
  if (n > std::numeric_limits<long>::max()) {
    fail(ErrorCode::OrderCapExceeded, "group order does not fit in a machine word");
  }
  return static_cast<long>(n);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    }
  }
  return true;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    fail(ErrorCode::GroupMismatch, "membership test across different degrees");
  }
  auto [r, lvl] = strip(p, 0);
  (void)lvl;
  return r.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  for (const auto& x : gens_) {
    if (!g.contains(x)) return false;
  }
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  if (!is_subgroup_of(g)) return false;
  for (const auto& x : g.gens_) {
    for (const auto& h : gens_) {
      if (!contains(h.conjugated_by(x))) return false;
    }
  }
  return true;
}

long PermGroup::enumerable_order() const {
  long cap = order_cap();
  Int n = order();
  if (n > cap) {
    fail(ErrorCode::OrderCapExceeded,
         "group of order " + n.str() + " exceeds the enumeration cap " +
             std::to_string(cap));
  }
  return static_cast<long>(n);
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (!elements_cache_.empty()) return elements_cache_;
  long n = enumerable_order();
  std::vector<Permutation> elems{Permutation(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<int> pts = levels_[l].orbit;
    std::sort(pts.begin(), pts.end());
    std::vector<Permutation> next;
    next.reserve(elems.size() * pts.size());
    for (int pt : pts) {
      const Permutation& u = levels_[l].transversal.at(pt);
      for (const auto& h : elems) next.push_back(h * u);
    }
    elems = std::move(next);
  }
  if (static_cast<long>(elems.size()) != n) {
    fail(ErrorCode::InternalInconsistency, "chain enumeration size mismatch");
  }
  elements_cache_ = std::move(elems);
  return elements_cache_;
}

const std::vector<Permutation>& PermGroup::sorted_elements() const {
  if (!sorted_cache_.empty()) return sorted_cache_;
  sorted_cache_ = elements();
  std::sort(sorted_cache_.begin(), sorted_cache_.end());
  return sorted_cache_;
}

const std::string& PermGroup::hash() const {
  if (!hash_cache_.empty()) return hash_cache_;
  std::string blob = "degree " + std::to_string(degree_) + "\n";
  for (const auto& p : sorted_elements()) {
    const auto& im = p.images();
    for (std::size_t i = 0; i < im.size(); ++i) {
      if (i > 0) blob += ',';
      blob += std::to_string(im[i]);
    }
    blob += '\n';
  }
  hash_cache_ = sha256_hex(blob);
  return hash_cache_;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Permutation> comms;
  for (const auto& a : gens_) {
    for (const auto& b : gens_) {
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) comms.push_back(c);
    }
  }
  return from_generators(std::move(comms), degree_).normal_closure_in(*this);
}

PermGroup PermGroup::normal_closure_in(const PermGroup& g) const {
  if (degree_ != g.degree_) {
    fail(ErrorCode::GroupMismatch, "normal closure across different degrees");
  }
  PermGroup cl = *this;
  for (;;) {
    std::vector<Permutation> add;
    for (const auto& h : cl.generators()) {
      for (const auto& x : g.generators()) {
        Permutation c = h.conjugated_by(x);
        if (!cl.contains(c)) add.push_back(c);
      }
    }
    if (add.empty()) return cl;
    std::vector<Permutation> ng = cl.generators();
    ng.insert(ng.end(), add.begin(), add.end());
    cl = from_generators(std::move(ng), degree_);
  }
}

PermGroup PermGroup::sylow_subgroup(long p) const {
  if (!is_prime(p)) {
    fail(ErrorCode::InternalInconsistency, "sylow_subgroup requires a prime");
  }
  Int full = p_part(order(), p);
  if (full == 1) return trivial(degree_);

  // Seed with the p-part of the first p-singular element in chain order.
  PermGroup q = trivial(degree_);
  for (const auto& g : elements()) {
    long o = g.order();
    if (o % p != 0) continue;
    long m = o;
    while (m % p == 0) m /= p;
    q = from_generators({g.power(m)}, degree_);
    break;
  }
  if (q.is_trivial()) {
    fail(ErrorCode::InternalInconsistency, "no p-element found although p divides the order");
  }

  // Ascend: while Q is not yet a full Sylow p-subgroup, its normalizer
  // contains a p-element outside Q, and adjoining the p-part of such an
  // element keeps Q a p-group (Q is normal in the extension, with cyclic
  // p-quotient on top).
  while (q.order() < full) {
    PermGroup nq = normalizer_of(q);
    bool extended = false;
    for (const auto& x : nq.sorted_elements()) {
      long o = x.order();
      if (o % p != 0) continue;
      long m = o;
      while (m % p == 0) m /= p;
      Permutation y = x.power(m);
      if (y.is_identity() || q.contains(y)) continue;
      std::vector<Permutation> ng = q.generators();
      ng.push_back(std::move(y));
      q = from_generators(std::move(ng), degree_);
      extended = true;
      break;
    }
    if (!extended) {
      fail(ErrorCode::InternalInconsistency, "sylow ascent stalled below the full p-part");
    }
  }
  return q;
}

PermGroup PermGroup::normalizer_of(const PermGroup& h) const {
  if (h.degree_ != degree_) {
    fail(ErrorCode::GroupMismatch, "normalizer across different degrees");
  }
  PermGroup result = trivial(degree_);
  for (const auto& g : sorted_elements()) {
    if (result.contains(g)) continue;
    bool normalizes = true;
    for (const auto& x : h.generators()) {
      if (!h.contains(x.conjugated_by(g))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) {
      std::vector<Permutation> ng = result.generators();
      ng.push_back(g);
      result = from_generators(std::move(ng), degree_);
    }
  }
  return result;
}

PermGroup PermGroup::centralizer_of(const PermGroup& h) const {
  if (h.degree_ != degree_) {
    fail(ErrorCode::GroupMismatch, "centralizer across different degrees");
  }
  PermGroup result = trivial(degree_);
  for (const auto& g : sorted_elements()) {
    if (result.contains(g)) continue;
    bool centralizes = true;
    for (const auto& x : h.generators()) {
      if (x.conjugated_by(g) != x) {
        centralizes = false;
        break;
      }
    }
    if (centralizes) {
      std::vector<Permutation> ng = result.generators();
      ng.push_back(g);
      result = from_generators(std::move(ng), degree_);
    }
  }
  return result;
}

PermGroup PermGroup::centralizer_of(const Permutation& x) const {
  return centralizer_of(from_generators({x}, degree_));
}

PermGroup PermGroup::center() const { return centralizer_of(*this); }

PermGroup PermGroup::intersection_with(const PermGroup& other) const {
  if (other.degree_ != degree_) {
    fail(ErrorCode::GroupMismatch, "intersection across different degrees");
  }
  const PermGroup& small = order() <= other.order() ? *this : other;
  const PermGroup& big = order() <= other.order() ? other : *this;
  PermGroup result = trivial(degree_);
  for (const auto& g : small.sorted_elements()) {
    if (result.contains(g)) continue;
    if (big.contains(g)) {
      std::vector<Permutation> ng = result.generators();
      ng.push_back(g);
      result = from_generators(std::move(ng), degree_);
    }
  }
  return result;
}

PermGroup PermGroup::join_with(const PermGroup& other) const {
  if (other.degree_ != degree_) {
    fail(ErrorCode::GroupMismatch, "join across different degrees");
  }
  std::vector<Permutation> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return from_generators(std::move(gens), degree_);
}

PermGroup PermGroup::conjugated_by(const Permutation& g) const {
  if (g.degree() != degree_) {
    fail(ErrorCode::GroupMismatch, "conjugating a group by the wrong degree");
  }
  std::vector<Permutation> gens;
  gens.reserve(gens_.size());
  for (const auto& x : gens_) gens.push_back(x.conjugated_by(g));
  return from_generators(std::move(gens), degree_);
}

} // namespace exchar
