#include "exchar/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "exchar/error.hpp"
#include "exchar/intmath.hpp"
#include "exchar/modmatrix.hpp"

namespace exchar {

namespace {

long g_table_computations = 0;

long isqrt_floor(long v) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

long primitive_root(long ell) {
  std::vector<long> qs = prime_factors(ell - 1);
  for (long g = 2; g < ell; ++g) {
    bool primitive = true;
    for (long q : qs) {
      if (mod_pow(g, (ell - 1) / q, ell) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  fail(ErrorCode::InternalInconsistency, "no primitive root modulo " + std::to_string(ell));
}

bool is_trivial_row(const Character& chi) {
  if (chi.degree != 1) return false;
  for (const Cyc& v : chi.values) {
    if (v != Cyc(1)) return false;
  }
  return true;
}

// Subgroup generated by the flagged members of g's canonical element list.
PermGroup group_from_members(const PermGroup& g, const std::vector<char>& member) {
  const auto& elems = g.sorted_elements();
  PermGroup out = PermGroup::trivial(g.degree());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!member[i] || out.contains(elems[i])) continue;
    std::vector<Permutation> gens = out.generators();
    gens.push_back(elems[i]);
    out = PermGroup::from_generators(std::move(gens), g.degree());
  }
  return out;
}

// The modular eigenvector method: split F_ell^c under the class-sum matrices
// into common eigenspaces, read off degrees and modular values, then lift to
// exact cyclotomic values through the discrete Fourier sum over each
// element's power classes.
CharacterTable compute_table(const PermGroup& g) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const ClassData& cd = t.classes;
  const int c = cd.class_count();
  const long n = g.order_long();

  const long e = cd.exponent;
  const long ell = least_prime_in_progression(e, isqrt_floor(4 * n));

  // Structure constants: a[i][j][k] = #{(x, y) in K_i x K_j : x y = z_k}.
  std::vector<std::vector<std::vector<long>>> a(
      c, std::vector<std::vector<long>>(c, std::vector<long>(c, 0)));
  for (int k = 0; k < c; ++k) {
    const Permutation& z = cd.reps[k];
    for (const auto& x : g.sorted_elements()) {
      int i = cd.index.at(x);
      int j = cd.index.at(x.inverse() * z);
      ++a[i][j][k];
    }
  }

  // Iteratively split the class-function space into common eigenspaces.
  struct Space {
    std::vector<std::vector<long>> basis; // vectors of length c
  };
  std::vector<Space> spaces(1);
  spaces[0].basis.reserve(c);
  for (int k = 0; k < c; ++k) {
    std::vector<long> unit(c, 0);
    unit[k] = 1;
    spaces[0].basis.push_back(std::move(unit));
  }

  for (int i = 1; i < c; ++i) {
    bool all_split = true;
    for (const Space& s : spaces) {
      if (s.basis.size() > 1) {
        all_split = false;
        break;
      }
    }
    if (all_split) break;

    ModMatrix m(c, c, ell);
    for (int j = 0; j < c; ++j) {
      for (int k = 0; k < c; ++k) m.set(j, k, a[i][j][k] % ell);
    }

    std::vector<Space> next;
    for (Space& s : spaces) {
      const int d = static_cast<int>(s.basis.size());
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      ModMatrix basis_mat(c, d, ell);
      for (int col = 0; col < d; ++col) {
        for (int row = 0; row < c; ++row) basis_mat.set(row, col, s.basis[col][row]);
      }
      ModMatrix action(d, d, ell);
      for (int col = 0; col < d; ++col) {
        std::vector<long> coords = solve_unique(basis_mat, m.apply(s.basis[col]));
        for (int row = 0; row < d; ++row) action.set(row, col, coords[row]);
      }
      int found = 0;
      for (long lam = 0; lam < ell && found < d; ++lam) {
        ModMatrix shifted = action;
        for (int dd = 0; dd < d; ++dd) shifted.set(dd, dd, action.at(dd, dd) - lam);
        std::vector<std::vector<long>> null = shifted.nullspace();
        if (null.empty()) continue;
        Space eigen;
        for (const auto& u : null) {
          std::vector<long> v(c, 0);
          for (int tt = 0; tt < d; ++tt) {
            if (u[tt] == 0) continue;
            for (int row = 0; row < c; ++row) {
              v[row] = (v[row] + u[tt] * s.basis[tt][row]) % ell;
            }
          }
          eigen.basis.push_back(std::move(v));
        }
        found += static_cast<int>(eigen.basis.size());
        next.push_back(std::move(eigen));
      }
      if (found != d) {
        fail(ErrorCode::InternalInconsistency, "class matrix failed to split its space");
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != c) {
    fail(ErrorCode::InternalInconsistency, "common eigenspaces are not one-dimensional");
  }

  const long zgen = primitive_root(ell);
  const long ze = mod_pow(zgen, (ell - 1) / e, ell);

  Int degree_square_sum = 0;
  for (const Space& s : spaces) {
    std::vector<long> w = s.basis[0];
    if (w[0] == 0) {
      fail(ErrorCode::InternalInconsistency, "eigenvector vanishes on the identity class");
    }
    const long inv0 = mod_inv(w[0], ell);
    for (long& x : w) x = x * inv0 % ell;

    long srow = 0;
    for (int k = 0; k < c; ++k) {
      long term = w[k] * w[cd.inverse_classes[k]] % ell;
      term = term * mod_inv(cd.sizes[k] % ell, ell) % ell;
      srow = (srow + term) % ell;
    }
    if (srow == 0) {
      fail(ErrorCode::InternalInconsistency, "degenerate norm sum for an eigenvector");
    }
    const long dsq = n % ell * mod_inv(srow, ell) % ell;
    long degree = -1;
    for (long cand = 1; 2 * cand < ell; ++cand) {
      if (cand * cand % ell == dsq) {
        degree = cand;
        break;
      }
    }
    if (degree < 0) {
      fail(ErrorCode::InternalInconsistency, "no square root for a degree residue");
    }

    std::vector<long> vmod(c);
    for (int k = 0; k < c; ++k) {
      vmod[k] = degree * w[k] % ell * mod_inv(cd.sizes[k] % ell, ell) % ell;
    }

    Character chi;
    chi.degree = degree;
    chi.values.resize(c);
    for (int k = 0; k < c; ++k) {
      const long o = cd.rep_orders[k];
      const long zo = mod_pow(ze, e / o, ell);
      const long oinv = mod_inv(o % ell, ell);
      std::vector<Int> mult(o, Int(0));
      Int mult_sum = 0;
      for (long j = 0; j < o; ++j) {
        long acc = 0;
        for (long tt = 0; tt < o; ++tt) {
          int cls = cd.power_class(k, tt);
          long zexp = mod_pow(zo, (o - j * tt % o) % o, ell);
          acc = (acc + vmod[cls] * zexp) % ell;
        }
        long mj = acc * oinv % ell;
        mult[j] = mj;
        mult_sum += mj;
      }
      if (mult_sum != degree) {
        fail(ErrorCode::InternalInconsistency,
             "root-of-unity multiplicities do not sum to the degree");
      }
      chi.values[k] = sum_of_roots(o, mult);
    }
    if (chi.values[0] != Cyc(degree)) {
      fail(ErrorCode::InternalInconsistency, "lifted identity value differs from the degree");
    }
    degree_square_sum += Int(degree) * degree;
    t.chars.push_back(std::move(chi));
  }
  if (degree_square_sum != g.order()) {
    fail(ErrorCode::InternalInconsistency, "degree squares do not sum to the group order");
  }

  std::sort(t.chars.begin(), t.chars.end(), [](const Character& x, const Character& y) {
    bool xt = is_trivial_row(x), yt = is_trivial_row(y);
    if (xt != yt) return xt;
    if (x.degree != y.degree) return x.degree < y.degree;
    for (std::size_t k = 0; k < x.values.size(); ++k) {
      int cmp = Cyc::compare(x.values[k], y.values[k]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });

  for (int i = 0; i < t.char_count(); ++i) {
    for (int j = i; j < t.char_count(); ++j) {
      Cyc ip = inner_product(cd, t.chars[i].values, t.chars[j].values);
      if (ip != Cyc(i == j ? 1 : 0)) {
        fail(ErrorCode::InternalInconsistency, "row orthogonality check failed");
      }
    }
  }
  return t;
}

} // namespace

const CharacterTable& character_table(const PermGroup& g) {
  static std::map<std::string, std::unique_ptr<CharacterTable>> cache;
  const std::string& h = g.hash();
  auto it = cache.find(h);
  if (it != cache.end()) return *it->second;
  ++g_table_computations;
  auto table = std::make_unique<CharacterTable>(compute_table(g));
  return *cache.emplace(h, std::move(table)).first->second;
}

long table_computations() { return g_table_computations; }

Cyc inner_product(const ClassData& cd, const std::vector<Cyc>& a,
                  const std::vector<Cyc>& b) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != cd.class_count()) {
    fail(ErrorCode::InternalInconsistency, "inner product length mismatch");
  }
  Int order = cd.group.order();
  Cyc acc;
  for (int k = 0; k < cd.class_count(); ++k) {
    acc += a[k] * b[k].conjugate() * Cyc(Rat(Int(cd.sizes[k]), order));
  }
  return acc;
}

std::vector<Cyc> restrict_values(const CharacterTable& big, int chi,
                                 const ClassData& sub) {
  std::vector<int> fusion = class_fusion(sub, big.classes);
  std::vector<Cyc> out;
  out.reserve(fusion.size());
  for (int k : fusion) out.push_back(big.chars[chi].values[k]);
  return out;
}

std::vector<Cyc> induce_values(const ClassData& sub, const std::vector<Cyc>& f,
                               const ClassData& big) {
  if (static_cast<int>(f.size()) != sub.class_count()) {
    fail(ErrorCode::InternalInconsistency, "induction length mismatch");
  }
  std::vector<int> fusion = class_fusion(sub, big);
  Int big_order = big.group.order();
  Int sub_order = sub.group.order();
  std::vector<Cyc> out(big.class_count());
  for (int k = 0; k < big.class_count(); ++k) {
    Cyc acc;
    for (int d = 0; d < sub.class_count(); ++d) {
      if (fusion[d] != k) continue;
      acc += f[d] * Cyc(sub.sizes[d]);
    }
    out[k] = acc * Cyc(Rat(big_order, Int(big.sizes[k]) * sub_order));
  }
  return out;
}

PermGroup kernel_subgroup(const CharacterTable& t, int chi) {
  const ClassData& cd = t.classes;
  const auto& elems = cd.group.sorted_elements();
  const Cyc deg(t.chars[chi].degree);
  std::vector<char> member(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int cls = cd.index.at(elems[i]);
    member[i] = (t.chars[chi].values[cls] == deg) ? 1 : 0;
  }
  return group_from_members(cd.group, member);
}

std::vector<PermGroup> normal_subgroups(const CharacterTable& t) {
  const ClassData& cd = t.classes;
  const auto& elems = cd.group.sorted_elements();
  const std::size_t n = elems.size();
  std::vector<int> cls_by_idx(n);
  for (std::size_t i = 0; i < n; ++i) cls_by_idx[i] = cd.index.at(elems[i]);

  std::set<std::vector<char>> pool;
  for (int chi = 0; chi < t.char_count(); ++chi) {
    const Cyc deg(t.chars[chi].degree);
    std::vector<char> member(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      member[i] = (t.chars[chi].values[cls_by_idx[i]] == deg) ? 1 : 0;
    }
    pool.insert(std::move(member));
  }

  // Close under pairwise intersection; every normal subgroup arises as an
  // intersection of irreducible kernels.
  std::vector<std::vector<char>> work(pool.begin(), pool.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<char> meet(n);
      for (std::size_t x = 0; x < n; ++x) meet[x] = work[i][x] & work[j][x];
      if (pool.insert(meet).second) work.push_back(std::move(meet));
    }
  }

  std::vector<PermGroup> out;
  out.reserve(work.size());
  for (const auto& member : pool) out.push_back(group_from_members(cd.group, member));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.hash() < b.hash();
  });
  return out;
}

} // namespace exchar
