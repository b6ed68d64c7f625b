#ifndef EXCHAR_PERM_HPP
#define EXCHAR_PERM_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace exchar {

// A permutation of {0, ..., degree-1}, stored as its image list.
// Composition is left-to-right: (a * b)(x) = b(a(x)).
// Text I/O uses 1-based disjoint-cycle notation, e.g. "(1,2,3)(4,5)".
class Permutation {
public:
  Permutation() = default;

  // Identity on `degree` points.
  explicit Permutation(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }

  // Fails with NonBijective if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  // Parses disjoint-cycle notation ("(1,2,3)(4,5)", identity "()").
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  long order() const; // lcm of cycle lengths

  Permutation operator*(const Permutation& rhs) const; // apply *this, then rhs
  Permutation inverse() const;
  Permutation power(long e) const; // e may be negative
  // g^{-1} * (*this) * g.
  Permutation conjugated_by(const Permutation& g) const;

  std::vector<std::vector<int>> cycles() const; // nontrivial cycles, 0-based
  std::string to_cycle_string() const;          // 1-based text form

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& rhs) const {
    return img_ <=> rhs.img_;
  }

private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace exchar

#endif
