#ifndef EXCHAR_CYCLOTOMIC_HPP
#define EXCHAR_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "exchar/intmath.hpp"

namespace exchar {

// An element of the cyclotomic field Q(zeta_n), held in canonical form:
// rational coordinates over the power basis {zeta_n^i : 0 <= i < phi(n)},
// with n the true conductor of the value (n = 1 for rationals, and never
// n = 2 mod 4, via zeta_{2u} = -zeta_u^{(u+1)/2} for odd u). Canonical form
// makes operator== a plain member compare and gives a stable total order.
class Cyc {
public:
  Cyc() = default; // zero
  Cyc(long v) : coeffs_{Rat(v)} {}
  explicit Cyc(const Int& v) : coeffs_{Rat(v)} {}
  explicit Cyc(const Rat& v) : coeffs_{v} {}

  // zeta_order ^ exponent (exponent taken mod order; order >= 1).
  static Cyc root_of_unity(long order, long exponent);

  long conductor() const { return n_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  bool is_zero() const { return n_ == 1 && coeffs_[0] == 0; }
  bool is_rational() const { return n_ == 1; }
  Rat rational_value() const;         // requires is_rational()
  Int rational_integer_value() const; // requires a rational integer value

  Cyc operator+(const Cyc& rhs) const;
  Cyc operator-(const Cyc& rhs) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& rhs) const;
  Cyc& operator+=(const Cyc& rhs) { return *this = *this + rhs; }
  Cyc& operator-=(const Cyc& rhs) { return *this = *this - rhs; }
  Cyc& operator*=(const Cyc& rhs) { return *this = *this * rhs; }

  Cyc conjugate() const; // complex conjugation
  // Galois automorphism zeta -> zeta^k; requires gcd(k, conductor) = 1.
  Cyc galois(long k) const;

  bool operator==(const Cyc& rhs) const = default;
  // Total order by (conductor, coefficient list); returns <0, 0, >0.
  static int compare(const Cyc& a, const Cyc& b);
  bool operator<(const Cyc& rhs) const { return compare(*this, rhs) < 0; }

  std::string str() const; // e.g. "1/2 + 3*z(5)^1 - z(5)^3", rationals plain

private:
  Cyc(long n, std::vector<Rat> coeffs);
  void descend();

  long n_ = 1;
  std::vector<Rat> coeffs_{Rat(0)};
};

// Coefficients of the n-th cyclotomic polynomial (degree phi(n), monic),
// index i = coefficient of x^i. Cached across calls.
const std::vector<Int>& cyclotomic_poly(long n);

// Sum over j of multiplicities[j] * zeta_order^j (multiplicities indexed by
// exponent, size == order).
Cyc sum_of_roots(long order, const std::vector<Int>& multiplicities);

} // namespace exchar

#endif
