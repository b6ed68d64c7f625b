#ifndef EXCHAR_INTMATH_HPP
#define EXCHAR_INTMATH_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace exchar {

// All group-theoretic quantities are exact, unbounded integers or rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int gcd_int(Int a, Int b);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

// a^e for e >= 0.
Int pow_int(const Int& a, unsigned e);

bool is_prime(long n);

// Ascending list of primes dividing n (n >= 1).
std::vector<long> prime_factors(long n);

// Largest power of p dividing n, i.e. n_p.
Int p_part(Int n, long p);

// n with every factor of p removed, i.e. n_{p'}.
Int p_prime_part(Int n, long p);

// Exact quotient; fails with NonDivisible if b does not divide a.
Int exact_div(const Int& a, const Int& b);

// Smallest prime ell with ell = 1 (mod m) and ell > floor.
long least_prime_in_progression(long m, long floor);

// Writes q as p0^f with p0 prime; returns false if q is not a prime power > 1.
bool prime_power_decompose(const Int& q, long& p0, int& f);

// Number of ones in the binary expansion of n >= 0.
int popcount_long(long n);

// Euler's totient of n >= 1.
long euler_phi(long n);

} // namespace exchar

#endif
