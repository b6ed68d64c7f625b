#include "exchar/intmath.hpp"

#include <cstdlib>
#include <limits>

#include "exchar/error.hpp"

namespace exchar {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long gcd_long(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_long(a, b) * b;
}

Int pow_int(const Int& a, unsigned e) {
  Int result = 1;
  Int base = a;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int p_part(Int n, long p) {
  Int result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

Int p_prime_part(Int n, long p) {
  while (n % p == 0) n /= p;
  return n;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) {
    fail(ErrorCode::NonDivisible,
         a.str() + " is not divisible by " + b.str());
  }
  return a / b;
}

long least_prime_in_progression(long m, long floor) {
  // ell = 1 (mod m), ell > floor. Dirichlet guarantees one exists.
  long ell = (floor / m) * m + 1;
  while (ell <= floor || ell <= 2 || !is_prime(ell)) {
    ell += m;
    if (ell < 0) fail(ErrorCode::InternalInconsistency, "prime search overflow");
  }
  return ell;
}

bool prime_power_decompose(const Int& q, long& p0, int& f) {
  if (q < 2) return false;
  Int n = q;
  long d = 2;
  while (Int(d) * d <= n) {
    if (n % d == 0) break;
    d == 2 ? d = 3 : d += 2;
  }
  if (Int(d) * d > n) {
    // q itself is prime (fits in long by construction of callers; verify).
    if (n > Int(std::numeric_limits<long>::max())) return false;
    p0 = static_cast<long>(n);
    f = 1;
    return true;
  }
  p0 = d;
  f = 0;
  while (n % p0 == 0) {
    n /= p0;
    ++f;
  }
  return n == 1;
}

int popcount_long(long n) {
  int c = 0;
  while (n > 0) {
    c += static_cast<int>(n & 1);
    n >>= 1;
  }
  return c;
}

long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) {
    result -= result / p;
  }
  return result;
}

} // namespace exchar
