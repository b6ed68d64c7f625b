#include "exchar/cyclotomic.hpp"

#include <map>
#include <utility>

#include "exchar/error.hpp"

namespace exchar {

namespace {

// Exact division of an integer polynomial by a monic integer polynomial.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  long m = static_cast<long>(den.size()) - 1;
  long deg = static_cast<long>(num.size()) - 1;
  if (deg < m) fail(ErrorCode::InternalInconsistency, "polynomial division underflow");
  std::vector<Int> quot(deg - m + 1, Int(0));
  for (long d = deg; d >= m; --d) {
    Int c = num[d];
    if (c == 0) continue;
    quot[d - m] = c;
    for (long i = 0; i <= m; ++i) num[d - m + i] -= c * den[i];
  }
  for (const Int& r : num) {
    if (r != 0) fail(ErrorCode::InternalInconsistency, "inexact polynomial division");
  }
  return quot;
}

// In place: v mod Phi_n, resized to exactly phi(n) entries.
void reduce_mod_phi(std::vector<Rat>& v, long n) {
  const std::vector<Int>& phi = cyclotomic_poly(n);
  long m = static_cast<long>(phi.size()) - 1;
  for (long d = static_cast<long>(v.size()) - 1; d >= m; --d) {
    if (v[d] == 0) continue;
    Rat c = v[d];
    for (long i = 0; i <= m; ++i) v[d - m + i] -= c * Rat(phi[i]);
  }
  v.resize(m, Rat(0));
}

std::vector<Rat> embed_dense(const std::vector<Rat>& coeffs, long n, long big) {
  std::vector<Rat> dense(big, Rat(0));
  long stride = big / n;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) dense[static_cast<long>(i) * stride] += coeffs[i];
  }
  return dense;
}

std::string rat_str(const Rat& r) { return r.str(); }

} // namespace

const std::vector<Int>& cyclotomic_poly(long n) {
  static std::map<long, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div_exact(std::move(p), cyclotomic_poly(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

Cyc::Cyc(long n, std::vector<Rat> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  reduce_mod_phi(coeffs_, n_);
  descend();
}

Cyc Cyc::root_of_unity(long order, long exponent) {
  if (order < 1) fail(ErrorCode::InternalInconsistency, "root order must be positive");
  long k = exponent % order;
  if (k < 0) k += order;
  if (k == 0) return Cyc(1);
  long g = gcd_long(k, order);
  long n = order / g;
  long kk = k / g;
  bool negate = false;
  if (n % 4 == 2) {
    long u = n / 2;
    negate = (kk % 2 == 1);
    kk = (kk % u) * ((u + 1) / 2) % u;
    n = u;
  }
  Rat sign = negate ? Rat(-1) : Rat(1);
  if (n == 1) return Cyc(sign);
  std::vector<Rat> dense(n, Rat(0));
  dense[kk] = sign;
  return Cyc(n, std::move(dense));
}

Rat Cyc::rational_value() const {
  if (!is_rational()) {
    fail(ErrorCode::InternalInconsistency, "cyclotomic value is not rational: " + str());
  }
  return coeffs_[0];
}

Int Cyc::rational_integer_value() const {
  Rat v = rational_value();
  if (boost::multiprecision::denominator(v) != 1) {
    fail(ErrorCode::InternalInconsistency, "value is not a rational integer: " + str());
  }
  return boost::multiprecision::numerator(v);
}

Cyc Cyc::operator+(const Cyc& rhs) const {
  long big = lcm_long(n_, rhs.n_);
  std::vector<Rat> a = embed_dense(coeffs_, n_, big);
  std::vector<Rat> b = embed_dense(rhs.coeffs_, rhs.n_, big);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return Cyc(big, std::move(a));
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

Cyc Cyc::operator-(const Cyc& rhs) const { return *this + (-rhs); }

Cyc Cyc::operator*(const Cyc& rhs) const {
  long big = lcm_long(n_, rhs.n_);
  std::vector<Rat> a = embed_dense(coeffs_, n_, big);
  std::vector<Rat> b = embed_dense(rhs.coeffs_, rhs.n_, big);
  std::vector<std::pair<long, Rat>> an, bn;
  for (long i = 0; i < big; ++i) {
    if (a[i] != 0) an.emplace_back(i, a[i]);
    if (b[i] != 0) bn.emplace_back(i, b[i]);
  }
  std::vector<Rat> prod(2 * big, Rat(0));
  for (const auto& [i, ci] : an) {
    for (const auto& [j, cj] : bn) prod[i + j] += ci * cj;
  }
  return Cyc(big, std::move(prod));
}

Cyc Cyc::conjugate() const { return galois(-1); }

Cyc Cyc::galois(long k) const {
  if (n_ == 1) return *this;
  long kk = k % n_;
  if (kk < 0) kk += n_;
  if (gcd_long(kk, n_) != 1) {
    fail(ErrorCode::InternalInconsistency, "galois exponent not coprime to the conductor");
  }
  std::vector<Rat> dense(n_, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) dense[(static_cast<long>(i) * kk) % n_] += coeffs_[i];
  }
  return Cyc(n_, std::move(dense));
}

// Lower the modulus to the true conductor: for each prime p | n, if the value
// is fixed by the Galois subgroup {sigma_k : k = 1 mod m} (m the normalized
// n/p), rewrite it exactly over the power basis of Q(zeta_m) and repeat.
void Cyc::descend() {
  for (;;) {
    if (n_ == 1) return;
    bool descended = false;
    for (long p : prime_factors(n_)) {
      long m = n_ / p;
      while (m % 4 == 2) m /= 2;

      bool fixed = true;
      for (long k = 1 + m; k < n_ && fixed; k += m) {
        if (gcd_long(k, n_) != 1) continue;
        std::vector<Rat> dense(n_, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
          if (coeffs_[i] != 0) dense[(static_cast<long>(i) * k) % n_] += coeffs_[i];
        }
        reduce_mod_phi(dense, n_);
        if (dense != coeffs_) fixed = false;
      }
      if (!fixed) continue;

      // Columns: zeta_m^j expressed over the basis of Q(zeta_n).
      long rows = static_cast<long>(coeffs_.size());
      long cols = static_cast<long>(euler_phi(m));
      long stride = n_ / m;
      std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(cols + 1, Rat(0)));
      for (long j = 0; j < cols; ++j) {
        std::vector<Rat> col(n_, Rat(0));
        col[j * stride] = 1;
        reduce_mod_phi(col, n_);
        for (long r = 0; r < rows; ++r) aug[r][j] = col[r];
      }
      for (long r = 0; r < rows; ++r) aug[r][cols] = coeffs_[r];

      // Gauss-Jordan; the columns are linearly independent, and a fixed
      // value is guaranteed to lie in their span.
      std::vector<long> pivot_row(cols, -1);
      long rank = 0;
      for (long c = 0; c < cols; ++c) {
        long pr = -1;
        for (long r = rank; r < rows; ++r) {
          if (aug[r][c] != 0) {
            pr = r;
            break;
          }
        }
        if (pr < 0) {
          fail(ErrorCode::InternalInconsistency, "dependent cyclotomic basis columns");
        }
        std::swap(aug[rank], aug[pr]);
        Rat inv = Rat(1) / aug[rank][c];
        for (long cc = c; cc <= cols; ++cc) aug[rank][cc] *= inv;
        for (long r = 0; r < rows; ++r) {
          if (r == rank || aug[r][c] == 0) continue;
          Rat f = aug[r][c];
          for (long cc = c; cc <= cols; ++cc) aug[r][cc] -= f * aug[rank][cc];
        }
        pivot_row[c] = rank;
        ++rank;
      }
      for (long r = rank; r < rows; ++r) {
        if (aug[r][cols] != 0) {
          fail(ErrorCode::InternalInconsistency, "galois-fixed value escaped the subfield");
        }
      }
      std::vector<Rat> sol(cols, Rat(0));
      for (long c = 0; c < cols; ++c) sol[c] = aug[pivot_row[c]][cols];
      n_ = m;
      coeffs_ = std::move(sol);
      descended = true;
      break;
    }
    if (!descended) return;
  }
}

int Cyc::compare(const Cyc& a, const Cyc& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
  }
  return 0;
}

std::string Cyc::str() const {
  if (is_rational()) return rat_str(coeffs_[0]);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += rat_str(mag);
    } else {
      if (mag != 1) out += rat_str(mag) + "*";
      out += "z(" + std::to_string(n_) + ")^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Cyc sum_of_roots(long order, const std::vector<Int>& multiplicities) {
  if (static_cast<long>(multiplicities.size()) != order) {
    fail(ErrorCode::InternalInconsistency, "multiplicity list length must equal the order");
  }
  Cyc acc;
  for (long j = 0; j < order; ++j) {
    if (multiplicities[j] == 0) continue;
    acc += Cyc(multiplicities[j]) * Cyc::root_of_unity(order, j);
  }
  return acc;
}

} // namespace exchar
