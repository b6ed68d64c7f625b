#ifndef EXCHAR_MODMATRIX_HPP
#define EXCHAR_MODMATRIX_HPP

#include <vector>

namespace exchar {

long mod_pow(long base, long exp, long p);
long mod_inv(long a, long p); // requires gcd(a, p) = 1

// Dense matrix over the prime field F_p. All reductions are deterministic
// (first nonzero pivot, ascending free columns), so nullspace bases and
// echelon forms are reproducible.
class ModMatrix {
public:
  ModMatrix(int rows, int cols, long p);
  static ModMatrix identity(int n, long p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long modulus() const { return p_; }

  long at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long v);

  ModMatrix operator*(const ModMatrix& rhs) const;
  std::vector<long> apply(const std::vector<long>& v) const; // matrix * column

  // In-place row reduction to reduced row echelon form; returns the pivot
  // columns in order.
  std::vector<int> rref();
  // Basis of {x : A x = 0}, one vector per free column, ascending.
  std::vector<std::vector<long>> nullspace() const;

private:
  int rows_;
  int cols_;
  long p_;
  std::vector<long> data_;
};

// Unique solution of A x = b; fails with InternalInconsistency when the
// system is inconsistent or underdetermined.
std::vector<long> solve_unique(const ModMatrix& a, const std::vector<long>& b);

} // namespace exchar

#endif
