#include "exchar/modmatrix.hpp"

#include "exchar/error.hpp"

namespace exchar {

long mod_pow(long base, long exp, long p) {
  long b = base % p;
  if (b < 0) b += p;
  long acc = 1 % p;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return acc;
}

long mod_inv(long a, long p) {
  long v = a % p;
  if (v < 0) v += p;
  if (v == 0) fail(ErrorCode::InternalInconsistency, "inverse of zero in F_p");
  return mod_pow(v, p - 2, p);
}

ModMatrix::ModMatrix(int rows, int cols, long p)
    : rows_(rows), cols_(cols), p_(p),
      data_(static_cast<std::size_t>(rows) * cols, 0) {}

ModMatrix ModMatrix::identity(int n, long p) {
  ModMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void ModMatrix::set(int r, int c, long v) {
  v %= p_;
  if (v < 0) v += p_;
  data_[static_cast<std::size_t>(r) * cols_ + c] = v;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) {
    fail(ErrorCode::InternalInconsistency, "matrix product shape or modulus mismatch");
  }
  ModMatrix out(rows_, rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      long a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        long v = (out.at(i, j) + a * rhs.at(k, j)) % p_;
        out.set(i, j, v);
      }
    }
  }
  return out;
}

std::vector<long> ModMatrix::apply(const std::vector<long>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    fail(ErrorCode::InternalInconsistency, "matrix apply dimension mismatch");
  }
  std::vector<long> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    long acc = 0;
    for (int j = 0; j < cols_; ++j) acc = (acc + at(i, j) * v[j]) % p_;
    out[i] = acc;
  }
  return out;
}

std::vector<int> ModMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pr = -1;
    for (int r = row; r < rows_; ++r) {
      if (at(r, col) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    for (int c = 0; c < cols_; ++c) {
      std::swap(data_[static_cast<std::size_t>(row) * cols_ + c],
                data_[static_cast<std::size_t>(pr) * cols_ + c]);
    }
    long inv = mod_inv(at(row, col), p_);
    for (int c = col; c < cols_; ++c) set(row, c, at(row, c) * inv % p_);
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      long f = at(r, col);
      if (f == 0) continue;
      for (int c = col; c < cols_; ++c) {
        set(r, c, at(r, c) - f * at(row, c) % p_);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<long>> ModMatrix::nullspace() const {
  ModMatrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<long>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      long val = m.at(static_cast<int>(r), free);
      v[pivots[r]] = (p_ - val) % p_;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<long> solve_unique(const ModMatrix& a, const std::vector<long>& b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    fail(ErrorCode::InternalInconsistency, "solve dimension mismatch");
  }
  ModMatrix aug(a.rows(), a.cols() + 1, a.modulus());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
    aug.set(r, a.cols(), b[r]);
  }
  std::vector<int> pivots = aug.rref();
  std::vector<long> x(a.cols(), 0);
  std::size_t solved = 0;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) {
      fail(ErrorCode::InternalInconsistency, "inconsistent linear system");
    }
    x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    ++solved;
  }
  if (static_cast<int>(solved) != a.cols()) {
    fail(ErrorCode::InternalInconsistency, "underdetermined linear system");
  }
  return x;
}

} // namespace exchar
