#include "symblock/fp_matrix.hpp"

#include "symblock/errors.hpp"
#include "symblock/partition.hpp"

namespace symblock {

int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DomainError("zero has no inverse");
  // Fermat: a^(p-2) mod p.
  long long base = a, out = 1;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) out = out * base % p;
    base = base * base % p;
  }
  return static_cast<int>(out);
}

FpMatrix::FpMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  require_prime(p);
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be non-negative");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

FpMatrix FpMatrix::identity(int n, int p) {
  FpMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FpMatrix::set(int r, int c, int value) {
  value %= p_;
  if (value < 0) value += p_;
  a_[static_cast<size_t>(r) * cols_ + c] = value;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) throw DomainError("matrix product shape mismatch");
  FpMatrix out(rows_, rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const long long lhs_ik = at(i, k);
      if (lhs_ik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const long long sum = out.at(i, j) + lhs_ik * rhs.at(k, j);
        out.a_[static_cast<size_t>(i) * rhs.cols_ + j] = static_cast<int>(sum % p_);
      }
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
    throw DomainError("matrix sum shape mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + rhs.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
    throw DomainError("matrix difference shape mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = ((a_[i] - rhs.a_[i]) % p_ + p_) % p_;
  return out;
}

FpMatrix FpMatrix::scaled(int scalar) const {
  scalar %= p_;
  if (scalar < 0) scalar += p_;
  FpMatrix out(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = static_cast<int>(static_cast<long long>(a_[i]) * scalar % p_);
  return out;
}

FpMatrix FpMatrix::pow(long long e) const {
  if (rows_ != cols_) throw DomainError("matrix power needs a square matrix");
  if (e < 0) throw DomainError("matrix power needs e >= 0");
  FpMatrix out = identity(rows_, p_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& rhs) const {
  if (p_ != rhs.p_) throw DomainError("kronecker product needs a common field");
  FpMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const long long scale = at(i, j);
      if (scale == 0) continue;
      for (int r = 0; r < rhs.rows_; ++r)
        for (int c = 0; c < rhs.cols_; ++c)
          out.set(i * rhs.rows_ + r, j * rhs.cols_ + c,
                  static_cast<int>(scale * rhs.at(r, c) % p_));
    }
  return out;
}

int FpMatrix::rank() const {
  std::vector<int> work = a_;
  auto entry = [&](int r, int c) -> int& { return work[static_cast<size_t>(r) * cols_ + c]; };
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows_; ++row)
      if (entry(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < cols_; ++c) std::swap(entry(pivot, c), entry(rank, c));
    const long long inv = mod_inverse(entry(rank, col), p_);
    for (int c = col; c < cols_; ++c)
      entry(rank, c) = static_cast<int>(entry(rank, c) * inv % p_);
    for (int row = rank + 1; row < rows_; ++row) {
      const long long factor = entry(row, col);
      if (factor == 0) continue;
      for (int c = col; c < cols_; ++c) {
        long long v = entry(row, c) - factor * entry(rank, c) % p_;
        entry(row, c) = static_cast<int>(((v % p_) + p_) % p_);
      }
    }
    ++rank;
  }
  return rank;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse needs a square matrix");
  FpMatrix work = *this;
  FpMatrix out = identity(rows_, p_);
  for (int col = 0; col < rows_; ++col) {
    int pivot = -1;
    for (int row = col; row < rows_; ++row)
      if (work.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw DomainError("matrix is singular");
    for (int c = 0; c < rows_; ++c) {
      std::swap(work.a_[static_cast<size_t>(pivot) * cols_ + c],
                work.a_[static_cast<size_t>(col) * cols_ + c]);
      std::swap(out.a_[static_cast<size_t>(pivot) * cols_ + c],
                out.a_[static_cast<size_t>(col) * cols_ + c]);
    }
    const long long inv = mod_inverse(work.at(col, col), p_);
    for (int c = 0; c < rows_; ++c) {
      work.set(col, c, static_cast<int>(work.at(col, c) * inv % p_));
      out.set(col, c, static_cast<int>(out.at(col, c) * inv % p_));
    }
    for (int row = 0; row < rows_; ++row) {
      if (row == col) continue;
      const long long factor = work.at(row, col);
      if (factor == 0) continue;
      for (int c = 0; c < rows_; ++c) {
        work.set(row, c, static_cast<int>(((work.at(row, c) - factor * work.at(col, c)) % p_ +
                                           static_cast<long long>(p_) * p_) %
                                          p_));
        out.set(row, c, static_cast<int>(((out.at(row, c) - factor * out.at(col, c)) % p_ +
                                          static_cast<long long>(p_) * p_) %
                                         p_));
      }
    }
  }
  return out;
}

bool FpMatrix::is_zero() const {
  for (int v : a_)
    if (v != 0) return false;
  return true;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FpMatrix unipotent_jordan_block(int x, int p) {
  if (x < 1 || x > p) throw DomainError("jordan block size must lie in 1..p");
  FpMatrix m = FpMatrix::identity(x, p);
  for (int i = 0; i + 1 < x; ++i) m.set(i, i + 1, 1);
  return m;
}

}  // namespace symblock
