#pragma once

#include <cstdint>
#include <vector>

namespace symblock {

int mod_inverse(int a, int p);

/// Small dense matrix over the prime field F_p, exact arithmetic throughout.
class FpMatrix {
 public:
  FpMatrix(int rows, int cols, int p);
  static FpMatrix identity(int n, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int p() const { return p_; }

  int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int value);

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(int scalar) const;
  FpMatrix pow(long long e) const;
  FpMatrix kronecker(const FpMatrix& rhs) const;

  /// Rank by Gaussian elimination over F_p.
  int rank() const;

  /// Inverse of a square invertible matrix (Gauss-Jordan).
  FpMatrix inverse() const;

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0, p_ = 2;
  std::vector<int> a_;
};

/// The unipotent single Jordan block of size x and eigenvalue 1 (the action
/// of a generator of a cyclic group of order p on J_x); requires 1 <= x <= p.
FpMatrix unipotent_jordan_block(int x, int p);

}  // namespace symblock
