#pragma once

#include <map>
#include <string>
#include <utility>

#include "symblock/fp_matrix.hpp"

namespace symblock {

/// Isomorphism type of a module over a cyclic group of order p: a multiset
/// of Jordan block sizes in 1..p. Multisets of different p never mix.
class JordanMultiset {
 public:
  explicit JordanMultiset(int p);

  int p() const { return p_; }
  void add(int size, long long count = 1);
  long long multiplicity(int size) const;
  const std::map<int, long long>& multiplicities() const { return mult_; }

  long long dimension() const;
  long long summand_count() const;
  bool empty() const { return mult_.empty(); }

  /// Drops all size-p (free) blocks; idempotent.
  JordanMultiset projective_free() const;

  std::string str() const;

  friend bool operator==(const JordanMultiset&, const JordanMultiset&) = default;

 private:
  int p_ = 2;
  std::map<int, long long> mult_;
};

JordanMultiset operator+(const JordanMultiset& lhs, const JordanMultiset& rhs);

JordanMultiset projective_free(const JordanMultiset& m);

/// J_x (x) J_y over a cyclic group of order p, 1 <= x, y <= p-1. For
/// x + y <= p this is the classical fan of blocks |x-y|+1, |x-y|+3, ...;
/// for x + y > p the projective-free part equals J_{p-x} (x) J_{p-y} and the
/// rest is filled with size-p blocks by dimension count.
JordanMultiset jordan_tensor(int x, int y, int p);

/// Projective-free part of the restriction of the hook simple D_i to a cyclic
/// subgroup of order p: J_i for odd i, J_{p-i} for even i (1 <= i < p).
JordanMultiset hook_simple_restriction(int i, int p);

/// Closed form for the projective-free part of the restriction of the sum of
/// boxed simples D_k (x) D_{i+j-k}, k = j..i, to the diagonal cyclic subgroup.
JordanMultiset diagonal_restriction(int i, int j, int p);

/// Independent brute-force route: expand summand by summand through
/// hook_simple_restriction and jordan_tensor and strip free parts.
JordanMultiset diagonal_restriction_oracle(int i, int j, int p);

/// Number of indecomposable summands of the middle filtration layer
/// diag(a+1,b) + diag(a,b-1); closed form, 2 <= b <= a <= p-2, a+b <= p.
long long middle_layer_summand_count(int a, int b, int p);

/// Dimension of the module filtered by diag(a,b) / middle layer / diag(a,b);
/// closed form on the same parameter range.
long long filtration_dimension(int a, int b, int p);

/// binomial(2p-2, p-b): dimension of the hook-labelled simple [p-1,b]; always
/// coprime to p for 2 <= b < p.
long long hook_simple_dimension(int p, int b);

enum class ObstructionKind { NotFreeByDimension, NotFreeByCount, ReducedBySignTwist };

struct ObstructionVerdict {
  ObstructionKind kind = ObstructionKind::NotFreeByDimension;
  long long dimension = 0;      // certificate for the dimension route
  long long summands = 0;       // certificate pair for the counting route:
  long long filtered_dim = 0;   //   summands * p > filtered_dim
  std::pair<int, int> reduced_label{-1, -1};  // target of the sign twist
};

/// Why the restriction of the weight-2 simple [a,b] of the principal block to
/// the diagonal cyclic subgroup cannot be free. Requires 1 <= b <= a <= p-1
/// and (a,b) != (p-1,1) (the complexity-one exception, rejected).
ObstructionVerdict freeness_obstruction(int a, int b, int p);

/// The type used where a nilpotent p-th-power-zero matrix is expected.
using NilpotentMatrix = FpMatrix;

/// Jordan type recovered from the rank sequence rank(N^0), ..., rank(N^p);
/// the number of blocks of size >= t is rank(N^{t-1}) - rank(N^t). Requires
/// N square with N^p = 0.
JordanMultiset jordan_type_of_nilpotent(const NilpotentMatrix& n_matrix);

}  // namespace symblock
