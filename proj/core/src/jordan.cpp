#include "symblock/jordan.hpp"

#include <numeric>

#include "symblock/errors.hpp"
#include "symblock/partition.hpp"

namespace symblock {

JordanMultiset::JordanMultiset(int p) : p_(p) { require_prime(p); }

void JordanMultiset::add(int size, long long count) {
  if (size < 1 || size > p_) throw DomainError("jordan block size must lie in 1..p");
  if (count < 0) throw DomainError("jordan multiplicities are non-negative");
  if (count == 0) return;
  mult_[size] += count;
}

long long JordanMultiset::multiplicity(int size) const {
  const auto it = mult_.find(size);
  return it == mult_.end() ? 0 : it->second;
}

long long JordanMultiset::dimension() const {
  long long dim = 0;
  for (const auto& [size, count] : mult_) dim += static_cast<long long>(size) * count;
  return dim;
}

long long JordanMultiset::summand_count() const {
  long long total = 0;
  for (const auto& [size, count] : mult_) total += count;
  return total;
}

JordanMultiset JordanMultiset::projective_free() const {
  JordanMultiset out(p_);
  for (const auto& [size, count] : mult_)
    if (size != p_) out.add(size, count);
  return out;
}

std::string JordanMultiset::str() const {
  if (mult_.empty()) return "0";
  std::string out;
  for (const auto& [size, count] : mult_) {
    if (!out.empty()) out += " + ";
    if (count != 1) out += std::to_string(count) + "*";
    out += "J" + std::to_string(size);
  }
  return out;
}

JordanMultiset operator+(const JordanMultiset& lhs, const JordanMultiset& rhs) {
  if (lhs.p() != rhs.p())
    throw DomainError("cannot combine jordan multisets over different p");
  JordanMultiset out = lhs;
  for (const auto& [size, count] : rhs.multiplicities()) out.add(size, count);
  return out;
}

JordanMultiset projective_free(const JordanMultiset& m) { return m.projective_free(); }

JordanMultiset jordan_tensor(int x, int y, int p) {
  require_prime(p);
  if (x < 1 || x > p - 1 || y < 1 || y > p - 1)
    throw DomainError("jordan tensor factors must lie in 1..p-1");
  JordanMultiset out(p);
  if (x + y <= p) {
    for (int k = 1; k <= std::min(x, y); ++k) out.add(std::abs(x - y) + 2 * k - 1);
    return out;
  }
  // Above the midline only the projective-free part has a closed form; the
  // rest is free and fixed by the dimension count.
  out = jordan_tensor(p - x, p - y, p);
  const long long free_dim = static_cast<long long>(x) * y - out.dimension();
  if (free_dim % p != 0) throw DomainError("internal: free part dimension not divisible by p");
  out.add(p, free_dim / p);
  return out;
}

JordanMultiset hook_simple_restriction(int i, int p) {
  require_prime(p);
  if (i < 1 || i >= p) throw DomainError("hook simple index must lie in 1..p-1");
  JordanMultiset out(p);
  out.add(i % 2 == 1 ? i : p - i);
  return out;
}

JordanMultiset diagonal_restriction(int i, int j, int p) {
  require_prime(p);
  if (j < 1 || i < j || i >= p)
    throw DomainError("diagonal restriction needs 1 <= j <= i <= p-1");
  JordanMultiset out(p);
  if ((i + j) % 2 == 0) {
    const int half = (i + j) / 2;
    for (int k = 1; k <= std::min(half, p - half); ++k)
      out.add(2 * k - 1, std::min(2 * k - 1, i - j + 1));
  } else {
    const int upper = std::min((i + j - 1) / 2, p - (i + j + 1) / 2);
    for (int k = 1; k <= upper; ++k) out.add(p - 2 * k, std::min(2 * k, i - j + 1));
  }
  return out;
}

JordanMultiset diagonal_restriction_oracle(int i, int j, int p) {
  require_prime(p);
  if (j < 1 || i < j || i >= p)
    throw DomainError("diagonal restriction needs 1 <= j <= i <= p-1");
  const auto hook_size = [p](int index) { return index % 2 == 1 ? index : p - index; };
  JordanMultiset out(p);
  for (int k = j; k <= i; ++k)
    out = out + projective_free(jordan_tensor(hook_size(k), hook_size(i + j - k), p));
  return out;
}

long long middle_layer_summand_count(int a, int b, int p) {
  require_prime(p);
  if (b < 2 || a < b || a > p - 2 || a + b > p)
    throw DomainError("summand count needs 2 <= b <= a <= p-2 and a+b <= p");
  if ((a + b) % 2 == 0)
    return static_cast<long long>(a + 3 * b - 2) * (a - b + 2) / 2;
  const long long base = static_cast<long long>(a + 3 * b - 1) * (a - b + 1) / 2;
  if (a + b < p) return base + 2 * b - 1;
  return base + (2 * b - 1) - (a - b + 2);
}

long long filtration_dimension(int a, int b, int p) {
  require_prime(p);
  if (b < 2 || a < b || a > p - 2 || a + b > p)
    throw DomainError("filtration dimension needs 2 <= b <= a <= p-2 and a+b <= p");
  if ((a + b) % 2 == 0) {
    const long long half = static_cast<long long>(a + 3 * b - 2) * (a - b + 2) / 2;
    return p * half + static_cast<long long>(a) * (1 - 2 * b) - b;
  }
  const long long half = static_cast<long long>(a + 3 * b - 1) * (a - b + 1) / 2;
  const long long common = p * half + static_cast<long long>(a) * (2 * b - 1) + b;
  if (a + b < p) return common;
  return common - static_cast<long long>(p) * (a - b + 2);
}

long long hook_simple_dimension(int p, int b) {
  require_prime(p);
  if (b < 2 || b >= p) throw DomainError("hook dimension needs 2 <= b < p");
  // binomial(2p-2, p-b), exact.
  const int n = 2 * p - 2, k = p - b;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

ObstructionVerdict freeness_obstruction(int a, int b, int p) {
  require_prime(p);
  if (p == 2) throw DomainError("the obstruction analysis needs odd p");
  if (b < 1 || a < b || a > p - 1)
    throw DomainError("obstruction needs 1 <= b <= a <= p-1");
  if (a == p - 1 && b == 1)
    throw DomainError("excluded case: [p-1,1] is the complexity-one hook");

  ObstructionVerdict verdict;
  if (a == p - 1) {
    verdict.kind = ObstructionKind::NotFreeByDimension;
    verdict.dimension = hook_simple_dimension(p, b);
    return verdict;
  }
  if (b == 1) {
    // Sign twist carries [a,1] to [p-1,p-a]; same dimension.
    verdict.kind = ObstructionKind::NotFreeByDimension;
    verdict.dimension = hook_simple_dimension(p, p - a);
    return verdict;
  }
  if (a + b > p) {
    verdict.kind = ObstructionKind::ReducedBySignTwist;
    verdict.reduced_label = {p - b, p - a};
    return verdict;
  }
  verdict.kind = ObstructionKind::NotFreeByCount;
  verdict.summands = middle_layer_summand_count(a, b, p);
  verdict.filtered_dim = filtration_dimension(a, b, p);
  if (verdict.summands * p <= verdict.filtered_dim)
    throw DomainError("internal: counting obstruction fails, summands <= dim/p");
  return verdict;
}

JordanMultiset jordan_type_of_nilpotent(const NilpotentMatrix& n_matrix) {
  const int p = n_matrix.p();
  if (n_matrix.rows() != n_matrix.cols())
    throw DomainError("jordan type needs a square matrix");
  const int dim = n_matrix.rows();

  std::vector<int> ranks;
  ranks.push_back(dim);  // rank of N^0
  FpMatrix power = FpMatrix::identity(dim, p);
  for (int t = 1; t <= p; ++t) {
    power = power * n_matrix;
    ranks.push_back(power.rank());
  }
  if (ranks.back() != 0) throw DomainError("matrix is not nilpotent of index <= p");

  JordanMultiset out(p);
  for (int t = 1; t <= p; ++t) {
    const long long blocks_ge_t = ranks[t - 1] - ranks[t];
    const long long blocks_ge_t1 = t < p ? ranks[t] - ranks[t + 1] : 0;
    out.add(t, blocks_ge_t - blocks_ge_t1);
  }
  return out;
}

}  // namespace symblock
