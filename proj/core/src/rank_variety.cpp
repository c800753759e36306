#include "symblock/rank_variety.hpp"

#include <algorithm>

#include "symblock/errors.hpp"
#include "symblock/jordan.hpp"
#include "symblock/partition.hpp"

namespace symblock {

ElemAbelianModule make_module(int p, std::vector<FpMatrix> generators) {
  require_prime(p);
  if (generators.empty()) throw DomainError("module needs at least one generator");
  const int dim = generators.front().rows();
  for (const auto& g : generators) {
    if (g.p() != p) throw DomainError("generators must share the field");
    if (g.rows() != dim || g.cols() != dim)
      throw DomainError("generators must be square of a common size");
    if (!g.pow(p).is_identity())
      throw DomainError("generator order must divide p");
  }
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] * generators[j] != generators[j] * generators[i])
        throw DomainError("generators must commute");
  return ElemAbelianModule{p, dim, std::move(generators)};
}

ElemAbelianModule direct_sum(const ElemAbelianModule& a, const ElemAbelianModule& b) {
  if (a.p != b.p || a.rank() != b.rank())
    throw DomainError("direct sum needs matching p and rank");
  std::vector<FpMatrix> generators;
  for (int i = 0; i < a.rank(); ++i) {
    FpMatrix g(a.dim + b.dim, a.dim + b.dim, a.p);
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < a.dim; ++c) g.set(r, c, a.generators[i].at(r, c));
    for (int r = 0; r < b.dim; ++r)
      for (int c = 0; c < b.dim; ++c) g.set(a.dim + r, a.dim + c, b.generators[i].at(r, c));
    generators.push_back(std::move(g));
  }
  return ElemAbelianModule{a.p, a.dim + b.dim, std::move(generators)};
}

FpMatrix shifted_unit(const ElemAbelianModule& m, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != m.rank())
    throw DomainError("alpha must have one coordinate per generator");
  bool nonzero = false;
  for (int v : alpha) nonzero = nonzero || v % m.p != 0;
  if (!nonzero) throw DomainError("shifted unit needs alpha != 0");
  FpMatrix u = FpMatrix::identity(m.dim, m.p);
  const FpMatrix id = FpMatrix::identity(m.dim, m.p);
  for (int i = 0; i < m.rank(); ++i)
    u = u + (m.generators[i] - id).scaled(alpha[i]);
  return u;
}

FpMatrix group_element(const ElemAbelianModule& m, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != m.rank())
    throw DomainError("alpha must have one coordinate per generator");
  FpMatrix g = FpMatrix::identity(m.dim, m.p);
  for (int i = 0; i < m.rank(); ++i) {
    int e = alpha[i] % m.p;
    if (e < 0) e += m.p;
    g = g * m.generators[i].pow(e);
  }
  return g;
}

bool is_free_over(const ElemAbelianModule& m, const FpMatrix& u) {
  if (u.rows() != m.dim || u.cols() != m.dim || u.p() != m.p)
    throw DomainError("unit must act on the module");
  if (!u.pow(m.p).is_identity()) throw DomainError("unit must have order dividing p");
  const auto type = jordan_type_of_nilpotent(u - FpMatrix::identity(m.dim, m.p));
  return type.multiplicity(m.p) * m.p == m.dim;
}

std::vector<std::vector<int>> rational_points(const ElemAbelianModule& m) {
  const int p = m.p, k = m.rank();
  std::vector<std::vector<int>> points;
  std::vector<int> alpha(static_cast<size_t>(k), 0);

  // Walk all projective representatives: first nonzero coordinate equals 1.
  const auto advance = [&]() {
    for (int i = k - 1; i >= 0; --i) {
      if (++alpha[i] < p) return true;
      alpha[i] = 0;
    }
    return false;
  };
  while (advance()) {
    int first = 0;
    while (alpha[first] == 0) ++first;
    if (alpha[first] != 1) continue;
    const bool free_shifted = is_free_over(m, shifted_unit(m, alpha));
    const bool free_group = is_free_over(m, group_element(m, alpha));
    if (free_shifted != free_group)
      throw std::logic_error("freeness probes disagree at a prime-field point");
    if (!free_shifted) points.push_back(alpha);
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace symblock
