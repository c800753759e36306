#pragma once

#include <random>
#include <vector>

#include "symblock/abacus.hpp"
#include "symblock/partition.hpp"
#include "symblock/rank_variety.hpp"

namespace symblock::testing {

inline Partition random_partition(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size_dist(0, max_n);
  int remaining = size_dist(rng);
  std::vector<int> parts;
  int cap = remaining;
  while (remaining > 0 && cap > 0) {
    std::uniform_int_distribution<int> part_dist(1, cap);
    int part = part_dist(rng);
    parts.push_back(part);
    remaining -= part;
    cap = std::min(cap, part);
    if (static_cast<int>(parts.size()) > 40) break;
  }
  // Whatever the walk left over is dropped; the prefix is already a partition.
  return Partition(std::move(parts));
}

inline Partition random_core(std::mt19937& rng, int p, int max_count) {
  std::uniform_int_distribution<int> count_dist(0, max_count);
  std::vector<int> counts(static_cast<size_t>(p));
  for (int& c : counts) c = count_dist(rng);
  return core_from_runner_counts(p, counts);
}

// Modules assembled from box quotients of the group algebra (monomial bases,
// g_i acting as 1 + x_i) plus boxed Jordan blocks, glued by direct sum and
// hidden behind a random change of basis.
inline ElemAbelianModule random_commuting_module(std::mt19937& rng, int p, int k, int max_dim) {
  std::uniform_int_distribution<int> edge_dist(1, p);
  std::uniform_int_distribution<int> coin(0, 1);

  std::vector<std::vector<int>> boxes;
  int dim = 0;
  while (boxes.empty() || (dim < max_dim / 2 && coin(rng))) {
    std::vector<int> edges(static_cast<size_t>(k));
    int box_dim = 1;
    for (int& e : edges) {
      e = edge_dist(rng);
      box_dim *= e;
    }
    if (dim + box_dim > max_dim) break;
    boxes.push_back(std::move(edges));
    dim += box_dim;
  }
  if (boxes.empty()) boxes.push_back(std::vector<int>(static_cast<size_t>(k), 1)), dim = 1;

  std::vector<FpMatrix> generators(static_cast<size_t>(k), FpMatrix(dim, dim, p));
  int offset = 0;
  for (const auto& edges : boxes) {
    int box_dim = 1;
    for (int e : edges) box_dim *= e;
    // Basis of the box: exponent vectors a with 0 <= a_i < edges[i], indexed
    // mixed-radix; x_i sends a to a + e_i (dropped at the wall).
    std::vector<int> strides(static_cast<size_t>(k), 1);
    for (int i = k - 2; i >= 0; --i) strides[i] = strides[i + 1] * edges[i + 1];
    for (int g = 0; g < k; ++g) {
      for (int index = 0; index < box_dim; ++index) {
        generators[g].set(offset + index, offset + index, 1);
        const int digit = (index / strides[g]) % edges[g];
        if (digit + 1 < edges[g])
          generators[g].set(offset + index + strides[g], offset + index, 1);
      }
    }
    offset += box_dim;
  }

  // Random change of basis.
  FpMatrix s(dim, dim, p);
  std::uniform_int_distribution<int> entry(0, p - 1);
  do {
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) s.set(r, c, entry(rng));
  } while (s.rank() != dim);
  const FpMatrix inv = s.inverse();
  for (auto& g : generators) g = s * g * inv;
  return make_module(p, std::move(generators));
}

inline ElemAbelianModule conjugated(const ElemAbelianModule& m, std::mt19937& rng) {
  FpMatrix s(m.dim, m.dim, m.p);
  std::uniform_int_distribution<int> entry(0, m.p - 1);
  do {
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c) s.set(r, c, entry(rng));
  } while (s.rank() != m.dim);
  const FpMatrix inv = s.inverse();
  std::vector<FpMatrix> generators;
  for (const auto& g : m.generators) generators.push_back(s * g * inv);
  return make_module(m.p, std::move(generators));
}

// The two directions used to pin down weight-2 lower bounds: the first
// factor's cyclic subgroup and the diagonal one.
inline std::vector<int> line_first_factor() { return {1, 0}; }
inline std::vector<int> line_diagonal() { return {1, 1}; }

}  // namespace symblock::testing
