#pragma once

#include <string>
#include <vector>

#include "symblock/partition.hpp"

namespace symblock {

/// The James p-abacus: p runners labelled 0..p-1 left to right, positions
/// numbered left to right, top down, from 0. A display of a partition with s
/// beads occupies exactly the positions given by its beta-numbers.
class AbacusDisplay {
 public:
  AbacusDisplay(int p, std::vector<int> positions);
  static AbacusDisplay of(const Partition& lambda, int p, int s);

  int p() const { return p_; }
  int bead_count() const { return static_cast<int>(positions_.size()); }
  const std::vector<int>& positions() const { return positions_; }  // ascending
  bool occupied(int pos) const;
  int max_position() const;

  std::vector<int> runner_counts() const;
  /// Bead row indices per runner, ascending (position = row * p + runner).
  std::vector<std::vector<int>> runner_rows() const;

  Partition to_partition() const;
  /// All beads slid as far up their runners as possible (a core display).
  AbacusDisplay slid_up() const;
  /// Occupancy-checked single-bead move, either direction.
  AbacusDisplay with_bead_shifted(int from, int to) const;

  friend bool operator==(const AbacusDisplay&, const AbacusDisplay&) = default;

 private:
  int p_ = 2;
  std::vector<int> positions_;
};

/// Least positive multiple of p that is >= length(lambda). Chosen so that a
/// core of the principal block displays with equal runner counts.
int default_bead_count(const Partition& lambda, int p);

/// Moves a bead from an occupied position to a vacant lower-numbered one;
/// removes a rim hook of length from - to from the displayed partition.
AbacusDisplay move_bead(const AbacusDisplay& d, int from, int to);

Partition p_core(const Partition& lambda, int p);
int p_weight(const Partition& lambda, int p);

/// Identity of a block of a symmetric group algebra: (p, p-core, p-weight).
/// The block contains the partitions of n(core) + weight * p with that core.
struct BlockId {
  int p = 2;
  Partition core;
  int weight = 0;

  int n() const { return core.n() + weight * p; }
  std::string str() const;

  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

BlockId block_of(const Partition& lambda, int p);
/// Validates that core is a p-core and weight >= 0.
BlockId make_block(int p, Partition core, int weight);
BlockId principal_block(int n, int p);

/// Least positive multiple of p that is >= length(core) + weight * p. Every
/// partition of the block displays with this many beads, and each runner
/// carries at least `weight` beads.
int block_bead_count(const BlockId& b);

/// The p-core displayed by stacking counts[j] beads at the top of runner j.
Partition core_from_runner_counts(int p, const std::vector<int>& counts);

/// All partitions lying in the block, enumerated through p-quotients.
std::vector<Partition> block_partitions(const BlockId& b);

}  // namespace symblock
