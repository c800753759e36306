#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symblock {

/// A partition: weakly decreasing sequence of positive integers, stored in
/// canonical form (trailing zeros dropped). The empty sequence is the empty
/// partition. Equality is sequence equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "6,1,1,1,1"; "-" (or "") denotes the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const;  // total number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const;  // 1-based; 0 beyond the length

  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// beta_i = lambda_i + s - i for i = 1..s. Requires s >= length(lambda);
/// the result is strictly decreasing and non-negative.
std::vector<int> beta_numbers(const Partition& lambda, int s);

/// Inverse of beta_numbers. Input must be strictly decreasing, >= 0.
Partition partition_from_beta(const std::vector<int>& betas);

/// True iff no part repeats p or more times.
bool is_p_regular(const Partition& lambda, int p);

bool is_prime(int p);
void require_prime(int p);

struct RimHookCell {
  int row = 0, col = 0;  // 1-based coordinates of a cell with hook length p
};

/// All cells whose hook length is exactly p; removing the rim hook of any of
/// them leaves a partition.
std::vector<RimHookCell> removable_rim_hooks(const Partition& lambda, int p);

/// Removes the rim hook determined by `cell` (which must have hook length p).
Partition remove_rim_hook(const Partition& lambda, int p, RimHookCell cell);

/// Strips rim p-hooks off the Young diagram until none remains and returns
/// (core, number of hooks removed). Works on the diagram directly via hook
/// lengths and row surgery; it never touches beta-numbers or the abacus, so
/// it can serve as an independent cross-check for the abacus route.
std::pair<Partition, int> core_by_rim_hook_stripping(const Partition& lambda, int p);

/// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(int n);

}  // namespace symblock
