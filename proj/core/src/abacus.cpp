#include "symblock/abacus.hpp"

#include <algorithm>
#include <functional>

#include "symblock/errors.hpp"

namespace symblock {

AbacusDisplay::AbacusDisplay(int p, std::vector<int> positions)
    : p_(p), positions_(std::move(positions)) {
  require_prime(p);
  std::sort(positions_.begin(), positions_.end());
  for (size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 0) throw DomainError("abacus positions must be non-negative");
    if (i > 0 && positions_[i] == positions_[i - 1])
      throw DomainError("abacus positions must be distinct");
  }
}

AbacusDisplay AbacusDisplay::of(const Partition& lambda, int p, int s) {
  return AbacusDisplay(p, beta_numbers(lambda, s));
}

bool AbacusDisplay::occupied(int pos) const {
  return std::binary_search(positions_.begin(), positions_.end(), pos);
}

int AbacusDisplay::max_position() const {
  return positions_.empty() ? -1 : positions_.back();
}

std::vector<int> AbacusDisplay::runner_counts() const {
  std::vector<int> counts(static_cast<size_t>(p_), 0);
  for (int pos : positions_) ++counts[pos % p_];
  return counts;
}

std::vector<std::vector<int>> AbacusDisplay::runner_rows() const {
  std::vector<std::vector<int>> rows(static_cast<size_t>(p_));
  for (int pos : positions_) rows[pos % p_].push_back(pos / p_);
  return rows;
}

Partition AbacusDisplay::to_partition() const {
  std::vector<int> betas(positions_.rbegin(), positions_.rend());
  return partition_from_beta(betas);
}

AbacusDisplay AbacusDisplay::slid_up() const {
  std::vector<int> slid;
  slid.reserve(positions_.size());
  const auto counts = runner_counts();
  for (int runner = 0; runner < p_; ++runner)
    for (int row = 0; row < counts[runner]; ++row) slid.push_back(row * p_ + runner);
  return AbacusDisplay(p_, std::move(slid));
}

AbacusDisplay AbacusDisplay::with_bead_shifted(int from, int to) const {
  if (!occupied(from)) throw DomainError("illegal move: source position is vacant");
  if (to < 0 || occupied(to)) throw DomainError("illegal move: target position is occupied");
  std::vector<int> next = positions_;
  *std::find(next.begin(), next.end(), from) = to;
  return AbacusDisplay(p_, std::move(next));
}

int default_bead_count(const Partition& lambda, int p) {
  require_prime(p);
  const int l = std::max(lambda.length(), 1);
  return ((l + p - 1) / p) * p;
}

AbacusDisplay move_bead(const AbacusDisplay& d, int from, int to) {
  if (from <= to) throw DomainError("illegal move: beads move to lower-numbered positions");
  return d.with_bead_shifted(from, to);
}

Partition p_core(const Partition& lambda, int p) {
  const auto d = AbacusDisplay::of(lambda, p, default_bead_count(lambda, p));
  return d.slid_up().to_partition();
}

int p_weight(const Partition& lambda, int p) {
  const auto d = AbacusDisplay::of(lambda, p, default_bead_count(lambda, p));
  int weight = 0;
  for (const auto& rows : d.runner_rows())
    for (size_t i = 0; i < rows.size(); ++i) weight += rows[i] - static_cast<int>(i);
  return weight;
}

std::string BlockId::str() const {
  return "(p=" + std::to_string(p) + ", core=" + core.str() +
         ", weight=" + std::to_string(weight) + ")";
}

BlockId block_of(const Partition& lambda, int p) {
  return BlockId{p, p_core(lambda, p), p_weight(lambda, p)};
}

BlockId make_block(int p, Partition core, int weight) {
  require_prime(p);
  if (weight < 0) throw DomainError("block weight must be non-negative");
  if (p_weight(core, p) != 0) throw DomainError("block core must be a p-core");
  return BlockId{p, std::move(core), weight};
}

BlockId principal_block(int n, int p) {
  if (n < 0) throw DomainError("principal block needs n >= 0");
  if (n == 0) return BlockId{p, Partition{}, 0};
  return block_of(Partition({n}), p);
}

int block_bead_count(const BlockId& b) {
  require_prime(b.p);
  const int needed = std::max(b.core.length() + b.weight * b.p, 1);
  return ((needed + b.p - 1) / b.p) * b.p;
}

Partition core_from_runner_counts(int p, const std::vector<int>& counts) {
  require_prime(p);
  if (static_cast<int>(counts.size()) != p)
    throw DomainError("need one bead count per runner");
  std::vector<int> positions;
  for (int runner = 0; runner < p; ++runner) {
    if (counts[runner] < 0) throw DomainError("runner counts must be non-negative");
    for (int row = 0; row < counts[runner]; ++row) positions.push_back(row * p + runner);
  }
  return AbacusDisplay(p, std::move(positions)).to_partition();
}

std::vector<Partition> block_partitions(const BlockId& b) {
  const int s = block_bead_count(b);
  const auto core_display = AbacusDisplay::of(b.core, b.p, s);
  const auto core_rows = core_display.runner_rows();

  std::vector<Partition> out;
  std::vector<Partition> tuple(static_cast<size_t>(b.p));

  // Runner j of the core display is top-justified with counts[j] beads; the
  // quotient component q assigns displacement q_m to the m-th bead from the
  // bottom. counts[j] >= weight by the choice of s, so no component is ever
  // too long to realize.
  auto realize = [&](const std::vector<Partition>& quotient) {
    std::vector<int> positions;
    positions.reserve(static_cast<size_t>(s));
    for (int runner = 0; runner < b.p; ++runner) {
      const int beads = static_cast<int>(core_rows[runner].size());
      const Partition& q = quotient[runner];
      if (q.length() > beads) return;  // unreachable with our bead count
      for (int t = 0; t < beads; ++t) {
        const int from_bottom = beads - t;  // 1-based index from the bottom
        positions.push_back((t + q.part(from_bottom)) * b.p + runner);
      }
    }
    out.push_back(AbacusDisplay(b.p, std::move(positions)).to_partition());
  };

  std::function<void(int, int)> walk = [&](int slot, int remaining) {
    if (slot == b.p) {
      if (remaining == 0) realize(tuple);
      return;
    }
    for (int size = 0; size <= remaining; ++size) {
      for (const auto& q : partitions_of(size)) {
        tuple[slot] = q;
        walk(slot + 1, remaining - size);
      }
    }
    tuple[slot] = Partition{};
  };
  walk(0, b.weight);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symblock
