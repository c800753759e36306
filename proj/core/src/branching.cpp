#include "symblock/branching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "symblock/errors.hpp"

namespace symblock {

namespace {

int mod(int value, int p) { return ((value % p) + p) % p; }

long long factorial(int k) {
  long long out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

BeadClassification classify_beads(const AbacusDisplay& d) {
  const int p = d.p();
  const int s = d.bead_count();
  BeadClassification result;
  for (int pos : d.positions()) {
    const int runner = pos % p;
    if (!d.occupied(pos + 1)) result.addable.push_back({pos, mod(runner - s + 1, p)});
    if (pos > 0 && !d.occupied(pos - 1)) result.removable.push_back({pos, mod(runner - s, p)});
  }
  return result;
}

namespace {

// Beads of residue r in position order, tagged +1 for removable, -1 for addable.
std::vector<std::pair<int, int>> residue_signature(const BeadClassification& c, int r) {
  std::vector<std::pair<int, int>> signature;
  for (const auto& bead : c.removable)
    if (bead.residue == r) signature.emplace_back(bead.position, +1);
  for (const auto& bead : c.addable)
    if (bead.residue == r) signature.emplace_back(bead.position, -1);
  std::sort(signature.begin(), signature.end());
  return signature;
}

}  // namespace

std::vector<int> normal_beads(const AbacusDisplay& d, int r) {
  const auto signature = residue_signature(classify_beads(d), r);
  std::vector<int> normals;
  for (size_t i = 0; i < signature.size(); ++i) {
    if (signature[i].second != +1) continue;
    // Walking down from the bead, removables must never fall behind addables.
    int running = 0;
    bool ok = true;
    for (size_t j = i + 1; j < signature.size() && ok; ++j) {
      running += signature[j].second;
      ok = running >= 0;
    }
    if (ok) normals.push_back(signature[i].first);
  }
  return normals;  // ascending = topmost first
}

std::vector<int> conormal_beads(const AbacusDisplay& d, int r) {
  const auto signature = residue_signature(classify_beads(d), r);
  std::vector<int> conormals;
  for (size_t i = 0; i < signature.size(); ++i) {
    if (signature[i].second != -1) continue;
    // Walking up from the bead, addables must never fall behind removables.
    int running = 0;
    bool ok = true;
    for (size_t j = i; j-- > 0 && ok;) {
      running -= signature[j].second;
      ok = running >= 0;
    }
    if (ok) conormals.push_back(signature[i].first);
  }
  std::reverse(conormals.begin(), conormals.end());  // bottommost first
  return conormals;
}

namespace {

int sweep_base(const BlockId& upper, const BlockId& lower) {
  const int p = upper.p;
  const int needed = std::max({upper.core.length() + upper.weight * p,
                               lower.core.length() + lower.weight * p, 1});
  return ((needed + p - 1) / p) * p;
}

}  // namespace

std::optional<RunnerTransfer> detect_transfer(const BlockId& upper, const BlockId& lower) {
  if (upper.p != lower.p) return std::nullopt;
  const int p = upper.p;
  const int base = sweep_base(upper, lower);
  for (int s = base; s < base + p; ++s) {
    const auto counts_upper = AbacusDisplay::of(upper.core, p, s).runner_counts();
    const auto counts_lower = AbacusDisplay::of(lower.core, p, s).runner_counts();
    int first_diff = -1, second_diff = -1;
    bool other_diff = false;
    for (int j = 0; j < p; ++j) {
      if (counts_upper[j] == counts_lower[j]) continue;
      if (first_diff < 0) first_diff = j;
      else if (second_diff < 0) second_diff = j;
      else other_diff = true;
    }
    if (other_diff || second_diff < 0 || second_diff != first_diff + 1) continue;
    const int k = counts_lower[first_diff] - counts_upper[first_diff];
    if (k < 1) continue;
    if (counts_upper[second_diff] - counts_lower[second_diff] != k) continue;
    if (lower.n() != upper.n() - k) continue;
    return RunnerTransfer{s, second_diff, k, mod(second_diff - s, p)};
  }
  return std::nullopt;
}

std::optional<WkPair> detect_wk_pair(const BlockId& upper, const BlockId& lower) {
  if (upper.weight != lower.weight) return std::nullopt;
  const auto transfer = detect_transfer(upper, lower);
  if (!transfer) return std::nullopt;
  // For a genuine pair the lower core is the upper core with runners i-1, i
  // interchanged, i.e. runner i of the upper display carries exactly k more
  // beads than runner i-1.
  const auto counts = AbacusDisplay::of(upper.core, upper.p, transfer->s).runner_counts();
  if (counts[transfer->runner] - counts[transfer->runner - 1] != transfer->k)
    return std::nullopt;
  return WkPair{upper, lower, transfer->k, transfer->runner, transfer->residue, transfer->s};
}

AbacusDisplay restrict_image_display(const AbacusDisplay& d, int residue, int k) {
  const auto normals = normal_beads(d, residue);
  if (static_cast<int>(normals.size()) < k)
    throw DomainError("restriction image undefined: fewer than k normal beads");
  auto positions = d.positions();
  for (int i = 0; i < k; ++i)
    *std::find(positions.begin(), positions.end(), normals[i]) = normals[i] - 1;
  return AbacusDisplay(d.p(), std::move(positions));
}

AbacusDisplay induce_image_display(const AbacusDisplay& d, int residue, int k) {
  const auto conormals = conormal_beads(d, residue);
  if (static_cast<int>(conormals.size()) < k)
    throw DomainError("induction image undefined: fewer than k conormal beads");
  auto positions = d.positions();
  for (int i = 0; i < k; ++i)
    *std::find(positions.begin(), positions.end(), conormals[i]) = conormals[i] + 1;
  return AbacusDisplay(d.p(), std::move(positions));
}

Partition restrict_image(const Partition& lambda, const WkPair& pair) {
  if (block_of(lambda, pair.upper.p) != pair.upper)
    throw DomainError("partition does not lie in the pair's upper block");
  const auto d = AbacusDisplay::of(lambda, pair.upper.p, pair.bead_count);
  return restrict_image_display(d, pair.residue, pair.k).to_partition();
}

Partition induce_image(const Partition& mu, const WkPair& pair) {
  if (block_of(mu, pair.lower.p) != pair.lower)
    throw DomainError("partition does not lie in the pair's lower block");
  const auto d = AbacusDisplay::of(mu, pair.lower.p, pair.bead_count);
  return induce_image_display(d, pair.residue, pair.k).to_partition();
}

std::optional<SocleImage> socle_restriction(const Partition& lambda, const BlockId& lower) {
  const BlockId upper = block_of(lambda, lower.p);
  if (!is_p_regular(lambda, lower.p))
    throw DomainError("socle restriction needs a p-regular partition");
  const auto transfer = detect_transfer(upper, lower);
  if (!transfer)
    throw DomainError("blocks are not related by an adjacent-runner transfer");
  const auto d = AbacusDisplay::of(lambda, lower.p, transfer->s);
  const auto normals = normal_beads(d, transfer->residue);
  const int count = static_cast<int>(normals.size());
  if (count < transfer->k) return std::nullopt;
  return SocleImage{restrict_image_display(d, transfer->residue, transfer->k).to_partition(),
                    factorial(transfer->k), count == transfer->k};
}

std::optional<SocleImage> socle_induction(const Partition& mu, const BlockId& upper) {
  const BlockId lower = block_of(mu, upper.p);
  if (!is_p_regular(mu, upper.p))
    throw DomainError("socle induction needs a p-regular partition");
  const auto transfer = detect_transfer(upper, lower);
  if (!transfer)
    throw DomainError("blocks are not related by an adjacent-runner transfer");
  const auto d = AbacusDisplay::of(mu, upper.p, transfer->s);
  const auto conormals = conormal_beads(d, transfer->residue);
  const int count = static_cast<int>(conormals.size());
  if (count < transfer->k) return std::nullopt;
  return SocleImage{induce_image_display(d, transfer->residue, transfer->k).to_partition(),
                    factorial(transfer->k), count == transfer->k};
}

std::vector<Partition> exceptional_partitions(const WkPair& pair) {
  std::vector<Partition> out;
  for (const auto& lambda : block_partitions(pair.upper))
    if (is_exceptional(lambda, pair)) out.push_back(lambda);
  return out;
}

bool is_exceptional(const Partition& lambda, const WkPair& pair) {
  const auto d = AbacusDisplay::of(lambda, pair.upper.p, pair.bead_count);
  return static_cast<int>(normal_beads(d, pair.residue).size()) > pair.k;
}

bool rouquier_condition(const std::vector<int>& counts, int weight) {
  const int p = static_cast<int>(counts.size());
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (counts[j] - counts[i] < weight - 1 && counts[i] - counts[j] < weight)
        return false;
  return true;
}

bool is_rouquier(const BlockId& b) {
  const auto d = AbacusDisplay::of(b.core, b.p, block_bead_count(b));
  return rouquier_condition(d.runner_counts(), b.weight);
}

namespace {

struct Move {
  BlockId target;
  int s = 0, runner = 0, k = 0, residue = 0;
  bool upward = false;
};

// Adjacent-runner swap moves available from a block, across one full residue
// system of bead counts. Upward moves swap a descent (runner i-1 heavier),
// downward moves swap an ascent.
std::vector<Move> swap_moves(const BlockId& b, bool upward, int min_k) {
  const int p = b.p;
  const int base = block_bead_count(b);
  std::vector<Move> moves;
  std::set<BlockId> seen;
  for (int s = base; s < base + p; ++s) {
    const auto counts = AbacusDisplay::of(b.core, p, s).runner_counts();
    for (int i = 1; i < p; ++i) {
      const int gap = upward ? counts[i - 1] - counts[i] : counts[i] - counts[i - 1];
      if (gap < std::max(min_k, 1)) continue;
      auto swapped = counts;
      std::swap(swapped[i - 1], swapped[i]);
      BlockId target{p, core_from_runner_counts(p, swapped), b.weight};
      if (!seen.insert(target).second) continue;
      moves.push_back({std::move(target), s, i, gap, mod(i - s, p), upward});
    }
  }
  return moves;
}

WkPair pair_of_move(const BlockId& from, const Move& move) {
  if (move.upward)
    return WkPair{move.target, from, move.k, move.runner, move.residue, move.s};
  return WkPair{from, move.target, move.k, move.runner, move.residue, move.s};
}

// Applies an upward move to the tracked partition; nullopt when the image
// would be exceptional (conormal bead count != k).
std::optional<Partition> apply_upward(const Partition& image, const Move& move, int p) {
  const auto d = AbacusDisplay::of(image, p, move.s);
  const auto conormals = conormal_beads(d, move.residue);
  if (static_cast<int>(conormals.size()) != move.k) return std::nullopt;
  return induce_image_display(d, move.residue, move.k).to_partition();
}

std::optional<Partition> apply_downward(const Partition& image, const Move& move, int p) {
  const auto d = AbacusDisplay::of(image, p, move.s);
  const auto normals = normal_beads(d, move.residue);
  if (static_cast<int>(normals.size()) != move.k) return std::nullopt;
  return restrict_image_display(d, move.residue, move.k).to_partition();
}

}  // namespace

bool is_scopes_equivalent(const BlockId& b, const BlockId& c, const SearchLimits& limits) {
  if (b.p != c.p) return false;
  if (b.weight != c.weight) return false;  // pairs preserve weight
  if (b == c) return true;
  std::set<BlockId> visited{b};
  std::deque<std::pair<BlockId, int>> frontier{{b, 0}};
  long long expanded = 0;
  while (!frontier.empty()) {
    auto [current, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= limits.depth_cap)
      throw UndecidedError("scopes search reached its depth cap");
    for (bool upward : {false, true}) {
      for (const auto& move : swap_moves(current, upward, b.weight)) {
        if (move.target == c) return true;
        if (!visited.insert(move.target).second) continue;
        if (++expanded > limits.node_budget)
          throw UndecidedError("scopes search exhausted its node budget");
        frontier.emplace_back(move.target, depth + 1);
      }
    }
  }
  return false;
}

const BlockId& SemisimpleChain::final_block() const {
  if (steps.empty()) return start_block;
  return direction == ChainDirection::Induce ? steps.back().pair.upper
                                             : steps.back().pair.lower;
}

const Partition& SemisimpleChain::final_image() const {
  return steps.empty() ? start : steps.back().image;
}

bool verify_chain(const SemisimpleChain& chain) {
  const int p = chain.start_block.p;
  if (block_of(chain.start, p) != chain.start_block) return false;
  Partition image = chain.start;
  BlockId block = chain.start_block;
  for (const auto& step : chain.steps) {
    const auto& pair = step.pair;
    const bool induce = chain.direction == ChainDirection::Induce;
    if ((induce ? pair.lower : pair.upper) != block) return false;
    if (!detect_wk_pair(pair.upper, pair.lower)) return false;
    const auto d = AbacusDisplay::of(image, p, pair.bead_count);
    if (induce) {
      if (static_cast<int>(conormal_beads(d, pair.residue).size()) != pair.k) return false;
      image = induce_image_display(d, pair.residue, pair.k).to_partition();
    } else {
      if (static_cast<int>(normal_beads(d, pair.residue).size()) != pair.k) return false;
      image = restrict_image_display(d, pair.residue, pair.k).to_partition();
    }
    if (image != step.image) return false;
    block = induce ? pair.upper : pair.lower;
    if (block_of(image, p) != block) return false;
  }
  return true;
}

namespace {

// Deterministic upward climb: repeatedly re-display (s -> s+1) so that the
// runners most in need of extra beads pick them up, then bubble descents
// (smallest runner index first) until the counts are sorted again. Each
// re-display batch increments the top j sorted counts by one, so the count
// profile converges to an ascending staircase with gaps >= w-1, which is
// Rouquier. Fails over to breadth-first search when a required swap would
// make the tracked image exceptional.
std::optional<SemisimpleChain> climb_to_rouquier(const Partition& lambda, const BlockId& start,
                                                 const SearchLimits& limits) {
  const int p = start.p;
  const int w = start.weight;
  SemisimpleChain chain{ChainDirection::Induce, lambda, start, {}};
  BlockId block = start;
  Partition image = lambda;
  int s = block_bead_count(start);

  auto counts_at = [&](int beads) {
    return AbacusDisplay::of(block.core, p, beads).runner_counts();
  };

  while (static_cast<int>(chain.steps.size()) < limits.depth_cap) {
    auto counts = counts_at(s);
    if (rouquier_condition(counts, w)) return chain;

    // Smallest descent first.
    int descent = -1;
    for (int i = 1; i < p && descent < 0; ++i)
      if (counts[i - 1] > counts[i]) descent = i;

    if (descent < 0) {
      // Sorted ascending but not Rouquier: plan how many of the top counts
      // need one more bead and re-display that many times.
      const int gap = std::max(w - 1, 1);
      std::vector<int> sorted = counts;
      std::sort(sorted.begin(), sorted.end());
      int deficit_from = p;
      int delta = 0, target = sorted[0];
      for (int i = 1; i < p; ++i) {
        const int next = std::max(sorted[i] + delta, target + gap);
        delta = next - sorted[i];
        target = next;
        if (delta > 0) {
          deficit_from = std::min(deficit_from, i);
        }
      }
      if (deficit_from == p) return std::nullopt;  // cannot happen: not Rouquier
      s += p - deficit_from;
      continue;
    }

    const int k = counts[descent - 1] - counts[descent];
    Move move{{}, s, descent, k, mod(descent - s, p), true};
    auto swapped = counts;
    std::swap(swapped[descent - 1], swapped[descent]);
    move.target = BlockId{p, core_from_runner_counts(p, swapped), w};
    const auto next = apply_upward(image, move, p);
    if (!next) return std::nullopt;  // exceptional image: give up on the greedy route
    chain.steps.push_back({pair_of_move(block, move), *next, move.k});
    block = move.target;
    image = *next;
  }
  throw UndecidedError("induction chain search reached its depth cap");
}

// Deterministic downward walk: take the first ascent swap (smallest display,
// smallest runner) whose image stays non-exceptional. n strictly decreases,
// and away from the target block some ascent always exists, so the walk ends
// at the principal block unless an image obstruction forces the fallback.
std::optional<SemisimpleChain> descend_to_principal(const Partition& lambda,
                                                    const BlockId& start,
                                                    const BlockId& target,
                                                    const SearchLimits& limits) {
  const int p = start.p;
  SemisimpleChain chain{ChainDirection::Restrict, lambda, start, {}};
  BlockId block = start;
  Partition image = lambda;
  while (static_cast<int>(chain.steps.size()) < limits.depth_cap) {
    if (block == target) return chain;
    bool moved = false;
    for (const auto& move : swap_moves(block, /*upward=*/false, 1)) {
      const auto next = apply_downward(image, move, p);
      if (!next) continue;
      chain.steps.push_back({pair_of_move(block, move), *next, move.k});
      block = move.target;
      image = *next;
      moved = true;
      break;
    }
    if (!moved) return std::nullopt;  // every ascent is image-exceptional
  }
  return std::nullopt;
}

struct SearchNode {
  BlockId block;
  Partition image;
  int parent = -1;
  ChainStep step;
};

std::optional<SemisimpleChain> chain_bfs(const Partition& lambda, const BlockId& start,
                                         bool upward, const BlockId* goal_block,
                                         bool stop_at_rouquier, const SearchLimits& limits) {
  const int p = start.p;
  std::vector<SearchNode> nodes{{start, lambda, -1, {}}};
  std::map<std::pair<Partition, Partition>, bool> visited;
  visited[{start.core, lambda}] = true;
  std::deque<std::pair<int, int>> frontier{{0, 0}};  // node index, depth

  auto emit = [&](int index) {
    SemisimpleChain chain{upward ? ChainDirection::Induce : ChainDirection::Restrict, lambda,
                          start, {}};
    std::vector<ChainStep> steps;
    for (int at = index; at > 0; at = nodes[at].parent) steps.push_back(nodes[at].step);
    std::reverse(steps.begin(), steps.end());
    chain.steps = std::move(steps);
    return chain;
  };

  if ((stop_at_rouquier && is_rouquier(start)) || (goal_block && start == *goal_block))
    return emit(0);

  while (!frontier.empty()) {
    auto [index, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= limits.depth_cap)
      throw UndecidedError("chain search reached its depth cap");
    const BlockId block = nodes[index].block;
    const Partition image = nodes[index].image;
    for (const auto& move : swap_moves(block, upward, 1)) {
      const auto next =
          upward ? apply_upward(image, move, p) : apply_downward(image, move, p);
      if (!next) continue;
      if (visited.count({move.target.core, *next})) continue;
      visited[{move.target.core, *next}] = true;
      if (static_cast<long long>(nodes.size()) > limits.node_budget)
        throw UndecidedError("chain search exhausted its node budget");
      nodes.push_back({move.target, *next, index, {pair_of_move(block, move), *next, move.k}});
      const int at = static_cast<int>(nodes.size()) - 1;
      if ((stop_at_rouquier && is_rouquier(move.target)) ||
          (goal_block && move.target == *goal_block))
        return emit(at);
      frontier.emplace_back(at, depth + 1);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SemisimpleChain> induce_chain_to_rouquier(const Partition& lambda, int p,
                                                        const SearchLimits& limits) {
  require_prime(p);
  if (!is_p_regular(lambda, p))
    throw DomainError("induction chains are defined for p-regular partitions");
  const BlockId start = block_of(lambda, p);
  if (is_rouquier(start))
    return SemisimpleChain{ChainDirection::Induce, lambda, start, {}};
  if (auto chain = climb_to_rouquier(lambda, start, limits)) return chain;
  return chain_bfs(lambda, start, /*upward=*/true, nullptr, /*stop_at_rouquier=*/true, limits);
}

std::optional<SemisimpleChain> restrict_chain_to_principal(const Partition& lambda, int p,
                                                           const SearchLimits& limits) {
  require_prime(p);
  if (!is_p_regular(lambda, p))
    throw DomainError("restriction chains are defined for p-regular partitions");
  const BlockId start = block_of(lambda, p);
  if (start.weight != 2)
    throw DomainError("restriction chains to the principal block need p-weight 2");
  const BlockId target = make_block(p, Partition{}, 2);
  if (auto chain = descend_to_principal(lambda, start, target, limits)) return chain;
  return chain_bfs(lambda, start, /*upward=*/false, &target, /*stop_at_rouquier=*/false,
                   limits);
}

}  // namespace symblock
