#pragma once

#include <optional>
#include <vector>

#include "symblock/abacus.hpp"

namespace symblock {

struct BeadRef {
  int position = 0;
  int residue = 0;
};

/// Addable/removable beads of a display together with their residues. A bead
/// is addable iff its succeeding position is unoccupied, removable iff its
/// preceding position is unoccupied; on runner i of a display with s beads
/// the residue is (i - s + 1) mod p for addable beads and (i - s) mod p for
/// removable ones.
struct BeadClassification {
  std::vector<BeadRef> addable;    // ascending position
  std::vector<BeadRef> removable;  // ascending position
};

BeadClassification classify_beads(const AbacusDisplay& d);

/// Removable beads of residue r satisfying the lattice condition below them,
/// topmost (smallest position) first.
std::vector<int> normal_beads(const AbacusDisplay& d, int r);

/// Addable beads of residue r satisfying the lattice condition above them,
/// bottommost (largest position) first.
std::vector<int> conormal_beads(const AbacusDisplay& d, int r);

/// A bead-transfer relation between two blocks: with a common display of s
/// beads, the core of `lower` looks like the core of `upper` except that
/// runner i-1 has k beads more and runner i has k beads less.
struct RunnerTransfer {
  int s = 0;        // common bead count
  int runner = 0;   // the index i (the swap happens at runners i-1, i)
  int k = 0;
  int residue = 0;  // (i - s) mod p
};

std::optional<RunnerTransfer> detect_transfer(const BlockId& upper, const BlockId& lower);

/// A [w:k]-pair: two weight-w blocks whose cores differ by interchanging
/// adjacent runners i-1, i, where runner i of the upper core carries exactly
/// k more beads than runner i-1. n(upper) = n(lower) + k.
struct WkPair {
  BlockId upper;
  BlockId lower;
  int k = 0;
  int runner = 0;
  int residue = 0;
  int bead_count = 0;  // display used to define the pair
};

std::optional<WkPair> detect_wk_pair(const BlockId& upper, const BlockId& lower);

/// Moves the k topmost r-normal beads of lambda's display one position up
/// (restriction direction). Defined when lambda lies in pair.upper and has at
/// least k r-normal beads.
Partition restrict_image(const Partition& lambda, const WkPair& pair);

/// Moves the k bottommost r-conormal beads one position down (induction
/// direction); inverse of restrict_image.
Partition induce_image(const Partition& mu, const WkPair& pair);

/// Display-level versions, no block-membership requirement.
AbacusDisplay restrict_image_display(const AbacusDisplay& d, int residue, int k);
AbacusDisplay induce_image_display(const AbacusDisplay& d, int residue, int k);

struct SocleImage {
  Partition image;
  long long multiplicity = 1;  // k! copies
  bool full = false;           // the whole restriction/induction is semisimple
};

/// Socle of the restriction of the simple labelled by lambda to block
/// `lower`; nullopt when the socle is zero.
std::optional<SocleImage> socle_restriction(const Partition& lambda, const BlockId& lower);

/// Socle of the induction of the simple labelled by mu to block `upper`.
std::optional<SocleImage> socle_induction(const Partition& mu, const BlockId& upper);

/// Partitions of pair.upper with strictly more than k r-normal beads, i.e.
/// those whose restriction across the pair fails to be semisimple.
std::vector<Partition> exceptional_partitions(const WkPair& pair);

bool is_exceptional(const Partition& lambda, const WkPair& pair);

/// Rouquier condition on runner counts: for all i < j, either runner j has at
/// least w-1 beads more than runner i, or runner i has at least w more than
/// runner j. Display-independent.
bool rouquier_condition(const std::vector<int>& counts, int weight);
bool is_rouquier(const BlockId& b);

struct SearchLimits {
  int depth_cap = 500;
  long long node_budget = 200000;
};

/// Chain-closure of [w:k]-pairs with k >= w. Throws UndecidedError when the
/// bounded search hits its caps without an answer.
bool is_scopes_equivalent(const BlockId& b, const BlockId& c, const SearchLimits& limits = {});

enum class ChainDirection { Induce, Restrict };

struct ChainStep {
  WkPair pair;
  Partition image;      // image of the tracked partition after this step
  int moved_beads = 0;  // normal/conormal bead count at the step (== k)
};

/// A sequence of [w:k]-pair moves along which the tracked simple stays
/// non-exceptional (exactly k normal resp. conormal beads at every step).
struct SemisimpleChain {
  ChainDirection direction = ChainDirection::Induce;
  Partition start;
  BlockId start_block;
  std::vector<ChainStep> steps;

  const BlockId& final_block() const;
  const Partition& final_image() const;
};

/// Re-checks every step of the chain from scratch.
bool verify_chain(const SemisimpleChain& chain);

/// Upward chain ending at a Rouquier block with every image non-exceptional.
/// Uses a deterministic staircase climb with a breadth-first fallback;
/// nullopt when the search space is exhausted, UndecidedError at the caps.
std::optional<SemisimpleChain> induce_chain_to_rouquier(const Partition& lambda, int p,
                                                        const SearchLimits& limits = {});

/// Downward chain from a weight-2 partition to the principal block of the
/// symmetric group on 2p letters; termination is guaranteed.
std::optional<SemisimpleChain> restrict_chain_to_principal(const Partition& lambda, int p,
                                                           const SearchLimits& limits = {});

}  // namespace symblock
