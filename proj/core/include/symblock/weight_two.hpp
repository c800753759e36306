#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symblock/branching.hpp"

namespace symblock {

/// Coordinates [a,b] of a weight-2 partition inside its block, together with
/// the binary invariant eps. The display of a weight-2 partition shows either
/// one bead slid down two rows, two beads of one runner slid down one row
/// each, or beads of two distinct runners slid down one row each; a and b
/// count vacancies in the windows above the displaced beads.
struct WeightTwoLabel {
  int a = 0;    // 0..p-1
  int b = 0;    // 0..p
  int eps = 0;  // 0 or 1, determined by (a, b, block)
  BlockId block;

  std::string str() const;  // "[a,b]"

  friend bool operator==(const WeightTwoLabel&, const WeightTwoLabel&) = default;
};

/// Label of lambda computed from one display; the outcome is independent of
/// the bead count used (tested, not assumed). Requires p odd, weight 2.
WeightTwoLabel label_at(const Partition& lambda, int p, int s);
WeightTwoLabel label_of(const Partition& lambda, int p);

/// The unique partition in the label's block carrying these coordinates;
/// found by enumerating the block. Throws DomainError if unrealized.
Partition partition_of_label(const WeightTwoLabel& label);

/// Resolves (a, b) inside a weight-2 block to a full label.
WeightTwoLabel make_label(const BlockId& block, int a, int b);

/// The p+1 labels of p-singular partitions of a weight-2 Rouquier block:
/// [0,1] and [0,0], [1,0], ..., [p-1,0].
std::vector<WeightTwoLabel> rouquier_singular_labels(const BlockId& b);

/// Tensoring with the signature representation on labels of the principal
/// block of the symmetric group on 2p letters: [a,b] -> [p-b,p-a] (the image
/// reordered to the a >= b convention). Requires a >= b >= 1.
WeightTwoLabel sign_twist_label(const WeightTwoLabel& label);

enum class Route { ToRouquier, ToPrincipal, Both };

/// Routing dichotomy for a p-regular weight-2 partition: eps = 0 induces to a
/// Rouquier block, eps = 1 restricts to the principal block of Sigma_2p, and
/// labels [a,a+1] do both.
Route route_of(const Partition& lambda, int p);
std::string str(Route r);

struct EpsilonFlipReport {
  WkPair pair;
  bool label_invariance = false;     // (a,b) preserved for every member
  std::vector<Partition> flip_sites; // members whose eps changes across the pair
  bool flips_regular_exceptional = false;
  bool flips_zero_to_one = false;
  bool passed = false;
};

/// Checks, over every partition of the pair's upper block, that (a,b) is
/// invariant and that eps flips exactly at the unique p-regular exceptional
/// partition when k = 1 (from 0 to 1) and never when k >= 2.
EpsilonFlipReport epsilon_flip_report(const WkPair& pair);

}  // namespace symblock
