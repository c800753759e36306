#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symblock/branching.hpp"

namespace symblock {

enum class Justification {
  SpecialCaseTable,
  Projective,
  WeightOne,
  WeightTwoHookException,
  WeightTwoGeneric,
  Rouquier,
  InducesToRouquier,
  HookUpperBound,
  GenericBounds,
};

std::string str(Justification j);

/// Result of the complexity oracle: an exact value (lo == hi) or a certified
/// interval, with the rule that produced it and its evidence.
struct ComplexityResult {
  int lo = 0;
  int hi = 0;
  Justification tag = Justification::GenericBounds;
  std::optional<SemisimpleChain> chain;  // evidence for InducesToRouquier
  std::vector<std::string> trace;        // one line per cascade rule visited

  bool exact() const { return lo == hi; }
};

/// Exact complexity of the simple module labelled by a p-regular partition
/// where the block theory decides it; a certified interval otherwise. The
/// decision cascade (first match wins): hard-coded p = 2 table entry; weight
/// 0 -> 0; weight 1 -> 1; odd p, weight 2 -> 1 at the hook (p+1,1^{p-1}) and
/// 2 otherwise; Rouquier block of weight w < p -> w; semisimple induction to
/// a Rouquier block -> w; the hook family ((w-1)p+1,1^{p-1}) -> [1, w-1];
/// otherwise [1, w].
ComplexityResult complexity_of(const Partition& lambda, int p, const SearchLimits& limits = {});

/// Complexity of the simple module of the principal wreath-product block
/// attached to a composition (a_1, ..., a_k) of w < p: the sum of the parts.
int wreath_block_complexity(const std::vector<int>& composition, int p);

/// Certified upper bound w - 1 for the hook partition ((w-1)p+1, 1^{p-1}),
/// w >= 2, p odd. Fails (by design) for p = 2.
int hook_upper_bound(int w, int p);

}  // namespace symblock
