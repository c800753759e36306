#include "symblock/complexity.hpp"

#include <numeric>

#include "symblock/errors.hpp"

namespace symblock {

std::string str(Justification j) {
  switch (j) {
    case Justification::SpecialCaseTable: return "special-case-table";
    case Justification::Projective: return "projective";
    case Justification::WeightOne: return "weight-one";
    case Justification::WeightTwoHookException: return "weight-two-hook-exception";
    case Justification::WeightTwoGeneric: return "weight-two-generic";
    case Justification::Rouquier: return "rouquier";
    case Justification::InducesToRouquier: return "induces-to-rouquier";
    case Justification::HookUpperBound: return "hook-upper-bound";
    case Justification::GenericBounds: return "generic-bounds";
  }
  return "?";
}

namespace {

Partition hook_partition(int arm, int leg) {
  std::vector<int> parts{arm};
  parts.insert(parts.end(), static_cast<size_t>(leg), 1);
  return Partition(std::move(parts));
}

ComplexityResult exact(int value, Justification tag, std::vector<std::string> trace) {
  return ComplexityResult{value, value, tag, std::nullopt, std::move(trace)};
}

}  // namespace

ComplexityResult complexity_of(const Partition& lambda, int p, const SearchLimits& limits) {
  require_prime(p);
  if (!is_p_regular(lambda, p))
    throw DomainError("complexity oracle needs a p-regular partition (no simple module)");

  const BlockId block = block_of(lambda, p);
  const int w = block.weight;
  std::vector<std::string> trace;
  trace.push_back("block " + block.str());

  // Lone p = 2 value known beyond the general rules.
  if (p == 2 && lambda == Partition({3, 1})) {
    trace.push_back("table: (3,1) at p=2 has complexity 2");
    return exact(2, Justification::SpecialCaseTable, std::move(trace));
  }
  trace.push_back("table: not applicable");

  if (w == 0) {
    trace.push_back("weight 0: simple module projective, complexity 0");
    return exact(0, Justification::Projective, std::move(trace));
  }
  trace.push_back("weight 0: no");

  if (w == 1) {
    trace.push_back("weight 1: non-projective with cyclic defect, complexity 1");
    return exact(1, Justification::WeightOne, std::move(trace));
  }
  trace.push_back("weight 1: no");

  if (p != 2 && w == 2) {
    if (lambda == hook_partition(p + 1, p - 1)) {
      trace.push_back("weight 2: the hook (p+1,1^{p-1}), complexity 1");
      return exact(1, Justification::WeightTwoHookException, std::move(trace));
    }
    trace.push_back("weight 2: complexity 2");
    return exact(2, Justification::WeightTwoGeneric, std::move(trace));
  }
  trace.push_back("weight-2 rule: not applicable");

  if (w < p && is_rouquier(block)) {
    trace.push_back("rouquier block of weight " + std::to_string(w));
    return exact(w, Justification::Rouquier, std::move(trace));
  }
  trace.push_back("rouquier: no");

  if (w < p) {
    std::optional<SemisimpleChain> chain;
    try {
      chain = induce_chain_to_rouquier(lambda, p, limits);
    } catch (const UndecidedError&) {
      trace.push_back("induction chain: undecided at the search caps");
    }
    if (chain) {
      trace.push_back("induces semisimply to a rouquier block in " +
                      std::to_string(chain->steps.size()) + " steps");
      ComplexityResult result = exact(w, Justification::InducesToRouquier, std::move(trace));
      result.chain = std::move(chain);
      return result;
    }
    if (trace.back() != "induction chain: undecided at the search caps")
      trace.push_back("induction chain: none found");
  } else {
    trace.push_back("induction chain: skipped (weight >= p)");
  }

  if (p != 2 && w >= 2 && lambda == hook_partition((w - 1) * p + 1, p - 1)) {
    trace.push_back("hook family ((w-1)p+1,1^{p-1}): bounded above by w-1");
    return ComplexityResult{1, w - 1, Justification::HookUpperBound, std::nullopt,
                            std::move(trace)};
  }

  const int r_max = block.n() / p;
  trace.push_back("generic bounds: [1, min(w, n/p)]");
  return ComplexityResult{1, std::min(w, r_max), Justification::GenericBounds, std::nullopt,
                          std::move(trace)};
}

int wreath_block_complexity(const std::vector<int>& composition, int p) {
  require_prime(p);
  int w = 0;
  for (int part : composition) {
    if (part < 1) throw DomainError("composition parts must be positive");
    w += part;
  }
  if (w >= p) throw DomainError("wreath rule needs total weight < p");
  return w;
}

int hook_upper_bound(int w, int p) {
  require_prime(p);
  if (p == 2) throw DomainError("the hook bound fails at p = 2");
  if (w < 2) throw DomainError("the hook bound needs weight >= 2");
  return w - 1;
}

}  // namespace symblock
