#include "symblock/weight_two.hpp"

#include <algorithm>

#include "symblock/errors.hpp"

namespace symblock {

namespace {

void require_weight_two_context(int p) {
  require_prime(p);
  if (p == 2) throw DomainError("the weight-2 labelling is defined for odd p");
}

// Number of vacant positions q with lo < q <= hi (or strict on both ends).
int vacancies(const AbacusDisplay& d, int lo, int hi, bool include_hi) {
  int count = 0;
  for (int q = lo + 1; q <= (include_hi ? hi : hi - 1); ++q)
    if (!d.occupied(q)) ++count;
  return count;
}

}  // namespace

std::string WeightTwoLabel::str() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

WeightTwoLabel label_at(const Partition& lambda, int p, int s) {
  require_weight_two_context(p);
  if (p_weight(lambda, p) != 2)
    throw DomainError("labelling requires a partition of p-weight 2");
  const auto d = AbacusDisplay::of(lambda, p, s);
  const auto rows = d.runner_rows();

  // Displaced beads relative to the slid-up display, per runner.
  struct Displaced {
    int runner, position, shift;
  };
  std::vector<Displaced> displaced;
  for (int runner = 0; runner < p; ++runner)
    for (size_t t = 0; t < rows[runner].size(); ++t) {
      const int shift = rows[runner][t] - static_cast<int>(t);
      if (shift > 0)
        displaced.push_back({runner, rows[runner][t] * p + runner, shift});
    }

  const BlockId block = block_of(lambda, p);
  int a = 0, b = 0, eps = 0;
  if (displaced.size() == 1) {
    // One bead slid down two rows: both positions above it are vacant.
    const int x = displaced[0].position;
    a = vacancies(d, x - p, x, false);
    b = vacancies(d, x - 2 * p, x - p, true);
    eps = 1;
  } else if (displaced[0].runner == displaced[1].runner) {
    // Two beads of one runner slid down one row each: bead over bead.
    const int x = std::max(displaced[0].position, displaced[1].position);
    a = vacancies(d, x - p, x, false);
    b = vacancies(d, x - 2 * p, x - p, false);
    eps = 0;
  } else {
    // Beads of two distinct runners slid down one row each.
    const int x = std::max(displaced[0].position, displaced[1].position);
    const int y = std::min(displaced[0].position, displaced[1].position);
    a = vacancies(d, x - p, x, false);
    b = vacancies(d, y - p, y, false);
    eps = (x - p < y) ? 1 : 0;
  }
  return WeightTwoLabel{a, b, eps, block};
}

WeightTwoLabel label_of(const Partition& lambda, int p) {
  return label_at(lambda, p, default_bead_count(lambda, p));
}

namespace {

Partition find_label(const BlockId& block, int a, int b) {
  for (const auto& lambda : block_partitions(block)) {
    const auto found = label_of(lambda, block.p);
    if (found.a == a && found.b == b) return lambda;
  }
  throw DomainError("label [" + std::to_string(a) + "," + std::to_string(b) +
                    "] is not realized in block " + block.str());
}

}  // namespace

Partition partition_of_label(const WeightTwoLabel& label) {
  require_weight_two_context(label.block.p);
  if (label.block.weight != 2) throw DomainError("labels live in weight-2 blocks");
  return find_label(label.block, label.a, label.b);
}

WeightTwoLabel make_label(const BlockId& block, int a, int b) {
  require_weight_two_context(block.p);
  if (block.weight != 2) throw DomainError("labels live in weight-2 blocks");
  const Partition lambda = find_label(block, a, b);
  return label_of(lambda, block.p);
}

std::vector<WeightTwoLabel> rouquier_singular_labels(const BlockId& b) {
  require_weight_two_context(b.p);
  if (b.weight != 2 || !is_rouquier(b))
    throw DomainError("singular label table applies to weight-2 Rouquier blocks");
  std::vector<WeightTwoLabel> out;
  out.push_back(WeightTwoLabel{0, 1, 1, b});
  for (int a = 0; a < b.p; ++a) out.push_back(WeightTwoLabel{a, 0, 0, b});
  return out;
}

WeightTwoLabel sign_twist_label(const WeightTwoLabel& label) {
  const int p = label.block.p;
  require_weight_two_context(p);
  if (!label.block.core.empty() || label.block.weight != 2)
    throw DomainError("sign twist acts on labels of the principal weight-2 block");
  if (label.b < 1 || label.a < label.b)
    throw DomainError("sign twist requires a >= b >= 1");
  return make_label(label.block, p - label.b, p - label.a);
}

Route route_of(const Partition& lambda, int p) {
  if (!is_p_regular(lambda, p))
    throw DomainError("routes are defined for p-regular partitions");
  const auto label = label_of(lambda, p);
  if (label.b == label.a + 1) return Route::Both;
  return label.eps == 0 ? Route::ToRouquier : Route::ToPrincipal;
}

std::string str(Route r) {
  switch (r) {
    case Route::ToRouquier: return "rouquier";
    case Route::ToPrincipal: return "principal";
    case Route::Both: return "both";
  }
  return "?";
}

EpsilonFlipReport epsilon_flip_report(const WkPair& pair) {
  if (pair.upper.weight != 2) throw DomainError("epsilon flips concern weight-2 pairs");
  const int p = pair.upper.p;
  EpsilonFlipReport report{pair, true, {}, true, true, false};
  for (const auto& lambda : block_partitions(pair.upper)) {
    const auto before = label_of(lambda, p);
    const Partition image = restrict_image(lambda, pair);
    const auto after = label_of(image, p);
    if (before.a != after.a || before.b != after.b) report.label_invariance = false;
    if (before.eps != after.eps) {
      report.flip_sites.push_back(lambda);
      if (!(is_p_regular(lambda, p) && is_exceptional(lambda, pair)))
        report.flips_regular_exceptional = false;
      if (!(before.eps == 0 && after.eps == 1)) report.flips_zero_to_one = false;
    }
  }
  const size_t expected_flips = pair.k == 1 ? 1 : 0;
  report.passed = report.label_invariance && report.flip_sites.size() == expected_flips &&
                  report.flips_regular_exceptional && report.flips_zero_to_one;
  return report;
}

}  // namespace symblock
