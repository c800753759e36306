#include <doctest.h>

#include <random>
#include <set>

#include "support/generators.hpp"
#include "symblock/branching.hpp"
#include "symblock/errors.hpp"

using namespace symblock;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// All pairs (upper, lower) among weight-w blocks of the given p with
// n(upper) <= max_n, found through the detector.
std::vector<WkPair> enumerate_pairs(int p, int w, int max_n) {
  std::vector<BlockId> blocks;
  for (int m = 0; m + w * p <= max_n; ++m)
    for (const auto& kappa : partitions_of(m))
      if (p_weight(kappa, p) == 0) blocks.push_back(make_block(p, kappa, w));
  std::vector<WkPair> pairs;
  for (const auto& upper : blocks)
    for (const auto& lower : blocks)
      if (auto pair = detect_wk_pair(upper, lower)) pairs.push_back(*pair);
  return pairs;
}

}  // namespace

TEST_CASE("bead classification") {
  const auto core3 = AbacusDisplay::of(Partition{}, 3, 3);
  const auto c = classify_beads(core3);
  CHECK(c.removable.empty());
  REQUIRE(c.addable.size() == 1);
  CHECK(c.addable[0].position == 2);
  CHECK(c.addable[0].residue == 0);

  const auto full = AbacusDisplay::of(Partition{}, 3, 6);  // positions 0..5
  const auto cf = classify_beads(full);
  CHECK(cf.removable.empty());
  REQUIRE(cf.addable.size() == 1);
  CHECK(cf.addable[0].position == 5);

  const auto d = AbacusDisplay::of(P({4, 1}), 3, 2);  // {5,1}
  const auto cd = classify_beads(d);
  REQUIRE(cd.removable.size() == 2);
  CHECK(cd.removable[0].position == 1);
  CHECK(cd.removable[0].residue == 2);
  CHECK(cd.removable[1].position == 5);
  CHECK(cd.removable[1].residue == 0);
  REQUIRE(cd.addable.size() == 2);
  CHECK(cd.addable[0].position == 1);
  CHECK(cd.addable[0].residue == 0);
  CHECK(cd.addable[1].position == 5);
  CHECK(cd.addable[1].residue == 1);
}

TEST_CASE("normal and conormal beads") {
  const auto core3 = AbacusDisplay::of(Partition{}, 3, 3);
  for (int r = 0; r < 3; ++r) CHECK(normal_beads(core3, r).empty());
  CHECK(conormal_beads(core3, 0) == std::vector<int>{2});
  CHECK(conormal_beads(core3, 1).empty());

  const auto d = AbacusDisplay::of(P({4, 1}), 3, 2);  // {5,1}
  CHECK(normal_beads(d, 0) == std::vector<int>{5});
  CHECK(normal_beads(d, 2) == std::vector<int>{1});
  CHECK(normal_beads(d, 1).empty());
  CHECK(conormal_beads(d, 1) == std::vector<int>{5});
  CHECK(conormal_beads(d, 0) == std::vector<int>{1});
}

TEST_CASE("socle of restriction: the weight-2 hook drops to the previous hook") {
  // Restricting D(6,1,1,1,1) from Sigma_10: the weight-0 destination block
  // receives the whole module, the weight-1 block receives nothing.
  const Partition lambda = P({6, 1, 1, 1, 1});
  const auto full = socle_restriction(lambda, make_block(5, P({5, 1, 1, 1, 1}), 0));
  REQUIRE(full.has_value());
  CHECK(full->image == P({5, 1, 1, 1, 1}));
  CHECK(full->multiplicity == 1);
  CHECK(full->full);

  const auto zero = socle_restriction(lambda, make_block(5, P({1, 1, 1, 1}), 1));
  CHECK_FALSE(zero.has_value());

  CHECK_THROWS_AS(socle_restriction(P({1, 1, 1, 1, 1}), make_block(5, P({1, 1, 1, 1}), 0)),
                  DomainError);  // p-singular input
}

TEST_CASE("socle of restriction for a core moving one node") {
  // (2,1) is a 3-core; removing its residue-1 node lands in the block of (1,1).
  const auto image = socle_restriction(P({2, 1}), make_block(3, P({1, 1}), 0));
  REQUIRE(image.has_value());
  CHECK(image->image == P({1, 1}));
  CHECK(image->full);
  // Dual: inducing (1,1) back up.
  const auto up = socle_induction(P({1, 1}), make_block(3, P({2, 1}), 0));
  REQUIRE(up.has_value());
  CHECK(up->image == P({2, 1}));
}

TEST_CASE("pair detection") {
  for (int p : {3, 5, 7}) {
    const auto pair = detect_wk_pair(principal_block(2 * p + 1, p), principal_block(2 * p, p));
    REQUIRE(pair.has_value());
    CHECK(pair->k == 1);
    CHECK(pair->upper.n() == pair->lower.n() + 1);
  }
  const auto b0 = principal_block(10, 5);
  CHECK_FALSE(detect_wk_pair(b0, b0).has_value());

  // Two Rouquier blocks one adjacent-runner swap apart, gap k = 2 >= w.
  const auto upper = make_block(5, core_from_runner_counts(5, {2, 3, 5, 7, 9}), 2);
  const auto lower = make_block(5, core_from_runner_counts(5, {2, 3, 7, 5, 9}), 2);
  CHECK(is_rouquier(upper));
  CHECK(is_rouquier(lower));
  const auto pair = detect_wk_pair(upper, lower);
  REQUIRE(pair.has_value());
  CHECK(pair->k == 2);
}

TEST_CASE("restriction and induction images invert across enumerated pairs") {
  for (int p : {3, 5}) {
    for (const auto& pair : enumerate_pairs(p, 2, 3 * p + 4)) {
      for (const auto& lambda : block_partitions(pair.upper)) {
        const Partition down = restrict_image(lambda, pair);
        CHECK(block_of(down, p) == pair.lower);
        CHECK(down.n() == lambda.n() - pair.k);
        CHECK(induce_image(down, pair) == lambda);
        CHECK(is_p_regular(lambda, p) == is_p_regular(down, p));
      }
    }
  }
}

TEST_CASE("exceptional partitions across pairs") {
  for (int p : {3, 5}) {
    for (int w : {1, 2, 3}) {
      for (const auto& pair : enumerate_pairs(p, w, 3 * p + 6)) {
        const auto exceptional = exceptional_partitions(pair);
        CHECK(exceptional.empty() == (w <= pair.k));
        // The images of the exceptional set are exactly the lower block's
        // members with too many conormal beads.
        std::set<Partition> mapped;
        for (const auto& lambda : exceptional)
          mapped.insert(restrict_image(lambda, pair));
        std::set<Partition> lower_exceptional;
        for (const auto& mu : block_partitions(pair.lower)) {
          const auto d = AbacusDisplay::of(mu, p, pair.bead_count);
          if (static_cast<int>(conormal_beads(d, pair.residue).size()) > pair.k)
            lower_exceptional.insert(mu);
        }
        CHECK(mapped == lower_exceptional);
      }
    }
  }
}

TEST_CASE("weight-0 and weight-1 blocks are rouquier") {
  CHECK(is_rouquier(make_block(5, P({2, 1}), 0)));
  CHECK(is_rouquier(make_block(3, P({1, 1}), 1)));
  CHECK(is_rouquier(make_block(5, Partition{}, 1)));
}

TEST_CASE("rouquier detection") {
  CHECK_FALSE(is_rouquier(principal_block(10, 5)));  // equal runner counts
  CHECK(is_rouquier(make_block(5, core_from_runner_counts(5, {1, 2, 3, 4, 5}), 2)));
  CHECK_FALSE(is_rouquier(make_block(3, core_from_runner_counts(3, {2, 2, 5}), 2)));
}

TEST_CASE("rouquier detection is display independent") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = std::vector<int>{2, 3, 5, 7}[trial % 4];
    const int w = 1 + trial % 3;
    const auto core = testing::random_core(rng, p, 6);
    const int s = default_bead_count(core, p) + w * p;
    const auto at_s = AbacusDisplay::of(core, p, s).runner_counts();
    const auto at_sp = AbacusDisplay::of(core, p, s + p).runner_counts();
    CHECK(rouquier_condition(at_s, w) == rouquier_condition(at_sp, w));
  }
}

TEST_CASE("scopes equivalence") {
  const auto b0 = principal_block(6, 3);
  CHECK(is_scopes_equivalent(b0, b0));
  CHECK_FALSE(is_scopes_equivalent(b0, make_block(3, Partition{}, 1)));  // weights differ

  // The principal blocks on 6 and 7 letters form a [2:1]-pair, but k = 1 < 2
  // is not a Scopes move and neither block has any k >= 2 move at all.
  CHECK_FALSE(is_scopes_equivalent(principal_block(7, 3), b0));

  // One swap of gap 2 links these weight-2 Rouquier blocks.
  const auto upper = make_block(5, core_from_runner_counts(5, {2, 3, 5, 7, 9}), 2);
  const auto lower = make_block(5, core_from_runner_counts(5, {2, 3, 7, 5, 9}), 2);
  CHECK(is_scopes_equivalent(upper, lower));
}

TEST_CASE("induction chains reach rouquier blocks") {
  // Already Rouquier: the trivial chain.
  const Partition rouquier_member = [] {
    const auto block = make_block(3, core_from_runner_counts(3, {1, 2, 3}), 2);
    return block_partitions(block).front();
  }();
  const auto trivial = induce_chain_to_rouquier(rouquier_member, 3);
  REQUIRE(trivial.has_value());
  CHECK(trivial->steps.empty());
  CHECK(verify_chain(*trivial));

  // A genuine climb out of the principal block.
  const auto chain = induce_chain_to_rouquier(P({3, 3}), 3);
  REQUIRE(chain.has_value());
  CHECK(is_rouquier(chain->final_block()));
  CHECK(verify_chain(*chain));
  CHECK_FALSE(chain->steps.empty());

  CHECK_THROWS_AS(induce_chain_to_rouquier(P({1, 1, 1}), 3), DomainError);  // singular
}

TEST_CASE("restriction chains reach the principal block") {
  const auto block = make_block(3, core_from_runner_counts(3, {1, 2, 3}), 2);
  for (const auto& lambda : block_partitions(block)) {
    if (!is_p_regular(lambda, 3)) continue;
    const auto chain = restrict_chain_to_principal(lambda, 3);
    if (!chain) continue;  // members routed only upward
    CHECK(chain->final_block() == principal_block(6, 3));
    CHECK(verify_chain(*chain));
  }
  // Already principal: trivial chain.
  const auto trivial = restrict_chain_to_principal(P({4, 1, 1}), 3);
  REQUIRE(trivial.has_value());
  CHECK(trivial->steps.empty());

  CHECK_THROWS_AS(restrict_chain_to_principal(P({4, 1}), 3), DomainError);  // weight 1
}

TEST_CASE("chain searches respect the depth cap") {
  SearchLimits tight;
  tight.depth_cap = 1;
  tight.node_budget = 5;
  CHECK_THROWS_AS(induce_chain_to_rouquier(P({3, 3}), 3, tight), UndecidedError);
}

TEST_CASE("induction image of a lower core display is the upper core") {
  for (int p : {3, 5}) {
    for (const auto& pair : enumerate_pairs(p, 2, 3 * p + 4)) {
      const auto lower_core = AbacusDisplay::of(pair.lower.core, p, pair.bead_count);
      const auto lifted = induce_image_display(lower_core, pair.residue, pair.k);
      CHECK(lifted.to_partition() == pair.upper.core);
    }
  }
}
