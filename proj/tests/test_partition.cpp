#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "symblock/abacus.hpp"
#include "symblock/errors.hpp"
#include "symblock/partition.hpp"

using namespace symblock;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}  // namespace

TEST_CASE("partition normalization and parsing") {
  CHECK(Partition({4, 1, 0, 0}) == P({4, 1}));
  CHECK(Partition::parse("6,1,1,1,1") == P({6, 1, 1, 1, 1}));
  CHECK(Partition::parse("-") == Partition{});
  CHECK(Partition{}.str() == "-");
  CHECK(P({2, 2, 1}).str() == "2,2,1");
  CHECK(P({2, 2, 1}).n() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, -1}), DomainError);
  CHECK_THROWS_AS(Partition::parse("2,x"), DomainError);
}

TEST_CASE("beta numbers match the defining formula") {
  CHECK(beta_numbers(Partition{}, 3) == std::vector<int>{2, 1, 0});
  CHECK(beta_numbers(P({4, 1}), 2) == std::vector<int>{5, 1});
  CHECK(beta_numbers(P({2, 2, 1}), 5) == std::vector<int>{6, 5, 3, 1, 0});
  CHECK_THROWS_AS(beta_numbers(P({4, 1}), 1), DomainError);
}

TEST_CASE("beta numbers invert") {
  CHECK(partition_from_beta({2, 1, 0}) == Partition{});
  CHECK(partition_from_beta({5, 1}) == P({4, 1}));
  CHECK(partition_from_beta({6, 5, 3, 1, 0}) == P({2, 2, 1}));
  CHECK_THROWS_AS(partition_from_beta({3, 3, 1}), DomainError);
  CHECK_THROWS_AS(partition_from_beta({3, -1}), DomainError);
}

TEST_CASE("beta round trip over all small partitions") {
  for (int n = 0; n <= 25; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int s = lambda.length(); s <= lambda.length() + 10; ++s)
        CHECK(partition_from_beta(beta_numbers(lambda, s)) == lambda);
}

TEST_CASE("abacus displays") {
  CHECK(AbacusDisplay::of(Partition{}, 3, 3).positions() == std::vector<int>{0, 1, 2});
  CHECK(AbacusDisplay::of(P({4, 1}), 3, 2).positions() == std::vector<int>{1, 5});
  CHECK(AbacusDisplay::of(P({4, 1}), 3, 5).positions() == std::vector<int>{0, 1, 2, 4, 8});
}

TEST_CASE("bead moves remove rim hooks") {
  const auto d = AbacusDisplay::of(P({4, 1}), 3, 2);  // {5,1}
  const auto moved = move_bead(d, 5, 2);
  CHECK(moved.positions() == std::vector<int>{1, 2});
  CHECK(moved.to_partition() == P({1, 1}));  // a 3-hook came off (4,1)

  const auto core_display = AbacusDisplay::of(Partition{}, 3, 3);
  CHECK_THROWS_AS(move_bead(core_display, 2, 1), DomainError);
  CHECK_THROWS_AS(move_bead(core_display, 1, 4), DomainError);

  const auto five = AbacusDisplay::of(P({4, 1}), 3, 5);
  CHECK(move_bead(five, 8, 5).positions() == std::vector<int>{0, 1, 2, 4, 5});
}

TEST_CASE("bead moves change the size by the hook length") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lambda = testing::random_partition(rng, 18);
    const int p = std::vector<int>{2, 3, 5}[trial % 3];
    const int s = default_bead_count(lambda, p) + trial % 4;
    const auto d = AbacusDisplay::of(lambda, p, s);
    for (int from : d.positions())
      for (int to = 0; to < from; ++to) {
        if (d.occupied(to)) continue;
        CHECK(lambda.n() - move_bead(d, from, to).to_partition().n() == from - to);
      }
  }
}

TEST_CASE("cores and weights") {
  CHECK(p_core(P({1, 1}), 3) == P({1, 1}));
  CHECK(p_core(P({4, 1}), 3) == P({1, 1}));
  CHECK(p_core(P({6, 1, 1, 1, 1}), 5) == Partition{});
  CHECK(p_weight(Partition{}, 5) == 0);
  CHECK(p_weight(P({4, 1}), 3) == 1);
  CHECK(p_weight(P({6, 1, 1, 1, 1}), 5) == 2);
}

TEST_CASE("blocks") {
  CHECK(block_of(P({6, 1, 1, 1, 1}), 5) == make_block(5, Partition{}, 2));
  CHECK(block_of(Partition{}, 7) == make_block(7, Partition{}, 0));
  CHECK(block_of(P({4, 1}), 3) == make_block(3, P({1, 1}), 1));
  CHECK_THROWS_AS(make_block(3, P({4, 1}), 1), DomainError);  // not a core
  CHECK_THROWS_AS(make_block(4, Partition{}, 1), DomainError);
  CHECK(principal_block(6, 3) == make_block(3, Partition{}, 2));
  CHECK(principal_block(11, 5) == make_block(5, P({1}), 2));
}

TEST_CASE("rim hook stripping oracle") {
  CHECK(core_by_rim_hook_stripping(Partition{}, 5) == std::pair{Partition{}, 0});
  CHECK(core_by_rim_hook_stripping(P({4, 1}), 3) == std::pair{P({1, 1}), 1});
  CHECK(core_by_rim_hook_stripping(P({6, 1, 1, 1, 1}), 5) == std::pair{Partition{}, 2});
}

TEST_CASE("oracle agrees with the abacus on small partitions") {
  for (int n = 0; n <= 14; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int p : {2, 3, 5, 7}) {
        const auto [core, removed] = core_by_rim_hook_stripping(lambda, p);
        CHECK(core == p_core(lambda, p));
        CHECK(removed == p_weight(lambda, p));
      }
}

TEST_CASE("the stripping order never matters") {
  std::mt19937 rng(7);
  for (int n = 6; n <= 16; n += 2)
    for (const auto& lambda : partitions_of(n)) {
      for (int p : {2, 3}) {
        const auto expected = core_by_rim_hook_stripping(lambda, p);
        for (int trial = 0; trial < 3; ++trial) {
          Partition current = lambda;
          int removed = 0;
          for (;;) {
            auto cells = removable_rim_hooks(current, p);
            if (cells.empty()) break;
            std::uniform_int_distribution<size_t> pick(0, cells.size() - 1);
            current = remove_rim_hook(current, p, cells[pick(rng)]);
            ++removed;
          }
          CHECK(current == expected.first);
          CHECK(removed == expected.second);
        }
      }
    }
}

TEST_CASE("core and weight are display stable") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto lambda = testing::random_partition(rng, 20);
    for (int p : {2, 3, 5}) {
      const int s = default_bead_count(lambda, p);
      const auto core_small = AbacusDisplay::of(lambda, p, s).slid_up().to_partition();
      const auto core_large = AbacusDisplay::of(lambda, p, s + p).slid_up().to_partition();
      CHECK(core_small == core_large);
      CHECK(core_small == p_core(lambda, p));
    }
  }
}

TEST_CASE("weight zero means the partition is its own core") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int p : {2, 3, 5})
        CHECK((p_weight(lambda, p) == 0) == (p_core(lambda, p) == lambda));
}

TEST_CASE("regularity") {
  CHECK_FALSE(is_p_regular(P({1, 1, 1}), 3));
  CHECK(is_p_regular(P({6, 1, 1, 1, 1}), 5));
  CHECK_FALSE(is_p_regular(P({2, 2, 2, 1}), 3));
  CHECK(is_p_regular(Partition{}, 2));
}

TEST_CASE("block enumeration finds exactly the members") {
  const auto members = block_partitions(make_block(3, Partition{}, 2));
  std::vector<Partition> expected;
  for (const auto& lambda : partitions_of(6))
    if (p_core(lambda, 3) == Partition{}) expected.push_back(lambda);
  std::sort(expected.begin(), expected.end());
  CHECK(members == expected);
  CHECK(members.size() == 9);

  for (int p : {2, 3, 5})
    for (int n = 2; n <= 3 * p; ++n) {
      // every partition of n shows up in the enumeration of its own block
      for (const auto& lambda : partitions_of(n)) {
        const auto block = block_of(lambda, p);
        const auto all = block_partitions(block);
        CHECK(std::binary_search(all.begin(), all.end(), lambda));
      }
    }
}
