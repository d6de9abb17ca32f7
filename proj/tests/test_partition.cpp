#include <doctest.h>

#include <set>

#include "gme/labels.hpp"
#include "gme/partition.hpp"

using namespace gme;

TEST_CASE("partition canonical form holds the lowest mode") {
  const auto p = ModePartition::of(4, {2});
  CHECK(p.alice() == std::vector<int>{0, 1, 3});
  CHECK(p.bob() == std::vector<int>{2});
  CHECK(p.to_string() == "{1,2,4}");
  CHECK(p == ModePartition::of(4, {0, 1, 3}));
}

TEST_CASE("partition rejects empty, full, duplicate and out-of-range sets") {
  CHECK_THROWS_AS(ModePartition::of(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(ModePartition::of(3, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ModePartition::of(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ModePartition::of(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(ModePartition::of(1, {0}), std::invalid_argument);
}

TEST_CASE("bipartition counts: 2^{N-1} - 1, no duplicates under complementation") {
  CHECK(enumerate_bipartitions(2).size() == 1);
  CHECK(enumerate_bipartitions(3).size() == 3);
  CHECK(enumerate_bipartitions(4).size() == 7);
  for (int n = 2; n <= 10; ++n) {
    const auto partitions = enumerate_bipartitions(n);
    CHECK(partitions.size() == (1u << (n - 1)) - 1);
    std::set<std::vector<int>> seen;
    for (const auto& p : partitions) {
      CHECK(p.alice().front() == 0);  // canonical => complement duplicates impossible
      CHECK(seen.insert(p.alice()).second);
    }
  }
  CHECK_THROWS_AS(enumerate_bipartitions(1), std::invalid_argument);
}

TEST_CASE("bipartitions are ordered by size then lexicographically") {
  const auto parts = enumerate_bipartitions(4);
  REQUIRE(parts.size() == 7);
  CHECK(parts[0].alice() == std::vector<int>{0});
  CHECK(parts[1].alice() == std::vector<int>{0, 1});
  CHECK(parts[2].alice() == std::vector<int>{0, 2});
  CHECK(parts[3].alice() == std::vector<int>{0, 3});
  CHECK(parts[4].alice() == std::vector<int>{0, 1, 2});
  CHECK(parts[5].alice() == std::vector<int>{0, 1, 3});
  CHECK(parts[6].alice() == std::vector<int>{0, 2, 3});
}

TEST_CASE("family labels round-trip: the seven P labels of four modes") {
  const auto parts = family_partitions(StateFamily::linear4);
  std::set<std::string> labels;
  for (const auto& p : parts) {
    const auto label = partition_label(StateFamily::linear4, p);
    labels.insert(label);
    CHECK(partition_from_label(StateFamily::linear4, label) == p);
  }
  CHECK(labels == std::set<std::string>{"P1", "P2", "P3", "P4", "P12", "P13", "P14"});

  CHECK(partition_from_label(StateFamily::linear4, "P2") == ModePartition::of(4, {1}));
  CHECK(partition_from_label(StateFamily::linear4, "P13") == ModePartition::of(4, {0, 2}));
  CHECK(partition_from_label(StateFamily::linear4, "{1,3}") == ModePartition::of(4, {0, 2}));
}

TEST_CASE("tripartite labels are the lone paper mode") {
  const auto parts = family_partitions(StateFamily::tripartite);
  std::set<std::string> labels;
  for (const auto& p : parts) labels.insert(partition_label(StateFamily::tripartite, p));
  CHECK(labels == std::set<std::string>{"0", "1", "2"});
  CHECK(partition_from_label(StateFamily::tripartite, "1") == ModePartition::of(3, {1}));
  CHECK_THROWS_AS(partition_from_label(StateFamily::tripartite, "P9"), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_label(StateFamily::linear4, "P15"), std::invalid_argument);
}
