#include <doctest.h>

#include <algorithm>

#include "exstat/partition.hpp"

using namespace exstat;

TEST_CASE("partition counts up to weight 12") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(partition_count(n) == expected[n]);
}

TEST_CASE("canonical order is descending-lex, 1-based") {
  PartitionTable t4 = enumerate_partitions(4);
  REQUIRE(t4.count() == 5);
  CHECK(t4.at(1).str() == "(4)");
  CHECK(t4.at(2).str() == "(3,1)");
  CHECK(t4.at(3).str() == "(2,2)");
  CHECK(t4.at(4).str() == "(2,1,1)");
  CHECK(t4.at(5).str() == "(1,1,1,1)");

  PartitionTable t6 = enumerate_partitions(6);
  REQUIRE(t6.count() == 11);
  std::vector<std::string> expected = {
      "(6)",       "(5,1)",     "(4,2)",       "(4,1,1)",
      "(3,3)",     "(3,2,1)",   "(3,1,1,1)",   "(2,2,2)",
      "(2,2,1,1)", "(2,1,1,1,1)", "(1,1,1,1,1,1)"};
  for (int j = 1; j <= 11; ++j) CHECK(t6.at(j).str() == expected[j - 1]);
}

TEST_CASE("position inverts at") {
  for (int n = 1; n <= 8; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int j = 1; j <= t.count(); ++j) CHECK(t.position(t.at(j)) == j);
  }
}

TEST_CASE("first and last entries bracket the table") {
  for (int n = 1; n <= 10; ++n) {
    PartitionTable t = enumerate_partitions(n);
    CHECK(t.at(1).length() == 1);
    CHECK(t.at(1).parts[0] == n);
    CHECK(t.at(t.count()).length() == n);
    CHECK(t.at(t.count()).parts[0] == 1);
  }
}

TEST_CASE("weight, length, multiplicity") {
  Partition p({3, 2, 2, 1});
  CHECK(p.weight() == 8);
  CHECK(p.length() == 4);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.multiplicity(3) == 1);
  CHECK(p.multiplicity(5) == 0);
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  CHECK(conjugate(Partition({4, 1})) == Partition({2, 1, 1, 1}));
  CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  // involution
  for (int n = 1; n <= 8; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int j = 1; j <= t.count(); ++j)
      CHECK(conjugate(conjugate(t.at(j))) == t.at(j));
  }
}

TEST_CASE("dominance examples") {
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({4})));
  CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  // the classic incomparable pair at weight 6
  CHECK_FALSE(dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  CHECK_FALSE(dominance_leq(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  // reflexive
  CHECK(dominance_leq(Partition({3, 2, 1}), Partition({3, 2, 1})));
}

TEST_CASE("symmetric-group irrep dimensions") {
  PartitionTable t5 = enumerate_partitions(5);
  const long expected[] = {1, 4, 5, 6, 5, 4, 1};
  for (int j = 1; j <= 7; ++j) CHECK(sn_irrep_dim(t5.at(j)) == expected[j - 1]);
  // sum of squares = n!
  long sum = 0;
  for (int j = 1; j <= 7; ++j) {
    long d = sn_irrep_dim(t5.at(j));
    sum += d * d;
  }
  CHECK(sum == 120);
}

TEST_CASE("unitary-group irrep dimensions") {
  CHECK(um_irrep_dim(Partition({3}), 4) == 20);
  CHECK(um_irrep_dim(Partition({2, 1}), 4) == 20);
  CHECK(um_irrep_dim(Partition({1, 1, 1}), 4) == 4);
  CHECK(um_irrep_dim(Partition({5}), 6) == 252);
  CHECK(um_irrep_dim(Partition({3, 2}), 6) == 420);
  CHECK(um_irrep_dim(Partition({2, 2, 1}), 6) == 210);
  // a shape taller than the level count carries no states
  CHECK(um_irrep_dim(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("hook-content formula matches direct tableau enumeration") {
  for (int n = 1; n <= 5; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int j = 1; j <= t.count(); ++j)
      for (int m = 1; m <= 5; ++m)
        CHECK(um_irrep_dim(t.at(j), m) ==
              um_irrep_dim_enumerated(t.at(j), m));
  }
}

TEST_CASE("parse and print round-trip") {
  CHECK(parse_partition("(3,1)") == Partition({3, 1}));
  CHECK(parse_partition("()") == Partition(std::vector<int>{}));
  CHECK(Partition(std::vector<int>{}).str() == "()");
  for (int n = 1; n <= 7; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int j = 1; j <= t.count(); ++j)
      CHECK(parse_partition(t.at(j).str()) == t.at(j));
  }
  CHECK(parse_partition("3,1") == Partition({3, 1}));
  CHECK_THROWS_AS(parse_partition("(1,3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("(3,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
}

TEST_CASE("partitions must be weakly decreasing and positive") {
  CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}
