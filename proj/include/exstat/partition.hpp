#pragma once

// Integer partitions of N, the canonical descending ordering used for every
// vector and matrix index in this library, dominance order, and the irrep
// dimensions of S_N and U(m).
//
// Ordering convention: partitions of the same weight are listed so that at
// the first differing part the larger part comes first.  Hence ordered[1] is
// the single-row partition (N) and ordered[P(N)] is the single-column (1^N).
// All indices J, I are 1-based to match that convention.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace exstat {

struct Partition {
  // Parts are strictly positive and non-increasing; empty means the unique
  // partition of 0.
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  // Multiplicity of a given part value.
  int multiplicity(int value) const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  // Strict total order: weight ascending, then the descending-first-part
  // convention within a weight class (so (4) < (3,1) < (2,2) < ... < (1^4)).
  bool operator<(const Partition& o) const;

  // Renders as "(3,1)" / "(1,1,1,1)" / "()".
  std::string str() const;
};

struct PartitionTable {
  int n = 0;
  std::vector<Partition> ordered;       // 0-based storage, 1-based via at()
  std::map<Partition, int> index;       // partition -> 1-based position

  PartitionTable() = default;
  // PartitionTable(n) would otherwise compile as parenthesized aggregate
  // initialization and yield an empty table; build via enumerate_partitions.
  explicit PartitionTable(int) = delete;

  int count() const { return static_cast<int>(ordered.size()); }
  const Partition& at(int j) const;     // 1-based
  int position(const Partition& p) const;  // 1-based; throws if absent
};

// All partitions of n in the canonical descending order; P(n) entries.
// n = 0 yields the single empty partition.
PartitionTable enumerate_partitions(int n);

// Number of partitions of n (size of the table).
long partition_count(int n);

// Transpose of the Young diagram; an involution.
Partition conjugate(const Partition& lambda);

// Dominance order: true iff every prefix sum of mu is <= the corresponding
// prefix sum of lambda (shorter partition padded with zeros).  Throws
// std::invalid_argument when the weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Dimension f_lambda of the S_N irrep labeled by lambda, via the product
// formula over shifted parts l_i = lambda_i + l(lambda) - i:
//   f = N! * prod_{i<j} (l_i - l_j) / prod_i l_i!
long sn_irrep_dim(const Partition& lambda);

// Dimension of the U(m) irrep labeled by lambda: the number of semistandard
// Young tableaux of shape lambda with entries in {1..m}; zero when the shape
// has more than m rows.  Enumerates tableaux directly for weight <= 8 and
// switches to the hook-content product formula beyond; the two agree on the
// overlap (tested).
long um_irrep_dim(const Partition& lambda, int m);

// Direct SSYT backtracking count, exposed so tests can cross-check the
// product formula on the overlap region.
long um_irrep_dim_enumerated(const Partition& lambda, int m);

// Parses "(3,1)" or "3,1" into a partition; validates shape.
Partition parse_partition(const std::string& s);

}  // namespace exstat
