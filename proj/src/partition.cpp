#include "exstat/partition.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace exstat {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), value));
}

bool Partition::operator<(const Partition& o) const {
  int wa = weight(), wb = o.weight();
  if (wa != wb) return wa < wb;
  // Same weight: the partition whose first differing part is larger comes
  // first.  Equal weight rules out one parts-list being a strict prefix of
  // the other, so plain lexicographic-greater is exactly that order.
  return parts > o.parts;
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  out += ")";
  return out;
}

const Partition& PartitionTable::at(int j) const {
  if (j < 1 || j > count())
    throw std::out_of_range("partition index out of range");
  return ordered[j - 1];
}

int PartitionTable::position(const Partition& p) const {
  auto it = index.find(p);
  if (it == index.end())
    throw std::invalid_argument("partition " + p.str() + " is not a partition of " +
                                std::to_string(n));
  return it->second;
}

PartitionTable enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  PartitionTable table;
  table.n = n;
  std::vector<int> current;
  // Descending-first-part recursion emits exactly the canonical order:
  // the largest available part is tried first at every position.
  std::function<void(int, int)> emit = [&](int remaining, int max_part) {
    if (remaining == 0) {
      table.ordered.emplace_back(Partition{current});
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      emit(remaining - part, part);
      current.pop_back();
    }
  };
  emit(n, n == 0 ? 1 : n);
  for (size_t i = 0; i < table.ordered.size(); ++i)
    table.index[table.ordered[i]] = static_cast<int>(i) + 1;
  return table;
}

long partition_count(int n) {
  return static_cast<long>(enumerate_partitions(n).ordered.size());
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (!lambda.parts.empty()) {
    cols.resize(lambda.parts[0], 0);
    for (int part : lambda.parts)
      for (int c = 0; c < part; ++c) cols[c] += 1;
  }
  return Partition{std::move(cols)};
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw std::invalid_argument("dominance compares partitions of equal weight");
  int len = std::max(mu.length(), lambda.length());
  int pm = 0, pl = 0;
  for (int i = 0; i < len; ++i) {
    pm += i < mu.length() ? mu.parts[i] : 0;
    pl += i < lambda.length() ? lambda.parts[i] : 0;
    if (pm > pl) return false;
  }
  return true;
}

long sn_irrep_dim(const Partition& lambda) {
  int n = lambda.weight();
  int len = lambda.length();
  if (n == 0) return 1;
  // Shifted parts l_i = lambda_i + len - i (1-based i) are strictly
  // decreasing non-negative integers.
  std::vector<long> l(len);
  for (int i = 0; i < len; ++i) l[i] = lambda.parts[i] + (len - 1 - i);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), n);
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) num *= (l[i] - l[j]);
  mpz_class den = 1;
  for (int i = 0; i < len; ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), l[i]);
    den *= f;
  }
  mpz_class q = num / den;
  return q.get_si();
}

long um_irrep_dim_enumerated(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0;
  if (lambda.parts.empty()) return 1;
  // Fill cells row-major with entries in 1..m, rows weakly increasing,
  // columns strictly increasing.  The running count equals the number of
  // tableaux, so the recursion visits exactly dim states.
  int rows = lambda.length();
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lambda.parts[r], 0);
  long count = 0;
  std::function<void(int, int)> place = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == lambda.parts[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);           // row weakly increasing
    if (r > 0 && c < lambda.parts[r - 1])
      lo = std::max(lo, fill[r - 1][c] + 1);                // column strictly increasing
    for (int v = lo; v <= m; ++v) {
      fill[r][c] = v;
      place(nr, nc);
    }
    fill[r][c] = 0;
  };
  place(0, 0);
  return count;
}

static long um_irrep_dim_product(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0;
  // Hook-content formula: dim = prod over cells (m + col - row) / hook(cell),
  // with row/col 0-based.  Both products are integers and the quotient is an
  // integer; computed exactly with big integers before narrowing.
  Partition conj = conjugate(lambda);
  mpz_class num = 1, den = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.parts[r]; ++c) {
      num *= (m + c - r);
      long arm = lambda.parts[r] - c - 1;
      long leg = conj.parts[c] - r - 1;
      den *= (arm + leg + 1);
    }
  }
  mpz_class q = num / den;
  return q.get_si();
}

long um_irrep_dim(const Partition& lambda, int m) {
  if (m < 1) throw std::invalid_argument("um_irrep_dim requires m >= 1");
  if (lambda.weight() <= 8) return um_irrep_dim_enumerated(lambda, m);
  return um_irrep_dim_product(lambda, m);
}

Partition parse_partition(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("unbalanced parentheses in partition: " + s);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const size_t first = tok.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const size_t last = tok.find_last_not_of(" \t");
    const std::string digits = tok.substr(first, last - first + 1);
    size_t used = 0;
    int value = std::stoi(digits, &used);
    if (used != digits.size())
      throw std::invalid_argument("bad partition entry \"" + tok + "\" in " +
                                  s);
    parts.push_back(value);
  }
  return Partition{std::move(parts)};
}

}  // namespace exstat
