#include "exstat/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace exstat {

// ---------------------------------------------------------------------------
// TensorVector

namespace {

void check_tuple(int m, int n, const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != n)
    throw std::invalid_argument("TensorVector: tuple length " +
                                std::to_string(tuple.size()) +
                                " does not match factor count " +
                                std::to_string(n));
  for (int i : tuple)
    if (i < 1 || i > m)
      throw std::invalid_argument("TensorVector: index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(m));
}

}  // namespace

void TensorVector::set(const std::vector<int>& tuple, const Q2Scalar& value) {
  check_tuple(m, n, tuple);
  if (value.is_zero())
    amps.erase(tuple);
  else
    amps[tuple] = value;
}

Q2Scalar TensorVector::get(const std::vector<int>& tuple) const {
  auto it = amps.find(tuple);
  return it == amps.end() ? Q2Scalar() : it->second;
}

TensorVector& TensorVector::add(const std::vector<int>& tuple,
                                const Q2Scalar& value) {
  set(tuple, get(tuple) + value);
  return *this;
}

TensorVector operator+(const TensorVector& x, const TensorVector& y) {
  if (x.m != y.m || x.n != y.n)
    throw std::invalid_argument("TensorVector: shape mismatch");
  TensorVector out = x;
  for (const auto& [t, v] : y.amps) out.add(t, v);
  return out;
}

TensorVector operator-(const TensorVector& x, const TensorVector& y) {
  if (x.m != y.m || x.n != y.n)
    throw std::invalid_argument("TensorVector: shape mismatch");
  TensorVector out = x;
  for (const auto& [t, v] : y.amps) out.add(t, -v);
  return out;
}

TensorVector TensorVector::scaled(const Q2Scalar& c) const {
  TensorVector out;
  out.m = m;
  out.n = n;
  if (c.is_zero()) return out;
  for (const auto& [t, v] : amps) out.amps[t] = v * c;
  return out;
}

std::string TensorVector::str() const {
  if (amps.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, v] : amps) {
    std::string coeff = v.str();
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) coeff = coeff.substr(1);
    if (coeff != "1") out << coeff << "*";
    out << "|";
    for (size_t k = 0; k < t.size(); ++k) out << (k ? " " : "") << t[k];
    out << ">";
    first = false;
  }
  return out.str();
}

TensorVector basis_ket(int m, const std::vector<int>& tuple) {
  TensorVector v;
  v.m = m;
  v.n = static_cast<int>(tuple.size());
  v.set(tuple, Q2Scalar(1));
  return v;
}

// ---------------------------------------------------------------------------
// Exact rank over Q(sqrt2)

namespace {

// Row-echelon elimination; optionally keeps the basis vectors that produced
// pivot rows (select != nullptr receives their indices).
int rank_impl(const SubspaceBasis& basis, std::vector<int>* select) {
  // union support
  std::map<std::vector<int>, int> columns;
  for (const auto& v : basis)
    for (const auto& [t, a] : v.amps)
      if (!columns.count(t))
        columns.emplace(t, static_cast<int>(columns.size()));
  const int cols = static_cast<int>(columns.size());

  std::vector<std::vector<Q2Scalar>> rows;  // echelon rows so far
  std::vector<int> pivots;                  // pivot column of each row
  int rank = 0;
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    std::vector<Q2Scalar> row(cols);
    for (const auto& [t, a] : basis[bi].amps) row[columns[t]] = a;
    // reduce against existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      int pc = pivots[r];
      if (row[pc].is_zero()) continue;
      Q2Scalar f = row[pc];
      for (int c = 0; c < cols; ++c) row[c] -= f * rows[r][c];
    }
    int pc = -1;
    for (int c = 0; c < cols; ++c)
      if (!row[c].is_zero()) {
        pc = c;
        break;
      }
    if (pc < 0) continue;
    Q2Scalar inv = row[pc].inverse();
    for (int c = 0; c < cols; ++c) row[c] = row[c] * inv;
    rows.push_back(std::move(row));
    pivots.push_back(pc);
    if (select) select->push_back(static_cast<int>(bi));
    ++rank;
  }
  return rank;
}

}  // namespace

int exact_rank(const SubspaceBasis& basis) { return rank_impl(basis, nullptr); }

// ---------------------------------------------------------------------------
// Schur-Weyl dimension table

std::vector<DecompositionRow> decomposition_table(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("decomposition_table: need n, m >= 1");
  std::vector<DecompositionRow> rows;
  PartitionTable table = enumerate_partitions(n);
  long total = 0;
  for (int j = 1; j <= table.count(); ++j) {
    const Partition& lambda = table.at(j);
    if (lambda.length() > m) continue;
    DecompositionRow row;
    row.lambda = lambda;
    row.f_dim = sn_irrep_dim(lambda);
    row.u_dim = um_irrep_dim(lambda, m);
    row.product = row.f_dim * row.u_dim;
    total += row.product;
    rows.push_back(std::move(row));
  }
  long expect = 1;
  for (int i = 0; i < n; ++i) expect *= m;
  if (total != expect)
    throw std::logic_error("decomposition_table: products sum to " +
                           std::to_string(total) + ", expected " +
                           std::to_string(expect));
  return rows;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(n);
  for (int i = 0; i < n; ++i) p.image[i] = i + 1;
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.image[a - 1], p.image[b - 1]);
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  Permutation out;
  out.image.resize(image.size());
  for (size_t k = 0; k < image.size(); ++k)
    out.image[k] = apply(first.apply(static_cast<int>(k) + 1));
  return out;
}

TensorVector permutation_apply(const Permutation& sigma,
                               const TensorVector& v) {
  if (static_cast<int>(sigma.image.size()) != v.n)
    throw std::invalid_argument("permutation_apply: size mismatch");
  TensorVector out;
  out.m = v.m;
  out.n = v.n;
  for (const auto& [t, a] : v.amps) {
    std::vector<int> moved(v.n);
    for (int k = 1; k <= v.n; ++k) moved[sigma.apply(k) - 1] = t[k - 1];
    out.add(moved, a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Span membership, expectations, transforms

bool span_membership(const SubspaceBasis& basis, const TensorVector& v) {
  int base = exact_rank(basis);
  SubspaceBasis extended = basis;
  extended.push_back(v);
  return exact_rank(extended) == base;
}

Q2Scalar inner(const TensorVector& x, const TensorVector& y) {
  if (x.m != y.m || x.n != y.n)
    throw std::invalid_argument("inner: shape mismatch");
  Q2Scalar total;
  for (const auto& [t, a] : x.amps) {
    auto it = y.amps.find(t);
    if (it != y.amps.end()) total += a * it->second;
  }
  return total;
}

Q2Scalar expectation(const TensorVector& w_projector, const TensorVector& v) {
  Q2Scalar overlap = inner(w_projector, v);
  Q2Scalar norm = inner(w_projector, w_projector);
  if (norm.is_zero())
    throw std::invalid_argument("expectation: zero projector vector");
  return overlap * overlap / norm;
}

Q2Scalar expectation(
    const std::function<TensorVector(const TensorVector&)>& op,
    const TensorVector& v) {
  return inner(v, op(v));
}

TensorVector single_particle_transform(
    const std::vector<std::vector<Q2Scalar>>& u, const TensorVector& v) {
  const int m = v.m;
  if (static_cast<int>(u.size()) != m)
    throw std::invalid_argument("single_particle_transform: U must be m x m");
  for (const auto& row : u)
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument(
          "single_particle_transform: U must be m x m");

  TensorVector out;
  out.m = m;
  out.n = v.n;
  std::vector<int> target(v.n);
  for (const auto& [t, a] : v.amps) {
    // distribute U over each factor: sum over all output tuples
    std::function<void(int, const Q2Scalar&)> rec = [&](int k,
                                                        const Q2Scalar& acc) {
      if (acc.is_zero()) return;
      if (k == v.n) {
        out.add(target, acc);
        return;
      }
      for (int r = 1; r <= m; ++r) {
        const Q2Scalar& entry = u[r - 1][t[k] - 1];
        if (entry.is_zero()) continue;
        target[k] = r;
        rec(k + 1, acc * entry);
      }
    };
    rec(0, a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace partition function

SubspaceZ subspace_partition_function(const SubspaceBasis& basis, int m) {
  if (basis.empty())
    throw std::invalid_argument("subspace_partition_function: empty basis");
  const int n = basis[0].n;
  for (const auto& v : basis)
    if (v.m != m || v.n != n)
      throw std::invalid_argument(
          "subspace_partition_function: inconsistent vector shapes");
  if (exact_rank(basis) != static_cast<int>(basis.size()))
    throw std::invalid_argument(
        "subspace_partition_function: basis vectors are not linearly "
        "independent");

  SubspaceZ z;
  z.m_vars = m;
  z.degree = n;
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    const TensorVector& v = basis[bi];
    if (v.amps.empty())
      throw std::invalid_argument(
          "subspace_partition_function: zero basis vector");
    std::vector<int> expo(m, 0);
    bool have = false;
    for (const auto& [t, a] : v.amps) {
      std::vector<int> e(m, 0);
      for (int idx : t) e[idx - 1] += 1;
      if (!have) {
        expo = e;
        have = true;
      } else if (e != expo) {
        throw NotEnergyEigenbasis(
            "NOT_ENERGY_EIGENBASIS: basis vector " + std::to_string(bi + 1) +
            " mixes level-occupation patterns, so it cannot be an "
            "eigenvector of every diagonal spectrum");
      }
    }
    z.raw[expo] += 1;
  }

  // symmetric iff every occupation pattern's full orbit appears with one
  // coefficient
  z.symmetric = true;
  std::map<Partition, ExactScalar> pattern_coeff;
  for (const auto& [expo, coeff] : z.raw) {
    std::vector<int> parts;
    for (int e : expo)
      if (e > 0) parts.push_back(e);
    std::sort(parts.rbegin(), parts.rend());
    Partition lambda(parts);
    auto it = pattern_coeff.find(lambda);
    if (it == pattern_coeff.end())
      pattern_coeff.emplace(lambda, coeff);
    else if (it->second != coeff)
      z.symmetric = false;
  }
  if (z.symmetric) {
    // orbit completeness: count distinct rearrangements present per pattern
    std::map<Partition, long> seen;
    for (const auto& [expo, coeff] : z.raw) {
      std::vector<int> parts;
      for (int e : expo)
        if (e > 0) parts.push_back(e);
      std::sort(parts.rbegin(), parts.rend());
      seen[Partition(parts)] += 1;
    }
    for (const auto& [lambda, count] : seen) {
      // orbit size: m! / (prod multiplicities! * (m - len)!)
      mpz_class orbit;
      mpz_fac_ui(orbit.get_mpz_t(), static_cast<unsigned long>(m));
      mpz_class den = 1;
      int i = 0;
      const auto& parts = lambda.parts;
      while (i < static_cast<int>(parts.size())) {
        int j = i;
        while (j < static_cast<int>(parts.size()) && parts[j] == parts[i])
          ++j;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
        den *= f;
        i = j;
      }
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(),
                 static_cast<unsigned long>(m - lambda.length()));
      den *= f;
      orbit /= den;
      if (orbit != static_cast<long>(count)) z.symmetric = false;
    }
  }

  if (z.symmetric) {
    SymPoly mono;
    mono.degree = n;
    mono.basis = Basis::monomial;
    for (const auto& [lambda, coeff] : pattern_coeff) mono.coeffs[lambda] = coeff;
    z.monomial = mono;
    z.schur = convert_basis(mono, Basis::schur);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Worked example vectors

namespace {

TensorVector combo(int m, std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  TensorVector v;
  v.m = m;
  v.n = static_cast<int>(terms.begin()->first.size());
  for (const auto& [t, c] : terms) v.add(t, Q2Scalar(c));
  return v;
}

}  // namespace

SubspaceBasis mixed_symmetry_examples() {
  SubspaceBasis basis;
  // 2(|xxy> - |yxx>) for ordered pairs x != y: the repeated-ket displays
  // collapse to amplitude 2.
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y) {
      if (x == y) continue;
      basis.push_back(combo(4, {{{x, x, y}, 2}, {{y, x, x}, -2}}));
    }
  // |xyz> + |yxz> - |zyx> - |zxy> for the four index triples, two standard
  // labelings each
  auto four = [&](std::vector<int> a, std::vector<int> b, std::vector<int> c,
                  std::vector<int> d) {
    basis.push_back(combo(4, {{a, 1}, {b, 1}, {c, -1}, {d, -1}}));
  };
  four({1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {3, 1, 2});
  four({1, 3, 2}, {3, 1, 2}, {2, 3, 1}, {2, 1, 3});
  four({1, 2, 4}, {2, 1, 4}, {4, 2, 1}, {4, 1, 2});
  four({1, 4, 2}, {4, 1, 2}, {2, 4, 1}, {2, 1, 4});
  four({1, 3, 4}, {3, 1, 4}, {4, 3, 1}, {4, 1, 3});
  four({1, 4, 3}, {4, 1, 3}, {3, 4, 1}, {3, 1, 4});
  four({2, 3, 4}, {3, 2, 4}, {4, 3, 2}, {4, 2, 3});
  four({2, 4, 3}, {4, 2, 3}, {3, 4, 2}, {3, 2, 4});
  return basis;
}

TensorVector psi13() {
  return combo(4, {{{1, 2, 3}, 1}, {{2, 1, 3}, 1}, {{3, 2, 1}, -1}, {{3, 1, 2}, -1}});
}

SubspaceBasis phi_plane() {
  return {
      combo(4, {{{2, 1, 3}, 1}, {{3, 1, 2}, -1}, {{1, 3, 2}, -1}, {{1, 2, 3}, 1}}),
      combo(4, {{{2, 1, 3}, 1}, {{3, 1, 2}, -1}, {{3, 2, 1}, -1}, {{2, 3, 1}, 1}}),
  };
}

SubspaceBasis spin_pair_states() {
  return {
      combo(4, {{{1, 4}, 1}, {{3, 2}, -1}}),
      combo(4, {{{1, 3}, 1}, {{3, 1}, -1}}),
      combo(4, {{{2, 3}, 1}, {{4, 1}, -1}}),
      combo(4, {{{2, 4}, 1}, {{4, 2}, -1}}),
  };
}

std::vector<std::vector<Q2Scalar>> spin_mixing_unitary() {
  const Q2Scalar h(ExactScalar(0), rat(1, 2));  // sqrt(2)/2
  const Q2Scalar one(1), zero;
  return {
      {one, zero, zero, zero},
      {zero, h, h, zero},
      {zero, h, -h, zero},
      {zero, zero, zero, one},
  };
}

std::vector<std::vector<Q2Scalar>> generic_u4() {
  // H tensor H: an orthogonal matrix mixing all four levels, entries +-1/2.
  const ExactScalar h = rat(1, 2);
  auto q = [&](int sign) { return Q2Scalar(sign > 0 ? h : -h); };
  return {
      {q(1), q(1), q(1), q(1)},
      {q(1), q(-1), q(1), q(-1)},
      {q(1), q(1), q(-1), q(-1)},
      {q(1), q(-1), q(-1), q(1)},
  };
}

std::vector<std::vector<Q2Scalar>> hadamard2() {
  const Q2Scalar h(ExactScalar(0), rat(1, 2));
  return {{h, h}, {h, -h}};
}

SubspaceBasis isotypic_21_sector_m4() {
  const int m = 4, n = 3;
  // Young symmetrizers of the two standard (2,1) tableaux: symmetrize the
  // rows, then antisymmetrize the columns.
  Permutation p12 = Permutation::transposition(n, 1, 2);
  Permutation p13 = Permutation::transposition(n, 1, 3);
  auto symmetrize = [&](const TensorVector& v, const Permutation& row_swap,
                        const Permutation& col_swap) {
    TensorVector rows = v + permutation_apply(row_swap, v);
    return rows - permutation_apply(col_swap, rows);
  };

  SubspaceBasis candidates;
  std::vector<int> tuple(n, 1);
  for (;;) {
    TensorVector ket = basis_ket(m, tuple);
    TensorVector c1 = symmetrize(ket, p12, p13);
    TensorVector c2 = symmetrize(ket, p13, p12);
    if (!c1.is_zero()) candidates.push_back(std::move(c1));
    if (!c2.is_zero()) candidates.push_back(std::move(c2));
    int k = n - 1;
    while (k >= 0 && tuple[k] == m) tuple[k--] = 1;
    if (k < 0) break;
    ++tuple[k];
  }

  std::vector<int> keep;
  rank_impl(candidates, &keep);
  SubspaceBasis basis;
  basis.reserve(keep.size());
  for (int idx : keep) basis.push_back(candidates[idx]);
  return basis;
}

SubspaceBasis capped_symmetric_basis_m4() {
  const int m = 4, n = 3;
  SubspaceBasis basis;
  // multisets {i <= j <= k} except i == j == k; vector = sum of distinct
  // arrangements
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = j; k <= m; ++k) {
        if (i == j && j == k) continue;
        std::vector<int> t{i, j, k};
        TensorVector v;
        v.m = m;
        v.n = n;
        std::sort(t.begin(), t.end());
        do v.add(t, Q2Scalar(1));
        while (std::next_permutation(t.begin(), t.end()));
        basis.push_back(std::move(v));
      }
  return basis;
}

}  // namespace exstat
