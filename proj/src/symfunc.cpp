#include "exstat/symfunc.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace exstat {

std::string basis_name(Basis b) {
  return b == Basis::monomial ? "monomial" : "schur";
}

// ---------------------------------------------------------------------------
// SymPoly

void SymPoly::set(const Partition& p, const ExactScalar& c) {
  if (p.weight() != degree)
    throw std::invalid_argument("SymPoly::set: partition weight " +
                                std::to_string(p.weight()) +
                                " does not match degree " +
                                std::to_string(degree));
  if (is_zero(c))
    coeffs.erase(p);
  else
    coeffs[p] = c;
}

ExactScalar SymPoly::get(const Partition& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? ExactScalar(0) : it->second;
}

SymPoly& SymPoly::add(const Partition& p, const ExactScalar& c) {
  set(p, get(p) + c);
  return *this;
}

bool SymPoly::operator==(const SymPoly& o) const {
  return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
}

std::vector<ExactScalar> SymPoly::dense(const PartitionTable& table) const {
  if (table.n != degree)
    throw std::invalid_argument("SymPoly::dense: table weight mismatch");
  std::vector<ExactScalar> out(table.count(), ExactScalar(0));
  for (const auto& [p, c] : coeffs) out[table.position(p) - 1] = c;
  return out;
}

SymPoly SymPoly::from_dense(int degree, Basis basis,
                            const std::vector<ExactScalar>& coeffs) {
  PartitionTable table = enumerate_partitions(degree);
  if (static_cast<int>(coeffs.size()) != table.count())
    throw std::invalid_argument("SymPoly::from_dense: expected " +
                                std::to_string(table.count()) +
                                " coefficients, got " +
                                std::to_string(coeffs.size()));
  SymPoly p;
  p.degree = degree;
  p.basis = basis;
  for (int i = 0; i < table.count(); ++i)
    if (!is_zero(coeffs[i])) p.coeffs[table.at(i + 1)] = coeffs[i];
  return p;
}

// ---------------------------------------------------------------------------
// Kostka numbers

namespace {

using PartPair = std::pair<std::vector<int>, std::vector<int>>;

// Enumerates inner shapes nu such that shape/nu is a horizontal strip with
// `remaining` cells: shape_i >= nu_i >= shape_{i+1} (no two removed cells in
// one column).  Calls emit() with nu filled in.
template <typename Emit>
void horizontal_strips(const std::vector<int>& shape, int row, int remaining,
                       std::vector<int>& nu, Emit&& emit) {
  if (row == static_cast<int>(shape.size())) {
    if (remaining == 0) emit();
    return;
  }
  int lo = row + 1 < static_cast<int>(shape.size()) ? shape[row + 1] : 0;
  for (int v = shape[row]; v >= lo; --v) {
    int removed = shape[row] - v;
    if (removed > remaining) break;
    nu[row] = v;
    horizontal_strips(shape, row + 1, remaining - removed, nu, emit);
  }
}

std::vector<int> trimmed(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

// In an SSYT with content mu (descending), the entries equal to the largest
// value form a horizontal strip of size mu.back() on the outer rim; peeling
// it reduces to the same problem with one fewer value.
long kostka_impl(std::vector<int> shape, std::vector<int> content,
                 std::map<PartPair, long>& memo) {
  shape = trimmed(std::move(shape));
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.empty()) return 0;
  if (content.back() > shape[0] * static_cast<int>(shape.size())) return 0;
  PartPair key{shape, content};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int r = content.back();
  std::vector<int> rest(content.begin(), content.end() - 1);
  long total = 0;
  std::vector<int> nu(shape.size(), 0);
  horizontal_strips(shape, 0, r, nu,
                    [&] { total += kostka_impl(nu, rest, memo); });
  memo.emplace(std::move(key), total);
  return total;
}

std::map<PartPair, long>& kostka_memo() {
  static std::map<PartPair, long> memo;
  return memo;
}

std::mutex& kostka_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long kostka_number(const Partition& shape, const Partition& content) {
  if (shape.weight() != content.weight())
    throw std::invalid_argument(
        "kostka_number: shape and content must have equal weight (" +
        std::to_string(shape.weight()) + " vs " +
        std::to_string(content.weight()) + ")");
  std::lock_guard<std::mutex> lock(kostka_mutex());
  return kostka_impl(shape.parts, content.parts, kostka_memo());
}

long KostkaMatrix::at(int j, int i) const {
  if (j < 1 || j > size() || i < 1 || i > size())
    throw std::out_of_range("KostkaMatrix::at: index out of range");
  return entries[j - 1][i - 1];
}

// ---------------------------------------------------------------------------
// Kostka matrix with disk cache

namespace {

bool kostka_entries_valid(int n, const std::vector<std::vector<long>>& e) {
  const int p = partition_count(n);
  if (static_cast<int>(e.size()) != p) return false;
  for (int j = 0; j < p; ++j) {
    if (static_cast<int>(e[j].size()) != p) return false;
    if (e[j][j] != 1) return false;    // unit diagonal
    if (e[j][0] != 1) return false;    // first column all ones
    for (int i = j + 1; i < p; ++i)
      if (e[j][i] != 0) return false;  // lower triangular
    for (int i = 0; i < p; ++i)
      if (e[j][i] < 0) return false;
  }
  return true;
}

std::string cache_file_path(int n) {
  return cache_directory() + "/kostka_N" + std::to_string(n) + ".csv";
}

bool load_cached_kostka(int n, std::vector<std::vector<long>>& out) {
  std::ifstream in(cache_file_path(n));
  if (!in) return false;
  std::string header;
  if (!std::getline(in, header)) return false;
  if (header != "n=" + std::to_string(n) +
                    ",size=" + std::to_string(partition_count(n)))
    return false;
  std::vector<std::vector<long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<long> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        long v = std::stol(cell, &used);
        if (used != cell.size()) return false;
        row.push_back(v);
      } catch (const std::exception&) {
        return false;
      }
    }
    rows.push_back(std::move(row));
  }
  if (!kostka_entries_valid(n, rows)) return false;
  out = std::move(rows);
  return true;
}

void store_cached_kostka(int n, const std::vector<std::vector<long>>& e) {
  std::error_code ec;
  std::filesystem::create_directories(cache_directory(), ec);
  if (ec) return;  // cache is best-effort; computation already succeeded
  const std::string final_path = cache_file_path(n);
  const std::string tmp_path =
      final_path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path);
    if (!out) return;
    out << "n=" << n << ",size=" << partition_count(n) << "\n";
    for (const auto& row : e) {
      for (size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
    if (!out.good()) {
      out.close();
      std::filesystem::remove(tmp_path, ec);
      return;
    }
  }
  // Atomic replacement: concurrent writers race benignly, last writer wins.
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace

std::string cache_directory() {
  if (const char* env = std::getenv("EXSTAT_CACHE_DIR"); env && *env)
    return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/exstat";
  return ".exstat-cache";
}

KostkaMatrix kostka_matrix(int n) {
  if (n < 1) throw std::invalid_argument("kostka_matrix: n must be >= 1");
  KostkaMatrix k;
  k.n = n;
  if (load_cached_kostka(n, k.entries)) return k;

  PartitionTable table = enumerate_partitions(n);
  const int p = table.count();
  k.entries.assign(p, std::vector<long>(p, 0));
  for (int j = 1; j <= p; ++j)
    for (int i = 1; i <= p; ++i)
      k.entries[j - 1][i - 1] = kostka_number(table.at(i), table.at(j));
  if (!kostka_entries_valid(n, k.entries))
    throw std::logic_error("kostka_matrix: computed matrix failed validation");
  store_cached_kostka(n, k.entries);
  return k;
}

std::vector<std::vector<ExactScalar>> inverse_kostka_matrix(int n) {
  KostkaMatrix k = kostka_matrix(n);
  const int p = k.size();
  // Forward substitution on the lower unitriangular matrix, one unit column
  // at a time; entries stay integers.
  std::vector<std::vector<ExactScalar>> inv(
      p, std::vector<ExactScalar>(p, ExactScalar(0)));
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < p; ++r) {
      ExactScalar x = r == c ? ExactScalar(1) : ExactScalar(0);
      for (int t = 0; t < r; ++t)
        x -= ExactScalar(k.entries[r][t]) * inv[t][c];
      inv[r][c] = x;
    }
  }
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c) {
      ExactScalar check(0);
      for (int t = 0; t < p; ++t)
        check += ExactScalar(k.entries[r][t]) * inv[t][c];
      if (check != (r == c ? ExactScalar(1) : ExactScalar(0)))
        throw std::logic_error(
            "inverse_kostka_matrix: product with Kostka matrix is not the "
            "identity");
    }
  return inv;
}

SymPoly schur_in_monomials(const Partition& lambda) {
  const int n = lambda.weight();
  PartitionTable table = enumerate_partitions(n);
  SymPoly out;
  out.degree = n;
  out.basis = Basis::monomial;
  for (int j = 1; j <= table.count(); ++j) {
    long c = kostka_number(lambda, table.at(j));
    if (c != 0) out.coeffs[table.at(j)] = ExactScalar(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama characters

namespace {

// Removing a border strip of length r from lambda is, in beta-number
// coordinates (first-column hook lengths b_i = lambda_i + len - 1 - i),
// replacing some b by b - r not already present; the strip's height parity
// is the number of beta numbers passed over.
long mn_impl(std::vector<int> lambda, std::vector<int> mu,
             std::map<PartPair, long>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  if (lambda.empty()) return 0;
  PartPair key{lambda, mu};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int r = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::set<int> betas;
  for (int i = 0; i < len; ++i) betas.insert(lambda[i] + len - 1 - i);

  long total = 0;
  for (int b : betas) {
    int b2 = b - r;
    if (b2 < 0 || betas.count(b2)) continue;
    int passed = static_cast<int>(
        std::count_if(betas.begin(), betas.end(),
                      [&](int c) { return b2 < c && c < b; }));
    int sign = passed % 2 ? -1 : 1;
    std::set<int> nb = betas;
    nb.erase(b);
    nb.insert(b2);
    std::vector<int> sorted(nb.rbegin(), nb.rend());  // descending
    std::vector<int> next;
    for (int i = 0; i < len; ++i) {
      int part = sorted[i] - (len - 1 - i);
      if (part > 0) next.push_back(part);
    }
    total += sign * mn_impl(std::move(next), rest, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::map<PartPair, long>& mn_memo() {
  static std::map<PartPair, long> memo;
  return memo;
}

std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument(
        "mn_character: lambda and mu must have equal weight");
  std::lock_guard<std::mutex> lock(mn_mutex());
  return mn_impl(lambda.parts, mu.parts, mn_memo());
}

ExactScalar z_mu(const Partition& mu) {
  mpz_class z = 1;
  int i = 0;
  const auto& parts = mu.parts;
  while (i < static_cast<int>(parts.size())) {
    int j = i;
    while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
    int mult = j - i;
    mpz_class rp;
    mpz_ui_pow_ui(rp.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(mult));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(mult));
    z *= rp * fact;
    i = j;
  }
  return ExactScalar(z);
}

// ---------------------------------------------------------------------------
// Power-sum route to Schur polynomials

namespace {

// p_r * m_lambda: each monomial of m_lambda gains r on one exponent (possibly
// a previously unused variable).  Grouping the results by shape, the new
// shape lambda' receives multiplicity-of-the-enlarged-part many copies.
SymPoly multiply_power_sum(const SymPoly& poly, int r) {
  SymPoly out;
  out.degree = poly.degree + r;
  out.basis = Basis::monomial;
  for (const auto& [lambda, c] : poly.coeffs) {
    std::vector<int> seen;
    for (size_t pos = 0; pos < lambda.parts.size(); ++pos) {
      int a = lambda.parts[pos];
      if (std::find(seen.begin(), seen.end(), a) != seen.end()) continue;
      seen.push_back(a);
      std::vector<int> np = lambda.parts;
      np[pos] += r;
      std::sort(np.rbegin(), np.rend());
      Partition enlarged(np);
      out.add(enlarged, c * ExactScalar(enlarged.multiplicity(a + r)));
    }
    std::vector<int> np = lambda.parts;
    np.push_back(r);
    std::sort(np.rbegin(), np.rend());
    Partition extended(np);
    out.add(extended, c * ExactScalar(extended.multiplicity(r)));
  }
  return out;
}

SymPoly power_sum_in_monomials(const Partition& mu) {
  static std::map<std::vector<int>, SymPoly> memo;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(mu.parts);
  if (it != memo.end()) return it->second;
  SymPoly poly;
  poly.degree = 0;
  poly.basis = Basis::monomial;
  poly.coeffs[Partition{}] = ExactScalar(1);
  for (int r : mu.parts) poly = multiply_power_sum(poly, r);
  memo.emplace(mu.parts, poly);
  return poly;
}

}  // namespace

SymPoly schur_via_characters(const Partition& lambda, int m_vars) {
  const int n = lambda.weight();
  if (m_vars < n)
    throw std::invalid_argument(
        "schur_via_characters: m_vars must be >= weight(lambda) so no "
        "monomial is truncated");
  PartitionTable table = enumerate_partitions(n);
  SymPoly out;
  out.degree = n;
  out.basis = Basis::monomial;
  for (int j = 1; j <= table.count(); ++j) {
    const Partition& mu = table.at(j);
    long chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    ExactScalar weight = ExactScalar(chi) / z_mu(mu);
    SymPoly pmu = power_sum_in_monomials(mu);
    for (const auto& [p, c] : pmu.coeffs) out.add(p, weight * c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basis conversion

SymPoly convert_basis(const SymPoly& p, Basis target) {
  if (p.basis == target) return p;
  PartitionTable table = enumerate_partitions(p.degree);
  std::vector<ExactScalar> in = p.dense(table);
  const int count = table.count();
  std::vector<ExactScalar> out(count, ExactScalar(0));
  if (target == Basis::monomial) {
    KostkaMatrix k = kostka_matrix(p.degree);
    for (int j = 0; j < count; ++j)
      for (int i = 0; i < count; ++i)
        out[j] += ExactScalar(k.entries[j][i]) * in[i];
  } else {
    auto inv = inverse_kostka_matrix(p.degree);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j) out[i] += inv[i][j] * in[j];
  }
  SymPoly q = SymPoly::from_dense(p.degree, target, out);
  return q;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

ExactScalar pow_exact(const ExactScalar& x, int e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(),
             static_cast<unsigned long>(e));
  ExactScalar r(num, den);
  r.canonicalize();
  return r;
}

// Sums the distinct monomials of m_lambda: choose disjoint index sets for
// the distinct part values, largest value first.
template <typename Scalar, typename Pow>
Scalar monomial_orbit_sum(const Partition& lambda,
                          const std::vector<Scalar>& xs, Pow&& pow) {
  const int m = static_cast<int>(xs.size());
  if (lambda.length() > m) return Scalar(0);
  if (lambda.parts.empty()) return Scalar(1);
  // distinct values with multiplicities, descending
  std::vector<std::pair<int, int>> groups;
  for (int a : lambda.parts) {
    if (!groups.empty() && groups.back().first == a)
      ++groups.back().second;
    else
      groups.emplace_back(a, 1);
  }
  Scalar total(0);
  std::vector<int> used(m, 0);
  std::vector<int> chosen;
  // recursive choice of index subsets per group
  std::function<void(size_t, Scalar)> rec = [&](size_t g, Scalar acc) {
    if (g == groups.size()) {
      total += acc;
      return;
    }
    auto [value, mult] = groups[g];
    // choose `mult` unused indices in increasing order
    std::function<void(int, int, Scalar)> choose = [&](int start, int left,
                                                       Scalar part) {
      if (left == 0) {
        rec(g + 1, part);
        return;
      }
      for (int i = start; i <= m - left; ++i) {
        if (used[i]) continue;
        used[i] = 1;
        choose(i + 1, left - 1, part * pow(xs[i], value));
        used[i] = 0;
      }
    };
    choose(0, mult, acc);
  };
  rec(0, Scalar(1));
  return total;
}

}  // namespace

ExactScalar evaluate(const SymPoly& p, const EvaluationPoint& pt) {
  if (pt.m_vars() < 1)
    throw std::invalid_argument("evaluate: need at least one variable");
  const SymPoly mono =
      p.basis == Basis::monomial ? p : convert_basis(p, Basis::monomial);
  ExactScalar total(0);
  for (const auto& [lambda, c] : mono.coeffs)
    total += c * monomial_orbit_sum<ExactScalar>(
                     lambda, pt.values,
                     [](const ExactScalar& x, int e) { return pow_exact(x, e); });
  return total;
}

double evaluate(const SymPoly& p, const std::vector<double>& xs) {
  if (xs.empty())
    throw std::invalid_argument("evaluate: need at least one variable");
  const SymPoly mono =
      p.basis == Basis::monomial ? p : convert_basis(p, Basis::monomial);
  double total = 0;
  for (const auto& [lambda, c] : mono.coeffs)
    total += to_double(c) *
             monomial_orbit_sum<double>(
                 lambda, xs, [](double x, int e) { return std::pow(x, e); });
  return total;
}

// ---------------------------------------------------------------------------
// Black-box coefficient fitting

namespace {

int next_prime(int p) {
  for (int c = p + 1;; ++c) {
    bool prime = c >= 2;
    for (int d = 2; d * d <= c; ++d)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime) return c;
  }
}

}  // namespace

FitResult fit_coefficients(
    const std::function<ExactScalar(const EvaluationPoint&)>& evaluator,
    int degree, int m_vars, const Locus& locus, Basis target) {
  if (degree < 0) throw std::invalid_argument("fit_coefficients: degree < 0");
  if (m_vars < 1) throw std::invalid_argument("fit_coefficients: m_vars < 1");
  if (!locus.group.empty() &&
      static_cast<int>(locus.group.size()) != m_vars)
    throw std::invalid_argument(
        "fit_coefficients: locus group list must have one entry per "
        "variable");

  PartitionTable table = enumerate_partitions(degree);
  const int count = table.count();

  // Monomial expansions of the target basis functions (monomial basis
  // elements are themselves).
  std::vector<SymPoly> basis_fns;
  basis_fns.reserve(count);
  for (int i = 1; i <= count; ++i) {
    if (target == Basis::schur) {
      basis_fns.push_back(schur_in_monomials(table.at(i)));
    } else {
      SymPoly unit;
      unit.degree = degree;
      unit.basis = Basis::monomial;
      unit.coeffs[table.at(i)] = ExactScalar(1);
      basis_fns.push_back(std::move(unit));
    }
  }

  // One prime per variable group; sample j uses prime^j, so distinct samples
  // are genuinely different points of the admissible locus.
  std::map<int, int> group_prime;
  int p = 1;
  for (int v = 0; v < m_vars; ++v) {
    int g = locus.group_of(v);
    if (!group_prime.count(g)) {
      p = next_prime(p);
      group_prime[g] = p;
    }
  }

  const int samples = count + 3;
  std::vector<std::vector<ExactScalar>> aug(
      samples, std::vector<ExactScalar>(count + 1, ExactScalar(0)));
  for (int j = 1; j <= samples; ++j) {
    EvaluationPoint pt;
    pt.values.reserve(m_vars);
    for (int v = 0; v < m_vars; ++v) {
      mpz_class val;
      mpz_ui_pow_ui(val.get_mpz_t(),
                    static_cast<unsigned long>(group_prime[locus.group_of(v)]),
                    static_cast<unsigned long>(j));
      pt.values.emplace_back(val);
    }
    for (int i = 0; i < count; ++i)
      aug[j - 1][i] = evaluate(basis_fns[i], pt);
    aug[j - 1][count] = evaluator(pt);
  }

  // Exact Gauss-Jordan elimination of [A | b].
  int rank = 0;
  for (int col = 0; col < count && rank < samples; ++col) {
    int pivot = -1;
    for (int r = rank; r < samples; ++r)
      if (!is_zero(aug[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(aug[rank], aug[pivot]);
    ExactScalar inv_p = ExactScalar(1) / aug[rank][col];
    for (int c = col; c <= count; ++c) aug[rank][c] *= inv_p;
    for (int r = 0; r < samples; ++r) {
      if (r == rank || is_zero(aug[r][col])) continue;
      ExactScalar f = aug[r][col];
      for (int c = col; c <= count; ++c) aug[r][c] -= f * aug[rank][c];
    }
    ++rank;
  }

  for (int r = rank; r < samples; ++r)
    if (!is_zero(aug[r][count]))
      throw FitError(FitFailure::INCONSISTENT, rank,
                     "fit_coefficients: INCONSISTENT - the evaluator is not "
                     "a symmetric polynomial of degree " +
                         std::to_string(degree) + " on the sampled locus");
  if (rank < count)
    throw FitError(FitFailure::UNDERDETERMINED, rank,
                   "fit_coefficients: UNDERDETERMINED - basis rank " +
                       std::to_string(rank) + " of " + std::to_string(count) +
                       " on the admissible locus");

  std::vector<ExactScalar> solution(count, ExactScalar(0));
  // After full Gauss-Jordan with rank == count the first `count` rows are a
  // permutation-free identity block: row r has pivot in column r.
  for (int r = 0; r < count; ++r) solution[r] = aug[r][count];

  FitResult result;
  result.coeffs = solution;
  result.poly = SymPoly::from_dense(degree, target, solution);
  result.rank = rank;
  result.full_rank = true;
  result.residual_zero = true;
  return result;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const SymPoly& p) {
  if (p.coeffs.empty()) return "0";
  const std::string letter = p.basis == Basis::monomial ? "m" : "s";
  std::string out;
  for (const auto& [part, c] : p.coeffs) {
    std::string term = letter + "_" + part.str();
    ExactScalar a = c;
    bool negative = sgn(a) < 0;
    if (negative) a = -a;
    std::string coeff = to_string(a);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + "*";
    out += term;
  }
  return out;
}

}  // namespace exstat
