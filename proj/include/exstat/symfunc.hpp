#pragma once

// Exact symmetric-polynomial algebra: monomial and Schur bases, Kostka
// matrices via semistandard-tableau counting, S_N characters via the
// Murnaghan-Nakayama border-strip recursion, basis conversion, evaluation,
// and exact black-box coefficient fitting.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exstat/partition.hpp"
#include "exstat/rational.hpp"

namespace exstat {

enum class Basis { monomial, schur };

std::string basis_name(Basis b);

// A symmetric polynomial of homogeneous degree, stored as a coefficient map
// over partitions of that degree in a declared basis.  Zero coefficients are
// never stored.
struct SymPoly {
  int degree = 0;
  Basis basis = Basis::monomial;
  std::map<Partition, ExactScalar> coeffs;

  void set(const Partition& p, const ExactScalar& c);
  ExactScalar get(const Partition& p) const;
  SymPoly& add(const Partition& p, const ExactScalar& c);
  bool operator==(const SymPoly& o) const;

  // Dense coefficient vector in canonical partition order (1-based J/I
  // semantics; element 0 of the result corresponds to index 1).
  std::vector<ExactScalar> dense(const PartitionTable& table) const;
  static SymPoly from_dense(int degree, Basis basis,
                            const std::vector<ExactScalar>& coeffs);
};

// Kostka matrix for weight n: entries[J][I] (1-based via at()) counts the
// semistandard tableaux of shape (lambda)_I and content (lambda)_J.  Lower
// triangular in the canonical order with unit diagonal; first column all
// ones.
struct KostkaMatrix {
  int n = 0;
  std::vector<std::vector<long>> entries;  // 0-based storage

  long at(int j, int i) const;  // 1-based
  int size() const { return static_cast<int>(entries.size()); }
};

// Number of SSYT of the given shape and content (rows weakly increasing,
// columns strictly increasing, entry multiset = content).  Throws
// std::invalid_argument on unequal weights.
long kostka_number(const Partition& shape, const Partition& content);

// Full Kostka matrix in canonical ordering.  Results are cached on disk as
// kostka_N<n>.csv under the cache directory (EXSTAT_CACHE_DIR overrides the
// default); a cache file failing validation is recomputed and rewritten.
KostkaMatrix kostka_matrix(int n);

// The directory used for the Kostka disk cache.
std::string cache_directory();

// Exact inverse of kostka_matrix(n); entries are integers (stored as exact
// rationals), and the product with the Kostka matrix is verified to be the
// identity before returning.
std::vector<std::vector<ExactScalar>> inverse_kostka_matrix(int n);

// s_lambda expanded in the monomial basis: sum over mu of K_{lambda,mu} m_mu.
SymPoly schur_in_monomials(const Partition& lambda);

// Irreducible S_N character chi_lambda evaluated on the conjugacy class mu,
// by the Murnaghan-Nakayama border-strip recursion (memoized).  Throws on
// unequal weights.
long mn_character(const Partition& lambda, const Partition& mu);

// s_lambda via the character / power-sum formula
//   s_lambda = sum_mu z_mu^{-1} chi_lambda(mu) p_mu,
// expanded into the monomial basis; must equal schur_in_monomials.
// Requires m_vars >= weight(lambda) so no monomial is truncated away.
SymPoly schur_via_characters(const Partition& lambda, int m_vars);

// Order of the centralizer of the class mu: z_mu = prod r^{m_r} m_r!.
ExactScalar z_mu(const Partition& mu);

// Basis conversion via the exact Kostka transform (schur -> monomial) or its
// exact inverse (monomial -> schur).  Round trips are the identity.
SymPoly convert_basis(const SymPoly& p, Basis target);

struct EvaluationPoint {
  std::vector<ExactScalar> values;  // one per variable x_i
  int m_vars() const { return static_cast<int>(values.size()); }
};

// Exact evaluation.  Schur input is converted to monomials first; monomials
// are evaluated as sums over distinct exponent placements.
ExactScalar evaluate(const SymPoly& p, const EvaluationPoint& pt);
// Floating-point evaluation along the same route.
double evaluate(const SymPoly& p, const std::vector<double>& xs);

// Variable-degeneracy constraints for fitting: group[i] names the group of
// variable i (0-based); variables in one group are forced equal on every
// sample point.  An empty group vector means all variables independent.
struct Locus {
  std::vector<int> group;
  int group_of(int var) const {
    return group.empty() ? var : group.at(var);
  }
};

struct FitResult {
  SymPoly poly;                       // fitted polynomial in the target basis
  std::vector<ExactScalar> coeffs;    // dense vector, canonical order
  int rank = 0;                       // achieved rank on the locus
  bool full_rank = false;
  bool residual_zero = false;         // exact-zero residual on all samples
};

enum class FitFailure { UNDERDETERMINED, INCONSISTENT };

struct FitError : std::runtime_error {
  FitFailure kind;
  int rank;
  FitError(FitFailure k, int r, const std::string& msg)
      : std::runtime_error(msg), kind(k), rank(r) {}
};

// Determines the coefficient vector of an unknown symmetric polynomial of
// known homogeneous degree from black-box evaluations.  Sample points are
// deterministic: on sample j (1-based), the variable in group g takes the
// value prime(g)^j, so the system is exact and reproducible.  Throws
// FitError(UNDERDETERMINED) when the basis is rank-deficient on the locus
// and FitError(INCONSISTENT) when no exact solution exists.
FitResult fit_coefficients(
    const std::function<ExactScalar(const EvaluationPoint&)>& evaluator,
    int degree, int m_vars, const Locus& locus, Basis target);

// Renders a SymPoly as e.g. "m_(2,1) + 2*m_(1,1,1)" in canonical term order.
std::string to_string(const SymPoly& p);

}  // namespace exstat
