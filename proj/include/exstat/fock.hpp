#pragma once

// Second-quantized laboratory: Fock bases and Hamiltonians for the
// cosine-bracket capped oscillator, the sine-bracket (trigonometric
// q-oscillator) realization, and the R-matrix flavored-fermion model, plus
// uncapped-boson / single-occupancy reference algebras; dense symmetric
// spectra via cyclic Jacobi, exact diagonal partition functions, statistics
// fitting, and spectrum-freeness checks.

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "exstat/audit.hpp"
#include "exstat/symfunc.hpp"

namespace exstat {

enum class OscillatorKind {
  GENTILE_COS,   // [n] = sum_j cos^j(pi/(q+1)) cos((n-1-j) pi/(q+1))
  BM_SIN,        // [n] = sin(n pi/(q+1)) / sin(pi/(q+1))
  WANG_RMATRIX,  // flavored hard-core ladder with the R-matrix contraction
  BOSON_REF,     // reference: [n] = n, no occupancy cap
  FERMION_REF    // reference: [1] = 1, [2] = 0, cap 1, antisymmetric signs
};

std::string kind_name(OscillatorKind k);
OscillatorKind parse_kind(const std::string& name);

struct AlgebraKind {
  OscillatorKind kind = OscillatorKind::BOSON_REF;
  int q = 1;          // max occupancy (GENTILE_COS / BM_SIN)
  int m_flavors = 1;  // flavor count (WANG_RMATRIX)
  int s = +1;         // inter-mode exchange sign, +1 or -1

  // Per-site occupancy cap in an N-particle sector.
  int site_cap(int n_particles) const;
  std::string str() const;
};

AlgebraKind gentile_cos(int q, int s = +1);
AlgebraKind bm_sin(int q, int s = +1);
AlgebraKind wang(int m_flavors);
AlgebraKind boson_ref();
AlgebraKind fermion_ref();

// One Fock basis state.  Oscillator kinds use `occupancy` (one entry per
// site).  WANG_RMATRIX uses `sites` (occupied sites, ascending — at most one
// particle per site) plus `flavors`, where flavors[k] belongs to the k-th
// creation operator position, not to a site: exchanging two creation
// operators swaps their site labels and keeps the flavor slots in place.
struct FockBasisState {
  std::vector<int> occupancy;
  std::vector<int> sites;
  std::vector<int> flavors;
  std::string str() const;
  bool operator==(const FockBasisState& o) const {
    return occupancy == o.occupancy && sites == o.sites &&
           flavors == o.flavors;
  }
};

struct EmptySectorError : std::runtime_error {
  using std::runtime_error::runtime_error;  // message begins EMPTY_SECTOR
};
struct AsymmetricError : std::runtime_error {
  using std::runtime_error::runtime_error;  // message begins ASYMMETRIC
};
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;  // message begins NO_CONVERGENCE
};

// The ladder amplitude factor [n]; bracket(kind, q+1, q) = 0 enforces the
// occupancy truncation.  Not defined for WANG_RMATRIX.
double bracket(OscillatorKind kind, int n, int q);

// All states of the (sites, n_particles) sector in deterministic
// lexicographic order; throws EmptySectorError when the caps leave nothing.
std::vector<FockBasisState> build_basis(const AlgebraKind& alg, int sites,
                                        int n_particles);

struct ManyBodyOperator {
  int dim = 0;
  std::vector<std::vector<double>> a;
  bool symmetric = false;
  double trace() const;
};

// Hamiltonian data: H = sum_{(i,j,t)} t (a+_i a_j + a+_j a_i)
//                     + sum_i eps_i n_i,  sites 1-based.
struct HamiltonianSpec {
  std::vector<double> onsite;                      // eps per site (or empty)
  std::vector<std::tuple<int, int, double>> hopping;  // (i, j, t), i != j
};

ManyBodyOperator build_hamiltonian(const AlgebraKind& alg,
                                   const std::vector<FockBasisState>& basis,
                                   int sites, const HamiltonianSpec& h);

// Sorted eigenvalues by cyclic Jacobi rotations; eigenvector residuals are
// rechecked against tol * ||A||_F.
std::vector<double> eigenvalues_symmetric(const ManyBodyOperator& op,
                                          double tol = 1e-9);

// Exact diagonal-Hamiltonian partition function of the sector: one monomial
// per basis state.  Oscillator kinds: variable i per site, exponent n_i.
// WANG_RMATRIX: one variable per (site, flavor) pair, index
// (site-1)*m_flavors + flavor, exponents 0/1.
struct SymbolicZ {
  int m_vars = 0;
  std::map<std::vector<int>, ExactScalar> terms;  // exponent vector -> coeff
  ExactScalar eval(const EvaluationPoint& pt) const;
  std::function<ExactScalar(const EvaluationPoint&)> evaluator() const;
};

SymbolicZ symbolic_partition_function(const AlgebraKind& alg, int sites,
                                      int n_particles);

struct FitStatisticsReport {
  StatisticsSpec schur_spec;
  StatisticsSpec monomial_spec;
  AuditVerdict verdict;
  int rank = 0;
};

// Fits the sector partition function to a degree-N statistics vector and
// classifies it.  Oscillator kinds use sites = m_vars; WANG_RMATRIX uses
// sites = m_vars / m_flavors and, when no locus is given, constrains the
// flavor variables of each site to be equal (degenerate on-site energies).
FitStatisticsReport fit_statistics(const AlgebraKind& alg, int n_particles,
                                   int m_vars, const Locus& locus = {});

struct FreenessReport {
  bool free = false;
  double max_deviation = 0;
  int many_body_count = 0;
  int candidate_count = 0;
  // The candidate spectrum assumes single-particle-sum energies under the
  // naive occupancy cap; this is a diagnostic heuristic, not a theorem.
  bool heuristic = true;
};

// Compares the exact many-body spectrum with the multiset of occupancy-
// cap-allowed sums of single-particle eigenvalues.
FreenessReport freeness_check(const AlgebraKind& alg,
                              const HamiltonianSpec& h, int sites,
                              int n_particles, double tol = 1e-8);

}  // namespace exstat
