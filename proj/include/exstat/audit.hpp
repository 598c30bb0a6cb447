#pragma once

// The no-go engine: the exact linear map between Schur-side (C) and
// monomial-side (Omega) coefficient vectors of a candidate statistics, the
// two admissibility constraints (C non-negative integers; Omega in {0,1}),
// verdict classification, and the admissible-column scan behind the
// single-sector theorem.

#include <set>
#include <string>
#include <vector>

#include "exstat/symfunc.hpp"

namespace exstat {

// A candidate exchange statistics for n particles, given as the coefficient
// vector of its degree-n partition function on one side of the Kostka map:
// side == schur holds C (multiplicities of U(m) irreps), side == monomial
// holds Omega (statistical weights of occupation patterns).  Coefficients
// are dense in canonical partition order (index 0 <-> partition index 1).
struct StatisticsSpec {
  std::string label;
  int n = 0;
  Basis side = Basis::schur;
  std::vector<ExactScalar> coeffs;

  SymPoly poly() const;  // as a SymPoly on the declared side
  static StatisticsSpec from_poly(const std::string& label, const SymPoly& p);
  bool operator==(const StatisticsSpec& o) const;
};

// Validates label/length invariants; throws std::invalid_argument.
void validate(const StatisticsSpec& spec);

enum class ViolationKind {
  NEGATIVE_C,       // a Schur-side coefficient is negative
  NON_INTEGER_C,    // a Schur-side coefficient is not an integer
  OMEGA_GT_ONE,     // a monomial-side weight is an integer outside {0,1}
  FRACTIONAL_OMEGA  // a monomial-side weight is not an integer
};

std::string violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  Partition partition;
  ExactScalar value;
  bool operator==(const Violation& o) const {
    return kind == o.kind && partition == o.partition && value == o.value;
  }
};

// Verdict on the two constraints: qm_ok = all C non-negative integers
// (a genuine multiplicity assignment exists), sm_ok = all Omega in {0,1}
// (a genuine occupation-pattern selection exists), qs_ok = both.  The input
// side is retained as `input`; the side computed via the Kostka map is
// attached as `derived`.
struct AuditVerdict {
  bool qm_ok = false;
  bool sm_ok = false;
  bool qs_ok = false;
  std::vector<Violation> violations;
  StatisticsSpec input;
  StatisticsSpec derived;
  const StatisticsSpec& c_side() const {
    return input.side == Basis::schur ? input : derived;
  }
  const StatisticsSpec& omega_side() const {
    return input.side == Basis::monomial ? input : derived;
  }
};

// Omega = K * C (exact).
StatisticsSpec omega_from_c(const StatisticsSpec& spec);
// C = K^{-1} * Omega (exact).
StatisticsSpec c_from_omega(const StatisticsSpec& spec);

// Computes the missing side and evaluates both constraints.  C-side
// violations are reported before Omega-side ones, each with the offending
// partition and value; one entry can violate both C predicates.
AuditVerdict classify(const StatisticsSpec& spec);

// Columns L of kostka_matrix(n) every entry of which lies in {0,1} - exactly
// the single-irrep choices C = e_L passing both constraints.  The theorem:
// this is {1, P(n)} (symmetric and antisymmetric) for every n >= 2.
std::set<int> admissible_columns(int n);

}  // namespace exstat
