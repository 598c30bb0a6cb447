#include "exstat/audit.hpp"

#include <stdexcept>

namespace exstat {

SymPoly StatisticsSpec::poly() const {
  return SymPoly::from_dense(n, side, coeffs);
}

StatisticsSpec StatisticsSpec::from_poly(const std::string& label,
                                         const SymPoly& p) {
  StatisticsSpec spec;
  spec.label = label;
  spec.n = p.degree;
  spec.side = p.basis;
  spec.coeffs = p.dense(enumerate_partitions(p.degree));
  return spec;
}

bool StatisticsSpec::operator==(const StatisticsSpec& o) const {
  return label == o.label && n == o.n && side == o.side && coeffs == o.coeffs;
}

void validate(const StatisticsSpec& spec) {
  if (spec.label.empty())
    throw std::invalid_argument("StatisticsSpec: label must be non-empty");
  if (spec.n < 1)
    throw std::invalid_argument("StatisticsSpec: n must be >= 1 (label \"" +
                                spec.label + "\")");
  const int expect = partition_count(spec.n);
  if (static_cast<int>(spec.coeffs.size()) != expect)
    throw std::invalid_argument(
        "StatisticsSpec \"" + spec.label + "\": expected " +
        std::to_string(expect) + " coefficients for n=" +
        std::to_string(spec.n) + ", got " +
        std::to_string(spec.coeffs.size()));
}

std::string violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NEGATIVE_C: return "NEGATIVE_C";
    case ViolationKind::NON_INTEGER_C: return "NON_INTEGER_C";
    case ViolationKind::OMEGA_GT_ONE: return "OMEGA_GT_ONE";
    case ViolationKind::FRACTIONAL_OMEGA: return "FRACTIONAL_OMEGA";
  }
  return "?";
}

StatisticsSpec omega_from_c(const StatisticsSpec& spec) {
  validate(spec);
  if (spec.side != Basis::schur)
    throw std::invalid_argument("omega_from_c: spec must be Schur-side");
  KostkaMatrix k = kostka_matrix(spec.n);
  const int count = k.size();
  StatisticsSpec out;
  out.label = spec.label;
  out.n = spec.n;
  out.side = Basis::monomial;
  out.coeffs.assign(count, ExactScalar(0));
  for (int j = 0; j < count; ++j)
    for (int i = 0; i < count; ++i)
      out.coeffs[j] += ExactScalar(k.entries[j][i]) * spec.coeffs[i];
  return out;
}

StatisticsSpec c_from_omega(const StatisticsSpec& spec) {
  validate(spec);
  if (spec.side != Basis::monomial)
    throw std::invalid_argument("c_from_omega: spec must be monomial-side");
  auto inv = inverse_kostka_matrix(spec.n);
  const int count = static_cast<int>(inv.size());
  StatisticsSpec out;
  out.label = spec.label;
  out.n = spec.n;
  out.side = Basis::schur;
  out.coeffs.assign(count, ExactScalar(0));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      out.coeffs[i] += inv[i][j] * spec.coeffs[j];
  return out;
}

AuditVerdict classify(const StatisticsSpec& spec) {
  validate(spec);
  AuditVerdict v;
  v.input = spec;
  v.derived = spec.side == Basis::schur ? omega_from_c(spec)
                                        : c_from_omega(spec);
  const StatisticsSpec& c = v.c_side();
  const StatisticsSpec& omega = v.omega_side();
  PartitionTable table = enumerate_partitions(spec.n);

  v.qm_ok = true;
  for (int i = 0; i < static_cast<int>(c.coeffs.size()); ++i) {
    const ExactScalar& value = c.coeffs[i];
    if (sgn(value) < 0) {
      v.qm_ok = false;
      v.violations.push_back(
          {ViolationKind::NEGATIVE_C, table.at(i + 1), value});
    }
    if (!is_integer(value)) {
      v.qm_ok = false;
      v.violations.push_back(
          {ViolationKind::NON_INTEGER_C, table.at(i + 1), value});
    }
  }

  v.sm_ok = true;
  for (int j = 0; j < static_cast<int>(omega.coeffs.size()); ++j) {
    const ExactScalar& value = omega.coeffs[j];
    if (!is_integer(value)) {
      v.sm_ok = false;
      v.violations.push_back(
          {ViolationKind::FRACTIONAL_OMEGA, table.at(j + 1), value});
    } else if (value != ExactScalar(0) && value != ExactScalar(1)) {
      v.sm_ok = false;
      v.violations.push_back(
          {ViolationKind::OMEGA_GT_ONE, table.at(j + 1), value});
    }
  }

  v.qs_ok = v.qm_ok && v.sm_ok;
  return v;
}

std::set<int> admissible_columns(int n) {
  KostkaMatrix k = kostka_matrix(n);
  std::set<int> out;
  for (int col = 1; col <= k.size(); ++col) {
    bool ok = true;
    for (int row = 1; row <= k.size() && ok; ++row)
      ok = k.at(row, col) <= 1;  // entries are non-negative, so this is {0,1}
    if (ok) out.insert(col);
  }
  return out;
}

}  // namespace exstat
