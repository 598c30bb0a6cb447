#pragma once

// Generators producing StatisticsSpec values for the statistics families
// under audit: Bose/Fermi, Gentile occupancy caps, para-Bose/para-Fermi
// order-p families, Maxwell-Boltzmann (ideal quon), the Jack and immanon
// three-particle interpolations, the five-particle semion vector, and
// occupancy-capped distinguishable particles.

#include <optional>
#include <string>

#include "exstat/audit.hpp"

namespace exstat {

enum class Family {
  BOSON,
  FERMION,
  GENTILE,
  PARABOSON,
  PARAFERMION,
  MAXWELL_BOLTZMANN,
  JACK_21,
  IMMANON_21,
  SEMION_N5,
  CAPPED_DISTINGUISHABLE
};

std::string family_name(Family f);
// Parses "boson", "gentile", "maxwell-boltzmann", ... (case-insensitive);
// throws std::invalid_argument on unknown names.
Family parse_family(const std::string& name);

struct FamilyParams {
  Family family = Family::BOSON;
  int n = 0;
  std::optional<int> q_or_p;          // Gentile / para order / capped q
  std::optional<ExactScalar> alpha;   // Jack parameter
  std::optional<int> m_states;        // capped-distinguishable state count
};

// Thrown when a family is requested outside the parameter range it is
// defined for (message begins with "UNSUPPORTED").
struct UnsupportedFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Builds the family's StatisticsSpec on its natural side: occupancy /
// weight rules (GENTILE, MAXWELL_BOLTZMANN, JACK_21, SEMION_N5,
// CAPPED_DISTINGUISHABLE) carry Omega; representation rules (BOSON as e_1,
// FERMION as e_{P(n)}, PARABOSON, PARAFERMION, IMMANON_21) carry C.
StatisticsSpec make_spec(const FamilyParams& p);

// Convenience: classify(make_spec(p)).
AuditVerdict audit_family(const FamilyParams& p);

}  // namespace exstat
