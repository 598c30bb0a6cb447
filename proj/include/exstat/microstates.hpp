#pragma once

// Enumerative statistical mechanics on the integer ladder spectrum
// (single-particle energies 1, 2, 3, ...): energy-distribution enumeration
// at fixed (N, E), occupation-type classification, weighted microstate
// counts per statistics, an independent series-coefficient cross-check, and
// the degenerate-level weight formulas.

#include <vector>

#include "exstat/audit.hpp"

namespace exstat {

// A way for n particles to carry total energy e: a partition of e into
// exactly n positive parts, listed non-increasing.
struct EnergyDistribution {
  std::vector<int> energies;
  int total() const;
  std::string str() const;
  bool operator==(const EnergyDistribution& o) const {
    return energies == o.energies;
  }
};

// All distributions for (n, e) in canonical descending order (empty if
// e < n).
std::vector<EnergyDistribution> enumerate_distributions(int n, int e);

// The occupation-number pattern: multiset of multiplicities of repeated
// energies, as a partition of n.  [7,1,1,1] -> (3,1); [4,3,2,1] -> (1^4).
Partition occupation_type(const EnergyDistribution& d);

// Sum over distributions of the spec's Omega weight at the distribution's
// occupation type; exact (fractional weights flow through).
ExactScalar count_microstates(const StatisticsSpec& spec, int n, int e);

// Independent route: substitute x_i = t^i into the monomial-side expansion
// of Z and read off the coefficients of t^E for E = n .. e_max.  Must agree
// with count_microstates at every E.
std::vector<ExactScalar> microstates_from_series(const StatisticsSpec& spec,
                                                 int n, int e_max);

enum class DegenerateFamily { BOSON, FERMION, DISTINGUISHABLE };

struct LevelOccupancy {
  int energy = 0;      // level label (unused by the weight formulas)
  int occupancy = 0;   // particles on the level
  int degeneracy = 1;  // internal states of the level
};

// Thrown by degenerate_level_weight when a fermion occupancy exceeds the
// level degeneracy (message begins with "DOMAIN").
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Per-level weight products: boson prod C(lambda+g-1, lambda); fermion
// prod C(g, lambda); distinguishable N! * prod g^lambda / lambda!.
ExactScalar degenerate_level_weight(DegenerateFamily family,
                                    const std::vector<LevelOccupancy>& levels);

}  // namespace exstat
