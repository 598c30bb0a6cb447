#include "exstat/microstates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace exstat {

int EnergyDistribution::total() const {
  return std::accumulate(energies.begin(), energies.end(), 0);
}

std::string EnergyDistribution::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < energies.size(); ++i)
    out << (i ? "," : "") << energies[i];
  out << "]";
  return out.str();
}

std::vector<EnergyDistribution> enumerate_distributions(int n, int e) {
  std::vector<EnergyDistribution> out;
  if (n < 1 || e < n) return out;
  std::vector<int> current;
  // Partitions of e into exactly n parts, largest part first; trying larger
  // leading parts first yields canonical descending order directly.
  std::function<void(int, int, int)> rec = [&](int remaining, int slots,
                                               int cap) {
    if (slots == 0) {
      if (remaining == 0) out.push_back({current});
      return;
    }
    // each of the `slots` parts is >= 1 and <= cap
    int hi = std::min(cap, remaining - (slots - 1));
    for (int part = hi; part >= 1; --part) {
      if (part * slots < remaining) break;
      current.push_back(part);
      rec(remaining - part, slots - 1, part);
      current.pop_back();
    }
  };
  rec(e, n, e);
  return out;
}

Partition occupation_type(const EnergyDistribution& d) {
  std::vector<int> mults;
  size_t i = 0;
  while (i < d.energies.size()) {
    size_t j = i;
    while (j < d.energies.size() && d.energies[j] == d.energies[i]) ++j;
    mults.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(mults.rbegin(), mults.rend());
  return Partition(mults);
}

namespace {

StatisticsSpec omega_side_of(const StatisticsSpec& spec) {
  return spec.side == Basis::monomial ? spec : omega_from_c(spec);
}

}  // namespace

ExactScalar count_microstates(const StatisticsSpec& spec, int n, int e) {
  if (spec.n != n)
    throw std::invalid_argument("count_microstates: spec is for n=" +
                                std::to_string(spec.n) + ", asked for n=" +
                                std::to_string(n));
  StatisticsSpec omega = omega_side_of(spec);
  PartitionTable table = enumerate_partitions(n);
  ExactScalar total(0);
  for (const auto& d : enumerate_distributions(n, e))
    total += omega.coeffs[table.position(occupation_type(d)) - 1];
  return total;
}

std::vector<ExactScalar> microstates_from_series(const StatisticsSpec& spec,
                                                 int n, int e_max) {
  if (spec.n != n)
    throw std::invalid_argument("microstates_from_series: spec n mismatch");
  if (e_max < n) return {};
  StatisticsSpec omega = omega_side_of(spec);
  PartitionTable table = enumerate_partitions(n);

  // Z(t) = sum_J Omega_J m_J(t, t^2, ..., t^L) truncated at degree e_max;
  // level L > e_max cannot contribute to any kept coefficient because every
  // occupied level adds at least its own index to the exponent.
  const int levels = e_max;
  std::vector<ExactScalar> series(e_max + 1, ExactScalar(0));

  for (int j = 1; j <= table.count(); ++j) {
    const ExactScalar& weight = omega.coeffs[j - 1];
    if (is_zero(weight)) continue;
    const Partition& lambda = table.at(j);
    // distinct part values with multiplicities
    std::vector<std::pair<int, int>> groups;
    for (int a : lambda.parts) {
      if (!groups.empty() && groups.back().first == a)
        ++groups.back().second;
      else
        groups.emplace_back(a, 1);
    }
    std::vector<char> used(levels + 1, 0);
    // choose, per part value, a set of distinct levels; accumulate the
    // exponent sum(value * level) and prune past e_max
    std::function<void(size_t, int)> rec = [&](size_t g, int exponent) {
      if (g == groups.size()) {
        series[exponent] += weight;
        return;
      }
      auto [value, mult] = groups[g];
      std::function<void(int, int, int)> choose = [&](int start, int left,
                                                      int expo) {
        if (left == 0) {
          rec(g + 1, expo);
          return;
        }
        for (int lvl = start; lvl <= levels; ++lvl) {
          if (used[lvl]) continue;
          int next = expo + value * lvl;
          if (next > e_max) break;  // larger levels only grow the exponent
          used[lvl] = 1;
          choose(lvl + 1, left - 1, next);
          used[lvl] = 0;
        }
      };
      choose(1, mult, exponent);
    };
    rec(0, 0);
  }

  return std::vector<ExactScalar>(series.begin() + n, series.end());
}

ExactScalar degenerate_level_weight(
    DegenerateFamily family, const std::vector<LevelOccupancy>& levels) {
  auto binom = [](long n, long k) {
    mpz_class b;
    if (k < 0 || k > n) return mpz_class(0);
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
  };

  switch (family) {
    case DegenerateFamily::BOSON: {
      mpz_class w = 1;
      for (const auto& l : levels)
        w *= binom(l.occupancy + l.degeneracy - 1, l.occupancy);
      return ExactScalar(w);
    }
    case DegenerateFamily::FERMION: {
      mpz_class w = 1;
      for (const auto& l : levels) {
        if (l.occupancy > l.degeneracy)
          throw DomainError(
              "DOMAIN: fermion occupancy " + std::to_string(l.occupancy) +
              " exceeds level degeneracy " + std::to_string(l.degeneracy));
        w *= binom(l.degeneracy, l.occupancy);
      }
      return ExactScalar(w);
    }
    case DegenerateFamily::DISTINGUISHABLE: {
      long n = 0;
      for (const auto& l : levels) n += l.occupancy;
      mpz_class num;
      mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
      mpz_class den = 1;
      for (const auto& l : levels) {
        mpz_class g_pow;
        mpz_ui_pow_ui(g_pow.get_mpz_t(),
                      static_cast<unsigned long>(l.degeneracy),
                      static_cast<unsigned long>(l.occupancy));
        num *= g_pow;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(l.occupancy));
        den *= f;
      }
      ExactScalar w{mpq_class(num, den)};
      w.canonicalize();
      return w;
    }
  }
  throw std::logic_error("degenerate_level_weight: unreachable");
}

}  // namespace exstat
