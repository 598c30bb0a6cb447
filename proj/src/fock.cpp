#include "exstat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace exstat {

std::string kind_name(OscillatorKind k) {
  switch (k) {
    case OscillatorKind::GENTILE_COS: return "GENTILE_COS";
    case OscillatorKind::BM_SIN: return "BM_SIN";
    case OscillatorKind::WANG_RMATRIX: return "WANG_RMATRIX";
    case OscillatorKind::BOSON_REF: return "BOSON_REF";
    case OscillatorKind::FERMION_REF: return "FERMION_REF";
  }
  return "?";
}

OscillatorKind parse_kind(const std::string& name) {
  for (OscillatorKind k :
       {OscillatorKind::GENTILE_COS, OscillatorKind::BM_SIN,
        OscillatorKind::WANG_RMATRIX, OscillatorKind::BOSON_REF,
        OscillatorKind::FERMION_REF})
    if (kind_name(k) == name) return k;
  throw std::invalid_argument("unknown algebra kind \"" + name + "\"");
}

int AlgebraKind::site_cap(int n_particles) const {
  switch (kind) {
    case OscillatorKind::GENTILE_COS:
    case OscillatorKind::BM_SIN: return q;
    case OscillatorKind::WANG_RMATRIX: return 1;
    case OscillatorKind::BOSON_REF: return n_particles;
    case OscillatorKind::FERMION_REF: return 1;
  }
  return 0;
}

std::string AlgebraKind::str() const {
  std::ostringstream out;
  out << kind_name(kind);
  switch (kind) {
    case OscillatorKind::GENTILE_COS:
    case OscillatorKind::BM_SIN:
      out << "(q=" << q << ",s=" << (s > 0 ? "+1" : "-1") << ")";
      break;
    case OscillatorKind::WANG_RMATRIX:
      out << "(m=" << m_flavors << ")";
      break;
    default: break;
  }
  return out.str();
}

namespace {

void validate_algebra(const AlgebraKind& a) {
  if (a.s != 1 && a.s != -1)
    throw std::invalid_argument("AlgebraKind: inter-mode sign must be +1 or -1");
  if ((a.kind == OscillatorKind::GENTILE_COS ||
       a.kind == OscillatorKind::BM_SIN) &&
      a.q < 1)
    throw std::invalid_argument("AlgebraKind: q must be >= 1");
  if (a.kind == OscillatorKind::WANG_RMATRIX && a.m_flavors < 1)
    throw std::invalid_argument("AlgebraKind: m_flavors must be >= 1");
}

}  // namespace

AlgebraKind gentile_cos(int q, int s) {
  AlgebraKind a{OscillatorKind::GENTILE_COS, q, 1, s};
  validate_algebra(a);
  return a;
}

AlgebraKind bm_sin(int q, int s) {
  AlgebraKind a{OscillatorKind::BM_SIN, q, 1, s};
  validate_algebra(a);
  return a;
}

AlgebraKind wang(int m_flavors) {
  AlgebraKind a{OscillatorKind::WANG_RMATRIX, 1, m_flavors, -1};
  validate_algebra(a);
  return a;
}

AlgebraKind boson_ref() { return {OscillatorKind::BOSON_REF, 1, 1, +1}; }

AlgebraKind fermion_ref() { return {OscillatorKind::FERMION_REF, 1, 1, -1}; }

std::string FockBasisState::str() const {
  std::ostringstream out;
  if (sites.empty() && flavors.empty()) {
    out << "|";
    for (size_t i = 0; i < occupancy.size(); ++i)
      out << (i ? "," : "") << occupancy[i];
    out << ">";
  } else {
    out << "|";
    for (size_t k = 0; k < sites.size(); ++k)
      out << (k ? " " : "") << sites[k] << ":" << flavors[k];
    out << ">";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Bracket factors

double bracket(OscillatorKind kind, int n, int q) {
  if (n < 0) throw std::invalid_argument("bracket: n must be >= 0");
  switch (kind) {
    case OscillatorKind::BOSON_REF:
      return static_cast<double>(n);
    case OscillatorKind::FERMION_REF:
      return n == 1 ? 1.0 : 0.0;
    case OscillatorKind::GENTILE_COS: {
      if (q < 1) throw std::invalid_argument("bracket: q must be >= 1");
      const double theta = M_PI / (q + 1);
      double sum = 0;
      for (int j = 0; j <= n - 1; ++j)
        sum += std::pow(std::cos(theta), j) * std::cos((n - 1 - j) * theta);
      return sum;
    }
    case OscillatorKind::BM_SIN: {
      if (q < 1) throw std::invalid_argument("bracket: q must be >= 1");
      const double theta = M_PI / (q + 1);
      return std::sin(n * theta) / std::sin(theta);
    }
    case OscillatorKind::WANG_RMATRIX:
      throw std::invalid_argument(
          "bracket: not defined for the R-matrix algebra");
  }
  throw std::logic_error("bracket: unreachable");
}

// ---------------------------------------------------------------------------
// Basis enumeration

std::vector<FockBasisState> build_basis(const AlgebraKind& alg, int sites,
                                        int n_particles) {
  validate_algebra(alg);
  if (sites < 1)
    throw std::invalid_argument("build_basis: need at least one site");
  if (n_particles < 0)
    throw std::invalid_argument("build_basis: negative particle number");

  std::vector<FockBasisState> out;
  if (alg.kind == OscillatorKind::WANG_RMATRIX) {
    const int m = alg.m_flavors;
    if (n_particles <= sites) {
      // occupied-site subsets in ascending lexicographic order
      std::vector<int> subset;
      std::function<void(int)> pick = [&](int start) {
        if (static_cast<int>(subset.size()) == n_particles) {
          // all flavor tuples, lexicographic
          std::vector<int> flav(n_particles, 1);
          for (;;) {
            out.push_back({{}, subset, flav});
            int k = n_particles - 1;
            while (k >= 0 && flav[k] == m) flav[k--] = 1;
            if (k < 0) break;
            ++flav[k];
          }
          return;
        }
        for (int site = start; site <= sites; ++site) {
          subset.push_back(site);
          pick(site + 1);
          subset.pop_back();
        }
      };
      pick(1);
    }
  } else {
    const int cap = alg.site_cap(n_particles);
    std::vector<int> occ(sites, 0);
    // first site takes the most particles first: descending lexicographic
    std::function<void(int, int)> fill = [&](int site, int remaining) {
      if (site == sites) {
        if (remaining == 0) out.push_back({occ, {}, {}});
        return;
      }
      for (int k = std::min(cap, remaining); k >= 0; --k) {
        occ[site] = k;
        fill(site + 1, remaining - k);
      }
      occ[site] = 0;
    };
    fill(0, n_particles);
  }

  if (out.empty())
    throw EmptySectorError(
        "EMPTY_SECTOR: no state with " + std::to_string(n_particles) +
        " particles on " + std::to_string(sites) + " sites under " +
        alg.str());
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonian assembly

namespace {

// Key for basis lookup.
using StateKey = std::pair<std::vector<int>, std::vector<int>>;

StateKey key_of(const AlgebraKind& alg, const FockBasisState& st) {
  if (alg.kind == OscillatorKind::WANG_RMATRIX)
    return {st.sites, st.flavors};
  return {st.occupancy, {}};
}

// R-matrix creation: prepend the operator, then bubble its site label to
// sorted position.  Adjacent exchanges swap site labels only, each with a
// factor of -1, so the flavor slots shift while b takes slot one.
// Returns false if the site is already occupied.
bool wang_create(int site, int flavor, const std::vector<int>& sites,
                 const std::vector<int>& flavors, int& sign_out,
                 std::vector<int>& sites_out, std::vector<int>& flavors_out) {
  if (std::find(sites.begin(), sites.end(), site) != sites.end())
    return false;
  int below = static_cast<int>(
      std::count_if(sites.begin(), sites.end(),
                    [&](int sv) { return sv < site; }));
  sign_out = below % 2 ? -1 : 1;
  sites_out = sites;
  sites_out.insert(
      std::lower_bound(sites_out.begin(), sites_out.end(), site), site);
  flavors_out.clear();
  flavors_out.push_back(flavor);
  flavors_out.insert(flavors_out.end(), flavors.begin(), flavors.end());
  return true;
}

// R-matrix annihilation via the defining contraction
//   psi_{k b} psi+_{i a} = delta_{ab} ( delta_{ki} - sum_c psi+_{i c} psi_{k c} ),
// applied recursively down the creation string: the result is a linear
// combination of canonical (N-1)-particle states.
void wang_annihilate(int site, int flavor, const std::vector<int>& sites,
                     const std::vector<int>& flavors, int m_flavors,
                     double coeff, std::map<StateKey, double>& acc) {
  if (sites.empty()) return;          // psi |0> = 0
  if (flavors.front() != flavor) return;  // both terms carry delta_{ab}
  std::vector<int> rest_sites(sites.begin() + 1, sites.end());
  std::vector<int> rest_flavors(flavors.begin() + 1, flavors.end());
  if (site == sites.front()) acc[{rest_sites, rest_flavors}] += coeff;
  for (int c = 1; c <= m_flavors; ++c) {
    std::map<StateKey, double> inner;
    wang_annihilate(site, c, rest_sites, rest_flavors, m_flavors, coeff,
                    inner);
    for (const auto& [key, v] : inner) {
      int sign = 0;
      std::vector<int> ns, nf;
      if (!wang_create(sites.front(), c, key.first, key.second, sign, ns, nf))
        continue;
      acc[{ns, nf}] -= sign * v;
    }
  }
}

}  // namespace

double ManyBodyOperator::trace() const {
  double t = 0;
  for (int i = 0; i < dim; ++i) t += a[i][i];
  return t;
}

ManyBodyOperator build_hamiltonian(const AlgebraKind& alg,
                                   const std::vector<FockBasisState>& basis,
                                   int sites, const HamiltonianSpec& h) {
  validate_algebra(alg);
  if (basis.empty())
    throw std::invalid_argument("build_hamiltonian: empty basis");
  if (!h.onsite.empty() && static_cast<int>(h.onsite.size()) != sites)
    throw std::invalid_argument(
        "build_hamiltonian: onsite energies must list one value per site");
  for (const auto& [i, j, t] : h.hopping)
    if (i < 1 || i > sites || j < 1 || j > sites || i == j)
      throw std::invalid_argument(
          "build_hamiltonian: hopping pair (" + std::to_string(i) + "," +
          std::to_string(j) + ") out of range");

  const int dim = static_cast<int>(basis.size());
  ManyBodyOperator op;
  op.dim = dim;
  op.a.assign(dim, std::vector<double>(dim, 0.0));

  std::map<StateKey, int> index;
  for (int i = 0; i < dim; ++i) index[key_of(alg, basis[i])] = i;

  // diagonal part
  if (!h.onsite.empty()) {
    for (int col = 0; col < dim; ++col) {
      double e = 0;
      if (alg.kind == OscillatorKind::WANG_RMATRIX) {
        for (int site : basis[col].sites) e += h.onsite[site - 1];
      } else {
        for (int site = 0; site < sites; ++site)
          e += h.onsite[site] * basis[col].occupancy[site];
      }
      op.a[col][col] += e;
    }
  }

  // hopping part, both orientations assembled explicitly
  for (const auto& [hi, hj, t] : h.hopping) {
    for (auto [p, r] : {std::pair{hi, hj}, std::pair{hj, hi}}) {
      for (int col = 0; col < dim; ++col) {
        const FockBasisState& st = basis[col];
        if (alg.kind == OscillatorKind::WANG_RMATRIX) {
          // t * sum_a psi+_{p a} psi_{r a}
          for (int a = 1; a <= alg.m_flavors; ++a) {
            std::map<StateKey, double> reduced;
            wang_annihilate(r, a, st.sites, st.flavors, alg.m_flavors, 1.0,
                            reduced);
            for (const auto& [key, v] : reduced) {
              int sign = 0;
              std::vector<int> ns, nf;
              if (!wang_create(p, a, key.first, key.second, sign, ns, nf))
                continue;
              auto it = index.find({ns, nf});
              if (it == index.end())
                throw std::logic_error(
                    "build_hamiltonian: ladder action left the sector");
              op.a[it->second][col] += t * sign * v;
            }
          }
        } else {
          // t * a+_p a_r, amplitude s^{string} sqrt([n_p + 1][n_r])
          const std::vector<int>& n = st.occupancy;
          if (n[r - 1] < 1) continue;
          std::vector<int> target = n;
          target[p - 1] += 1;
          target[r - 1] -= 1;
          auto it = index.find({target, {}});
          if (it == index.end()) continue;  // occupancy cap
          int exponent = 0;
          for (int k = 0; k < p - 1; ++k) exponent += n[k];
          for (int k = 0; k < r - 1; ++k) exponent += n[k];
          if (p > r) exponent += 1;
          double sign = (alg.s == -1 && exponent % 2) ? -1.0 : 1.0;
          double amp = std::sqrt(bracket(alg.kind, n[p - 1] + 1, alg.q) *
                                 bracket(alg.kind, n[r - 1], alg.q));
          op.a[it->second][col] += t * sign * amp;
        }
      }
    }
  }

  double max_asym = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      max_asym = std::max(max_asym, std::abs(op.a[i][j] - op.a[j][i]));
  if (max_asym > 1e-12)
    throw AsymmetricError(
        "ASYMMETRIC: assembled matrix deviates from symmetry by " +
        std::to_string(max_asym));
  op.symmetric = true;
  return op;
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi eigensolver

namespace {

void jacobi_diagonalize(std::vector<std::vector<double>>& a,
                        std::vector<std::vector<double>>& v, int dim,
                        double target_off) {
  v.assign(dim, std::vector<double>(dim, 0.0));
  for (int i = 0; i < dim; ++i) v[i][i] = 1.0;

  auto off_norm = [&] {
    double s = 0;
    for (int p = 0; p < dim; ++p)
      for (int q = p + 1; q < dim; ++q) s += 2 * a[p][q] * a[p][q];
    return std::sqrt(s);
  };

  const int max_sweeps = 50;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm() <= target_off) return;
    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        // rotate rows/columns p and q
        for (int k = 0; k < dim; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < dim; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < dim; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_norm() > target_off)
    throw NoConvergenceError(
        "NO_CONVERGENCE: Jacobi sweep budget exhausted with off-diagonal "
        "norm " +
        std::to_string(off_norm()));
}

}  // namespace

std::vector<double> eigenvalues_symmetric(const ManyBodyOperator& op,
                                          double tol) {
  if (op.dim == 0) return {};
  for (int i = 0; i < op.dim; ++i)
    for (int j = i + 1; j < op.dim; ++j)
      if (std::abs(op.a[i][j] - op.a[j][i]) > 1e-12)
        throw AsymmetricError(
            "ASYMMETRIC: eigenvalues_symmetric requires a symmetric matrix; "
            "entry (" + std::to_string(i) + "," + std::to_string(j) +
            ") differs from its transpose");

  double fro = 0;
  for (int i = 0; i < op.dim; ++i)
    for (int j = 0; j < op.dim; ++j) fro += op.a[i][j] * op.a[i][j];
  fro = std::sqrt(fro);

  std::vector<std::vector<double>> a = op.a;
  std::vector<std::vector<double>> v;
  jacobi_diagonalize(a, v, op.dim, 1e-13 * std::max(1.0, fro));

  // residual check ||A v - lambda v|| <= tol * ||A||_F per eigenpair
  for (int col = 0; col < op.dim; ++col) {
    double lambda = a[col][col];
    double res = 0;
    for (int row = 0; row < op.dim; ++row) {
      double av = 0;
      for (int k = 0; k < op.dim; ++k) av += op.a[row][k] * v[k][col];
      double d = av - lambda * v[row][col];
      res += d * d;
    }
    if (std::sqrt(res) > tol * std::max(1.0, fro))
      throw NoConvergenceError(
          "NO_CONVERGENCE: eigenvector residual " +
          std::to_string(std::sqrt(res)) + " exceeds tolerance");
  }

  std::vector<double> eig(op.dim);
  for (int i = 0; i < op.dim; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

// ---------------------------------------------------------------------------
// Exact partition functions and fitting

ExactScalar SymbolicZ::eval(const EvaluationPoint& pt) const {
  if (pt.m_vars() != m_vars)
    throw std::invalid_argument("SymbolicZ::eval: expected " +
                                std::to_string(m_vars) + " variables");
  ExactScalar total(0);
  for (const auto& [expo, coeff] : terms) {
    ExactScalar term = coeff;
    for (int i = 0; i < m_vars; ++i)
      for (int e = 0; e < expo[i]; ++e) term *= pt.values[i];
    total += term;
  }
  return total;
}

std::function<ExactScalar(const EvaluationPoint&)> SymbolicZ::evaluator()
    const {
  SymbolicZ copy = *this;
  return [copy](const EvaluationPoint& pt) { return copy.eval(pt); };
}

SymbolicZ symbolic_partition_function(const AlgebraKind& alg, int sites,
                                      int n_particles) {
  std::vector<FockBasisState> basis = build_basis(alg, sites, n_particles);
  SymbolicZ z;
  if (alg.kind == OscillatorKind::WANG_RMATRIX) {
    z.m_vars = sites * alg.m_flavors;
    for (const auto& st : basis) {
      std::vector<int> expo(z.m_vars, 0);
      for (size_t k = 0; k < st.sites.size(); ++k)
        expo[(st.sites[k] - 1) * alg.m_flavors + (st.flavors[k] - 1)] += 1;
      z.terms[expo] += 1;
    }
  } else {
    z.m_vars = sites;
    for (const auto& st : basis) z.terms[st.occupancy] += 1;
  }
  return z;
}

FitStatisticsReport fit_statistics(const AlgebraKind& alg, int n_particles,
                                   int m_vars, const Locus& locus) {
  validate_algebra(alg);
  int sites = m_vars;
  Locus effective = locus;
  if (alg.kind == OscillatorKind::WANG_RMATRIX) {
    if (m_vars % alg.m_flavors != 0)
      throw std::invalid_argument(
          "fit_statistics: m_vars must be a multiple of the flavor count");
    sites = m_vars / alg.m_flavors;
    if (effective.group.empty()) {
      // flavor variables of one site share its on-site energy
      effective.group.resize(m_vars);
      for (int v = 0; v < m_vars; ++v)
        effective.group[v] = v / alg.m_flavors;
    }
  }

  SymbolicZ z = symbolic_partition_function(alg, sites, n_particles);
  FitResult fit = fit_coefficients(z.evaluator(), n_particles, m_vars,
                                   effective, Basis::schur);

  FitStatisticsReport report;
  report.schur_spec.label = alg.str();
  report.schur_spec.n = n_particles;
  report.schur_spec.side = Basis::schur;
  report.schur_spec.coeffs = fit.coeffs;
  report.monomial_spec = omega_from_c(report.schur_spec);
  report.verdict = classify(report.schur_spec);
  report.rank = fit.rank;
  return report;
}

// ---------------------------------------------------------------------------
// Freeness

FreenessReport freeness_check(const AlgebraKind& alg,
                              const HamiltonianSpec& h, int sites,
                              int n_particles, double tol) {
  validate_algebra(alg);

  // single-particle matrix
  ManyBodyOperator t;
  t.dim = sites;
  t.a.assign(sites, std::vector<double>(sites, 0.0));
  if (!h.onsite.empty()) {
    if (static_cast<int>(h.onsite.size()) != sites)
      throw std::invalid_argument(
          "freeness_check: onsite energies must list one value per site");
    for (int i = 0; i < sites; ++i) t.a[i][i] = h.onsite[i];
  }
  for (const auto& [i, j, v] : h.hopping) {
    t.a[i - 1][j - 1] += v;
    t.a[j - 1][i - 1] += v;
  }
  t.symmetric = true;
  std::vector<double> modes = eigenvalues_symmetric(t);

  // candidate many-body energies: capped occupancies of the eigenmodes
  const int cap = alg.site_cap(n_particles);
  const int copies = alg.kind == OscillatorKind::WANG_RMATRIX
                         ? static_cast<int>(std::lround(std::pow(
                               alg.m_flavors, n_particles)))
                         : 1;
  std::vector<double> candidates;
  std::vector<int> occ(sites, 0);
  std::function<void(int, int, double)> fill = [&](int mode, int remaining,
                                                   double energy) {
    if (mode == sites) {
      if (remaining == 0)
        for (int c = 0; c < copies; ++c) candidates.push_back(energy);
      return;
    }
    for (int k = std::min(cap, remaining); k >= 0; --k)
      fill(mode + 1, remaining - k, energy + k * modes[mode]);
  };
  fill(0, n_particles, 0.0);
  std::sort(candidates.begin(), candidates.end());

  std::vector<FockBasisState> basis = build_basis(alg, sites, n_particles);
  ManyBodyOperator hmat = build_hamiltonian(alg, basis, sites, h);
  std::vector<double> spectrum = eigenvalues_symmetric(hmat);

  FreenessReport report;
  report.many_body_count = static_cast<int>(spectrum.size());
  report.candidate_count = static_cast<int>(candidates.size());
  if (spectrum.size() != candidates.size()) {
    report.free = false;
    report.max_deviation = std::numeric_limits<double>::infinity();
    return report;
  }
  double dev = 0;
  for (size_t i = 0; i < spectrum.size(); ++i)
    dev = std::max(dev, std::abs(spectrum[i] - candidates[i]));
  report.max_deviation = dev;
  report.free = dev <= tol;
  return report;
}

}  // namespace exstat
