#include "exstat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "exstat/fock.hpp"
#include "exstat/microstates.hpp"
#include "exstat/tensor.hpp"
#include "exstat/zoo.hpp"

namespace exstat::cli {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Small formatting helpers

std::string fmt12(double x) {
  if (x == 0) x = 0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Display width in columns, counting UTF-8 code points (the check marks are
// multi-byte but one column wide).
size_t display_width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string pad_to(const std::string& s, size_t w, bool right) {
  size_t have = display_width(s);
  if (have >= w) return s;
  std::string fill(w - have, ' ');
  return right ? fill + s : s + fill;
}

void rtrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

// Aligns rows into " | "-separated columns; columns at index >=
// right_align_from are right-aligned (numeric columns).
std::string layout_rows(const std::vector<std::vector<std::string>>& rows,
                        size_t right_align_from = SIZE_MAX) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], display_width(row[c]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) line += " | ";
      line += pad_to(row[c], widths[c], c >= right_align_from);
    }
    rtrim(line);
    out += line + "\n";
  }
  return out;
}

std::string mark(bool ok) { return ok ? "\u2713" : "\u2717"; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string violations_text(const std::vector<Violation>& vs) {
  if (vs.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += "; ";
    out += violation_name(vs[i].kind) + " at " + vs[i].partition.str() +
           " = " + to_string(vs[i].value);
  }
  return out;
}

std::string verdict_marks(const AuditVerdict& v) {
  return "QM " + mark(v.qm_ok) + " | SM " + mark(v.sm_ok) + " | QS " +
         mark(v.qs_ok);
}

// ---------------------------------------------------------------------------
// Verdict rendering (text / csv); JSON lives in verdicts_to_json below.

std::string render_audit_table(const std::vector<AuditVerdict>& vs) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : vs)
    rows.push_back({v.input.label, "QM " + mark(v.qm_ok),
                    "SM " + mark(v.sm_ok), "QS " + mark(v.qs_ok),
                    violations_text(v.violations)});
  return layout_rows(rows);
}

std::string render_audit_csv(const std::vector<AuditVerdict>& vs) {
  std::string out = "label,n,qm,sm,qs,violations\n";
  for (const auto& v : vs) {
    out += csv_quote(v.input.label) + "," + std::to_string(v.input.n) + "," +
           (v.qm_ok ? "true" : "false") + "," + (v.sm_ok ? "true" : "false") +
           "," + (v.qs_ok ? "true" : "false") + "," +
           csv_quote(violations_text(v.violations)) + "\n";
  }
  return out;
}

// One family block: label, both coefficient vectors, both basis expansions,
// verdict.  Shared by `zoo` and the expansion golden tables.
std::string render_statistics_entry(const AuditVerdict& v) {
  const StatisticsSpec& c = v.c_side();
  const StatisticsSpec& omega = v.omega_side();
  std::string out;
  out += "family: " + v.input.label + "  n=" + std::to_string(v.input.n) +
         "  natural side: " + basis_name(v.input.side) + "\n";
  out += "Omega = " + to_string(omega.coeffs) + "\n";
  out += "C = " + to_string(c.coeffs) + "\n";
  out += "Z = " + to_string(omega.poly()) + "\n";
  out += "Z = " + to_string(c.poly()) + "\n";
  out += "verdict: " + verdict_marks(v) + "\n";
  out += "violations: " + violations_text(v.violations) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Kostka rendering

std::string render_matrix_block(
    const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> widths(cells.empty() ? 0 : cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) line += " ";
      line += pad_to(row[c], widths[c], true);
    }
    out += line + "\n";
  }
  return out;
}

std::string render_kostka(int n, bool with_inverse) {
  KostkaMatrix k = kostka_matrix(n);
  PartitionTable table = enumerate_partitions(n);
  std::string out = "kostka n=" + std::to_string(n) +
                    " (K[J][I] = tableau count of shape lambda_I, content "
                    "lambda_J; canonical order)\n";
  out += "index:";
  for (int j = 1; j <= table.count(); ++j)
    out += " " + std::to_string(j) + ":" + table.at(j).str();
  out += "\n";
  std::vector<std::vector<std::string>> cells;
  for (int j = 1; j <= k.size(); ++j) {
    std::vector<std::string> row;
    for (int i = 1; i <= k.size(); ++i)
      row.push_back(std::to_string(k.at(j, i)));
    cells.push_back(std::move(row));
  }
  out += "K:\n" + render_matrix_block(cells);
  if (with_inverse) {
    auto inv = inverse_kostka_matrix(n);
    std::vector<std::vector<std::string>> icells;
    for (const auto& row : inv) {
      std::vector<std::string> r;
      for (const auto& e : row) r.push_back(to_string(e));
      icells.push_back(std::move(r));
    }
    out += "inverse:\n" + render_matrix_block(icells);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Microstate tables

StatisticsSpec omega_side_of(const StatisticsSpec& spec) {
  return spec.side == Basis::monomial ? spec : omega_from_c(spec);
}

std::string render_microstates_table(int n, int e,
                                     const std::vector<StatisticsSpec>& specs,
                                     bool with_series) {
  PartitionTable table = enumerate_partitions(n);
  std::vector<StatisticsSpec> omegas;
  for (const auto& s : specs) omegas.push_back(omega_side_of(s));
  auto dists = enumerate_distributions(n, e);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"distribution", "type"};
  for (const auto& s : specs) header.push_back(s.label);
  rows.push_back(header);
  std::vector<ExactScalar> totals(specs.size(), ExactScalar(0));
  for (const auto& d : dists) {
    Partition type = occupation_type(d);
    int pos = table.position(type);
    std::vector<std::string> row = {d.str(), type.str()};
    for (size_t i = 0; i < omegas.size(); ++i) {
      const ExactScalar& w = omegas[i].coeffs[pos - 1];
      totals[i] += w;
      row.push_back(to_string(w));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> total_row = {"total", ""};
  for (const auto& t : totals) total_row.push_back(to_string(t));
  rows.push_back(std::move(total_row));
  if (with_series) {
    std::vector<std::string> series_row = {"series", ""};
    for (const auto& s : specs) {
      auto coeffs = microstates_from_series(s, n, e);
      series_row.push_back(to_string(coeffs[e - n]));
    }
    rows.push_back(std::move(series_row));
  }
  return "microstates n=" + std::to_string(n) + " E=" + std::to_string(e) +
         "\n" + layout_rows(rows, 2);
}

// ---------------------------------------------------------------------------
// Schur-Weyl decomposition table

std::string render_decomposition(int n, int m) {
  auto rows = decomposition_table(n, m);
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"lambda", "f_lambda", "dim_U", "product"});
  long total = 0;
  for (const auto& r : rows) {
    total += r.product;
    cells.push_back({r.lambda.str(), std::to_string(r.f_dim),
                     std::to_string(r.u_dim), std::to_string(r.product)});
  }
  cells.push_back({"total", "", "",
                   std::to_string(total) + " (= " + std::to_string(m) + "^" +
                       std::to_string(n) + ")"});
  return "schur-weyl decomposition n=" + std::to_string(n) +
         " m=" + std::to_string(m) + "\n" + layout_rows(cells, 1);
}

// ---------------------------------------------------------------------------
// Exponent-vector polynomial rendering (diagonal partition functions)

std::string render_exponent_terms(
    const std::map<std::vector<int>, ExactScalar>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [expo, coeff] : terms) {
    std::string term;
    for (size_t v = 0; v < expo.size(); ++v) {
      if (expo[v] == 0) continue;
      if (!term.empty()) term += "*";
      term += "x" + std::to_string(v + 1);
      if (expo[v] > 1) term += "^" + std::to_string(expo[v]);
    }
    if (term.empty()) term = "1";
    ExactScalar a = coeff;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!(a == 1)) out += to_string(a) + "*";
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wang sector report (fit + annotation); also the wang-n2 golden table.

std::string render_wang_fit() {
  AlgebraKind alg = wang(2);
  const int sites = 2, n_particles = 2;
  auto basis = build_basis(alg, sites, n_particles);
  SymbolicZ z = symbolic_partition_function(alg, sites, n_particles);
  FitStatisticsReport report =
      fit_statistics(alg, n_particles, sites * alg.m_flavors);
  AuditVerdict v = report.verdict;
  v.input.label = "wang-parastatistics(N=2)";

  std::string out;
  out += "wang R-matrix sector: m=2 flavors, sites=2, N=2\n";
  out += "basis dimension: " + std::to_string(basis.size()) + "\n";
  out += "Z (one variable per site-flavor state) = " +
         render_exponent_terms(z.terms) + "\n";
  out +=
      "fit on the degenerate locus (the flavor states of each site share one "
      "energy):\n";
  out += "C = " + to_string(report.schur_spec.coeffs) + "\n";
  out += "Z = " + to_string(report.schur_spec.poly()) + "\n";
  out += "Omega = " + to_string(report.monomial_spec.coeffs) + "\n";
  out += "Z = " + to_string(report.monomial_spec.poly()) + "\n";
  out += "verdict: " + verdict_marks(v) + "\n";
  out += "violations: " + violations_text(v.violations) + "\n";
  out += "note: the coefficient of m_(2) is exactly -1/2, not +1/2; the +1/2\n";
  out += "variant fails both the inverse-Kostka transform of the Schur-side\n";
  out +=
      "coefficients and the direct locus evaluation 4*u*v of the sector "
      "trace.\n";
  return out;
}

// ---------------------------------------------------------------------------
// Jack interpolation (linear-in-alpha coefficients, interpolated exactly)

struct LinearPoly {
  ExactScalar c0, c1;  // c0 + c1 * alpha
};

std::string lin_str(const LinearPoly& p) {
  if (is_zero(p.c1)) return to_string(p.c0);
  std::string alpha_part;
  ExactScalar a = p.c1;
  bool neg = sgn(a) < 0;
  if (neg) a = -a;
  alpha_part = (a == 1 ? "" : to_string(a) + "*") + std::string("alpha");
  if (is_zero(p.c0)) return (neg ? "-" : "") + alpha_part;
  return to_string(p.c0) + (neg ? "-" : "+") + alpha_part;
}

std::string lin_vector(const std::vector<LinearPoly>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += lin_str(v[i]);
  }
  return out + ")";
}

std::string render_jack_symbolic() {
  auto at = [](long alpha) {
    FamilyParams p;
    p.family = Family::JACK_21;
    p.n = 3;
    p.alpha = rat(alpha);
    return audit_family(p);
  };
  AuditVerdict v0 = at(0), v1 = at(1), vm2 = at(-2);
  auto interpolate = [](const std::vector<ExactScalar>& a0,
                        const std::vector<ExactScalar>& a1,
                        const std::vector<ExactScalar>& am2) {
    std::vector<LinearPoly> out;
    for (size_t i = 0; i < a0.size(); ++i) {
      LinearPoly p{a0[i], a1[i] - a0[i]};
      if (p.c0 + p.c1 * rat(-2) != am2[i])
        throw std::logic_error(
            "jack interpolation: coefficients are not linear in alpha");
      out.push_back(p);
    }
    return out;
  };
  auto omega = interpolate(v0.omega_side().coeffs, v1.omega_side().coeffs,
                           vm2.omega_side().coeffs);
  auto c = interpolate(v0.c_side().coeffs, v1.c_side().coeffs,
                       vm2.c_side().coeffs);
  std::string out;
  out +=
      "jack interpolation, n=3 (coefficients linear in alpha; interpolated "
      "from alpha=0,1 and verified at alpha=-2)\n";
  out += "Omega = " + lin_vector(omega) + "\n";
  out += "C = " + lin_vector(c) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Tensor-lab experiments: named sections of pass/fail claims

struct Claim {
  std::string desc;
  std::string expected;
  std::string observed;
  bool pass() const { return expected == observed; }
};

struct Section {
  std::string title;
  std::string pre;  // optional table text
  std::vector<Claim> claims;
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

Section section_decomposition(int n, int m) {
  Section s;
  s.title = "schur-weyl decomposition n=" + std::to_string(n) +
            " m=" + std::to_string(m);
  auto rows = decomposition_table(n, m);
  long total = 0;
  for (const auto& r : rows) total += r.product;
  s.pre = render_decomposition(n, m);
  long expect = 1;
  for (int i = 0; i < n; ++i) expect *= m;
  s.claims.push_back({"products sum to m^n", std::to_string(expect),
                      std::to_string(total)});
  return s;
}

Section section_span() {
  Section s;
  s.title = "mixed-symmetry span";
  auto psis = mixed_symmetry_examples();
  s.claims.push_back({"rank of the 20 mixed-symmetry states", "20",
                      std::to_string(exact_rank(psis))});
  s.claims.push_back({"Psi_13 in the span", "true",
                      bool_str(span_membership(psis, psi13()))});
  TensorVector swapped =
      permutation_apply(Permutation::transposition(3, 1, 2), psi13());
  s.claims.push_back({"P_12 Psi_13 in the span", "false",
                      bool_str(span_membership(psis, swapped))});
  return s;
}

Section section_expectations() {
  Section s;
  s.title = "exchange expectations, projector onto |1 3 2>";
  TensorVector w = basis_ket(4, {1, 3, 2});
  TensorVector swapped =
      permutation_apply(Permutation::transposition(3, 1, 2), psi13());
  s.claims.push_back(
      {"<Psi_13| O |Psi_13>", "0", expectation(w, psi13()).str()});
  s.claims.push_back(
      {"<P_12 Psi_13| O |P_12 Psi_13>", "1", expectation(w, swapped).str()});
  return s;
}

Section section_partition_functions() {
  Section s;
  s.title = "subspace partition functions";
  auto psis = mixed_symmetry_examples();
  SubspaceZ z1 = subspace_partition_function(psis, 4);
  s.claims.push_back({"span{Psi} Z (monomial)", "m_(2,1) + 2*m_(1,1,1)",
                      z1.monomial ? to_string(*z1.monomial) : "<asymmetric>"});
  s.claims.push_back({"span{Psi} Z (schur)", "s_(2,1)",
                      z1.schur ? to_string(*z1.schur) : "<asymmetric>"});

  auto sector = isotypic_21_sector_m4();
  s.claims.push_back({"(2,1)-isotypic sector dimension", "40",
                      std::to_string(sector.size())});
  SubspaceZ z2 = subspace_partition_function(sector, 4);
  s.claims.push_back({"isotypic sector Z (monomial)",
                      "2*m_(2,1) + 4*m_(1,1,1)",
                      z2.monomial ? to_string(*z2.monomial) : "<asymmetric>"});
  s.claims.push_back({"isotypic sector Z (schur)", "2*s_(2,1)",
                      z2.schur ? to_string(*z2.schur) : "<asymmetric>"});

  auto capped = capped_symmetric_basis_m4();
  s.claims.push_back({"capped symmetric subspace dimension", "16",
                      std::to_string(capped.size())});
  SubspaceZ z3 = subspace_partition_function(capped, 4);
  s.claims.push_back({"capped subspace Z (monomial)", "m_(2,1) + m_(1,1,1)",
                      z3.monomial ? to_string(*z3.monomial) : "<asymmetric>"});
  s.claims.push_back({"capped subspace Z (schur)", "s_(2,1) - s_(1,1,1)",
                      z3.schur ? to_string(*z3.schur) : "<asymmetric>"});
  if (z3.schur) {
    PartitionTable t3 = enumerate_partitions(3);
    s.claims.push_back({"capped subspace C vector", "(0, 1, -1)",
                        to_string(z3.schur->dense(t3))});
  }
  return s;
}

Section section_phi_plane() {
  Section s;
  s.title = "phi plane: exchange-stable but not unitarily stable";
  auto phis = phi_plane();
  bool stable = true;
  std::vector<int> image = {1, 2, 3};
  std::sort(image.begin(), image.end());
  do {
    Permutation sigma{image};
    for (const auto& phi : phis)
      if (!span_membership(phis, permutation_apply(sigma, phi)))
        stable = false;
  } while (std::next_permutation(image.begin(), image.end()));
  s.claims.push_back(
      {"stable under all 6 factor permutations", "true", bool_str(stable)});
  TensorVector moved = single_particle_transform(generic_u4(), phis[0]);
  s.claims.push_back({"4-level mixing image of phi_1 in the plane", "false",
                      bool_str(span_membership(phis, moved))});
  SubspaceZ z = subspace_partition_function(phis, 4);
  s.claims.push_back({"raw Z", "2*x1*x2*x3", render_exponent_terms(z.raw)});
  s.claims.push_back(
      {"raw Z is a symmetric polynomial", "false", bool_str(z.symmetric)});
  return s;
}

Section section_spin_pair() {
  Section s;
  s.title = "spin-pair states, flavored two-particle subspace";
  auto psis = spin_pair_states();
  s.claims.push_back(
      {"rank of {psi_1..psi_4}", "4", std::to_string(exact_rank(psis))});
  TensorVector moved =
      single_particle_transform(spin_mixing_unitary(), psis[1]);
  s.claims.push_back({"level-2,3 rotation image of psi_2 in the subspace",
                      "false", bool_str(span_membership(psis, moved))});
  return s;
}

Section section_cap_invariance() {
  Section s;
  s.title = "occupancy-cap invariance, 2 levels";
  TensorVector v = basis_ket(2, {1, 1, 2});
  TensorVector tv = single_particle_transform(hadamard2(), v);
  s.claims.push_back({"amplitude of |1 1 1> in (H(x)H(x)H)|1 1 2>",
                      "1/4*sqrt2", tv.get({1, 1, 1}).str()});
  return s;
}

std::vector<Section> all_sections() {
  return {section_decomposition(3, 4), section_span(),
          section_expectations(),      section_partition_functions(),
          section_phi_plane(),         section_spin_pair(),
          section_cap_invariance()};
}

std::string render_sections(const std::vector<Section>& sections) {
  std::string out;
  for (size_t i = 0; i < sections.size(); ++i) {
    if (i) out += "\n";
    out += "[" + sections[i].title + "]\n";
    if (!sections[i].pre.empty()) out += sections[i].pre;
    for (const auto& c : sections[i].claims)
      out += std::string(c.pass() ? "PASS" : "FAIL") + " " + c.desc +
             ": expected " + c.expected + ", observed " + c.observed + "\n";
  }
  return out;
}

std::string render_tensor_all() {
  return "hilbert-space experiments (exact amplitudes in Q(sqrt2))\n\n" +
         render_sections(all_sections());
}

// ---------------------------------------------------------------------------
// Family helpers shared by audit / zoo / microstates

ExactScalar rational_from_json(const json& v, const std::string& what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return rat(v.get<long>());
  throw std::invalid_argument(what + " must be an integer or a \"p/q\" string");
}

FamilyParams family_params_from_json(const json& j) {
  FamilyParams p;
  p.family = parse_family(j.at("family").get<std::string>());
  if (!j.contains("params"))
    throw std::invalid_argument("family entry missing \"params\"");
  const json& pj = j.at("params");
  if (!pj.contains("n")) throw std::invalid_argument("params missing \"n\"");
  p.n = pj.at("n").get<int>();
  if (pj.contains("q")) p.q_or_p = pj.at("q").get<int>();
  if (pj.contains("p")) p.q_or_p = pj.at("p").get<int>();
  if (pj.contains("alpha"))
    p.alpha = rational_from_json(pj.at("alpha"), "alpha");
  if (pj.contains("m")) p.m_states = pj.at("m").get<int>();
  return p;
}

std::vector<ExactScalar> coeffs_from_csv(const std::string& text) {
  std::vector<ExactScalar> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    // trim spaces
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty coefficient in list");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

// "gentile:q=2", "jack-21:alpha=-2", "capped-distinguishable:q=2,m=4"
StatisticsSpec spec_from_family_token(const std::string& token, int n) {
  FamilyParams p;
  p.n = n;
  std::string name = token;
  std::string params;
  size_t colon = token.find(':');
  if (colon != std::string::npos) {
    name = token.substr(0, colon);
    params = token.substr(colon + 1);
  }
  p.family = parse_family(name);
  std::stringstream ss(params);
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    if (kv.empty()) continue;
    size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("malformed family parameter \"" + kv +
                                  "\" (want key=value)");
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (key == "q" || key == "p")
      p.q_or_p = std::stoi(value);
    else if (key == "alpha")
      p.alpha = parse_rational(value);
    else if (key == "m")
      p.m_states = std::stoi(value);
    else
      throw std::invalid_argument("unknown family parameter \"" + key + "\"");
  }
  return make_spec(p);
}

std::vector<AuditVerdict> classify_all(
    const std::vector<StatisticsSpec>& specs) {
  std::vector<std::future<AuditVerdict>> futures;
  futures.reserve(specs.size());
  for (const auto& spec : specs)
    futures.push_back(std::async(
        std::launch::async, [spec]() { return classify(spec); }));
  std::vector<AuditVerdict> verdicts;
  verdicts.reserve(specs.size());
  for (auto& f : futures) verdicts.push_back(f.get());
  return verdicts;
}

// ---------------------------------------------------------------------------
// Golden tables

std::string golden_table_1() {
  std::vector<StatisticsSpec> specs;
  auto fam = [](Family f, int n, std::optional<int> qp = {},
                std::optional<int> m = {}) {
    FamilyParams p;
    p.family = f;
    p.n = n;
    p.q_or_p = qp;
    p.m_states = m;
    return make_spec(p);
  };
  specs.push_back(fam(Family::BOSON, 4));
  specs.push_back(fam(Family::FERMION, 4));
  specs.push_back(fam(Family::GENTILE, 4, 2));
  specs.push_back(fam(Family::PARABOSON, 4, 2));
  specs.push_back(fam(Family::SEMION_N5, 5));
  specs.push_back(fam(Family::MAXWELL_BOLTZMANN, 3));
  auto verdicts = classify_all(specs);
  FitStatisticsReport wang_report = fit_statistics(wang(2), 2, 4);
  AuditVerdict wv = wang_report.verdict;
  wv.input.label = "wang-parastatistics(N=2)";
  verdicts.push_back(wv);
  return "statistics consistency verdicts\n" + render_audit_table(verdicts);
}

std::string golden_expansions(const std::vector<FamilyParams>& families) {
  std::string out;
  for (size_t i = 0; i < families.size(); ++i) {
    if (i) out += "\n";
    out += render_statistics_entry(audit_family(families[i]));
  }
  return out;
}

FamilyParams fp(Family f, int n, std::optional<int> qp = {},
                std::optional<ExactScalar> alpha = {},
                std::optional<int> m = {}) {
  FamilyParams p;
  p.family = f;
  p.n = n;
  p.q_or_p = qp;
  p.alpha = alpha;
  p.m_states = m;
  return p;
}

std::string golden_microstates(const std::vector<FamilyParams>& families) {
  std::vector<StatisticsSpec> specs;
  for (const auto& f : families) specs.push_back(make_spec(f));
  return render_microstates_table(4, 10, specs, true);
}

}  // namespace

std::vector<std::string> golden_ids() {
  return {"kostka-3",           "kostka-4",
          "kostka-5",           "tbl-gentile",
          "paracount",          "hilbert-decomp",
          "table-1",            "gentile-expansions",
          "para-expansions",    "quon-n3",
          "jack-immanon",       "semion-n5",
          "wang-n2",            "hilbert-space-examples"};
}

std::string generate_golden(const std::string& id) {
  if (id == "kostka-3") return render_kostka(3, true);
  if (id == "kostka-4") return render_kostka(4, true);
  if (id == "kostka-5") return render_kostka(5, true);
  if (id == "tbl-gentile")
    return golden_microstates(
        {fp(Family::BOSON, 4), fp(Family::FERMION, 4),
         fp(Family::GENTILE, 4, 2), fp(Family::GENTILE, 4, 3),
         fp(Family::GENTILE, 4, 4)});
  if (id == "paracount")
    return golden_microstates(
        {fp(Family::PARABOSON, 4, 2), fp(Family::PARABOSON, 4, 3),
         fp(Family::PARABOSON, 4, 4), fp(Family::PARAFERMION, 4, 2),
         fp(Family::PARAFERMION, 4, 3)});
  if (id == "hilbert-decomp") return render_decomposition(5, 6);
  if (id == "table-1") return golden_table_1();
  if (id == "gentile-expansions")
    return golden_expansions(
        {fp(Family::GENTILE, 4, 2), fp(Family::GENTILE, 4, 3)});
  if (id == "para-expansions")
    return golden_expansions(
        {fp(Family::PARABOSON, 4, 2), fp(Family::PARABOSON, 4, 3),
         fp(Family::PARABOSON, 4, 4), fp(Family::PARAFERMION, 4, 2),
         fp(Family::PARAFERMION, 4, 3), fp(Family::PARAFERMION, 4, 4)});
  if (id == "quon-n3")
    return golden_expansions(
        {fp(Family::MAXWELL_BOLTZMANN, 3),
         fp(Family::CAPPED_DISTINGUISHABLE, 3, 2, {}, 4)});
  if (id == "jack-immanon") {
    std::string out = render_jack_symbolic() + "\n";
    out += golden_expansions({fp(Family::JACK_21, 3, {}, rat(0)),
                              fp(Family::JACK_21, 3, {}, rat(1)),
                              fp(Family::JACK_21, 3, {}, rat(-2)),
                              fp(Family::IMMANON_21, 3)});
    return out;
  }
  if (id == "semion-n5")
    return golden_expansions({fp(Family::SEMION_N5, 5)});
  if (id == "wang-n2") return render_wang_fit();
  if (id == "hilbert-space-examples") return render_tensor_all();
  throw std::invalid_argument("unknown golden table id \"" + id + "\"");
}

// ---------------------------------------------------------------------------
// JSON verdict reports

namespace {

json spec_to_json(const StatisticsSpec& s) {
  std::vector<std::string> coeffs;
  for (const auto& c : s.coeffs) coeffs.push_back(to_string(c));
  return json{{"label", s.label},
              {"n", s.n},
              {"side", basis_name(s.side)},
              {"coefficients", coeffs}};
}

StatisticsSpec spec_from_json(const json& j) {
  StatisticsSpec s;
  s.label = j.at("label").get<std::string>();
  s.n = j.at("n").get<int>();
  std::string side = j.at("side").get<std::string>();
  if (side == "schur")
    s.side = Basis::schur;
  else if (side == "monomial")
    s.side = Basis::monomial;
  else
    throw std::invalid_argument("unknown side \"" + side + "\"");
  for (const auto& c : j.at("coefficients"))
    s.coeffs.push_back(rational_from_json(c, "coefficient"));
  return s;
}

ViolationKind violation_kind_from_name(const std::string& name) {
  for (ViolationKind k :
       {ViolationKind::NEGATIVE_C, ViolationKind::NON_INTEGER_C,
        ViolationKind::OMEGA_GT_ONE, ViolationKind::FRACTIONAL_OMEGA})
    if (violation_name(k) == name) return k;
  throw std::invalid_argument("unknown violation kind \"" + name + "\"");
}

}  // namespace

std::string verdicts_to_json(const std::vector<AuditVerdict>& verdicts) {
  json out;
  out["verdicts"] = json::array();
  for (const auto& v : verdicts) {
    json violations = json::array();
    for (const auto& viol : v.violations)
      violations.push_back({{"kind", violation_name(viol.kind)},
                            {"partition", viol.partition.str()},
                            {"value", to_string(viol.value)}});
    out["verdicts"].push_back({{"label", v.input.label},
                               {"n", v.input.n},
                               {"qm_ok", v.qm_ok},
                               {"sm_ok", v.sm_ok},
                               {"qs_ok", v.qs_ok},
                               {"input", spec_to_json(v.input)},
                               {"derived", spec_to_json(v.derived)},
                               {"violations", violations}});
  }
  return out.dump(2) + "\n";
}

std::vector<AuditVerdict> verdicts_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<AuditVerdict> out;
  for (const auto& vj : j.at("verdicts")) {
    AuditVerdict v;
    v.qm_ok = vj.at("qm_ok").get<bool>();
    v.sm_ok = vj.at("sm_ok").get<bool>();
    v.qs_ok = vj.at("qs_ok").get<bool>();
    v.input = spec_from_json(vj.at("input"));
    v.derived = spec_from_json(vj.at("derived"));
    for (const auto& violj : vj.at("violations")) {
      Violation viol{
          violation_kind_from_name(violj.at("kind").get<std::string>()),
          parse_partition(violj.at("partition").get<std::string>()),
          parse_rational(violj.at("value").get<std::string>())};
      v.violations.push_back(std::move(viol));
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand handlers

namespace {

struct AuditOptions {
  std::string config_path;
  std::string family;
  int n = 0;
  int q = 0;
  int p = 0;
  std::string alpha;
  int m = 0;
  std::string side;
  std::string coeffs;
  std::string label;
  std::string output = "text";
  bool output_flag_set = false;  // an explicit --output beats the config file
};

int emit_verdicts(const std::vector<AuditVerdict>& verdicts,
                  const std::string& output, std::ostream& out,
                  std::ostream& err) {
  if (output == "text") {
    out << render_audit_table(verdicts);
    return 0;
  }
  if (output == "json") {
    out << verdicts_to_json(verdicts);
    return 0;
  }
  if (output == "csv") {
    out << render_audit_csv(verdicts);
    return 0;
  }
  err << "error: unknown output format \"" << output << "\"\n";
  return 2;
}

FamilyParams family_params_from_flags(const AuditOptions& o) {
  FamilyParams p;
  p.family = parse_family(o.family);
  p.n = o.n;
  if (o.q > 0) p.q_or_p = o.q;
  if (o.p > 0) p.q_or_p = o.p;
  if (!o.alpha.empty()) p.alpha = parse_rational(o.alpha);
  if (o.m > 0) p.m_states = o.m;
  return p;
}

int cmd_audit(const AuditOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<StatisticsSpec> specs;
  std::string output = o.output;
  if (!o.config_path.empty()) {
    std::ifstream f(o.config_path);
    if (!f) {
      err << "error: cannot open config file " << o.config_path << "\n";
      return 2;
    }
    json j = json::parse(f);
    if (j.contains("output") && !o.output_flag_set)
      output = j.at("output").get<std::string>();
    if (!j.contains("specs") || !j.at("specs").is_array())
      throw std::invalid_argument("config missing \"specs\" array");
    for (const auto& sj : j.at("specs")) {
      StatisticsSpec spec;
      if (sj.contains("family")) {
        spec = make_spec(family_params_from_json(sj));
        if (sj.contains("label"))
          spec.label = sj.at("label").get<std::string>();
      } else {
        spec = spec_from_json(sj);
      }
      validate(spec);
      specs.push_back(std::move(spec));
    }
  } else if (!o.family.empty()) {
    if (o.n <= 0) throw std::invalid_argument("audit --family requires --n");
    StatisticsSpec spec = make_spec(family_params_from_flags(o));
    if (!o.label.empty()) spec.label = o.label;
    specs.push_back(std::move(spec));
  } else if (!o.coeffs.empty()) {
    if (o.n <= 0 || o.side.empty())
      throw std::invalid_argument("audit --coeffs requires --n and --side");
    StatisticsSpec spec;
    spec.label = o.label.empty() ? "custom" : o.label;
    spec.n = o.n;
    if (o.side == "schur")
      spec.side = Basis::schur;
    else if (o.side == "monomial")
      spec.side = Basis::monomial;
    else
      throw std::invalid_argument("--side must be schur or monomial");
    spec.coeffs = coeffs_from_csv(o.coeffs);
    validate(spec);
    specs.push_back(std::move(spec));
  } else {
    err << "error: audit needs --config, --family, or --coeffs\n";
    return 2;
  }
  // label uniqueness invariant
  std::set<std::string> labels;
  for (const auto& s : specs)
    if (!labels.insert(s.label).second)
      throw std::invalid_argument("duplicate spec label \"" + s.label + "\"");
  return emit_verdicts(classify_all(specs), output, out, err);
}

int cmd_kostka(int n, bool inverse, const std::string& output,
               std::ostream& out, std::ostream& err) {
  if (output == "text") {
    out << render_kostka(n, inverse);
    return 0;
  }
  KostkaMatrix k = kostka_matrix(n);
  PartitionTable table = enumerate_partitions(n);
  if (output == "json") {
    json j;
    j["n"] = n;
    std::vector<std::string> parts;
    for (int i = 1; i <= table.count(); ++i) parts.push_back(table.at(i).str());
    j["partitions"] = parts;
    j["k"] = json::array();
    for (int row = 1; row <= k.size(); ++row) {
      std::vector<long> r;
      for (int col = 1; col <= k.size(); ++col) r.push_back(k.at(row, col));
      j["k"].push_back(r);
    }
    if (inverse) {
      auto inv = inverse_kostka_matrix(n);
      j["inverse"] = json::array();
      for (const auto& row : inv) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(to_string(e));
        j["inverse"].push_back(r);
      }
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (output == "csv") {
    for (int row = 1; row <= k.size(); ++row) {
      for (int col = 1; col <= k.size(); ++col)
        out << (col > 1 ? "," : "") << k.at(row, col);
      out << "\n";
    }
    return 0;
  }
  err << "error: unknown output format \"" << output << "\"\n";
  return 2;
}

int cmd_zoo(bool list, const AuditOptions& o, std::ostream& out,
            std::ostream& err) {
  if (list) {
    out << "boson                    C side: e_1 (fully symmetric)\n"
        << "fermion                  C side: e_{P(n)} (fully antisymmetric)\n"
        << "gentile                  Omega side: occupancy cap q (--q)\n"
        << "paraboson                C side: shapes with at most p rows "
           "(--p)\n"
        << "parafermion              C side: shapes with at most p columns "
           "(--p)\n"
        << "maxwell-boltzmann        Omega side: N!/prod(lambda_j!) weights\n"
        << "jack-21                  Omega side: n=3 interpolation (--alpha)\n"
        << "immanon-21               C side: n=3 mixed-symmetry copy\n"
        << "semion-n5                Omega side: n=5 fractional weights\n"
        << "capped-distinguishable   Omega side: cap q, m states (--q, "
           "--m)\n";
    return 0;
  }
  if (o.family.empty() || o.n <= 0) {
    err << "error: zoo needs --family and --n (or --list)\n";
    return 2;
  }
  AuditVerdict v = audit_family(family_params_from_flags(o));
  if (o.output == "text") {
    out << render_statistics_entry(v);
    return 0;
  }
  return emit_verdicts({v}, o.output, out, err);
}

struct MicrostatesOptions {
  int n = 0;
  int e = 0;
  std::vector<std::string> families;
  bool series = false;
  std::string output = "text";
};

int cmd_microstates(const MicrostatesOptions& o, std::ostream& out,
                    std::ostream& err) {
  if (o.n <= 0 || o.e < o.n)
    throw std::invalid_argument(
        "microstates needs --n >= 1 and --e >= n");
  if (o.families.empty()) {
    err << "error: microstates needs at least one --family token\n";
    return 2;
  }
  std::vector<StatisticsSpec> specs;
  for (const auto& token : o.families)
    specs.push_back(spec_from_family_token(token, o.n));
  if (o.output == "text") {
    out << render_microstates_table(o.n, o.e, specs, o.series);
    return 0;
  }
  if (o.output == "json") {
    PartitionTable table = enumerate_partitions(o.n);
    json j;
    j["n"] = o.n;
    j["e"] = o.e;
    j["rows"] = json::array();
    std::vector<StatisticsSpec> omegas;
    for (const auto& s : specs) omegas.push_back(omega_side_of(s));
    std::map<std::string, ExactScalar> totals;
    for (const auto& d : enumerate_distributions(o.n, o.e)) {
      Partition type = occupation_type(d);
      int pos = table.position(type);
      json row;
      row["distribution"] = d.str();
      row["type"] = type.str();
      json weights;
      for (size_t i = 0; i < specs.size(); ++i) {
        const ExactScalar& w = omegas[i].coeffs[pos - 1];
        weights[specs[i].label] = to_string(w);
        totals[specs[i].label] += w;
      }
      row["weights"] = weights;
      j["rows"].push_back(row);
    }
    json tj;
    for (const auto& [label, total] : totals) tj[label] = to_string(total);
    j["totals"] = tj;
    if (o.series) {
      json sj;
      for (const auto& s : specs) {
        auto coeffs = microstates_from_series(s, o.n, o.e);
        sj[s.label] = to_string(coeffs[o.e - o.n]);
      }
      j["series"] = sj;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.output == "csv") {
    PartitionTable table = enumerate_partitions(o.n);
    std::vector<StatisticsSpec> omegas;
    for (const auto& s : specs) omegas.push_back(omega_side_of(s));
    out << "distribution,type";
    for (const auto& s : specs) out << "," << csv_quote(s.label);
    out << "\n";
    for (const auto& d : enumerate_distributions(o.n, o.e)) {
      Partition type = occupation_type(d);
      int pos = table.position(type);
      out << csv_quote(d.str()) << "," << csv_quote(type.str());
      for (const auto& omega : omegas)
        out << "," << to_string(omega.coeffs[pos - 1]);
      out << "\n";
    }
    return 0;
  }
  err << "error: unknown output format \"" << o.output << "\"\n";
  return 2;
}

struct FockOptions {
  std::string model_path;
  bool spectrum = false;
  bool partition_function = false;
  bool fit = false;
  bool freeness = false;
  bool basis = false;
  int m_vars = 0;
  std::string output = "text";
};

struct FockModel {
  AlgebraKind alg;
  int sites = 0;
  int n_particles = 0;
  bool has_hamiltonian = false;
  HamiltonianSpec h;
};

FockModel parse_fock_model(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw std::invalid_argument("cannot open model file " + path);
  json j = json::parse(f);
  FockModel m;
  std::string kind = j.at("kind").get<std::string>();
  for (char& c : kind)
    c = c == '-' ? '_' : static_cast<char>(std::toupper(
                             static_cast<unsigned char>(c)));
  OscillatorKind k = parse_kind(kind);
  switch (k) {
    case OscillatorKind::GENTILE_COS:
      m.alg = gentile_cos(j.value("q", 1), j.value("s", +1));
      break;
    case OscillatorKind::BM_SIN:
      m.alg = bm_sin(j.value("q", 1), j.value("s", +1));
      break;
    case OscillatorKind::WANG_RMATRIX:
      m.alg = wang(j.value("m", 1));
      break;
    case OscillatorKind::BOSON_REF:
      m.alg = boson_ref();
      break;
    case OscillatorKind::FERMION_REF:
      m.alg = fermion_ref();
      break;
  }
  m.sites = j.at("sites").get<int>();
  m.n_particles = j.at("N").get<int>();
  if (j.contains("hamiltonian")) {
    m.has_hamiltonian = true;
    const json& hj = j.at("hamiltonian");
    if (hj.contains("diagonal"))
      m.h.onsite = hj.at("diagonal").get<std::vector<double>>();
    if (hj.contains("hopping"))
      for (const auto& hop : hj.at("hopping")) {
        if (!hop.is_array() || hop.size() != 3)
          throw std::invalid_argument(
              "hopping entries must be [site_i, site_j, amplitude]");
        m.h.hopping.emplace_back(hop.at(0).get<int>(), hop.at(1).get<int>(),
                                 hop.at(2).get<double>());
      }
  }
  return m;
}

int cmd_fock(const FockOptions& o, std::ostream& out, std::ostream& err) {
  if (o.model_path.empty()) {
    err << "error: fock needs --model FILE\n";
    return 2;
  }
  FockModel m = parse_fock_model(o.model_path);
  auto states = build_basis(m.alg, m.sites, m.n_particles);
  bool any_action = o.spectrum || o.partition_function || o.fit ||
                    o.freeness || o.basis;
  json j;  // built in parallel with the text
  j["algebra"] = m.alg.str();
  j["sites"] = m.sites;
  j["N"] = m.n_particles;
  j["dimension"] = states.size();
  std::string text;
  text += "algebra: " + m.alg.str() + "\n";
  text += "sites: " + std::to_string(m.sites) +
          "  particles: " + std::to_string(m.n_particles) + "\n";
  text += "basis dimension: " + std::to_string(states.size()) + "\n";
  if (o.basis) {
    json bj = json::array();
    for (const auto& st : states) {
      text += "  " + st.str() + "\n";
      bj.push_back(st.str());
    }
    j["basis"] = bj;
  }
  if (o.spectrum || (!any_action && m.has_hamiltonian)) {
    if (!m.has_hamiltonian)
      throw std::invalid_argument("model has no hamiltonian block");
    ManyBodyOperator op = build_hamiltonian(m.alg, states, m.sites, m.h);
    auto eigs = eigenvalues_symmetric(op);
    std::string line;
    json ej = json::array();
    for (size_t i = 0; i < eigs.size(); ++i) {
      if (i) line += ", ";
      line += fmt12(eigs[i]);
      ej.push_back(eigs[i]);
    }
    text += "spectrum: " + line + "\n";
    j["spectrum"] = ej;
  }
  if (o.partition_function) {
    SymbolicZ z = symbolic_partition_function(m.alg, m.sites, m.n_particles);
    text += "Z = " + render_exponent_terms(z.terms) + "\n";
    j["partition_function"] = render_exponent_terms(z.terms);
  }
  if (o.fit) {
    int m_vars = o.m_vars;
    if (m_vars <= 0)
      m_vars = m.alg.kind == OscillatorKind::WANG_RMATRIX
                   ? m.sites * m.alg.m_flavors
                   : m.sites;
    FitStatisticsReport report =
        fit_statistics(m.alg, m.n_particles, m_vars);
    text += "fit (m_vars=" + std::to_string(m_vars) + "):\n";
    text += "C = " + to_string(report.schur_spec.coeffs) + "\n";
    text += "Z = " + to_string(report.schur_spec.poly()) + "\n";
    text += "Omega = " + to_string(report.monomial_spec.coeffs) + "\n";
    text += "Z = " + to_string(report.monomial_spec.poly()) + "\n";
    text += "verdict: " + verdict_marks(report.verdict) + "\n";
    text += "violations: " + violations_text(report.verdict.violations) +
            "\n";
    json fj;
    fj["m_vars"] = m_vars;
    fj["rank"] = report.rank;
    fj["verdicts"] =
        json::parse(verdicts_to_json({report.verdict})).at("verdicts");
    j["fit"] = fj;
  }
  if (o.freeness) {
    if (!m.has_hamiltonian)
      throw std::invalid_argument("model has no hamiltonian block");
    FreenessReport r =
        freeness_check(m.alg, m.h, m.sites, m.n_particles);
    text += "freeness (heuristic single-particle-sum comparison):\n";
    text += "  many-body levels: " + std::to_string(r.many_body_count) + "\n";
    text += "  candidate levels: " + std::to_string(r.candidate_count) + "\n";
    text += "  max deviation: " +
            (std::isinf(r.max_deviation) ? std::string("inf")
                                         : fmt12(r.max_deviation)) +
            "\n";
    text += std::string("  free: ") + (r.free ? "yes" : "no") + "\n";
    json rj;
    rj["free"] = r.free;
    rj["many_body_count"] = r.many_body_count;
    rj["candidate_count"] = r.candidate_count;
    rj["max_deviation"] = std::isinf(r.max_deviation)
                              ? json("inf")
                              : json(r.max_deviation);
    rj["heuristic"] = r.heuristic;
    j["freeness"] = rj;
  }
  if (o.output == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.output == "text") {
    out << text;
    return 0;
  }
  err << "error: unknown output format \"" << o.output << "\"\n";
  return 2;
}

struct TensorOptions {
  std::string experiment = "all";
  int n = 3;
  int m = 4;
  std::string output = "text";
};

int cmd_tensor(const TensorOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<Section> sections;
  if (o.experiment == "all") {
    sections = all_sections();
  } else if (o.experiment == "decomposition") {
    sections.push_back(section_decomposition(o.n, o.m));
  } else if (o.experiment == "span") {
    sections.push_back(section_span());
  } else if (o.experiment == "expectations") {
    sections.push_back(section_expectations());
  } else if (o.experiment == "partition-functions") {
    sections.push_back(section_partition_functions());
  } else if (o.experiment == "phi-plane") {
    sections.push_back(section_phi_plane());
  } else if (o.experiment == "spin-pair") {
    sections.push_back(section_spin_pair());
  } else if (o.experiment == "cap-invariance") {
    sections.push_back(section_cap_invariance());
  } else {
    err << "error: unknown experiment \"" << o.experiment << "\"\n";
    return 2;
  }
  bool all_pass = true;
  for (const auto& s : sections)
    for (const auto& c : s.claims)
      if (!c.pass()) all_pass = false;
  if (o.output == "json") {
    json j;
    j["experiment"] = o.experiment;
    j["claims"] = json::array();
    for (const auto& s : sections)
      for (const auto& c : s.claims)
        j["claims"].push_back({{"description", s.title + ": " + c.desc},
                               {"expected", c.expected},
                               {"observed", c.observed},
                               {"pass", c.pass()}});
    j["all_pass"] = all_pass;
    out << j.dump(2) << "\n";
  } else if (o.output == "text") {
    out << render_sections(sections);
  } else {
    err << "error: unknown output format \"" << o.output << "\"\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}

struct ReproduceOptions {
  std::string id;
  bool all = false;
  bool list = false;
  bool emit = false;
  std::string golden_dir;
};

std::string resolve_golden_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("EXSTAT_GOLDEN_DIR"))
    if (*env) return env;
  return "data/golden";
}

int cmd_reproduce(const ReproduceOptions& o, std::ostream& out,
                  std::ostream& err) {
  if (o.list) {
    for (const auto& id : golden_ids()) out << id << "\n";
    return 0;
  }
  std::vector<std::string> ids;
  if (o.all) {
    ids = golden_ids();
  } else if (!o.id.empty()) {
    ids.push_back(o.id);
  } else {
    err << "error: reproduce needs a table id or --all\n";
    return 2;
  }
  std::string dir = resolve_golden_dir(o.golden_dir);
  bool mismatch = false;
  for (const auto& id : ids) {
    std::string generated = generate_golden(id);
    if (o.emit) {
      out << generated;
      continue;
    }
    std::filesystem::path path = std::filesystem::path(dir) / (id + ".txt");
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      err << "error: cannot open golden file " << path.string() << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    std::string golden = buf.str();
    if (golden == generated) {
      out << id << ": OK\n";
      continue;
    }
    mismatch = true;
    // locate the first differing line for the report
    std::istringstream ga(golden), gb(generated);
    std::string la, lb;
    int line = 0;
    while (true) {
      ++line;
      bool ha = static_cast<bool>(std::getline(ga, la));
      bool hb = static_cast<bool>(std::getline(gb, lb));
      if (!ha && !hb) break;
      if (la != lb || ha != hb) {
        out << id << ": MISMATCH at line " << line << "\n";
        out << "  golden:    " << (ha ? la : std::string("<end>")) << "\n";
        out << "  generated: " << (hb ? lb : std::string("<end>")) << "\n";
        break;
      }
      la.clear();
      lb.clear();
    }
  }
  return mismatch ? 1 : 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry point

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact no-go audit of particle exchange statistics"};
  app.require_subcommand(1);

  AuditOptions audit_opts;
  auto* audit_cmd = app.add_subcommand(
      "audit", "classify statistics specs against both constraints");
  audit_cmd->add_option("--config", audit_opts.config_path,
                        "JSON config with a specs array");
  audit_cmd->add_option("--family", audit_opts.family, "family name");
  audit_cmd->add_option("--n", audit_opts.n, "particle number");
  audit_cmd->add_option("--q", audit_opts.q, "occupancy cap");
  audit_cmd->add_option("--p", audit_opts.p, "para order");
  audit_cmd->add_option("--alpha", audit_opts.alpha, "jack parameter (p/q)");
  audit_cmd->add_option("--m", audit_opts.m, "state count");
  audit_cmd->add_option("--side", audit_opts.side, "schur | monomial");
  audit_cmd->add_option("--coeffs", audit_opts.coeffs,
                        "comma-separated exact coefficients");
  audit_cmd->add_option("--label", audit_opts.label, "spec label");
  audit_cmd->add_option("--output", audit_opts.output, "text | json | csv");

  int kostka_n = 0;
  bool kostka_inverse = false;
  std::string kostka_output = "text";
  auto* kostka_cmd =
      app.add_subcommand("kostka", "print and cache the Kostka matrix");
  kostka_cmd->add_option("n", kostka_n, "weight")->required();
  kostka_cmd->add_flag("--inverse", kostka_inverse,
                       "also print the exact inverse");
  kostka_cmd->add_option("--output", kostka_output, "text | json | csv");

  AuditOptions zoo_opts;
  bool zoo_list = false;
  auto* zoo_cmd =
      app.add_subcommand("zoo", "expand one statistics family in both bases");
  zoo_cmd->add_flag("--list", zoo_list, "list families");
  zoo_cmd->add_option("--family", zoo_opts.family, "family name");
  zoo_cmd->add_option("--n", zoo_opts.n, "particle number");
  zoo_cmd->add_option("--q", zoo_opts.q, "occupancy cap");
  zoo_cmd->add_option("--p", zoo_opts.p, "para order");
  zoo_cmd->add_option("--alpha", zoo_opts.alpha, "jack parameter (p/q)");
  zoo_cmd->add_option("--m", zoo_opts.m, "state count");
  zoo_cmd->add_option("--output", zoo_opts.output, "text | json | csv");

  MicrostatesOptions micro_opts;
  auto* micro_cmd = app.add_subcommand(
      "microstates", "ladder-spectrum microstate tables at fixed (N, E)");
  micro_cmd->add_option("--n", micro_opts.n, "particle number")->required();
  micro_cmd->add_option("--e", micro_opts.e, "total energy")->required();
  micro_cmd->add_option("--family", micro_opts.families,
                        "family token, e.g. gentile:q=2 (repeatable)");
  micro_cmd->add_flag("--series", micro_opts.series,
                      "append the series-extraction cross-check row");
  micro_cmd->add_option("--output", micro_opts.output, "text | json | csv");

  FockOptions fock_opts;
  auto* fock_cmd =
      app.add_subcommand("fock", "run a second-quantized model descriptor");
  fock_cmd->add_option("--model", fock_opts.model_path, "model JSON file")
      ->required();
  fock_cmd->add_flag("--spectrum", fock_opts.spectrum, "print eigenvalues");
  fock_cmd->add_flag("--partition-function", fock_opts.partition_function,
                     "print the exact diagonal partition function");
  fock_cmd->add_flag("--fit", fock_opts.fit,
                     "fit the sector statistics and classify");
  fock_cmd->add_flag("--freeness", fock_opts.freeness,
                     "compare with single-particle-sum spectrum");
  fock_cmd->add_flag("--basis", fock_opts.basis, "list basis states");
  fock_cmd->add_option("--m-vars", fock_opts.m_vars,
                       "variable count for --fit (default: model sites)");
  fock_cmd->add_option("--output", fock_opts.output, "text | json");

  TensorOptions tensor_opts;
  auto* tensor_cmd = app.add_subcommand(
      "tensor-lab", "exact tensor-space invariance experiments");
  tensor_cmd->add_option("--experiment", tensor_opts.experiment,
                         "all | decomposition | span | expectations | "
                         "partition-functions | phi-plane | spin-pair | "
                         "cap-invariance");
  tensor_cmd->add_option("--n", tensor_opts.n, "factors (decomposition)");
  tensor_cmd->add_option("--m", tensor_opts.m, "levels (decomposition)");
  tensor_cmd->add_option("--output", tensor_opts.output, "text | json");

  ReproduceOptions rep_opts;
  auto* rep_cmd = app.add_subcommand(
      "reproduce", "regenerate a golden table and diff it");
  rep_cmd->add_option("id", rep_opts.id, "golden table id");
  rep_cmd->add_flag("--all", rep_opts.all, "run every golden table");
  rep_cmd->add_flag("--list", rep_opts.list, "list golden table ids");
  rep_cmd->add_flag("--emit", rep_opts.emit,
                    "print the regenerated table instead of diffing");
  rep_cmd->add_option("--golden-dir", rep_opts.golden_dir,
                      "golden directory (default: $EXSTAT_GOLDEN_DIR or "
                      "data/golden)");

  std::vector<std::string> argv_store;
  argv_store.push_back("exstat");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  audit_opts.output_flag_set = audit_cmd->count("--output") > 0;

  try {
    if (audit_cmd->parsed()) return cmd_audit(audit_opts, out, err);
    if (kostka_cmd->parsed())
      return cmd_kostka(kostka_n, kostka_inverse, kostka_output, out, err);
    if (zoo_cmd->parsed()) return cmd_zoo(zoo_list, zoo_opts, out, err);
    if (micro_cmd->parsed()) return cmd_microstates(micro_opts, out, err);
    if (fock_cmd->parsed()) return cmd_fock(fock_opts, out, err);
    if (tensor_cmd->parsed()) return cmd_tensor(tensor_opts, out, err);
    if (rep_cmd->parsed()) return cmd_reproduce(rep_opts, out, err);
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace exstat::cli
