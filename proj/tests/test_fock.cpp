#include <doctest.h>

#include <cmath>
#include <random>

#include "exstat/fock.hpp"

using namespace exstat;

namespace {

HamiltonianSpec chain3() {
  HamiltonianSpec h;
  h.hopping = {{1, 2, 1.0}, {2, 3, 1.4}};
  return h;
}

}  // namespace

TEST_CASE("ladder factors of the reference algebras") {
  for (int n = 1; n <= 6; ++n)
    CHECK(bracket(OscillatorKind::BOSON_REF, n, 0) == doctest::Approx(n));
  CHECK(bracket(OscillatorKind::FERMION_REF, 1, 1) == doctest::Approx(1.0));
  CHECK(bracket(OscillatorKind::FERMION_REF, 2, 1) == doctest::Approx(0.0));
}

TEST_CASE("both deformed brackets vanish exactly at the cap") {
  for (int q = 1; q <= 12; ++q) {
    CHECK(std::abs(bracket(OscillatorKind::GENTILE_COS, q + 1, q)) <= 1e-12);
    CHECK(std::abs(bracket(OscillatorKind::BM_SIN, q + 1, q)) <= 1e-12);
  }
}

TEST_CASE("bracket values below the cap at q=2") {
  CHECK(bracket(OscillatorKind::GENTILE_COS, 1, 2) == doctest::Approx(1.0));
  CHECK(bracket(OscillatorKind::GENTILE_COS, 2, 2) == doctest::Approx(1.0));
  CHECK(bracket(OscillatorKind::BM_SIN, 1, 2) == doctest::Approx(1.0));
  CHECK(bracket(OscillatorKind::BM_SIN, 2, 2) == doctest::Approx(1.0));
}

TEST_CASE("kind names round-trip") {
  for (OscillatorKind k :
       {OscillatorKind::GENTILE_COS, OscillatorKind::BM_SIN,
        OscillatorKind::WANG_RMATRIX, OscillatorKind::BOSON_REF,
        OscillatorKind::FERMION_REF})
    CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS_AS(parse_kind("NOT_A_KIND"), std::invalid_argument);
}

TEST_CASE("occupancy caps per sector") {
  CHECK(gentile_cos(2).site_cap(5) == 2);
  CHECK(bm_sin(3).site_cap(5) == 3);
  CHECK(boson_ref().site_cap(5) == 5);
  CHECK(fermion_ref().site_cap(5) == 1);
  CHECK(wang(2).site_cap(5) == 1);
}

TEST_CASE("basis sizes") {
  CHECK(build_basis(gentile_cos(2), 3, 2).size() == 6);
  CHECK(build_basis(boson_ref(), 3, 2).size() == 6);
  CHECK(build_basis(fermion_ref(), 3, 2).size() == 3);
  // one-per-site cap at q=1
  CHECK(build_basis(gentile_cos(1), 3, 2).size() == 3);
  // flavored hard-core sector: C(sites, N) * m^N
  CHECK(build_basis(wang(2), 2, 2).size() == 4);
  CHECK(build_basis(wang(2), 3, 2).size() == 12);
  CHECK(build_basis(wang(3), 3, 2).size() == 27);
  CHECK_THROWS_AS(build_basis(fermion_ref(), 2, 3), EmptySectorError);
}

TEST_CASE("hamiltonians are symmetric") {
  for (const AlgebraKind& alg :
       {gentile_cos(2), bm_sin(2), boson_ref(), wang(2)}) {
    int sites = 3;
    auto basis = build_basis(alg, sites, 2);
    HamiltonianSpec h = chain3();
    h.onsite = {0.3, -0.1, 0.7};
    ManyBodyOperator op = build_hamiltonian(alg, basis, sites, h);
    REQUIRE(op.dim == static_cast<int>(basis.size()));
    CHECK(op.symmetric);
    for (int i = 0; i < op.dim; ++i)
      for (int j = 0; j < op.dim; ++j)
        CHECK(op.a[i][j] == doctest::Approx(op.a[j][i]).epsilon(1e-14));
  }
}

TEST_CASE("jacobi eigenvalues of a known 2x2") {
  ManyBodyOperator op;
  op.dim = 2;
  op.a = {{0, 1}, {1, 0}};
  op.symmetric = true;
  auto eigs = eigenvalues_symmetric(op);
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] == doctest::Approx(-1.0));
  CHECK(eigs[1] == doctest::Approx(1.0));
}

TEST_CASE("asymmetric operators are rejected") {
  ManyBodyOperator op;
  op.dim = 2;
  op.a = {{0, 1}, {2, 0}};
  op.symmetric = false;
  CHECK_THROWS_AS(eigenvalues_symmetric(op), AsymmetricError);
}

TEST_CASE("capped-oscillator chain spectrum at q=2, N=2") {
  AlgebraKind alg = gentile_cos(2);
  auto basis = build_basis(alg, 3, 2);
  ManyBodyOperator op = build_hamiltonian(alg, basis, 3, chain3());
  auto eigs = eigenvalues_symmetric(op);
  const double expected[] = {-2.698304086779, -1.264577026230, 0.0,
                             0.0,             1.264577026230,  2.698304086779};
  REQUIRE(eigs.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(eigs[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("cap-1 cosine algebra with negative sign mirrors the fermion "
          "reference") {
  for (int sites = 2; sites <= 4; ++sites)
    for (int n = 1; n <= std::min(3, sites); ++n) {
      AlgebraKind a = gentile_cos(1, -1);
      AlgebraKind f = fermion_ref();
      auto ba = build_basis(a, sites, n);
      auto bf = build_basis(f, sites, n);
      REQUIRE(ba.size() == bf.size());
      HamiltonianSpec h;
      h.onsite.assign(sites, 0.0);
      for (int s = 0; s < sites; ++s) h.onsite[s] = 0.1 * (s + 1);
      for (int s = 1; s < sites; ++s)
        h.hopping.push_back({s, s + 1, 1.0 + 0.2 * s});
      auto ea = eigenvalues_symmetric(build_hamiltonian(a, ba, sites, h));
      auto ef = eigenvalues_symmetric(build_hamiltonian(f, bf, sites, h));
      for (size_t i = 0; i < ea.size(); ++i)
        CHECK(ea[i] == doctest::Approx(ef[i]).epsilon(1e-9));
    }
}

TEST_CASE("single-flavor R-matrix sector matches the fermion reference") {
  int sites = 3, n = 2;
  auto bw = build_basis(wang(1), sites, n);
  auto bf = build_basis(fermion_ref(), sites, n);
  REQUIRE(bw.size() == bf.size());
  auto ew =
      eigenvalues_symmetric(build_hamiltonian(wang(1), bw, sites, chain3()));
  auto ef = eigenvalues_symmetric(
      build_hamiltonian(fermion_ref(), bf, sites, chain3()));
  for (size_t i = 0; i < ew.size(); ++i)
    CHECK(ew[i] == doctest::Approx(ef[i]).epsilon(1e-9));
}

TEST_CASE("diagonal partition function of the uncapped-boson sector") {
  SymbolicZ z = symbolic_partition_function(boson_ref(), 2, 2);
  CHECK(z.m_vars == 2);
  REQUIRE(z.terms.size() == 3);
  CHECK(z.terms.at({2, 0}) == rat(1));
  CHECK(z.terms.at({1, 1}) == rat(1));
  CHECK(z.terms.at({0, 2}) == rat(1));
  EvaluationPoint pt{{rat(2), rat(3)}};
  CHECK(z.eval(pt) == rat(4 + 6 + 9));
  CHECK(z.evaluator()(pt) == rat(19));
}

TEST_CASE("flavored-sector partition function has one variable per "
          "site-flavor state") {
  SymbolicZ z = symbolic_partition_function(wang(2), 2, 2);
  CHECK(z.m_vars == 4);
  REQUIRE(z.terms.size() == 4);
  // variables: x1 = site1/flavor1, x2 = site1/flavor2, x3, x4 = site2
  CHECK(z.terms.at({1, 0, 1, 0}) == rat(1));
  CHECK(z.terms.at({1, 0, 0, 1}) == rat(1));
  CHECK(z.terms.at({0, 1, 1, 0}) == rat(1));
  CHECK(z.terms.at({0, 1, 0, 1}) == rat(1));
}

TEST_CASE("flavored-sector Z collapses to 4uv on degenerate on-site "
          "energies") {
  SymbolicZ z = symbolic_partition_function(wang(2), 2, 2);
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> energy(0.1, 2.5);
  for (int trial = 0; trial < 20; ++trial) {
    double beta = energy(rng);
    double ea = energy(rng), eb = energy(rng);
    double u = std::exp(-beta * ea), v = std::exp(-beta * eb);
    // exact evaluation at rational approximations of (u,u,v,v)
    ExactScalar uq = rat(static_cast<long>(u * 1e9), 1000000000);
    ExactScalar vq = rat(static_cast<long>(v * 1e9), 1000000000);
    EvaluationPoint pt{{uq, uq, vq, vq}};
    CHECK(z.eval(pt) == rat(4) * uq * vq);
    // floating route against the closed form
    double zf = 0;
    for (const auto& [expo, coeff] : z.terms) {
      double term = coeff.get_d();
      double xs[] = {u, u, v, v};
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < expo[i]; ++e) term *= xs[i];
      zf += term;
    }
    double closed = 4 * std::exp(-beta * (ea + eb));
    CHECK(std::abs(zf - closed) / closed <= 1e-12);
  }
}

TEST_CASE("statistics fit of the reference sectors") {
  FitStatisticsReport boson = fit_statistics(boson_ref(), 2, 2);
  CHECK(boson.schur_spec.coeffs == std::vector<ExactScalar>{rat(1), rat(0)});
  CHECK(boson.verdict.qs_ok);

  FitStatisticsReport fermion = fit_statistics(fermion_ref(), 2, 3);
  CHECK(fermion.schur_spec.coeffs == std::vector<ExactScalar>{rat(0), rat(1)});
  CHECK(fermion.verdict.qs_ok);

  FitStatisticsReport gentile = fit_statistics(gentile_cos(2), 3, 3);
  CHECK(gentile.monomial_spec.coeffs ==
        std::vector<ExactScalar>{rat(0), rat(1), rat(1)});
  CHECK(gentile.schur_spec.coeffs ==
        std::vector<ExactScalar>{rat(0), rat(1), rat(-1)});
  CHECK_FALSE(gentile.verdict.qm_ok);
  CHECK(gentile.verdict.sm_ok);
}

TEST_CASE("statistics fit of the flavored pair sector") {
  FitStatisticsReport r = fit_statistics(wang(2), 2, 4);
  CHECK(r.schur_spec.coeffs ==
        std::vector<ExactScalar>{rat(-1, 2), rat(3, 2)});
  CHECK(r.monomial_spec.coeffs == std::vector<ExactScalar>{rat(-1, 2), rat(1)});
  CHECK_FALSE(r.verdict.qm_ok);
  CHECK_FALSE(r.verdict.sm_ok);
  CHECK_FALSE(r.verdict.qs_ok);
  REQUIRE(r.verdict.violations.size() == 4);
  CHECK(r.verdict.violations[0].kind == ViolationKind::NEGATIVE_C);
  CHECK(r.verdict.violations[0].partition == Partition({2}));
  CHECK(r.verdict.violations[0].value == rat(-1, 2));
  CHECK(r.verdict.violations[1].kind == ViolationKind::NON_INTEGER_C);
  CHECK(r.verdict.violations[2].kind == ViolationKind::NON_INTEGER_C);
  CHECK(r.verdict.violations[2].value == rat(3, 2));
  CHECK(r.verdict.violations[3].kind == ViolationKind::FRACTIONAL_OMEGA);

  // the fitted vector is stable against enlarging the sector
  FitStatisticsReport r3 = fit_statistics(wang(2), 2, 6);
  CHECK(r3.schur_spec.coeffs == r.schur_spec.coeffs);
}

TEST_CASE("freeness of the chain models") {
  FreenessReport boson = freeness_check(boson_ref(), chain3(), 3, 2);
  CHECK(boson.free);
  CHECK(boson.many_body_count == 6);
  CHECK(boson.candidate_count == 6);
  CHECK(boson.max_deviation <= 1e-8);

  FreenessReport fermion = freeness_check(fermion_ref(), chain3(), 3, 2);
  CHECK(fermion.free);
  CHECK(fermion.many_body_count == 3);

  FreenessReport gentile = freeness_check(gentile_cos(2), chain3(), 3, 2);
  CHECK_FALSE(gentile.free);
  CHECK(gentile.heuristic);
  CHECK(gentile.many_body_count == 6);
  CHECK(gentile.candidate_count == 6);
  // the deformed spectrum sits well away from the free sums
  CHECK(gentile.max_deviation > 0.4);
}
