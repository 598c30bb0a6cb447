#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "exstat/symfunc.hpp"

using namespace exstat;

namespace {

void check_matrix(const KostkaMatrix& k,
                  const std::vector<std::vector<long>>& expected) {
  REQUIRE(k.size() == static_cast<int>(expected.size()));
  for (int j = 1; j <= k.size(); ++j)
    for (int i = 1; i <= k.size(); ++i)
      CHECK(k.at(j, i) == expected[j - 1][i - 1]);
}

void check_inverse(int n, const std::vector<std::vector<long>>& expected) {
  auto inv = inverse_kostka_matrix(n);
  REQUIRE(inv.size() == expected.size());
  for (size_t j = 0; j < inv.size(); ++j)
    for (size_t i = 0; i < inv.size(); ++i)
      CHECK(inv[j][i] == rat(expected[j][i]));
}

}  // namespace

TEST_CASE("kostka matrices for weights 3, 4, 5") {
  check_matrix(kostka_matrix(3), {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}});
  check_matrix(kostka_matrix(4), {{1, 0, 0, 0, 0},
                                  {1, 1, 0, 0, 0},
                                  {1, 1, 1, 0, 0},
                                  {1, 2, 1, 1, 0},
                                  {1, 3, 2, 3, 1}});
  check_matrix(kostka_matrix(5), {{1, 0, 0, 0, 0, 0, 0},
                                  {1, 1, 0, 0, 0, 0, 0},
                                  {1, 1, 1, 0, 0, 0, 0},
                                  {1, 2, 1, 1, 0, 0, 0},
                                  {1, 2, 2, 1, 1, 0, 0},
                                  {1, 3, 3, 3, 2, 1, 0},
                                  {1, 4, 5, 6, 5, 4, 1}});
}

TEST_CASE("kostka structure: unitriangular, first column all ones") {
  for (int n = 2; n <= 8; ++n) {
    KostkaMatrix k = kostka_matrix(n);
    for (int j = 1; j <= k.size(); ++j) {
      CHECK(k.at(j, j) == 1);
      CHECK(k.at(j, 1) == 1);
      for (int i = j + 1; i <= k.size(); ++i) CHECK(k.at(j, i) == 0);
    }
  }
}

TEST_CASE("kostka numbers respect dominance support") {
  // K(shape, content) > 0 exactly when content is dominated by shape
  for (int n = 2; n <= 7; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int i = 1; i <= t.count(); ++i)
      for (int j = 1; j <= t.count(); ++j) {
        long k = kostka_number(t.at(i), t.at(j));
        bool dominated = dominance_leq(t.at(j), t.at(i));
        CHECK((k > 0) == dominated);
      }
  }
  CHECK_THROWS_AS(kostka_number(Partition({2, 1}), Partition({2, 2})),
                  std::invalid_argument);
}

TEST_CASE("exact inverse kostka matrices") {
  check_inverse(3, {{1, 0, 0}, {-1, 1, 0}, {1, -2, 1}});
  check_inverse(4, {{1, 0, 0, 0, 0},
                    {-1, 1, 0, 0, 0},
                    {0, -1, 1, 0, 0},
                    {1, -1, -1, 1, 0},
                    {-1, 2, 1, -3, 1}});
  check_inverse(5, {{1, 0, 0, 0, 0, 0, 0},
                    {-1, 1, 0, 0, 0, 0, 0},
                    {0, -1, 1, 0, 0, 0, 0},
                    {1, -1, -1, 1, 0, 0, 0},
                    {0, 1, -1, -1, 1, 0, 0},
                    {-1, 1, 2, -1, -2, 1, 0},
                    {1, -2, -2, 3, 3, -4, 1}});
}

TEST_CASE("inverse times kostka is the identity") {
  for (int n = 2; n <= 8; ++n) {
    KostkaMatrix k = kostka_matrix(n);
    auto inv = inverse_kostka_matrix(n);
    int sz = k.size();
    for (int r = 0; r < sz; ++r)
      for (int c = 0; c < sz; ++c) {
        ExactScalar sum(0);
        for (int t = 0; t < sz; ++t) sum += inv[r][t] * rat(k.at(t + 1, c + 1));
        CHECK(sum == rat(r == c ? 1 : 0));
      }
  }
}

TEST_CASE("disk cache round-trips and survives corruption") {
  KostkaMatrix fresh = kostka_matrix(6);
  std::string path = cache_directory() + "/kostka_N6.csv";
  {
    std::ifstream f(path);
    CHECK(f.good());
  }
  KostkaMatrix again = kostka_matrix(6);
  check_matrix(again, fresh.entries);
  // corrupt the cache file; the loader must reject it and recompute
  {
    std::ofstream f(path, std::ios::trunc);
    f << "9,9,9\nnot,a,matrix\n";
  }
  KostkaMatrix recovered = kostka_matrix(6);
  check_matrix(recovered, fresh.entries);
}

TEST_CASE("schur expands in monomials with kostka coefficients") {
  SymPoly s21 = schur_in_monomials(Partition({2, 1}));
  CHECK(s21.basis == Basis::monomial);
  CHECK(s21.get(Partition({2, 1})) == rat(1));
  CHECK(s21.get(Partition({1, 1, 1})) == rat(2));
  CHECK(s21.get(Partition({3})) == rat(0));
  CHECK(to_string(s21) == "m_(2,1) + 2*m_(1,1,1)");

  SymPoly s22 = schur_in_monomials(Partition({2, 2}));
  CHECK(s22.get(Partition({2, 2})) == rat(1));
  CHECK(s22.get(Partition({2, 1, 1})) == rat(1));
  CHECK(s22.get(Partition({1, 1, 1, 1})) == rat(2));
}

TEST_CASE("character tables for S_3, S_4, S_5") {
  auto check_table = [](int n, const std::vector<std::vector<long>>& table) {
    PartitionTable t = enumerate_partitions(n);
    for (int j = 1; j <= t.count(); ++j)     // class mu
      for (int i = 1; i <= t.count(); ++i)   // irrep lambda
        CHECK(mn_character(t.at(i), t.at(j)) == table[j - 1][i - 1]);
  };
  check_table(3, {{1, -1, 1}, {1, 0, -1}, {1, 2, 1}});
  check_table(4, {{1, -1, 0, 1, -1},
                  {1, 0, -1, 0, 1},
                  {1, -1, 2, -1, 1},
                  {1, 1, 0, -1, -1},
                  {1, 3, 2, 3, 1}});
  check_table(5, {{1, -1, 0, 1, 0, -1, 1},
                  {1, 0, -1, 0, 1, 0, -1},
                  {1, -1, 1, 0, -1, 1, -1},
                  {1, 1, -1, 0, -1, 1, 1},
                  {1, 0, 1, -2, 1, 0, 1},
                  {1, 2, 1, 0, -1, -2, -1},
                  {1, 4, 5, 6, 5, 4, 1}});
}

TEST_CASE("character orthogonality over classes") {
  for (int n = 2; n <= 6; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int a = 1; a <= t.count(); ++a)
      for (int b = a; b <= t.count(); ++b) {
        ExactScalar sum(0);
        for (int j = 1; j <= t.count(); ++j)
          sum += rat(mn_character(t.at(a), t.at(j)) *
                     mn_character(t.at(b), t.at(j))) /
                 z_mu(t.at(j));
        CHECK(sum == rat(a == b ? 1 : 0));
      }
  }
}

TEST_CASE("centralizer orders") {
  CHECK(z_mu(Partition({3})) == rat(3));
  CHECK(z_mu(Partition({2, 1})) == rat(2));
  CHECK(z_mu(Partition({1, 1, 1})) == rat(6));
  CHECK(z_mu(Partition({2, 2})) == rat(8));
  CHECK(z_mu(Partition({1, 1, 1, 1})) == rat(24));
}

TEST_CASE("character route to schur agrees with tableau route") {
  for (int n = 1; n <= 5; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int i = 1; i <= t.count(); ++i) {
      SymPoly a = schur_in_monomials(t.at(i));
      SymPoly b = schur_via_characters(t.at(i), n + 1);
      CHECK(a == b);
    }
  }
}

TEST_CASE("basis conversion round-trips") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int n = 2; n <= 6; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int trial = 0; trial < 5; ++trial) {
      SymPoly p;
      p.degree = n;
      p.basis = trial % 2 ? Basis::schur : Basis::monomial;
      for (int j = 1; j <= t.count(); ++j)
        p.add(t.at(j), rat(num(rng), 1 + trial));
      Basis other = p.basis == Basis::schur ? Basis::monomial : Basis::schur;
      CHECK(convert_basis(convert_basis(p, other), p.basis) == p);
    }
  }
}

TEST_CASE("exact evaluation") {
  SymPoly m21;
  m21.degree = 3;
  m21.basis = Basis::monomial;
  m21.add(Partition({2, 1}), rat(1));
  EvaluationPoint pt{{rat(1), rat(2), rat(3)}};
  CHECK(evaluate(m21, pt) == rat(48));

  SymPoly s2;
  s2.degree = 2;
  s2.basis = Basis::schur;
  s2.add(Partition({2}), rat(1));
  EvaluationPoint uvvv{{rat(2), rat(2), rat(3), rat(3)}};
  // s_(2) on (u,u,v,v) = 3u^2 + 4uv + 3v^2
  CHECK(evaluate(s2, uvvv) == rat(63));

  // schur at all-ones counts semistandard tableaux
  for (int n = 1; n <= 5; ++n) {
    PartitionTable t = enumerate_partitions(n);
    for (int i = 1; i <= t.count(); ++i)
      for (int m = 1; m <= 5; ++m) {
        SymPoly s;
        s.degree = n;
        s.basis = Basis::schur;
        s.add(t.at(i), rat(1));
        EvaluationPoint ones{std::vector<ExactScalar>(m, rat(1))};
        CHECK(evaluate(s, ones) == rat(um_irrep_dim(t.at(i), m)));
      }
  }

  // floating route agrees with the exact route
  std::vector<double> xs = {0.5, 1.25, -2.0};
  EvaluationPoint xpt{{rat(1, 2), rat(5, 4), rat(-2)}};
  CHECK(evaluate(m21, xs) ==
        doctest::Approx(evaluate(m21, xpt).get_d()).epsilon(1e-12));
}

TEST_CASE("dense round-trip") {
  PartitionTable t = enumerate_partitions(4);
  std::vector<ExactScalar> coeffs = {rat(1), rat(0),     rat(-2),
                                     rat(7), rat(3, 2)};
  SymPoly p = SymPoly::from_dense(4, Basis::schur, coeffs);
  CHECK(p.dense(t) == coeffs);
}

TEST_CASE("rendering") {
  SymPoly zero;
  zero.degree = 2;
  zero.basis = Basis::schur;
  CHECK(to_string(zero) == "0");

  SymPoly p;
  p.degree = 2;
  p.basis = Basis::monomial;
  p.add(Partition({2}), rat(-1, 2));
  p.add(Partition({1, 1}), rat(1));
  CHECK(to_string(p) == "-1/2*m_(2) + m_(1,1)");

  SymPoly q;
  q.degree = 3;
  q.basis = Basis::schur;
  q.add(Partition({2, 1}), rat(1));
  q.add(Partition({1, 1, 1}), rat(-1));
  CHECK(to_string(q) == "s_(2,1) - s_(1,1,1)");
}

TEST_CASE("black-box fitting recovers exact coefficients") {
  SymPoly target;
  target.degree = 2;
  target.basis = Basis::schur;
  target.add(Partition({2}), rat(2));
  target.add(Partition({1, 1}), rat(-1));
  auto evaluator = [&](const EvaluationPoint& pt) {
    return evaluate(target, pt);
  };
  FitResult fit = fit_coefficients(evaluator, 2, 3, Locus{}, Basis::schur);
  CHECK(fit.full_rank);
  CHECK(fit.residual_zero);
  CHECK(fit.coeffs == std::vector<ExactScalar>{rat(2), rat(-1)});
  CHECK(fit.poly == target);
}

TEST_CASE("fitting on a degeneracy locus reproduces the flavored pair") {
  // target 4uv with variables grouped (x1=x2=u, x3=x4=v)
  Locus locus{{0, 0, 1, 1}};
  auto evaluator = [](const EvaluationPoint& pt) -> ExactScalar {
    return rat(4) * pt.values[0] * pt.values[2];
  };
  FitResult fit = fit_coefficients(evaluator, 2, 4, locus, Basis::schur);
  CHECK(fit.residual_zero);
  CHECK(fit.coeffs == std::vector<ExactScalar>{rat(-1, 2), rat(3, 2)});
}

TEST_CASE("fitting failure modes") {
  // one group only: s_(2) and s_(1,1) are both multiples of u^2
  Locus collapsed{{0, 0}};
  auto quadratic = [](const EvaluationPoint& pt) -> ExactScalar {
    return rat(4) * pt.values[0] * pt.values[0];
  };
  try {
    fit_coefficients(quadratic, 2, 2, collapsed, Basis::schur);
    FAIL("expected FitError");
  } catch (const FitError& e) {
    CHECK(e.kind == FitFailure::UNDERDETERMINED);
  }

  // x1^2 alone is not a symmetric polynomial
  auto lopsided = [](const EvaluationPoint& pt) -> ExactScalar {
    return pt.values[0] * pt.values[0];
  };
  try {
    fit_coefficients(lopsided, 2, 2, Locus{}, Basis::monomial);
    FAIL("expected FitError");
  } catch (const FitError& e) {
    CHECK(e.kind == FitFailure::INCONSISTENT);
  }
}
