#pragma once

// Small explicit tensor-space experiments: Schur-Weyl dimension tables,
// permutation and single-particle unitary actions on N-fold tensor products,
// exact span-membership tests, observable expectations, and partition
// functions of hand-picked subspaces.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exstat/qsqrt2.hpp"
#include "exstat/symfunc.hpp"

namespace exstat {

// A vector in (C^m)^{tensor n} with exact Q(sqrt2) amplitudes, sparse over
// index tuples (i_1..i_n), entries 1-based in 1..m.
struct TensorVector {
  int m = 0;
  int n = 0;
  std::map<std::vector<int>, Q2Scalar> amps;

  void set(const std::vector<int>& tuple, const Q2Scalar& value);
  Q2Scalar get(const std::vector<int>& tuple) const;
  TensorVector& add(const std::vector<int>& tuple, const Q2Scalar& value);
  bool is_zero() const { return amps.empty(); }
  std::string str() const;

  friend TensorVector operator+(const TensorVector& x, const TensorVector& y);
  friend TensorVector operator-(const TensorVector& x, const TensorVector& y);
  TensorVector scaled(const Q2Scalar& c) const;
  bool operator==(const TensorVector& o) const {
    return m == o.m && n == o.n && amps == o.amps;
  }
};

// A basis ket |i1 i2 ... in>.
TensorVector basis_ket(int m, const std::vector<int>& tuple);

// A list of vectors meant to be linearly independent.
using SubspaceBasis = std::vector<TensorVector>;

// Exact rank over Q(sqrt2) of the amplitude matrix.
int exact_rank(const SubspaceBasis& basis);

// One row per lambda |- n with at most m rows: (lambda, f_lambda = dim of
// the S_n irrep, dim of the U(m) irrep, product); the products sum to m^n.
struct DecompositionRow {
  Partition lambda;
  long f_dim = 0;
  long u_dim = 0;
  long product = 0;
};
std::vector<DecompositionRow> decomposition_table(int n, int m);

// sigma as image list: sigma[k-1] is where factor k goes (1-based).
struct Permutation {
  std::vector<int> image;
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  int apply(int k) const { return image.at(k - 1); }
  Permutation after(const Permutation& first) const;  // this o first
};

// Factor permutation: the factor in slot k of the result comes from slot
// sigma^{-1}(k), so P_{(12)} |1 2 3> = |2 1 3>.
TensorVector permutation_apply(const Permutation& sigma,
                               const TensorVector& v);

// Whether v lies in span(basis): compares exact ranks with and without v.
bool span_membership(const SubspaceBasis& basis, const TensorVector& v);

// <v| P |v> for the ray projector P = |w><w| / <w|w>, all amplitudes real.
Q2Scalar expectation(const TensorVector& w_projector, const TensorVector& v);
// <v| O |v> for a general linear operator given by its action.
Q2Scalar expectation(
    const std::function<TensorVector(const TensorVector&)>& op,
    const TensorVector& v);
Q2Scalar inner(const TensorVector& x, const TensorVector& y);

// (U tensor ... tensor U) v for an exact m x m matrix U[row][col].
TensorVector single_particle_transform(
    const std::vector<std::vector<Q2Scalar>>& u, const TensorVector& v);

struct NotEnergyEigenbasis : std::runtime_error {
  using std::runtime_error::runtime_error;  // message: NOT_ENERGY_EIGENBASIS
};

// Z = sum over basis vectors of prod_k x_{i_k}: each basis vector must be
// supported on tuples of one index multiset (equal occupation of every
// single-particle level, hence one energy for every diagonal spectrum);
// otherwise NOT_ENERGY_EIGENBASIS.  When the resulting polynomial is
// symmetric it is also returned in the monomial and Schur bases.
struct SubspaceZ {
  int m_vars = 0;
  int degree = 0;
  std::map<std::vector<int>, ExactScalar> raw;  // sorted exponent vectors
  bool symmetric = false;
  std::optional<SymPoly> monomial;
  std::optional<SymPoly> schur;
};
SubspaceZ subspace_partition_function(const SubspaceBasis& basis, int m);

// ---------------------------------------------------------------------------
// The worked three-particle / two-particle example vectors.

// The 20 vectors spanning one copy of the mixed-symmetry (2,1) sector of
// (C^4)^{x3}: twelve 2(|xxy> - |yxx>) for ordered pairs x != y, then eight
// |xyz> + |yxz> - |zyx> - |zxy| combinations.  Stored de-duplicated (the
// repeated-ket presentation collapses to amplitude 2).
SubspaceBasis mixed_symmetry_examples();

// Psi_13 = |123> + |213> - |321> - |312>.
TensorVector psi13();

// The two-vector spanning set of the S3-stable, U(4)-unstable plane:
// phi_1 = |213> - |312> - |132> + |123>, phi_2 = |213> - |312> - |321> + |231>.
SubspaceBasis phi_plane();

// Spin-half pair example in C^4 = {a up, a down, b up, b down} -> {1,2,3,4}:
// four antisymmetric-like two-particle states.
SubspaceBasis spin_pair_states();

// Mixing unitary on levels 2 and 3 (|a down>, |b up>), sqrt(2)/2 blocks.
std::vector<std::vector<Q2Scalar>> spin_mixing_unitary();

// Generic 4-level unitary mixing levels pairwise; exact, used as the U(4)
// non-invariance witness.
std::vector<std::vector<Q2Scalar>> generic_u4();

// 2-level Hadamard-type mix, entries +-sqrt(2)/2.
std::vector<std::vector<Q2Scalar>> hadamard2();

// Basis of the full (2,1)-isotypic sector of (C^4)^{x3} (dimension 40),
// generated by the two standard Young symmetrizers applied to all tuples.
SubspaceBasis isotypic_21_sector_m4();

// Symmetric basis of (C^4)^{x3} minus the four |iii> states: the capped
// occupancy model subspace (dimension 16).
SubspaceBasis capped_symmetric_basis_m4();

}  // namespace exstat
