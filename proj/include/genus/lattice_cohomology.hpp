#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "genus/gee_chars.hpp"

namespace genus {

using BigInt = boost::multiprecision::cpp_int;

class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const BigInt& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const IntMat&) const = default;
  bool is_identity() const;
  bool is_zero() const;
  BigInt max_abs() const;

  IntMat operator*(const IntMat& other) const;
  IntMat operator+(const IntMat& other) const;
  IntMat operator-(const IntMat& other) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// u * a * v = d with u, v unimodular and d diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SmithForm {
  IntMat d, u, v;
  int rank = 0;
  std::vector<BigInt> diag;  // the nonzero diagonal entries
};

SmithForm smith_normal_form(IntMat a);

// Basis of the saturated kernel lattice of a (columns extend to a basis of
// Z^n, so coordinates in this basis of any integer kernel vector are
// integral).
IntMat kernel_basis(const IntMat& a);

// Exact rank over Q via fraction-free elimination.
int matrix_rank(IntMat a);

// Signals a cohomology group whose structure falls outside what the caller
// requested (e.g. F_ell-dimensions of a non-elementary group).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Free abelian group of finite rank with an automorphism generating a
// cyclic group of order ell^k. k record the acting group: sigma itself may
// act through a quotient (k = 0 means the identity matrix, treated by the
// cohomology routines as an order-ell group acting trivially).
struct GLattice {
  long ell = 3;
  int k = 1;
  IntMat sigma;

  int rank() const { return sigma.rows(); }
};

// Validates sigma^(ell^k) = 1 and, for k >= 1, sigma^(ell^(k-1)) != 1.
GLattice make_lattice(long ell, int k, IntMat sigma);

struct CohomologyResult {
  std::vector<long> h1_invariant_factors;
  std::vector<long> h2_invariant_factors;
  // Present exactly when every invariant factor equals ell.
  std::optional<int> h1_dim, h2_dim, herbrand_q;

  bool operator==(const CohomologyResult&) const = default;
};

struct Decomposition {
  long alpha = 0, beta = 0, gamma = 0;

  bool operator==(const Decomposition&) const = default;
};

// Block-diagonal model of Z_ell[G]^alpha + Z_ell[zeta_ell]^beta + Z_ell^gamma.
GLattice canonical_lattice(long ell, long alpha, long beta, long gamma);

GLattice direct_sum(const GLattice& a, const GLattice& b);

// Conjugates sigma by a seeded pseudo-random unimodular matrix built from
// bounded elementary operations. Cohomology invariants are unchanged.
GLattice disguise(const GLattice& lattice, std::uint64_t seed);

// H^1 = ker(nu)/im(sigma-1), H^2 = ker(sigma-1)/im(nu) with
// nu = sum of sigma^i over the acting group, computed exactly over Z.
CohomologyResult cohomology(const GLattice& lattice);

int fixed_rank(const GLattice& lattice);

// Ranks of ker(sigma^(ell^j) - 1) for j = 0..m; nondecreasing, last = rank.
// The one-argument form uses m = lattice.k.
std::vector<long long> fixed_dims_chain(const GLattice& lattice, int m);
std::vector<long long> fixed_dims_chain(const GLattice& lattice);

// Requires the order-ell regime (k <= 1).
Decomposition recover_decomposition(const GLattice& lattice);
GCharacter character_of(const GLattice& lattice);
GCharacter divisible_character_of(const GLattice& lattice);

}  // namespace genus
