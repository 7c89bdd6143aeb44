#pragma once

#include <vector>

#include "genus/delta_chars.hpp"

namespace genus {

// Cyclic ell-group G of order ell^m.
struct CyclicGroupSpec {
  long ell = 3;
  int m = 0;

  bool operator==(const CyclicGroupSpec&) const = default;
};

long long ipow(long base, int exp);

// Rational ell-adic character of a cyclic ell-group: integer coefficients
// over the basis psi_0..psi_m, where psi_0 = 1_G and
// deg psi_i = (ell-1) * ell^(i-1) for i >= 1.
struct GCharacter {
  CyclicGroupSpec spec;
  std::vector<long long> coeffs;  // size m+1

  bool operator==(const GCharacter&) const = default;

  long long degree() const;
  bool genuine() const;
};

long long psi_degree(const CyclicGroupSpec& spec, int i);

GCharacter zero_g(const CyclicGroupSpec& spec);
GCharacter unit_g(const CyclicGroupSpec& spec);
GCharacter reg(const CyclicGroupSpec& spec);
GCharacter aug(const CyclicGroupSpec& spec);

GCharacter operator+(const GCharacter& a, const GCharacter& b);
GCharacter operator-(const GCharacter& a, const GCharacter& b);
GCharacter operator*(long long scalar, const GCharacter& a);

// Ind_H^G 1 for the subgroup H of order ell^j.
GCharacter induce_unit_from(const CyclicGroupSpec& spec, int j);

// Ind_H^G Aug_H = Reg_G - Ind_H^G 1; zero exactly when j = 0.
GCharacter induce_aug_from(const CyclicGroupSpec& spec, int j);

// Induction along Z/ell^k <= Z/ell^m applied to a whole character.
GCharacter induce_to(const GCharacter& chi, int m);

struct SolveResult {
  GCharacter character;
  bool genuine = true;
};

// Recovers (n_0..n_m) from the chain of fixed-point dimensions
// fixed_dims[k] = sum_{i<=k} n_i * deg psi_i, solved triangularly. Throws
// std::invalid_argument when an increment is not divisible by deg psi_k.
SolveResult solve_multiplicities(const CyclicGroupSpec& spec,
                                 const std::vector<long long>& fixed_dims);

// Virtual character of Delta x G: coefficient matrix indexed by
// (Delta-irreducible, psi_i), row-major.
struct DGCharacter {
  DeltaGroup delta_group;
  CyclicGroupSpec spec;
  std::vector<long long> coeffs;  // |Delta| rows, m+1 columns

  bool operator==(const DGCharacter&) const = default;

  long long& at(long row, int i);
  long long at(long row, int i) const;
  long long degree() const;
  bool genuine() const;
};

DGCharacter zero_dg(const DeltaGroup& dg, const CyclicGroupSpec& spec);
DGCharacter dg_combine(const DeltaCharacter& dchar, const GCharacter& gchar);
DGCharacter operator+(const DGCharacter& a, const DGCharacter& b);
DGCharacter operator-(const DGCharacter& a, const DGCharacter& b);

// Partial degree maps: against deg psi_i (rows), resp. Delta-degrees
// (columns; every Delta-irreducible has degree 1).
DeltaCharacter dg_degree_g(const DGCharacter& x);
GCharacter dg_degree_delta(const DGCharacter& x);

GCharacter dg_row(const DGCharacter& x, long row);

}  // namespace genus
