#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "genus/validation.hpp"

namespace genus {

// Enumeration bound for group and subgroup element sets.
inline constexpr long kMaxDeltaOrder = 512;

using DeltaElement = std::vector<long>;

// Finite abelian group of exponent dividing ell-1, written additively as
// Z/d_1 x ... x Z/d_r, together with a complex conjugation tau_bar of order
// two, the cyclotomic character omega (an exponent tuple) and generators of
// an index-2 subgroup Delta'.
//
// All ell-adic irreducible characters of such a group have degree 1 and are
// indexed by exponent tuples; the canonical ordering is lexicographic on
// those tuples.
struct DeltaGroup {
  long ell = 3;
  std::vector<long> divisors;  // d_1..d_r, each dividing ell-1
  DeltaElement tau_bar;
  std::vector<long> omega;  // exponent tuple of the cyclotomic character
  std::vector<DeltaElement> delta_prime_gens;

  bool operator==(const DeltaGroup&) const = default;

  long rank() const { return static_cast<long>(divisors.size()); }
  long order() const;

  DeltaElement reduce(DeltaElement x) const;
  DeltaElement add(const DeltaElement& a, const DeltaElement& b) const;
  DeltaElement neg(const DeltaElement& a) const;
  bool is_identity(const DeltaElement& a) const;
  long element_order(const DeltaElement& a) const;

  // Irreducible index <-> exponent tuple (lexicographic, leftmost digit most
  // significant).
  long index_of(const std::vector<long>& exps) const;
  std::vector<long> exps_of(long index) const;

  // Pairing numerator t in [0, M): the character with exponents `chi` takes
  // the value exp(2*pi*i*t/M) at `x`, where M = lcm(d_i).
  long pairing_numerator(const std::vector<long>& chi, const DeltaElement& x) const;
  bool char_trivial_at(const std::vector<long>& chi, const DeltaElement& x) const;
  // +1 or -1; tau_bar has order two so no other value can occur.
  int char_sign_at_tau(const std::vector<long>& chi) const;

  ValidationReport validate(long max_order = kMaxDeltaOrder) const;
};

// Subgroup of a DeltaGroup, given by generators; the element set is
// enumerated once at construction.
class DeltaSubgroup {
 public:
  DeltaSubgroup(const DeltaGroup& group, std::vector<DeltaElement> generators);

  const std::vector<DeltaElement>& generators() const { return gens_; }
  const std::vector<DeltaElement>& elements() const { return elements_; }
  long size() const { return static_cast<long>(elements_.size()); }
  bool contains(const DeltaElement& x) const;
  bool subset_of(const DeltaSubgroup& other) const;

 private:
  std::vector<long> divisors_;
  std::vector<DeltaElement> gens_;
  std::vector<DeltaElement> elements_;  // sorted
};

// Virtual ell-adic character of a DeltaGroup: an integer coefficient vector
// over the degree-1 irreducibles. Negative coefficients are allowed;
// genuineness is checked only where a formula requires it.
struct DeltaCharacter {
  DeltaGroup group;
  std::vector<long long> coeffs;

  bool operator==(const DeltaCharacter&) const = default;

  long long degree() const;
  bool genuine() const;  // all coefficients nonnegative
  bool is_zero() const;
};

DeltaCharacter zero_character(const DeltaGroup& g);
DeltaCharacter trivial_character(const DeltaGroup& g);
DeltaCharacter omega_character(const DeltaGroup& g);
DeltaCharacter irreducible_character(const DeltaGroup& g, long index);

DeltaCharacter operator+(const DeltaCharacter& a, const DeltaCharacter& b);
DeltaCharacter operator-(const DeltaCharacter& a, const DeltaCharacter& b);
DeltaCharacter operator-(const DeltaCharacter& a);
DeltaCharacter operator*(long long scalar, const DeltaCharacter& a);

// The d degree-1 irreducibles in canonical exponent-tuple order.
std::vector<DeltaCharacter> irreducibles(const DeltaGroup& g);

// Ind_H^Delta 1: sum of the degree-1 characters trivial on H.
DeltaCharacter induce_unit(const DeltaGroup& g, const DeltaSubgroup& h);

// Mirror involution, the linear extension of phi -> omega * phi^{-1}.
DeltaCharacter mirror(const DeltaCharacter& chi);

// (real, imaginary) components split by the sign of each irreducible at
// tau_bar.
std::pair<DeltaCharacter, DeltaCharacter> split_real_imag(const DeltaCharacter& chi);
DeltaCharacter real_part(const DeltaCharacter& chi);
DeltaCharacter imag_part(const DeltaCharacter& chi);

// Componentwise maximum (smallest character containing both).
DeltaCharacter join(const DeltaCharacter& a, const DeltaCharacter& b);

long long inner(const DeltaCharacter& a, const DeltaCharacter& b);

// Keeps exactly the coefficients of irreducibles trivial on the subgroup.
DeltaCharacter project_trivial_on(const DeltaCharacter& chi, const DeltaSubgroup& h);

// Multiplication by a degree-1 character: a permutation of coefficients.
DeltaCharacter twist(const DeltaCharacter& chi, const std::vector<long>& exps);
DeltaCharacter twist_omega(const DeltaCharacter& chi);

std::string exponent_tuple_key(const std::vector<long>& exps);

}  // namespace genus
