#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genus/delta_chars.hpp"
#include "genus/gee_chars.hpp"
#include "genus/validation.hpp"

namespace genus {

// A hypothesis of the theory is violated (mu != 0, unresolved delta flag).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ramification/decomposition data of one place of the real base field.
// For tame places (above_ell = false) decomposition equals inertia, so the
// ramification index in the upper tower is ell^g_dec_exp.
struct PlaceDatum {
  std::string name;
  bool above_ell = false;
  std::vector<DeltaElement> dec_gens;  // generators of the decomposition subgroup in Delta
  int g_dec_exp = 0;                   // decomposition subgroup of order ell^j in G

  bool operator==(const PlaceDatum&) const = default;
};

struct ExtensionDescriptor {
  DeltaGroup delta_group;
  CyclicGroupSpec g;
  DeltaCharacter lambda_K;
  std::optional<DeltaCharacter> lambda_tilde_K;
  std::optional<int> delta_flag;
  bool mu_zero = true;
  std::vector<PlaceDatum> places;
};

DeltaSubgroup dec_subgroup(const ExtensionDescriptor& d, const PlaceDatum& p);
DeltaSubgroup delta_prime(const ExtensionDescriptor& d);

inline bool place_ramified(const PlaceDatum& p) { return p.g_dec_exp >= 1; }
// Split by complex conjugation: the decomposition subgroup lies in Delta'.
bool place_split(const ExtensionDescriptor& d, const PlaceDatum& p);

// Checks all descriptor invariants and resolves the delta flag where the
// ramification data forces it (a tame ramified place forces delta = 1, no
// ramification forces delta = 0).
ValidationReport validate(const ExtensionDescriptor& d);

std::optional<int> resolved_delta(const ExtensionDescriptor& d);

DeltaCharacter chi_of_place(const ExtensionDescriptor& d, const PlaceDatum& p);
DeltaCharacter chi_of_place(const ExtensionDescriptor& d, const std::string& name);
DeltaCharacter chi_sum(const ExtensionDescriptor& d,
                       const std::function<bool(const PlaceDatum&)>& keep);
// Sum over every place above ell.
DeltaCharacter chi_ell(const ExtensionDescriptor& d);
// Sum over a named set; unknown names raise std::invalid_argument.
DeltaCharacter chi_named(const ExtensionDescriptor& d, const std::vector<std::string>& names);

// w = <omega, Ind_{Delta'}^Delta 1>, always 0 or 1.
int omega_weight(const ExtensionDescriptor& d);
// <chi, Ind_{Delta'}^Delta 1>: the integer invariant of the middle field.
long long base_integer(const ExtensionDescriptor& d, const DeltaCharacter& chi);

struct TranslateResult {
  DeltaCharacter lambda_ell_classes;   // lambda - chi_ell^(-)
  DeltaCharacter lambda_infinitesimal; // lambda* + (chi_ell^(+) - 1)*
  std::vector<std::string> warnings;
};
TranslateResult translate_lambda(const ExtensionDescriptor& d);

struct StTranslateResult {
  DeltaCharacter plain;            // lambda^(-) + omega[(chi_S^(+) - 1) v 0]
  DeltaCharacter ell_decomposed;   // (lambda - chi_ell)^(-) + omega[(chi_S^(+) - 1) v 0]
  DeltaCharacter ell_ramified;     // lambda*^(+) + omega chi_S^(-)
};
// S and T must be disjoint and must not name places above ell.
StTranslateResult translate_st(const ExtensionDescriptor& d, const std::vector<std::string>& s,
                               const std::vector<std::string>& t);

// Dimensional Herbrand quotients for the order-ell regime (g.m must be 1);
// the sums run over tame ramified places.
DeltaCharacter herbrand_class(const ExtensionDescriptor& d);   // sum chi_p^(-) - omega
DeltaCharacter herbrand_galois(const ExtensionDescriptor& d);  // omega - sum chi_p^(-)

enum class DualityCase { tame, wild_exceptional, none };
const char* duality_case_name(DualityCase c);

struct CohomologyReport {
  DeltaCharacter h1_cl, h2_cl;  // class-group side
  DeltaCharacter h1_c, h2_c;    // Galois-group side
  DeltaCharacter q_cl, q_c;
  int delta = 0;
  int delta_prime = 1;
  DualityCase duality_case = DualityCase::none;
  // Evaluation of sum_{p|ell,ram} chi_p^(-) + (1 - delta - delta')*omega == 0,
  // equivalent to h^i(galois) = h^(i+1)(class) componentwise.
  bool duality_identity = false;
  // The wild-exceptional classification needs local norm data the
  // descriptor does not carry.
  bool duality_conditional = false;
  std::vector<std::string> warnings;
};
CohomologyReport cohomology_report(const ExtensionDescriptor& d);

struct TransferResult {
  DGCharacter chi;              // Delta x G character of the upper field
  DeltaCharacter lambda_upper;  // its Delta-degree
  std::vector<std::string> warnings;
};

// chi_L^(-) = (lambda_K - omega) Reg_G + sum_{tame p} chi_p^(-) rho_p + omega 1_G,
// with rho_p the induced augmentation character of the decomposition
// subgroup. Uses the imaginary component chi_p^(-); the bare pairing is
// reported by project_g_character for comparison.
TransferResult transfer_character(const ExtensionDescriptor& d);

// Same engine on the ell-decomposed invariants: the rho-sum ranges over all
// places, and lambda_tilde_K is derived from lambda_K when absent.
TransferResult transfer_character_ell_decomposed(const ExtensionDescriptor& d);

// lambda_tilde = lambda - sum_{p|ell} chi_p^(-).
DeltaCharacter derive_lambda_tilde(const ExtensionDescriptor& d);

enum class TowerSide { base, upper };
// Converts between full and ell-decomposed Delta x G characters: subtracts
// sum_{p|ell} chi_p^(-) * Ind_{G_p}^G 1 (upper side) resp. * 1_G (base side).
DGCharacter remove_ell_class_part(const DGCharacter& x, const ExtensionDescriptor& d,
                                  TowerSide side);
DGCharacter add_ell_class_part(const DGCharacter& x, const ExtensionDescriptor& d,
                               TowerSide side);

struct PairingCheck {
  std::string place;
  long long full = 0;       // <chi_p, Ind_{Delta'} 1>
  long long imaginary = 0;  // <chi_p^(-), Ind_{Delta'} 1>
};

struct ProjectionResult {
  GCharacter g_character;
  int omega_weight = 0;
  std::vector<PairingCheck> place_pairings;
  std::vector<std::string> notes;  // {0,1}-claim violations are reported, not assumed
};

// G-character of the middle field: sums the rows of x over the
// Delta-irreducibles trivial on Delta'.
ProjectionResult project_g_character(const DGCharacter& x, const ExtensionDescriptor& d);

// lambda_L = w + (lambda_K - w) ell^m + sum over places of the upper real
// field that are tame, split and ramified of (e_P - 1); a descriptor place
// with exponent j contributes ell^(m-j) places with e_P = ell^j.
long long kida_lambda(const ExtensionDescriptor& d);
// Identical value for the infinitesimal invariants of the real subfields.
long long wingberg_lambda(const ExtensionDescriptor& d);
// Same arithmetic on lambda_tilde with d_P = e_P.
long long kuzmin_lambda(const ExtensionDescriptor& d);

}  // namespace genus
