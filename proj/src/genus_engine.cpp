#include "genus/genus_engine.hpp"

#include <algorithm>
#include <set>

namespace genus {

namespace {

void require_order_ell(const ExtensionDescriptor& d) {
  if (d.g.m != 1)
    throw std::invalid_argument(
        "operation is defined in the order-ell regime (g.m = 1); decompose the tower first");
}

void require_mu_zero(const ExtensionDescriptor& d) {
  if (!d.mu_zero) throw HypothesisError("transfer formulas require the mu = 0 hypothesis");
}

bool any_place(const ExtensionDescriptor& d, const std::function<bool(const PlaceDatum&)>& pred) {
  return std::any_of(d.places.begin(), d.places.end(), pred);
}

}  // namespace

DeltaSubgroup dec_subgroup(const ExtensionDescriptor& d, const PlaceDatum& p) {
  return DeltaSubgroup(d.delta_group, p.dec_gens);
}

DeltaSubgroup delta_prime(const ExtensionDescriptor& d) {
  return DeltaSubgroup(d.delta_group, d.delta_group.delta_prime_gens);
}

bool place_split(const ExtensionDescriptor& d, const PlaceDatum& p) {
  return dec_subgroup(d, p).subset_of(delta_prime(d));
}

std::optional<int> resolved_delta(const ExtensionDescriptor& d) {
  const bool tame_ramified =
      any_place(d, [](const PlaceDatum& p) { return !p.above_ell && place_ramified(p); });
  const bool any_ramified = any_place(d, place_ramified);
  if (tame_ramified) return 1;
  if (!any_ramified) return 0;
  return d.delta_flag;  // only wild ramification: the flag is the caller's data
}

ValidationReport validate(const ExtensionDescriptor& d) {
  ValidationReport report = d.delta_group.validate();
  const bool group_ok = report.ok();  // character/place checks need a sound group

  if (d.g.ell != d.delta_group.ell)
    report.error("G_ELL_MATCH", "cyclic group and Delta use different ell");
  if (d.g.m < 0) report.error("G_M_RANGE", "tower exponent m must be nonnegative");

  if (!(d.lambda_K.group == d.delta_group)) {
    report.error("LAMBDA_GROUP", "lambda_K is not a character of the descriptor's Delta");
  } else if (group_ok) {
    if (!real_part(d.lambda_K).is_zero())
      report.error("LAMBDA_IMAGINARY", "lambda_K must be supported on imaginary irreducibles");
    if (!d.lambda_K.genuine())
      report.warn("LAMBDA_NEGATIVE", "lambda_K has negative coefficients");
  }
  if (d.lambda_tilde_K) {
    if (!(d.lambda_tilde_K->group == d.delta_group)) {
      report.error("LAMBDA_TILDE_GROUP",
                   "lambda_tilde_K is not a character of the descriptor's Delta");
    } else if (group_ok) {
      if (!real_part(*d.lambda_tilde_K).is_zero())
        report.error("LAMBDA_TILDE_IMAGINARY",
                     "lambda_tilde_K must be supported on imaginary irreducibles");
      if (!d.lambda_tilde_K->genuine())
        report.warn("LAMBDA_TILDE_NEGATIVE", "lambda_tilde_K has negative coefficients");
    }
  }

  std::set<std::string> names;
  for (const auto& p : d.places) {
    if (p.name.empty()) report.error("PLACE_NAME_EMPTY", "places must carry nonempty names");
    if (!names.insert(p.name).second)
      report.error("PLACE_NAME_DUP", "duplicate place name: " + p.name);
    if (p.g_dec_exp < 0 || p.g_dec_exp > d.g.m)
      report.error("PLACE_J_RANGE", "place " + p.name + ": decomposition exponent " +
                                        std::to_string(p.g_dec_exp) + " outside 0.." +
                                        std::to_string(d.g.m));
    if (group_ok) {
      try {
        dec_subgroup(d, p);
      } catch (const std::invalid_argument& e) {
        report.error("PLACE_SUBGROUP", "place " + p.name + ": " + e.what());
      }
    }
  }

  if (d.delta_flag && *d.delta_flag != 0 && *d.delta_flag != 1)
    report.error("DELTA_RANGE", "delta_flag must be 0 or 1");

  const bool tame_ramified =
      any_place(d, [](const PlaceDatum& p) { return !p.above_ell && place_ramified(p); });
  const bool any_ramified = any_place(d, place_ramified);
  if (tame_ramified && d.delta_flag && *d.delta_flag == 0)
    report.error("DELTA_NORM",
                 "a tame ramified place is present, so the Tate-module generator cannot be a "
                 "norm: delta_flag must be 1");
  if (!any_ramified && d.delta_flag && *d.delta_flag == 1)
    report.error("DELTA_NORM", "without ramified places delta_flag must be 0");
  report.resolved_delta = resolved_delta(d);

  if (!d.mu_zero) report.warn("MU_FLAG", "mu_zero is false; transfer operations will refuse");
  return report;
}

DeltaCharacter chi_of_place(const ExtensionDescriptor& d, const PlaceDatum& p) {
  return induce_unit(d.delta_group, dec_subgroup(d, p));
}

DeltaCharacter chi_of_place(const ExtensionDescriptor& d, const std::string& name) {
  for (const auto& p : d.places)
    if (p.name == name) return chi_of_place(d, p);
  throw std::invalid_argument("unknown place name: " + name);
}

DeltaCharacter chi_sum(const ExtensionDescriptor& d,
                       const std::function<bool(const PlaceDatum&)>& keep) {
  DeltaCharacter sum = zero_character(d.delta_group);
  for (const auto& p : d.places)
    if (keep(p)) sum = sum + chi_of_place(d, p);
  return sum;
}

DeltaCharacter chi_ell(const ExtensionDescriptor& d) {
  return chi_sum(d, [](const PlaceDatum& p) { return p.above_ell; });
}

DeltaCharacter chi_named(const ExtensionDescriptor& d, const std::vector<std::string>& names) {
  DeltaCharacter sum = zero_character(d.delta_group);
  for (const auto& name : names) sum = sum + chi_of_place(d, name);
  return sum;
}

int omega_weight(const ExtensionDescriptor& d) {
  return static_cast<int>(inner(omega_character(d.delta_group),
                                induce_unit(d.delta_group, delta_prime(d))));
}

long long base_integer(const ExtensionDescriptor& d, const DeltaCharacter& chi) {
  return inner(chi, induce_unit(d.delta_group, delta_prime(d)));
}

TranslateResult translate_lambda(const ExtensionDescriptor& d) {
  const DeltaCharacter chi = chi_ell(d);
  const DeltaCharacter one = trivial_character(d.delta_group);
  TranslateResult result{
      d.lambda_K - imag_part(chi),
      mirror(d.lambda_K) + mirror(real_part(chi) - one),
      {}};
  if (!result.lambda_ell_classes.genuine())
    result.warnings.push_back(
        "lambda - chi_ell^(-) has a negative coefficient: inconsistent input data");
  return result;
}

StTranslateResult translate_st(const ExtensionDescriptor& d, const std::vector<std::string>& s,
                               const std::vector<std::string>& t) {
  std::set<std::string> s_set(s.begin(), s.end());
  for (const auto& name : t)
    if (s_set.count(name)) throw std::invalid_argument("S and T must be disjoint: " + name);
  auto check_tame = [&](const std::vector<std::string>& names) {
    for (const auto& name : names) {
      bool found = false;
      for (const auto& p : d.places)
        if (p.name == name) {
          found = true;
          if (p.above_ell)
            throw std::invalid_argument("S and T must not contain places above ell: " + name);
        }
      if (!found) throw std::invalid_argument("unknown place name: " + name);
    }
  };
  check_tame(s);
  check_tame(t);

  const DeltaCharacter chi_s = chi_named(d, s);
  const DeltaCharacter one = trivial_character(d.delta_group);
  const DeltaCharacter zero = zero_character(d.delta_group);
  const DeltaCharacter bump = twist_omega(join(real_part(chi_s) - one, zero));

  StTranslateResult result{
      imag_part(d.lambda_K) + bump,
      imag_part(d.lambda_K - chi_ell(d)) + bump,
      real_part(mirror(d.lambda_K)) + twist_omega(imag_part(chi_s))};
  return result;
}

namespace {

DeltaCharacter tame_ramified_imag_sum(const ExtensionDescriptor& d) {
  return imag_part(chi_sum(
      d, [](const PlaceDatum& p) { return !p.above_ell && place_ramified(p); }));
}

DeltaCharacter wild_ramified_imag_sum(const ExtensionDescriptor& d) {
  return imag_part(chi_sum(
      d, [](const PlaceDatum& p) { return p.above_ell && place_ramified(p); }));
}

}  // namespace

DeltaCharacter herbrand_class(const ExtensionDescriptor& d) {
  require_order_ell(d);
  return tame_ramified_imag_sum(d) - omega_character(d.delta_group);
}

DeltaCharacter herbrand_galois(const ExtensionDescriptor& d) {
  require_order_ell(d);
  return omega_character(d.delta_group) - tame_ramified_imag_sum(d);
}

const char* duality_case_name(DualityCase c) {
  switch (c) {
    case DualityCase::tame:
      return "tame";
    case DualityCase::wild_exceptional:
      return "wild-exceptional";
    case DualityCase::none:
      return "none";
  }
  return "none";
}

CohomologyReport cohomology_report(const ExtensionDescriptor& d) {
  require_order_ell(d);
  require_mu_zero(d);
  const auto delta_opt = resolved_delta(d);
  if (!delta_opt)
    throw HypothesisError(
        "delta flag is not determined by the ramification data and was not supplied");

  CohomologyReport report;
  report.delta = *delta_opt;

  // delta' = 0 exactly when a tame, split, ramified place exists; such a
  // place kills the imaginary capitulation.
  const bool tame_split_ramified = any_place(d, [&](const PlaceDatum& p) {
    return !p.above_ell && place_ramified(p) && place_split(d, p);
  });
  report.delta_prime = tame_split_ramified ? 0 : 1;

  const DeltaGroup& dg = d.delta_group;
  const DeltaCharacter omega = omega_character(dg);
  const DeltaCharacter tame_sum = tame_ramified_imag_sum(d);
  const DeltaCharacter wild_sum = wild_ramified_imag_sum(d);
  const DeltaCharacter all_sum = tame_sum + wild_sum;

  report.h1_cl = report.delta_prime * omega;
  // h2 on the class-group side follows from the genus exact sequence
  // 1 -> H^1(Cl) -> H^2(P) -> H^2(D) -> H^2(Cl) -> 1, whose middle terms
  // carry omega and the tame ramified sum.
  report.h2_cl = tame_sum - (1 - report.delta_prime) * omega;
  report.h1_c = all_sum - report.delta * omega;
  report.h2_c = wild_sum + (1 - report.delta) * omega;
  report.q_cl = report.h2_cl - report.h1_cl;
  report.q_c = report.h2_c - report.h1_c;

  for (const auto* h : {&report.h1_cl, &report.h2_cl, &report.h1_c, &report.h2_c}) {
    if (!h->genuine()) {
      report.warnings.push_back(
          "a cohomology character has a negative coefficient: the supplied flags are "
          "inconsistent with genuine module data");
      break;
    }
  }

  const DeltaCharacter identity_value =
      wild_sum + (1 - report.delta - report.delta_prime) * omega;
  report.duality_identity = identity_value.is_zero();

  long split_ramified = 0;
  bool split_ramified_wild = false;
  for (const auto& p : d.places)
    if (place_ramified(p) && place_split(d, p)) {
      ++split_ramified;
      if (p.above_ell) split_ramified_wild = true;
    }
  if (!split_ramified_wild)
    report.duality_case = DualityCase::tame;
  else if (split_ramified == 1)
    report.duality_case = DualityCase::wild_exceptional;
  else
    report.duality_case = DualityCase::none;
  report.duality_conditional = report.duality_case == DualityCase::wild_exceptional;
  return report;
}

namespace {

TransferResult transfer_core(const ExtensionDescriptor& d, const DeltaCharacter& lambda,
                             bool all_places, const char* lambda_name) {
  require_mu_zero(d);
  TransferResult result{zero_dg(d.delta_group, d.g), zero_character(d.delta_group), {}};
  if (!lambda.genuine())
    result.warnings.push_back(std::string(lambda_name) + " has negative coefficients");
  if (!real_part(lambda).is_zero())
    result.warnings.push_back(std::string(lambda_name) + " has real support");

  const DeltaCharacter omega = omega_character(d.delta_group);
  result.chi = dg_combine(lambda - omega, reg(d.g)) + dg_combine(omega, unit_g(d.g));
  for (const auto& p : d.places) {
    if (!all_places && p.above_ell) continue;
    if (!place_ramified(p)) continue;  // rho vanishes without inertia
    result.chi =
        result.chi + dg_combine(imag_part(chi_of_place(d, p)), induce_aug_from(d.g, p.g_dec_exp));
  }
  result.lambda_upper = dg_degree_g(result.chi);
  if (!result.chi.genuine())
    result.warnings.push_back(
        "transferred character has a negative coefficient (requires <lambda, omega> >= 1 "
        "for genuine output)");
  return result;
}

}  // namespace

TransferResult transfer_character(const ExtensionDescriptor& d) {
  return transfer_core(d, d.lambda_K, /*all_places=*/false, "lambda_K");
}

DeltaCharacter derive_lambda_tilde(const ExtensionDescriptor& d) {
  return d.lambda_K - imag_part(chi_ell(d));
}

TransferResult transfer_character_ell_decomposed(const ExtensionDescriptor& d) {
  const DeltaCharacter lambda_tilde =
      d.lambda_tilde_K ? *d.lambda_tilde_K : derive_lambda_tilde(d);
  return transfer_core(d, lambda_tilde, /*all_places=*/true, "lambda_tilde_K");
}

DGCharacter remove_ell_class_part(const DGCharacter& x, const ExtensionDescriptor& d,
                                  TowerSide side) {
  DGCharacter out = x;
  for (const auto& p : d.places) {
    if (!p.above_ell) continue;
    const GCharacter factor =
        side == TowerSide::upper ? induce_unit_from(d.g, p.g_dec_exp) : unit_g(d.g);
    out = out - dg_combine(imag_part(chi_of_place(d, p)), factor);
  }
  return out;
}

DGCharacter add_ell_class_part(const DGCharacter& x, const ExtensionDescriptor& d,
                               TowerSide side) {
  DGCharacter out = x;
  for (const auto& p : d.places) {
    if (!p.above_ell) continue;
    const GCharacter factor =
        side == TowerSide::upper ? induce_unit_from(d.g, p.g_dec_exp) : unit_g(d.g);
    out = out + dg_combine(imag_part(chi_of_place(d, p)), factor);
  }
  return out;
}

ProjectionResult project_g_character(const DGCharacter& x, const ExtensionDescriptor& d) {
  if (!(x.delta_group == d.delta_group))
    throw std::invalid_argument("DG character and descriptor use different Delta groups");
  const DeltaSubgroup dp = delta_prime(d);
  const DeltaGroup& dg = d.delta_group;

  ProjectionResult result;
  result.g_character = zero_g(x.spec);
  for (long r = 0; r < dg.order(); ++r) {
    const auto exps = dg.exps_of(r);
    bool trivial = true;
    for (const auto& gen : dp.generators())
      if (!dg.char_trivial_at(exps, gen)) {
        trivial = false;
        break;
      }
    if (trivial) result.g_character = result.g_character + dg_row(x, r);
  }

  const DeltaCharacter ind = induce_unit(dg, dp);
  result.omega_weight = static_cast<int>(inner(omega_character(dg), ind));
  for (const auto& p : d.places) {
    const DeltaCharacter chi = chi_of_place(d, p);
    PairingCheck check{p.name, inner(chi, ind), inner(imag_part(chi), ind)};
    if (check.imaginary != 0 && check.imaginary != 1)
      result.notes.push_back("place " + p.name +
                             ": imaginary pairing outside {0,1}: " +
                             std::to_string(check.imaginary));
    if (check.full != 0 && check.full != 1)
      result.notes.push_back("place " + p.name + ": bare pairing outside {0,1}: " +
                             std::to_string(check.full) +
                             " (the imaginary pairing is the one matching the split test)");
    result.place_pairings.push_back(std::move(check));
  }
  return result;
}

namespace {

long long ramified_place_sum(const ExtensionDescriptor& d, bool tame_split_only) {
  long long sum = 0;
  for (const auto& p : d.places) {
    if (!place_ramified(p)) continue;
    if (tame_split_only && (p.above_ell || !place_split(d, p))) continue;
    // ell^(m-j) places upstairs, each with e = ell^j.
    sum += ipow(d.g.ell, d.g.m - p.g_dec_exp) * (ipow(d.g.ell, p.g_dec_exp) - 1);
  }
  return sum;
}

}  // namespace

long long kida_lambda(const ExtensionDescriptor& d) {
  if (!real_part(d.lambda_K).is_zero())
    throw std::invalid_argument("lambda_K must be supported on imaginary irreducibles");
  const long long w = omega_weight(d);
  const long long lk = base_integer(d, d.lambda_K);
  return w + (lk - w) * ipow(d.g.ell, d.g.m) + ramified_place_sum(d, /*tame_split_only=*/true);
}

long long wingberg_lambda(const ExtensionDescriptor& d) {
  // The infinitesimal invariants of the real subfields satisfy the identical
  // identity via lambda_{ell}^(+) = lambda^(-).
  return kida_lambda(d);
}

long long kuzmin_lambda(const ExtensionDescriptor& d) {
  const DeltaCharacter lambda_tilde =
      d.lambda_tilde_K ? *d.lambda_tilde_K : derive_lambda_tilde(d);
  const long long w = omega_weight(d);
  const long long lk = base_integer(d, lambda_tilde);
  return w + (lk - w) * ipow(d.g.ell, d.g.m) + ramified_place_sum(d, /*tame_split_only=*/true);
}

}  // namespace genus
