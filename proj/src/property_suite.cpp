#include "genus/property_suite.hpp"

#include <functional>
#include <sstream>

#include "genus/generators.hpp"
#include "genus/lattice_cohomology.hpp"
#include "genus/serialization.hpp"
#include "genus/tower.hpp"

namespace genus {

namespace {

struct Check {
  std::string id;
  std::function<std::string(Rng&, long)> run;  // empty string = pass
};

const std::vector<long> kSmallPrimes{3, 5, 7, 11, 13};

long pick_ell(Rng& rng) { return kSmallPrimes[rng.below(static_cast<long>(kSmallPrimes.size()))]; }

std::string check_mirror_involution(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    DeltaGroup g = random_delta_group(rng, pick_ell(rng));
    DeltaCharacter chi = random_delta_character(rng, g, false, false, 4);
    if (!(mirror(mirror(chi)) == chi)) return "mirror is not an involution";
  }
  return {};
}

std::string check_mirror_parity_swap(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    DeltaGroup g = random_delta_group(rng, pick_ell(rng));
    DeltaCharacter chi = random_delta_character(rng, g, false, false, 4);
    if (real_part(mirror(chi)).degree() != imag_part(chi).degree())
      return "mirror does not swap parities";
  }
  return {};
}

std::string check_split_direct_sum(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    DeltaGroup g = random_delta_group(rng, pick_ell(rng));
    DeltaCharacter chi = random_delta_character(rng, g, false, false, 4);
    auto [re, im] = split_real_imag(chi);
    if (!(re + im == chi)) return "real+imag does not reassemble the character";
    for (long t = 0; t < g.order(); ++t)
      if (re.coeffs[t] != 0 && im.coeffs[t] != 0) return "real and imag supports overlap";
  }
  return {};
}

std::string check_induction_degree(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    DeltaGroup g = random_delta_group(rng, pick_ell(rng));
    DeltaSubgroup h(g, random_subgroup_gens(rng, g));
    DeltaCharacter ind = induce_unit(g, h);
    if (ind.degree() != g.order() / h.size()) return "deg Ind != index";
    for (long t = 0; t < g.order(); ++t) {
      bool trivial = true;
      for (const auto& x : h.elements())
        if (!g.char_trivial_at(g.exps_of(t), x)) trivial = false;
      if (ind.coeffs[t] != (trivial ? 1 : 0)) return "Frobenius reciprocity fails";
    }
  }
  return {};
}

std::string check_join_pairing(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    DeltaGroup g = random_delta_group(rng, pick_ell(rng));
    DeltaCharacter a = random_delta_character(rng, g, false, true, 4);
    DeltaCharacter b = random_delta_character(rng, g, false, true, 4);
    DeltaCharacter joined = join(a, b);
    if (!(join(b, a) == joined)) return "join is not symmetric";
    for (long t = 0; t < g.order(); ++t) {
      DeltaCharacter phi = irreducible_character(g, t);
      if (inner(joined, phi) != std::max(inner(a, phi), inner(b, phi)))
        return "join pairing is not the max";
    }
  }
  return {};
}

std::string check_reg_degree(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    CyclicGroupSpec spec{pick_ell(rng), static_cast<int>(rng.below(4))};
    if (reg(spec).degree() != ipow(spec.ell, spec.m)) return "deg Reg != ell^m";
    if (aug(spec).degree() != ipow(spec.ell, spec.m) - 1) return "deg Aug != ell^m - 1";
  }
  return {};
}

std::string check_induction_complement(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    CyclicGroupSpec spec{pick_ell(rng), static_cast<int>(rng.below(4))};
    const int j = static_cast<int>(rng.range(0, spec.m));
    if (!(induce_unit_from(spec, j) + induce_aug_from(spec, j) == reg(spec)))
      return "unit + aug inductions do not sum to Reg";
    if (induce_unit_from(spec, j).degree() != ipow(spec.ell, spec.m - j))
      return "induced unit degree is not the index";
    if ((induce_aug_from(spec, j).degree() == 0) != (j == 0))
      return "induced augmentation vanishes iff j = 0 fails";
  }
  return {};
}

std::string check_solve_roundtrip(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    CyclicGroupSpec spec{pick_ell(rng), static_cast<int>(rng.below(4))};
    GCharacter chi = zero_g(spec);
    for (int t = 0; t <= spec.m; ++t) chi.coeffs[t] = rng.range(0, 4);
    std::vector<long long> dims(spec.m + 1);
    long long acc = 0;
    for (int k = 0; k <= spec.m; ++k) {
      acc += chi.coeffs[k] * psi_degree(spec, k);
      dims[k] = acc;
    }
    SolveResult solved = solve_multiplicities(spec, dims);
    if (!(solved.character == chi) || !solved.genuine) return "solve does not invert fixed dims";
  }
  return {};
}

std::string check_induction_transitivity(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    const long ell = pick_ell(rng);
    const int m = static_cast<int>(rng.range(1, 3));
    const int k = static_cast<int>(rng.range(0, m));
    const int j = static_cast<int>(rng.range(0, k));
    const GCharacter via = induce_to(induce_unit_from(CyclicGroupSpec{ell, k}, j), m);
    const GCharacter direct = induce_unit_from(CyclicGroupSpec{ell, m}, j);
    if (!(via == direct)) return "induction is not transitive";
  }
  return {};
}

std::string check_lattice_conjugation(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    const long ell = kSmallPrimes[rng.below(3)];
    const long alpha = rng.below(3), beta = rng.below(3), gamma = rng.below(3);
    if (alpha + beta + gamma == 0) continue;
    GLattice base = canonical_lattice(ell, alpha, beta, gamma);
    GLattice hidden = disguise(base, rng.next());
    if (!(cohomology(base) == cohomology(hidden))) return "cohomology changed under conjugation";
    if (fixed_rank(base) != fixed_rank(hidden)) return "fixed rank changed under conjugation";
    Decomposition d = recover_decomposition(hidden);
    if (d.alpha != alpha || d.beta != beta || d.gamma != gamma)
      return "decomposition recovery failed";
  }
  return {};
}

std::string check_herbrand_additivity(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    const long ell = kSmallPrimes[rng.below(3)];
    auto piece = [&]() {
      long a = rng.below(2), b = rng.below(2), c = rng.below(2);
      if (a + b + c == 0) c = 1;
      return canonical_lattice(ell, a, b, c);
    };
    GLattice l1 = piece(), l2 = piece();
    const int q1 = *cohomology(l1).herbrand_q;
    const int q2 = *cohomology(l2).herbrand_q;
    if (*cohomology(direct_sum(l1, l2)).herbrand_q != q1 + q2)
      return "Herbrand quotient is not additive";
  }
  return {};
}

std::string check_q_formula(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    const long ell = kSmallPrimes[rng.below(3)];
    const long alpha = rng.below(3), beta = rng.below(3), gamma = rng.below(3);
    if (alpha + beta + gamma == 0) continue;
    if (*cohomology(canonical_lattice(ell, alpha, beta, gamma)).herbrand_q != gamma - beta)
      return "q != gamma - beta";
  }
  return {};
}

std::string check_lattice_character(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    const long ell = kSmallPrimes[rng.below(3)];
    const long alpha = rng.below(3), beta = rng.below(3), gamma = rng.below(3);
    if (alpha + beta + gamma == 0) continue;
    GLattice lat = disguise(canonical_lattice(ell, alpha, beta, gamma), rng.next());
    GCharacter chi = character_of(lat);
    if (chi.degree() != lat.rank()) return "character degree != rank";
    if (!(divisible_character_of(lat) == chi)) return "divisible character != lattice character";
    if (!(solve_multiplicities(CyclicGroupSpec{ell, 1}, fixed_dims_chain(lat, 1)).character ==
          chi))
      return "fixed-dims chain does not recover the character";
  }
  return {};
}

std::string check_elementary_structure(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    const long ell = kSmallPrimes[rng.below(3)];
    const long alpha = rng.below(3), beta = rng.below(3), gamma = rng.below(3);
    if (alpha + beta + gamma == 0) continue;
    CohomologyResult c = cohomology(disguise(canonical_lattice(ell, alpha, beta, gamma), rng.next()));
    if (!c.herbrand_q) return "order-ell cohomology is not elementary";
  }
  return {};
}

std::string check_herbrand_opposition(Rng& rng, long cases) {
  DescriptorOptions options;
  options.force_m = 1;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    if (!(herbrand_class(d) + herbrand_galois(d) == zero_character(d.delta_group)))
      return "herbrand quotients are not opposite";
  }
  return {};
}

std::string check_report_consistency(Rng& rng, long cases) {
  DescriptorOptions options;
  options.force_m = 1;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    std::vector<int> deltas;
    if (delta_flag_free(d))
      deltas = {0, 1};
    else
      deltas = {*resolved_delta(d)};
    for (int flag : deltas) {
      d.delta_flag = delta_flag_free(d) ? std::optional<int>(flag) : std::nullopt;
      CohomologyReport r = cohomology_report(d);
      if (!(r.q_c == herbrand_galois(d))) return "report q_c != herbrand quotient";
      if (!(r.q_cl + r.q_c == zero_character(d.delta_group))) return "q_cl + q_c != 0";
      const bool componentwise = (r.h1_c == r.h2_cl) && (r.h2_c == r.h1_cl);
      if (componentwise != r.duality_identity)
        return "componentwise duality disagrees with the reported identity bit";
    }
  }
  return {};
}

std::string check_transfer_degree(Rng& rng, long cases) {
  DescriptorOptions options;
  options.ells = {3, 5};
  options.max_m = 2;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    TransferResult t = transfer_character(d);
    ProjectionResult proj = project_g_character(t.chi, d);
    if (proj.g_character.degree() != kida_lambda(d))
      return "projected transfer degree != Kida value";
  }
  return {};
}

std::string check_transfer_fixed_point(Rng& rng, long cases) {
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d;
    d.delta_group = random_delta_group(rng, pick_ell(rng));
    d.g = CyclicGroupSpec{d.delta_group.ell, static_cast<int>(rng.range(0, 2))};
    d.lambda_K = omega_character(d.delta_group);
    d.mu_zero = true;
    TransferResult t = transfer_character(d);
    if (!(t.lambda_upper == omega_character(d.delta_group)))
      return "omega is not a fixed point of the unramified transfer";
  }
  return {};
}

std::string check_transfer_aug_coefficient(Rng& rng, long cases) {
  DescriptorOptions options;
  options.force_m = 1;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    const DGCharacter chi = transfer_character(d).chi;
    const DeltaCharacter expected = -herbrand_galois(d);
    for (long r = 0; r < d.delta_group.order(); ++r) {
      const GCharacter row = dg_row(chi, r);
      if (row.coeffs[1] - row.coeffs[0] != expected.coeffs[r])
        return "Aug coefficient does not match the Herbrand quotient";
    }
  }
  return {};
}

std::string check_validate_roundtrip(Rng& rng, long cases) {
  DescriptorOptions options;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    ExtensionDescriptor back = descriptor_from_json(descriptor_to_json(d));
    ValidationReport a = validate(d);
    ValidationReport b = validate(back);
    if (a.ok() != b.ok() || a.errors.size() != b.errors.size() ||
        a.warnings.size() != b.warnings.size() || a.resolved_delta != b.resolved_delta)
      return "validation changed across a serialization round-trip";
  }
  return {};
}

std::string check_chain_direct(Rng& rng, long cases) {
  DescriptorOptions options;
  options.ells = {3, 5};
  options.max_m = 3;
  options.max_places = 3;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    if (d.g.m < 1) d.g.m = 1;
    for (auto& p : d.places) p.g_dec_exp = static_cast<int>(rng.range(0, d.g.m));
    if (transfer_chain(d).lambda_top != kida_lambda(d))
      return "stepwise chain disagrees with the direct Kida value";
  }
  return {};
}

std::string check_row_roundtrip(Rng& rng, long cases) {
  DescriptorOptions options;
  options.ells = {3};
  options.force_m = 2;
  options.max_places = 2;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    const DGCharacter full = transfer_character(d).chi;
    const ChainResult chain = transfer_chain(d);
    for (long r = 0; r < d.delta_group.order(); ++r) {
      std::vector<long long> dims;
      for (const auto& level : chain.trace) dims.push_back(level.lambda.coeffs[r]);
      if (!(assemble_character(d, dims).character == dg_row(full, r)))
        return "per-row degree chain does not reassemble the transfer row";
    }
  }
  return {};
}

std::string check_mass_conservation(Rng& rng, long cases) {
  DescriptorOptions options;
  options.ells = {3, 5};
  options.max_m = 3;
  for (long i = 0; i < cases; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    if (d.g.m < 1) d.g.m = 1;
    for (auto& p : d.places) p.g_dec_exp = static_cast<int>(rng.range(0, d.g.m));
    const auto steps = decompose(d);
    for (size_t s = 0; s < d.places.size(); ++s) {
      long long count = 1;
      for (const auto& step : steps) {
        if (step.places[s].count != count) return "derived place count is wrong";
        count *= step.places[s].datum.g_dec_exp == 0 ? d.g.ell : 1;
      }
      if (count != ipow(d.g.ell, d.g.m - d.places[s].g_dec_exp))
        return "place counts do not multiply to ell^(m-j)";
    }
  }
  return {};
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, long cases) {
  const std::vector<Check> checks = {
      {"delta.mirror_involution", check_mirror_involution},
      {"delta.mirror_parity_swap", check_mirror_parity_swap},
      {"delta.split_direct_sum", check_split_direct_sum},
      {"delta.induction_degree", check_induction_degree},
      {"delta.join_pairing", check_join_pairing},
      {"gee.reg_degree", check_reg_degree},
      {"gee.induction_complement", check_induction_complement},
      {"gee.solve_roundtrip", check_solve_roundtrip},
      {"gee.induction_transitivity", check_induction_transitivity},
      {"lattice.conjugation_invariance", check_lattice_conjugation},
      {"lattice.herbrand_additivity", check_herbrand_additivity},
      {"lattice.q_formula", check_q_formula},
      {"lattice.character_consistency", check_lattice_character},
      {"lattice.elementary_structure", check_elementary_structure},
      {"genus.herbrand_opposition", check_herbrand_opposition},
      {"genus.report_consistency", check_report_consistency},
      {"genus.transfer_degree", check_transfer_degree},
      {"genus.transfer_fixed_point", check_transfer_fixed_point},
      {"genus.transfer_aug_coefficient", check_transfer_aug_coefficient},
      {"genus.validate_roundtrip", check_validate_roundtrip},
      {"tower.chain_direct", check_chain_direct},
      {"tower.row_roundtrip", check_row_roundtrip},
      {"tower.mass_conservation", check_mass_conservation},
  };

  std::vector<PropertyResult> results;
  results.reserve(checks.size());
  std::uint64_t salt = 0;
  for (const auto& check : checks) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * ++salt));
    PropertyResult r{check.id, true, cases, {}};
    try {
      r.note = check.run(rng, cases);
      r.pass = r.note.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace genus
