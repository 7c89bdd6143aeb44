#include <doctest.h>

#include "genus/delta_chars.hpp"
#include "genus/generators.hpp"
#include "test_helpers.hpp"

using namespace genus;
using namespace genus::testing;

TEST_CASE("irreducibles of small groups") {
  CHECK(irreducibles(z2_group()).size() == 2);

  DeltaGroup z2z3;
  z2z3.ell = 7;
  z2z3.divisors = {2, 3};
  z2z3.tau_bar = {1, 0};
  z2z3.omega = {1, 1};
  z2z3.delta_prime_gens = {{0, 1}};
  CHECK(z2z3.validate().ok());
  CHECK(irreducibles(z2z3).size() == 6);

  DeltaGroup z4;
  z4.ell = 5;
  z4.divisors = {4};
  z4.tau_bar = {2};
  z4.omega = {1};
  z4.delta_prime_gens = {{2}};
  auto chars = irreducibles(z4);
  CHECK(chars.size() == 4);
  // The generator character has order 4: its square is nontrivial.
  CHECK_FALSE(z4.char_trivial_at({1}, {1}));
  CHECK_FALSE(z4.char_trivial_at({2}, {1}));
  CHECK(z4.char_trivial_at({0}, {1}));
}

TEST_CASE("pairwise orthogonality in canonical order") {
  DeltaGroup g = klein_group(3);
  auto chars = irreducibles(g);
  for (size_t a = 0; a < chars.size(); ++a)
    for (size_t b = 0; b < chars.size(); ++b)
      CHECK(inner(chars[a], chars[b]) == (a == b ? 1 : 0));
}

TEST_CASE("induce_unit") {
  DeltaGroup z2 = z2_group();

  SUBCASE("full subgroup gives the trivial character") {
    DeltaSubgroup full(z2, {{1}});
    CHECK(induce_unit(z2, full) == trivial_character(z2));
  }
  SUBCASE("trivial subgroup gives the regular character") {
    DeltaSubgroup triv(z2, {});
    DeltaCharacter ind = induce_unit(z2, triv);
    CHECK(ind.degree() == 2);
    CHECK(ind == trivial_character(z2) + omega_character(z2));
  }
  SUBCASE("Z/2 x Z/2 with H generated by (1,0)") {
    DeltaGroup g = klein_group(3);
    DeltaSubgroup h(g, {{1, 0}});
    DeltaCharacter ind = induce_unit(g, h);
    // Exactly the two characters killing (1,0).
    CHECK(ind == char_of(g, {0, 0}) + char_of(g, {0, 1}));
  }
  SUBCASE("element outside the group is rejected") {
    CHECK_THROWS_AS(DeltaSubgroup(z2, {{0, 1}}), std::invalid_argument);
  }
}

TEST_CASE("mirror involution basics") {
  DeltaGroup g = klein_group(5);
  CHECK(mirror(trivial_character(g)) == omega_character(g));
  CHECK(mirror(omega_character(g)) == trivial_character(g));

  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    DeltaCharacter chi = random_delta_character(rng, g, false, false, 5);
    CHECK(mirror(mirror(chi)) == chi);
  }
}

TEST_CASE("split_real_imag") {
  DeltaGroup z2 = z2_group();
  auto [omega_re, omega_im] = split_real_imag(omega_character(z2));
  CHECK(omega_re.is_zero());
  CHECK(omega_im == omega_character(z2));

  auto [one_re, one_im] = split_real_imag(trivial_character(z2));
  CHECK(one_re == trivial_character(z2));
  CHECK(one_im.is_zero());

  DeltaCharacter both = trivial_character(z2) + omega_character(z2);
  auto [re, im] = split_real_imag(both);
  CHECK(re == trivial_character(z2));
  CHECK(im == omega_character(z2));
}

TEST_CASE("join") {
  DeltaGroup z2 = z2_group();
  DeltaCharacter one = trivial_character(z2);
  DeltaCharacter zero = zero_character(z2);

  CHECK(join(one - one, zero) == zero);
  // (2 phi1 - phi2) v 0 = 2 phi1.
  DeltaCharacter mixed = 2 * one - omega_character(z2);
  CHECK(join(mixed, zero) == 2 * one);

  Rng rng(11);
  DeltaGroup g = klein_group(7);
  for (int i = 0; i < 30; ++i) {
    DeltaCharacter a = random_delta_character(rng, g, false, false, 4);
    DeltaCharacter b = random_delta_character(rng, g, false, false, 4);
    CHECK(join(a, b) == join(b, a));
  }
}

TEST_CASE("inner products") {
  DeltaGroup z2 = z2_group();
  CHECK(inner(omega_character(z2), omega_character(z2)) == 1);

  DeltaSubgroup triv(z2, {});
  CHECK(inner(trivial_character(z2), induce_unit(z2, triv)) == 1);

  // <omega, Ind_{Delta'} 1> = 1 iff omega is trivial on Delta'.
  DeltaGroup g = klein_group(3, {1, 1});
  DeltaSubgroup dp(g, g.delta_prime_gens);
  CHECK(inner(omega_character(g), induce_unit(g, dp)) == 0);
  DeltaGroup g2 = klein_group(3, {1, 0});
  DeltaSubgroup dp2(g2, g2.delta_prime_gens);
  CHECK(inner(omega_character(g2), induce_unit(g2, dp2)) == 1);
}

TEST_CASE("project_trivial_on") {
  DeltaGroup z2 = z2_group();
  DeltaCharacter chi = 3 * omega_character(z2) + 2 * trivial_character(z2);

  DeltaSubgroup triv(z2, {});
  CHECK(project_trivial_on(chi, triv) == chi);

  DeltaSubgroup full(z2, {{1}});
  CHECK(project_trivial_on(chi, full) == 2 * trivial_character(z2));

  CHECK(project_trivial_on(3 * omega_character(z2), triv) == 3 * omega_character(z2));
}

TEST_CASE("group validation rules") {
  DeltaGroup g = z2_group();
  CHECK(g.validate().ok());

  SUBCASE("omega parity") {
    g.omega = {0};
    auto report = g.validate();
    CHECK_FALSE(report.ok());
    bool found = false;
    for (const auto& e : report.errors)
      if (e.rule == "OMEGA_PARITY") found = true;
    CHECK(found);
  }
  SUBCASE("tau order") {
    g.tau_bar = {0};
    auto report = g.validate();
    CHECK_FALSE(report.ok());
  }
  SUBCASE("divisor must divide ell-1") {
    g.ell = 7;
    g.divisors = {4};
    g.tau_bar = {2};
    g.omega = {1};
    CHECK_FALSE(g.validate().ok());
  }
  SUBCASE("tau inside delta_prime") {
    DeltaGroup k = klein_group(3);
    k.delta_prime_gens = {{1, 0}};
    CHECK_FALSE(k.validate().ok());
  }
}

TEST_CASE("mirror parity swap on random data") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    DeltaGroup g = random_delta_group(rng, 7);
    DeltaCharacter chi = random_delta_character(rng, g, false, false, 4);
    CHECK(real_part(mirror(chi)).degree() == imag_part(chi).degree());
  }
}
