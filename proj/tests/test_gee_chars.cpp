#include <doctest.h>

#include "genus/gee_chars.hpp"
#include "test_helpers.hpp"

using namespace genus;
using namespace genus::testing;

TEST_CASE("reg and aug degrees") {
  CHECK(reg({3, 1}).degree() == 3);
  CHECK(reg({3, 2}).degree() == 9);
  CHECK(psi_degree({3, 2}, 0) == 1);
  CHECK(psi_degree({3, 2}, 1) == 2);
  CHECK(psi_degree({3, 2}, 2) == 6);

  CHECK(reg({3, 0}) == unit_g({3, 0}));
  CHECK(aug({3, 0}).degree() == 0);
  CHECK(aug({5, 2}).degree() == 24);
}

TEST_CASE("induce_unit_from") {
  const CyclicGroupSpec spec{3, 2};
  CHECK(induce_unit_from(spec, 0) == reg(spec));
  CHECK(induce_unit_from(spec, 2) == unit_g(spec));

  GCharacter ind = induce_unit_from(spec, 1);
  CHECK(ind.coeffs == std::vector<long long>{1, 1, 0});  // psi0 + psi1
  CHECK(ind.degree() == 3);

  CHECK_THROWS_AS(induce_unit_from(spec, 3), std::invalid_argument);
  CHECK_THROWS_AS(induce_unit_from(spec, -1), std::invalid_argument);
}

TEST_CASE("induce_aug_from") {
  const CyclicGroupSpec spec{3, 2};
  CHECK(induce_aug_from(spec, 0) == zero_g(spec));
  CHECK(induce_aug_from({3, 1}, 1) == aug({3, 1}));

  GCharacter rho = induce_aug_from(spec, 1);
  CHECK(rho.coeffs == std::vector<long long>{0, 0, 1});  // psi2
  CHECK(rho.degree() == 6);
}

TEST_CASE("solve_multiplicities") {
  SUBCASE("trivial character") {
    SolveResult r = solve_multiplicities({3, 1}, {1, 1});
    CHECK(r.character == unit_g({3, 1}));
    CHECK(r.genuine);
  }
  SUBCASE("augmentation") {
    SolveResult r = solve_multiplicities({3, 1}, {0, 2});
    CHECK(r.character == aug({3, 1}));
    CHECK(r.genuine);
  }
  SUBCASE("non-divisible increment") {
    CHECK_THROWS_AS(solve_multiplicities({3, 1}, {0, 3}), std::invalid_argument);
  }
  SUBCASE("virtual solution is flagged") {
    SolveResult r = solve_multiplicities({3, 1}, {2, 0});
    CHECK_FALSE(r.genuine);
    CHECK(r.character.coeffs == std::vector<long long>{2, -1});
  }
  SUBCASE("wrong length") {
    CHECK_THROWS_AS(solve_multiplicities({3, 2}, {1, 1}), std::invalid_argument);
  }
}

TEST_CASE("dg_combine and degree maps") {
  DeltaGroup z2 = z2_group();
  const CyclicGroupSpec spec{3, 2};

  DGCharacter x = dg_combine(omega_character(z2), reg(spec));
  CHECK(dg_degree_g(x) == 9 * omega_character(z2));
  CHECK(dg_degree_delta(dg_combine(trivial_character(z2), aug(spec))) == aug(spec));
  CHECK(dg_combine(omega_character(z2) + trivial_character(z2), unit_g(spec)).degree() == 2);

  SUBCASE("ell mismatch is rejected") {
    CHECK_THROWS_AS(dg_combine(omega_character(z2), reg({5, 1})), std::invalid_argument);
  }
}

TEST_CASE("induction transitivity on explicit degree-1 data") {
  // Z/9 has psi0, psi1 (degree 2), psi2 (degree 6); inducing 1 from the
  // order-3 subgroup must match Frobenius reciprocity over Z/9.
  GCharacter via = induce_to(induce_unit_from({3, 1}, 0), 2);
  CHECK(via == induce_unit_from({3, 2}, 0));
  GCharacter via2 = induce_to(induce_unit_from({3, 1}, 1), 2);
  CHECK(via2 == induce_unit_from({3, 2}, 1));
  GCharacter via3 = induce_to(induce_unit_from({3, 2}, 1), 3);
  CHECK(via3 == induce_unit_from({3, 3}, 1));
}
