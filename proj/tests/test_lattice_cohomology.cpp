#include <doctest.h>

#include "genus/lattice_cohomology.hpp"

using namespace genus;

namespace {

GLattice trivial_rank_one(long ell) {
  IntMat sigma(1, 1);
  sigma(0, 0) = 1;
  return make_lattice(ell, 0, std::move(sigma));
}

}  // namespace

TEST_CASE("smith normal form invariants") {
  IntMat a(3, 3);
  a(0, 0) = 2; a(0, 1) = 4; a(0, 2) = 4;
  a(1, 0) = -6; a(1, 1) = 6; a(1, 2) = 12;
  a(2, 0) = 10; a(2, 1) = 4; a(2, 2) = 16;
  SmithForm sm = smith_normal_form(a);
  CHECK(sm.rank == 3);
  // det = 624, gcd of entries 2, gcd of 2x2 minors 4: diag (2, 2, 156).
  CHECK(sm.diag == std::vector<BigInt>{2, 2, 156});
  CHECK(sm.u * a * sm.v == sm.d);
}

TEST_CASE("kernel basis is saturated") {
  IntMat a(2, 3);
  a(0, 0) = 1; a(0, 1) = 1; a(0, 2) = 1;
  a(1, 0) = 0; a(1, 1) = 2; a(1, 2) = 2;
  IntMat k = kernel_basis(a);
  CHECK(k.cols() == 1);
  // (0, 1, -1) up to sign; saturated, not (0, 2, -2).
  CHECK(k(0, 0) == 0);
  CHECK(k(1, 0) * k(2, 0) == -1);
}

TEST_CASE("canonical lattices") {
  GLattice perm = canonical_lattice(3, 1, 0, 0);
  CHECK(perm.rank() == 3);
  CHECK(perm.k == 1);

  GLattice comp = canonical_lattice(3, 0, 1, 0);
  CHECK(comp.rank() == 2);
  CHECK(comp.sigma(0, 0) == 0);
  CHECK(comp.sigma(0, 1) == -1);
  CHECK(comp.sigma(1, 0) == 1);
  CHECK(comp.sigma(1, 1) == -1);

  GLattice triv = canonical_lattice(3, 0, 0, 1);
  CHECK(triv.rank() == 1);
  CHECK(triv.k == 0);

  CHECK_THROWS_AS(canonical_lattice(3, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("cohomology of the three indecomposables") {
  SUBCASE("trivial module: H1 = 0, H2 = Z/3") {
    CohomologyResult c = cohomology(trivial_rank_one(3));
    CHECK(c.h1_invariant_factors.empty());
    CHECK(c.h2_invariant_factors == std::vector<long>{3});
    CHECK(*c.herbrand_q == 1);
  }
  SUBCASE("companion module: H1 = Z/3, H2 = 0") {
    CohomologyResult c = cohomology(canonical_lattice(3, 0, 1, 0));
    CHECK(c.h1_invariant_factors == std::vector<long>{3});
    CHECK(c.h2_invariant_factors.empty());
    CHECK(*c.herbrand_q == -1);
  }
  SUBCASE("group ring: cohomologically trivial") {
    CohomologyResult c = cohomology(canonical_lattice(3, 1, 0, 0));
    CHECK(c.h1_invariant_factors.empty());
    CHECK(c.h2_invariant_factors.empty());
    CHECK(*c.herbrand_q == 0);
  }
}

TEST_CASE("disguise is deterministic and invariant") {
  GLattice base = canonical_lattice(3, 1, 1, 1);
  GLattice a = disguise(base, 42);
  GLattice b = disguise(base, 42);
  CHECK(a.sigma == b.sigma);
  CHECK(a.rank() == base.rank());

  CHECK(cohomology(a) == cohomology(base));
  GLattice other = disguise(base, 43);
  CHECK(cohomology(other) == cohomology(base));
}

TEST_CASE("fixed ranks") {
  CHECK(fixed_rank(canonical_lattice(3, 1, 1, 1)) == 2);  // alpha + gamma
  CHECK(fixed_rank(canonical_lattice(3, 0, 1, 0)) == 0);

  // Disguised order-9 permutation lattice: chain 1, 3, 9.
  IntMat sigma(9, 9);
  for (int i = 0; i < 9; ++i) sigma((i + 1) % 9, i) = 1;
  GLattice z9 = disguise(make_lattice(3, 2, std::move(sigma)), 7);
  CHECK(fixed_dims_chain(z9) == std::vector<long long>{1, 3, 9});
}

TEST_CASE("recover_decomposition") {
  CHECK(recover_decomposition(canonical_lattice(3, 0, 1, 0)) == Decomposition{0, 1, 0});
  CHECK(recover_decomposition(canonical_lattice(3, 1, 0, 0)) == Decomposition{1, 0, 0});
  GLattice hidden = disguise(canonical_lattice(5, 2, 1, 3), 99);
  CHECK(recover_decomposition(hidden) == Decomposition{2, 1, 3});
}

TEST_CASE("character_of") {
  CHECK(character_of(canonical_lattice(3, 1, 0, 0)) == reg({3, 1}));
  CHECK(character_of(canonical_lattice(3, 0, 1, 0)) == aug({3, 1}));

  GLattice hidden = disguise(canonical_lattice(3, 1, 2, 1), 5);
  GCharacter chi = character_of(hidden);
  CHECK(chi.coeffs == std::vector<long long>{2, 3});
  CHECK(chi.degree() == 8);
  CHECK(chi.degree() == hidden.rank());
}

TEST_CASE("divisible_character_of realizes the degree shift") {
  CHECK(divisible_character_of(trivial_rank_one(3)) == unit_g({3, 1}));
  CHECK(divisible_character_of(canonical_lattice(3, 0, 1, 0)) == aug({3, 1}));

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GLattice hidden = disguise(canonical_lattice(3, 1, 1, 2), seed);
    CHECK(divisible_character_of(hidden) == character_of(hidden));
  }
}

TEST_CASE("herbrand additivity over direct sums") {
  GLattice a = canonical_lattice(3, 1, 0, 1);
  GLattice b = canonical_lattice(3, 0, 2, 0);
  CHECK(*cohomology(direct_sum(a, b)).herbrand_q ==
        *cohomology(a).herbrand_q + *cohomology(b).herbrand_q);
}

TEST_CASE("order-ell regime errors") {
  IntMat sigma(9, 9);
  for (int i = 0; i < 9; ++i) sigma((i + 1) % 9, i) = 1;
  GLattice z9 = make_lattice(3, 2, std::move(sigma));
  CHECK_THROWS_AS(recover_decomposition(z9), StructureError);
  CHECK_THROWS_AS(character_of(z9), StructureError);
  // Invariant factors are still available for general k.
  CohomologyResult c = cohomology(z9);
  CHECK(c.h1_invariant_factors.empty());
  CHECK(c.h2_invariant_factors.empty());
}

TEST_CASE("make_lattice validates the action order") {
  IntMat bad(2, 2);
  bad(0, 0) = 1; bad(0, 1) = 1; bad(1, 1) = 1;
  CHECK_THROWS_AS(make_lattice(3, 1, std::move(bad)), std::invalid_argument);

  IntMat id2 = IntMat::identity(2);
  CHECK_THROWS_AS(make_lattice(3, 1, std::move(id2)), std::invalid_argument);
}
