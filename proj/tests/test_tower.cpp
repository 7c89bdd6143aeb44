#include <doctest.h>

#include "genus/generators.hpp"
#include "genus/tower.hpp"
#include "test_helpers.hpp"

using namespace genus;
using namespace genus::testing;

TEST_CASE("decompose") {
  SUBCASE("m = 1 is a single step identical to the descriptor") {
    ExtensionDescriptor d = worked_example(1, 1);
    auto steps = decompose(d);
    REQUIRE(steps.size() == 1);
    REQUIRE(steps[0].places.size() == 1);
    CHECK(steps[0].places[0].count == 1);
    CHECK(steps[0].places[0].datum.g_dec_exp == 1);
  }
  SUBCASE("m = 2, j = 2: both steps see one undecomposed place") {
    ExtensionDescriptor d = worked_example(2, 2);
    auto steps = decompose(d);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].places[0].count == 1);
    CHECK(steps[0].places[0].datum.g_dec_exp == 1);
    CHECK(steps[1].places[0].count == 1);
    CHECK(steps[1].places[0].datum.g_dec_exp == 1);
  }
  SUBCASE("m = 2, j = 0: the place splits ell-fold per layer") {
    ExtensionDescriptor d = worked_example(2, 0);
    auto steps = decompose(d);
    CHECK(steps[0].places[0].count == 1);
    CHECK(steps[0].places[0].datum.g_dec_exp == 0);
    CHECK(steps[1].places[0].count == 3);
    CHECK(steps[1].places[0].datum.g_dec_exp == 0);
  }
  SUBCASE("m = 2, j = 1: ramified top layer only") {
    ExtensionDescriptor d = worked_example(2, 1);
    auto steps = decompose(d);
    CHECK(steps[0].places[0].count == 1);
    CHECK(steps[0].places[0].datum.g_dec_exp == 0);
    CHECK(steps[1].places[0].count == 3);
    CHECK(steps[1].places[0].datum.g_dec_exp == 1);
  }
  SUBCASE("m = 0 is an error") {
    ExtensionDescriptor d = worked_example(1, 1);
    d.g.m = 0;
    d.places[0].g_dec_exp = 0;
    CHECK_THROWS_AS(decompose(d), std::invalid_argument);
  }
}

TEST_CASE("transfer_chain matches the direct evaluation") {
  SUBCASE("worked value 9: m = 2, j = 2, lambda 1, w 1") {
    ExtensionDescriptor d = worked_example(2, 2);
    CHECK(kida_lambda(d) == 9);  // 1 + 9*0 + 1*(9-1)
    ChainResult chain = transfer_chain(d);
    CHECK(chain.lambda_top == 9);
    REQUIRE(chain.trace.size() == 3);
    CHECK(base_integer(d, chain.trace[1].lambda) == 3);
  }
  SUBCASE("worked value 7: m = 2, j = 1") {
    ExtensionDescriptor d = worked_example(2, 1);
    CHECK(kida_lambda(d) == 7);  // 1 + 0 + 3*(3-1)
    CHECK(transfer_chain(d).lambda_top == 7);
  }
  SUBCASE("no ramification is a fixed point") {
    ExtensionDescriptor d = worked_example(2, 0);
    d.places.clear();
    ChainResult chain = transfer_chain(d);
    CHECK(chain.lambda_top == 1);
    for (const auto& level : chain.trace)
      CHECK(level.lambda == omega_character(d.delta_group));
  }
}

TEST_CASE("assemble_character") {
  SUBCASE("worked chain 1, 3 gives psi0 + psi1") {
    ExtensionDescriptor d = worked_example(1, 1);
    SolveResult r = assemble_character(d, {1, 3});
    CHECK(r.character == reg(d.g));
    // Matches the omega-row of the transferred character.
    DGCharacter chi = transfer_character(d).chi;
    CHECK(r.character == dg_row(chi, d.delta_group.index_of({1})));
  }
  SUBCASE("constant chain keeps psi0 only") {
    ExtensionDescriptor d = worked_example(2, 0);
    SolveResult r = assemble_character(d, {1, 1, 1});
    CHECK(r.character == unit_g(d.g));
  }
  SUBCASE("chain 1, 3, 9 is the regular character") {
    ExtensionDescriptor d = worked_example(2, 0);
    SolveResult r = assemble_character(d, {1, 3, 9});
    CHECK(r.character == reg(d.g));
  }
}

TEST_CASE("per-row chains reassemble the transfer rows") {
  Rng rng(555);
  DescriptorOptions options;
  options.ells = {3};
  options.force_m = 2;
  options.max_places = 2;
  for (int i = 0; i < 25; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    DGCharacter full = transfer_character(d).chi;
    ChainResult chain = transfer_chain(d);
    for (long r = 0; r < d.delta_group.order(); ++r) {
      std::vector<long long> dims;
      for (const auto& level : chain.trace) dims.push_back(level.lambda.coeffs[r]);
      CHECK(assemble_character(d, dims).character == dg_row(full, r));
    }
  }
}
