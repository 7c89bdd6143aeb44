#include <doctest.h>

#include "genus/generators.hpp"
#include "genus/serialization.hpp"
#include "test_helpers.hpp"

using namespace genus;
using namespace genus::testing;

TEST_CASE("delta group round-trip") {
  const Json j = Json::parse(R"({"ell":7,"elementary_divisors":[2,3],
      "tau_bar":[1,0],"omega":[1,1],"delta_prime_gens":[[0,1]]})");
  DeltaGroup g = delta_group_from_json(j);
  CHECK(g.ell == 7);
  CHECK(g.order() == 6);
  CHECK(g.validate().ok());
  CHECK(delta_group_from_json(delta_group_to_json(g)) == g);
}

TEST_CASE("character keys") {
  DeltaGroup g = klein_group(3);
  DeltaCharacter chi = char_of(g, {0, 0}, 1) + char_of(g, {1, 0}, 2);
  Json j = delta_character_to_json(chi);
  CHECK(j["coeffs"]["(0,0)"] == 1);
  CHECK(j["coeffs"]["(1,0)"] == 2);
  CHECK(j["coeffs"].size() == 2);  // zeros omitted
  CHECK(delta_character_from_json(j, g) == chi);

  SUBCASE("bad key shape") {
    CHECK_THROWS_AS(delta_character_from_json(Json::parse(R"x({"coeffs":{"0,0":1}})x"), g),
                    SchemaError);
  }
  SUBCASE("wrong arity") {
    CHECK_THROWS_AS(delta_character_from_json(Json::parse(R"x({"coeffs":{"(1)":1}})x"), g),
                    SchemaError);
  }
}

TEST_CASE("g character round-trip") {
  GCharacter chi{{3, 2}, {1, 0, 2}};
  Json j = g_character_to_json(chi);
  CHECK(j.dump() == R"({"ell":3,"m":2,"coeffs":[1,0,2]})");
  CHECK(g_character_from_json(j) == chi);
}

TEST_CASE("lattice round-trip") {
  GLattice lat = canonical_lattice(3, 1, 1, 0);
  Json j = lattice_to_json(lat);
  CHECK(j["rank"] == 5);
  GLattice back = lattice_from_json(j);
  CHECK(back.sigma == lat.sigma);
  CHECK(back.k == lat.k);

  SUBCASE("order violations become schema errors") {
    Json bad = j;
    bad["sigma"][0][0] = 7;
    CHECK_THROWS_AS(lattice_from_json(bad), SchemaError);
  }
}

TEST_CASE("descriptor schema") {
  ExtensionDescriptor d = worked_example();
  Json j = descriptor_to_json(d);
  CHECK(j["schema"] == "genus-calc/1");

  SUBCASE("round-trip preserves validation") {
    ExtensionDescriptor back = descriptor_from_json(j);
    CHECK(validate(back).ok());
    CHECK(descriptor_to_json(back) == j);
  }
  SUBCASE("missing schema tag") {
    Json bad = j;
    bad.erase("schema");
    CHECK_THROWS_AS(descriptor_from_json(bad), SchemaError);
  }
  SUBCASE("wrong schema tag") {
    Json bad = j;
    bad["schema"] = "genus-calc/2";
    CHECK_THROWS_AS(descriptor_from_json(bad), SchemaError);
  }
  SUBCASE("unknown top-level key") {
    Json bad = j;
    bad["surprise"] = 1;
    CHECK_THROWS_AS(descriptor_from_json(bad), SchemaError);
  }
  SUBCASE("unknown nested key") {
    Json bad = j;
    bad["places"][0]["inertia"] = 1;
    CHECK_THROWS_AS(descriptor_from_json(bad), SchemaError);
  }
  SUBCASE("type errors") {
    Json bad = j;
    bad["mu_zero"] = "yes";
    CHECK_THROWS_AS(descriptor_from_json(bad), SchemaError);
  }
}

TEST_CASE("validation is stable across serialization") {
  Rng rng(31337);
  DescriptorOptions options;
  for (int i = 0; i < 40; ++i) {
    ExtensionDescriptor d = random_descriptor(rng, options);
    ExtensionDescriptor back = descriptor_from_json(descriptor_to_json(d));
    ValidationReport a = validate(d);
    ValidationReport b = validate(back);
    CHECK(a.ok() == b.ok());
    CHECK(a.errors.size() == b.errors.size());
    CHECK(a.resolved_delta == b.resolved_delta);
  }
}

TEST_CASE("dump is deterministic") {
  ExtensionDescriptor d = worked_example();
  CHECK(descriptor_to_json(d).dump(2) == descriptor_to_json(d).dump(2));
}

TEST_CASE("csv quoting") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
