#include <doctest.h>

#include "genus/property_suite.hpp"

using namespace genus;

TEST_CASE("every module invariant passes on a small deterministic run") {
  const auto results = run_property_suite(/*seed=*/12345, /*cases=*/25);
  CHECK(results.size() == 23);
  for (const auto& r : results) {
    INFO(r.id, ": ", r.note);
    CHECK(r.pass);
  }
}

TEST_CASE("the suite is deterministic in its seed") {
  const auto a = run_property_suite(7, 10);
  const auto b = run_property_suite(7, 10);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].pass == b[i].pass);
  }
}
