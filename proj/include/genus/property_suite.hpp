#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genus {

struct PropertyResult {
  std::string id;
  bool pass = false;
  long cases = 0;
  std::string note;  // first counterexample or failure reason
};

// Runs every module invariant with deterministic data derived from the
// seed. `cases` scales the number of random instances per invariant.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, long cases);

}  // namespace genus
