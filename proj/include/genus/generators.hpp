#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "genus/genus_engine.hpp"

namespace genus {

// Deterministic draws built directly on the mt19937_64 word stream; the
// standard distribution classes are not portable across library
// implementations.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  long below(long n) { return n <= 1 ? 0 : static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() & 1) != 0; }
};

// A valid DeltaGroup over the given ell; when want_w is set, the group is
// arranged so that <omega, Ind_{Delta'} 1> equals it.
DeltaGroup random_delta_group(Rng& rng, long ell, std::optional<int> want_w = std::nullopt);

DeltaCharacter random_delta_character(Rng& rng, const DeltaGroup& g, bool imaginary_only,
                                      bool genuine, long max_abs_coeff);

std::vector<DeltaElement> random_subgroup_gens(Rng& rng, const DeltaGroup& g);

struct DescriptorOptions {
  std::vector<long> ells{3, 5};
  int max_m = 2;
  std::optional<int> force_m;
  int max_places = 4;
  std::optional<int> want_w;
  long max_lambda_coeff = 3;
};

// A descriptor passing validate() with mu_zero = true and an admissible
// delta flag.
ExtensionDescriptor random_descriptor(Rng& rng, const DescriptorOptions& options);

// Whether the delta flag of this descriptor is free (only wild ramification).
bool delta_flag_free(const ExtensionDescriptor& d);

}  // namespace genus
