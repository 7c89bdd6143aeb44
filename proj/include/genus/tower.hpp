#pragma once

#include <vector>

#include "genus/genus_engine.hpp"

namespace genus {

struct StepPlace {
  PlaceDatum datum;  // local decomposition exponent is 0 or 1
  long long count = 1;
};

// One elementary layer F_k -> F_{k+1} of the cyclic tower, with the place
// data seen from F_k.
struct TowerStep {
  int level = 0;
  std::vector<StepPlace> places;
};

// Splits a cyclic ell^m-extension into m elementary steps. A place with
// global decomposition exponent j stays undecomposed through the top j
// layers and splits ell-fold per layer below; Delta-data is carried
// unchanged. Requires m >= 1.
std::vector<TowerStep> decompose(const ExtensionDescriptor& d);

struct ChainLevel {
  int level = 0;
  DeltaCharacter lambda;
};

struct ChainResult {
  long long lambda_top = 0;
  std::vector<ChainLevel> trace;  // trace[k] = lambda character of F_k, k = 0..m
  std::vector<TowerStep> steps;
};

// Applies the elementary transfer step-by-step down the tower, carrying the
// full Delta-character at each level, and returns the top integer invariant.
// Must agree with kida_lambda evaluated directly.
ChainResult transfer_chain(const ExtensionDescriptor& d);

// Recovers the G-character from a chain of fixed-point dimensions
// (length m+1); delegates to solve_multiplicities.
SolveResult assemble_character(const ExtensionDescriptor& d,
                               const std::vector<long long>& fixed_dims);

}  // namespace genus
