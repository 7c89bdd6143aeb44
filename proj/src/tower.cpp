#include "genus/tower.hpp"

#include <stdexcept>
#include <string>

namespace genus {

std::vector<TowerStep> decompose(const ExtensionDescriptor& d) {
  const int m = d.g.m;
  if (m < 1) throw std::invalid_argument("decompose requires a tower of positive degree");

  std::vector<TowerStep> steps;
  steps.reserve(m);
  for (int k = 0; k < m; ++k) {
    TowerStep step{k, {}};
    for (const auto& p : d.places) {
      const int j = p.g_dec_exp;
      // Places of F_k above p, and the local exponent in F_{k+1}/F_k: the
      // subgroup chain of cyclic G is totally ordered, so the counts are
      // ell^min(k, m-j) and the step is inert-free exactly while j < m-k.
      StepPlace sp;
      sp.datum = p;
      sp.datum.g_dec_exp = (j >= m - k) ? 1 : 0;
      sp.count = ipow(d.g.ell, std::min(k, m - j));
      step.places.push_back(std::move(sp));
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

ChainResult transfer_chain(const ExtensionDescriptor& d) {
  ChainResult result;
  result.steps = decompose(d);
  result.trace.push_back({0, d.lambda_K});

  DeltaCharacter current = d.lambda_K;
  for (const auto& step : result.steps) {
    ExtensionDescriptor level;
    level.delta_group = d.delta_group;
    level.g = CyclicGroupSpec{d.g.ell, 1};
    level.lambda_K = current;
    level.mu_zero = d.mu_zero;
    for (const auto& sp : step.places) {
      for (long long i = 0; i < sp.count; ++i) {
        PlaceDatum expanded = sp.datum;
        expanded.name = sp.datum.name + "#" + std::to_string(i);
        level.places.push_back(std::move(expanded));
      }
    }
    current = transfer_character(level).lambda_upper;
    result.trace.push_back({step.level + 1, current});
  }
  result.lambda_top = base_integer(d, current);
  return result;
}

SolveResult assemble_character(const ExtensionDescriptor& d,
                               const std::vector<long long>& fixed_dims) {
  return solve_multiplicities(d.g, fixed_dims);
}

}  // namespace genus
