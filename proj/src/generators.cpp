#include "genus/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace genus {

namespace {

std::vector<long> even_divisors_of(long n) {
  std::vector<long> out;
  for (long d = 2; d <= n; ++d)
    if (n % d == 0 && d % 2 == 0) out.push_back(d);
  return out;
}

std::vector<long> all_divisors_of(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

DeltaGroup random_delta_group(Rng& rng, long ell, std::optional<int> want_w) {
  const std::vector<long> evens = even_divisors_of(ell - 1);
  const std::vector<long> all = all_divisors_of(ell - 1);

  for (int attempt = 0; attempt < 200; ++attempt) {
    DeltaGroup g;
    g.ell = ell;
    // Keep the group small; the first divisor is even so it can host tau_bar.
    const int extra = static_cast<int>(rng.below(want_w == 0 ? 2 : 3));
    g.divisors.push_back(evens[rng.below(static_cast<long>(evens.size()))]);
    for (int i = 0; i < extra; ++i)
      g.divisors.push_back(all[rng.below(static_cast<long>(all.size()))]);
    long order = 1;
    for (long d : g.divisors) order *= d;
    if (order > 64) continue;
    // w = 0 needs a nontrivial Delta', hence |Delta| >= 4.
    if (want_w == 0 && order < 4) continue;

    const long r = g.rank();
    // tau_bar: an order-2 element.
    g.tau_bar.assign(r, 0);
    bool has_tau = false;
    for (long i = 0; i < r; ++i)
      if (g.divisors[i] % 2 == 0 && (i == 0 || rng.coin())) {
        g.tau_bar[i] = g.divisors[i] / 2;
        has_tau = true;
      }
    if (!has_tau) g.tau_bar[0] = g.divisors[0] / 2;

    // A quadratic character eps with eps(tau_bar) = -1 cuts out Delta'.
    std::vector<long> eps;
    for (long trial = 0; trial < 64 && eps.empty(); ++trial) {
      std::vector<long> cand(r, 0);
      for (long i = 0; i < r; ++i)
        if (g.divisors[i] % 2 == 0 && rng.coin()) cand[i] = g.divisors[i] / 2;
      if (!g.char_trivial_at(cand, g.tau_bar)) eps = cand;
    }
    if (eps.empty()) continue;
    for (long idx = 0; idx < order; ++idx) {
      const auto x = g.exps_of(idx);
      if (g.char_trivial_at(eps, x)) g.delta_prime_gens.push_back(x);
    }

    if (want_w.value_or(-1) == 1 || (!want_w && rng.coin())) {
      g.omega = eps;
    } else {
      // omega imaginary; for w = 0 also nontrivial on Delta'.
      bool found = false;
      for (long trial = 0; trial < 256 && !found; ++trial) {
        std::vector<long> cand(r);
        for (long i = 0; i < r; ++i) cand[i] = rng.below(g.divisors[i]);
        if (g.char_trivial_at(cand, g.tau_bar)) continue;
        if (want_w == 0) {
          bool trivial_on_dp = true;
          for (const auto& gen : g.delta_prime_gens)
            if (!g.char_trivial_at(cand, gen)) trivial_on_dp = false;
          if (trivial_on_dp) continue;
        }
        g.omega = cand;
        found = true;
      }
      if (!found) continue;
    }

    if (g.validate().ok()) return g;
  }
  throw std::logic_error("random_delta_group failed to construct a valid group");
}

DeltaCharacter random_delta_character(Rng& rng, const DeltaGroup& g, bool imaginary_only,
                                      bool genuine, long max_abs_coeff) {
  DeltaCharacter chi = zero_character(g);
  for (long i = 0; i < g.order(); ++i) {
    if (imaginary_only && g.char_sign_at_tau(g.exps_of(i)) == 1) continue;
    if (rng.coin()) continue;  // keep supports sparse
    long c = rng.range(genuine ? 0 : -max_abs_coeff, max_abs_coeff);
    chi.coeffs[i] = c;
  }
  return chi;
}

std::vector<DeltaElement> random_subgroup_gens(Rng& rng, const DeltaGroup& g) {
  std::vector<DeltaElement> gens;
  const long count = rng.below(3);
  for (long i = 0; i < count; ++i) {
    DeltaElement x(g.rank());
    for (long t = 0; t < g.rank(); ++t) x[t] = rng.below(g.divisors[t]);
    gens.push_back(std::move(x));
  }
  return gens;
}

bool delta_flag_free(const ExtensionDescriptor& d) {
  bool any_ramified = false;
  for (const auto& p : d.places)
    if (place_ramified(p)) {
      any_ramified = true;
      if (!p.above_ell) return false;  // tame ramification pins delta = 1
    }
  return any_ramified;  // no ramification pins delta = 0
}

ExtensionDescriptor random_descriptor(Rng& rng, const DescriptorOptions& options) {
  ExtensionDescriptor d;
  const long ell = options.ells[rng.below(static_cast<long>(options.ells.size()))];
  d.delta_group = random_delta_group(rng, ell, options.want_w);
  const int m = options.force_m ? *options.force_m : static_cast<int>(rng.range(0, options.max_m));
  d.g = CyclicGroupSpec{ell, m};
  d.lambda_K = random_delta_character(rng, d.delta_group, /*imaginary_only=*/true,
                                      /*genuine=*/true, options.max_lambda_coeff);
  d.mu_zero = true;

  const int count = static_cast<int>(rng.below(options.max_places + 1));
  for (int i = 0; i < count; ++i) {
    PlaceDatum p;
    p.name = "p" + std::to_string(i);
    p.above_ell = rng.coin();
    p.dec_gens = random_subgroup_gens(rng, d.delta_group);
    p.g_dec_exp = static_cast<int>(rng.range(0, m));
    d.places.push_back(std::move(p));
  }

  if (delta_flag_free(d)) d.delta_flag = rng.coin() ? 1 : 0;
  return d;
}

}  // namespace genus
