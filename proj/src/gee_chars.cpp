#include "genus/gee_chars.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace genus {

namespace {

void require_same_spec(const CyclicGroupSpec& a, const CyclicGroupSpec& b) {
  if (!(a == b)) throw std::invalid_argument("cyclic group specs differ");
}

bool odd_prime(long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void check_spec(const CyclicGroupSpec& spec) {
  if (!odd_prime(spec.ell))
    throw std::invalid_argument("cyclic group requires an odd prime ell");
  if (spec.m < 0) throw std::invalid_argument("cyclic group exponent must be nonnegative");
}

}  // namespace

long long ipow(long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

long long psi_degree(const CyclicGroupSpec& spec, int i) {
  if (i < 0 || i > spec.m) throw std::invalid_argument("psi index out of range");
  return i == 0 ? 1 : (spec.ell - 1) * ipow(spec.ell, i - 1);
}

long long GCharacter::degree() const {
  long long d = 0;
  for (int i = 0; i <= spec.m; ++i) d += coeffs[i] * psi_degree(spec, i);
  return d;
}

bool GCharacter::genuine() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c >= 0; });
}

GCharacter zero_g(const CyclicGroupSpec& spec) {
  check_spec(spec);
  return {spec, std::vector<long long>(spec.m + 1, 0)};
}

GCharacter unit_g(const CyclicGroupSpec& spec) {
  GCharacter chi = zero_g(spec);
  chi.coeffs[0] = 1;
  return chi;
}

GCharacter reg(const CyclicGroupSpec& spec) {
  check_spec(spec);
  return {spec, std::vector<long long>(spec.m + 1, 1)};
}

GCharacter aug(const CyclicGroupSpec& spec) {
  GCharacter chi = reg(spec);
  chi.coeffs[0] = 0;
  return chi;
}

GCharacter operator+(const GCharacter& a, const GCharacter& b) {
  require_same_spec(a.spec, b.spec);
  GCharacter out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

GCharacter operator-(const GCharacter& a, const GCharacter& b) {
  require_same_spec(a.spec, b.spec);
  GCharacter out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

GCharacter operator*(long long scalar, const GCharacter& a) {
  GCharacter out = a;
  for (auto& c : out.coeffs) c *= scalar;
  return out;
}

GCharacter induce_unit_from(const CyclicGroupSpec& spec, int j) {
  if (j < 0 || j > spec.m)
    throw std::invalid_argument("subgroup exponent out of range: " + std::to_string(j));
  GCharacter chi = zero_g(spec);
  for (int i = 0; i <= spec.m - j; ++i) chi.coeffs[i] = 1;
  return chi;
}

GCharacter induce_aug_from(const CyclicGroupSpec& spec, int j) {
  return reg(spec) - induce_unit_from(spec, j);
}

GCharacter induce_to(const GCharacter& chi, int m) {
  const int k = chi.spec.m;
  if (m < k) throw std::invalid_argument("cannot induce to a smaller group");
  const CyclicGroupSpec big{chi.spec.ell, m};
  GCharacter out = zero_g(big);
  // Ind psi_0 = sum_{i <= m-k} psi_i; Ind psi_i = psi_{i+m-k} for i >= 1.
  for (int i = 0; i <= m - k; ++i) out.coeffs[i] += chi.coeffs[0];
  for (int i = 1; i <= k; ++i) out.coeffs[i + m - k] += chi.coeffs[i];
  return out;
}

SolveResult solve_multiplicities(const CyclicGroupSpec& spec,
                                 const std::vector<long long>& fixed_dims) {
  check_spec(spec);
  if (static_cast<int>(fixed_dims.size()) != spec.m + 1)
    throw std::invalid_argument("fixed dimension chain must have length m+1");
  SolveResult result{zero_g(spec), true};
  result.character.coeffs[0] = fixed_dims[0];
  for (int k = 1; k <= spec.m; ++k) {
    const long long inc = fixed_dims[k] - fixed_dims[k - 1];
    const long long deg = psi_degree(spec, k);
    if (inc % deg != 0)
      throw std::invalid_argument("inconsistent dimensions: increment " + std::to_string(inc) +
                                  " at level " + std::to_string(k) +
                                  " is not divisible by deg psi = " + std::to_string(deg));
    result.character.coeffs[k] = inc / deg;
  }
  result.genuine = result.character.genuine();
  return result;
}

long long& DGCharacter::at(long row, int i) { return coeffs[row * (spec.m + 1) + i]; }
long long DGCharacter::at(long row, int i) const { return coeffs[row * (spec.m + 1) + i]; }

long long DGCharacter::degree() const {
  long long d = 0;
  for (long r = 0; r < delta_group.order(); ++r)
    for (int i = 0; i <= spec.m; ++i) d += at(r, i) * psi_degree(spec, i);
  return d;
}

bool DGCharacter::genuine() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c >= 0; });
}

DGCharacter zero_dg(const DeltaGroup& dg, const CyclicGroupSpec& spec) {
  check_spec(spec);
  return {dg, spec, std::vector<long long>(dg.order() * (spec.m + 1), 0)};
}

DGCharacter dg_combine(const DeltaCharacter& dchar, const GCharacter& gchar) {
  if (dchar.group.ell != gchar.spec.ell)
    throw std::invalid_argument("ell mismatch between Delta and G characters");
  DGCharacter out = zero_dg(dchar.group, gchar.spec);
  for (long r = 0; r < dchar.group.order(); ++r)
    for (int i = 0; i <= gchar.spec.m; ++i) out.at(r, i) = dchar.coeffs[r] * gchar.coeffs[i];
  return out;
}

DGCharacter operator+(const DGCharacter& a, const DGCharacter& b) {
  if (!(a.delta_group == b.delta_group) || !(a.spec == b.spec))
    throw std::invalid_argument("DG characters live over different groups");
  DGCharacter out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

DGCharacter operator-(const DGCharacter& a, const DGCharacter& b) {
  if (!(a.delta_group == b.delta_group) || !(a.spec == b.spec))
    throw std::invalid_argument("DG characters live over different groups");
  DGCharacter out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

DeltaCharacter dg_degree_g(const DGCharacter& x) {
  DeltaCharacter out = zero_character(x.delta_group);
  for (long r = 0; r < x.delta_group.order(); ++r)
    for (int i = 0; i <= x.spec.m; ++i) out.coeffs[r] += x.at(r, i) * psi_degree(x.spec, i);
  return out;
}

GCharacter dg_degree_delta(const DGCharacter& x) {
  GCharacter out = zero_g(x.spec);
  for (long r = 0; r < x.delta_group.order(); ++r)
    for (int i = 0; i <= x.spec.m; ++i) out.coeffs[i] += x.at(r, i);
  return out;
}

GCharacter dg_row(const DGCharacter& x, long row) {
  GCharacter out = zero_g(x.spec);
  for (int i = 0; i <= x.spec.m; ++i) out.coeffs[i] = x.at(row, i);
  return out;
}

}  // namespace genus
