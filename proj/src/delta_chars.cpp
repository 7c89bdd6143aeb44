#include "genus/delta_chars.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace genus {

namespace {

bool is_odd_prime(long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_same_group(const DeltaCharacter& a, const DeltaCharacter& b) {
  if (!(a.group == b.group))
    throw std::invalid_argument("delta characters live over different groups");
}

}  // namespace

long DeltaGroup::order() const {
  long n = 1;
  for (long d : divisors) n *= d;
  return n;
}

DeltaElement DeltaGroup::reduce(DeltaElement x) const {
  if (x.size() != divisors.size())
    throw std::invalid_argument("element arity does not match the group");
  for (size_t i = 0; i < x.size(); ++i) {
    const long d = divisors[i];
    x[i] = ((x[i] % d) + d) % d;
  }
  return x;
}

DeltaElement DeltaGroup::add(const DeltaElement& a, const DeltaElement& b) const {
  DeltaElement out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

DeltaElement DeltaGroup::neg(const DeltaElement& a) const {
  DeltaElement out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return reduce(std::move(out));
}

bool DeltaGroup::is_identity(const DeltaElement& a) const {
  return std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
}

long DeltaGroup::element_order(const DeltaElement& a) const {
  long ord = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    const long d = divisors[i];
    const long r = ((a[i] % d) + d) % d;
    if (r != 0) ord = std::lcm(ord, d / std::gcd(d, r));
  }
  return ord;
}

long DeltaGroup::index_of(const std::vector<long>& exps) const {
  if (exps.size() != divisors.size())
    throw std::invalid_argument("exponent tuple arity does not match the group");
  long idx = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    const long d = divisors[i];
    const long e = ((exps[i] % d) + d) % d;
    idx = idx * d + e;
  }
  return idx;
}

std::vector<long> DeltaGroup::exps_of(long index) const {
  std::vector<long> exps(divisors.size(), 0);
  for (size_t i = divisors.size(); i-- > 0;) {
    exps[i] = index % divisors[i];
    index /= divisors[i];
  }
  return exps;
}

long DeltaGroup::pairing_numerator(const std::vector<long>& chi, const DeltaElement& x) const {
  if (chi.size() != divisors.size() || x.size() != divisors.size())
    throw std::invalid_argument("tuple arity does not match the group");
  long m = 1;
  for (long d : divisors) m = std::lcm(m, d);
  long t = 0;
  for (size_t i = 0; i < divisors.size(); ++i) {
    const long d = divisors[i];
    const long ci = ((chi[i] % d) + d) % d;
    const long xi = ((x[i] % d) + d) % d;
    t = (t + ci * xi % m * (m / d)) % m;
  }
  return t;
}

bool DeltaGroup::char_trivial_at(const std::vector<long>& chi, const DeltaElement& x) const {
  return pairing_numerator(chi, x) == 0;
}

int DeltaGroup::char_sign_at_tau(const std::vector<long>& chi) const {
  return char_trivial_at(chi, tau_bar) ? 1 : -1;
}

ValidationReport DeltaGroup::validate(long max_order) const {
  ValidationReport report;
  if (!is_odd_prime(ell))
    report.error("ELL_ODD_PRIME", "ell must be an odd prime, got " + std::to_string(ell));
  if (divisors.empty()) report.error("DIVISOR_RANGE", "at least one elementary divisor required");
  for (long d : divisors) {
    if (d < 1) {
      report.error("DIVISOR_RANGE", "elementary divisors must be positive");
      return report;
    }
    if (is_odd_prime(ell) && (ell - 1) % d != 0)
      report.error("DIVISOR_DIVIDES",
                   "divisor " + std::to_string(d) + " does not divide ell-1");
  }
  if (order() > max_order)
    report.error("GROUP_ORDER_BOUND", "group order " + std::to_string(order()) +
                                          " exceeds the enumeration bound " +
                                          std::to_string(max_order));
  if (tau_bar.size() != divisors.size() || omega.size() != divisors.size()) {
    report.error("TUPLE_ARITY", "tau_bar/omega arity must match the divisor list");
    return report;
  }
  const DeltaElement tau = reduce(tau_bar);
  if (element_order(tau) != 2)
    report.error("TAU_ORDER", "tau_bar must have order exactly 2");
  try {
    DeltaSubgroup dp(*this, delta_prime_gens);
    if (2 * dp.size() != order())
      report.error("DPRIME_INDEX", "delta_prime must have index 2");
    if (dp.contains(tau)) report.error("TAU_IN_DPRIME", "tau_bar must lie outside delta_prime");
  } catch (const std::invalid_argument& e) {
    report.error("DPRIME_GENS", e.what());
  }
  if (char_sign_at_tau(omega) != -1)
    report.error("OMEGA_PARITY", "omega(tau_bar) must be -1");
  return report;
}

DeltaSubgroup::DeltaSubgroup(const DeltaGroup& group, std::vector<DeltaElement> generators)
    : divisors_(group.divisors), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    if (g.size() != divisors_.size())
      throw std::invalid_argument("subgroup generator arity does not match the group");
    g = group.reduce(g);
  }
  std::set<DeltaElement> seen;
  seen.insert(DeltaElement(divisors_.size(), 0));
  std::vector<DeltaElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<DeltaElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens_) {
        DeltaElement y = group.add(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
    if (static_cast<long>(seen.size()) > group.order())
      throw std::invalid_argument("subgroup closure exceeded the group order");
  }
  elements_.assign(seen.begin(), seen.end());
}

bool DeltaSubgroup::contains(const DeltaElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool DeltaSubgroup::subset_of(const DeltaSubgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const DeltaElement& x) { return other.contains(x); });
}

long long DeltaCharacter::degree() const {
  long long d = 0;
  for (long long c : coeffs) d += c;
  return d;
}

bool DeltaCharacter::genuine() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c >= 0; });
}

bool DeltaCharacter::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

DeltaCharacter zero_character(const DeltaGroup& g) {
  return {g, std::vector<long long>(g.order(), 0)};
}

DeltaCharacter trivial_character(const DeltaGroup& g) {
  DeltaCharacter chi = zero_character(g);
  chi.coeffs[g.index_of(std::vector<long>(g.rank(), 0))] = 1;
  return chi;
}

DeltaCharacter omega_character(const DeltaGroup& g) {
  DeltaCharacter chi = zero_character(g);
  chi.coeffs[g.index_of(g.omega)] = 1;
  return chi;
}

DeltaCharacter irreducible_character(const DeltaGroup& g, long index) {
  if (index < 0 || index >= g.order()) throw std::invalid_argument("irreducible index out of range");
  DeltaCharacter chi = zero_character(g);
  chi.coeffs[index] = 1;
  return chi;
}

DeltaCharacter operator+(const DeltaCharacter& a, const DeltaCharacter& b) {
  require_same_group(a, b);
  DeltaCharacter out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

DeltaCharacter operator-(const DeltaCharacter& a, const DeltaCharacter& b) {
  require_same_group(a, b);
  DeltaCharacter out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

DeltaCharacter operator-(const DeltaCharacter& a) {
  DeltaCharacter out = a;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

DeltaCharacter operator*(long long scalar, const DeltaCharacter& a) {
  DeltaCharacter out = a;
  for (auto& c : out.coeffs) c *= scalar;
  return out;
}

std::vector<DeltaCharacter> irreducibles(const DeltaGroup& g) {
  std::vector<DeltaCharacter> out;
  out.reserve(g.order());
  for (long i = 0; i < g.order(); ++i) out.push_back(irreducible_character(g, i));
  return out;
}

DeltaCharacter induce_unit(const DeltaGroup& g, const DeltaSubgroup& h) {
  DeltaCharacter chi = zero_character(g);
  for (long i = 0; i < g.order(); ++i) {
    const auto exps = g.exps_of(i);
    bool trivial = true;
    for (const auto& gen : h.generators()) {
      if (!g.char_trivial_at(exps, gen)) {
        trivial = false;
        break;
      }
    }
    if (trivial) chi.coeffs[i] = 1;
  }
  return chi;
}

DeltaCharacter mirror(const DeltaCharacter& chi) {
  const DeltaGroup& g = chi.group;
  DeltaCharacter out = zero_character(g);
  for (long i = 0; i < g.order(); ++i) {
    if (chi.coeffs[i] == 0) continue;
    auto exps = g.exps_of(i);
    std::vector<long> target(exps.size());
    for (size_t t = 0; t < exps.size(); ++t) target[t] = g.omega[t] - exps[t];
    out.coeffs[g.index_of(target)] += chi.coeffs[i];
  }
  return out;
}

std::pair<DeltaCharacter, DeltaCharacter> split_real_imag(const DeltaCharacter& chi) {
  const DeltaGroup& g = chi.group;
  DeltaCharacter real = zero_character(g);
  DeltaCharacter imag = zero_character(g);
  for (long i = 0; i < g.order(); ++i) {
    if (g.char_sign_at_tau(g.exps_of(i)) == 1)
      real.coeffs[i] = chi.coeffs[i];
    else
      imag.coeffs[i] = chi.coeffs[i];
  }
  return {real, imag};
}

DeltaCharacter real_part(const DeltaCharacter& chi) { return split_real_imag(chi).first; }
DeltaCharacter imag_part(const DeltaCharacter& chi) { return split_real_imag(chi).second; }

DeltaCharacter join(const DeltaCharacter& a, const DeltaCharacter& b) {
  require_same_group(a, b);
  DeltaCharacter out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = std::max(a.coeffs[i], b.coeffs[i]);
  return out;
}

long long inner(const DeltaCharacter& a, const DeltaCharacter& b) {
  require_same_group(a, b);
  long long s = 0;
  for (size_t i = 0; i < a.coeffs.size(); ++i) s += a.coeffs[i] * b.coeffs[i];
  return s;
}

DeltaCharacter project_trivial_on(const DeltaCharacter& chi, const DeltaSubgroup& h) {
  const DeltaGroup& g = chi.group;
  DeltaCharacter out = zero_character(g);
  for (long i = 0; i < g.order(); ++i) {
    if (chi.coeffs[i] == 0) continue;
    const auto exps = g.exps_of(i);
    bool trivial = true;
    for (const auto& gen : h.generators()) {
      if (!g.char_trivial_at(exps, gen)) {
        trivial = false;
        break;
      }
    }
    if (trivial) out.coeffs[i] = chi.coeffs[i];
  }
  return out;
}

DeltaCharacter twist(const DeltaCharacter& chi, const std::vector<long>& exps) {
  const DeltaGroup& g = chi.group;
  if (exps.size() != g.divisors.size())
    throw std::invalid_argument("twist exponent arity does not match the group");
  DeltaCharacter out = zero_character(g);
  for (long i = 0; i < g.order(); ++i) {
    if (chi.coeffs[i] == 0) continue;
    auto e = g.exps_of(i);
    std::vector<long> target(e.size());
    for (size_t t = 0; t < e.size(); ++t) target[t] = e[t] + exps[t];
    out.coeffs[g.index_of(target)] += chi.coeffs[i];
  }
  return out;
}

DeltaCharacter twist_omega(const DeltaCharacter& chi) { return twist(chi, chi.group.omega); }

std::string exponent_tuple_key(const std::vector<long>& exps) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) os << ',';
    os << exps[i];
  }
  os << ')';
  return os.str();
}

}  // namespace genus
