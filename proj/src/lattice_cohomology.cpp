#include "genus/lattice_cohomology.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace genus {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

IntMat mat_pow(const IntMat& a, long long e) {
  IntMat result = IntMat::identity(a.rows());
  IntMat base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

void swap_rows(IntMat& m, int i, int j) {
  for (int c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

void add_row(IntMat& m, int dst, int src, const BigInt& factor) {
  for (int c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

void add_col(IntMat& m, int dst, int src, const BigInt& factor) {
  for (int r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

void negate_row(IntMat& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

void negate_col(IntMat& m, int j) {
  for (int r = 0; r < m.rows(); ++r) m(r, j) = -m(r, j);
}

// Symmetric residue in (-m/2, m/2].
BigInt balanced_mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

}  // namespace

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const BigInt& x) { return x == 0; });
}

BigInt IntMat::max_abs() const {
  BigInt m = 0;
  for (const auto& x : a_) m = std::max(m, abs_big(x));
  return m;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMat out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int t = 0; t < cols_; ++t) {
      const BigInt& x = (*this)(i, t);
      if (x == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += x * other(t, j);
    }
  return out;
}

IntMat IntMat::operator+(const IntMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  IntMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += other.a_[i];
  return out;
}

IntMat IntMat::operator-(const IntMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  IntMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= other.a_[i];
  return out;
}

SmithForm smith_normal_form(IntMat a) {
  const int m = a.rows();
  const int n = a.cols();
  SmithForm out;
  out.u = IntMat::identity(m);
  out.v = IntMat::identity(n);

  const int bound = std::min(m, n);
  int t = 0;
  for (; t < bound; ++t) {
    // Locate the smallest nonzero entry of the trailing submatrix.
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        BigInt v = abs_big(a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero

    if (pi != t) {
      swap_rows(a, t, pi);
      swap_rows(out.u, t, pi);
    }
    if (pj != t) {
      swap_cols(a, t, pj);
      swap_cols(out.v, t, pj);
    }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        if (q != 0) {
          add_row(a, i, t, -q);
          add_row(out.u, i, t, -q);
        }
        if (a(i, t) != 0) {
          // Remainder becomes the new, strictly smaller pivot.
          swap_rows(a, t, i);
          swap_rows(out.u, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        if (q != 0) {
          add_col(a, j, t, -q);
          add_col(out.v, j, t, -q);
        }
        if (a(t, j) != 0) {
          swap_cols(a, t, j);
          swap_cols(out.v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Pivot divides its row and column; enforce divisibility of the
      // trailing block so the diagonal forms a chain.
      for (int i = t + 1; i < m && clean; ++i)
        for (int j = t + 1; j < n && clean; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, 1);
            add_row(out.u, t, i, 1);
            clean = false;
          }
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(out.u, t);
    }
  }
  out.rank = t;
  out.diag.reserve(t);
  for (int i = 0; i < t; ++i) out.diag.push_back(a(i, i));
  out.d = std::move(a);
  return out;
}

IntMat kernel_basis(const IntMat& a) {
  SmithForm sm = smith_normal_form(a);
  const int n = a.cols();
  const int nullity = n - sm.rank;
  IntMat basis(n, nullity);
  for (int c = 0; c < nullity; ++c)
    for (int r = 0; r < n; ++r) basis(r, c) = sm.v(r, sm.rank + c);
  return basis;
}

int matrix_rank(IntMat a) {
  // Fraction-free (Bareiss) elimination: intermediate entries are minors,
  // so growth stays polynomial in the bit size.
  const int m = a.rows();
  const int n = a.cols();
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int i = rank; i < m; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) swap_rows(a, rank, pivot);
    for (int i = rank + 1; i < m; ++i) {
      for (int j = col + 1; j < n; ++j)
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

namespace {

// Cyclic factors of (Z/mod)^rows / colspan(a mod mod), as a multiset of
// divisors of mod, one per row coordinate. Diagonalization by integer
// row/column operations on balanced residues; entry reduction modulo mod is
// exact arithmetic in (Z/mod)^rows, not a truncation of the lattice.
std::vector<BigInt> cokernel_factors_mod(IntMat a, const BigInt& mod) {
  const int m = a.rows();
  const int n = a.cols();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = balanced_mod(a(i, j), mod);

  const int bound = std::min(m, n);
  int t = 0;
  for (; t < bound; ++t) {
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        BigInt v = abs_big(a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) swap_rows(a, t, pi);
    if (pj != t) swap_cols(a, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        const BigInt q = a(i, t) / a(t, t);
        for (int c = t; c < n; ++c) a(i, c) = balanced_mod(a(i, c) - q * a(t, c), mod);
        if (a(i, t) != 0) {
          swap_rows(a, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        const BigInt q = a(t, j) / a(t, t);
        for (int r = t; r < m; ++r) a(r, j) = balanced_mod(a(r, j) - q * a(r, t), mod);
        if (a(t, j) != 0) {
          swap_cols(a, t, j);
          clean = false;
        }
      }
    }
  }
  // A diagonal matrix presents the cokernel directly; no divisibility
  // normalization is needed since the factors are gcd'd against mod and
  // sorted by the caller.
  std::vector<BigInt> factors;
  factors.reserve(m);
  for (int i = 0; i < t; ++i)
    factors.push_back(boost::multiprecision::gcd(abs_big(a(i, i)), mod));
  for (int i = t; i < m; ++i) factors.push_back(mod);  // pivotless coordinates
  return factors;
}

// Invariant factors (> 1) of the torsion subgroup of coker(b), for a map
// whose cokernel torsion is annihilated by `annihilator`. free_rank is the
// rank of coker(b) over Q; the mod-annihilator cokernel carries exactly
// free_rank extra factors equal to the annihilator on top of the torsion.
std::vector<long> torsion_factors(const IntMat& b, const BigInt& annihilator, int free_rank) {
  std::vector<BigInt> all = cokernel_factors_mod(b, annihilator);
  std::sort(all.begin(), all.end());
  int to_drop = free_rank;
  std::vector<long> factors;
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    if (to_drop > 0 && *it == annihilator) {
      --to_drop;
      continue;
    }
    if (*it > 1) factors.push_back(static_cast<long>(*it));
  }
  if (to_drop != 0)
    throw std::logic_error("torsion computation: free rank does not match the diagonal");
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

namespace {

bool odd_prime(long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GLattice make_lattice(long ell, int k, IntMat sigma) {
  if (!odd_prime(ell)) throw std::invalid_argument("lattice requires an odd prime ell");
  if (k < 0) throw std::invalid_argument("action order exponent must be nonnegative");
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0)
    throw std::invalid_argument("sigma must be square and nonempty");
  if (sigma.rows() > 512) throw std::invalid_argument("lattice rank exceeds 512");
  if (!mat_pow(sigma, ipow(ell, k)).is_identity())
    throw std::invalid_argument("sigma^(ell^k) must be the identity");
  if (k >= 1 && mat_pow(sigma, ipow(ell, k - 1)).is_identity())
    throw std::invalid_argument("sigma has order smaller than ell^k; lower k");
  return GLattice{ell, k, std::move(sigma)};
}

GLattice canonical_lattice(long ell, long alpha, long beta, long gamma) {
  if (alpha < 0 || beta < 0 || gamma < 0)
    throw std::invalid_argument("multiplicities must be nonnegative");
  if (alpha + beta + gamma == 0)
    throw std::invalid_argument("at least one multiplicity must be positive");
  const int n = static_cast<int>(ell * alpha + (ell - 1) * beta + gamma);
  IntMat sigma(n, n);
  int off = 0;
  for (long b = 0; b < alpha; ++b) {
    // Cyclic permutation block of size ell.
    for (long i = 0; i < ell; ++i) sigma(off + (i + 1) % ell, off + i) = 1;
    off += static_cast<int>(ell);
  }
  for (long b = 0; b < beta; ++b) {
    // Companion block of 1 + x + ... + x^(ell-1).
    for (long i = 0; i + 1 < ell - 1; ++i) sigma(off + i + 1, off + i) = 1;
    for (long i = 0; i < ell - 1; ++i) sigma(off + i, off + static_cast<int>(ell) - 2) = -1;
    off += static_cast<int>(ell) - 1;
  }
  for (long b = 0; b < gamma; ++b) {
    sigma(off, off) = 1;
    off += 1;
  }
  const int k = (alpha + beta > 0) ? 1 : 0;
  return make_lattice(ell, k, std::move(sigma));
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (a.ell != b.ell) throw std::invalid_argument("direct sum requires equal ell");
  const int n = a.rank() + b.rank();
  IntMat sigma(n, n);
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) sigma(i, j) = a.sigma(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) sigma(a.rank() + i, a.rank() + j) = b.sigma(i, j);
  return make_lattice(a.ell, std::max(a.k, b.k), std::move(sigma));
}

GLattice disguise(const GLattice& lattice, std::uint64_t seed) {
  const int n = lattice.rank();
  IntMat w = lattice.sigma;
  std::mt19937_64 eng(seed);
  auto draw = [&](long bound) { return static_cast<long>(eng() % bound); };

  const int ops = 2 * n + 4;
  const BigInt soft_limit = BigInt(1) << 24;
  for (int step = 0; step < ops; ++step) {
    const long kind = draw(4);
    if (kind == 0 && n > 1) {
      const int i = static_cast<int>(draw(n));
      int j = static_cast<int>(draw(n - 1));
      if (j >= i) ++j;
      swap_rows(w, i, j);
      swap_cols(w, i, j);
    } else if (kind == 1) {
      const int i = static_cast<int>(draw(n));
      negate_row(w, i);
      negate_col(w, i);
    } else if (n > 1) {
      const int i = static_cast<int>(draw(n));
      int j = static_cast<int>(draw(n - 1));
      if (j >= i) ++j;
      // Conjugation by I + c*E_ji: row j += c*row i, then col i -= c*col j.
      long c = draw(2) == 0 ? 1 : 2;
      if (w.max_abs() > soft_limit) c = 1;
      if (draw(2) == 0) c = -c;
      add_row(w, j, i, BigInt(c));
      add_col(w, i, j, BigInt(-c));
    }
  }
  return GLattice{lattice.ell, lattice.k, std::move(w)};
}

CohomologyResult cohomology(const GLattice& lattice) {
  const int n = lattice.rank();
  const long long group_order = ipow(lattice.ell, std::max(lattice.k, 1));
  const BigInt g = group_order;

  const IntMat shifted = lattice.sigma - IntMat::identity(n);
  const int shifted_rank = matrix_rank(shifted);

  // The algebraic norm, with entries reduced modulo the group order; only
  // residues enter the torsion computation below.
  IntMat nu(n, n);
  IntMat power = IntMat::identity(n);
  for (long long i = 0; i < group_order; ++i) {
    nu = nu + power;
    if (i + 1 < group_order) {
      power = power * lattice.sigma;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) power(r, c) = balanced_mod(power(r, c), g);
    }
  }

  // ker(nu) is the saturation of im(sigma-1) (both span the nontrivial
  // eigencomponents over Q), so H^1 = ker(nu)/im(sigma-1) is the torsion of
  // coker(sigma-1); symmetrically H^2 = ker(sigma-1)/im(nu) is the torsion
  // of coker(nu). Both are annihilated by the group order. rank(nu) equals
  // the fixed rank n - rank(sigma-1).
  CohomologyResult result;
  result.h1_invariant_factors = torsion_factors(shifted, g, n - shifted_rank);
  result.h2_invariant_factors = torsion_factors(nu, g, shifted_rank);

  const auto elementary = [&](const std::vector<long>& fs) {
    return std::all_of(fs.begin(), fs.end(), [&](long f) { return f == lattice.ell; });
  };
  if (elementary(result.h1_invariant_factors) && elementary(result.h2_invariant_factors)) {
    result.h1_dim = static_cast<int>(result.h1_invariant_factors.size());
    result.h2_dim = static_cast<int>(result.h2_invariant_factors.size());
    result.herbrand_q = *result.h2_dim - *result.h1_dim;
  }
  return result;
}

int fixed_rank(const GLattice& lattice) {
  const IntMat shifted = lattice.sigma - IntMat::identity(lattice.rank());
  return lattice.rank() - matrix_rank(shifted);
}

std::vector<long long> fixed_dims_chain(const GLattice& lattice, int m) {
  std::vector<long long> dims;
  dims.reserve(m + 1);
  for (int j = 0; j <= m; ++j) {
    const IntMat p = mat_pow(lattice.sigma, ipow(lattice.ell, j));
    const IntMat shifted = p - IntMat::identity(lattice.rank());
    dims.push_back(lattice.rank() - matrix_rank(shifted));
  }
  return dims;
}

std::vector<long long> fixed_dims_chain(const GLattice& lattice) {
  return fixed_dims_chain(lattice, lattice.k);
}

namespace {

CohomologyResult order_ell_cohomology(const GLattice& lattice) {
  if (lattice.k > 1)
    throw StructureError("operation requires the order-ell regime (k <= 1)");
  CohomologyResult c = cohomology(lattice);
  if (!c.herbrand_q)
    throw StructureError("cohomology is not elementary although k <= 1");
  return c;
}

}  // namespace

Decomposition recover_decomposition(const GLattice& lattice) {
  const CohomologyResult c = order_ell_cohomology(lattice);
  Decomposition d;
  d.gamma = *c.h2_dim;
  d.beta = *c.h1_dim;
  d.alpha = fixed_rank(lattice) - d.gamma;
  if (d.alpha < 0 ||
      lattice.ell * d.alpha + (lattice.ell - 1) * d.beta + d.gamma != lattice.rank())
    throw std::logic_error("decomposition recovery is inconsistent with the rank");
  return d;
}

GCharacter character_of(const GLattice& lattice) {
  const CohomologyResult c = order_ell_cohomology(lattice);
  const CyclicGroupSpec spec{lattice.ell, 1};
  return static_cast<long long>(fixed_rank(lattice)) * reg(spec) -
         static_cast<long long>(*c.herbrand_q) * aug(spec);
}

GCharacter divisible_character_of(const GLattice& lattice) {
  // For X' = (Q_ell/Z_ell) (x) X the cohomology degrees shift by one, so
  // q(X') = -q(X), while the fixed-point corank equals the fixed-point rank
  // of X.
  const CohomologyResult c = order_ell_cohomology(lattice);
  const int q_divisible = *c.h1_dim - *c.h2_dim;
  const CyclicGroupSpec spec{lattice.ell, 1};
  return static_cast<long long>(fixed_rank(lattice)) * reg(spec) +
         static_cast<long long>(q_divisible) * aug(spec);
}

}  // namespace genus
