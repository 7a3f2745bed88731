#include "shorbounds/numtheory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>

#include "shorbounds/error.hpp"

namespace shorbounds::numtheory {

namespace {

constexpr u64 kTrialDivisionBound = 1000;

// Witness set proven sufficient for all n < 2^64 (Sinclair / Feitsma-Galway).
constexpr std::array<u64, 7> kWitnesses = {2, 325, 9375, 28178, 450775, 9780504,
                                           1795265022};

bool miller_rabin_pass(u64 n, u64 d, unsigned s, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle finding with batched gcds. Returns a nontrivial factor of the
// odd composite n, or n if the polynomial constant c happens to fail.
u64 brent_rho(u64 n, u64 c) {
  constexpr u64 kBatch = 128;
  u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
  auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (u64 c = 1;; ++c) {
    const u64 d = brent_rho(n, c);
    if (d != n && d != 1) {
      split_into(d, out);
      split_into(n / d, out);
      return;
    }
  }
}

}  // namespace

u64 PrimePower::value() const {
  u64 v = 1;
  for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

Factorization::Factorization(u64 n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ < 1) throw Error(ErrorCode::domain, "factorization of 0");
  u128 product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& [p, e] = factors_[i];
    if (e == 0 || !is_prime(p))
      throw Error(ErrorCode::domain, "invalid prime power " + std::to_string(p));
    if (i > 0 && factors_[i - 1].p >= p)
      throw Error(ErrorCode::domain, "primes must be strictly ascending");
    for (unsigned j = 0; j < e; ++j) {
      product *= p;
      if (product > n_) throw Error(ErrorCode::domain, "factor product exceeds n");
    }
  }
  if (product != n_) throw Error(ErrorCode::domain, "factor product differs from n");
}

bool Factorization::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.e == 1; });
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u128 v = static_cast<u128>(a / gcd(a, b)) * b;
  if (v > UINT64_MAX) throw Error(ErrorCode::overflow, "lcm exceeds 64 bits");
  return static_cast<u64>(v);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(u64 a, u64 exp, u64 m) {
  if (m < 2) throw Error(ErrorCode::domain, "modulus must be at least 2");
  u64 base = a % m;
  u64 result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  const unsigned s = static_cast<unsigned>(std::countr_zero(n - 1));
  const u64 d = (n - 1) >> s;
  return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                     [&](u64 a) { return miller_rabin_pass(n, d, s, a); });
}

Factorization factorize(u64 n) {
  if (n < 2) throw Error(ErrorCode::domain, "factorize requires n >= 2");
  std::map<u64, unsigned> found;
  u64 rest = n;
  for (u64 p = 2; p <= kTrialDivisionBound && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++found[p];
      rest /= p;
    }
  }
  split_into(rest, found);

  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (const auto& [p, e] : found) factors.push_back({p, e});
  return Factorization(n, std::move(factors));
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& pp : f.factors()) phi *= (pp.value() / pp.p) * (pp.p - 1);
  return phi;
}

u64 euler_phi(u64 n) {
  if (n == 1) return 1;
  return euler_phi(factorize(n));
}

Factorization totient_factorization(const Factorization& m) {
  std::map<u64, unsigned> merged;
  for (const auto& pp : m.factors()) {
    if (pp.e > 1) merged[pp.p] += pp.e - 1;
    if (pp.p > 2) {
      const auto below = factorize(pp.p - 1);
      for (const auto& q : below.factors()) merged[q.p] += q.e;
    }
  }
  std::vector<PrimePower> factors;
  for (const auto& [p, e] : merged) factors.push_back({p, e});
  return Factorization(euler_phi(m), std::move(factors));
}

u64 multiplicative_order(u64 a, u64 m, const Factorization& phi_factors) {
  if (m < 2) throw Error(ErrorCode::domain, "modulus must be at least 2");
  a %= m;
  if (gcd(a, m) != 1)
    throw Error(ErrorCode::not_a_unit,
                std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  u64 r = phi_factors.n();
  for (const auto& pp : phi_factors.factors()) {
    for (unsigned i = 0; i < pp.e && mod_pow(a, r / pp.p, m) == 1; ++i) r /= pp.p;
  }
  return r;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m < 2) throw Error(ErrorCode::domain, "modulus must be at least 2");
  return multiplicative_order(a, m, totient_factorization(factorize(m)));
}

OrderDecomposition v2_split(u64 m) {
  if (m == 0) throw Error(ErrorCode::domain, "v2_split of 0");
  const auto t = static_cast<unsigned>(std::countr_zero(m));
  return {m, t, m >> t};
}

}  // namespace shorbounds::numtheory
