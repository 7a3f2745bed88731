#pragma once

#include <cstdint>
#include <vector>

namespace shorbounds::numtheory {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 p = 0;
  unsigned e = 0;

  u64 value() const;
  bool operator==(const PrimePower&) const = default;
};

/// n together with its prime factorization, primes strictly ascending.
class Factorization {
 public:
  Factorization() = default;

  /// Validates the factor list against n; throws Error(domain) when the
  /// product, ordering, or primality invariants fail.
  Factorization(u64 n, std::vector<PrimePower> factors);

  u64 n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t distinct_primes() const { return factors_.size(); }
  bool squarefree() const;

  bool operator==(const Factorization&) const = default;

 private:
  u64 n_ = 0;
  std::vector<PrimePower> factors_;
};

/// r = 2^t * s with s odd.
struct OrderDecomposition {
  u64 r = 0;
  unsigned t = 0;
  u64 s = 0;

  bool operator==(const OrderDecomposition&) const = default;
};

u64 gcd(u64 a, u64 b);
/// Throws Error(overflow) if the result does not fit in 64 bits.
u64 lcm(u64 a, u64 b);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 mod_pow(u64 a, u64 exp, u64 m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 n);

/// Trial division to a small bound, then Brent's variant of Pollard rho.
Factorization factorize(u64 n);

u64 euler_phi(const Factorization& f);
u64 euler_phi(u64 n);

/// Factorization of phi(m) assembled from the factorization of m.
Factorization totient_factorization(const Factorization& m);

/// Least r >= 1 with a^r = 1 (mod m), found by stripping prime factors from
/// phi(m) while the reduced exponent still annihilates a.
u64 multiplicative_order(u64 a, u64 m, const Factorization& phi_factors);
u64 multiplicative_order(u64 a, u64 m);

OrderDecomposition v2_split(u64 m);

}  // namespace shorbounds::numtheory
