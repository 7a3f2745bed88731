#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "shorbounds/numtheory.hpp"
#include "shorbounds/rational.hpp"

namespace shorbounds::counting {

using numtheory::u64;

inline constexpr u64 kDefaultEnumerationCap = 1'000'000;

/// p - 1 = 2^tau * sigma for an odd prime p appearing with exponent e.
struct OddPrimeProfile {
  u64 p = 0;
  unsigned e = 1;
  unsigned tau = 0;
  u64 sigma = 0;

  static OddPrimeProfile of(u64 p, unsigned e = 1);
  bool operator==(const OddPrimeProfile&) const = default;
};

/// The 2-exponents tau_i alone. Every closed form depends on nothing else,
/// so sweeps over hypothetical moduli work directly on this.
class TauProfile {
 public:
  explicit TauProfile(std::vector<unsigned> taus);

  std::span<const unsigned> taus() const { return taus_; }
  unsigned k() const { return static_cast<unsigned>(taus_.size()); }
  unsigned tau_min() const { return tau_min_; }
  unsigned tau_sum() const { return tau_sum_; }
  bool all_ones() const;

 private:
  std::vector<unsigned> taus_;
  unsigned tau_min_ = 0;
  unsigned tau_sum_ = 0;
};

struct GroupProfile {
  u64 n = 0;
  std::vector<OddPrimeProfile> profiles;
  unsigned tau_min = 0;
  unsigned tau_sum = 0;
  bool squarefree = true;

  unsigned k() const { return static_cast<unsigned>(profiles.size()); }
  TauProfile tau_profile() const;
};

/// t -> number of units whose order has 2-adic valuation t.
using ValuationCensus = std::map<unsigned, u64>;

/// Rejects even n and prime powers with distinct error codes.
GroupProfile profile_group(const numtheory::Factorization& f);

u64 count_odd_order_mod_p(const OddPrimeProfile& profile);
/// sigma for t = 0, 2^(t-1) sigma for 1 <= t <= tau.
u64 count_valuation_mod_p(const OddPrimeProfile& profile, int t);

/// Direct enumeration of (Z/pZ)^x.
ValuationCensus census_mod_p_bruteforce(u64 p, u64 cap = kDefaultEnumerationCap);

/// Units of (Z/nZ)^x whose per-prime order valuations all coincide.
/// Squarefree moduli only; the division by 2^k - 1 is checked to be exact.
u64 count_equal_valuation(const GroupProfile& g);
/// fraction_equal_valuation * phi(n); valid for any odd n with k >= 2.
u64 count_equal_valuation_general(const GroupProfile& g);

/// (2^k - 2 + 2^(k tau')) / ((2^k - 1) 2^(tau~)).
ExactRational fraction_equal_valuation(const TauProfile& taus);
ExactRational fraction_equal_valuation(const GroupProfile& g);

struct EqualValuationCount {
  u64 count = 0;
  u64 total = 0;

  ExactRational fraction() const;
  bool operator==(const EqualValuationCount&) const = default;
};

/// Enumerates every a in [1, n) coprime to n and compares v2(ord a mod p_i^e_i)
/// across all i. `workers` > 1 splits the range into contiguous shards; the
/// result does not depend on the worker count.
EqualValuationCount equal_valuation_bruteforce(u64 n, u64 cap = kDefaultEnumerationCap,
                                               unsigned workers = 1);

}  // namespace shorbounds::counting
