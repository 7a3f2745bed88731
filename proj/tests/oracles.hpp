// Slow, obviously-correct reference computations used only by tests. Nothing
// here calls into the library, so agreement is a genuine cross-check.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 coprime_count(u64 n) {
  u64 c = 0;
  for (u64 a = 1; a <= n; ++a) c += std::gcd(a, n) == 1;
  return c;
}

/// Multiply by a until reaching 1.
inline u64 naive_order(u64 a, u64 m) {
  a %= m;
  u64 x = a, r = 1;
  while (x != 1) {
    x = x * a % m;
    ++r;
  }
  return r;
}

inline unsigned v2(u64 x) {
  unsigned t = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++t;
  }
  return t;
}

/// Per-prime-power valuations compared directly; small n only.
inline std::pair<u64, u64> equal_valuation(u64 n) {
  std::vector<u64> moduli;
  for (auto [p, e] : trial_factor(n)) {
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    moduli.push_back(q);
  }
  u64 count = 0, total = 0;
  for (u64 a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    ++total;
    bool equal = true;
    const unsigned first = v2(naive_order(a, moduli[0]));
    for (std::size_t i = 1; i < moduli.size(); ++i)
      equal = equal && v2(naive_order(a, moduli[i])) == first;
    count += equal;
  }
  return {count, total};
}

/// Shor's classical step run literally: r even and a^(r/2) != -1 mod n.
inline std::pair<u64, u64> splitting_bases(u64 n) {
  u64 good = 0, coprime = 0;
  for (u64 a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    ++coprime;
    const u64 r = naive_order(a, n);
    if (r % 2 != 0) continue;
    u64 half = 1;
    for (u64 i = 0; i < r / 2; ++i) half = half * a % n;
    good += half != n - 1;
  }
  return {good, coprime};
}

inline std::map<unsigned, u64> census(u64 p) {
  std::map<unsigned, u64> out;
  for (u64 a = 1; a < p; ++a) ++out[v2(naive_order(a, p))];
  return out;
}

}  // namespace oracle
