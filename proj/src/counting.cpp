#include "shorbounds/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "shorbounds/error.hpp"

namespace shorbounds::counting {

using numtheory::Factorization;
using numtheory::u128;

namespace {

constexpr std::uint8_t kNotUnit = 0xff;

void check_cap(u64 size, u64 cap) {
  if (size > cap)
    throw Error(ErrorCode::enumeration_too_large,
                "enumeration of " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
}

// v2 of the multiplicative order of every residue modulo q = p^e.
std::vector<std::uint8_t> valuation_table(const numtheory::PrimePower& pp) {
  const u64 q = pp.value();
  const Factorization phi = numtheory::totient_factorization(Factorization(q, {pp}));
  std::vector<std::uint8_t> table(q, kNotUnit);
  for (u64 x = 1; x < q; ++x) {
    if (x % pp.p == 0) continue;
    table[x] = static_cast<std::uint8_t>(
        numtheory::v2_split(numtheory::multiplicative_order(x, q, phi)).t);
  }
  return table;
}

struct Component {
  u64 modulus;
  std::vector<std::uint8_t> table;
};

EqualValuationCount count_range(const std::vector<Component>& parts, u64 lo, u64 hi) {
  std::vector<u64> residue(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) residue[i] = lo % parts[i].modulus;

  EqualValuationCount out;
  for (u64 a = lo; a < hi; ++a) {
    bool unit = true;
    bool equal = true;
    const std::uint8_t first = parts[0].table[residue[0]];
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::uint8_t t = parts[i].table[residue[i]];
      if (t == kNotUnit) unit = false;
      if (t != first) equal = false;
      if (++residue[i] == parts[i].modulus) residue[i] = 0;
    }
    if (unit) {
      ++out.total;
      if (equal) ++out.count;
    }
  }
  return out;
}

}  // namespace

OddPrimeProfile OddPrimeProfile::of(u64 p, unsigned e) {
  if (p < 3 || !numtheory::is_prime(p))
    throw Error(ErrorCode::domain, std::to_string(p) + " is not an odd prime");
  if (e == 0) throw Error(ErrorCode::domain, "exponent must be positive");
  const auto split = numtheory::v2_split(p - 1);
  return {p, e, split.t, split.s};
}

TauProfile::TauProfile(std::vector<unsigned> taus) : taus_(std::move(taus)) {
  if (taus_.size() < 2) throw Error(ErrorCode::prime_power_unsupported, "need k >= 2");
  if (std::find(taus_.begin(), taus_.end(), 0u) != taus_.end())
    throw Error(ErrorCode::domain, "every tau must be at least 1");
  tau_min_ = *std::min_element(taus_.begin(), taus_.end());
  tau_sum_ = std::accumulate(taus_.begin(), taus_.end(), 0u);
}

bool TauProfile::all_ones() const {
  return std::all_of(taus_.begin(), taus_.end(), [](unsigned t) { return t == 1; });
}

TauProfile GroupProfile::tau_profile() const {
  std::vector<unsigned> taus;
  taus.reserve(profiles.size());
  for (const auto& pr : profiles) taus.push_back(pr.tau);
  return TauProfile(std::move(taus));
}

GroupProfile profile_group(const Factorization& f) {
  const u64 n = f.n();
  if (n % 2 == 0)
    throw Error(ErrorCode::unsupported_even_modulus,
                "even modulus " + std::to_string(n) + " is unsupported");
  if (f.distinct_primes() < 2)
    throw Error(ErrorCode::prime_power_unsupported,
                std::to_string(n) + " has fewer than two distinct prime factors");

  GroupProfile g;
  g.n = n;
  g.squarefree = f.squarefree();
  for (const auto& pp : f.factors()) g.profiles.push_back(OddPrimeProfile::of(pp.p, pp.e));
  const auto taus = g.tau_profile();
  g.tau_min = taus.tau_min();
  g.tau_sum = taus.tau_sum();
  return g;
}

u64 count_odd_order_mod_p(const OddPrimeProfile& profile) { return profile.sigma; }

u64 count_valuation_mod_p(const OddPrimeProfile& profile, int t) {
  if (t < 0 || t > static_cast<int>(profile.tau))
    throw Error(ErrorCode::out_of_range, "t = " + std::to_string(t) + " outside [0, " +
                                             std::to_string(profile.tau) + "]");
  if (t == 0) return profile.sigma;
  return (u64{1} << (t - 1)) * profile.sigma;
}

ValuationCensus census_mod_p_bruteforce(u64 p, u64 cap) {
  if (p < 3 || !numtheory::is_prime(p))
    throw Error(ErrorCode::domain, std::to_string(p) + " is not an odd prime");
  check_cap(p, cap);
  const Factorization phi = numtheory::factorize(p - 1);
  ValuationCensus census;
  for (u64 a = 1; a < p; ++a)
    ++census[numtheory::v2_split(numtheory::multiplicative_order(a, p, phi)).t];
  return census;
}

ExactRational fraction_equal_valuation(const TauProfile& taus) {
  using Integer = ExactRational::Integer;
  const unsigned k = taus.k();
  const Integer two_k = Integer(1) << k;
  const Integer numerator = two_k - 2 + (Integer(1) << (k * taus.tau_min()));
  const Integer denominator = (two_k - 1) << taus.tau_sum();
  return ExactRational(numerator, denominator);
}

ExactRational fraction_equal_valuation(const GroupProfile& g) {
  return fraction_equal_valuation(g.tau_profile());
}

u64 count_equal_valuation(const GroupProfile& g) {
  if (!g.squarefree)
    throw Error(ErrorCode::not_squarefree,
                std::to_string(g.n) + " is not squarefree; use the general count");
  const unsigned k = g.k();
  u128 sigma_product = 1;
  for (const auto& pr : g.profiles) sigma_product *= pr.sigma;
  // 2^(k tau') <= 2^(tau~) <= n, so everything fits in 128 bits.
  const u128 numerator =
      ((u128{1} << k) - 2 + (u128{1} << (k * g.tau_min))) * sigma_product;
  const u128 divisor = (u128{1} << k) - 1;
  if (numerator % divisor != 0)
    throw std::logic_error("equal-valuation count is not an integer");
  return static_cast<u64>(numerator / divisor);
}

u64 count_equal_valuation_general(const GroupProfile& g) {
  const ExactRational phi(ExactRational::Integer(numtheory::euler_phi(g.n)),
                          ExactRational::Integer(1));
  const ExactRational count = fraction_equal_valuation(g) * phi;
  if (count.denominator() != 1)
    throw std::logic_error("equal-valuation count is not an integer");
  return count.numerator().convert_to<u64>();
}

ExactRational EqualValuationCount::fraction() const {
  if (total == 0) throw Error(ErrorCode::insufficient_data, "empty unit group");
  return ExactRational(ExactRational::Integer(count), ExactRational::Integer(total));
}

EqualValuationCount equal_valuation_bruteforce(u64 n, u64 cap, unsigned workers) {
  const Factorization f = numtheory::factorize(n);
  profile_group(f);
  check_cap(n, cap);

  std::vector<Component> parts;
  for (const auto& pp : f.factors()) parts.push_back({pp.value(), valuation_table(pp)});

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n / 1024 + 1)));
  if (workers == 1) return count_range(parts, 1, n);

  std::vector<EqualValuationCount> partial(workers);
  std::vector<std::thread> pool;
  const u64 span = (n - 1 + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const u64 lo = 1 + w * span;
    const u64 hi = std::min(n, lo + span);
    pool.emplace_back([&, w, lo, hi] {
      if (lo < hi) partial[w] = count_range(parts, lo, hi);
    });
  }
  for (auto& t : pool) t.join();

  EqualValuationCount total;
  for (const auto& p : partial) {
    total.count += p.count;
    total.total += p.total;
  }
  return total;
}

}  // namespace shorbounds::counting
