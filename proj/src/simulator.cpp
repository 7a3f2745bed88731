#include "shorbounds/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "shorbounds/counting.hpp"
#include "shorbounds/error.hpp"

namespace shorbounds::simulator {

namespace {

u64 splitmix64(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

TrialTally run_block(const Modulus& m, u64 seed, u64 block, u64 count, OrderMode mode) {
  Rng rng = Rng::substream(seed, block);
  TrialTally t;
  for (u64 i = 0; i < count; ++i) t.add(run_trial(m, mode, rng));
  return t;
}

}  // namespace

std::string_view order_mode_name(OrderMode mode) {
  return mode == OrderMode::exact ? "exact" : "sampled";
}

OrderMode parse_order_mode(std::string_view text) {
  if (text == "exact") return OrderMode::exact;
  if (text == "sampled") return OrderMode::sampled;
  throw Error(ErrorCode::usage, "unknown order mode '" + std::string(text) + "'");
}

Rng::Rng(u64 seed) {
  u64 state = seed;
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state))};
  engine_.seed(seq);
}

Rng Rng::substream(u64 master_seed, u64 index) {
  u64 state = master_seed;
  const u64 mixed = splitmix64(state) ^ (index * 0xd1b54a32d192ed03ULL);
  state = mixed;
  return Rng(splitmix64(state));
}

u64 Rng::below(u64 bound) {
  if (bound == 0) throw Error(ErrorCode::domain, "empty range");
  // Largest multiple of bound that fits; reject the tail.
  const u64 limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    const u64 x = engine_();
    if (x <= limit) return x % bound;
  }
}

void TrialTally::add(const TrialOutcome& o) {
  ++trials;
  if (o.gcd_hit) {
    ++lucky;
    return;
  }
  ++a_coprime;
  if (!o.a_r_success) return;
  ++a_r_ok;
  if (!o.order_even.value_or(false)) return;
  ++even_order;
  if (o.nontrivial_split.value_or(false)) ++success;
}

TrialTally& TrialTally::operator+=(const TrialTally& o) {
  trials += o.trials;
  a_coprime += o.a_coprime;
  a_r_ok += o.a_r_ok;
  even_order += o.even_order;
  success += o.success;
  lucky += o.lucky;
  return *this;
}

bool TrialTally::chain_holds() const {
  return success <= even_order && even_order <= a_r_ok && a_r_ok <= a_coprime &&
         a_coprime <= trials && a_coprime + lucky == trials;
}

Modulus::Modulus(u64 n) : n_(n) {
  if (n < 3) throw Error(ErrorCode::domain, "modulus must be an odd composite");
  const auto f = numtheory::factorize(n);
  counting::profile_group(f);
  phi_factors_ = numtheory::totient_factorization(f);
}

u64 Modulus::order_of(u64 a) const { return numtheory::multiplicative_order(a, n_, phi_factors_); }

TrialOutcome run_trial_with_base(const Modulus& m, u64 a, OrderMode mode, Rng& rng) {
  const u64 n = m.n();
  if (a == 0 || a >= n) throw Error(ErrorCode::domain, "base must lie in [1, n)");
  TrialOutcome out;
  out.a = a;

  const u64 g = numtheory::gcd(a, n);
  if (g != 1) {
    out.gcd_hit = true;
    out.lucky_factor = g;
    return out;
  }

  const u64 r = m.order_of(a);
  out.order = r;
  out.a_r_success = mode == OrderMode::exact || numtheory::gcd(rng.below(r), r) == 1;
  if (!out.a_r_success) return out;

  out.order_even = r % 2 == 0;
  if (!*out.order_even) return out;

  const u64 half = numtheory::mod_pow(a, r / 2, n);
  const u64 plus = numtheory::gcd(half + 1 == n ? 0 : half + 1, n);
  const u64 minus = numtheory::gcd(half - 1, n);
  const bool proper = plus > 1 && plus < n && minus > 1 && minus < n;
  out.nontrivial_split = proper;
  if (proper) out.factors_found = std::pair{plus, minus};
  return out;
}

TrialOutcome run_trial(const Modulus& m, OrderMode mode, Rng& rng) {
  const u64 a = 1 + rng.below(m.n() - 1);
  return run_trial_with_base(m, a, mode, rng);
}

TrialTally run_trials(u64 n, u64 trials, u64 seed, OrderMode mode, unsigned workers) {
  if (trials == 0) throw Error(ErrorCode::domain, "trials must be at least 1");
  const Modulus m(n);
  const u64 blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  auto block_size = [&](u64 b) {
    return b + 1 == blocks ? trials - b * kTrialsPerBlock : kTrialsPerBlock;
  };

  workers = static_cast<unsigned>(std::clamp<u64>(workers, 1, blocks));
  std::vector<TrialTally> partial(workers);
  auto work = [&](unsigned w) {
    for (u64 b = w; b < blocks; b += workers) partial[w] += run_block(m, seed, b, block_size(b), mode);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  TrialTally total;
  for (const auto& p : partial) total += p;
  total.seed = seed;
  return total;
}

TrialTally run_exhaustive(u64 n) {
  const Modulus m(n);
  Rng unused(0);
  TrialTally t;
  for (u64 a = 1; a < n; ++a) t.add(run_trial_with_base(m, a, OrderMode::exact, unused));
  return t;
}

ConditionalEstimate conditional_estimate(const TrialTally& t) {
  if (t.a_r_ok == 0)
    throw Error(ErrorCode::insufficient_data, "no trial reached a recovered order");
  const double denom = static_cast<double>(t.a_r_ok);
  const double p = static_cast<double>(t.success) / denom;
  return {p, std::sqrt(p * (1.0 - p) / denom)};
}

}  // namespace shorbounds::simulator
