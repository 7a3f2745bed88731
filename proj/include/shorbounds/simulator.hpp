#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>

#include "shorbounds/numtheory.hpp"

namespace shorbounds::simulator {

using numtheory::u64;

/// How the quantum order-finding step is modelled.
///  exact:   the true order is always recovered.
///  sampled: a measurement d is uniform on [0, r) and the order is recovered
///           iff gcd(d, r) = 1.
enum class OrderMode { exact, sampled };

std::string_view order_mode_name(OrderMode mode);
OrderMode parse_order_mode(std::string_view text);

/// mt19937_64 seeded through SplitMix64. Bounded draws use rejection on the
/// raw 64-bit output so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(u64 seed);

  /// Independent stream for shard `index` of the master seed.
  static Rng substream(u64 master_seed, u64 index);

  u64 next() { return engine_(); }
  /// Uniform on [0, bound); bound > 0.
  u64 below(u64 bound);

 private:
  std::mt19937_64 engine_;
};

struct TrialOutcome {
  u64 a = 0;
  bool gcd_hit = false;
  std::optional<u64> lucky_factor;
  bool a_r_success = false;
  std::optional<u64> order;
  std::optional<bool> order_even;
  std::optional<bool> nontrivial_split;
  std::optional<std::pair<u64, u64>> factors_found;
};

struct TrialTally {
  u64 trials = 0;
  u64 a_coprime = 0;
  u64 a_r_ok = 0;
  u64 even_order = 0;
  u64 success = 0;
  u64 lucky = 0;
  u64 seed = 0;

  void add(const TrialOutcome& outcome);
  TrialTally& operator+=(const TrialTally& other);
  bool chain_holds() const;
  bool operator==(const TrialTally&) const = default;
};

/// Per-modulus state reused across trials: factorization of n and of phi(n).
class Modulus {
 public:
  /// Requires odd n with at least two distinct prime factors.
  explicit Modulus(u64 n);

  u64 n() const { return n_; }
  u64 order_of(u64 a) const;

 private:
  u64 n_;
  numtheory::Factorization phi_factors_;
};

/// Runs steps 2-7 of the post-processing for a fixed base a in [1, n).
/// `rng` is consulted only in sampled mode, for the measurement d.
TrialOutcome run_trial_with_base(const Modulus& m, u64 a, OrderMode mode, Rng& rng);
/// Draws a uniformly from {1, ..., n-1} and runs the trial.
TrialOutcome run_trial(const Modulus& m, OrderMode mode, Rng& rng);

inline constexpr u64 kTrialsPerBlock = 4096;

/// Trials are cut into fixed blocks, each with its own substream, so the
/// tally is identical for every worker count.
TrialTally run_trials(u64 n, u64 trials, u64 seed, OrderMode mode, unsigned workers = 1);

/// Every a in [1, n) exactly once through the trial pipeline, exact mode.
TrialTally run_exhaustive(u64 n);

struct ConditionalEstimate {
  double p_hat = 0;
  double std_err = 0;
};
/// success / a_r_ok with its binomial standard error.
ConditionalEstimate conditional_estimate(const TrialTally& t);

}  // namespace shorbounds::simulator
