#pragma once

#include <optional>
#include <vector>

#include "shorbounds/counting.hpp"
#include "shorbounds/numtheory.hpp"
#include "shorbounds/rational.hpp"

namespace shorbounds::bounds {

using counting::GroupProfile;
using counting::TauProfile;
using numtheory::u64;

struct Constants {
  /// Euler-Mascheroni constant.
  long double gamma = 0.577215664901532860606512090082402431L;
  /// e^(-gamma) * log2(e): floor constant for phi(r)/r against log2 n.
  long double alpha;
  /// Floor constant for P(A_a); taken equal to alpha.
  long double beta;

  static const Constants& standard();
};

/// Probability that a coprime base with known order splits n:
/// 1 - (2^k - 2 + 2^(k tau')) / ((2^k - 1) 2^(tau~)).
ExactRational success_conditional(const TauProfile& taus);
ExactRational success_conditional(const GroupProfile& g);

/// The classical guarantee 1 - 2^(1-k).
ExactRational shor_conditional(unsigned k);

struct BoundComparison {
  ExactRational precise;
  ExactRational shor;
  ExactRational gap;
};
BoundComparison compare_bounds(const TauProfile& taus);
BoundComparison compare_bounds(const GroupProfile& g);

/// phi(n) / (n - 1): chance a uniform draw from {1..n-1} is coprime to n.
ExactRational p_a_exact(const numtheory::Factorization& f);
/// phi(r) / r: chance a uniform measurement d in [0, r) is coprime to r.
ExactRational p_r_exact(u64 r);

struct TotientRatio {
  ExactRational ratio;
  bool meets_half = false;
};
/// phi(n)/n for n = p q with distinct primes; throws not_semiprime otherwise.
TotientRatio phi_ratio_semiprime_bound(const numtheory::Factorization& f);

/// alpha / log2(n), the asymptotic floor on phi(r)/r. Only a valid bound for
/// sufficiently large r.
double p_r_asymptotic_floor(u64 n);

double ps_lower_bound(const GroupProfile& g);
double repetitions_lower_bound(const GroupProfile& g, double epsilon);
double shor_repetitions(unsigned k, u64 n, double epsilon);

struct SemiprimeBounds {
  double ps = 0;
  double n_reps = 0;
};
/// Two-prime variant that replaces beta / log2 n by the totient floor 1/2.
SemiprimeBounds semiprime_bounds(const GroupProfile& g, double epsilon);

struct GridCell {
  std::vector<unsigned> taus;
  ExactRational probability;
};

/// Row-major sweep of success_conditional over [1, tau_max]^k.
std::vector<GridCell> probability_grid(unsigned k, unsigned tau_max);
/// The k = 2 surface (tau_p, tau_q).
std::vector<GridCell> figure1_grid(unsigned tau_max);

struct BoundReport {
  u64 n = 0;
  unsigned k = 0;
  unsigned tau_min = 0;
  unsigned tau_sum = 0;
  double epsilon = 0;
  ExactRational p_success_conditional;
  ExactRational shor_conditional;
  double ps_lower = 0;
  double n_lower_precise = 0;
  double n_lower_shor = 0;
  std::optional<SemiprimeBounds> semiprime;
};

BoundReport make_bound_report(const GroupProfile& g, double epsilon);

}  // namespace shorbounds::bounds
