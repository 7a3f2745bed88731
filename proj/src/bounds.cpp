#include "shorbounds/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shorbounds/error.hpp"

namespace shorbounds::bounds {

namespace {

using Integer = ExactRational::Integer;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(ErrorCode::domain, "epsilon must lie in (0, 1)");
}

double log2_n(u64 n) { return std::log2(static_cast<double>(n)); }

double alpha_beta() {
  const auto& c = Constants::standard();
  return static_cast<double>(c.alpha * c.beta);
}

}  // namespace

const Constants& Constants::standard() {
  static const Constants c = [] {
    Constants out;
    out.alpha = std::exp(-out.gamma) * std::numbers::log2e_v<long double>;
    out.beta = out.alpha;
    return out;
  }();
  return c;
}

ExactRational success_conditional(const TauProfile& taus) {
  return ExactRational(1) - counting::fraction_equal_valuation(taus);
}

ExactRational success_conditional(const GroupProfile& g) {
  return success_conditional(g.tau_profile());
}

ExactRational shor_conditional(unsigned k) {
  if (k < 2) throw Error(ErrorCode::domain, "k must be at least 2");
  return ExactRational(1) - ExactRational(Integer(1), Integer(1) << (k - 1));
}

BoundComparison compare_bounds(const TauProfile& taus) {
  BoundComparison c{success_conditional(taus), shor_conditional(taus.k()), {}};
  c.gap = c.precise - c.shor;
  return c;
}

BoundComparison compare_bounds(const GroupProfile& g) { return compare_bounds(g.tau_profile()); }

ExactRational p_a_exact(const numtheory::Factorization& f) {
  if (f.n() < 3) throw Error(ErrorCode::domain, "P(A_a) needs n >= 3");
  return ExactRational(Integer(numtheory::euler_phi(f)), Integer(f.n() - 1));
}

ExactRational p_r_exact(u64 r) {
  if (r == 0) throw Error(ErrorCode::domain, "order must be positive");
  return ExactRational(Integer(numtheory::euler_phi(r)), Integer(r));
}

TotientRatio phi_ratio_semiprime_bound(const numtheory::Factorization& f) {
  if (f.distinct_primes() != 2 || !f.squarefree())
    throw Error(ErrorCode::not_semiprime,
                std::to_string(f.n()) + " is not a product of two distinct primes");
  TotientRatio out{ExactRational(Integer(numtheory::euler_phi(f)), Integer(f.n())), false};
  out.meets_half = out.ratio >= ExactRational(Integer(1), Integer(2));
  return out;
}

double p_r_asymptotic_floor(u64 n) {
  return static_cast<double>(Constants::standard().alpha) / log2_n(n);
}

double ps_lower_bound(const GroupProfile& g) {
  const double l = log2_n(g.n);
  return success_conditional(g).to_double() * alpha_beta() / (l * l);
}

double repetitions_lower_bound(const GroupProfile& g, double epsilon) {
  check_epsilon(epsilon);
  const double l = log2_n(g.n);
  return std::log(1.0 / epsilon) * l * l / (alpha_beta() * success_conditional(g).to_double());
}

double shor_repetitions(unsigned k, u64 n, double epsilon) {
  check_epsilon(epsilon);
  const double l = log2_n(n);
  return std::log(1.0 / epsilon) * l * l / (alpha_beta() * shor_conditional(k).to_double());
}

SemiprimeBounds semiprime_bounds(const GroupProfile& g, double epsilon) {
  if (g.k() != 2) throw Error(ErrorCode::domain, "semiprime bounds need exactly two primes");
  check_epsilon(epsilon);
  const double alpha = static_cast<double>(Constants::standard().alpha);
  const double l = log2_n(g.n);
  const double cond = success_conditional(g).to_double();
  return {alpha * cond / (2.0 * l), 2.0 * std::log(1.0 / epsilon) * l / (alpha * cond)};
}

std::vector<GridCell> probability_grid(unsigned k, unsigned tau_max) {
  if (k < 2) throw Error(ErrorCode::domain, "k must be at least 2");
  if (tau_max < 1) throw Error(ErrorCode::domain, "tau_max must be at least 1");
  std::vector<GridCell> cells;
  std::vector<unsigned> taus(k, 1);
  for (;;) {
    cells.push_back({taus, success_conditional(TauProfile(taus))});
    // Odometer increment, last coordinate fastest.
    std::size_t i = k;
    while (i > 0 && taus[i - 1] == tau_max) taus[--i] = 1;
    if (i == 0) break;
    ++taus[i - 1];
  }
  return cells;
}

std::vector<GridCell> figure1_grid(unsigned tau_max) { return probability_grid(2, tau_max); }

BoundReport make_bound_report(const GroupProfile& g, double epsilon) {
  check_epsilon(epsilon);
  BoundReport r;
  r.n = g.n;
  r.k = g.k();
  r.tau_min = g.tau_min;
  r.tau_sum = g.tau_sum;
  r.epsilon = epsilon;
  r.p_success_conditional = success_conditional(g);
  r.shor_conditional = shor_conditional(g.k());
  r.ps_lower = ps_lower_bound(g);
  r.n_lower_precise = repetitions_lower_bound(g, epsilon);
  r.n_lower_shor = shor_repetitions(g.k(), g.n, epsilon);
  if (g.k() == 2) r.semiprime = semiprime_bounds(g, epsilon);
  return r;
}

}  // namespace shorbounds::bounds
