#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "shorbounds/bounds.hpp"
#include "shorbounds/error.hpp"

using namespace shorbounds;
using namespace shorbounds::bounds;
using numtheory::factorize;

namespace {

ExactRational frac(std::int64_t num, std::int64_t den) {
  return ExactRational(ExactRational::Integer(num), ExactRational::Integer(den));
}

GroupProfile group(numtheory::u64 n) { return counting::profile_group(factorize(n)); }

// Euler-Mascheroni constant and alpha = e^-gamma / ln 2, typed in independently
// of the library's Constants.
constexpr double kGamma = 0.5772156649015328606;
const double kAlpha = std::exp(-kGamma) / std::log(2.0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected shorbounds::Error");
  return ErrorCode::usage;
}

}  // namespace

TEST_CASE("constants") {
  const auto& c = Constants::standard();
  CHECK(static_cast<double>(c.alpha) == doctest::Approx(0.81001481260202367).epsilon(1e-15));
  CHECK(static_cast<double>(c.alpha) == doctest::Approx(kAlpha).epsilon(1e-15));
  CHECK(c.beta == c.alpha);
}

TEST_CASE("success_conditional fixtures") {
  CHECK(success_conditional(group(21)) == frac(1, 2));
  CHECK(success_conditional(group(15)) == frac(3, 4));
  CHECK(success_conditional(TauProfile({1, 3})) == frac(7, 8));
  // 3 * 41 realizes tau = (1, 3).
  const auto [good, units] = oracle::splitting_bases(123);
  CHECK(frac(good, units) == frac(7, 8));
  CHECK(success_conditional(group(123)) == frac(7, 8));

  const auto [g15, u15] = oracle::splitting_bases(15);
  CHECK(g15 == 6);
  CHECK(u15 == 8);
}

TEST_CASE("shor_conditional") {
  CHECK(shor_conditional(2) == frac(1, 2));
  CHECK(shor_conditional(3) == frac(3, 4));
  CHECK(shor_conditional(10) == frac(511, 512));
  CHECK(code_of([] { shor_conditional(1); }) == ErrorCode::domain);
}

TEST_CASE("compare_bounds") {
  CHECK(compare_bounds(group(21)).gap == frac(0, 1));
  CHECK(compare_bounds(group(15)).gap == frac(1, 4));
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = 1; b <= 6; ++b)
      for (unsigned c = 1; c <= 6; ++c) {
        const auto cmp = compare_bounds(TauProfile({a, b, c}));
        CHECK(cmp.gap >= frac(0, 1));
        CHECK((cmp.gap == frac(0, 1)) == (a == 1 && b == 1 && c == 1));
      }
}

TEST_CASE("exact totient probabilities") {
  CHECK(p_a_exact(factorize(15)) == frac(4, 7));
  CHECK(p_a_exact(factorize(21)) == frac(3, 5));
  CHECK(p_a_exact(factorize(9)) == frac(3, 4));
  CHECK(p_r_exact(4) == frac(1, 2));
  CHECK(p_r_exact(1) == frac(1, 1));
  CHECK(p_r_exact(12) == frac(1, 3));
  CHECK(code_of([] { p_r_exact(0); }) == ErrorCode::domain);
}

TEST_CASE("phi_ratio_semiprime_bound") {
  const auto r15 = phi_ratio_semiprime_bound(factorize(15));
  CHECK(r15.ratio == frac(8, 15));
  CHECK(r15.meets_half);
  const auto r6 = phi_ratio_semiprime_bound(factorize(6));
  CHECK(r6.ratio == frac(1, 3));
  CHECK_FALSE(r6.meets_half);
  const auto big = phi_ratio_semiprime_bound(factorize(10403));
  CHECK(big.ratio == frac(100 * 102, 101 * 103));
  CHECK(big.ratio > frac(98, 100));
  CHECK(big.meets_half);
  CHECK(code_of([] { phi_ratio_semiprime_bound(factorize(45)); }) == ErrorCode::not_semiprime);
  CHECK(code_of([] { phi_ratio_semiprime_bound(factorize(105)); }) == ErrorCode::not_semiprime);
}

TEST_CASE("ps_lower_bound") {
  const double l15 = std::log2(15.0), l21 = std::log2(21.0);
  CHECK(ps_lower_bound(group(15)) == doctest::Approx(0.75 * kAlpha * kAlpha / (l15 * l15)).epsilon(1e-13));
  CHECK(ps_lower_bound(group(21)) == doctest::Approx(0.5 * kAlpha * kAlpha / (l21 * l21)).epsilon(1e-13));
  // Frozen from a 40-digit evaluation.
  CHECK(ps_lower_bound(group(15)) == doctest::Approx(0.032239231832670524).epsilon(1e-12));
  // Conditional factor -> 1 gives the upper envelope alpha^2 / (log2 n)^2.
  const auto g = group(3 * 17);  // tau = (1, 4): conditional 1 - 18/(3*32)
  CHECK(ps_lower_bound(g) < kAlpha * kAlpha / std::pow(std::log2(51.0), 2));
}

TEST_CASE("repetitions_lower_bound") {
  CHECK(repetitions_lower_bound(group(15), 0.01) ==
        doctest::Approx(std::log(100.0) * std::pow(std::log2(15.0), 2) / (kAlpha * kAlpha * 0.75))
            .epsilon(1e-13));
  CHECK(repetitions_lower_bound(group(15), 0.01) == doctest::Approx(142.84366978376060).epsilon(1e-12));
  CHECK(repetitions_lower_bound(group(15), 1.0 - 1e-12) < 1e-8);
  CHECK(repetitions_lower_bound(group(21), 0.01) > repetitions_lower_bound(group(15), 0.01));
  CHECK(code_of([] { repetitions_lower_bound(group(15), 0.0); }) == ErrorCode::domain);
  CHECK(code_of([] { repetitions_lower_bound(group(15), 1.0); }) == ErrorCode::domain);
}

TEST_CASE("shor_repetitions") {
  CHECK(shor_repetitions(2, 21, 0.01) == repetitions_lower_bound(group(21), 0.01));
  CHECK(shor_repetitions(2, 15, 0.01) / repetitions_lower_bound(group(15), 0.01) ==
        doctest::Approx(1.5).epsilon(1e-14));
  CHECK(shor_repetitions(2, 15, 0.01) == doctest::Approx(214.26550467564090).epsilon(1e-12));
  const double l = std::log2(1155.0);
  CHECK(shor_repetitions(4, 1155, 0.05) ==
        doctest::Approx(std::log(20.0) * l * l / (kAlpha * kAlpha * 7.0 / 8.0)).epsilon(1e-13));
  CHECK(code_of([] { shor_repetitions(1, 15, 0.1); }) == ErrorCode::domain);
}

TEST_CASE("semiprime_bounds") {
  const double l15 = std::log2(15.0), l21 = std::log2(21.0);
  const auto s15 = semiprime_bounds(group(15), 0.01);
  CHECK(s15.ps == doctest::Approx(kAlpha * 0.75 / (2 * l15)).epsilon(1e-13));
  CHECK(s15.n_reps == doctest::Approx(59.231496546811525).epsilon(1e-12));
  CHECK(semiprime_bounds(group(21), 0.01).ps == doctest::Approx(kAlpha / (4 * l21)).epsilon(1e-13));
  for (numtheory::u64 n : {15ULL, 21ULL, 35ULL, 10403ULL, 1000003ULL * 999983ULL}) {
    const auto g = group(n);
    const double ratio = semiprime_bounds(g, 0.1).ps / ps_lower_bound(g);
    CHECK(ratio == doctest::Approx(std::log2(static_cast<double>(n)) / (2 * kAlpha)).epsilon(1e-12));
    CHECK(ratio > 1.0);
  }
  CHECK(code_of([] { semiprime_bounds(group(105), 0.1); }) == ErrorCode::domain);
}

TEST_CASE("figure1_grid") {
  const auto grid = figure1_grid(3);
  REQUIRE(grid.size() == 9);
  CHECK(grid[0].taus == std::vector<unsigned>{1, 1});
  CHECK(grid[0].probability == frac(1, 2));
  CHECK(grid[1].taus == std::vector<unsigned>{1, 2});
  CHECK(grid[1].probability == frac(3, 4));
  CHECK(grid[2].probability == frac(7, 8));
  CHECK(grid[4].taus == std::vector<unsigned>{2, 2});
  CHECK(grid[4].probability == frac(5, 8));
  CHECK(probability_grid(3, 2).size() == 8);
  CHECK(code_of([] { figure1_grid(0); }) == ErrorCode::domain);
}

TEST_CASE("Prop: precise conditional is in [1/2, 1), complements the fraction, dominates Shor") {
  for (unsigned k = 2; k <= 4; ++k) {
    std::vector<unsigned> taus(k, 1);
    for (;;) {
      const TauProfile t(taus);
      const auto p = success_conditional(t);
      CHECK(p >= frac(1, 2));
      CHECK(p < frac(1, 1));
      CHECK(p + counting::fraction_equal_valuation(t) == frac(1, 1));
      CHECK(p >= shor_conditional(k));
      CHECK((p == shor_conditional(k)) == t.all_ones());
      std::size_t i = k;
      while (i > 0 && taus[i - 1] == 8) taus[--i] = 1;
      if (i == 0) break;
      ++taus[i - 1];
    }
  }
}

TEST_CASE("make_bound_report") {
  const auto r = make_bound_report(group(15), 0.01);
  CHECK(r.k == 2);
  CHECK(r.tau_min == 1);
  CHECK(r.tau_sum == 3);
  CHECK(r.p_success_conditional >= r.shor_conditional);
  CHECK(r.n_lower_precise <= r.n_lower_shor);
  CHECK(r.semiprime.has_value());
  CHECK_FALSE(make_bound_report(group(105), 0.01).semiprime.has_value());
}
