#include "shorbounds/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "shorbounds/bounds.hpp"
#include "shorbounds/counting.hpp"
#include "shorbounds/numtheory.hpp"

namespace shorbounds::report {

namespace {

Json rational_json(const ExactRational& r) {
  return Json{{"exact", r.to_string()}, {"decimal", std::stod(r.to_decimal(12))}};
}

Json factorization_json(const numtheory::Factorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors()) factors.push_back(Json{{"p", pp.p}, {"e", pp.e}});
  return factors;
}

Json profile_json(const counting::GroupProfile& g) {
  Json rows = Json::array();
  for (const auto& pr : g.profiles)
    rows.push_back(Json{{"p", pr.p}, {"e", pr.e}, {"tau", pr.tau}, {"sigma", pr.sigma}});
  return Json{{"k", g.k()},
              {"tau_min", g.tau_min},
              {"tau_sum", g.tau_sum},
              {"squarefree", g.squarefree},
              {"primes", rows}};
}

Json base_document(const std::string& command, Json parameters) {
  return Json{{"command", command}, {"parameters", std::move(parameters)},
              {"tool_version", kToolVersion}};
}

// Verification of one modulus: closed form against enumeration.
Json verify_one(u64 n, const VerifyOptions& opts, VerifyOutcome& outcome) {
  Json item{{"n", n}};
  numtheory::Factorization f;
  if (n >= 2) f = numtheory::factorize(n);
  counting::GroupProfile g;
  try {
    if (n < 2) throw Error(ErrorCode::domain, "n must be at least 2");
    g = counting::profile_group(f);
  } catch (const Error& e) {
    item["status"] = "skipped";
    item["reason"] = std::string(error_code_name(e.code()));
    return item;
  }
  item["factorization"] = factorization_json(f);
  item["profile"] = profile_json(g);

  const ExactRational formula = counting::fraction_equal_valuation(g);
  item["formula"] = formula.to_string();
  item["formula_count"] = g.squarefree ? counting::count_equal_valuation(g)
                                       : counting::count_equal_valuation_general(g);
  try {
    const auto oracle = counting::equal_valuation_bruteforce(n, opts.max_enumeration, opts.workers);
    const bool match = oracle.fraction() == formula;
    item["oracle"] = Json{{"count", oracle.count},
                          {"total", oracle.total},
                          {"fraction", oracle.fraction().to_string()}};
    item["match"] = match;
    item["status"] = match ? "match" : "mismatch";
    if (!match) ++outcome.mismatches;
  } catch (const Error& e) {
    item["status"] = "error";
    item["error"] = Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    ++outcome.errors;
  }
  return item;
}

bool verify_candidate(u64 n, bool squarefree_only) {
  if (n < 9 || n % 2 == 0) return false;
  const auto f = numtheory::factorize(n);
  if (f.distinct_primes() < 2) return false;
  return !squarefree_only || f.squarefree();
}

std::string grid_decimal(const ExactRational& r) { return r.to_decimal(12); }

}  // namespace

double present(double value) {
  if (!std::isfinite(value)) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

Json analyze(const AnalyzeOptions& opts) {
  const auto f = numtheory::factorize(opts.n);
  const auto g = counting::profile_group(f);
  const auto report = bounds::make_bound_report(g, opts.epsilon);
  const auto cmp = bounds::compare_bounds(g);
  const auto& constants = bounds::Constants::standard();

  Json doc = base_document("analyze", Json{{"n", opts.n}, {"epsilon", opts.epsilon},
                                           {"ceil_n", opts.ceil_n}});
  doc["factorization"] = factorization_json(f);
  doc["profile"] = profile_json(g);
  doc["constants"] = Json{{"gamma", present(static_cast<double>(constants.gamma))},
                          {"alpha", present(static_cast<double>(constants.alpha))},
                          {"beta", present(static_cast<double>(constants.beta))}};

  Json b{{"success_conditional", rational_json(report.p_success_conditional)},
         {"shor_conditional", rational_json(report.shor_conditional)},
         {"gap", rational_json(cmp.gap)},
         {"equal_valuation_fraction", rational_json(counting::fraction_equal_valuation(g))},
         {"p_a_exact", rational_json(bounds::p_a_exact(f))},
         {"p_r_asymptotic_floor", Json{{"value", present(bounds::p_r_asymptotic_floor(opts.n))},
                                       {"asymptotic_only", true}}},
         {"ps_lower", present(report.ps_lower)},
         {"n_lower_precise", present(report.n_lower_precise)},
         {"n_lower_shor", present(report.n_lower_shor)}};
  if (opts.ceil_n) {
    b["n_lower_precise_ceil"] = static_cast<u64>(std::ceil(report.n_lower_precise));
    b["n_lower_shor_ceil"] = static_cast<u64>(std::ceil(report.n_lower_shor));
  }
  if (report.semiprime) {
    const auto ratio = bounds::phi_ratio_semiprime_bound(f);
    b["semiprime"] = Json{{"ps", present(report.semiprime->ps)},
                          {"n_reps", present(report.semiprime->n_reps)},
                          {"phi_ratio", rational_json(ratio.ratio)},
                          {"phi_ratio_meets_half", ratio.meets_half}};
    if (opts.ceil_n)
      b["semiprime"]["n_reps_ceil"] = static_cast<u64>(std::ceil(report.semiprime->n_reps));
  }
  doc["bounds"] = std::move(b);
  return doc;
}

VerifyOutcome verify(const VerifyOptions& opts) {
  VerifyOutcome out;
  Json params{{"squarefree_only", opts.squarefree_only},
              {"max_enumeration", opts.max_enumeration}};
  Json items = Json::array();
  u64 checked = 0, skipped = 0;

  auto record = [&](u64 n) {
    Json item = verify_one(n, opts, out);
    if (item["status"] == "skipped") ++skipped; else ++checked;
    items.push_back(std::move(item));
  };

  if (opts.range) {
    const auto [lo, hi] = *opts.range;
    if (lo > hi) throw Error(ErrorCode::usage, "empty range");
    params["range"] = Json::array({lo, hi});
    for (u64 n = lo; n <= hi; ++n) {
      if (verify_candidate(n, opts.squarefree_only)) record(n); else ++skipped;
      if (n == UINT64_MAX) break;
    }
  } else {
    params["values"] = opts.values;
    for (u64 n : opts.values) {
      if (opts.squarefree_only && n >= 2 && !numtheory::factorize(n).squarefree()) {
        items.push_back(Json{{"n", n}, {"status", "skipped"}, {"reason", "not_squarefree"}});
        ++skipped;
        continue;
      }
      record(n);
    }
  }

  out.doc = base_document("verify", std::move(params));
  out.doc["items"] = std::move(items);
  out.doc["summary"] = Json{{"checked", checked},
                            {"skipped", skipped},
                            {"mismatches", out.mismatches},
                            {"errors", out.errors}};
  return out;
}

Json simulate(const SimulateOptions& opts) {
  const auto f = numtheory::factorize(opts.n);
  const auto g = counting::profile_group(f);
  const auto tally =
      simulator::run_trials(opts.n, opts.trials, opts.seed, opts.mode, opts.workers);
  const ExactRational exact = bounds::success_conditional(g);

  Json doc = base_document("simulate",
                           Json{{"n", opts.n}, {"trials", opts.trials}, {"seed", opts.seed},
                                {"order_mode", std::string(simulator::order_mode_name(opts.mode))}});
  doc["seed"] = opts.seed;
  doc["factorization"] = factorization_json(f);
  doc["profile"] = profile_json(g);
  doc["tally"] = Json{{"trials", tally.trials},         {"a_coprime", tally.a_coprime},
                      {"a_r_ok", tally.a_r_ok},         {"even_order", tally.even_order},
                      {"success", tally.success},       {"lucky", tally.lucky},
                      {"seed", tally.seed}};
  doc["success_conditional"] = rational_json(exact);

  Json est;
  try {
    const auto e = simulator::conditional_estimate(tally);
    const double diff = e.p_hat - exact.to_double();
    est = Json{{"p_hat", present(e.p_hat)}, {"std_err", present(e.std_err)}};
    est["z_score"] = e.std_err > 0 ? Json(present(diff / e.std_err)) : Json(nullptr);
    est["within_3_se"] = std::abs(diff) <= 3.0 * e.std_err;
  } catch (const Error& e) {
    est = Json{{"error", Json{{"code", std::string(error_code_name(e.code()))},
                              {"message", e.what()}}}};
  }
  doc["estimate"] = std::move(est);
  return doc;
}

Json sweep_json(const SweepOptions& opts) {
  const auto cells = bounds::probability_grid(opts.k, opts.tau_max);
  Json rows = Json::array();
  const bounds::GridCell* best = &cells.front();
  for (const auto& c : cells) {
    if (c.probability < best->probability) best = &c;
    Json row{{"taus", c.taus},
             {"prob_num", c.probability.numerator().str()},
             {"prob_den", c.probability.denominator().str()},
             {"prob", c.probability.to_string()},
             {"prob_decimal", std::stod(grid_decimal(c.probability))}};
    if (opts.k == 2) {
      row["tau_p"] = c.taus[0];
      row["tau_q"] = c.taus[1];
    }
    rows.push_back(std::move(row));
  }
  Json doc = base_document("sweep", Json{{"k", opts.k}, {"tau_max", opts.tau_max}});
  doc["rows"] = std::move(rows);
  doc["minimum"] = Json{{"taus", best->taus}, {"prob", best->probability.to_string()}};
  return doc;
}

std::string sweep_csv(const SweepOptions& opts) {
  const auto cells = bounds::probability_grid(opts.k, opts.tau_max);
  std::ostringstream os;
  if (opts.k == 2) {
    os << "tau_p,tau_q";
  } else {
    for (unsigned i = 1; i <= opts.k; ++i) os << (i > 1 ? "," : "") << "tau_" << i;
  }
  os << ",prob_num,prob_den,prob_decimal\n";
  for (const auto& c : cells) {
    for (unsigned t : c.taus) os << t << ',';
    os << c.probability.numerator() << ',' << c.probability.denominator() << ','
       << grid_decimal(c.probability) << '\n';
  }
  return os.str();
}

std::string sweep_minimum_note(const SweepOptions& opts) {
  const auto cells = bounds::probability_grid(opts.k, opts.tau_max);
  const bounds::GridCell* best = &cells.front();
  for (const auto& c : cells)
    if (c.probability < best->probability) best = &c;
  std::string taus;
  for (unsigned t : best->taus) taus += (taus.empty() ? "" : ",") + std::to_string(t);
  return "minimum " + best->probability.to_string() + " at tau=(" + taus + ")";
}

Json error_json(const std::string& command, ErrorCode code, const std::string& message) {
  return Json{{"command", command},
              {"tool_version", kToolVersion},
              {"error", Json{{"code", std::string(error_code_name(code))}, {"message", message}}}};
}

std::string serialize(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace shorbounds::report
