#include "shorbounds/shorbounds.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "shorbounds/bounds.hpp"
#include "shorbounds/counting.hpp"
#include "shorbounds/error.hpp"
#include "shorbounds/numtheory.hpp"
#include "shorbounds/report.hpp"
#include "shorbounds/simulator.hpp"

using namespace shorbounds;

struct sb_factorization {
  numtheory::Factorization value;
};

struct sb_profile {
  std::optional<counting::GroupProfile> group;
  counting::TauProfile taus;
};

struct sb_document {
  std::string text;
  std::string note;
};

namespace {

thread_local std::string g_last_error;

sb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return SB_ERR_DOMAIN;
    case ErrorCode::not_a_unit: return SB_ERR_NOT_A_UNIT;
    case ErrorCode::out_of_range: return SB_ERR_OUT_OF_RANGE;
    case ErrorCode::enumeration_too_large: return SB_ERR_ENUMERATION_TOO_LARGE;
    case ErrorCode::unsupported_even_modulus: return SB_ERR_UNSUPPORTED_EVEN_MODULUS;
    case ErrorCode::prime_power_unsupported: return SB_ERR_PRIME_POWER_UNSUPPORTED;
    case ErrorCode::not_squarefree: return SB_ERR_NOT_SQUAREFREE;
    case ErrorCode::not_semiprime: return SB_ERR_NOT_SEMIPRIME;
    case ErrorCode::insufficient_data: return SB_ERR_INSUFFICIENT_DATA;
    case ErrorCode::overflow: return SB_ERR_OVERFLOW;
    case ErrorCode::usage: return SB_ERR_USAGE;
  }
  return SB_ERR_INTERNAL;
}

sb_status fail(sb_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body` and converts any exception into a status code.
template <typename F>
sb_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SB_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SB_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename... Ptrs>
bool any_null(Ptrs... ptrs) {
  return ((ptrs == nullptr) || ...);
}

sb_status null_argument() { return fail(SB_ERR_NULL_ARGUMENT, "null argument"); }

sb_tally to_c(const simulator::TrialTally& t) {
  return {t.trials, t.a_coprime, t.a_r_ok, t.even_order, t.success, t.lucky, t.seed};
}

const counting::GroupProfile& require_group(const sb_profile* g) {
  if (!g->group) throw Error(ErrorCode::domain, "profile has no modulus attached");
  return *g->group;
}

// Report entry points: always hand back a document, errors included.
template <typename F>
sb_status with_document(const char* command, sb_document** out, F&& build) {
  if (out == nullptr) return null_argument();
  g_last_error.clear();
  auto doc = std::make_unique<sb_document>();
  sb_status status = SB_OK;
  try {
    build(*doc);
  } catch (const Error& e) {
    doc->text = report::serialize(report::error_json(command, e.code(), e.what()));
    doc->note.clear();
    status = fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    doc->text = report::serialize(report::Json{
        {"command", command},
        {"tool_version", report::kToolVersion},
        {"error", {{"code", "internal"}, {"message", e.what()}}}});
    doc->note.clear();
    status = fail(SB_ERR_INTERNAL, e.what());
  }
  *out = doc.release();
  return status;
}

}  // namespace

extern "C" {

const char* sb_version(void) { return report::kToolVersion; }

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_OK: return "ok";
    case SB_ERR_NULL_ARGUMENT: return "null_argument";
    case SB_ERR_DOMAIN: return "domain_error";
    case SB_ERR_NOT_A_UNIT: return "not_a_unit";
    case SB_ERR_OUT_OF_RANGE: return "out_of_range";
    case SB_ERR_ENUMERATION_TOO_LARGE: return "enumeration_too_large";
    case SB_ERR_UNSUPPORTED_EVEN_MODULUS: return "unsupported_even_modulus";
    case SB_ERR_PRIME_POWER_UNSUPPORTED: return "prime_power_unsupported";
    case SB_ERR_NOT_SQUAREFREE: return "not_squarefree";
    case SB_ERR_NOT_SEMIPRIME: return "not_semiprime";
    case SB_ERR_INSUFFICIENT_DATA: return "insufficient_data";
    case SB_ERR_OVERFLOW: return "overflow";
    case SB_ERR_USAGE: return "usage_error";
    case SB_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case SB_ERR_VERIFY_FAILED: return "verify_failed";
    case SB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sb_last_error(void) { return g_last_error.c_str(); }

void sb_string_free(char* s) { delete[] s; }

int sb_is_prime(uint64_t n) { return numtheory::is_prime(n) ? 1 : 0; }

uint64_t sb_gcd(uint64_t a, uint64_t b) { return numtheory::gcd(a, b); }

sb_status sb_lcm(uint64_t a, uint64_t b, uint64_t* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = numtheory::lcm(a, b); });
}

sb_status sb_mod_pow(uint64_t a, uint64_t exp, uint64_t m, uint64_t* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = numtheory::mod_pow(a, exp, m); });
}

sb_status sb_multiplicative_order(uint64_t a, uint64_t m, uint64_t* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = numtheory::multiplicative_order(a, m); });
}

sb_status sb_v2_split(uint64_t m, uint32_t* t, uint64_t* s) {
  if (any_null(t, s)) return null_argument();
  return guarded([&] {
    const auto d = numtheory::v2_split(m);
    *t = d.t;
    *s = d.s;
  });
}

sb_status sb_euler_phi(uint64_t n, uint64_t* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    if (n == 0) throw Error(ErrorCode::domain, "phi(0) is undefined");
    *out = numtheory::euler_phi(n);
  });
}

sb_status sb_factorize(uint64_t n, sb_factorization** out) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new sb_factorization{numtheory::factorize(n)}; });
}

uint64_t sb_factorization_n(const sb_factorization* f) { return f ? f->value.n() : 0; }

size_t sb_factorization_count(const sb_factorization* f) {
  return f ? f->value.distinct_primes() : 0;
}

sb_status sb_factorization_at(const sb_factorization* f, size_t index, uint64_t* p, uint32_t* e) {
  if (any_null(f, p, e)) return null_argument();
  if (index >= f->value.distinct_primes()) return fail(SB_ERR_OUT_OF_RANGE, "index out of range");
  *p = f->value.factors()[index].p;
  *e = f->value.factors()[index].e;
  return SB_OK;
}

void sb_factorization_free(sb_factorization* f) { delete f; }

sb_status sb_profile_create(uint64_t n, sb_profile** out) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto g = counting::profile_group(numtheory::factorize(n));
    auto taus = g.tau_profile();
    *out = new sb_profile{std::move(g), std::move(taus)};
  });
}

sb_status sb_profile_from_taus(const uint32_t* taus, size_t k, sb_profile** out) {
  if (any_null(taus, out)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    counting::TauProfile profile(std::vector<unsigned>(taus, taus + k));
    *out = new sb_profile{std::nullopt, std::move(profile)};
  });
}

uint64_t sb_profile_n(const sb_profile* g) { return g && g->group ? g->group->n : 0; }
uint32_t sb_profile_k(const sb_profile* g) { return g ? g->taus.k() : 0; }
uint32_t sb_profile_tau_min(const sb_profile* g) { return g ? g->taus.tau_min() : 0; }
uint32_t sb_profile_tau_sum(const sb_profile* g) { return g ? g->taus.tau_sum() : 0; }
int sb_profile_squarefree(const sb_profile* g) {
  return g && g->group && g->group->squarefree ? 1 : 0;
}

sb_status sb_profile_prime_at(const sb_profile* g, size_t index, uint64_t* p, uint32_t* e,
                              uint32_t* tau, uint64_t* sigma) {
  if (any_null(g, p, e, tau, sigma)) return null_argument();
  if (!g->group) return fail(SB_ERR_DOMAIN, "abstract profile has no primes");
  if (index >= g->group->profiles.size()) return fail(SB_ERR_OUT_OF_RANGE, "index out of range");
  const auto& pr = g->group->profiles[index];
  *p = pr.p;
  *e = pr.e;
  *tau = pr.tau;
  *sigma = pr.sigma;
  return SB_OK;
}

void sb_profile_free(sb_profile* g) { delete g; }

sb_status sb_fraction_equal_valuation(const sb_profile* g, char** out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = dup_string(counting::fraction_equal_valuation(g->taus).to_string()); });
}

sb_status sb_success_conditional(const sb_profile* g, char** out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = dup_string(bounds::success_conditional(g->taus).to_string()); });
}

sb_status sb_shor_conditional(uint32_t k, char** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = dup_string(bounds::shor_conditional(k).to_string()); });
}

sb_status sb_bound_gap(const sb_profile* g, char** out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = dup_string(bounds::compare_bounds(g->taus).gap.to_string()); });
}

sb_status sb_count_equal_valuation(const sb_profile* g, uint64_t* out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] {
    const auto& group = require_group(g);
    *out = group.squarefree ? counting::count_equal_valuation(group)
                            : counting::count_equal_valuation_general(group);
  });
}

sb_status sb_equal_valuation_bruteforce(uint64_t n, uint64_t cap, uint32_t workers,
                                        uint64_t* count, uint64_t* total) {
  if (any_null(count, total)) return null_argument();
  return guarded([&] {
    const auto r = counting::equal_valuation_bruteforce(n, cap, workers);
    *count = r.count;
    *total = r.total;
  });
}

sb_status sb_census_mod_p(uint64_t p, uint64_t cap, uint64_t* counts, size_t* len) {
  if (any_null(counts, len)) return null_argument();
  bool too_small = false;
  const sb_status status = guarded([&] {
    const auto census = counting::census_mod_p_bruteforce(p, cap);
    const std::size_t needed = census.rbegin()->first + 1;
    too_small = needed > *len;
    if (!too_small) {
      for (std::size_t t = 0; t < needed; ++t) {
        auto it = census.find(static_cast<unsigned>(t));
        counts[t] = it == census.end() ? 0 : it->second;
      }
    }
    *len = needed;
  });
  if (status == SB_OK && too_small) return fail(SB_ERR_BUFFER_TOO_SMALL, "census buffer too small");
  return status;
}

sb_status sb_ps_lower_bound(const sb_profile* g, double* out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = bounds::ps_lower_bound(require_group(g)); });
}

sb_status sb_repetitions_lower_bound(const sb_profile* g, double epsilon, double* out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = bounds::repetitions_lower_bound(require_group(g), epsilon); });
}

sb_status sb_shor_repetitions(uint32_t k, uint64_t n, double epsilon, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = bounds::shor_repetitions(k, n, epsilon); });
}

sb_status sb_run_trials(uint64_t n, uint64_t trials, uint64_t seed, sb_order_mode mode,
                        uint32_t workers, sb_tally* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    const auto m = mode == SB_ORDER_SAMPLED ? simulator::OrderMode::sampled
                                            : simulator::OrderMode::exact;
    *out = to_c(simulator::run_trials(n, trials, seed, m, workers));
  });
}

sb_status sb_run_exhaustive(uint64_t n, sb_tally* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = to_c(simulator::run_exhaustive(n)); });
}

sb_status sb_conditional_estimate(const sb_tally* t, double* p_hat, double* std_err) {
  if (any_null(t, p_hat, std_err)) return null_argument();
  return guarded([&] {
    simulator::TrialTally tally{t->trials, t->a_coprime, t->a_r_ok, t->even_order,
                                t->success, t->lucky, t->seed};
    const auto e = simulator::conditional_estimate(tally);
    *p_hat = e.p_hat;
    *std_err = e.std_err;
  });
}

sb_status sb_analyze(const sb_analyze_options* opts, sb_document** out) {
  return with_document("analyze", out, [&](sb_document& doc) {
    if (opts == nullptr) throw Error(ErrorCode::usage, "null options");
    report::AnalyzeOptions o{opts->n, opts->epsilon, opts->ceil_n != 0};
    doc.text = report::serialize(report::analyze(o));
  });
}

sb_status sb_verify(const sb_verify_options* opts, sb_document** out) {
  bool failed = false;
  sb_status status = with_document("verify", out, [&](sb_document& doc) {
    if (opts == nullptr) throw Error(ErrorCode::usage, "null options");
    report::VerifyOptions o;
    if (opts->use_range) {
      o.range = std::pair{opts->range_lo, opts->range_hi};
    } else {
      if (opts->values == nullptr && opts->value_count > 0)
        throw Error(ErrorCode::usage, "null value list");
      o.values.assign(opts->values, opts->values + opts->value_count);
    }
    o.squarefree_only = opts->squarefree_only != 0;
    if (opts->max_enumeration > 0) o.max_enumeration = opts->max_enumeration;
    o.workers = opts->workers == 0 ? 1 : opts->workers;
    const auto result = report::verify(o);
    doc.text = report::serialize(result.doc);
    failed = result.mismatches > 0 || result.errors > 0;
    doc.note = "checked " + std::to_string(result.doc["summary"]["checked"].get<uint64_t>()) +
               ", mismatches " + std::to_string(result.mismatches) + ", errors " +
               std::to_string(result.errors);
  });
  if (status == SB_OK && failed) return fail(SB_ERR_VERIFY_FAILED, "verification failed");
  return status;
}

sb_status sb_simulate(const sb_simulate_options* opts, sb_document** out) {
  return with_document("simulate", out, [&](sb_document& doc) {
    if (opts == nullptr) throw Error(ErrorCode::usage, "null options");
    report::SimulateOptions o;
    o.n = opts->n;
    o.trials = opts->trials;
    o.seed = opts->seed;
    o.mode = opts->mode == SB_ORDER_SAMPLED ? simulator::OrderMode::sampled
                                            : simulator::OrderMode::exact;
    o.workers = opts->workers == 0 ? 1 : opts->workers;
    doc.text = report::serialize(report::simulate(o));
  });
}

sb_status sb_sweep(const sb_sweep_options* opts, sb_document** out) {
  return with_document("sweep", out, [&](sb_document& doc) {
    if (opts == nullptr) throw Error(ErrorCode::usage, "null options");
    report::SweepOptions o{opts->k, opts->tau_max,
                           opts->format == SB_FORMAT_CSV ? report::SweepFormat::csv
                                                         : report::SweepFormat::json};
    if (opts->format != SB_FORMAT_CSV && opts->format != SB_FORMAT_JSON)
      throw Error(ErrorCode::usage, "unknown sweep format");
    doc.text = o.format == report::SweepFormat::csv ? report::sweep_csv(o)
                                                    : report::serialize(report::sweep_json(o));
    doc.note = report::sweep_minimum_note(o);
  });
}

const char* sb_document_text(const sb_document* doc) { return doc ? doc->text.c_str() : ""; }
const char* sb_document_note(const sb_document* doc) { return doc ? doc->note.c_str() : ""; }
void sb_document_free(sb_document* doc) { delete doc; }

}  // extern "C"
