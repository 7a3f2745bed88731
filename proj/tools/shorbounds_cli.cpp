// Command-line front end over the shorbounds C API.
//
//   shorbounds analyze N [--epsilon E] [--ceil-n]
//   shorbounds verify [N ...] [--range LO HI] [--squarefree-only] [--max-enumeration C]
//   shorbounds simulate N [--trials T] [--seed S] [--order-mode exact|sampled]
//   shorbounds sweep [--k K] [--tau-max M] [--format csv|json] [--emit-plot-data]
//
// Results go to stdout as a single JSON document (or CSV for sweep);
// diagnostics go to stderr. Exit status: 0 success, 1 failure, 2 usage.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shorbounds/shorbounds.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') {
    std::cerr << "ignoring malformed " << name << "=" << raw << "\n";
    return std::nullopt;
  }
  return v;
}

std::optional<double> env_double(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0') {
    std::cerr << "ignoring malformed " << name << "=" << raw << "\n";
    return std::nullopt;
  }
  return v;
}

// Prints the document and maps the status to an exit code.
int emit(sb_status status, sb_document* doc) {
  if (doc != nullptr) {
    std::fputs(sb_document_text(doc), stdout);
    const std::string note = sb_document_note(doc);
    if (!note.empty()) std::cerr << note << "\n";
    sb_document_free(doc);
  }
  if (status == SB_OK) return 0;
  std::cerr << sb_status_name(status) << ": " << sb_last_error() << "\n";
  return status == SB_ERR_USAGE ? kExitUsage : kExitFailure;
}

int reject_csv(const std::string& command) {
  std::cerr << command << ": only --format json is supported\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact success probabilities and repetition bounds for Shor's post-processing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sb_version()));

  std::string format = "json";
  const std::vector<std::string> formats = {"json", "csv"};

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Closed-form report for one modulus");
  std::uint64_t analyze_n = 0;
  double epsilon = env_double("SHORBOUNDS_EPSILON").value_or(0.01);
  bool ceil_n = false;
  analyze->add_option("n", analyze_n, "Odd composite with at least two distinct primes")
      ->required();
  analyze->add_option("--epsilon", epsilon, "Target failure probability, in (0, 1)");
  analyze->add_flag("--ceil-n", ceil_n, "Also report repetition bounds rounded up");
  analyze->add_option("--format", format)->check(CLI::IsMember(formats));

  // verify
  auto* verify = app.add_subcommand("verify", "Closed form against brute-force enumeration");
  std::vector<std::uint64_t> verify_values;
  std::vector<std::uint64_t> range;
  bool squarefree_only = false;
  std::uint64_t max_enum = env_u64("SHORBOUNDS_MAX_ENUM").value_or(1'000'000);
  std::uint32_t workers = 1;
  verify->add_option("n", verify_values, "Moduli to check");
  auto* range_opt = verify->add_option("--range", range, "Inclusive range LO HI")
                        ->expected(2)
                        ->excludes(verify->get_option("n"));
  verify->add_flag("--squarefree-only", squarefree_only);
  verify->add_option("--max-enumeration", max_enum, "Largest n to enumerate");
  verify->add_option("--workers", workers, "Threads per enumeration")->check(CLI::Range(1u, 256u));
  verify->add_option("--format", format)->check(CLI::IsMember(formats));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo of the post-processing");
  std::uint64_t sim_n = 0;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  std::string order_mode = "exact";
  std::uint32_t sim_workers = 1;
  simulate->add_option("n", sim_n)->required();
  simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed);
  simulate->add_option("--order-mode", order_mode)
      ->check(CLI::IsMember({"exact", "sampled"}));
  simulate->add_option("--workers", sim_workers)->check(CLI::Range(1u, 256u));
  simulate->add_option("--format", format)->check(CLI::IsMember(formats));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Conditional success probability over a tau grid");
  std::uint32_t k = 2;
  std::uint32_t tau_max = 8;
  bool plot_data = false;
  sweep->add_option("--k", k)->check(CLI::Range(2u, 16u));
  sweep->add_option("--tau-max", tau_max)->check(CLI::Range(1u, 64u));
  sweep->add_option("--format", format)->check(CLI::IsMember(formats));
  sweep->add_flag("--emit-plot-data", plot_data,
                  "Alias for '--k 2 --format csv': the (tau_p, tau_q) probability surface");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  sb_document* doc = nullptr;

  if (*analyze) {
    if (format != "json") return reject_csv("analyze");
    const sb_analyze_options opts{analyze_n, epsilon, ceil_n ? 1 : 0};
    const sb_status status = sb_analyze(&opts, &doc);
    return emit(status, doc);
  }

  if (*verify) {
    if (format != "json") return reject_csv("verify");
    if (verify_values.empty() && range_opt->count() == 0) {
      std::cerr << "verify: give moduli or --range LO HI\n";
      return kExitUsage;
    }
    sb_verify_options opts{};
    opts.values = verify_values.data();
    opts.value_count = verify_values.size();
    if (range_opt->count() > 0) {
      opts.use_range = 1;
      opts.range_lo = range[0];
      opts.range_hi = range[1];
    }
    opts.squarefree_only = squarefree_only ? 1 : 0;
    opts.max_enumeration = max_enum;
    opts.workers = workers;
    const sb_status status = sb_verify(&opts, &doc);
    return emit(status, doc);
  }

  if (*simulate) {
    if (format != "json") return reject_csv("simulate");
    const sb_simulate_options opts{sim_n, trials, seed,
                                   order_mode == "sampled" ? SB_ORDER_SAMPLED : SB_ORDER_EXACT,
                                   sim_workers};
    const sb_status status = sb_simulate(&opts, &doc);
    return emit(status, doc);
  }

  if (*sweep) {
    if (plot_data) {
      k = 2;
      format = "csv";
    }
    const sb_sweep_options opts{k, tau_max, format == "csv" ? SB_FORMAT_CSV : SB_FORMAT_JSON};
    const sb_status status = sb_sweep(&opts, &doc);
    return emit(status, doc);
  }

  return kExitUsage;
}
