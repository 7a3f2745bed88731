// Drives the installed CLI binary end to end.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#ifndef SHORBOUNDS_CLI_PATH
#error "SHORBOUNDS_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " SHORBOUNDS_CLI_PATH " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("analyze") {
  const auto r15 = run("analyze 15 --epsilon 0.01");
  REQUIRE(r15.status == 0);
  const auto d15 = json_of(r15);
  CHECK(d15["bounds"]["success_conditional"]["exact"] == "3/4");
  CHECK(d15["bounds"]["gap"]["exact"] == "1/4");

  const auto d21 = json_of(run("analyze 21 --epsilon 0.01 --ceil-n"));
  CHECK(d21["bounds"]["success_conditional"]["exact"] == "1/2");
  CHECK(d21["bounds"]["gap"]["exact"] == "0/1");
  CHECK(d21["bounds"].contains("n_lower_precise_ceil"));

  const auto r16 = run("analyze 16");
  CHECK(r16.status == 1);
  CHECK(json_of(r16)["error"]["code"] == "unsupported_even_modulus");

  CHECK(run("analyze 15 --epsilon 2").status == 1);
  CHECK(run("analyze").status == 2);
  CHECK(run("analyze 15 --format csv").status == 2);
  CHECK(run("bogus").status == 2);
}

TEST_CASE("verify") {
  const auto r = run("verify 15");
  REQUIRE(r.status == 0);
  const auto d = json_of(r);
  CHECK(d["items"][0]["formula"] == "1/4");
  CHECK(d["items"][0]["oracle"]["count"] == 2);
  CHECK(d["items"][0]["oracle"]["total"] == 8);
  CHECK(d["items"][0]["match"] == true);

  const auto range = json_of(run("verify --range 9 99"));
  CHECK(range["summary"]["mismatches"] == 0);
  CHECK(range["summary"]["checked"] == 20);

  const auto sf = json_of(run("verify --range 9 99 --squarefree-only"));
  CHECK(sf["summary"]["checked"] == 16);

  const auto r11 = run("verify 11");
  CHECK(r11.status == 0);
  CHECK(json_of(r11)["items"][0]["status"] == "skipped");

  // Flag beats environment, environment beats the default.
  CHECK(run("verify 3003", "SHORBOUNDS_MAX_ENUM=1000").status == 1);
  CHECK(run("verify 3003 --max-enumeration 5000", "SHORBOUNDS_MAX_ENUM=1000").status == 0);
  CHECK(run("verify 3003").status == 0);
}

TEST_CASE("simulate: deterministic and statistically sound") {
  const auto a = run("simulate 15 --trials 100000 --seed 42 --order-mode exact");
  const auto b = run("simulate 15 --trials 100000 --seed 42 --order-mode exact");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const auto d = json_of(a);
  CHECK(d["seed"] == 42);
  CHECK(std::abs(d["estimate"]["z_score"].get<double>()) <= 3.0);

  const auto d21 = json_of(run("simulate 21 --trials 100000 --seed 7"));
  CHECK(std::abs(d21["estimate"]["p_hat"].get<double>() - 0.5) < 0.01);

  CHECK(run("simulate 15 --trials 10000 --seed 1 --workers 4").out ==
        run("simulate 15 --trials 10000 --seed 1").out);
  CHECK(run("simulate 15 --order-mode quantum").status == 2);
  CHECK(run("simulate 49").status == 1);
}

TEST_CASE("sweep") {
  const auto r = run("sweep --k 2 --tau-max 8 --format csv");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("tau_p,tau_q,prob_num,prob_den,prob_decimal\n1,1,1,2,0.5\n", 0) == 0);
  CHECK(r.out.find("\n2,2,5,8,0.625\n") != std::string::npos);
  CHECK(r.out.find("\n1,2,3,4,0.75\n") != std::string::npos);
  CHECK(run("sweep --emit-plot-data --tau-max 8").out == r.out);

  const auto j = json_of(run("sweep --k 3 --tau-max 2 --format json"));
  CHECK(j["rows"].size() == 8);
  CHECK(j["minimum"]["prob"] == "3/4");

  CHECK(run("sweep --format xml").status == 2);
}

TEST_CASE("JSON output round-trips under canonical key ordering") {
  for (const char* args : {"analyze 1155", "verify --range 9 40", "simulate 35 --trials 2000",
                           "sweep --format json --tau-max 3"}) {
    const auto r = run(args);
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
  }
}
