#include "dyntwist/suites.hpp"

#include <doctest.h>

using namespace dyntwist;

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 10);
  CHECK(is_suite_name("twist"));
  CHECK(is_suite_name("selftest-fail"));
  CHECK_FALSE(is_suite_name("nosuch"));
  for (const auto& n : suite_names()) CHECK(n != "selftest-fail");
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_suite("nosuch", cfg), std::invalid_argument);
}

TEST_CASE("run_suite is deterministic and jobs-invariant") {
  SuiteConfig cfg;
  cfg.max_dim = 1;
  cfg.pair_dim = 1;
  cfg.triple_dim = 1;
  cfg.trunc = 2;
  cfg.expand_order = 10;
  auto a = run_suite("grouplike", cfg);
  cfg.jobs = 3;
  auto b = run_suite("grouplike", cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identity == b[i].identity);
    CHECK(a[i].legs == b[i].legs);
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(a[i].order == b[i].order);
  }
}

TEST_CASE("report envelope") {
  SuiteConfig cfg;
  auto rs = run_suite("selftest-fail", cfg);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == "fail");
  CHECK_FALSE(all_ok(rs));

  nlohmann::json j = report_json(cfg, {"selftest-fail"}, rs);
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["results"].size() == 1);
  CHECK(j["results"][0]["runtime_ms"] == 0);
  CHECK(j["config"]["trunc"] == 8);

  std::string text = report_text(rs);
  CHECK(text.find("FAIL selftest-fail/injected_failure") != std::string::npos);
  CHECK(text.find("witness[") != std::string::npos);
}

TEST_CASE("algebra suite at max_dim 0 has the trivial single case") {
  SuiteConfig cfg;
  cfg.max_dim = 0;
  cfg.pair_dim = 0;
  auto rs = run_suite("algebra", cfg);
  CHECK(rs.size() == 6);  // three relations on V_0 and on V_0 x V_0
  CHECK(all_ok(rs));
}
