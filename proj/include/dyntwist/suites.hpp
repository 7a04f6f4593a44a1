#pragma once

#include "dyntwist/dyncalc.hpp"

#include <string>
#include <vector>

namespace dyntwist {

struct SuiteConfig {
  int max_dim = 4;      // largest p for single-representation cases
  int pair_dim = 4;     // largest p per leg for tensor pairs
  int triple_dim = 3;   // largest p per leg for triples
  int trunc = 8;        // K for truncated infinite products
  int expand_order = 40;  // Laurent comparison cap (y-order)
  int jobs = 1;
};

/// Suite names accepted by the harness, in canonical order. The hidden
/// "selftest-fail" suite (one deliberately failing case, used to exercise the
/// exit-code contract) is not included.
std::vector<std::string> suite_names();

bool is_suite_name(const std::string& name);

/// Runs one suite; report order is deterministic for a fixed config
/// regardless of jobs.
std::vector<IdentityReport> run_suite(const std::string& name, const SuiteConfig& cfg);

/// Wraps results in the report envelope. runtime_ms is zeroed so repeated
/// runs with the same config are byte-identical.
nlohmann::json report_json(const SuiteConfig& cfg,
                           const std::vector<std::string>& suites,
                           const std::vector<IdentityReport>& results);

std::string report_text(const std::vector<IdentityReport>& results);

/// Pass criterion used everywhere: exact, or a measured positive order for
/// truncated forms.
bool all_ok(const std::vector<IdentityReport>& results);

}  // namespace dyntwist
