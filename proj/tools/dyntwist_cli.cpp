#include "dyntwist/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dyntwist;

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int run_verify(const std::string& suite_arg, const SuiteConfig& cfg,
               const std::string& format, const std::string& out_path) {
  std::vector<std::string> selected;
  if (suite_arg == "all") {
    selected = suite_names();
  } else {
    if (!is_suite_name(suite_arg)) {
      std::cerr << "unknown suite: " << suite_arg << "\nknown suites: all";
      for (const auto& s : suite_names()) std::cerr << " " << s;
      std::cerr << "\n";
      return 2;
    }
    selected = {suite_arg};
  }

  std::vector<IdentityReport> results;
  for (const auto& s : selected) {
    auto batch = run_suite(s, cfg);
    results.insert(results.end(), batch.begin(), batch.end());
  }

  std::string text;
  if (format == "json") {
    text = report_json(cfg, selected, results).dump(2) + "\n";
  } else {
    text = report_text(results);
    int pass = 0, fail = 0;
    for (const auto& r : results) (r.ok() ? pass : fail)++;
    text += "summary: " + std::to_string(pass) + " passed, " + std::to_string(fail) +
            " failed\n";
  }
  int rc = write_output(text, out_path);
  if (rc != 0) return rc;
  return all_ok(results) ? 0 : 1;
}

int run_eval(const std::string& element, const std::string& dims_arg, int trunc,
             const std::string& out_path) {
  std::vector<int> dims;
  std::stringstream ss(dims_arg);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      int p = std::stoi(piece, &used);
      if (used != piece.size() || p < 0) throw std::invalid_argument(piece);
      dims.push_back(p);
    } catch (const std::exception&) {
      std::cerr << "bad dimension list: " << dims_arg << "\n";
      return 2;
    }
  }
  Recipe r;
  try {
    r = catalog_lookup(element, trunc);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\nknown elements:";
    for (const auto& n : catalog_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  if (static_cast<int>(dims.size()) != r.arity) {
    std::cerr << "element " << element << " has arity " << r.arity << ", got "
              << dims.size() << " dimension(s)\n";
    return 2;
  }
  std::vector<GeneratorSet> legs;
  for (int p : dims) legs.push_back(build_irrep(p));
  Operator op = r(legs);

  std::string text = "element: " + element + "\nlegs:";
  for (int p : dims) text += " " + std::to_string(p);
  text += "\ndim: " + std::to_string(op.space.dim()) + "\n";
  if (r.truncation) text += "truncation: " + std::to_string(*r.truncation) + "\n";
  for (int i = 0; i < op.space.dim(); ++i)
    for (int j = 0; j < op.space.dim(); ++j)
      if (!op.mat(i, j).is_zero())
        text += "(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                op.mat(i, j).canonical_string() + "\n";
  return write_output(text, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification harness for the dynamical twist construction"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  cfg.triple_dim = 3;
  cfg.max_dim = 4;
  cfg.pair_dim = 4;
  cfg.trunc = 8;
  cfg.expand_order = 40;
  std::string suite_arg = "all", format = "text", out_path;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite_arg, "suite name or 'all'");
  verify->add_option("--max-dim", cfg.max_dim, "largest p for single-leg cases")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--pair-dim", cfg.pair_dim, "largest p per leg for pairs")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--triple-dim", cfg.triple_dim, "largest p per leg for triples")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--trunc", cfg.trunc, "factors kept in truncated products")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--expand-order", cfg.expand_order, "Laurent comparison cap")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report to a file");
  verify->add_option("--jobs", cfg.jobs, "worker threads per suite")
      ->check(CLI::PositiveNumber);

  std::string element, dims_arg;
  int eval_trunc = 8;
  CLI::App* eval = app.add_subcommand("eval", "print a catalog element");
  eval->add_option("element", element, "catalog element name")->required();
  eval->add_option("dims", dims_arg, "comma-separated leg dimensions p_i")->required();
  eval->add_option("--trunc", eval_trunc, "factors kept in truncated products")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--out", out_path, "write the output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(suite_arg, cfg, format, out_path);
    return run_eval(element, dims_arg, eval_trunc, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
