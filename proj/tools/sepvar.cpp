// sepvar: classify separated-variable curves P(x) - Q(y) = 0.
#include "sepvar/catalog.hpp"
#include "sepvar/parse.hpp"
#include "sepvar/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int run_classify(const std::string& p_text, const std::string& q_text, sepvar::ReportOptions opts,
                 const std::string& oracle, bool as_json) {
  sepvar::Poly p, q;
  try {
    p = sepvar::parse_poly(p_text);
  } catch (const sepvar::ParseError& e) {
    std::cerr << "error: --p: " << e.what() << "\n";
    return 1;
  }
  try {
    q = sepvar::parse_poly(q_text);
  } catch (const sepvar::ParseError& e) {
    std::cerr << "error: --q: " << e.what() << "\n";
    return 1;
  }
  opts.geometry = oracle == "geometry" || oracle == "both";
  opts.numeric = oracle == "numeric" || oracle == "both";
  try {
    sepvar::Report r = sepvar::build_report(p, q, opts);
    if (as_json)
      std::cout << sepvar::to_json(r, opts).dump(2) << "\n";
    else
      std::cout << sepvar::to_text(r, opts);
    return sepvar::exit_code(r.verdict.outcome);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_selftest() {
  int failed = 0;
  for (const auto& line : sepvar::run_selftest()) {
    std::cout << (line.passed ? "PASS " : "FAIL ") << line.name;
    if (!line.detail.empty()) std::cout << "  (" << line.detail << ")";
    std::cout << "\n";
    failed += line.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact low-genus / hyperbolicity classifier for P(x) - Q(y) = 0"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "classify one pair (P, Q)");
  std::string p_text, q_text, oracle = "none";
  bool as_json = false;
  sepvar::ReportOptions opts;
  classify->add_option("--p", p_text, "polynomial P in x")->required();
  classify->add_option("--q", q_text, "polynomial Q, also written in x")->required();
  classify->add_flag("--json", as_json, "machine-readable report");
  classify->add_flag("--witness", opts.witness, "emit the two regular 1-forms for hyperbolic verdicts");
  classify->add_option("--oracle", oracle, "corroborate with an oracle")
      ->check(CLI::IsMember({"none", "geometry", "numeric", "both"}));
  classify->add_option("--precision", opts.precision_bits, "starting precision in bits for the numeric oracle")
      ->check(CLI::Range(64, sepvar::kPrecisionCap));
  classify->add_flag("--timings", opts.timings, "report stage timings");

  auto* selftest = app.add_subcommand("selftest", "run the built-in catalog of known instances");
  auto* list = app.add_subcommand("catalog", "print the catalog as name<TAB>P<TAB>Q lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*classify) return run_classify(p_text, q_text, opts, oracle, as_json);
  if (*selftest) return run_selftest();
  if (*list) {
    for (const auto& e : sepvar::catalog()) std::cout << e.name << '\t' << e.p << '\t' << e.q << '\n';
    return 0;
  }
  return 1;
}
