#include "mackey/cli.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mackey/cartan.hpp"
#include "mackey/catalog.hpp"
#include "mackey/errors.hpp"
#include "mackey/numtheory.hpp"
#include "mackey/report.hpp"

namespace mackey {

namespace {

struct Options {
  std::string group_spec;
  unsigned long long prime = 2;
  std::string format = "text";
  bool verify = false;
  std::size_t max_order = kDefaultElementBudget;
};

int run_analyze(const Options& opt, std::ostream& out) {
  FiniteGroup group = build_group(opt.group_spec, opt.max_order);
  CartanReport report = analyze(group, opt.prime, opt.verify);
  out << (opt.format == "json" ? render_json(report) : render_text(report));
  if (report.verification)
    for (const VerificationRecord& record : *report.verification)
      if (!record.pass) return 2;
  return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
  const bool whole_catalog = opt.group_spec == "catalog";
  const std::vector<std::string> specs =
      whole_catalog ? builtin_verification_specs()
                    : std::vector<std::string>{opt.group_spec};

  std::vector<CartanReport> reports;
  std::vector<std::string> skipped;
  for (const std::string& spec : specs) {
    std::optional<FiniteGroup> group;
    try {
      group = build_group(spec, opt.max_order);
    } catch (const error&) {
      // Catalog entries above the order limit are skipped, not fatal; the
      // built-in specs cannot fail for any other reason.
      if (!whole_catalog) throw;
      skipped.push_back(spec);
      continue;
    }
    reports.push_back(analyze(*group, opt.prime, true));
  }

  bool all_pass = true;
  for (const CartanReport& report : reports)
    for (const VerificationRecord& record : *report.verification)
      all_pass = all_pass && record.pass;

  if (opt.format == "json") {
    if (whole_catalog)
      out << render_json(reports);
    else
      out << render_json(reports.front());
  } else {
    bool first = true;
    for (const CartanReport& report : reports) {
      if (!first) out << "\n";
      first = false;
      out << "== " << report.group_name << "  prime " << report.prime << "\n"
          << render_verification_lines(report);
    }
    for (const std::string& spec : skipped)
      out << "\n== " << spec << "  skipped (order above limit)\n";
    out << "\n" << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_pass ? 0 : 2;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cartan matrix invariants of Mackey algebras of finite groups"};
  app.name("mackey-cartan");
  app.require_subcommand(1);

  Options opt;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze one group at one prime");
  analyze_cmd->add_option("--group", opt.group_spec, "Group spec (see 'catalog')")
      ->required();
  analyze_cmd->add_option("--prime", opt.prime, "The prime p")->required();
  analyze_cmd->add_option("--format", opt.format, "Output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--verify", opt.verify, "Also run the oracle cross-checks");
  analyze_cmd->add_option("--max-order", opt.max_order, "Largest allowed group order");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the oracle cross-checks and report PASS/FAIL");
  verify_cmd
      ->add_option("--group", opt.group_spec,
                   "Group spec, or 'catalog' for the built-in set")
      ->required();
  verify_cmd->add_option("--prime", opt.prime, "The prime p")->required();
  verify_cmd->add_option("--format", opt.format, "Output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--max-order", opt.max_order, "Largest allowed group order");

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "List group specs and the file format");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    // CLI11's own exit codes run past 2; fold them into the 0/1/2 contract.
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (catalog_cmd->parsed()) {
      out << catalog_listing();
      return 0;
    }
    if (!is_prime(opt.prime)) {
      err << "error: --prime must be a prime number\n";
      return 1;
    }
    if (analyze_cmd->parsed()) return run_analyze(opt, out);
    if (verify_cmd->parsed()) return run_verify(opt, out);
    err << "error: no command given\n";
    return 1;
  } catch (const consistency_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace mackey
