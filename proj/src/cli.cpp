#include "hodgeledger/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hodgeledger/errors.hpp"
#include "hodgeledger/expr.hpp"
#include "hodgeledger/ledger.hpp"
#include "hodgeledger/pipeline.hpp"
#include "hodgeledger/render.hpp"
#include "hodgeledger/report.hpp"
#include "hodgeledger/spaces.hpp"

namespace hodgeledger {

namespace {

// --fixtures beats HODGELEDGER_FIXTURES beats the built-in document.
Ledger resolve_ledger(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty())
    if (const char* env = std::getenv("HODGELEDGER_FIXTURES")) path = env;
  if (path.empty()) return builtin_ledger();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureInvalid("cannot read fixture file \"" + path + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  return load_ledger(text.str());
}

void print_summary(std::ostream& out, const VerificationReport& report) {
  std::size_t passed = 0;
  for (const auto& check : report.checks)
    if (check.pass) ++passed;
  out << "RESULT: " << (report.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/"
      << report.checks.size() << " checks)\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact bigraded cohomology tables, string decompositions, and their verification"};
  app.name("hodgeledger");
  app.require_subcommand(1);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a class expression and print it");
  std::string expr_text;
  eval_cmd->add_option("expr", expr_text, "expression, e.g. \"sym(3, U)\"")->required();
  std::string eval_out = "json";
  eval_cmd->add_option("--out", eval_out, "output format (default json)")
      ->check(CLI::IsMember({"json", "diamond", "betti", "epoly", "tex"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a verification battery");
  verify_cmd->require_subcommand(1);
  auto* og6_cmd = verify_cmd->add_subcommand("og6", "verify the sixfold table end to end");
  long long hn_coeff = 17;
  og6_cmd->add_option("--hn-coeff", hn_coeff,
                      "coefficient of U<2> in the comparison total space (default 17)")
      ->check(CLI::NonNegativeNumber);
  std::string verify_out = "text";
  og6_cmd->add_option("--out", verify_out, "output format (default text)")
      ->check(CLI::IsMember({"json", "text"}));

  auto* ledger_cmd = app.add_subcommand("ledger", "component-count ledger operations");
  ledger_cmd->require_subcommand(1);
  auto* check_cmd = ledger_cmd->add_subcommand("check", "validate and cross-check a ledger fixture");
  std::string fixtures_path;
  check_cmd->add_option("--fixtures", fixtures_path, "path to a ledger/v1 JSON file");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "built-in class fixtures");
  fixtures_cmd->require_subcommand(1);
  fixtures_cmd->add_subcommand("list", "list the built-in fixtures with their degree profiles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) {
      const HodgeClass value = evaluate(*parse_expr(expr_text));
      out << render(value, render_format_from_name(eval_out)) << "\n";
      return 0;
    }

    if (og6_cmd->parsed()) {
      const Ledger ledger = resolve_ledger("");
      const VerificationReport report = verify_og6(Int(hn_coeff), ledger);
      if (verify_out == "json") {
        out << report_to_json(report) << "\n";
      } else {
        out << report_to_text(report);
        print_summary(out, report);
      }
      return report.all_pass() ? 0 : 1;
    }

    if (check_cmd->parsed()) {
      const Ledger ledger = resolve_ledger(fixtures_path);
      VerificationReport report;
      try {
        report = verify_component_table(ledger);
      } catch (const Inconsistent& e) {
        out << "INCONSISTENT: " << e.what() << "\n";
        return 1;
      }
      out << report_to_text(report);
      out << "solutions: ";
      bool first = true;
      out << "{";
      for (const auto& [r, r24] : solve_unknowns(ledger)) {
        if (!first) out << ", ";
        first = false;
        out << "(" << r.str() << "," << r24.str() << ")";
      }
      out << "}\n";
      print_summary(out, report);
      return report.all_pass() ? 0 : 1;
    }

    // fixtures list
    for (FixtureName name : {FixtureName::J, FixtureName::A, FixtureName::U, FixtureName::W,
                             FixtureName::KummerK3, FixtureName::Z, FixtureName::Sigma}) {
      const HodgeClass value = fixture(name);
      out << fixture_to_name(name) << " dim=" << value.total_dimension().str()
          << " betti=" << render(value, RenderFormat::betti) << "\n";
    }
    return 0;
  } catch (const Inconsistent& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotEffective& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hodgeledger
