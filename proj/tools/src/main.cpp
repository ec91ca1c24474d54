#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "irindex/error.hpp"
#include "irindex/verify.hpp"
#include "irindex_cli/commands.hpp"

namespace {

using irindex::cli::Json;

struct Common {
  std::string format = "human";
  bool timing = false;
  std::string expr;
  std::string file;
};

void add_output_flags(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  sub->add_flag("--timing", c.timing, "add wall-clock time to the report");
}

void add_input(CLI::App* sub, Common& c) {
  sub->add_option("-e,--expr", c.expr, "input text; '/' or ';' separate lines");
  sub->add_option("file", c.file, "input file, '-' for standard input");
}

std::string read_input(const Common& c) {
  if (!c.expr.empty()) return c.expr;
  if (c.file.empty() || c.file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(c.file);
  if (!in) throw irindex::Error(irindex::ErrorKind::InvalidArgument, "cannot open " + c.file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
int run(const std::string& command, const Common& c, F&& body) {
  Json report;
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = body();
    code = irindex::cli::exit_code(report);
    if (c.timing) {
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      report["timing_ms"] = ms.count();
    }
  } catch (const std::exception& e) {
    report = irindex::cli::error_report(command, e, code);
    std::cerr << irindex::cli::render_human(report);
    if (c.format != "json") return code;
  }
  if (c.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << irindex::cli::render_human(report);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reducibility indices of modules in three computable arenas"};
  app.set_version_flag("--version", std::string(IRINDEX_VERSION_STRING));
  app.require_subcommand(1);

  Common c;
  std::uint64_t seed = 42;
  std::uint64_t max_order = irindex::kMaxOracleOrder;
  std::string scope = "all";
  std::string descriptor;

  auto* decompose = app.add_subcommand("decompose", "irreducible decomposition, Ass and Bass numbers");
  add_input(decompose, c);
  add_output_flags(decompose, c);
  decompose->add_option("--seed", seed, "seed for the random splitting strategy")->capture_default_str();

  auto* basechange = app.add_subcommand("basechange", "ir before and after a flat base change");
  basechange->add_option("descriptor", descriptor, "extend:k, invert:y,z or field:GF(p)->GF(p^k)")
      ->required();
  add_input(basechange, c);
  add_output_flags(basechange, c);

  auto* dual = app.add_subcommand("dual", "staircase and the sum-reducibility index of the dual");
  add_input(dual, c);
  add_output_flags(dual, c);

  auto* abelian = app.add_subcommand("abelian", "sum-reducibility index of a finite abelian group");
  add_input(abelian, c);
  add_output_flags(abelian, c);
  abelian->add_option("--max-order", max_order, "largest order given to the brute force")
      ->check(CLI::Range(std::uint64_t{1}, irindex::kMaxOracleOrder))
      ->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  add_output_flags(selftest, c);
  selftest->add_option("--scope", scope, "suite to run")
      ->check(CLI::IsMember(irindex::selftest_scopes()))
      ->capture_default_str();
  selftest->add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();
  selftest->add_option("--max-order", max_order, "largest group order in the abelian suites")
      ->check(CLI::Range(std::uint64_t{1}, irindex::kMaxOracleOrder))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*decompose) return run("decompose", c, [&] { return irindex::cli::cmd_decompose(read_input(c), seed); });
  if (*basechange) {
    return run("basechange", c, [&] { return irindex::cli::cmd_basechange(read_input(c), descriptor); });
  }
  if (*dual) return run("dual", c, [&] { return irindex::cli::cmd_dual(read_input(c)); });
  if (*abelian) return run("abelian", c, [&] { return irindex::cli::cmd_abelian(read_input(c), max_order); });
  return run("selftest", c, [&] { return irindex::cli::cmd_selftest(scope, seed, max_order); });
}
