#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hdeg/cli/report.hpp"

namespace {

int fail(int code, const std::string& kind, const std::string& msg) {
  std::cerr << "hdeg: " << kind << ": " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients, homological degree and the chi1 theorems for graded modules"};
  std::string input = "-";
  std::string field;
  std::string format = "text";
  std::uint64_t seed = 0;
  int degree_cap = hdeg::Limits{}.degree_cap;
  int sample_cap = hdeg::Limits{}.sample_cap;
  app.add_option("--input", input, "script file, - for standard input");
  app.add_option("--field", field, "override the coefficient field: qq or fp:P");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for the generator recombination search");
  app.add_option("--degree-cap", degree_cap, "largest degree a Groebner basis may reach")->check(CLI::PositiveNumber);
  app.add_option("--sample-cap", sample_cap, "largest n for Hilbert-Samuel sampling")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string text;
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) return fail(2, "input error", "cannot open '" + input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  hdeg::cli::SessionConfig cfg;
  cfg.seed = seed;
  cfg.limits.degree_cap = degree_cap;
  cfg.limits.sample_cap = sample_cap;
  cfg.format = format == "json" ? hdeg::cli::Format::json : hdeg::cli::Format::text;
  try {
    if (!field.empty()) cfg.field = hdeg::cli::parse_field_spec(field);
    auto script = hdeg::cli::parse_input(text);
    auto report = hdeg::cli::run_command(script, cfg);
    std::cout << hdeg::cli::emit_report(report, cfg.format);
    return hdeg::cli::has_violation(report) ? 1 : 0;
  } catch (const hdeg::cli::ScriptError& e) {
    return fail(2, "input error", (input == "-" ? std::string("<stdin>") : input) + ":" + e.what());
  } catch (const hdeg::InputError& e) {
    return fail(2, "input error", e.what());
  } catch (const hdeg::CapExceeded& e) {
    return fail(2, "cap exceeded", e.what());
  } catch (const hdeg::EngineError& e) {
    return fail(1, "engine violation", e.what());
  } catch (const std::exception& e) {
    return fail(1, "internal error", e.what());
  }
}
