// Command-line front end: powerhom <command> <file> [flags]

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "powerhom/cli.hpp"
#include "powerhom/parse.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw powerhom::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace powerhom;

  CLI::App app{"Artin-Rees numbers, resolutions, Koszul homology and Golod tests for powers of graded ideals"};
  std::string command, path, powers_text, metrics_text, experiment;
  int power = 0, syzygy = -1, order = 0, max_degree = -1;
  double timeout = -1;
  bool oracle = false, no_timing = false, print = false;
  Format format = Format::Table;
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

  app.add_option("command", command, "gb | resolve | betti | artin-rees | scan | rees | spread | golod | deviations")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("file", path, "problem file ('-' reads standard input)")->required();
  app.add_option("--power", power, "work with I^k")->check(CLI::PositiveNumber);
  app.add_option("--powers", powers_text, "range of powers a..b");
  app.add_option("--syzygy", syzygy, "syzygy index j")->check(CLI::NonNegativeNumber);
  app.add_option("--order", order, "truncation order t")->check(CLI::PositiveNumber);
  app.add_option("--metrics", metrics_text, "comma list: generators,betti,reg,rho,spread,poincare,all");
  app.add_option("--format", format, "table | csv | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--oracle", oracle, "cross-check with the direct intersection oracle");
  app.add_option("--max-degree", max_degree, "abort computations above this degree")->check(CLI::NonNegativeNumber);
  app.add_option("--timeout-secs", timeout, "wall-clock limit in seconds")->check(CLI::PositiveNumber);
  app.add_option("--experiment", experiment, "take defaults from a named experiment block");
  app.add_flag("--no-timing", no_timing, "omit the elapsed-time footer");
  app.add_flag("--print", print, "echo the normalized problem file to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string text;
  try {
    text = slurp(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    ProblemFile problem = parse_problem(text);
    if (print) std::cerr << print_problem(problem);
    CommandFlags flags;
    flags.format = format;
    flags.oracle = oracle;
    if (power > 0) flags.power = power;
    if (!powers_text.empty()) flags.powers = parse_range(powers_text);
    if (syzygy >= 0) flags.syzygy = syzygy;
    if (order > 0) flags.order = order;
    if (!metrics_text.empty()) {
      std::stringstream ss(metrics_text);
      for (std::string m; std::getline(ss, m, ',');) flags.metrics.push_back(m);
    }
    if (max_degree >= 0) flags.max_degree = max_degree;
    if (timeout > 0) flags.timeout_secs = timeout;
    if (!experiment.empty()) flags.experiment = experiment;

    Report report = run_command(command, problem, flags, text);
    std::cout << render(report, format, !no_timing);
    return exit_code(report);
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.bare_message() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
