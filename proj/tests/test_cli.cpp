#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "powerhom/cli.hpp"
#include "powerhom/parse.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* kM2 = "field Q\nvars x y\nideal: x^2, x*y, y^2\n";

ProblemFile m2() { return parse_problem(kM2); }

ParseError parse_failure(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError("", 0, 0);
}

const ReportTable& table_titled(const Report& r, const std::string& prefix) {
  for (const auto& t : r.tables)
    if (t.title.rfind(prefix, 0) == 0) return t;
  FAIL("no table titled " << prefix);
  return r.tables.front();
}

const ReportVerdict& verdict(const Report& r, const std::string& name) {
  for (const auto& v : r.verdicts)
    if (v.name == name) return v;
  FAIL("no verdict " << name);
  return r.verdicts.front();
}

std::size_t column(const ReportTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  FAIL("no column " << name);
  return 0;
}

// Random homogeneous problem files: 1 to 3 variables, rational coefficients.
std::string random_problem_text(std::mt19937& rng) {
  static const std::vector<std::string> names{"x", "y", "z"};
  int n = std::uniform_int_distribution<int>(1, 3)(rng);
  std::string text = (rng() % 3 == 0 ? "field GF 101\nvars" : "field Q\nvars");
  for (int i = 0; i < n; ++i) text += " " + names[i];
  text += "\nideal:\n";
  int count = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int g = 0; g < count; ++g) {
    int deg = std::uniform_int_distribution<int>(1, 3)(rng);
    std::string poly;
    int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int t = 0; t < terms; ++t) {
      long num = std::uniform_int_distribution<long>(-9, 9)(rng);
      if (num == 0) num = 1;
      long den = std::uniform_int_distribution<long>(1, 4)(rng);
      std::string mono;
      std::vector<int> e(n, 0);
      for (int d = 0; d < deg; ++d) ++e[rng() % n];
      for (int i = 0; i < n; ++i)
        if (e[i]) mono += (mono.empty() ? "" : "*") + names[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
      poly += (t == 0 ? "" : " + ") + std::string("(") + std::to_string(num) + "/" + std::to_string(den) + ")*" + mono;
    }
    text += "  " + poly + "\n";
  }
  if (rng() % 2) {
    text += "experiment run" + std::to_string(rng() % 10) + ":\n";
    int a = std::uniform_int_distribution<int>(1, 3)(rng);
    text += "  powers " + std::to_string(a) + ".." + std::to_string(a + rng() % 4) + "\n";
    text += "  order " + std::to_string(1 + rng() % 6) + "\n";
    text += "  metrics betti,rho\n";
  }
  return text;
}

#ifdef POWERHOM_CLI_PATH
int run_cli(const std::string& args) {
  std::string cmd = std::string(POWERHOM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("problem file basics") {
  auto p = m2();
  CHECK(p.field == Field::rationals());
  CHECK(p.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(p.generators.size() == 3);
  CHECK(p.ring->order() == MonomialOrder::degrevlex());
  CHECK(p.generators[1] == P(p.ring, "x*y"));

  auto q = parse_problem("# comment\nfield GF 32003\nvars a b c\nideal:\n  3/2*a^2 - b*c   # trailing\n  c^2\n");
  CHECK(q.field == Field::prime(32003));
  REQUIRE(q.generators.size() == 2);
  auto r = parse_problem("field Q\nvars x\nideal: 3/2*x\n");
  CHECK(r.generators[0].lead().coef == Scalar(Field::rationals(), mpq_class(3, 2)));

  auto multi = parse_problem("vars x y\nideal: x^2,\n  y^2\n");
  CHECK(multi.generators.size() == 2);
}

TEST_CASE("parse errors carry positions") {
  auto e = parse_failure("field Q\nvars x y\nideal: x^-1\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 10);

  e = parse_failure("field Q\nvars x y\nideal:\n  x*z\n");
  CHECK(e.line() == 4);
  CHECK(e.column() == 5);
  CHECK(e.bare_message().find("unknown variable") != std::string::npos);

  e = parse_failure("field Q\nvars x y\nideal: x, x - x\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);
  CHECK(e.bare_message().find("zero") != std::string::npos);

  e = parse_failure("field Q\nvars x y\nideal: x^2, y\n  2*x^2\n");
  CHECK(e.line() == 4);
  CHECK(e.column() == 3);
  CHECK(e.bare_message().find("duplicate") != std::string::npos);

  e = parse_failure("field Q\nvars x y\nideal:\n");
  CHECK(e.bare_message().find("no generators") != std::string::npos);

  e = parse_failure("field Q\nvars x x\nideal: x\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 8);

  CHECK(parse_failure("field GF 12\nvars x\nideal: x\n").line() == 1);
  CHECK(parse_failure("field Q\nvars x\nideal: x, , x^2\n").column() == 11);
  CHECK(parse_failure("vars x\nideal: x\nexperiment e:\n  colour red\n").line() == 4);
  CHECK(parse_failure("vars x\nideal: x\nexperiment e:\n  powers 3..1\n").line() == 4);
  CHECK(parse_failure("ideal: x\n").line() == 1);
}

TEST_CASE("experiment blocks") {
  auto p = parse_problem(std::string(kM2) + "\nexperiment tail:\n  powers 2..6\n  order 4\n  metrics reg,rho\n");
  REQUIRE(p.experiments.size() == 1);
  const auto* e = p.experiment("tail");
  REQUIRE(e);
  CHECK(e->powers == std::pair<int, int>{2, 6});
  CHECK(e->order == 4);
  CHECK(e->metrics == std::vector<std::string>{"reg", "rho"});
  CHECK(p.experiment("other") == nullptr);

  CommandFlags f;
  f.experiment = "tail";
  f.format = Format::Csv;
  auto r = run_command("scan", p, f);
  CHECK(r.tables.front().rows.size() == 5);
  f.experiment = "missing";
  CHECK_THROWS_AS(run_command("scan", p, f), Error);
}

TEST_CASE("property: parse, print, parse is idempotent") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text = random_problem_text(rng);
    ProblemFile a;
    try {
      a = parse_problem(text);
    } catch (const ParseError& e) {
      // random terms can cancel or repeat; such inputs are rightly rejected
      std::string m = e.bare_message();
      CHECK((m.find("zero") != std::string::npos || m.find("duplicate") != std::string::npos));
      continue;
    }
    std::string printed = print_problem(a);
    ProblemFile b = parse_problem(printed);
    CHECK(a == b);
    CHECK(print_problem(b) == printed);
    for (std::size_t i = 0; i < a.generators.size(); ++i) CHECK(a.generators[i] == b.generators[i].in_ring(a.ring));
  }
}

TEST_CASE("golod command on m^2") {
  CommandFlags f;
  f.power = 1;
  f.order = 6;
  auto r = run_command("golod", m2(), f);
  CHECK(r.complete);
  CHECK(verdict(r, "golod").value);
  CHECK(verdict(r, "golod").order == 6);
  const auto& s = table_titled(r, "Poincare series");
  REQUIRE(s.rows.size() == 7);
  // 1/(1-2z)
  for (int i = 0; i <= 6; ++i) CHECK(s.rows[i][column(s, "actual")] == std::to_string(1L << i));
  CHECK(std::find(r.notes.begin(), r.notes.end(), "poincare: 1,2,4,8,16,32,64") != r.notes.end());

  auto neg = run_command("golod", parse_problem("vars x y\nideal: x^2, y^2\n"), f);
  CHECK_FALSE(verdict(neg, "golod").value);
}

TEST_CASE("scan command emits one CSV row per power") {
  CommandFlags f;
  f.powers = {1, 4};
  f.metrics = {"betti", "reg", "rho"};
  f.format = Format::Csv;
  auto r = run_command("scan", m2(), f);
  CHECK(r.complete);
  auto csv = render(r, Format::Csv);
  auto t = parse_csv(csv);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.columns == r.tables.front().columns);
  CHECK(t.rows == r.tables.front().rows);
  std::size_t reg = column(t, "reg");
  // reg(m^{2k}) = 2k
  for (int k = 1; k <= 4; ++k) CHECK(t.rows[k - 1][reg] == std::to_string(2 * k));
  CHECK(csv.find('.') == std::string::npos);
  CHECK(csv.find("elapsed") == std::string::npos);
}

TEST_CASE("artin-rees command with oracle") {
  CommandFlags f;
  f.power = 2;
  f.syzygy = 1;
  f.oracle = true;
  auto r = run_command("artin-rees", m2(), f);
  const auto& s = table_titled(r, "rho_1");
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0][column(s, "rho")] == s.rows[0][column(s, "oracle")]);
  CHECK(verdict(r, "oracle_agrees").value);
  CHECK(verdict(r, "regularity_bound").value);
}

TEST_CASE("every command runs and round-trips through JSON") {
  auto p = m2();
  for (const auto& name : command_names()) {
    CAPTURE(name);
    CommandFlags f;
    if (name == "scan") f.powers = {1, 3};
    if (name == "deviations") f.powers = {2, 4};
    auto r = run_command(name, p, f, kM2);
    CHECK(r.complete);
    CHECK_FALSE(r.tables.empty());
    auto back = parse_report_json(render(r, Format::Json));
    CHECK(back.command == r.command);
    CHECK(back.input_hash == r.input_hash);
    CHECK(back.tables == r.tables);
    CHECK(back.verdicts == r.verdicts);
    CHECK(back.notes == r.notes);
  }
}

TEST_CASE("output is deterministic apart from the footer") {
  auto p = m2();
  CommandFlags f;
  f.powers = {1, 3};
  f.metrics = {"all"};
  for (auto fmt : {Format::Table, Format::Csv, Format::Json}) {
    auto a = render(run_command("scan", p, f, kM2), fmt, false);
    auto b = render(run_command("scan", p, f, kM2), fmt, false);
    CHECK(a == b);
  }
  auto with = render(run_command("betti", p, f, kM2), Format::Table, true);
  auto without = render(run_command("betti", p, f, kM2), Format::Table, false);
  CHECK(with.substr(0, without.size()) == without);
  CHECK(with.find("# elapsed") != std::string::npos);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("exact numbers survive JSON as strings") {
  auto p = parse_problem("vars x y\nideal: x^2 - 3/2*y^2, x*y\n");
  auto r = run_command("gb", p, {}, "");
  auto json = render(r, Format::Json);
  CHECK(json.find("\"x^2 - 3/2*y^2\"") != std::string::npos);
  CHECK(parse_report_json(json).tables == r.tables);
}

TEST_CASE("homogeneity and limits") {
  auto p = parse_problem("vars x y\nideal: x^2 + y\n");
  CHECK_NOTHROW(run_command("gb", p, {}));
  CHECK_THROWS_AS(run_command("betti", p, {}), Error);
  CHECK_THROWS_AS(run_command("frobnicate", m2(), {}), Error);

  auto big = parse_problem("vars x y z\nideal: x^3, y^3, z^3, x*y*z\n");
  CommandFlags f;
  f.powers = {1, 3};
  f.max_degree = 6;
  auto r = run_command("scan", big, f);
  CHECK_FALSE(r.complete);
  CHECK(exit_code(r) == 2);
  f.power = 2;
  auto b = run_command("betti", big, f);
  CHECK_FALSE(b.complete);
  CHECK(exit_code(run_command("betti", m2(), {})) == 0);
}

#ifdef POWERHOM_CLI_PATH
TEST_CASE("command-line exit codes") {
  const std::string dir = "cli_test_files";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir + "/" + name) << text;
    return dir + "/" + name;
  };
  auto good = write("m2.txt", kM2);
  auto bad = write("bad.txt", "vars x y\nideal: x^-1\n");
  auto big = write("big.txt", "vars x y z\nideal: x^3, y^3, z^3, x*y*z\n");
  CHECK(run_cli("golod " + good + " --power 1 --order 6") == 0);
  CHECK(run_cli("scan " + good + " --powers 1..4 --metrics betti,reg,rho --format csv") == 0);
  CHECK(run_cli("betti " + bad) == 1);
  CHECK(run_cli("betti " + dir + "/missing.txt") == 1);
  CHECK(run_cli("unknown " + good) == 1);
  CHECK(run_cli("scan " + good + " --metrics colour") == 1);
  CHECK(run_cli("scan " + big + " --powers 1..3 --max-degree 6") == 2);
}
#endif
