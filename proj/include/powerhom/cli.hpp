#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerhom/groebner.hpp"

namespace powerhom {

/// Named defaults for a command, written in the input file as
///
///   experiment <label>:
///     powers 1..6
///     order 4
///     metrics betti,reg,rho
struct ExperimentBlock {
  std::string label;
  std::optional<int> power;
  std::optional<std::pair<int, int>> powers;
  std::optional<int> syzygy;
  std::optional<int> order;
  std::vector<std::string> metrics;
  friend bool operator==(const ExperimentBlock&, const ExperimentBlock&) = default;
};

struct ProblemFile {
  Field field = Field::rationals();
  std::vector<std::string> vars;
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<ExperimentBlock> experiments;

  BasisSet ideal() const { return ideal_basis(ring, generators); }
  const ExperimentBlock* experiment(const std::string& label) const;
  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

/// Line-oriented input; errors carry line and column (ParseError).
ProblemFile parse_problem(std::string_view text);
std::string print_problem(const ProblemFile& p);

/// "a..b" or a single integer.
std::pair<int, int> parse_range(std::string_view text);

enum class Format { Table, Csv, Json };

struct CommandFlags {
  std::optional<int> power;
  std::optional<std::pair<int, int>> powers;
  std::optional<int> syzygy;
  std::optional<int> order;
  std::vector<std::string> metrics;
  Format format = Format::Table;
  bool oracle = false;
  std::optional<int> max_degree;
  std::optional<double> timeout_secs;
  std::optional<std::string> experiment;
};

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

struct ReportVerdict {
  std::string name;
  bool value = false;
  /// Truncation order the verdict is certified through, if any.
  std::optional<int> order;
  friend bool operator==(const ReportVerdict&, const ReportVerdict&) = default;
};

struct Report {
  std::string command;
  std::string input_hash;
  std::vector<ReportTable> tables;
  std::vector<ReportVerdict> verdicts;
  std::vector<std::string> notes;
  bool complete = true;
  double elapsed_seconds = 0;
};

const std::vector<std::string>& command_names();

/// Dispatches one command. Hard errors throw; resource limits give an
/// incomplete report.
Report run_command(const std::string& name, const ProblemFile& problem, const CommandFlags& flags,
                   std::string_view input_text = {});

/// Renders a report. Timing appears only in the footer (table, JSON).
std::string render(const Report& report, Format format, bool include_timing = true);

/// 0 for a complete report, 2 for a partial one.
int exit_code(const Report& report);

/// Readers for emitted output, used for round-trip checks. CSV holds the
/// first table only.
Report parse_report_json(std::string_view text);
ReportTable parse_csv(std::string_view text);

std::string fnv1a_hex(std::string_view text);

}  // namespace powerhom
