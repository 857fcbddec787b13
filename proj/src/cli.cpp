#include "powerhom/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "powerhom/artin_rees.hpp"
#include "powerhom/golod.hpp"
#include "powerhom/parse.hpp"
#include "powerhom/powers_rees.hpp"
#include "powerhom/quotient.hpp"
#include "powerhom/resolution.hpp"

namespace powerhom {

namespace {

using json = nlohmann::ordered_json;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_spaces(std::string_view s, std::size_t i) {
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_words(std::string_view line, std::size_t from) {
  std::vector<Token> out;
  std::size_t i = skip_spaces(line, from);
  while (i < line.size()) {
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = skip_spaces(line, j);
  }
  return out;
}

int parse_int(std::string_view text, int line, int column, const char* what) {
  int value = 0;
  bool any = false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("expected a non-negative integer for ") + what, line, column);
    if (value > 100000000) throw ParseError(std::string(what) + " is too large", line, column);
    value = value * 10 + (c - '0');
    any = true;
  }
  if (!any) throw ParseError(std::string("missing value for ") + what, line, column);
  return value;
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names{"generators", "betti", "reg", "rho", "spread", "poincare", "all"};
  return names;
}

std::vector<std::string> parse_metric_list(std::string_view text, int line, int column) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::string name(item);
    if (std::find(metric_names().begin(), metric_names().end(), name) == metric_names().end())
      throw ParseError("unknown metric '" + name + "'", line, column + static_cast<int>(start));
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<int, int> parse_range_at(std::string_view text, int line, int column) {
  std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    int k = parse_int(text, line, column, "power range");
    return {k, k};
  }
  int a = parse_int(text.substr(0, dots), line, column, "power range");
  int b = parse_int(text.substr(dots + 2), line, column + static_cast<int>(dots) + 2, "power range");
  if (a < 1 || b < a) throw ParseError("power range must satisfy 1 <= a <= b", line, column);
  return {a, b};
}

class ProblemParser {
 public:
  explicit ProblemParser(std::string_view text) : text_(text) {}

  ProblemFile run() {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, nl == std::string_view::npos ? text_.npos : nl - pos);
      ++line_no;
      handle_line(line, line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (p_.vars.empty()) throw ParseError("missing 'vars' line", line_no, 1);
    if (!saw_ideal_) throw ParseError("missing 'ideal:' section", line_no, 1);
    if (p_.generators.empty()) throw ParseError("the ideal has no generators", ideal_line_, 1);
    return std::move(p_);
  }

 private:
  enum class Section { Header, Ideal, Experiment };

  void handle_line(std::string_view raw, int line_no) {
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim_right(line);
    std::size_t start = skip_spaces(line, 0);
    if (start == line.size()) return;

    std::size_t end = start;
    while (end < line.size() && !is_space(line[end]) && line[end] != ':') ++end;
    std::string_view head = line.substr(start, end - start);
    int col = static_cast<int>(start) + 1;

    if (head == "field") return field_line(line, end, line_no, col);
    if (head == "vars") return vars_line(line, end, line_no, col);
    if (head == "ideal") {
      std::size_t colon = skip_spaces(line, end);
      if (colon >= line.size() || line[colon] != ':') throw ParseError("expected ':' after 'ideal'", line_no, col);
      if (saw_ideal_) throw ParseError("duplicate 'ideal:' section", line_no, col);
      saw_ideal_ = true;
      ideal_line_ = line_no;
      section_ = Section::Ideal;
      return generator_list(line, colon + 1, line_no);
    }
    if (head == "experiment") return experiment_header(line, end, line_no, col);

    switch (section_) {
      case Section::Ideal: return generator_list(line, start, line_no);
      case Section::Experiment: return experiment_line(line, start, end, line_no);
      case Section::Header: break;
    }
    throw ParseError("unexpected '" + std::string(head) + "'", line_no, col);
  }

  void field_line(std::string_view line, std::size_t from, int line_no, int col) {
    if (ring_frozen()) throw ParseError("'field' must come before the ideal", line_no, col);
    if (saw_field_) throw ParseError("duplicate 'field' line", line_no, col);
    saw_field_ = true;
    auto words = split_words(line, from);
    if (words.size() == 1 && (words[0].text == "Q" || words[0].text == "QQ")) {
      p_.field = Field::rationals();
    } else if (words.size() == 2 && words[0].text == "GF") {
      int p = parse_int(words[1].text, line_no, words[1].column, "field characteristic");
      try {
        p_.field = Field::prime(static_cast<std::uint32_t>(p));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, words[1].column);
      }
    } else {
      throw ParseError("expected 'field Q' or 'field GF <p>'", line_no, words.empty() ? col : words[0].column);
    }
    section_ = Section::Header;
  }

  void vars_line(std::string_view line, std::size_t from, int line_no, int col) {
    if (ring_frozen()) throw ParseError("'vars' must come before the ideal", line_no, col);
    if (!p_.vars.empty()) throw ParseError("duplicate 'vars' line", line_no, col);
    auto words = split_words(line, from);
    if (words.empty()) throw ParseError("'vars' needs at least one variable", line_no, col);
    for (const auto& w : words) {
      std::string name(w.text);
      if (!is_identifier(name)) throw ParseError("invalid variable name '" + name + "'", line_no, w.column);
      if (std::find(p_.vars.begin(), p_.vars.end(), name) != p_.vars.end())
        throw ParseError("duplicate variable '" + name + "'", line_no, w.column);
      p_.vars.push_back(name);
    }
    section_ = Section::Header;
  }

  bool ring_frozen() const { return p_.ring != nullptr; }

  const RingPtr& ring(int line_no, int col) {
    if (!p_.ring) {
      if (p_.vars.empty()) throw ParseError("'vars' must come before the ideal", line_no, col);
      p_.ring = make_ring(p_.field, p_.vars);
    }
    return p_.ring;
  }

  void generator_list(std::string_view line, std::size_t from, int line_no) {
    std::size_t start = from;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
      std::string_view piece = line.substr(start, stop - start);
      std::size_t lead = skip_spaces(piece, 0);
      bool blank = lead == piece.size();
      int col = static_cast<int>(start + std::min(lead, piece.size())) + 1;
      if (blank) {
        // a trailing comma continues the list on the next line
        if (comma != std::string_view::npos) throw ParseError("empty generator", line_no, col);
      } else {
        add_generator(piece.substr(lead), line_no, col);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  void add_generator(std::string_view text, int line_no, int col) {
    const RingPtr& R = ring(line_no, col);
    Polynomial f;
    try {
      f = parse_polynomial(R, text, line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.bare_message(), line_no, col + e.column() - 1);
    }
    if (f.is_zero()) throw ParseError("zero generator", line_no, col);
    Polynomial m = f.monic();
    for (std::size_t i = 0; i < monic_.size(); ++i)
      if (monic_[i] == m)
        throw ParseError("duplicate generator (same as generator " + std::to_string(i + 1) + ")", line_no, col);
    monic_.push_back(m);
    p_.generators.push_back(std::move(f));
  }

  void experiment_header(std::string_view line, std::size_t from, int line_no, int col) {
    std::string_view rest = trim_right(line.substr(from));
    std::size_t s = skip_spaces(rest, 0);
    if (rest.empty() || rest.back() != ':') throw ParseError("expected 'experiment <name>:'", line_no, col);
    std::string_view name = trim_right(rest.substr(s, rest.size() - 1 - s));
    int name_col = static_cast<int>(from + s) + 1;
    bool ok = !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
    if (!ok) throw ParseError("invalid experiment name", line_no, name_col);
    for (const auto& e : p_.experiments)
      if (e.label == name) throw ParseError("duplicate experiment '" + std::string(name) + "'", line_no, name_col);
    p_.experiments.push_back({std::string(name), {}, {}, {}, {}, {}});
    section_ = Section::Experiment;
  }

  void experiment_line(std::string_view line, std::size_t start, std::size_t end, int line_no) {
    std::string key(line.substr(start, end - start));
    auto words = split_words(line, end);
    int col = static_cast<int>(start) + 1;
    if (words.size() != 1) throw ParseError("expected '" + key + " <value>'", line_no, col);
    const Token& v = words[0];
    ExperimentBlock& b = p_.experiments.back();
    if (key == "power") {
      int k = parse_int(v.text, line_no, v.column, "power");
      if (k < 1) throw ParseError("power must be positive", line_no, v.column);
      b.power = k;
    } else if (key == "powers") {
      b.powers = parse_range_at(v.text, line_no, v.column);
    } else if (key == "syzygy") {
      b.syzygy = parse_int(v.text, line_no, v.column, "syzygy");
    } else if (key == "order") {
      b.order = parse_int(v.text, line_no, v.column, "order");
    } else if (key == "metrics") {
      b.metrics = parse_metric_list(v.text, line_no, v.column);
    } else {
      throw ParseError("unknown experiment setting '" + key + "'", line_no, col);
    }
  }

  std::string_view text_;
  ProblemFile p_;
  Section section_ = Section::Header;
  bool saw_field_ = false;
  bool saw_ideal_ = false;
  int ideal_line_ = 0;
  std::vector<Polynomial> monic_;
};

// ---------------------------------------------------------------------------

std::string str(const mpq_class& q) { return q.get_str(); }

template <class Seq>
std::string joined(const Seq& values, const char* sep = " ") {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += sep;
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, mpq_class>)
      out += v.get_str();
    else if constexpr (std::is_convertible_v<decltype(v), std::string>)
      out += v;
    else
      out += std::to_string(v);
  }
  return out;
}

Limits make_limits(const CommandFlags& f) {
  Limits l = f.timeout_secs ? Limits::with_timeout(*f.timeout_secs) : Limits::none();
  l.max_degree = f.max_degree;
  return l;
}

unsigned metric_mask(const std::vector<std::string>& names) {
  unsigned m = 0;
  for (const auto& n : names) {
    if (n == "generators") m |= MetricGenerators;
    else if (n == "betti") m |= MetricBetti;
    else if (n == "reg") m |= MetricReg;
    else if (n == "rho") m |= MetricRho;
    else if (n == "spread") m |= MetricSpread;
    else if (n == "poincare") m |= MetricPoincare;
    else if (n == "all") m |= MetricAll;
    else throw Error("unknown metric '" + n + "'");
  }
  return m;
}

/// Flags with the chosen experiment's settings filled in underneath.
CommandFlags effective_flags(const ProblemFile& p, const CommandFlags& f) {
  CommandFlags out = f;
  if (!f.experiment) return out;
  const ExperimentBlock* b = p.experiment(*f.experiment);
  if (!b) throw Error("no experiment named '" + *f.experiment + "'");
  if (!out.power) out.power = b->power;
  if (!out.powers) out.powers = b->powers;
  if (!out.syzygy) out.syzygy = b->syzygy;
  if (!out.order) out.order = b->order;
  if (out.metrics.empty()) out.metrics = b->metrics;
  return out;
}

int power_of(const CommandFlags& f) {
  int k = f.power.value_or(1);
  if (k < 1) throw Error("--power must be at least 1");
  return k;
}

int order_of(const CommandFlags& f, int fallback) {
  int t = f.order.value_or(fallback);
  if (t < 1) throw Error("--order must be at least 1");
  return t;
}

void require_homogeneous(const ProblemFile& p, const std::string& command) {
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (!p.generators[i].is_homogeneous())
      throw Error("'" + command + "' needs homogeneous generators; generator " + std::to_string(i + 1) +
                  " is not");
}

BasisSet power_basis(const ProblemFile& p, int k, const Limits* limits) {
  return k == 1 ? p.ideal() : ideal_power(p.ideal(), k, limits);
}

ReportTable betti_table(const std::string& title, const BettiDiagram& b) {
  ReportTable t{title, {"row"}, {}};
  int L = b.length();
  for (int j = 0; j <= L; ++j) t.columns.push_back(std::to_string(j));
  if (L < 0) return t;
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [jk, n] : b.entries()) {
    if (n == 0) continue;
    int r = jk.second - jk.first;
    lo = first ? r : std::min(lo, r);
    hi = first ? r : std::max(hi, r);
    first = false;
  }
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r)};
    for (int j = 0; j <= L; ++j) row.push_back(std::to_string(b.at(j, j + r)));
    t.rows.push_back(std::move(row));
  }
  std::vector<std::string> total{"total"};
  for (int j = 0; j <= L; ++j) total.push_back(std::to_string(b.total(j)));
  t.rows.push_back(std::move(total));
  return t;
}

// ---------------------------------------------------------------------------

void cmd_gb(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int k = power_of(f);
  if (k > 1) require_homogeneous(p, "gb --power");
  BasisSet gb = buchberger(power_basis(p, k, &limits), &limits);
  ReportTable t{"reduced Groebner basis of I^" + std::to_string(k) + " (degrevlex)", {"i", "element", "degree"}, {}};
  auto polys = gb.polynomials();
  for (std::size_t i = 0; i < polys.size(); ++i)
    t.rows.push_back({std::to_string(i + 1), polys[i].to_string(), std::to_string(polys[i].degree())});
  r.tables.push_back(std::move(t));
}

void cmd_resolve(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int k = power_of(f);
  auto res = minimal_free_resolution(power_basis(p, k, &limits), ResolutionTarget::Cokernel, std::nullopt, &limits);
  ReportTable t{"minimal free resolution of R/I^" + std::to_string(k), {"j", "rank", "shifts"}, {}};
  for (int j = 0; j <= res.length(); ++j) {
    auto d = res.spaces[j]->degrees();
    std::sort(d.begin(), d.end());
    t.rows.push_back({std::to_string(j), std::to_string(d.size()), joined(d)});
  }
  r.tables.push_back(std::move(t));
  ReportTable maps{"differentials", {"j", "column", "image"}, {}};
  for (int j = 1; j <= res.length(); ++j)
    for (std::size_t c = 0; c < res.maps[j].size(); ++c)
      maps.rows.push_back({std::to_string(j), std::to_string(c + 1), res.maps[j][c].to_string()});
  r.tables.push_back(std::move(maps));
  r.verdicts.push_back({"minimal", has_minimal_entries(res) && is_complex(res), std::nullopt});
}

void cmd_betti(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int k = power_of(f);
  auto res = minimal_free_resolution(power_basis(p, k, &limits), ResolutionTarget::Cokernel, std::nullopt, &limits);
  auto b = betti_diagram(res);
  r.tables.push_back(betti_table("Betti diagram of R/I^" + std::to_string(k), b));
  auto reg = regularity_profile(b);
  ReportTable t{"regularity of R/I^" + std::to_string(k), {"j", "reg_j"}, {}};
  for (std::size_t j = 0; j < reg.reg_j.size(); ++j)
    if (reg.reg_j[j]) t.rows.push_back({std::to_string(j), std::to_string(*reg.reg_j[j])});
  t.rows.push_back({"reg", reg.reg ? std::to_string(*reg.reg) : "-"});
  r.tables.push_back(std::move(t));
}

void cmd_artin_rees(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int k = power_of(f);
  auto res = minimal_free_resolution(power_basis(p, k, &limits), ResolutionTarget::Submodule, std::nullopt, &limits);
  auto rho = rho_profile(res, &limits);
  auto reg = regularity_profile(betti_diagram(res));
  auto cmp = comparison_check(rho, reg);
  const std::string mod = "I^" + std::to_string(k);

  ReportTable t{"Artin-Rees numbers of the syzygies of " + mod, {"j", "rho_j", "reg_j", "bound"}, {}};
  bool all_ok = true;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    std::string regj = "-", bound = "-";
    for (const auto& c : cmp)
      if (c.j == static_cast<int>(j)) {
        regj = std::to_string(c.reg_j);
        bound = std::to_string(c.bound);
        all_ok = all_ok && c.satisfied;
      }
    t.rows.push_back({std::to_string(j), std::to_string(rho[j]), regj, bound});
  }
  r.tables.push_back(std::move(t));
  r.verdicts.push_back({"regularity_bound", all_ok, std::nullopt});

  if (!f.syzygy) return;
  int j = *f.syzygy;
  if (j < 0) throw Error("--syzygy must be non-negative");
  ReportTable s{"rho_" + std::to_string(j) + "(" + mod + ")", {"j", "rho"}, {}};
  int value = j < static_cast<int>(rho.size()) ? rho[j] : 0;
  if (j >= static_cast<int>(rho.size())) r.notes.push_back("syzygy index beyond the projective dimension; the module is zero");
  s.rows.push_back({std::to_string(j), std::to_string(value)});
  if (f.oracle) {
    s.columns.push_back("oracle");
    int oracle = value;
    std::string witness;
    if (j >= 1 && j < static_cast<int>(rho.size())) {
      auto o = artin_rees_oracle(res.maps[j], res.spaces[j - 1], 3, &limits);
      oracle = o.rho;
      if (o.failure_witness) witness = o.failure_witness->to_string();
    }
    s.rows.back().push_back(std::to_string(oracle));
    r.verdicts.push_back({"oracle_agrees", oracle == value, std::nullopt});
    if (!witness.empty()) r.notes.push_back("failure witness at rho - 1: " + witness);
  }
  r.tables.insert(r.tables.begin(), std::move(s));
}

void cmd_scan(const ProblemFile& p, const CommandFlags& f, Report& r) {
  auto [a, b] = f.powers.value_or(std::pair<int, int>{1, 4});
  ScanOptions opt;
  if (!f.metrics.empty()) opt.metrics = metric_mask(f.metrics) | MetricGenerators;
  if (f.order) opt.poincare_order = order_of(f, 4);
  opt.timeout_secs = f.timeout_secs;
  opt.max_degree = f.max_degree;
  ScanTable table = power_scan(p.ideal(), a, b, opt);

  ReportTable t{"power scan", {"k", "generators"}, {}};
  const unsigned m = table.metrics;
  if (m & MetricBetti) t.columns.insert(t.columns.end(), {"betti_ideal", "betti_quotient"});
  if (m & MetricReg) t.columns.push_back("reg");
  if (m & MetricRho) t.columns.push_back("rho");
  if (m & MetricPoincare) t.columns.push_back("poincare");
  t.columns.push_back("status");

  std::size_t rho_len = 0;
  for (const auto& row : table.rows) {
    std::vector<std::string> cells{std::to_string(row.k), std::to_string(row.generators)};
    auto opt_cell = [&](bool present, const std::string& s) { cells.push_back(present ? s : ""); };
    if (m & MetricBetti) {
      opt_cell(row.betti_ideal.has_value(), row.betti_ideal ? joined(row.betti_ideal->totals()) : "");
      opt_cell(row.betti_quotient.has_value(), row.betti_quotient ? joined(row.betti_quotient->totals()) : "");
    }
    if (m & MetricReg)
      opt_cell(row.regularity && row.regularity->reg,
               row.regularity && row.regularity->reg ? std::to_string(*row.regularity->reg) : "");
    if (m & MetricRho) {
      opt_cell(row.rho.has_value(), row.rho ? joined(*row.rho) : "");
      if (row.rho) rho_len = std::max(rho_len, row.rho->size());
    }
    if (m & MetricPoincare) opt_cell(row.poincare.has_value(), row.poincare ? joined(*row.poincare) : "");
    cells.push_back(row.error ? "incomplete: " + *row.error : "ok");
    t.rows.push_back(std::move(cells));
  }
  r.tables.push_back(std::move(t));
  r.complete = table.complete();
  if (!r.complete) r.notes.push_back("some rows hit a resource limit; their cells are empty");

  ReportTable fits{"tail behaviour", {"quantity", "result", "window"}, {}};
  auto window = [](int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); };
  if (m & MetricReg) {
    std::vector<std::pair<int, mpq_class>> pts;
    for (const auto& row : table.rows)
      if (row.regularity && row.regularity->reg) pts.emplace_back(row.k, *row.regularity->reg);
    if (pts.size() >= 2) {
      auto fit = fit_polynomial(pts);
      fits.rows.push_back({"reg(I^k)", fit.to_string(),
                           fit.conclusive ? window(fit.k_first, fit.k_last) : window(pts.front().first, pts.back().first)});
    }
  }
  if (m & MetricRho) {
    for (std::size_t j = 0; j < rho_len; ++j) {
      std::vector<std::pair<int, long>> series;
      for (const auto& row : table.rows)
        if (row.rho) series.emplace_back(row.k, j < row.rho->size() ? (*row.rho)[j] : 0);
      if (series.size() < 3) continue;
      auto st = stabilization_detect(series);
      std::string name = "rho_" + std::to_string(j);
      if (st.conclusive)
        fits.rows.push_back({name, "constant " + std::to_string(st.value) + " from k = " + std::to_string(st.onset),
                             window(st.onset, series.back().first)});
      else
        fits.rows.push_back({name, "inconclusive", window(series.front().first, series.back().first)});
    }
  }
  if (!fits.rows.empty()) r.tables.push_back(std::move(fits));
  if (table.analytic_spread) r.tables.push_back({"analytic spread", {"quantity", "value"},
                                                 {{"analytic_spread", std::to_string(*table.analytic_spread)}}});
}

void cmd_rees(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int k = power_of(f);
  auto pres = rees_presentation(power_basis(p, k, &limits), &limits);
  auto kernel = pres.kernel.polynomials();
  std::vector<std::string> names;
  if (!kernel.empty())
    for (const auto& n : kernel.front().ring()->names())
      if (std::find(p.vars.begin(), p.vars.end(), n) == p.vars.end()) names.push_back(n);
  ReportTable gens{"Rees algebra generators", {"variable", "maps to"}, {}};
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    gens.rows.push_back({i < names.size() ? names[i] : "y" + std::to_string(i + 1),
                         (pres.generators[i].size() > 1 ? "(" + pres.generators[i].to_string() + ")"
                                                         : pres.generators[i].to_string()) + "*t"});
  ReportTable ker{"Rees ideal (reduced Groebner basis)", {"i", "element"}, {}};
  bool vanish = true;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    ker.rows.push_back({std::to_string(i + 1), kernel[i].to_string()});
    vanish = vanish && rees_substitute(kernel[i], pres.generators).is_zero();
  }
  r.tables.push_back(std::move(gens));
  r.tables.push_back(std::move(ker));
  r.verdicts.push_back({"kernel_vanishes_under_substitution", vanish, std::nullopt});
}

void cmd_spread(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int k = power_of(f);
  BasisSet I = power_basis(p, k, &limits);
  int spread = analytic_spread(I, &limits);
  int dim = krull_dimension(buchberger(I, &limits), &limits);
  auto mg = minimal_generators(I.elements, I.space, Grading::Internal, {}, &limits);
  r.tables.push_back({"analytic spread of I^" + std::to_string(k),
                      {"quantity", "value"},
                      {{"analytic_spread", std::to_string(spread)},
                       {"dim R/I", std::to_string(dim)},
                       {"minimal_generators", std::to_string(mg.size())},
                       {"variables", std::to_string(p.vars.size())}}});
}

void cmd_golod(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int k = power_of(f);
  int t = order_of(f, 4);
  auto v = golod_test(p.ideal(), k, t, &limits);
  ReportTable s{"Poincare series of K over R/I^" + std::to_string(k), {"i", "actual", "golod_bound"}, {}};
  for (int i = 0; i <= t; ++i) s.rows.push_back({std::to_string(i), str(v.actual[i]), str(v.bound[i])});
  r.tables.push_back(std::move(s));
  r.verdicts.push_back({"golod", v.golod(), t});
  r.verdicts.push_back({"series_equal", v.series_equal, t});
  r.verdicts.push_back({"products_trivial", v.products_trivial, t});
  r.notes.push_back("poincare: " + joined(v.actual.coefficients(), ","));
  if (v.first_discrepancy)
    r.notes.push_back("first discrepancy at z^" + std::to_string(*v.first_discrepancy) + ": actual " +
                      str(v.actual[*v.first_discrepancy]) + ", bound " + str(v.bound[*v.first_discrepancy]));
  for (const auto& w : v.witnesses)
    r.notes.push_back("nonzero product [" + chain_to_string(w.left.rep) + "] * [" + chain_to_string(w.right.rep) +
                      "] = " + chain_to_string(w.product));
}

void cmd_deviations(const ProblemFile& p, const CommandFlags& f, const Limits& limits, Report& r) {
  int t = order_of(f, 4);
  if (!f.powers) {
    int k = power_of(f);
    auto A = std::make_shared<const QuotientRing>(power_basis(p, k, &limits), &limits);
    auto P = poincare_actual(A, t, &limits);
    auto eps = deviations_from_series(P);
    ReportTable tab{"deviations of R/I^" + std::to_string(k), {"i", "beta_i", "eps_i"}, {}};
    for (int i = 0; i <= t; ++i)
      tab.rows.push_back({std::to_string(i), str(P[i]),
                          i < static_cast<int>(eps.eps.size()) ? std::to_string(eps.eps[i]) : ""});
    r.tables.push_back(std::move(tab));
    return;
  }
  auto [a, b] = *f.powers;
  auto scan = deviation_degree_scan(p.ideal(), a, b, t, t, &limits);
  ReportTable rows{"deviations along the powers", {"k", "betti", "poincare", "deviations", "golod"}, {}};
  for (const auto& row : scan.rows)
    rows.rows.push_back({std::to_string(row.k), joined(row.betti), joined(row.poincare.coefficients()),
                         joined(row.deviations.eps), row.series_equal ? "true" : "false"});
  r.tables.push_back(std::move(rows));
  ReportTable fits{"polynomial degrees in k", {"quantity", "fit", "degree", "predicted", "matches"}, {}};
  bool all = true;
  auto add = [&](const std::string& name, const DegreeCheck& c) {
    fits.rows.push_back({name, c.fit.to_string(), std::to_string(c.fit.degree), std::to_string(c.predicted),
                         c.matches ? "true" : "false"});
    all = all && c.matches;
  };
  for (const auto& c : scan.betti_fits) add("beta_" + std::to_string(c.i), c);
  for (const auto& c : scan.deviation_fits) add("eps_" + std::to_string(c.i), c);
  r.tables.push_back(std::move(fits));
  r.tables.push_back({"analytic spread", {"quantity", "value"}, {{"analytic_spread", std::to_string(scan.spread)}}});
  r.verdicts.push_back({"degrees_match_spread", all, t});
}

// ---------------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  bool quote = s.find_first_of(",\"\n\r") != std::string::npos || (!s.empty() && (is_space(s.front()) || is_space(s.back())));
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& r) {
  std::string out;
  if (r.tables.empty()) return out;
  const ReportTable& t = r.tables.front();
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out;
}

std::string render_table(const Report& r, bool timing) {
  std::ostringstream os;
  os << "# command: " << r.command << "\n# input: " << r.input_hash << "\n# status: "
     << (r.complete ? "complete" : "incomplete") << "\n";
  for (const auto& t : r.tables) {
    os << "\n## " << t.title << "\n";
    std::vector<std::size_t> w(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) s += "  ";
        s += cells[c];
        if (c + 1 < cells.size()) s.append(w[c] - std::min(w[c], cells[c].size()), ' ');
      }
      os << trim_right(s) << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  if (!r.verdicts.empty()) os << "\n";
  for (const auto& v : r.verdicts) {
    os << "verdict " << v.name << ": " << (v.value ? "true" : "false");
    if (v.order) os << " (through order " << *v.order << ")";
    os << "\n";
  }
  if (!r.notes.empty()) os << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_seconds);
    os << "\n# elapsed " << buf << " s\n";
  }
  return os.str();
}

std::string render_json(const Report& r, bool timing) {
  json j;
  j["command"] = r.command;
  j["input_hash"] = r.input_hash;
  j["complete"] = r.complete;
  json tables = json::array();
  for (const auto& t : r.tables) tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
  j["tables"] = tables;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json e{{"name", v.name}, {"value", v.value}};
    e["order"] = v.order ? json(std::to_string(*v.order)) : json(nullptr);
    verdicts.push_back(e);
  }
  j["verdicts"] = verdicts;
  j["notes"] = r.notes;
  if (timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_seconds);
    j["footer"] = {{"elapsed_seconds", std::string(buf)}};
  }
  return j.dump(2) + "\n";
}

}  // namespace

// ---------------------------------------------------------------------------

const ExperimentBlock* ProblemFile::experiment(const std::string& label) const {
  for (const auto& e : experiments)
    if (e.label == label) return &e;
  return nullptr;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.field == b.field && a.vars == b.vars && a.generators.size() == b.generators.size() &&
         std::equal(a.generators.begin(), a.generators.end(), b.generators.begin(),
                    [](const Polynomial& x, const Polynomial& y) { return x.to_string() == y.to_string(); }) &&
         a.experiments == b.experiments;
}

ProblemFile parse_problem(std::string_view text) { return ProblemParser(text).run(); }

std::pair<int, int> parse_range(std::string_view text) { return parse_range_at(text, 0, 1); }

std::string print_problem(const ProblemFile& p) {
  std::string out = "field " + p.field.describe() + "\nvars";
  for (const auto& v : p.vars) out += " " + v;
  out += "\nideal:\n";
  for (const auto& g : p.generators) out += "  " + g.to_string() + "\n";
  for (const auto& e : p.experiments) {
    out += "\nexperiment " + e.label + ":\n";
    if (e.power) out += "  power " + std::to_string(*e.power) + "\n";
    if (e.powers) out += "  powers " + std::to_string(e.powers->first) + ".." + std::to_string(e.powers->second) + "\n";
    if (e.syzygy) out += "  syzygy " + std::to_string(*e.syzygy) + "\n";
    if (e.order) out += "  order " + std::to_string(*e.order) + "\n";
    if (!e.metrics.empty()) out += "  metrics " + joined(e.metrics, ",") + "\n";
  }
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",   "resolve", "betti", "artin-rees", "scan",
                                              "rees", "spread",  "golod", "deviations"};
  return names;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report run_command(const std::string& name, const ProblemFile& problem, const CommandFlags& flags,
                   std::string_view input_text) {
  if (std::find(command_names().begin(), command_names().end(), name) == command_names().end())
    throw Error("unknown command '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = name;
  r.input_hash = fnv1a_hex(input_text.empty() ? std::string_view(print_problem(problem)) : input_text);
  const CommandFlags f = effective_flags(problem, flags);
  if (name != "gb") require_homogeneous(problem, name);
  const Limits limits = make_limits(f);
  try {
    if (name == "gb") cmd_gb(problem, f, limits, r);
    else if (name == "resolve") cmd_resolve(problem, f, limits, r);
    else if (name == "betti") cmd_betti(problem, f, limits, r);
    else if (name == "artin-rees") cmd_artin_rees(problem, f, limits, r);
    else if (name == "scan") cmd_scan(problem, f, r);
    else if (name == "rees") cmd_rees(problem, f, limits, r);
    else if (name == "spread") cmd_spread(problem, f, limits, r);
    else if (name == "golod") cmd_golod(problem, f, limits, r);
    else cmd_deviations(problem, f, limits, r);
  } catch (const ResourceLimit& e) {
    r.complete = false;
    r.notes.push_back(std::string("stopped by a resource limit: ") + e.what());
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string render(const Report& report, Format format, bool include_timing) {
  switch (format) {
    case Format::Csv: return render_csv(report);
    case Format::Json: return render_json(report, include_timing);
    case Format::Table: break;
  }
  return render_table(report, include_timing);
}

int exit_code(const Report& report) { return report.complete ? 0 : 2; }

Report parse_report_json(std::string_view text) {
  json j = json::parse(text);
  Report r;
  r.command = j.at("command").get<std::string>();
  r.input_hash = j.at("input_hash").get<std::string>();
  r.complete = j.at("complete").get<bool>();
  for (const auto& t : j.at("tables"))
    r.tables.push_back({t.at("title").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                        t.at("rows").get<std::vector<std::vector<std::string>>>()});
  for (const auto& v : j.at("verdicts")) {
    ReportVerdict rv{v.at("name").get<std::string>(), v.at("value").get<bool>(), std::nullopt};
    if (!v.at("order").is_null()) rv.order = std::stoi(v.at("order").get<std::string>());
    r.verdicts.push_back(rv);
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("footer")) r.elapsed_seconds = std::stod(j["footer"].at("elapsed_seconds").get<std::string>());
  return r;
}

ReportTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> cur;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cur.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      cur.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(cur));
      cur.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw Error("unterminated quoted CSV field");
  if (any) {
    cur.push_back(std::move(field));
    lines.push_back(std::move(cur));
  }
  ReportTable t;
  if (lines.empty()) return t;
  t.columns = std::move(lines.front());
  t.rows.assign(std::make_move_iterator(lines.begin() + 1), std::make_move_iterator(lines.end()));
  return t;
}

}  // namespace powerhom
