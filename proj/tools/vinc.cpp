#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "vinc/avoiders.hpp"
#include "vinc/closed_forms.hpp"
#include "vinc/series_expr.hpp"
#include "vinc/statistics.hpp"
#include "vinc/verify.hpp"

using namespace vinc;

namespace {

constexpr int kEnumerationCap = 14;  // C_14 is around 2.7M permutations
constexpr int kDefaultOrder = 24;

int default_order() {
  const char* env = std::getenv("VINC_SERIES_ORDER");
  if (!env) return kDefaultOrder;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0 || v > 1024) {
    std::cerr << "ignoring VINC_SERIES_ORDER=" << env << " (want an integer in 0..1024)\n";
    return kDefaultOrder;
  }
  return static_cast<int>(v);
}

struct NRange {
  int lo = 0;
  int hi = 0;
};

NRange parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  NRange r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected an integer or a..b range, got '" + text + "'");
  }
  if (r.lo < 0 || r.hi < r.lo)
    throw CLI::ValidationError("--n", "range must satisfy 0 <= a <= b, got '" + text + "'");
  return r;
}

void check_budget(int n, bool allow_large) {
  if (n > kEnumerationCap && !allow_large)
    throw CLI::ValidationError(
        "--n", "n=" + std::to_string(n) + " exceeds the enumeration cap " +
                   std::to_string(kEnumerationCap) + "; pass --allow-large to override");
}

std::string normalize_host(std::string s) {
  std::string digits;
  for (char c : s)
    if (c != '-') digits += c;
  if (digits == "231" || digits == "321") return digits;
  throw CLI::ValidationError("--avoid", "expected 231 or 321, got '" + s + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += "\"\"";
    else q += ch;
  }
  q += "\"";
  return q;
}

void emit_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    std::cout << line << "\n";
  }
}

// ----- totals -----------------------------------------------------------

int run_totals(const std::string& avoid, const std::string& pattern, const std::string& anchor,
               const NRange& range, const std::string& format, bool allow_large) {
  const std::string host = normalize_host(avoid);
  const Anchor a = parse_anchor(anchor);
  check_budget(range.hi, allow_large);

  const EnumResult* row = find_result(host, pattern, a);
  std::optional<VincularPattern> pat;
  if (!row) pat = VincularPattern::parse(pattern, a);
  const VincularPattern cls = host_class_pattern(host);

  std::optional<ZSeries> series;
  if (row) series = parse_series_expr(row->gf, range.hi);

  struct TotalsRow {
    int n;
    Int total;
    std::optional<Int> formula;
    bool match;
  };
  std::vector<TotalsRow> out;
  bool all_match = true;
  for (int n = range.lo; n <= range.hi; ++n) {
    TotalsRow t;
    t.n = n;
    t.total = row ? brute_total(*row, n) : total_occurrences(n, cls, *pat);
    t.match = true;
    if (row) {
      t.formula = row->closed_form ? row->closed_form(n) : series->coeff(n);
      t.match = *t.formula == t.total;
    }
    all_match = all_match && t.match;
    out.push_back(std::move(t));
  }

  if (format == "json") {
    nlohmann::ordered_json j;
    j["avoid"] = host;
    j["pattern"] = pattern;
    j["anchor"] = to_string(a);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& t : out) {
      nlohmann::ordered_json jr;
      jr["n"] = t.n;
      jr["total"] = to_string(t.total);
      if (t.formula) {
        jr["formula"] = to_string(*t.formula);
        jr["match"] = t.match;
      }
      j["rows"].push_back(jr);
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,total,formula,match\n";
    for (const auto& t : out)
      std::cout << t.n << "," << to_string(t.total) << ","
                << (t.formula ? to_string(*t.formula) : "") << ","
                << (t.formula ? (t.match ? "yes" : "no") : "") << "\n";
  } else {
    std::cout << "avoid " << host << ", pattern " << pattern << ", anchor " << to_string(a)
              << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back(row ? std::vector<std::string>{"n", "total", "formula", "match"}
                       : std::vector<std::string>{"n", "total"});
    for (const auto& t : out) {
      std::vector<std::string> r{std::to_string(t.n), to_string(t.total)};
      if (t.formula) {
        r.push_back(to_string(*t.formula));
        r.push_back(t.match ? "yes" : "no");
      }
      rows.push_back(std::move(r));
    }
    emit_aligned(rows);
  }
  return all_match ? 0 : 1;
}

// ----- distribution -----------------------------------------------------

int run_distribution(const std::string& avoid, const std::string& stat,
                     const std::string& pattern, const std::string& anchor, const NRange& range,
                     const std::string& format, bool allow_large) {
  const std::string host = normalize_host(avoid);
  check_budget(range.hi, allow_large);
  if (stat.empty() == pattern.empty())
    throw CLI::ValidationError("--stat", "give exactly one of --stat and --pattern");
  const VincularPattern cls = host_class_pattern(host);

  const std::string label = stat.empty() ? pattern : stat;
  std::vector<std::pair<int, std::map<long, Int>>> out;
  for (int n = range.lo; n <= range.hi; ++n) {
    if (!stat.empty())
      out.emplace_back(n, distribution(n, cls, parse_stat(stat)).counts);
    else
      out.emplace_back(
          n, pattern_distribution(n, cls, VincularPattern::parse(pattern, parse_anchor(anchor))));
  }

  if (format == "json") {
    nlohmann::ordered_json j;
    j["avoid"] = host;
    j[stat.empty() ? "pattern" : "stat"] = label;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& [n, counts] : out) {
      nlohmann::ordered_json jr;
      jr["n"] = n;
      jr["counts"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : counts) jr["counts"][std::to_string(k)] = to_string(v);
      j["rows"].push_back(jr);
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,value,count\n";
    for (const auto& [n, counts] : out)
      for (const auto& [k, v] : counts)
        std::cout << n << "," << k << "," << to_string(v) << "\n";
  } else {
    std::cout << "avoid " << host << ", " << (stat.empty() ? "pattern " : "stat ") << label
              << "\n";
    for (const auto& [n, counts] : out) {
      std::cout << "n=" << n << ":";
      for (const auto& [k, v] : counts) std::cout << " " << k << ":" << to_string(v);
      std::cout << "\n";
    }
  }
  return 0;
}

// ----- verify and bijection-check ---------------------------------------

int emit_report(VerificationReport report, const std::string& format, double seconds) {
  if (format == "json")
    std::cout << render_json(report);
  else if (format == "csv")
    std::cout << render_csv(report);
  else
    std::cout << render_text(report);
  std::fprintf(stderr, "elapsed %.2fs\n", seconds);
  return report.all_pass() ? 0 : 1;
}

int run_verify(const std::string& suite, int n_max, int order, int jobs,
               const std::string& format, bool allow_large) {
  if (n_max > kEnumerationCap && !allow_large)
    throw CLI::ValidationError("--nmax", "nmax exceeds the enumeration cap " +
                                             std::to_string(kEnumerationCap) +
                                             "; pass --allow-large to override");
  if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = run_suite(suite, n_max, order, jobs);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return emit_report(std::move(report), format, secs);
}

int run_bijection_check(const std::string& map, int n_max, int jobs, const std::string& format,
                        bool allow_large) {
  if (n_max > kEnumerationCap && !allow_large)
    throw CLI::ValidationError("--nmax", "nmax exceeds the enumeration cap " +
                                             std::to_string(kEnumerationCap) +
                                             "; pass --allow-large to override");
  if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = run_suite("bijections", n_max, n_max, jobs);
  if (map != "all") {
    const std::string want = map == "staircase" || map == "first-return" ? map + "-roundtrip" : map;
    std::vector<CheckResult> kept;
    for (auto& c : report.checks)
      if (c.name == want) kept.push_back(std::move(c));
    if (kept.empty())
      throw CLI::ValidationError("--map", "unknown map '" + map + "'");
    report.checks = std::move(kept);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return emit_report(std::move(report), format, secs);
}

// ----- series -----------------------------------------------------------

int run_series(const std::string& expr, int order, const std::string& format) {
  const ZSeries s = parse_series_expr(expr, order);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = expr;
    j["order"] = order;
    j["coefficients"] = nlohmann::ordered_json::array();
    for (int n = 0; n <= order; ++n) j["coefficients"].push_back(to_string(s.coeff(n)));
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,coefficient\n";
    for (int n = 0; n <= order; ++n) std::cout << n << "," << to_string(s.coeff(n)) << "\n";
  } else {
    for (int n = 0; n <= order; ++n) std::cout << (n ? "," : "") << to_string(s.coeff(n));
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of vincular pattern statistics on Catalan classes"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"text", "csv", "json"};

  std::string avoid = "231", pattern, anchor = "none", n_text = "0..8", stat;
  std::string format = "text", expr, suite = "all", map = "all";
  int order = default_order(), n_max = 9, jobs = 0;
  bool allow_large = false;

  auto* totals = app.add_subcommand("totals", "total pattern occurrences over an avoidance class");
  totals->add_option("--avoid", avoid, "avoidance class, 231 or 321")->capture_default_str();
  totals->add_option("--pattern", pattern, "vincular pattern, e.g. 31-2, or maj/den/2-13:low")
      ->required();
  totals->add_option("--anchor", anchor, "none, first, or last")
      ->check(CLI::IsMember({"none", "first", "last"}))
      ->capture_default_str();
  totals->add_option("--n", n_text, "size or range a..b")->capture_default_str();
  totals->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  totals->add_flag("--allow-large", allow_large, "lift the n cap");

  auto* dist = app.add_subcommand("distribution", "histogram of a statistic over a class");
  dist->add_option("--avoid", avoid, "avoidance class, 231 or 321")->capture_default_str();
  dist->add_option("--stat", stat, "inv, des, maj, or den");
  dist->add_option("--pattern", pattern, "vincular pattern counted per permutation");
  dist->add_option("--anchor", anchor, "none, first, or last")
      ->check(CLI::IsMember({"none", "first", "last"}))
      ->capture_default_str();
  dist->add_option("--n", n_text, "size or range a..b")->capture_default_str();
  dist->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  dist->add_flag("--allow-large", allow_large, "lift the n cap");

  auto* bij = app.add_subcommand("bijection-check", "round trips and statistic transport");
  bij->add_option("--map", map,
                  "staircase, first-return, minima-fill, component-lift, interleave, or all")
      ->capture_default_str();
  bij->add_option("--nmax", n_max, "check all sizes up to this")->capture_default_str();
  bij->add_option("--jobs", jobs, "worker threads, 0 = auto")->capture_default_str();
  bij->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  bij->add_flag("--allow-large", allow_large, "lift the n cap");

  auto* series = app.add_subcommand("series", "coefficients of a B/C series expression");
  series->add_option("--expr", expr, "e.g. z^2*B^3 or C or B-1-2*z*B*C")->required();
  series->add_option("--order", order, "truncation order (or VINC_SERIES_ORDER)")
      ->capture_default_str();
  series->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  verify->add_option("--suite", suite, "all, totals, series, bijections, distributions, polyomino")
      ->check(CLI::IsMember(suite_choices))
      ->capture_default_str();
  verify->add_option("--nmax", n_max, "exhaustive checks up to this size")->capture_default_str();
  verify->add_option("--order", order, "series truncation order (or VINC_SERIES_ORDER)")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads, 0 = auto")->capture_default_str();
  verify->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  verify->add_flag("--allow-large", allow_large, "lift the nmax cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (totals->parsed())
      return run_totals(avoid, pattern, anchor, parse_n_range(n_text), format, allow_large);
    if (dist->parsed())
      return run_distribution(avoid, stat, pattern, anchor, parse_n_range(n_text), format,
                              allow_large);
    if (bij->parsed()) return run_bijection_check(map, n_max, jobs, format, allow_large);
    if (series->parsed()) return run_series(expr, order, format);
    if (verify->parsed()) return run_verify(suite, n_max, order, jobs, format, allow_large);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
