// pgl: evaluate exact, average and explicit prime-counting functions on a
// grid, compare them, emit plot data and run the self-check suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input (domain, range,
// format), 3 capacity exceeded, 4 zeros required but unavailable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "pgl/pgl.hpp"

namespace {

struct Options {
  std::string fn = "pi";
  double from = 10.0;
  double to = 1000.0;
  int points = 50;
  bool geometric = false;
  double offset = 0.5;
  double sieve_limit = 1e7;
  std::string zeros_file;
  std::size_t num_zeros = 100;
  double series_tol = 1e-12;
  std::string format = "csv";
  std::string out;
  bool timestamp = false;
  std::string suite = "all";
};

struct ExitError {
  int code;
  std::string message;
};

enum class Command { exact, average, explicit_values, compare, verify, plotdata };

int exit_code_for(pgl::ErrorKind kind) {
  switch (kind) {
    case pgl::ErrorKind::capacity: return 3;
    case pgl::ErrorKind::empty_table: return 4;
    default: return 2;
  }
}

std::uint64_t checked_sieve_limit(double v) {
  if (!(v >= 2.0) || v != std::floor(v))
    throw pgl::Error(pgl::ErrorKind::domain, "--sieve-limit must be an integer >= 2");
  if (v > static_cast<double>(pgl::kMaxSieveLimit))
    throw pgl::Error(pgl::ErrorKind::capacity, "--sieve-limit exceeds 1e8");
  return static_cast<std::uint64_t>(v);
}

/// Sieve just far enough for the request; the configured limit caps it.
pgl::ArithTable make_table(const Options& o, bool needs_exact) {
  const std::uint64_t limit = checked_sieve_limit(o.sieve_limit);
  std::uint64_t want = 1024;
  if (needs_exact) {
    if (o.to >= static_cast<double>(limit) + 1.0)
      throw pgl::Error(pgl::ErrorKind::range,
                       "grid reaches beyond --sieve-limit " + std::to_string(limit));
    want = std::max<std::uint64_t>(want, static_cast<std::uint64_t>(std::floor(o.to)));
  }
  return pgl::ArithTable(std::min(want, limit));
}

pgl::ZeroTable load_zero_table(const Options& o) {
  if (o.num_zeros == 0) throw ExitError{4, "--num-zeros 0 leaves no zeros to sum"};
  if (o.zeros_file.empty()) return o.num_zeros >= 100
                                        ? pgl::bundled_zeros()
                                        : pgl::bundled_zeros().prefix(o.num_zeros);
  if (!std::filesystem::exists(o.zeros_file))
    throw ExitError{4, "zeros file not found: " + o.zeros_file};
  try {
    return pgl::load_zeros(o.zeros_file, o.num_zeros);
  } catch (const pgl::Error& e) {
    if (e.kind() == pgl::ErrorKind::format) throw;
    throw ExitError{4, e.what()};
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Writes to stdout, or to a temporary sibling of the target that is then
/// renamed over it.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << text;
    f.close();
    if (!f) {
      std::remove(tmp.c_str());
      throw ExitError{2, "cannot write " + path};
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw ExitError{2, "cannot write " + path + ": " + ec.message()};
  }
}

pgl::Grid grid_of(const Options& o) {
  pgl::Grid g;
  g.x_min = o.from;
  g.x_max = o.to;
  g.points = o.points;
  g.spacing = o.geometric ? pgl::Spacing::geometric : pgl::Spacing::arithmetic;
  g.offset = o.offset;
  return g;
}

int run_values(Command cmd, const Options& o) {
  const pgl::ExactFn fn = pgl::parse_exact_fn(o.fn);
  const std::vector<double> xs = pgl::make_grid(grid_of(o));
  pgl::SeriesControl series;
  series.abs_tol = o.series_tol;
  series.validate();

  std::vector<double> values;
  std::string kind;
  if (cmd == Command::exact) {
    const pgl::ArithTable table = make_table(o, true);
    values = pgl::exact_sum_grid(table, fn, xs);
    kind = "exact";
  } else {
    const pgl::ArithTable table = make_table(o, false);
    std::optional<pgl::ZeroTable> zeros;
    pgl::EvalContext ctx{&table, nullptr, o.num_zeros, series};
    if (cmd == Command::explicit_values) {
      if (!pgl::has_explicit(fn))
        throw pgl::Error(pgl::ErrorKind::domain,
                         "no explicit formula for " + std::string(pgl::to_string(fn)));
      zeros = load_zero_table(o);
      ctx.zeros = &*zeros;
    }
    for (double x : xs)
      values.push_back(cmd == Command::average ? pgl::average_value(fn, x, ctx)
                                               : pgl::explicit_value(fn, x, ctx));
    kind = cmd == Command::average ? "average" : "explicit";
  }
  emit(o.format == "json" ? pgl::render_values_json(o.fn, kind, xs, values)
                          : pgl::render_values_csv(xs, values),
       o.out);
  return 0;
}

int run_compare(Command cmd, const Options& o) {
  const pgl::ExactFn fn = pgl::parse_exact_fn(o.fn);
  const std::vector<double> xs = pgl::make_grid(grid_of(o));
  pgl::SeriesControl series;
  series.abs_tol = o.series_tol;
  series.validate();

  std::optional<pgl::ZeroTable> zeros;
  if (pgl::has_explicit(fn)) zeros = load_zero_table(o);
  const pgl::ArithTable table = make_table(o, true);
  const pgl::EvalContext ctx{&table, zeros ? &*zeros : nullptr, o.num_zeros, series};

  pgl::ComparisonReport report = pgl::build_comparison(fn, xs, ctx);
  report.metadata.sieve_limit = checked_sieve_limit(o.sieve_limit);
  if (o.timestamp) report.metadata.timestamp = utc_timestamp();

  std::string text;
  if (cmd == Command::compare)
    text = o.format == "json" ? pgl::render_comparison_json(report)
                              : pgl::render_comparison_csv(report);
  else
    text = o.format == "json" ? pgl::render_plotdata_json(report)
                              : pgl::render_plotdata_csv(report);
  emit(text, o.out);
  if (cmd == Command::compare) std::cerr << pgl::render_summary(report) << '\n';
  return 0;
}

int run_verify(const Options& o) {
  const auto results = pgl::run_suite(pgl::parse_suite(o.suite));
  pgl::print_results(std::cout, results);
  const bool ok = pgl::all_passed(results);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return ok ? 0 : 1;
}

void add_grid_options(CLI::App* sub, Options& o) {
  sub->add_option("--fn", o.fn, "pi J psi theta Ch K epsilon sigma_p H_p omega d_Lambda LambdaLogSum")
      ->capture_default_str();
  sub->add_option("--from", o.from, "Grid start (> 2)")->capture_default_str();
  sub->add_option("--to", o.to, "Grid end")->capture_default_str();
  sub->add_option("--points", o.points, "Grid points (>= 2)")->capture_default_str();
  sub->add_flag("--geometric", o.geometric, "Geometric instead of arithmetic spacing");
  sub->add_option("--offset", o.offset, "Added to integer-valued grid points")
      ->capture_default_str();
  sub->add_option("--sieve-limit", o.sieve_limit, "Largest integer sieved")
      ->envname("PGL_SIEVE_LIMIT")
      ->capture_default_str();
  sub->add_option("--zeros-file", o.zeros_file, "Ordinates of zeta zeros, one per line")
      ->envname("PGL_ZEROS_FILE");
  sub->add_option("--num-zeros", o.num_zeros, "Zeros used by explicit formulas")
      ->capture_default_str();
  sub->add_option("--series-tol", o.series_tol, "Gamma-series term tolerance")
      ->capture_default_str();
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "Write to this file instead of stdout");
  sub->add_flag("--timestamp", o.timestamp, "Record the run time in report metadata");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime-power counting: exact sums, gamma averages, explicit formulas"};
  app.require_subcommand(1);
  Options o;
  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
  };
  const Sub subs[] = {
      {"exact", "Exact summatory values from the sieve (x,value)", Command::exact},
      {"average", "Average values (x,value)", Command::average},
      {"explicit", "Explicit-formula values (x,value)", Command::explicit_values},
      {"compare", "Exact vs average vs explicit with error columns", Command::compare},
      {"plotdata", "Exact, average and explicit series for plotting", Command::plotdata},
  };
  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_grid_options(sub, o);
    commands.emplace_back(sub, s.cmd);
  }
  CLI::App* verify = app.add_subcommand("verify", "Run the self-check suites");
  verify->add_option("--suite", o.suite, "identities, series, explicit or all")
      ->check(CLI::IsMember({"identities", "series", "explicit", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(o);
    for (const auto& [sub, cmd] : commands) {
      if (!sub->parsed()) continue;
      switch (cmd) {
        case Command::exact:
        case Command::average:
        case Command::explicit_values: return run_values(cmd, o);
        case Command::compare:
        case Command::plotdata: return run_compare(cmd, o);
        case Command::verify: break;
      }
    }
  } catch (const ExitError& e) {
    std::cerr << "pgl: " << e.message << '\n';
    return e.code;
  } catch (const pgl::Error& e) {
    std::cerr << "pgl: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "pgl: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
