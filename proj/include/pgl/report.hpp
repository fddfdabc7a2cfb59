#pragma once

// Evaluation grids, the per-function registry (exact / average / explicit),
// comparison reports and their CSV and JSON renderings.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pgl/arithmetic.hpp"
#include "pgl/error.hpp"
#include "pgl/explicit_formulas.hpp"
#include "pgl/gamma_series.hpp"
#include "pgl/moebius_transform.hpp"
#include "pgl/zeta_zeros.hpp"

namespace pgl {

enum class Spacing { arithmetic, geometric };

struct Grid {
  double x_min = 10.0;
  double x_max = 1000.0;
  int points = 50;
  Spacing spacing = Spacing::arithmetic;
  /// Added to every integer-valued grid point to stay off jump points.
  double offset = 0.5;

  void validate() const {
    if (!(x_min > 2.0) || !(x_max > x_min))
      throw Error(ErrorKind::domain, "grid requires 2 < from < to");
    if (points < 2) throw Error(ErrorKind::domain, "grid requires at least 2 points");
    if (!std::isfinite(offset) || offset < 0.0 || offset >= 1.0)
      throw Error(ErrorKind::domain, "grid offset must lie in [0, 1)");
  }
};

inline std::vector<double> make_grid(const Grid& grid) {
  grid.validate();
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(grid.points));
  const double span = static_cast<double>(grid.points - 1);
  const double ratio = std::log(grid.x_max / grid.x_min);
  for (int k = 0; k < grid.points; ++k) {
    double x;
    if (k == grid.points - 1)
      x = grid.x_max;
    else if (grid.spacing == Spacing::arithmetic)
      x = grid.x_min + (grid.x_max - grid.x_min) * (k / span);
    else
      x = grid.x_min * std::exp(ratio * (k / span));
    if (x == std::floor(x)) x += grid.offset;
    xs.push_back(x);
  }
  return xs;
}

// ---------------------------------------------------------------------------

/// Shared inputs for evaluating any registered function.
struct EvalContext {
  const ArithTable* table = nullptr;
  const ZeroTable* zeros = nullptr;
  std::size_t num_zeros = 100;
  SeriesControl series{};
};

/// How a summatory function's average and explicit counterparts are formed.
struct FunctionInfo {
  ExactFn fn;
  std::string_view average_name;
  std::string_view explicit_name;  // empty: no explicit formula
};

inline const FunctionInfo& function_info(ExactFn fn) {
  static const std::array<FunctionInfo, 12> infos = {{
      {ExactFn::pi, "avg_pi1", "explicit_pi"},
      {ExactFn::J, "Ei(log x)", "J(x;0,0)"},
      {ExactFn::psi, "x", "J(x;0,1)"},
      {ExactFn::theta, "avg_theta", "sum mu(m) psi_explicit(x^(1/m))"},
      {ExactFn::Ch, "series_Ch", "psi_explicit - log floor(x)"},
      {ExactFn::K, "Ei(2 log x)", "J(x;1,0)"},
      {ExactFn::epsilon, "x^2/2", "J(x;1,1)"},
      {ExactFn::sigma_p, "avg_sigma_p", "estimate_sigma_p"},
      {ExactFn::H_p, "avg_Hp", "estimate_H"},
      {ExactFn::omega, "log log x", ""},
      {ExactFn::d_Lambda, "log x", ""},
      {ExactFn::LambdaLogSum, "x (log x - 1)", "J(x;0,2)"},
  }};
  for (const auto& info : infos)
    if (info.fn == fn) return info;
  throw Error(ErrorKind::domain, "unregistered function");
}

inline bool has_explicit(ExactFn fn) { return !function_info(fn).explicit_name.empty(); }

inline double average_value(ExactFn fn, double x, const EvalContext& ctx) {
  const ArithTable& table = *ctx.table;
  switch (fn) {
    case ExactFn::pi: return avg_pi1(x, table);
    case ExactFn::J: return closed_average(AverageFn::J, x);
    case ExactFn::psi: return closed_average(AverageFn::psi, x);
    case ExactFn::theta: return avg_theta(x, table);
    case ExactFn::Ch: return series_Ch(x, ctx.series).value;
    case ExactFn::K: return ei_real(2.0 * std::log(x));
    case ExactFn::epsilon: return 0.5 * x * x;
    case ExactFn::sigma_p: return avg_sigma_p(x, table);
    case ExactFn::H_p: return avg_Hp(x, table);
    case ExactFn::omega: return closed_average(AverageFn::omega, x);
    case ExactFn::d_Lambda: return closed_average(AverageFn::d_Lambda, x);
    case ExactFn::LambdaLogSum: return closed_average(AverageFn::J02, x);
  }
  throw Error(ErrorKind::domain, "no average");
}

inline double explicit_value(ExactFn fn, double x, const EvalContext& ctx) {
  if (ctx.zeros == nullptr)
    throw Error(ErrorKind::precondition, "explicit formulas need zeta zeros");
  const ZeroTable& z = *ctx.zeros;
  const std::size_t nz = ctx.num_zeros;
  switch (fn) {
    case ExactFn::pi: return explicit_pi(x, z, *ctx.table, nz);
    case ExactFn::J: return explicit_eval(spec_for(0, 0, z, nz), x).value;
    case ExactFn::psi: return explicit_eval(spec_for(0, 1, z, nz), x).value;
    case ExactFn::theta: return explicit_theta(x, z, *ctx.table, nz);
    case ExactFn::Ch: return explicit_Ch(x, z, nz);
    case ExactFn::K: return explicit_eval(spec_for(1, 0, z, nz), x).value;
    case ExactFn::epsilon: return explicit_eval(spec_for(1, 1, z, nz), x).value;
    case ExactFn::sigma_p: return estimate_sigma_p(x, z, *ctx.table, nz);
    case ExactFn::H_p: return estimate_H(x, z, *ctx.table, nz);
    case ExactFn::LambdaLogSum: return explicit_eval(spec_for(0, 2, z, nz), x).value;
    case ExactFn::omega:
    case ExactFn::d_Lambda: break;
  }
  throw Error(ErrorKind::domain,
              "no explicit formula for " + std::string(to_string(fn)));
}

// ---------------------------------------------------------------------------

struct ComparisonRow {
  double x;
  double exact;
  double average;
  std::optional<double> explicit_value;
  double abs_err_avg;
  std::optional<double> abs_err_exp;
  double rel_err_avg;
  std::optional<double> rel_err_exp;
};

struct ReportMetadata {
  std::string function;
  std::string average;
  std::string explicit_formula;
  std::size_t zero_count = 0;
  double series_tol = 0.0;
  std::uint64_t sieve_limit = 0;
  std::optional<std::string> timestamp;
};

struct ErrorSummary {
  double max_abs = 0.0;
  double rms = 0.0;
};

struct ComparisonReport {
  ReportMetadata metadata;
  std::vector<ComparisonRow> rows;

  ErrorSummary average_errors() const {
    return summarize([](const ComparisonRow& r) { return std::optional(r.abs_err_avg); });
  }
  std::optional<ErrorSummary> explicit_errors() const {
    if (rows.empty() || !rows.front().abs_err_exp) return std::nullopt;
    return summarize([](const ComparisonRow& r) { return r.abs_err_exp; });
  }

 private:
  template <class Get>
  ErrorSummary summarize(Get get) const {
    ErrorSummary s;
    CompensatedSum<double> sq;
    for (const auto& row : rows) {
      const double e = get(row).value_or(0.0);
      s.max_abs = std::max(s.max_abs, e);
      sq.add(e * e);
    }
    if (!rows.empty()) s.rms = std::sqrt(sq.value() / static_cast<double>(rows.size()));
    return s;
  }
};

namespace detail {

inline double relative_error(double approx, double exact) {
  if (exact == 0.0) return approx == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(approx - exact) / std::abs(exact);
}

}  // namespace detail

/// Exact, average and (where available) explicit values over an ascending grid.
/// The table must reach floor(max x); zeros are only consulted when the
/// function has an explicit formula and include_explicit is set.
inline ComparisonReport build_comparison(ExactFn fn, std::span<const double> xs,
                                         const EvalContext& ctx,
                                         bool include_explicit = true) {
  if (ctx.table == nullptr) throw Error(ErrorKind::precondition, "missing sieve table");
  const bool with_explicit = include_explicit && has_explicit(fn);
  if (with_explicit && (ctx.zeros == nullptr || ctx.num_zeros == 0))
    throw Error(ErrorKind::empty_table,
                std::string(to_string(fn)) + " has an explicit formula but no zeros");
  ComparisonReport report;
  const FunctionInfo& info = function_info(fn);
  report.metadata.function = std::string(to_string(fn));
  report.metadata.average = std::string(info.average_name);
  report.metadata.explicit_formula = std::string(info.explicit_name);
  report.metadata.zero_count =
      with_explicit ? std::min(ctx.num_zeros, ctx.zeros->size()) : 0;
  report.metadata.series_tol = ctx.series.abs_tol;
  report.metadata.sieve_limit = ctx.table->limit();

  const std::vector<double> exact = exact_sum_grid(*ctx.table, fn, xs);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    ComparisonRow row{};
    row.x = xs[k];
    row.exact = exact[k];
    row.average = average_value(fn, xs[k], ctx);
    row.abs_err_avg = std::abs(row.average - row.exact);
    row.rel_err_avg = detail::relative_error(row.average, row.exact);
    if (with_explicit) {
      const double v = explicit_value(fn, xs[k], ctx);
      row.explicit_value = v;
      row.abs_err_exp = std::abs(v - row.exact);
      row.rel_err_exp = detail::relative_error(v, row.exact);
    }
    report.rows.push_back(row);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering. Numbers use the shortest round-trip decimal form so output is
// reproducible byte for byte.

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

/// Two-column x,value CSV.
inline std::string render_values_csv(std::span<const double> xs,
                                     std::span<const double> values) {
  std::ostringstream out;
  out << "x,value\n";
  for (std::size_t k = 0; k < xs.size(); ++k)
    out << format_number(xs[k]) << ',' << format_number(values[k]) << '\n';
  return out.str();
}

inline std::string render_values_json(std::string_view fn, std::string_view kind,
                                      std::span<const double> xs,
                                      std::span<const double> values) {
  nlohmann::ordered_json doc;
  doc["function"] = fn;
  doc["kind"] = kind;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < xs.size(); ++k)
    rows.push_back({{"x", xs[k]}, {"value", values[k]}});
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

inline constexpr std::string_view kComparisonHeader =
    "x,exact,average,explicit,abs_err_avg,abs_err_exp,rel_err_avg,rel_err_exp";

inline constexpr std::string_view kPlotHeader = "x,exact,average,explicit";

inline std::string render_metadata_comments(const ReportMetadata& m) {
  std::ostringstream out;
  out << "# function=" << m.function << '\n'
      << "# average=" << m.average << '\n'
      << "# explicit=" << m.explicit_formula << '\n'
      << "# zero_count=" << m.zero_count << '\n'
      << "# series_tol=" << format_number(m.series_tol) << '\n'
      << "# sieve_limit=" << m.sieve_limit << '\n';
  if (m.timestamp) out << "# timestamp=" << *m.timestamp << '\n';
  return out.str();
}

inline std::string render_comparison_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << render_metadata_comments(report.metadata) << kComparisonHeader << '\n';
  for (const auto& r : report.rows) {
    out << format_number(r.x) << ',' << format_number(r.exact) << ','
        << format_number(r.average) << ',' << format_optional(r.explicit_value) << ','
        << format_number(r.abs_err_avg) << ',' << format_optional(r.abs_err_exp) << ','
        << format_number(r.rel_err_avg) << ',' << format_optional(r.rel_err_exp)
        << '\n';
  }
  return out.str();
}

inline std::string render_plotdata_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << kPlotHeader << '\n';
  for (const auto& r : report.rows)
    out << format_number(r.x) << ',' << format_number(r.exact) << ','
        << format_number(r.average) << ',' << format_optional(r.explicit_value) << '\n';
  return out.str();
}

namespace detail {

inline nlohmann::ordered_json json_number(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

inline nlohmann::ordered_json metadata_json(const ReportMetadata& m) {
  nlohmann::ordered_json meta;
  meta["function"] = m.function;
  meta["average"] = m.average;
  meta["explicit"] = m.explicit_formula;
  meta["zero_count"] = m.zero_count;
  meta["series_tol"] = m.series_tol;
  meta["sieve_limit"] = m.sieve_limit;
  if (m.timestamp) meta["timestamp"] = *m.timestamp;
  return meta;
}

}  // namespace detail

inline std::string render_comparison_json(const ComparisonReport& report) {
  using detail::json_number;
  nlohmann::ordered_json doc;
  doc["metadata"] = detail::metadata_json(report.metadata);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["x"] = r.x;
    row["exact"] = r.exact;
    row["average"] = r.average;
    row["explicit"] = json_number(r.explicit_value);
    row["abs_err_avg"] = json_number(r.abs_err_avg);
    row["abs_err_exp"] = json_number(r.abs_err_exp);
    row["rel_err_avg"] = json_number(r.rel_err_avg);
    row["rel_err_exp"] = json_number(r.rel_err_exp);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

inline std::string render_plotdata_json(const ComparisonReport& report) {
  using detail::json_number;
  nlohmann::ordered_json doc;
  doc["metadata"] = detail::metadata_json(report.metadata);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"x", r.x},
                    {"exact", r.exact},
                    {"average", r.average},
                    {"explicit", json_number(r.explicit_value)}});
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

inline std::string render_summary(const ComparisonReport& report) {
  std::ostringstream out;
  const ErrorSummary avg = report.average_errors();
  out << "fn=" << report.metadata.function << " points=" << report.rows.size()
      << " max_abs_err_avg=" << format_number(avg.max_abs)
      << " rms_avg=" << format_number(avg.rms);
  if (const auto exp = report.explicit_errors())
    out << " max_abs_err_exp=" << format_number(exp->max_abs)
        << " rms_exp=" << format_number(exp->rms);
  return out.str();
}

}  // namespace pgl
