#pragma once

// Self-check suites over the library's invariants. Each check reports a
// pass/fail flag and a one-line detail; an exception inside a check counts
// as a failure.

#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pgl/arithmetic.hpp"
#include "pgl/explicit_formulas.hpp"
#include "pgl/gamma_series.hpp"
#include "pgl/moebius_transform.hpp"
#include "pgl/report.hpp"
#include "pgl/specfun.hpp"
#include "pgl/zeta_zeros.hpp"

namespace pgl {

enum class Suite { identities, series, explicit_formulas, all };

inline Suite parse_suite(std::string_view name) {
  if (name == "identities") return Suite::identities;
  if (name == "series") return Suite::series;
  if (name == "explicit") return Suite::explicit_formulas;
  if (name == "all") return Suite::all;
  throw Error(ErrorKind::domain, "unknown suite '" + std::string(name) + "'");
}

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

struct CheckOutcome {
  bool passed;
  std::string detail;
};

inline std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << v;
  return s.str();
}

inline CheckOutcome bounded(double err, double tol) {
  return {err <= tol, "max err " + sci(err) + " (tol " + sci(tol) + ")"};
}

inline double rel_or_abs(double got, double want) {
  const double d = std::abs(got - want);
  return std::abs(want) > 1.0 ? d / std::abs(want) : d;
}

class Runner {
 public:
  explicit Runner(std::string suite, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), out_(out) {}

  void run(std::string name, const std::function<CheckOutcome()>& body) {
    CheckResult r{suite_, std::move(name), false, {}};
    try {
      auto outcome = body();
      r.passed = outcome.passed;
      r.detail = std::move(outcome.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("threw: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

inline std::vector<double> half_integer_grid(double lo, double hi, int points) {
  std::vector<double> xs;
  for (int k = 0; k < points; ++k) {
    const double x = lo + (hi - lo) * k / (points - 1);
    xs.push_back(std::floor(x) + 0.5);
  }
  return xs;
}

// -- identities -------------------------------------------------------------

inline void identity_checks(Runner& run) {
  run.run("poisson mean sum equals c", [] {
    double worst = 0.0;
    for (double c : {-std::log(1e6), -1.0, 0.5, 5.0})
      worst = std::max(worst, std::abs(poisson_mean_sum(c).value - c));
    return bounded(worst, 1e-9);
  });

  run.run("poisson mean sum over c in [-15, 15]", [] {
    double worst = 0.0;
    for (int k = -30; k <= 30; ++k) {
      const double c = 0.5 * k;
      worst = std::max(worst, std::abs(poisson_mean_sum(c).value - c));
    }
    return bounded(worst, 1e-9);
  });

  run.run("P(n,z) head and tail forms agree", [] {
    double worst = 0.0;
    for (double z : {-40.0, -17.5, -3.2, 2.5, 11.0, 33.0}) {
      const int n0 = static_cast<int>(std::ceil(std::abs(z)));
      for (int n = std::max(n0, 1); n <= n0 + 5; ++n) {
        // Head form, summed directly in wide precision.
        wide_real partial = 0, term = 1;
        const wide_real zw(z);
        for (int k = 0; k < n; ++k) {
          if (k > 0) term *= zw / k;
          partial += term;
        }
        const double head = static_cast<double>(1 - exp(-zw) * partial);
        const double got = reg_lower_gamma_int(n, z);
        worst = std::max(worst, std::abs(got - head) / std::abs(head));
      }
    }
    return bounded(worst, 1e-10);
  });

  run.run("Gamma(1,z) e^z = 1", [] {
    double worst = 0.0;
    for (double z : {-30.0, -2.5, -1e-3, 0.0, 0.7, 12.0, 300.0}) {
      worst = std::max(worst, std::abs(upper_gamma(1, z) * std::exp(z) - 1.0));
      const std::complex<double> zc(z, 1.5);
      worst = std::max(worst, std::abs(upper_gamma(1, zc) * std::exp(zc) - 1.0));
    }
    return bounded(worst, 4.5e-16);
  });

  run.run("complex Ei on the positive axis matches real Ei", [] {
    double worst = 0.0;
    for (double y : {0.01, 0.5, 1.0, 7.5, 30.0, 36.0, 80.0, 400.0}) {
      const double re = ei_real(y);
      worst = std::max(worst, std::abs(ei_complex({y, 0.0}).real() - re) / std::abs(re));
    }
    return bounded(worst, 1e-10);
  });

  const ArithTable table(1'000'000);

  run.run("d_Lambda(x) = log x for 2 <= x <= 1e4", [&] {
    double worst = 0.0;
    for (std::uint64_t x = 2; x <= 10'000; ++x)
      worst = std::max(worst, std::abs(d_lambda_exact(table, x) -
                                       std::log(static_cast<double>(x))));
    return bounded(worst, 1e-9);
  });

  run.run("Lambda rebuilt from mu matches sieve for 2 <= x <= 2000", [&] {
    double worst = 0.0;
    for (std::uint64_t x = 2; x <= 2000; ++x)
      worst = std::max(worst,
                       std::abs(lambda_from_moebius(table, x) - table.von_mangoldt(x)));
    return bounded(worst, 1e-9);
  });

  run.run("divisor power sums match enumeration for x <= 1e4", [] {
    std::uint64_t mismatches = 0;
    for (int r = 0; r <= 2; ++r) {
      for (std::uint64_t x = 1; x <= 10'000; ++x) {
        std::uint64_t brute = 0;
        for (std::uint64_t d = 1; d * d <= x; ++d) {
          if (x % d != 0) continue;
          const std::uint64_t e = x / d;
          std::uint64_t dr = 1, er = 1;
          for (int k = 0; k < r; ++k) {
            dr *= d;
            er *= e;
          }
          brute += dr;
          if (e != d) brute += er;
        }
        if (divisor_power_sum(x, r) != brute) ++mismatches;
      }
    }
    return CheckOutcome{mismatches == 0, std::to_string(mismatches) + " mismatches"};
  });

  run.run("J(x) = sum_m pi(x^(1/m)) / m", [&] {
    double worst = 0.0;
    for (double x : {1e3, 1e4, 1e6}) {
      CompensatedSum<double> sum;
      for (int m = 1; std::pow(x, 1.0 / m) >= 2.0; ++m)
        sum.add(exact_sum(table, ExactFn::pi, std::pow(x, 1.0 / m) + 1e-9) / m);
      worst = std::max(worst, std::abs(sum.value() - exact_sum(table, ExactFn::J, x)));
    }
    return bounded(worst, 1e-9);
  });

  run.run("Ch(x) equals the non-divisor psi sum for x <= 1e3", [&] {
    double worst = 0.0;
    for (std::uint64_t x = 2; x <= 1000; ++x) {
      CompensatedSum<double> sum;
      for (std::uint64_t n = 2; n <= x; ++n)
        if (x % n != 0) sum.add(table.von_mangoldt(n));
      worst = std::max(worst, std::abs(exact_sum(table, ExactFn::Ch, static_cast<double>(x)) -
                                       sum.value()));
    }
    return bounded(worst, 1e-9);
  });

  run.run("cumulative exact sums are non-decreasing", [&] {
    std::vector<double> xs;
    for (double x = 2.0; x <= 5000.0; x += 1.0) xs.push_back(x);
    int violations = 0;
    for (ExactFn fn : kAllExactFns) {
      if (fn == ExactFn::Ch || fn == ExactFn::omega || fn == ExactFn::d_Lambda) continue;
      const auto v = exact_sum_grid(table, fn, xs);
      for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] < v[k - 1]) ++violations;
    }
    return CheckOutcome{violations == 0, std::to_string(violations) + " decreases"};
  });

  run.run("zero table counts 28..30 ordinates up to 100", [] {
    const auto n = bundled_zeros().count_up_to(100.0);
    return CheckOutcome{n >= 28 && n <= 30, std::to_string(n) + " ordinates"};
  });

  run.run("zero table serialization round trip", [] {
    std::stringstream buf;
    serialize_zeros(buf, bundled_zeros());
    const ZeroTable back = parse_zeros(buf, bundled_zeros().size(), "round-trip");
    return CheckOutcome{back == bundled_zeros(), "bit-exact comparison"};
  });
}

// -- series -----------------------------------------------------------------

inline void series_checks(Runner& run) {
  const std::vector<double> grid = {2.5, 10.0, 1e3, 1e6};

  run.run("series_Np offset from Ei(log x) - ln log x is constant", [&] {
    const auto rep = audit_series_vs_closed(AverageFn::Np, grid);
    return CheckOutcome{rep.constant && std::abs(rep.mean_difference + kEulerGamma) < 1e-8,
                        "offset " + std::to_string(rep.mean_difference) + ", spread " +
                            sci(rep.spread)};
  });

  run.run("series_Ch offset from x - log x is constant", [&] {
    const auto rep = audit_series_vs_closed(AverageFn::Ch, grid);
    return CheckOutcome{rep.constant && std::abs(rep.mean_difference + 1.0) < 1e-8,
                        "offset " + std::to_string(rep.mean_difference) + ", spread " +
                            sci(rep.spread)};
  });

  run.run("series match their closed forms", [&] {
    double worst = 0.0;
    for (double x : grid) {
      const double y = std::log(x);
      worst = std::max(worst, rel_or_abs(series_Np(x).value,
                                         ei_real(y) - std::log(y) - kEulerGamma));
      worst = std::max(worst, rel_or_abs(series_Ch(x).value, x - y - 1.0));
      worst = std::max(worst, rel_or_abs(series_H(x).value, 0.5 * x * x - x + 0.5));
      worst = std::max(worst, rel_or_abs(series_sigma(x).value,
                                         ei_real(2 * y) - ei_real(y) - std::log(2.0)));
    }
    return bounded(worst, 1e-8);
  });

  run.run("series agree at tolerances 1e-10 and 1e-12", [&] {
    double worst = 0.0;
    const SeriesControl loose{200, 1e-10}, tight{200, 1e-12};
    for (SeriesFn fn : {SeriesFn::Np, SeriesFn::sigma, SeriesFn::Ch, SeriesFn::H,
                        SeriesFn::J02})
      for (double x : grid)
        worst = std::max(worst, std::abs(series_eval(fn, x, loose).value -
                                         series_eval(fn, x, tight).value));
    return bounded(worst, 1e-9);
  });

  run.run("series_Np differences follow 1/log x", [] {
    double worst = 0.0;
    for (double x : {1e3, 1e5}) {
      const double diff = series_Np(x + 1).value - series_Np(x).value;
      const double want = 1.0 / std::log(x);
      worst = std::max(worst, std::abs(diff - want) / want);
    }
    return bounded(worst, 0.2);
  });

  run.run("series_Np, series_Ch, series_J02 strictly increase", [] {
    int violations = 0;
    for (SeriesFn fn : {SeriesFn::Np, SeriesFn::Ch, SeriesFn::J02}) {
      double prev = -std::numeric_limits<double>::infinity();
      for (double x = 1.05; x <= 1e6; x *= 1.35) {
        const double v = series_eval(fn, x).value;
        if (!(v > prev)) ++violations;
        prev = v;
      }
    }
    return CheckOutcome{violations == 0, std::to_string(violations) + " violations"};
  });

  const ArithTable table(1000);

  run.run("truncated avg_pi1 inverts back to Ei(log x)", [&] {
    double worst = 0.0;
    for (double x : {1e2, 1e4}) {
      const int depth = moebius_depth(x, 1.0);
      CompensatedSum<double> sum;
      for (int m = 1; m <= depth; ++m) {
        const double u = std::pow(x, 1.0 / m);
        const double core = u >= 2.0
                                ? mobius_transform([](double v) { return ei_real(std::log(v)); },
                                                   u, {MoebiusWeight::weighted_by_m, 1.0},
                                                   table)
                                : 0.0;
        sum.add(core / m);
      }
      const double want = ei_real(std::log(x));
      worst = std::max(worst, std::abs(sum.value() - want) / want);
    }
    return bounded(worst, 1e-8);
  });

  run.run("truncation depth brackets 2", [] {
    int violations = 0;
    for (double s : {1.0, 2.0})
      for (double x = 2.5; x < 1e7; x *= 1.7) {
        const int m = moebius_depth(x, s);
        if (!(std::pow(x, s / (m + 1)) < 2.0 && std::pow(x, s / m) >= 2.0)) ++violations;
      }
    return CheckOutcome{violations == 0, std::to_string(violations) + " violations"};
  });
}

// -- explicit formulas ------------------------------------------------------

inline double rms_error(const std::vector<double>& xs, const std::vector<double>& exact,
                        const std::function<double(double)>& f) {
  CompensatedSum<double> sq;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double d = f(xs[k]) - exact[k];
    sq.add(d * d);
  }
  return std::sqrt(sq.value() / static_cast<double>(xs.size()));
}

inline void explicit_checks(Runner& run) {
  const ZeroTable& zeros = bundled_zeros();
  const ArithTable table(1'000'000);

  run.run("zero sums are real when conjugates are summed separately", [&] {
    double worst = 0.0;
    const int members[5][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}};
    for (const auto& m : members)
      for (double x : {10.5, 100.5, 1e4 + 0.5}) {
        const auto s = zero_sum_unpaired(spec_for(m[0], m[1], zeros), x);
        worst = std::max(worst, std::abs(s.imag()) / std::abs(s.real()));
      }
    return CheckOutcome{worst < 1e-9, "max |Im|/|Re| " + sci(worst)};
  });

  const auto xs = half_integer_grid(10.0, 1000.0, 50);

  for (auto [fn, r, i, label] :
       {std::tuple{ExactFn::psi, 0, 1, "psi"}, std::tuple{ExactFn::J, 0, 0, "J"}}) {
    run.run(std::string("RMS error of explicit ") + label + " falls from 10 to 100 zeros",
            [&, fn = fn, r = r, i = i] {
              const auto exact = exact_sum_grid(table, fn, xs);
              auto rms_with = [&](std::size_t n) {
                return rms_error(xs, exact, [&](double x) {
                  return explicit_eval(spec_for(r, i, zeros, n), x).value;
                });
              };
              const double r10 = rms_with(10), r100 = rms_with(100);
              return CheckOutcome{r100 < r10, "RMS " + sci(r10) + " -> " + sci(r100)};
            });
  }

  run.run("explicit psi approaches jump midpoints as zeros grow", [&] {
    auto mean_gap = [&](std::size_t n) {
      CompensatedSum<double> sum;
      int count = 0;
      for (std::uint64_t x = 3; x <= 200; ++x) {
        if (!table.prime_power(x)) continue;
        const double xd = static_cast<double>(x);
        const double midpoint = exact_sum(table, ExactFn::psi, xd) - 0.5 * table.von_mangoldt(x);
        sum.add(std::abs(explicit_eval(spec_for(0, 1, zeros, n), xd).value - midpoint));
        ++count;
      }
      return sum.value() / count;
    };
    const double g10 = mean_gap(10), g100 = mean_gap(100);
    return CheckOutcome{g100 < g10, "mean gap " + sci(g10) + " -> " + sci(g100)};
  });

  run.run("main term of J alone equals Ei(log x)", [&] {
    double worst = 0.0;
    for (double x : {2.5, 10.0, 1e3, 1e6}) {
      ExplicitSpec spec = spec_for(0, 0, zeros);
      spec.parts = terms::main;
      worst = std::max(worst,
                       std::abs(explicit_eval(spec, x).value - closed_average(AverageFn::J, x)));
    }
    return CheckOutcome{worst == 0.0, "max diff " + sci(worst)};
  });

  run.run("K and epsilon approach their main terms", [&] {
    std::vector<double> rel_k, rel_e;
    for (double x : {1e3 + 0.5, 1e4 + 0.5, 1e5 + 0.5}) {
      const double mk = ei_real(2.0 * std::log(x));
      const double me = 0.5 * x * x;
      rel_k.push_back(std::abs(explicit_eval(spec_for(1, 0, zeros), x).value - mk) / mk);
      rel_e.push_back(std::abs(explicit_eval(spec_for(1, 1, zeros), x).value - me) / me);
    }
    const bool ok = rel_k[2] < rel_k[0] && rel_e[2] < rel_e[0] && rel_k[2] < 0.01 &&
                    rel_e[2] < 0.01;
    return CheckOutcome{ok, "K " + sci(rel_k[0]) + " -> " + sci(rel_k[2]) + ", epsilon " +
                                sci(rel_e[0]) + " -> " + sci(rel_e[2])};
  });

  run.run("frak_z Dirichlet and product forms agree", [&] {
    double worst = 0.0;
    for (double s : {2.0, 2.5, 3.0})
      worst = std::max(worst, std::abs(frak_z(s, FrakZMode::dirichlet, table).value -
                                       frak_z(s, FrakZMode::product, table).value));
    return bounded(worst, 1e-8);
  });
}

}  // namespace detail

inline std::vector<CheckResult> run_suite(Suite suite) {
  std::vector<CheckResult> out;
  if (suite == Suite::identities || suite == Suite::all) {
    detail::Runner run("identities", out);
    detail::identity_checks(run);
  }
  if (suite == Suite::series || suite == Suite::all) {
    detail::Runner run("series", out);
    detail::series_checks(run);
  }
  if (suite == Suite::explicit_formulas || suite == Suite::all) {
    detail::Runner run("explicit", out);
    detail::explicit_checks(run);
  }
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

inline void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    out << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(11) << r.suite
        << r.name << "  [" << r.detail << "]\n";
}

}  // namespace pgl
