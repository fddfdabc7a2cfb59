#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include <json.hpp>

#include "pgl/report.hpp"
#include "pgl/verify.hpp"

using pgl::ExactFn;

namespace {

const pgl::ArithTable& table() {
  static const pgl::ArithTable t(100'000);
  return t;
}

pgl::EvalContext context() { return {&table(), &pgl::bundled_zeros(), 100, {}}; }

}  // namespace

TEST(Grid, ArithmeticWithOffset) {
  pgl::Grid g{10.0, 100.0, 10, pgl::Spacing::arithmetic, 0.5};
  const auto xs = pgl::make_grid(g);
  ASSERT_EQ(xs.size(), 10u);
  EXPECT_EQ(xs.front(), 10.5);
  EXPECT_EQ(xs.back(), 100.5);
  EXPECT_EQ(xs[1], 20.5);
  for (std::size_t k = 1; k < xs.size(); ++k) EXPECT_GT(xs[k], xs[k - 1]);
}

TEST(Grid, GeometricAndNonIntegerPoints) {
  pgl::Grid g{10.0, 1e4, 4, pgl::Spacing::geometric, 0.5};
  const auto xs = pgl::make_grid(g);
  EXPECT_EQ(xs.front(), 10.5);
  EXPECT_EQ(xs.back(), 10000.5);
  EXPECT_NEAR(xs[1], 100.0, 0.5);
  EXPECT_NEAR(xs[2], 1000.0, 0.5);
  pgl::Grid h{2.25, 3.75, 2, pgl::Spacing::arithmetic, 0.5};
  EXPECT_EQ(pgl::make_grid(h), (std::vector<double>{2.25, 3.75}));
  pgl::Grid z{10.0, 12.0, 3, pgl::Spacing::arithmetic, 0.0};
  EXPECT_EQ(pgl::make_grid(z), (std::vector<double>{10.0, 11.0, 12.0}));
}

TEST(Grid, Validation) {
  EXPECT_THROW(pgl::make_grid({2.0, 10.0, 5}), pgl::Error);
  EXPECT_THROW(pgl::make_grid({10.0, 10.0, 5}), pgl::Error);
  EXPECT_THROW(pgl::make_grid({10.0, 20.0, 1}), pgl::Error);
}

TEST(Registry, EveryFunctionHasAnAverage) {
  const auto ctx = context();
  for (ExactFn fn : pgl::kAllExactFns) {
    const double x = 1000.5;
    const double exact = pgl::exact_sum(table(), fn, x);
    const double avg = pgl::average_value(fn, x, ctx);
    EXPECT_TRUE(std::isfinite(avg)) << pgl::to_string(fn);
    EXPECT_LT(std::abs(avg - exact), 0.25 * std::abs(exact) + 2.0) << pgl::to_string(fn);
    if (pgl::has_explicit(fn)) {
      const double e = pgl::explicit_value(fn, x, ctx);
      EXPECT_LT(std::abs(e - exact), 0.1 * std::abs(exact) + 2.0) << pgl::to_string(fn);
    } else {
      EXPECT_THROW(pgl::explicit_value(fn, x, ctx), pgl::Error);
    }
  }
}

TEST(Comparison, PsiExplicitBeatsAverage) {
  pgl::Grid g{10.0, 1000.0, 50};
  const auto xs = pgl::make_grid(g);
  const auto rep = pgl::build_comparison(ExactFn::psi, xs, context());
  ASSERT_EQ(rep.rows.size(), 50u);
  EXPECT_LT(rep.explicit_errors()->rms, rep.average_errors().rms);
  for (std::size_t k = 1; k < rep.rows.size(); ++k) EXPECT_GT(rep.rows[k].x, rep.rows[k - 1].x);
  for (const auto& r : rep.rows) {
    EXPECT_FALSE(std::isnan(r.rel_err_avg));
    EXPECT_FALSE(std::isnan(*r.rel_err_exp));
  }
}

TEST(Comparison, PiAverageWithinHalfPercentAtDecades) {
  pgl::Grid g{1000.0, 1e5, 3, pgl::Spacing::geometric};
  const auto rep = pgl::build_comparison(ExactFn::pi, pgl::make_grid(g), context(), false);
  for (const auto& r : rep.rows) EXPECT_LT(r.rel_err_avg, 0.005) << r.x;
  EXPECT_FALSE(rep.rows.front().explicit_value.has_value());
}

TEST(Comparison, PiAverageBetweenDecadesCanExceedHalfPercent) {
  // pi(1623.5) = 257 while R(1623.5) = 253.89.
  const std::vector<double> xs = {1623.5};
  const auto rep = pgl::build_comparison(ExactFn::pi, xs, context(), false);
  EXPECT_EQ(rep.rows[0].exact, 257.0);
  EXPECT_GT(rep.rows[0].rel_err_avg, 0.01);
}

TEST(Comparison, RequiresZerosForExplicitFunctions) {
  pgl::EvalContext ctx = context();
  ctx.zeros = nullptr;
  const std::vector<double> xs = {10.5};
  try {
    pgl::build_comparison(ExactFn::psi, xs, ctx);
    FAIL();
  } catch (const pgl::Error& e) {
    EXPECT_EQ(e.kind(), pgl::ErrorKind::empty_table);
  }
  EXPECT_NO_THROW(pgl::build_comparison(ExactFn::omega, xs, ctx));
}

TEST(Render, CsvHeaderAndEmptyExplicit) {
  const std::vector<double> xs = {10.5, 20.5};
  const auto rep = pgl::build_comparison(ExactFn::omega, xs, context());
  const std::string csv = pgl::render_comparison_csv(rep);
  EXPECT_NE(csv.find("\nx,exact,average,explicit,abs_err_avg,abs_err_exp,rel_err_avg,rel_err_exp\n"),
            std::string::npos);
  EXPECT_NE(csv.find("10.5,"), std::string::npos);
  EXPECT_NE(csv.find(",,"), std::string::npos);
  EXPECT_EQ(csv.find("timestamp"), std::string::npos);
  const std::string plot = pgl::render_plotdata_csv(rep);
  EXPECT_EQ(plot.rfind("x,exact,average,explicit\n", 0), 0u);
}

TEST(Render, JsonMirrorsCsv) {
  const std::vector<double> xs = {10.5, 20.5};
  auto rep = pgl::build_comparison(ExactFn::psi, xs, context());
  rep.metadata.timestamp = "2000-01-01T00:00:00Z";
  const auto doc = nlohmann::json::parse(pgl::render_comparison_json(rep));
  EXPECT_EQ(doc["metadata"]["function"], "psi");
  EXPECT_EQ(doc["metadata"]["zero_count"], 100);
  EXPECT_EQ(doc["metadata"]["timestamp"], "2000-01-01T00:00:00Z");
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["x"], 10.5);
  EXPECT_NEAR(doc["rows"][0]["exact"].get<double>(), rep.rows[0].exact, 0.0);
}

TEST(Render, NumbersRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 7.832014224273232, 1e-300, 123456789.0})
    EXPECT_EQ(std::stod(pgl::format_number(v)), v);
  EXPECT_EQ(pgl::format_number(10.5), "10.5");
}

TEST(Render, SummaryLine) {
  const std::vector<double> xs = {10.5, 20.5};
  const auto rep = pgl::build_comparison(ExactFn::psi, xs, context());
  const std::string s = pgl::render_summary(rep);
  EXPECT_EQ(s.rfind("fn=psi points=2 max_abs_err_avg=", 0), 0u);
  EXPECT_NE(s.find("rms_exp="), std::string::npos);
}

TEST(Verify, SeriesSuitePasses) {
  const auto results = pgl::run_suite(pgl::Suite::series);
  EXPECT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  EXPECT_THROW(pgl::parse_suite("bogus"), pgl::Error);
}
