#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgl/arithmetic.hpp"
#include "pgl/moebius_transform.hpp"

using pgl::MoebiusWeight;

namespace {

const pgl::ArithTable& table() {
  static const pgl::ArithTable t(1'000'000);
  return t;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(MoebiusDepth, BracketsTwo) {
  EXPECT_EQ(pgl::moebius_depth(100.0, 1.0), 6);
  EXPECT_EQ(pgl::moebius_depth(1e6, 1.0), 19);
  EXPECT_EQ(pgl::moebius_depth(3.0, 1.0), 1);
  EXPECT_EQ(pgl::moebius_depth(1.2, 1.0), 1);
  EXPECT_EQ(pgl::moebius_depth(1024.0, 1.0), 10);
  for (double s : {1.0, 2.0})
    for (double x = 2.01; x < 1e9; x *= 1.31) {
      const int m = pgl::moebius_depth(x, s);
      EXPECT_GE(std::pow(x, s / m), 2.0) << x;
      EXPECT_LT(std::pow(x, s / (m + 1)), 2.0) << x;
    }
}

TEST(MobiusTransform, Examples) {
  const auto& t = table();
  const double got = pgl::mobius_transform([](double u) { return u; }, 100.0,
                                           {MoebiusWeight::unweighted, 1.0}, t);
  double want = 0.0;
  for (int m = 1; m <= 6; ++m) want += oracle::mobius(m) * std::pow(100.0, 1.0 / m);
  EXPECT_NEAR(got, want, 1e-12);

  EXPECT_EQ(pgl::mobius_transform([](double u) { return u * u; }, 3.0,
                                  {MoebiusWeight::weighted_by_m, 1.0}, t),
            9.0);

  const double ones = pgl::mobius_transform([](double) { return 1.0; }, 1e6,
                                            {MoebiusWeight::weighted_by_m, 1.0}, t);
  double mertens_like = 0.0;
  for (int m = 1; m <= 19; ++m) mertens_like += static_cast<double>(oracle::mobius(m)) / m;
  EXPECT_NEAR(ones, mertens_like, 1e-15);
}

TEST(MobiusTransform, PropagatesErrorsAndChecksTable) {
  const pgl::ArithTable tiny(4);
  EXPECT_THROW(pgl::mobius_transform([](double u) { return u; }, 1e6,
                                     {MoebiusWeight::unweighted, 1.0}, tiny),
               pgl::Error);
  // f hits the pole of Ei at u = 2.5.
  EXPECT_THROW(pgl::mobius_transform([](double u) { return pgl::ei_real(std::floor(u) - 2.0); },
                                     2.5, {MoebiusWeight::unweighted, 1.0}, table()),
               pgl::Error);
}

TEST(AvgPi1, MatchesGramSeries) {
  const auto& t = table();
  EXPECT_NEAR(pgl::avg_pi1(100.0, t), 25.6616332669242, 1e-12);
  for (double x = 10.0; x <= 1e6; x *= 1.7)
    EXPECT_LE(rel(pgl::avg_pi1(x, t), oracle::gram_R(x)), 1e-6) << x;
}

TEST(AvgPi1, TracksPrimeCount) {
  const auto& t = table();
  EXPECT_LT(std::abs(pgl::avg_pi1(1e6, t) - 78498.0), 100.0);
  for (double x : {1e3, 1e4, 1e5, 1e6})
    EXPECT_LE(std::abs(pgl::avg_pi1(x, t) - pgl::exact_sum(t, pgl::ExactFn::pi, x)),
              3.0 * std::sqrt(x));
}

TEST(AvgPi1, MonotoneIncreasing) {
  const auto& t = table();
  double prev = 0.0;
  for (double x = 10.0; x <= 1e6; x *= 1.05) {
    const double v = pgl::avg_pi1(x, t);
    ASSERT_GT(v, prev) << x;
    prev = v;
  }
}

TEST(AvgPi1, DomainError) { EXPECT_THROW(pgl::avg_pi1(2.0, table()), pgl::Error); }

TEST(EiTransform, TruncatedCoreInvertsToEi) {
  // With matched truncation the Moebius pair is exact:
  // sum_{m<=M} (1/m) core(x^{1/m}) = Ei(log x).
  const auto& t = table();
  for (double x : {1e2, 1e4}) {
    const int depth = pgl::moebius_depth(x, 1.0);
    double sum = 0.0;
    for (int m = 1; m <= depth; ++m)
      sum += pgl::ei_mobius_transform(std::pow(x, 1.0 / m), 1.0, t).truncated / m;
    EXPECT_LE(rel(sum, pgl::ei_real(std::log(x))), 1e-8) << x;
  }
}

TEST(EiTransform, TailIsSmall) {
  const auto& t = table();
  for (double x : {1e2, 1e4, 1e6}) {
    const auto r = pgl::ei_mobius_transform(x, 1.0, t);
    EXPECT_LT(std::abs(r.tail), 1.0) << x;
    EXPECT_EQ(r.value(), r.truncated + r.tail);
  }
}

TEST(AvgSigmaP, IsTheSEqualsTwoTransform) {
  const auto& t = table();
  for (double x : {10.0, 100.0, 1e4})
    EXPECT_EQ(pgl::avg_sigma_p(x, t), pgl::ei_mobius_transform(x, 2.0, t).value());
  // Leading term dominates at x = 100.
  const double lead = pgl::ei_real(std::log(1e4));
  EXPECT_LT(rel(pgl::avg_sigma_p(100.0, t), lead), 0.2);
  EXPECT_LE(rel(pgl::avg_sigma_p(1e4, t), pgl::exact_sum(t, pgl::ExactFn::sigma_p, 1e4)), 0.02);
}

TEST(AvgTheta, Examples) {
  const auto& t = table();
  EXPECT_DOUBLE_EQ(pgl::avg_theta(4.0, t), 2.0);
  EXPECT_LT(rel(pgl::avg_theta(1e4, t), pgl::exact_sum(t, pgl::ExactFn::theta, 1e4)), 0.01);
  for (double x : {1e4, 1e5, 1e6})
    EXPECT_LT(rel(pgl::avg_theta(x, t), pgl::exact_sum(t, pgl::ExactFn::theta, x)), 0.01);
}

TEST(AvgHp, HalfOfScaledTheta) {
  const auto& t = table();
  for (double x : {3.0, 50.0, 1e3}) {
    const double twice = pgl::mobius_transform([](double u) { return u; }, x,
                                               {MoebiusWeight::unweighted, 2.0}, t);
    EXPECT_EQ(pgl::avg_Hp(x, t), 0.5 * twice);
  }
}
