#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "pgl/arithmetic.hpp"
#include "pgl/explicit_formulas.hpp"
#include "pgl/gamma_series.hpp"

using pgl::ExactFn;
using pgl::ExplicitSpec;
using pgl::FrakZMode;

namespace {

const pgl::ArithTable& table() {
  static const pgl::ArithTable t(1'000'000);
  return t;
}

const pgl::ZeroTable& zeros() { return pgl::bundled_zeros(); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> half_integers(double lo, double hi, int n) {
  std::vector<double> xs;
  for (int k = 0; k < n; ++k) xs.push_back(std::floor(lo + (hi - lo) * k / (n - 1)) + 0.5);
  return xs;
}

double rms(ExactFn fn, int r, int i, std::size_t nz, const std::vector<double>& xs) {
  double sq = 0.0;
  for (double x : xs) {
    const double d = pgl::explicit_eval(pgl::spec_for(r, i, zeros(), nz), x).value -
                     pgl::exact_sum(table(), fn, x);
    sq += d * d;
  }
  return std::sqrt(sq / xs.size());
}

}  // namespace

TEST(ExplicitEval, PsiNearSieve) {
  const auto r = pgl::explicit_eval(pgl::spec_for(0, 1, zeros(), 100), 100.5);
  EXPECT_LT(std::abs(r.value - pgl::exact_sum(table(), ExactFn::psi, 100.5)), 2.0);
  EXPECT_EQ(r.zeros_used, 100u);
  EXPECT_GT(r.trunc_bound, 0.0);
}

TEST(ExplicitEval, ZeroFreePsiIsSmooth) {
  ExplicitSpec spec = pgl::spec_for(0, 1, zeros());
  spec.parts = pgl::terms::all & ~pgl::terms::zeros;
  spec.zeros = nullptr;
  for (double x : {2.5, 10.0, 1000.0}) {
    const double want = x - std::log(2 * std::numbers::pi) - 0.5 * std::log(1 - 1 / (x * x));
    EXPECT_NEAR(pgl::explicit_eval(spec, x).value, want, 1e-12 * x);
  }
}

TEST(ExplicitEval, EpsilonDominatedByMainTerm) {
  const double x = 50.5;
  EXPECT_DOUBLE_EQ(0.5 * x * x, 1275.125);
  const double v = pgl::explicit_eval(pgl::spec_for(1, 1, zeros(), 100), x).value;
  EXPECT_LT(rel(v, pgl::exact_sum(table(), ExactFn::epsilon, x)), 0.01);
}

TEST(ExplicitEval, MainTermIsolation) {
  for (double x : {2.5, 10.0, 1e3, 1e6}) {
    ExplicitSpec spec = pgl::spec_for(0, 0, zeros());
    spec.parts = pgl::terms::main;
    EXPECT_EQ(pgl::explicit_eval(spec, x).value, pgl::closed_average(pgl::AverageFn::J, x));
  }
}

TEST(ExplicitEval, PartsAddUp) {
  for (auto [r, i] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}}) {
    const double x = 321.5;
    double sum = 0.0;
    for (unsigned part : {pgl::terms::main, pgl::terms::zeros, pgl::terms::constant,
                          pgl::terms::trivial}) {
      ExplicitSpec spec = pgl::spec_for(r, i, zeros());
      spec.parts = part;
      sum += pgl::explicit_eval(spec, x).value;
    }
    const double all = pgl::explicit_eval(pgl::spec_for(r, i, zeros()), x).value;
    EXPECT_NEAR(sum, all, 1e-9 * std::abs(all)) << r << "," << i;
  }
}

TEST(ExplicitEval, UnpairedSumIsReal) {
  for (auto [r, i] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}})
    for (double x : {10.5, 1000.5, 1e5 + 0.5}) {
      const auto spec = pgl::spec_for(r, i, zeros());
      const auto s = pgl::zero_sum_unpaired(spec, x);
      EXPECT_LT(std::abs(s.imag()), 1e-9 * std::abs(s.real()));
      ExplicitSpec only = spec;
      only.parts = pgl::terms::zeros;
      EXPECT_NEAR(-s.real(), pgl::explicit_eval(only, x).value, 1e-9 * std::abs(s.real()));
    }
}

TEST(ExplicitEval, MoreZerosLowerRms) {
  const auto xs = half_integers(10, 1000, 50);
  EXPECT_LT(rms(ExactFn::psi, 0, 1, 100, xs), rms(ExactFn::psi, 0, 1, 10, xs));
  EXPECT_LT(rms(ExactFn::J, 0, 0, 100, xs), rms(ExactFn::J, 0, 0, 10, xs));
}

TEST(ExplicitEval, ApproachesJumpMidpoints) {
  auto gap = [&](std::size_t nz) {
    double sum = 0.0;
    int count = 0;
    for (std::uint64_t x = 3; x <= 200; ++x) {
      if (!table().prime_power(x)) continue;
      const double xd = static_cast<double>(x);
      const double mid = pgl::exact_sum(table(), ExactFn::psi, xd) - 0.5 * table().von_mangoldt(x);
      sum += std::abs(pgl::explicit_eval(pgl::spec_for(0, 1, zeros(), nz), xd).value - mid);
      ++count;
    }
    return sum / count;
  };
  EXPECT_LT(gap(100), gap(10));
}

TEST(ExplicitEval, HierarchyMainTermsDominate) {
  double prev_k = 1.0, prev_e = 1.0;
  for (double x : {1e3 + 0.5, 1e4 + 0.5, 1e5 + 0.5}) {
    const double mk = pgl::ei_real(2 * std::log(x));
    const double me = 0.5 * x * x;
    const double rk = rel(pgl::explicit_eval(pgl::spec_for(1, 0, zeros(), 100), x).value, mk);
    const double re = rel(pgl::explicit_eval(pgl::spec_for(1, 1, zeros(), 100), x).value, me);
    EXPECT_LT(rk, prev_k);
    EXPECT_LT(re, prev_e);
    prev_k = rk;
    prev_e = re;
  }
  EXPECT_LT(prev_k, 0.01);
  EXPECT_LT(prev_e, 0.01);
}

TEST(ExplicitEval, Errors) {
  EXPECT_THROW(pgl::explicit_eval(pgl::spec_for(0, 1, zeros()), 2.0), pgl::Error);
  EXPECT_THROW(pgl::explicit_eval(pgl::spec_for(2, 0, zeros()), 10.0), pgl::Error);
  ExplicitSpec none = pgl::spec_for(0, 1, zeros());
  none.zeros = nullptr;
  EXPECT_THROW(pgl::explicit_eval(none, 10.0), pgl::Error);
}

TEST(ExplicitPi, NearPrimeCounts) {
  EXPECT_EQ(std::lround(pgl::explicit_pi(100.5, zeros(), table())), 25);
  EXPECT_EQ(std::lround(pgl::explicit_pi(20.5, zeros(), table())), 8);
  EXPECT_NEAR(pgl::explicit_pi(1000.5, zeros(), table()), 168.0, 1.0);
}

TEST(ExplicitPi, RoundsToSieveOnMostPoints) {
  int hits = 0, total = 0;
  for (double x = 2.5; x <= 1000.0; x += 1.0) {
    hits += std::lround(pgl::explicit_pi(x, zeros(), table())) ==
            static_cast<long>(pgl::exact_sum(table(), ExactFn::pi, x));
    ++total;
  }
  EXPECT_GE(hits, 0.9 * total) << hits << "/" << total;
}

TEST(ExplicitTheta, TracksSieve) {
  for (double x : {100.5, 1000.5})
    EXPECT_LT(std::abs(pgl::explicit_theta(x, zeros(), table()) -
                       pgl::exact_sum(table(), ExactFn::theta, x)),
              5.0);
  EXPECT_NEAR(pgl::explicit_Ch(100.5, zeros()),
              pgl::explicit_eval(pgl::spec_for(0, 1, zeros()), 100.5).value - std::log(100.0),
              1e-12);
}

TEST(FrakZ, ModesAgree) {
  for (double s : {2.0, 2.5, 3.0}) {
    const auto d = pgl::frak_z(s, FrakZMode::dirichlet, table());
    const auto p = pgl::frak_z(s, FrakZMode::product, table());
    EXPECT_NEAR(d.value, p.value, 1e-8) << s;
    EXPECT_NEAR(d.log_value, std::log(d.value), 1e-15);
    EXPECT_GT(d.tail_bound, 0.0);
  }
}

TEST(FrakZ, KnownValues) {
  EXPECT_NEAR(pgl::frak_z(2.0, FrakZMode::product, table()).log_value, -0.4522474200, 1e-6);
  EXPECT_LT(std::abs(pgl::frak_z(50.0, FrakZMode::product, table()).value - 1.0),
            std::ldexp(2.0, -49));
}

TEST(FrakZ, Errors) {
  EXPECT_THROW(pgl::frak_z(1.0, FrakZMode::product, table()), pgl::Error);
  const pgl::ArithTable small(1000);
  EXPECT_THROW(pgl::frak_z(2.0, FrakZMode::dirichlet, small), pgl::Error);
}

TEST(AppendixEstimates, WithinFivePercentAtLargeX) {
  for (double x : {1e4, 1e5}) {
    EXPECT_LT(rel(pgl::estimate_sigma_p(x, zeros(), table(), 100),
                  pgl::exact_sum(table(), ExactFn::sigma_p, x)),
              0.05);
    EXPECT_LT(rel(pgl::estimate_H(x, zeros(), table(), 100),
                  pgl::exact_sum(table(), ExactFn::H_p, x)),
              0.05);
  }
}

TEST(AppendixEstimates, ZeroContributionShrinksRelatively) {
  auto ratio = [&](double x) {
    const double with = pgl::estimate_H(x, zeros(), table(), 100);
    const double main = pgl::estimate_H(x, zeros(), table(), 0);
    return std::abs(with - main) / std::abs(main);
  };
  EXPECT_LT(ratio(1e5), ratio(1e3));
}

TEST(AppendixEstimates, TableFreeOverloadAgrees) {
  EXPECT_NEAR(pgl::estimate_H(1e4, zeros()), pgl::estimate_H(1e4, zeros(), table()), 1e-6);
}
