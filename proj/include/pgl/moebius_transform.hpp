#pragma once

// Moebius inversion over the rescalings x -> x^{s/m}, and the refined
// averages pi_1, sigma_p, theta and H_p built from it.

#include <cmath>
#include <cstdint>
#include <string>

#include "pgl/arithmetic.hpp"
#include "pgl/error.hpp"
#include "pgl/specfun.hpp"
#include "pgl/summation.hpp"

namespace pgl {

enum class MoebiusWeight {
  weighted_by_m,  // mu(m) / m
  unweighted,     // mu(m)
};

struct MoebiusKind {
  MoebiusWeight weight = MoebiusWeight::weighted_by_m;
  double exponent_scale = 1.0;  // s: the argument becomes x^{s/m}
};

/// Largest M with x^{s/M} >= 2, or 1 when x^s < 2.
inline int moebius_depth(double x, double s) {
  if (!(x > 1.0) || !(s > 0.0))
    throw Error(ErrorKind::domain, "moebius_depth: requires x > 1 and s > 0");
  const double log2_xs = s * std::log2(x);
  int m = static_cast<int>(std::floor(log2_xs));
  // Correct for rounding at exact powers of two.
  while (m > 1 && std::pow(x, s / m) < 2.0) --m;
  while (std::pow(x, s / (m + 1)) >= 2.0) ++m;
  return m < 1 ? 1 : m;
}

/// sum_{m=1}^{M} coeff(m) f(x^{s/m}) in ascending m, M = moebius_depth(x, s).
/// The table must cover mu(m) for m <= M.
template <class F>
double mobius_transform(F&& f, double x, const MoebiusKind& kind,
                        const ArithTable& table) {
  const int depth = moebius_depth(x, kind.exponent_scale);
  if (static_cast<std::uint64_t>(depth) > table.limit())
    throw Error(ErrorKind::range, "mobius_transform: table too small for depth " +
                                      std::to_string(depth));
  CompensatedSum<double> sum;
  for (int m = 1; m <= depth; ++m) {
    const int mu = table.mobius(static_cast<std::uint64_t>(m));
    if (mu == 0) continue;
    const double coeff =
        kind.weight == MoebiusWeight::weighted_by_m ? static_cast<double>(mu) / m : mu;
    sum.add(coeff * f(std::pow(x, kind.exponent_scale / m)));
  }
  return sum.value();
}

/// sum_{m > M} mu(m)/m * Ei(L/m) in closed form.
///
/// With L/m < log 2 beyond the cut, Ei(L/m) = gamma + ln L - ln m +
/// sum_k (L/m)^k / (k k!); the three resulting Dirichlet sums are completed
/// from sum mu(m)/m = 0, sum mu(m) ln m / m = -1 and
/// sum mu(m)/m^{k+1} = 1/zeta(k+1).
inline double ei_moebius_tail(double L, int depth, const ArithTable& table) {
  if (!(L > 0.0)) throw Error(ErrorKind::domain, "ei_moebius_tail: requires L > 0");
  if (static_cast<std::uint64_t>(depth) > table.limit())
    throw Error(ErrorKind::range, "ei_moebius_tail: table too small");
  constexpr int kMaxPower = 120;
  // partial[j] = sum_{m<=M} mu(m) / m^j, j = 1..kMaxPower+1
  std::vector<CompensatedSum<double>> partial(kMaxPower + 2);
  CompensatedSum<double> partial_log;
  for (int m = 1; m <= depth; ++m) {
    const int mu = table.mobius(static_cast<std::uint64_t>(m));
    if (mu == 0) continue;
    double inv_pow = 1.0;
    for (int j = 1; j <= kMaxPower + 1; ++j) {
      inv_pow /= m;
      partial[j].add(mu * inv_pow);
    }
    partial_log.add(mu * std::log(static_cast<double>(m)) / m);
  }
  const double s0 = partial[1].value();
  CompensatedSum<double> tail;
  tail.add(-(detail::kEulerGamma + std::log(L)) * s0);
  tail.add(1.0 + partial_log.value());
  double power_over_fact = 1.0;  // L^k / k!
  const double cut = depth + 1.0;
  for (int k = 1; k <= kMaxPower; ++k) {
    power_over_fact *= L / k;
    const double remainder = 1.0 / riemann_zeta_gt1(k + 1.0) - partial[k + 1].value();
    const double term = power_over_fact / k * remainder;
    tail.add(term);
    // |remainder| <= zeta tail from M+1, roughly cut^{-k} * cut / k.
    const double bound = power_over_fact / k * std::pow(cut, -static_cast<double>(k)) * cut;
    if (k > L && bound < 1e-17 * std::abs(tail.value())) break;
  }
  return tail.value();
}

/// Transform of an Ei(log .) integrand with the analytic tail over the
/// rescalings below 2 added back.
struct EiTransform {
  double truncated = 0.0;  // terms with x^{s/m} >= 2
  double tail = 0.0;       // remaining m, in closed form
  int depth = 0;

  double value() const { return truncated + tail; }
};

inline EiTransform ei_mobius_transform(double x, double s, const ArithTable& table) {
  EiTransform out;
  out.depth = moebius_depth(x, s);
  out.truncated = mobius_transform([](double u) { return ei_real(std::log(u)); }, x,
                                   {MoebiusWeight::weighted_by_m, s}, table);
  out.tail = ei_moebius_tail(s * std::log(x), out.depth, table);
  return out;
}

/// Refined average number of primes, sum_m mu(m)/m Ei(log x^{1/m}). The sum
/// is carried to m = infinity (the Riemann R function).
inline double avg_pi1(double x, const ArithTable& table) {
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "avg_pi1: requires x > 2");
  return ei_mobius_transform(x, 1.0, table).value();
}

/// Refined average sum of primes, sum_m mu(m)/m Ei(log x^{2/m}).
inline double avg_sigma_p(double x, const ArithTable& table) {
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "avg_sigma_p: requires x > 2");
  return ei_mobius_transform(x, 2.0, table).value();
}

/// Refined average first Chebyshev function, sum_{m<=M} mu(m) x^{1/m}.
inline double avg_theta(double x, const ArithTable& table) {
  if (!(x > 1.0)) throw Error(ErrorKind::domain, "avg_theta: requires x > 1");
  return mobius_transform([](double u) { return u; }, x,
                          {MoebiusWeight::unweighted, 1.0}, table);
}

/// Refined average prime entropy, 1/2 sum_{m<=M} mu(m) x^{2/m}.
inline double avg_Hp(double x, const ArithTable& table) {
  if (!(x > 1.0)) throw Error(ErrorKind::domain, "avg_Hp: requires x > 1");
  return 0.5 * mobius_transform([](double u) { return u; }, x,
                                {MoebiusWeight::unweighted, 2.0}, table);
}

}  // namespace pgl
