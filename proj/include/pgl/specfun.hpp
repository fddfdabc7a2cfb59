#pragma once

// Special functions used by the averages and explicit formulas: the
// regularized lower incomplete gamma at integer order (continued to negative
// arguments), the upper incomplete gamma at orders 0 and 1, the real and
// complex exponential integral, and the fixed constants C and D.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>

#include "pgl/error.hpp"
#include "pgl/summation.hpp"

namespace pgl {

struct Constants {
  double euler_gamma;       // gamma_0
  double stieltjes_gamma1;  // gamma_1
  double glaisher_log;      // ln A
  double C;                 // 12 ln A - 1
  double D;
};

namespace detail {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kStieltjesGamma1 = -0.072815845483676724861;
inline constexpr double kGlaisherLog = 0.24875447703378426255;

}  // namespace detail

/// D written exactly as it appears in the J(x;0,2) explicit formula,
/// including the (ln pi + ln 2)^2 - (ln 2pi)^2 pair that cancels to zero.
inline double constant_D_printed() {
  constexpr double pi = std::numbers::pi;
  const double lp2 = std::log(pi) + std::log(2.0);
  const double l2pi = std::log(2.0 * pi);
  return pi * pi / 12.0 + lp2 * lp2 - l2pi * l2pi -
         detail::kEulerGamma * detail::kEulerGamma -
         2.0 * detail::kStieltjesGamma1;
}

/// D with the cancelling logarithm pair removed.
inline double constant_D_reduced() {
  constexpr double pi = std::numbers::pi;
  return pi * pi / 12.0 - detail::kEulerGamma * detail::kEulerGamma -
         2.0 * detail::kStieltjesGamma1;
}

inline Constants constants() {
  return Constants{detail::kEulerGamma, detail::kStieltjesGamma1,
                   detail::kGlaisherLog, 12.0 * detail::kGlaisherLog - 1.0,
                   constant_D_printed()};
}

// ---------------------------------------------------------------------------
// Regularized lower incomplete gamma P(n, z), integer n >= 1, real z.

/// |z| beyond which P(n, z) is refused.
inline constexpr double kRegGammaEnvelope = 50.0;

/// P(n, z) = gamma(n, z) / Gamma(n) for integer n >= 1 and real z of either
/// sign. Uses the finite head form 1 - e^{-z} sum_{k<n} z^k/k! when n <= |z|
/// and the tail form e^{-z} sum_{k>=n} z^k/k! when n > |z|.
///
/// Real may be double, long double, or any type with ADL-visible exp/abs
/// and std::numeric_limits support (e.g. a quad-precision float).
template <class Real>
  requires(!std::is_integral_v<Real>)
Real reg_lower_gamma_int(int n, Real z) {
  using std::abs;
  using std::exp;
  if (n < 1)
    throw Error(ErrorKind::domain,
                "reg_lower_gamma_int: order must be >= 1, got " +
                    std::to_string(n));
  if (!(abs(z) < std::numeric_limits<Real>::max()))
    throw Error(ErrorKind::domain, "reg_lower_gamma_int: argument not finite");
  if (!(abs(z) <= Real(kRegGammaEnvelope)))
    throw Error(ErrorKind::accuracy_loss,
                "reg_lower_gamma_int: |z| exceeds accuracy envelope of 50");
  if (z == Real(0)) return Real(0);

  const Real eps = std::numeric_limits<Real>::epsilon();
  if (Real(n) > abs(z)) {
    Real term = exp(-z);
    for (int k = 1; k <= n; ++k) term *= z / Real(k);
    CompensatedSum<Real> sum;
    // Terms shrink by |z|/(k+1) < 1 each step.
    for (int k = n; k < n + 4000; ++k) {
      sum.add(term);
      term *= z / Real(k + 1);
      if (abs(term) <= eps * abs(sum.value())) break;
    }
    return sum.value();
  }

  CompensatedSum<Real> head;
  Real term = 1;
  for (int k = 0; k < n; ++k) {
    head.add(term);
    term *= z / Real(k + 1);
  }
  return Real(1) - exp(-z) * head.value();
}

inline double reg_lower_gamma_int(int n, double z) {
  return reg_lower_gamma_int<double>(n, z);
}

// ---------------------------------------------------------------------------
// Exponential integrals.

namespace detail {

inline constexpr double kEiSeriesLimitReal = 40.0;
inline constexpr double kEiAsymptoticRadius = 35.0;
inline constexpr int kEiAsymptoticMaxTerms = 30;
// Series is used below the asymptotic radius only while the cancellation
// factor e^{|z| - Re z} stays under 1e4.
inline constexpr double kEiSeriesCancellation = 9.2103403719761836;  // ln 1e4

/// E1(t) for real t > 0.
inline double e1_real(double t) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (t <= 1.0) {
    // E1(t) = -gamma - ln t - sum_{k>=1} (-t)^k / (k k!)
    CompensatedSum<double> sum(-kEulerGamma - std::log(t));
    double fact_term = 1.0;
    for (int k = 1; k < 200; ++k) {
      fact_term *= -t / k;
      const double term = fact_term / k;
      sum.add(-term);
      if (std::abs(term) < eps * std::abs(sum.value())) break;
    }
    return sum.value();
  }
  // Modified Lentz evaluation of the continued fraction
  // E1(t) = e^{-t} / (t + 1 - 1/(t + 3 - 4/(t + 5 - ...))).
  constexpr double tiny = 1e-300;
  double b = t + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h * std::exp(-t);
  }
  throw Error(ErrorKind::accuracy_loss, "e1: continued fraction did not converge");
}

}  // namespace detail

/// Ei(y) for real y != 0 (principal value for y > 0).
inline double ei_real(double y) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (y == 0.0) throw Error(ErrorKind::pole, "ei_real: Ei has a pole at 0");
  if (std::isnan(y)) throw Error(ErrorKind::domain, "ei_real: NaN argument");
  if (y < 0.0) return -detail::e1_real(-y);

  if (y <= detail::kEiSeriesLimitReal) {
    // gamma + ln y + sum_{k>=1} y^k / (k k!); all terms positive.
    CompensatedSum<double> sum(detail::kEulerGamma + std::log(y));
    double power_over_fact = 1.0;
    for (int k = 1; k < 500; ++k) {
      power_over_fact *= y / k;
      const double term = power_over_fact / k;
      sum.add(term);
      if (term < eps * std::abs(sum.value())) break;
    }
    return sum.value();
  }
  // e^y / y * sum k!/y^k, stopped at the smallest term.
  CompensatedSum<double> sum(1.0);
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * k / y;
    if (next > term) break;
    term = next;
    sum.add(term);
    if (term < eps * sum.value()) break;
  }
  return std::exp(y) / y * sum.value();
}

enum class EiMethod { series, continued_fraction, asymptotic };

/// Complex Ei together with the route taken and an error estimate.
struct EiEvaluation {
  std::complex<double> value;
  /// Absolute error estimate (truncation or convergence).
  double error_bound = 0.0;
  EiMethod method = EiMethod::series;
  int terms = 0;
};

/// Ei(z) on the principal branch, z off the cut (-inf, 0].
///
/// |z| > 35 uses the asymptotic expansion e^z/z sum k!/z^k truncated at
/// min(floor|z|, 30) terms. Below that the power series is used when it does
/// not cancel badly; otherwise Ei(z) = -E1(-z) + i pi sgn(Im z) with E1 from
/// its continued fraction.
inline EiEvaluation ei_complex_eval(std::complex<double> z) {
  using cd = std::complex<double>;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double pi = std::numbers::pi;
  if (std::isnan(z.real()) || std::isnan(z.imag()))
    throw Error(ErrorKind::domain, "ei_complex: NaN argument");
  if (z.imag() == 0.0 && z.real() == 0.0)
    throw Error(ErrorKind::pole, "ei_complex: Ei has a pole at 0");
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw Error(ErrorKind::branch, "ei_complex: argument on the branch cut");

  const double r = std::abs(z);
  const double stokes =
      z.imag() > 0.0 ? pi : (z.imag() < 0.0 ? -pi : 0.0);

  EiEvaluation out;
  if (r > detail::kEiAsymptoticRadius) {
    const int kmax =
        std::min(static_cast<int>(std::floor(r)), detail::kEiAsymptoticMaxTerms);
    CompensatedSum<cd> sum;
    cd term = 1.0;
    for (int k = 0; k < kmax; ++k) {
      sum.add(term);
      term *= static_cast<double>(k + 1) / z;
    }
    const cd prefactor = std::exp(z) / z;
    if (!std::isfinite(prefactor.real()) || !std::isfinite(prefactor.imag()))
      throw Error(ErrorKind::accuracy_loss, "ei_complex: e^z overflows");
    out.value = prefactor * sum.value() + cd(0.0, stokes);
    out.error_bound = std::abs(prefactor) * std::abs(term);
    out.method = EiMethod::asymptotic;
    out.terms = kmax;
    return out;
  }

  if (r <= 2.0 || r - z.real() <= detail::kEiSeriesCancellation) {
    CompensatedSum<cd> sum;
    sum.add(cd(detail::kEulerGamma, 0.0) + std::log(z));
    cd power_over_fact = 1.0;
    double largest = 0.0;
    int k = 1;
    for (; k < 1000; ++k) {
      power_over_fact *= z / static_cast<double>(k);
      const cd term = power_over_fact / static_cast<double>(k);
      sum.add(term);
      largest = std::max(largest, std::abs(term));
      if (std::abs(term) < eps * std::abs(sum.value()) && k > r) break;
    }
    out.value = sum.value();
    out.error_bound = 4.0 * eps * largest;
    out.method = EiMethod::series;
    out.terms = k;
    return out;
  }

  // Modified Lentz on E1(w), w = -z, away from the negative real axis of w.
  const cd w = -z;
  const double tiny = 1e-300;
  cd b = w + 1.0;
  cd c = 1.0 / tiny;
  cd d = 1.0 / b;
  cd h = d;
  for (int i = 1; i < 20000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const cd del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 2.0 * eps) {
      const cd e1 = h * std::exp(-w);
      out.value = -e1 + cd(0.0, stokes);
      out.error_bound = 4.0 * eps * std::abs(e1) * std::sqrt(static_cast<double>(i));
      out.method = EiMethod::continued_fraction;
      out.terms = i;
      return out;
    }
  }
  throw Error(ErrorKind::accuracy_loss,
              "ei_complex: continued fraction did not converge");
}

inline std::complex<double> ei_complex(std::complex<double> z) {
  return ei_complex_eval(z).value;
}

// ---------------------------------------------------------------------------
// Upper incomplete gamma at orders 0 and 1.

/// Gamma(a, z) for a in {0, 1} and real z. Gamma(0, -y) with y > 0 is
/// reported as the real principal value -Ei(y); the -i pi branch term is
/// dropped.
inline double upper_gamma(int a, double z) {
  if (a == 1) return std::exp(-z);
  if (a != 0)
    throw Error(ErrorKind::domain, "upper_gamma: order must be 0 or 1");
  if (z == 0.0) throw Error(ErrorKind::pole, "upper_gamma: Gamma(0, z) has a pole at 0");
  if (z > 0.0) return detail::e1_real(z);
  return -ei_real(-z);
}

/// Complex counterpart. Off the real axis Gamma(0, z) = E1(z) =
/// -Ei(-z) - i pi sgn(Im z); on the real axis it matches the real overload.
inline std::complex<double> upper_gamma(int a, std::complex<double> z) {
  if (a == 1) return std::exp(-z);
  if (a != 0)
    throw Error(ErrorKind::domain, "upper_gamma: order must be 0 or 1");
  if (z.imag() == 0.0) return {upper_gamma(0, z.real()), 0.0};
  const double sign = z.imag() > 0.0 ? 1.0 : -1.0;
  return -ei_complex(-z) - std::complex<double>(0.0, sign * std::numbers::pi);
}

// ---------------------------------------------------------------------------

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
inline double riemann_zeta_gt1(double s) {
  if (!(s > 1.0))
    throw Error(ErrorKind::divergence, "riemann_zeta_gt1: requires s > 1");
  constexpr int N = 12;
  // B_{2j} / (2j)!
  constexpr double bern_over_fact[] = {
      1.0 / 12.0,         -1.0 / 720.0,          1.0 / 30240.0,
      -1.0 / 1209600.0,   1.0 / 47900160.0,      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0};
  CompensatedSum<double> sum;
  for (int n = N - 1; n >= 1; --n) sum.add(std::pow(static_cast<double>(n), -s));
  const double Nd = N;
  sum.add(std::pow(Nd, 1.0 - s) / (s - 1.0));
  sum.add(0.5 * std::pow(Nd, -s));
  // term_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  double rising = s;
  double power = std::pow(Nd, -s - 1.0);
  for (int j = 0; j < 7; ++j) {
    sum.add(bern_over_fact[j] * rising * power);
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    power /= Nd * Nd;
  }
  return sum.value();
}

}  // namespace pgl
