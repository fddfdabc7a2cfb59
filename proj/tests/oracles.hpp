#pragma once

// Reference implementations that share no code with the library: adaptive
// quadrature, the Gram series, and brute-force number theory by trial
// division.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

inline constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

template <class F>
long double integrate(F f, long double a, long double b) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<long double, 61>::integrate(f, a, b, 15, 1e-15L);
}

/// Ei(y) for y > 0 as gamma + ln y + int_0^y (e^t - 1)/t dt.
inline double ei(double y) {
  const long double I = integrate(
      [](long double t) { return t == 0 ? 1.0L : std::expm1(t) / t; }, 0.0L, y);
  return static_cast<double>(kEulerGamma + std::log(static_cast<long double>(y)) + I);
}

/// Ei(z) off the negative real axis: gamma + log z + int_0^1 (e^{zu} - 1)/u du.
inline std::complex<double> ei(std::complex<double> z) {
  using cl = std::complex<long double>;
  const cl zl(z.real(), z.imag());
  auto part = [&](bool imag) {
    return integrate(
        [&](long double u) {
          if (u == 0) return imag ? zl.imag() : zl.real();
          const cl v = (std::exp(zl * u) - 1.0L) / u;
          return imag ? v.imag() : v.real();
        },
        0.0L, 1.0L);
  };
  const cl value = kEulerGamma + std::log(zl) + cl(part(false), part(true));
  return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

/// P(n, z) = z^n / (n-1)! * int_0^1 u^{n-1} e^{-z u} du, any real z.
inline double reg_lower_gamma(int n, double z) {
  const long double I = integrate(
      [&](long double u) { return std::pow(u, n - 1) * std::exp(-z * u); }, 0.0L, 1.0L);
  return static_cast<double>(std::pow(static_cast<long double>(z), n) * I /
                             std::tgamma(static_cast<long double>(n)));
}

/// Riemann R(x) = 1 + sum_k (ln x)^k / (k k! zeta(k+1)), in 50-digit arithmetic.
inline double gram_R(double x) {
  using big = boost::multiprecision::cpp_bin_float_50;
  const big L = log(big(x));
  big sum = 1, power = 1;
  for (int k = 1; k < 400; ++k) {
    power *= L / k;
    const big term = power / (k * big(std::riemann_zeta(k + 1.0)));
    sum += term;
    if (k > L && term < big(1e-25) * sum) break;
  }
  return static_cast<double>(sum);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime p when n = p^k, otherwise 0.
inline std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

inline int exponent_of(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline double von_mangoldt(std::uint64_t n) {
  const std::uint64_t p = prime_power_base(n);
  return p ? std::log(static_cast<double>(p)) : 0.0;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= x; ++d)
    if (x % d == 0) out.push_back(d);
  return out;
}

}  // namespace oracle
