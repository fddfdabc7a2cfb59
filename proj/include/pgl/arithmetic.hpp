#pragma once

// Sieve-backed arithmetic functions and the exact summatory functions that
// every average and explicit formula is compared against.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgl/error.hpp"
#include "pgl/specfun.hpp"
#include "pgl/summation.hpp"

namespace pgl {

/// n = p^k with p prime, k >= 1.
struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Smallest-prime-factor table for 2..limit. Immutable once built.
class ArithTable {
 public:
  explicit ArithTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2 || limit > kMaxSieveLimit)
      throw Error(ErrorKind::capacity,
                  "sieve limit must lie in [2, 1e8], got " + std::to_string(limit));
    // Linear sieve: every composite is struck exactly once by its spf.
    spf_.assign(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = i;
        primes_.push_back(i);
      }
      for (std::uint32_t p : primes_) {
        const std::uint64_t composite = std::uint64_t{p} * i;
        if (p > spf_[i] || composite > limit) break;
        spf_[composite] = p;
      }
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  std::uint32_t smallest_prime_factor(std::uint64_t n) const {
    check(n);
    return spf_[n];
  }

  bool is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    check(n);
    return spf_[n] == n;
  }

  std::optional<PrimePower> prime_power(std::uint64_t n) const {
    if (n < 2) return std::nullopt;
    check(n);
    const std::uint32_t p = spf_[n];
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, k};
  }

  int mobius(std::uint64_t n) const {
    if (n == 0) throw Error(ErrorKind::domain, "mobius(0) is undefined");
    check(n);
    int sign = 1;
    while (n > 1) {
      const std::uint32_t p = spf_[n];
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    return sign;
  }

  double von_mangoldt(std::uint64_t n) const {
    const auto pp = prime_power(n);
    return pp ? std::log(static_cast<double>(pp->prime)) : 0.0;
  }

 private:
  void check(std::uint64_t n) const {
    if (n > limit_)
      throw Error(ErrorKind::range, std::to_string(n) + " exceeds sieve limit " +
                                        std::to_string(limit_));
  }

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

inline ArithTable build_table(std::uint64_t limit) { return ArithTable(limit); }

// ---------------------------------------------------------------------------
// Trial-division helpers for arguments that do not warrant a sieve.

inline std::optional<PrimePower> prime_power_of(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

inline int mobius_of(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::domain, "mobius(0) is undefined");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// ---------------------------------------------------------------------------
// Exact summatory functions.

enum class ExactFn {
  pi,
  J,
  psi,
  theta,
  Ch,
  K,
  epsilon,
  sigma_p,
  H_p,
  omega,
  d_Lambda,
  LambdaLogSum,
};

inline constexpr std::array<ExactFn, 12> kAllExactFns = {
    ExactFn::pi,      ExactFn::J,       ExactFn::psi,   ExactFn::theta,
    ExactFn::Ch,      ExactFn::K,       ExactFn::epsilon, ExactFn::sigma_p,
    ExactFn::H_p,     ExactFn::omega,   ExactFn::d_Lambda, ExactFn::LambdaLogSum};

constexpr std::string_view to_string(ExactFn fn) {
  switch (fn) {
    case ExactFn::pi: return "pi";
    case ExactFn::J: return "J";
    case ExactFn::psi: return "psi";
    case ExactFn::theta: return "theta";
    case ExactFn::Ch: return "Ch";
    case ExactFn::K: return "K";
    case ExactFn::epsilon: return "epsilon";
    case ExactFn::sigma_p: return "sigma_p";
    case ExactFn::H_p: return "H_p";
    case ExactFn::omega: return "omega";
    case ExactFn::d_Lambda: return "d_Lambda";
    case ExactFn::LambdaLogSum: return "LambdaLogSum";
  }
  return "?";
}

inline ExactFn parse_exact_fn(std::string_view name) {
  for (ExactFn fn : kAllExactFns)
    if (to_string(fn) == name) return fn;
  throw Error(ErrorKind::domain, "unknown function '" + std::string(name) + "'");
}

/// 1 iff d divides x (integer remainder).
constexpr int chi(std::uint64_t d, std::uint64_t x) {
  return d != 0 && x % d == 0 ? 1 : 0;
}

/// floor(cos^2(pi x / d)) in double precision. Agrees with chi() while
/// pi * x / d stays small enough for cos to resolve the offset from an
/// integer multiple of pi.
inline int chi_float(std::uint64_t d, std::uint64_t x) {
  const double c = std::cos(std::numbers::pi *
                            (static_cast<double>(x) / static_cast<double>(d)));
  return static_cast<int>(std::floor(c * c));
}

/// sigma_r(x) = sum_{d | x} d^r, with each d^r produced as Gamma(1, -r log d)
/// and rounded. Throws capacity when d^r leaves the exactly representable
/// integer range of double or the sum overflows 64 bits.
inline std::uint64_t divisor_power_sum(std::uint64_t x, int r) {
  if (x < 1) throw Error(ErrorKind::domain, "divisor_power_sum: x must be >= 1");
  if (r < 0 || r > 8)
    throw Error(ErrorKind::domain, "divisor_power_sum: r must lie in [0, 8]");
  constexpr double kExactLimit = 9007199254740992.0;  // 2^53
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= x; ++d) {
    if (!chi(d, x)) continue;
    const double g = upper_gamma(1, -r * std::log(static_cast<double>(d)));
    if (g >= kExactLimit)
      throw Error(ErrorKind::capacity, "divisor_power_sum: d^r exceeds 2^53");
    const auto term = static_cast<std::uint64_t>(std::llround(g));
    if (__builtin_add_overflow(total, term, &total))
      throw Error(ErrorKind::capacity, "divisor_power_sum: sum overflows 64 bits");
  }
  return total;
}

namespace detail {

template <class LambdaOf>
double sum_over_divisors(std::uint64_t x, LambdaOf&& weight) {
  CompensatedSum<double> sum;
  for (std::uint64_t d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    sum.add(weight(d));
    if (d * d != x) sum.add(weight(x / d));
  }
  return sum.value();
}

}  // namespace detail

/// sum_{n | x} Lambda(n) / log n, the prime-power divisors weighted by 1/k.
inline double omega_exact(const ArithTable& table, std::uint64_t x) {
  if (x < 1) throw Error(ErrorKind::domain, "omega_exact: x must be >= 1");
  return detail::sum_over_divisors(x, [&](std::uint64_t n) {
    const auto pp = table.prime_power(n);
    return pp ? 1.0 / pp->exponent : 0.0;
  });
}

inline double omega_exact(std::uint64_t x) {
  if (x < 1) throw Error(ErrorKind::domain, "omega_exact: x must be >= 1");
  return detail::sum_over_divisors(x, [](std::uint64_t n) {
    const auto pp = prime_power_of(n);
    return pp ? 1.0 / pp->exponent : 0.0;
  });
}

/// sum_{n | x} Lambda(n); equals log x.
inline double d_lambda_exact(const ArithTable& table, std::uint64_t x) {
  if (x < 1) throw Error(ErrorKind::domain, "d_lambda_exact: x must be >= 1");
  return detail::sum_over_divisors(
      x, [&](std::uint64_t n) { return table.von_mangoldt(n); });
}

inline double d_lambda_exact(std::uint64_t x) {
  if (x < 1) throw Error(ErrorKind::domain, "d_lambda_exact: x must be >= 1");
  return detail::sum_over_divisors(x, [](std::uint64_t n) {
    const auto pp = prime_power_of(n);
    return pp ? std::log(static_cast<double>(pp->prime)) : 0.0;
  });
}

/// Lambda(x) rebuilt as -sum_{m=1}^{x} chi(m, x) mu(m) log m.
inline double lambda_from_moebius(const ArithTable& table, std::uint64_t x) {
  if (x < 2) throw Error(ErrorKind::domain, "lambda_from_moebius: x must be >= 2");
  CompensatedSum<double> sum;
  for (std::uint64_t m = 2; m <= x; ++m) {
    if (!chi(m, x)) continue;
    const int mu = table.mobius(m);
    if (mu != 0) sum.add(-mu * std::log(static_cast<double>(m)));
  }
  return sum.value();
}

namespace detail {

/// Accumulates every cumulative summatory function in one pass over n.
class SummatoryAccumulator {
 public:
  void push(std::uint64_t n, const std::optional<PrimePower>& pp) {
    if (!pp) return;
    const double nd = static_cast<double>(n);
    const double logp = std::log(static_cast<double>(pp->prime));
    const double lambda = logp;
    const double k = pp->exponent;
    J_.add(1.0 / k);
    psi_.add(lambda);
    K_.add(nd / k);
    epsilon_.add(nd * lambda);
    lambda_log_.add(lambda * std::log(nd));
    if (pp->exponent == 1) {
      ++pi_;
      sigma_p_ += n;
      theta_.add(logp);
      H_p_.add(nd * logp);
    }
  }

  double value(ExactFn fn, std::uint64_t floor_x) const {
    switch (fn) {
      case ExactFn::pi: return static_cast<double>(pi_);
      case ExactFn::J: return J_.value();
      case ExactFn::psi: return psi_.value();
      case ExactFn::theta: return theta_.value();
      case ExactFn::Ch:
        return psi_.value() - std::log(static_cast<double>(floor_x));
      case ExactFn::K: return K_.value();
      case ExactFn::epsilon: return epsilon_.value();
      case ExactFn::sigma_p: return static_cast<double>(sigma_p_);
      case ExactFn::H_p: return H_p_.value();
      case ExactFn::LambdaLogSum: return lambda_log_.value();
      case ExactFn::omega:
      case ExactFn::d_Lambda: break;
    }
    throw Error(ErrorKind::domain, "not a cumulative summatory function");
  }

 private:
  std::uint64_t pi_ = 0;
  std::uint64_t sigma_p_ = 0;
  CompensatedSum<double> J_, psi_, theta_, K_, epsilon_, H_p_, lambda_log_;
};

inline std::uint64_t checked_floor(const ArithTable& table, double x) {
  if (!(x >= 2.0))
    throw Error(ErrorKind::domain, "exact_sum: x must be >= 2");
  if (x >= static_cast<double>(table.limit()) + 1.0)
    throw Error(ErrorKind::range, "exact_sum: x exceeds sieve limit " +
                                      std::to_string(table.limit()));
  return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace detail

/// Exact value of a summatory function at real x >= 2. Sums run over
/// n <= floor(x), so the value at an integer includes the term at x.
inline double exact_sum(const ArithTable& table, ExactFn fn, double x) {
  const std::uint64_t n_max = detail::checked_floor(table, x);
  if (fn == ExactFn::omega) return omega_exact(table, n_max);
  if (fn == ExactFn::d_Lambda) return d_lambda_exact(table, n_max);
  detail::SummatoryAccumulator acc;
  for (std::uint64_t n = 2; n <= n_max; ++n) acc.push(n, table.prime_power(n));
  return acc.value(fn, n_max);
}

/// exact_sum at every point of an ascending grid in one sweep.
inline std::vector<double> exact_sum_grid(const ArithTable& table, ExactFn fn,
                                          std::span<const double> xs) {
  if (!std::is_sorted(xs.begin(), xs.end()))
    throw Error(ErrorKind::precondition, "exact_sum_grid: grid must be ascending");
  std::vector<double> out;
  out.reserve(xs.size());
  detail::SummatoryAccumulator acc;
  std::uint64_t next = 2;
  for (double x : xs) {
    const std::uint64_t n_max = detail::checked_floor(table, x);
    if (fn == ExactFn::omega) {
      out.push_back(omega_exact(table, n_max));
      continue;
    }
    if (fn == ExactFn::d_Lambda) {
      out.push_back(d_lambda_exact(table, n_max));
      continue;
    }
    for (; next <= n_max; ++next) acc.push(next, table.prime_power(next));
    out.push_back(acc.value(fn, n_max));
  }
  return out;
}

}  // namespace pgl
