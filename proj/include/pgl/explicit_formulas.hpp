#pragma once

// Truncated zeta-zero evaluations of the explicit-formula hierarchy
// J(x; r, i), the prime-only generating function frak_z(s), and the zero-
// corrected estimates for the sum and entropy of primes.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "pgl/arithmetic.hpp"
#include "pgl/error.hpp"
#include "pgl/eval_result.hpp"
#include "pgl/moebius_transform.hpp"
#include "pgl/specfun.hpp"
#include "pgl/summation.hpp"
#include "pgl/zeta_zeros.hpp"

namespace pgl {

/// Which parts of an explicit formula to evaluate.
namespace terms {
inline constexpr unsigned main = 1u;      // pole of zeta(s - r)
inline constexpr unsigned zeros = 2u;     // nontrivial zeros
inline constexpr unsigned constant = 4u;  // s = 0 and related constants
inline constexpr unsigned trivial = 8u;   // trivial-zero series
inline constexpr unsigned all = main | zeros | constant | trivial;
}  // namespace terms

/// One member J(x; r, i) of the hierarchy:
///   (0,0) J,  (0,1) psi,  (0,2) sum Lambda(n) log n,  (1,0) K,  (1,1) epsilon.
struct ExplicitSpec {
  int r = 0;
  int i = 0;
  const ZeroTable* zeros = nullptr;
  /// Use at most this many ordinates from the table.
  std::size_t num_zeros = std::numeric_limits<std::size_t>::max();
  /// Trivial-zero series stop once a term falls below this.
  double trivial_tol = 1e-12;
  unsigned parts = terms::all;

  void validate() const {
    const bool known = (r == 0 && (i == 0 || i == 1 || i == 2)) ||
                       (r == 1 && (i == 0 || i == 1));
    if (!known)
      throw Error(ErrorKind::domain, "explicit formula (" + std::to_string(r) + "," +
                                         std::to_string(i) + ") is not instantiated");
    if (!(trivial_tol > 0.0))
      throw Error(ErrorKind::domain, "trivial_tol must be > 0");
    if ((parts & terms::zeros) && zeros == nullptr)
      throw Error(ErrorKind::precondition, "explicit formula needs a zero table");
  }

  std::size_t zero_count() const {
    if (!(parts & terms::zeros) || zeros == nullptr) return 0;
    return std::min(num_zeros, zeros->size());
  }
};

namespace detail {

using cd = std::complex<double>;

/// Per-zero summand f(rho) of J(x; r, i); the formula subtracts
/// sum over all rho of f(rho).
inline cd zero_term(int r, int i, cd rho, double L) {
  switch (r * 10 + i) {
    case 0: return ei_complex(rho * L);
    case 1: return std::exp(rho * L) / rho;
    case 2: return std::exp(rho * L) * (rho * L - 1.0) / (rho * rho);
    case 10: return ei_complex((1.0 + rho) * L);
    case 11: return std::exp((1.0 + rho) * L) / (1.0 + rho);
  }
  throw Error(ErrorKind::domain, "unknown explicit formula");
}

inline double main_term(int r, int i, double x, double L) {
  switch (r * 10 + i) {
    case 0: return ei_real(L);
    case 1: return x;
    case 2: return x * (L - 1.0);
    case 10: return ei_real(2.0 * L);
    case 11: return 0.5 * x * x;
  }
  throw Error(ErrorKind::domain, "unknown explicit formula");
}

inline double constant_term(int r, int i) {
  const Constants k = constants();
  switch (r * 10 + i) {
    case 0: return -std::numbers::ln2;
    case 1: return -std::log(2.0 * std::numbers::pi);
    case 2: return k.D;
    case 10: return -k.C - 0.5;
    case 11: return -k.C;
  }
  throw Error(ErrorKind::domain, "unknown explicit formula");
}

/// Trivial-zero contribution, with the number of series terms used.
inline std::pair<double, int> trivial_term(int r, int i, double x, double L, double tol) {
  CompensatedSum<double> sum;
  int used = 0;
  switch (r * 10 + i) {
    case 0:
      for (int k = 1; k < 10000; ++k, ++used) {
        const double t = -ei_real(-2.0 * k * L);
        sum.add(t);
        if (std::abs(t) < tol) break;
      }
      return {sum.value(), used + 1};
    case 1:
      return {-0.5 * std::log1p(-1.0 / (x * x)), 1};
    case 2:
      for (int k = 1; k < 10000; ++k, ++used) {
        const double two_k = 2.0 * k;
        const double t = (1.0 + two_k * L) / (two_k * two_k * std::pow(x, two_k));
        sum.add(t);
        if (std::abs(t) < tol) break;
      }
      return {sum.value(), used + 1};
    case 10:
      // k = 0 contributes -Ei(log x); k >= 1 are the trivial zeros proper.
      sum.add(-ei_real(L));
      for (int k = 1; k < 10000; ++k, ++used) {
        const double t = -ei_real((1.0 - 2.0 * k) * L);
        sum.add(t);
        if (std::abs(t) < tol) break;
      }
      return {sum.value(), used + 2};
    case 11:
      return {std::atan(1.0 / x), 1};
  }
  throw Error(ErrorKind::domain, "unknown explicit formula");
}

/// Evaluation without the x > 2 guard; x > 1 is enough for every formula.
inline EvalResult explicit_value(const ExplicitSpec& spec, double x) {
  const double L = std::log(x);
  EvalResult out;
  CompensatedSum<double> sum;
  if (spec.parts & terms::main) sum.add(main_term(spec.r, spec.i, x, L));
  if (spec.parts & terms::constant) sum.add(constant_term(spec.r, spec.i));
  if (spec.parts & terms::trivial) {
    const auto [value, used] = trivial_term(spec.r, spec.i, x, L, spec.trivial_tol);
    sum.add(value);
    out.terms_used = used;
  }
  const std::size_t nz = spec.zero_count();
  if (nz > 0) {
    const auto ords = spec.zeros->ordinates();
    CompensatedSum<double> zero_sum;
    double last = 0.0;
    for (std::size_t k = 0; k < nz; ++k) {
      const cd rho(0.5, ords[k]);
      last = 2.0 * zero_term(spec.r, spec.i, rho, L).real();
      zero_sum.add(last);
    }
    sum.add(-zero_sum.value());
    out.trunc_bound = std::abs(last);
  }
  out.zeros_used = nz;
  out.value = sum.value();
  return out;
}

}  // namespace detail

/// J(x; r, i) from its explicit formula with the first spec.num_zeros zeros,
/// each paired with its conjugate. x > 2; non-integer x avoids the jump
/// points, where a truncated formula tends to the midpoint of the jump.
inline EvalResult explicit_eval(const ExplicitSpec& spec, double x) {
  spec.validate();
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "explicit_eval: requires x > 2");
  return detail::explicit_value(spec, x);
}

/// The zero sum accumulated over rho and conj(rho) separately. Its imaginary
/// part measures how far the pairing is from exact.
inline std::complex<double> zero_sum_unpaired(const ExplicitSpec& spec, double x) {
  spec.validate();
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "zero_sum_unpaired: requires x > 2");
  const double L = std::log(x);
  CompensatedSum<std::complex<double>> sum;
  const auto ords = spec.zeros->ordinates();
  for (std::size_t k = 0; k < spec.zero_count(); ++k) {
    const std::complex<double> rho(0.5, ords[k]);
    sum.add(detail::zero_term(spec.r, spec.i, rho, L));
    sum.add(detail::zero_term(spec.r, spec.i, std::conj(rho), L));
  }
  return sum.value();
}

inline ExplicitSpec spec_for(int r, int i, const ZeroTable& zeros,
                             std::size_t num_zeros =
                                 std::numeric_limits<std::size_t>::max()) {
  ExplicitSpec spec;
  spec.r = r;
  spec.i = i;
  spec.zeros = &zeros;
  spec.num_zeros = num_zeros;
  return spec;
}

/// pi(x) as sum_m mu(m)/m J(x^{1/m}) with J from its explicit formula,
/// over the rescalings with x^{1/m} >= 2.
inline double explicit_pi(double x, const ZeroTable& zeros, const ArithTable& table,
                          std::size_t num_zeros = std::numeric_limits<std::size_t>::max()) {
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "explicit_pi: requires x > 2");
  const ExplicitSpec spec = spec_for(0, 0, zeros, num_zeros);
  spec.validate();
  return mobius_transform(
      [&](double u) { return detail::explicit_value(spec, u).value; }, x,
      {MoebiusWeight::weighted_by_m, 1.0}, table);
}

/// theta(x) as sum_m mu(m) psi(x^{1/m}) with psi from its explicit formula.
inline double explicit_theta(double x, const ZeroTable& zeros, const ArithTable& table,
                             std::size_t num_zeros =
                                 std::numeric_limits<std::size_t>::max()) {
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "explicit_theta: requires x > 2");
  const ExplicitSpec spec = spec_for(0, 1, zeros, num_zeros);
  spec.validate();
  return mobius_transform(
      [&](double u) { return detail::explicit_value(spec, u).value; }, x,
      {MoebiusWeight::unweighted, 1.0}, table);
}

/// Ch(x) = psi(x) - log floor(x) with psi from its explicit formula.
inline double explicit_Ch(double x, const ZeroTable& zeros,
                          std::size_t num_zeros = std::numeric_limits<std::size_t>::max()) {
  return explicit_eval(spec_for(0, 1, zeros, num_zeros), x).value -
         std::log(std::floor(x));
}

// ---------------------------------------------------------------------------

enum class FrakZMode { dirichlet, product };

struct FrakZResult {
  double value = 1.0;      // frak_z(s)
  double log_value = 0.0;  // log frak_z(s)
  /// Bound on the neglected terms n > table.limit() in log frak_z.
  double tail_bound = 0.0;
};

inline constexpr std::uint64_t kFrakZMinLimit = 1'000'000;

/// frak_z(s) = prod_p exp(-p^{-s}), s > 1.
///
/// dirichlet: exp of sum_{n<=N} mu(n) Lambda(n) / (log n * n^s), walking
/// every n and taking mu and Lambda from the table.
/// product:   exp(-sum_{p<=N} p^{-s}) over the sieved primes.
/// The printed Dirichlet series carries the opposite overall sign from the
/// product; the sign here follows the product so both modes agree.
inline FrakZResult frak_z(double s, FrakZMode mode, const ArithTable& table) {
  if (!(s > 1.0)) throw Error(ErrorKind::divergence, "frak_z: requires s > 1");
  if (table.limit() < kFrakZMinLimit)
    throw Error(ErrorKind::range, "frak_z: sieve limit must be at least 1e6");
  const std::uint64_t N = table.limit();
  CompensatedSum<double> log_sum;
  if (mode == FrakZMode::dirichlet) {
    // Accumulate from the small tail end first.
    for (std::uint64_t n = N; n >= 2; --n) {
      const double lambda = table.von_mangoldt(n);
      if (lambda == 0.0) continue;
      const int mu = table.mobius(n);
      if (mu == 0) continue;
      const double nd = static_cast<double>(n);
      log_sum.add(mu * lambda / (std::log(nd) * std::pow(nd, s)));
    }
  } else {
    const auto primes = table.primes();
    for (auto it = primes.rbegin(); it != primes.rend(); ++it)
      log_sum.add(-std::pow(static_cast<double>(*it), -s));
  }
  FrakZResult out;
  out.log_value = log_sum.value();
  out.value = std::exp(out.log_value);
  const double Nd = static_cast<double>(N);
  out.tail_bound = std::pow(Nd, 1.0 - s) / ((s - 1.0) * std::log(Nd));
  return out;
}

// ---------------------------------------------------------------------------

/// sigma_p(x) ~ Ei(log theta_avg(x)^2) - sum_rho Ei(log x^{1+rho}), with
/// theta_avg the refined average first Chebyshev function. num_zeros = 0
/// leaves the main term alone.
inline double estimate_sigma_p(double x, const ZeroTable& zeros, const ArithTable& table,
                               std::size_t num_zeros =
                                   std::numeric_limits<std::size_t>::max()) {
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "estimate_sigma_p: requires x > 2");
  const double theta = avg_theta(x, table);
  const double L = std::log(x);
  CompensatedSum<double> zero_sum;
  const auto ords = zeros.ordinates();
  for (std::size_t k = 0; k < std::min(num_zeros, zeros.size()); ++k)
    zero_sum.add(2.0 * ei_complex((1.0 + std::complex<double>(0.5, ords[k])) * L).real());
  return ei_real(2.0 * std::log(theta)) - zero_sum.value();
}

/// H(x) ~ theta_avg(x)^2 / 2 - sum_rho x^{1+rho} / (1 + rho).
inline double estimate_H(double x, const ZeroTable& zeros, const ArithTable& table,
                         std::size_t num_zeros = std::numeric_limits<std::size_t>::max()) {
  if (!(x > 2.0)) throw Error(ErrorKind::domain, "estimate_H: requires x > 2");
  const double theta = avg_theta(x, table);
  const double L = std::log(x);
  CompensatedSum<double> zero_sum;
  const auto ords = zeros.ordinates();
  for (std::size_t k = 0; k < std::min(num_zeros, zeros.size()); ++k) {
    const std::complex<double> s1 = 1.0 + std::complex<double>(0.5, ords[k]);
    zero_sum.add(2.0 * (std::exp(s1 * L) / s1).real());
  }
  return 0.5 * theta * theta - zero_sum.value();
}

/// estimate_H without a caller-supplied table; mu(m) is only needed for
/// m <= log2 x.
inline double estimate_H(double x, const ZeroTable& zeros,
                         std::size_t num_zeros = std::numeric_limits<std::size_t>::max()) {
  const ArithTable small(std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(std::log2(std::max(x, 2.0))) + 2));
  return estimate_H(x, zeros, small, num_zeros);
}

}  // namespace pgl
