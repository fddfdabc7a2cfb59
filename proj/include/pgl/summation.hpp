#pragma once

#include <cmath>
#include <complex>

namespace pgl {

/// Neumaier's variant of Kahan compensated summation. Works for any type
/// with the usual arithmetic operators and an ADL-visible abs().
template <class T>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(T init) : sum_(init) {}

  void add(T term) {
    using std::abs;
    T t = sum_ + term;
    if (abs(sum_) >= abs(term))
      comp_ += (sum_ - t) + term;
    else
      comp_ += (term - t) + sum_;
    sum_ = t;
  }

  CompensatedSum& operator+=(T term) {
    add(term);
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

/// Complex sums compensate the real and imaginary parts independently.
template <class T>
class CompensatedSum<std::complex<T>> {
 public:
  CompensatedSum() = default;

  void add(std::complex<T> term) {
    re_.add(term.real());
    im_.add(term.imag());
  }

  CompensatedSum& operator+=(std::complex<T> term) {
    add(term);
    return *this;
  }

  std::complex<T> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<T> re_;
  CompensatedSum<T> im_;
};

}  // namespace pgl
