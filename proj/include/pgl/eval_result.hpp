#pragma once

#include <cstddef>

#include "pgl/error.hpp"

namespace pgl {

/// Truncation policy for the infinite incomplete-gamma series.
struct SeriesControl {
  int max_terms = 200;
  double abs_tol = 1e-12;

  void validate() const {
    if (max_terms < 10)
      throw Error(ErrorKind::domain, "SeriesControl.max_terms must be >= 10");
    if (!(abs_tol > 0.0))
      throw Error(ErrorKind::domain, "SeriesControl.abs_tol must be > 0");
  }
};

/// A value together with how it was obtained.
struct EvalResult {
  double value = 0.0;
  int terms_used = 0;
  /// Estimated magnitude of everything that was left out.
  double trunc_bound = 0.0;
  /// False when the series hit max_terms before reaching abs_tol.
  bool converged = true;
  /// Number of zeta-zero pairs that entered the value (explicit formulas).
  std::size_t zeros_used = 0;
};

}  // namespace pgl
