// Prints pi(x) next to its refined average R(x) and the explicit formula
// with 10 and 100 zeros, for x = 10^k.

#include <cmath>
#include <cstdio>

#include "pgl/pgl.hpp"

int main() {
  const pgl::ArithTable table(1'000'000);
  const auto& zeros = pgl::bundled_zeros();
  std::printf("%10s %8s %12s %12s %12s\n", "x", "pi(x)", "R(x)", "10 zeros", "100 zeros");
  for (int k = 1; k <= 6; ++k) {
    const double x = std::pow(10.0, k) + 0.5;
    std::printf("%10.1f %8.0f %12.3f %12.3f %12.3f\n", x,
                pgl::exact_sum(table, pgl::ExactFn::pi, x), pgl::avg_pi1(x, table),
                pgl::explicit_pi(x, zeros, table, 10), pgl::explicit_pi(x, zeros, table, 100));
  }
}
