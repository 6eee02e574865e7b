#ifndef DYNR_RANDOM_HPP
#define DYNR_RANDOM_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "dynr/jet.hpp"

namespace dynr {

/// Seeded stream with a fixed bit-to-double mapping, so identical seeds give
/// identical draws independent of the standard library's distributions.
class RandomStream {
public:
  explicit RandomStream(uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1].
  double uniform() { return 2.0 * unit() - 1.0; }
  /// Both parts uniform in [-1, 1].
  cplx complex_uniform() {
    double re = uniform();
    double im = uniform();
    return {re, im};
  }

  Eigen::VectorXcd vector_uniform(int n, bool complex_parts) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_parts ? complex_uniform() : cplx(uniform(), 0.0);
    return v;
  }

private:
  std::mt19937_64 eng_;
};

} // namespace dynr

#endif
