#ifndef DYNR_BERNOULLI_HPP
#define DYNR_BERNOULLI_HPP

#include <vector>

#include "dynr/rational.hpp"

namespace dynr {

/// Largest index held by the exact Bernoulli table.
inline constexpr int BERNOULLI_MAX = 24;

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2 convention) by the
/// Akiyama-Tanigawa recurrence. n must not exceed BERNOULLI_MAX.
std::vector<Rational> bernoulli_numbers(int n);

/// B_k from the shared table. Thread-safe lazy initialization.
const Rational& bernoulli(int k);

} // namespace dynr

#endif
